#include "weylwalk/frobenius.hpp"

#include <algorithm>

#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/factor.hpp"

namespace weylwalk {

std::string status_name(FrobStatus s) {
    switch (s) {
        case FrobStatus::Good: return "good";
        case FrobStatus::NotSquarefree: return "not_squarefree";
        case FrobStatus::WrongCharacteristic: return "wrong_char";
    }
    return "?";
}

ThetaResult theta_type_a(const ModPoly& P) {
    check_invariant(P.is_monic(), "theta_type_a: P must be monic");
    if (!squarefree_mod(P)) return {FrobStatus::NotSquarefree, std::nullopt};
    std::vector<unsigned> parts = ddf_degree_pattern(P);
    WeylClass cls = WeylClass::type_a(std::move(parts));
    check_invariant(cls.weight() == static_cast<unsigned>(P.degree()),
                    "theta_type_a: parts do not sum to the degree");
    return {FrobStatus::Good, std::move(cls)};
}

ThetaResult theta_type_c(const ModPoly& P, RngStream& rng) {
    const std::uint64_t p = P.modulus();
    if (p == 2) return {FrobStatus::WrongCharacteristic, std::nullopt};
    check_invariant(P.is_monic(), "theta_type_c: P must be monic");
    check_invariant(P.is_palindromic(), "theta_type_c: P must be palindromic");
    check_invariant(P.degree() % 2 == 0, "theta_type_c: degree must be even");
    if (!squarefree_mod(P)) return {FrobStatus::NotSquarefree, std::nullopt};

    // squarefree palindromic over odd characteristic has no roots at +-1
    // (a root there would force the derivative to vanish too)
    check_invariant(P(1) != 0 && P(p - 1) != 0,
                    "theta_type_c: squarefree palindromic polynomial with root at +-1");

    const Factorization fac = factor_mod(P, rng);
    std::vector<ModPoly> todo;
    for (const auto& [f, mult] : fac.factors()) {
        check_invariant(mult == 1, "theta_type_c: repeated factor in squarefree input");
        todo.push_back(f);
    }
    std::vector<unsigned> pos, neg;
    std::vector<bool> used(todo.size(), false);
    for (std::size_t i = 0; i < todo.size(); ++i) {
        if (used[i]) continue;
        used[i] = true;
        const ModPoly rec = reciprocal(todo[i]); // P(0) = +-1 so constant terms are units
        if (rec == todo[i]) {
            check_invariant(todo[i].degree() % 2 == 0,
                            "theta_type_c: odd-degree self-reciprocal factor");
            neg.push_back(static_cast<unsigned>(todo[i].degree() / 2));
            continue;
        }
        bool paired = false;
        for (std::size_t j = i + 1; j < todo.size(); ++j) {
            if (!used[j] && todo[j] == rec) {
                used[j] = true;
                pos.push_back(static_cast<unsigned>(todo[i].degree()));
                paired = true;
                break;
            }
        }
        check_invariant(paired, "theta_type_c: factor has no reciprocal partner");
    }
    WeylClass cls = WeylClass::type_c(std::move(pos), std::move(neg));
    check_invariant(cls.weight() == static_cast<unsigned>(P.degree() / 2),
                    "theta_type_c: signed parts do not sum to g");
    return {FrobStatus::Good, std::move(cls)};
}

FrobeniusObservation classify_poly(const ModPoly& charpoly, const GroupSpec& group,
                                   RngStream& rng) {
    ThetaResult r = group.family == Family::A ? theta_type_a(charpoly)
                                              : theta_type_c(charpoly, rng);
    return {charpoly.modulus(), r.status, std::move(r.cls)};
}

FrobeniusObservation classify(const IntMatrix& M, const GroupSpec& group, std::uint64_t p,
                              RngStream& rng) {
    check_invariant(M.dim() == group.dim(), "classify: matrix dimension does not match group");
    if (group.family == Family::C && p == 2)
        return {p, FrobStatus::WrongCharacteristic, std::nullopt};
    return classify_poly(charpoly_mod(M.reduce(p)), group, rng);
}

FrobeniusObservation classify_modular(const ModMatrix& M, const GroupSpec& group,
                                      RngStream& rng) {
    check_invariant(M.dim() == group.dim(),
                    "classify_modular: matrix dimension does not match group");
    if (group.family == Family::C && M.modulus() == 2)
        return {2, FrobStatus::WrongCharacteristic, std::nullopt};
    return classify_poly(charpoly_mod(M), group, rng);
}

} // namespace weylwalk
