#include "weylwalk/factor.hpp"

#include <algorithm>

#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"

namespace weylwalk {

namespace {

mpz_class pow_mpz(std::uint64_t base, unsigned exp) {
    mpz_class b(static_cast<unsigned long>(base)), r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

ModPoly random_below_degree(std::uint64_t p, long deg, RngStream& rng) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg));
    for (auto& v : c) v = rng.below(p);
    return ModPoly(p, std::move(c));
}

} // namespace

Factorization::Factorization(const ModPoly& input,
                             std::vector<std::pair<ModPoly, unsigned>> factors)
    : p_(input.modulus()), factors_(std::move(factors)) {
    ModPoly prod = ModPoly::one(p_);
    for (const auto& [f, mult] : factors_) {
        check_invariant(f.is_monic() && f.degree() >= 1, "Factorization: factor not monic");
        check_invariant(mult >= 1, "Factorization: zero multiplicity");
        check_invariant(is_irreducible(f), "Factorization: factor fails irreducibility re-check");
        for (unsigned k = 0; k < mult; ++k) prod = prod * f;
    }
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t j = i + 1; j < factors_.size(); ++j)
            check_invariant(!(factors_[i].first == factors_[j].first),
                            "Factorization: duplicate factor");
    check_invariant(prod == input.make_monic(), "Factorization: product does not match input");
}

std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& P) {
    check_invariant(P.degree() >= 1, "squarefree_decomposition: degree must be >= 1");
    const std::uint64_t p = P.modulus();
    std::vector<std::pair<ModPoly, unsigned>> out;

    ModPoly f = P.make_monic();
    ModPoly d = f.derivative();
    if (d.is_zero()) {
        // f = u(T^p); take the p-th root (coefficientwise over the prime field)
        std::vector<std::uint64_t> u;
        for (std::size_t i = 0; i * p <= static_cast<std::size_t>(f.degree()); ++i)
            u.push_back(f.coeff(i * p));
        for (auto& [g, m] : squarefree_decomposition(ModPoly(p, std::move(u))))
            out.emplace_back(g, m * static_cast<unsigned>(p));
        return out;
    }

    ModPoly c = gcd(f, d);
    ModPoly w = f / c;
    unsigned i = 1;
    while (w.degree() > 0) {
        ModPoly y = gcd(w, c);
        ModPoly z = w / y;
        if (z.degree() > 0) out.emplace_back(z, i);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (c.degree() > 0) {
        std::vector<std::uint64_t> u;
        for (std::size_t k = 0; k * p <= static_cast<std::size_t>(c.degree()); ++k)
            u.push_back(c.coeff(k * p));
        for (auto& [g, m] : squarefree_decomposition(ModPoly(p, std::move(u))))
            out.emplace_back(g, m * static_cast<unsigned>(p));
    }
    return out;
}

std::vector<std::pair<ModPoly, unsigned>> distinct_degree_split(const ModPoly& P) {
    const std::uint64_t p = P.modulus();
    ModPoly f = P.make_monic();
    check_invariant(squarefree_mod(f), "distinct_degree_split: input must be squarefree");
    std::vector<std::pair<ModPoly, unsigned>> out;
    ModPoly h = ModPoly::x(p) % f;
    unsigned d = 0;
    const mpz_class q(static_cast<unsigned long>(p));
    while (f.degree() >= 2 * static_cast<long>(d + 1)) {
        ++d;
        h = powmod(h, q, f); // h = T^{p^d} mod f
        ModPoly g = gcd(h - ModPoly::x(p), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

std::vector<unsigned> ddf_degree_pattern(const ModPoly& P) {
    std::vector<unsigned> parts;
    for (const auto& [g, d] : distinct_degree_split(P)) {
        check_invariant(g.degree() % d == 0, "ddf: stage degree not divisible by factor degree");
        for (long k = 0; k < g.degree() / d; ++k) parts.push_back(d);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

std::vector<ModPoly> equal_degree_split(const ModPoly& P, unsigned d, RngStream& rng) {
    const std::uint64_t p = P.modulus();
    std::vector<ModPoly> out;
    std::vector<ModPoly> stack{P.make_monic()};
    while (!stack.empty()) {
        ModPoly g = std::move(stack.back());
        stack.pop_back();
        if (g.degree() == static_cast<long>(d)) {
            out.push_back(std::move(g));
            continue;
        }
        check_invariant(g.degree() % d == 0, "equal_degree_split: degree not a multiple of d");
        ModPoly h = ModPoly::zero(p);
        for (;;) {
            ModPoly r = random_below_degree(p, g.degree(), rng);
            if (r.degree() < 1 && p > 2) {
                // constants never split in the odd case; degree >= 1 keeps the
                // success probability at the standard ~1/2
                if (r.is_zero()) continue;
            }
            ModPoly b(p);
            if (p == 2) {
                // additive trace over F_{2^d}: r + r^2 + r^4 + ... + r^{2^{d-1}}
                ModPoly t = r % g;
                b = t;
                for (unsigned k = 1; k < d; ++k) {
                    t = (t * t) % g;
                    b = b + t;
                }
            } else {
                const mpz_class e = (pow_mpz(p, d) - 1) / 2;
                b = powmod(r, e, g) - ModPoly::one(p);
            }
            h = gcd(b, g);
            if (h.degree() > 0 && h.degree() < g.degree()) break;
        }
        stack.push_back(g / h);
        stack.push_back(std::move(h));
    }
    std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(),
                                            b.coeffs().rbegin(), b.coeffs().rend());
    });
    return out;
}

Factorization factor_mod(const ModPoly& P, RngStream& rng) {
    check_invariant(P.degree() >= 1, "factor_mod: degree must be >= 1");
    std::vector<std::pair<ModPoly, unsigned>> factors;
    for (const auto& [sf, mult] : squarefree_decomposition(P)) {
        for (const auto& [prod, d] : distinct_degree_split(sf)) {
            for (auto& irred : equal_degree_split(prod, d, rng)) {
                factors.emplace_back(std::move(irred), mult);
            }
        }
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return std::lexicographical_compare(a.first.coeffs().rbegin(), a.first.coeffs().rend(),
                                            b.first.coeffs().rbegin(), b.first.coeffs().rend());
    });
    return Factorization(P, std::move(factors));
}

bool is_irreducible(const ModPoly& P) {
    if (P.degree() < 1) return false;
    if (P.degree() == 1) return true;
    const std::uint64_t p = P.modulus();
    const unsigned n = static_cast<unsigned>(P.degree());
    const ModPoly f = P.make_monic();
    const ModPoly x = ModPoly::x(p);
    if (!(powmod(x, pow_mpz(p, n), f) == x % f)) return false;
    unsigned m = n;
    for (unsigned t = 2; t * t <= m; ++t) {
        if (n % t != 0) continue;
        while (m % t == 0) m /= t;
        if (gcd(powmod(x, pow_mpz(p, n / t), f) - x, f).degree() != 0) return false;
    }
    if (m > 1) { // m is the largest prime divisor of n
        if (gcd(powmod(x, pow_mpz(p, n / m), f) - x, f).degree() != 0) return false;
    }
    return true;
}

} // namespace weylwalk
