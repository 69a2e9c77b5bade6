#include "weylwalk/weyl.hpp"

#include <algorithm>
#include <numeric>

#include "weylwalk/errors.hpp"

namespace weylwalk {

namespace {

std::vector<std::vector<unsigned>> partitions_of(unsigned n) {
    // descending parts, generated recursively with a max-part bound
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned rem, unsigned max_part) -> void {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (unsigned part = std::min(rem, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, rem - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

mpz_class factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// centralizer order of a cycle type in S_m: prod_j j^{a_j} a_j!
mpz_class sym_centralizer(const std::vector<unsigned>& parts) {
    mpz_class r = 1;
    unsigned run_part = 0, run_len = 0;
    auto flush = [&] {
        if (run_len == 0) return;
        mpz_class jp;
        mpz_ui_pow_ui(jp.get_mpz_t(), run_part, run_len);
        r *= jp * factorial(run_len);
    };
    for (unsigned part : parts) {
        if (part == run_part) {
            ++run_len;
        } else {
            flush();
            run_part = part;
            run_len = 1;
        }
    }
    flush();
    return r;
}

// centralizer order of a signed cycle type: prod_j (2j)^{a_j} a_j! over both
// the positive and the negative parts
mpz_class hyperoct_centralizer(const std::vector<unsigned>& pos, const std::vector<unsigned>& neg) {
    mpz_class r = 1;
    for (const auto* parts : {&pos, &neg}) {
        unsigned run_part = 0, run_len = 0;
        auto flush = [&] {
            if (run_len == 0) return;
            mpz_class jp;
            mpz_ui_pow_ui(jp.get_mpz_t(), 2 * run_part, run_len);
            r *= jp * factorial(run_len);
        };
        for (unsigned part : *parts) {
            if (part == run_part) {
                ++run_len;
            } else {
                flush();
                run_part = part;
                run_len = 1;
            }
        }
        flush();
    }
    return r;
}

} // namespace

WeylClass WeylClass::type_a(std::vector<unsigned> parts) {
    WeylClass c;
    c.family = Family::A;
    c.parts = std::move(parts);
    std::sort(c.parts.rbegin(), c.parts.rend());
    check_invariant(!c.parts.empty() && c.parts.back() >= 1, "WeylClass: empty or zero part");
    return c;
}

WeylClass WeylClass::type_c(std::vector<unsigned> pos, std::vector<unsigned> neg) {
    WeylClass c;
    c.family = Family::C;
    c.pos = std::move(pos);
    c.neg = std::move(neg);
    std::sort(c.pos.rbegin(), c.pos.rend());
    std::sort(c.neg.rbegin(), c.neg.rend());
    for (const auto* v : {&c.pos, &c.neg})
        for (unsigned part : *v) check_invariant(part >= 1, "WeylClass: zero part");
    check_invariant(!c.pos.empty() || !c.neg.empty(), "WeylClass: empty bipartition");
    return c;
}

unsigned WeylClass::weight() const {
    auto sum = [](const std::vector<unsigned>& v) {
        return std::accumulate(v.begin(), v.end(), 0u);
    };
    return family == Family::A ? sum(parts) : sum(pos) + sum(neg);
}

std::string WeylClass::to_string() const {
    auto list = [](const std::vector<unsigned>& v) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v[i]);
        }
        return s + ")";
    };
    if (family == Family::A) return list(parts);
    return "[pos=" + list(pos) + " neg=" + list(neg) + "]";
}

std::size_t ClassTable::index_of(const WeylClass& c) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] == c) return i;
    throw config_error("class " + c.to_string() + " is not in the table for " + group.name());
}

mpz_class ClassTable::class_size(std::size_t i) const {
    mpq_class s = fractions[i] * weyl_order;
    check_invariant(s.get_den() == 1, "class_size: fraction times |W| is not integral");
    return s.get_num();
}

ClassTable enumerate_classes(const GroupSpec& group) {
    require(group.rank <= 64, "enumerate_classes: rank capped at 64");
    if (group.family == Family::A) require(group.rank >= 2, "enumerate_classes: type A needs m >= 2");
    else require(group.rank >= 1, "enumerate_classes: type C needs g >= 1");

    ClassTable table;
    table.group = group;
    if (group.family == Family::A) {
        const unsigned m = group.rank;
        table.weyl_order = factorial(m);
        for (auto& parts : partitions_of(m)) {
            table.classes.push_back(WeylClass::type_a(parts));
            table.fractions.emplace_back(mpq_class(1) / mpq_class(sym_centralizer(parts)));
        }
    } else {
        const unsigned g = group.rank;
        table.weyl_order = factorial(g);
        mpz_class two_g;
        mpz_ui_pow_ui(two_g.get_mpz_t(), 2, g);
        table.weyl_order *= two_g;
        for (unsigned k = 0; k <= g; ++k) {
            for (auto& pos : partitions_of(k)) {
                for (auto& neg : partitions_of(g - k)) {
                    table.classes.push_back(WeylClass::type_c(pos, neg));
                    table.fractions.emplace_back(mpq_class(1) /
                                                 mpq_class(hyperoct_centralizer(pos, neg)));
                }
            }
        }
    }
    for (auto& f : table.fractions) f.canonicalize();
    mpq_class total = 0;
    for (const auto& f : table.fractions) total += f;
    check_invariant(total == 1, "enumerate_classes: class fractions do not sum to 1");
    return table;
}

Certificate jordan_certificate(const ClassTable& table, const std::set<WeylClass>& observed) {
    Certificate cert;
    for (const auto& c : observed) {
        (void)table.index_of(c); // input error if not in the table
    }
    for (const auto& c : table.classes) {
        if (observed.count(c)) cert.observed.push_back(c);
        else cert.missing.push_back(c);
    }
    cert.verdict = cert.missing.empty() ? Certificate::Verdict::ProvenFullWeyl
                                        : Certificate::Verdict::Inconclusive;
    return cert;
}

std::vector<BruteForceElement> brute_force_group(const GroupSpec& group) {
    std::vector<BruteForceElement> out;
    if (group.family == Family::A) {
        require(group.rank <= 8, "brute_force_group: type A capped at m <= 8");
        const unsigned m = group.rank;
        std::vector<int> perm(m);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<unsigned> parts;
            std::vector<bool> seen(m, false);
            for (unsigned i = 0; i < m; ++i) {
                if (seen[i]) continue;
                unsigned len = 0;
                for (unsigned j = i; !seen[j]; j = static_cast<unsigned>(perm[j])) {
                    seen[j] = true;
                    ++len;
                }
                parts.push_back(len);
            }
            BruteForceElement el;
            el.images.resize(m);
            for (unsigned i = 0; i < m; ++i) el.images[i] = perm[i] + 1;
            el.cls = WeylClass::type_a(std::move(parts));
            out.push_back(std::move(el));
        } while (std::next_permutation(perm.begin(), perm.end()));
    } else {
        require(group.rank <= 5, "brute_force_group: type C capped at g <= 5");
        const unsigned g = group.rank;
        std::vector<int> perm(g);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            for (unsigned signs = 0; signs < (1u << g); ++signs) {
                std::vector<unsigned> pos, neg;
                std::vector<bool> seen(g, false);
                for (unsigned i = 0; i < g; ++i) {
                    if (seen[i]) continue;
                    unsigned len = 0;
                    int sign = 1;
                    for (unsigned j = i; !seen[j]; j = static_cast<unsigned>(perm[j])) {
                        seen[j] = true;
                        ++len;
                        if (signs & (1u << j)) sign = -sign;
                    }
                    (sign > 0 ? pos : neg).push_back(len);
                }
                BruteForceElement el;
                el.images.resize(g);
                for (unsigned i = 0; i < g; ++i) {
                    const int img = perm[i] + 1;
                    el.images[i] = (signs & (1u << i)) ? -img : img;
                }
                el.cls = WeylClass::type_c(std::move(pos), std::move(neg));
                out.push_back(std::move(el));
            }
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
}

mpz_class partition_count(unsigned n) {
    // Euler DP
    std::vector<mpz_class> p(n + 1, 0);
    p[0] = 1;
    for (unsigned part = 1; part <= n; ++part)
        for (unsigned s = part; s <= n; ++s) p[s] += p[s - part];
    return p[n];
}

std::string verdict_name(Certificate::Verdict v) {
    switch (v) {
        case Certificate::Verdict::ProvenFullWeyl: return "proven_full_weyl";
        case Certificate::Verdict::Inconclusive: return "inconclusive";
        case Certificate::Verdict::Degenerate: return "degenerate";
    }
    return "?";
}

} // namespace weylwalk
