#include "weylwalk/census.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/frobenius.hpp"
#include "weylwalk/parallel.hpp"

namespace weylwalk {

double CensusReport::frequency(std::size_t i) const {
    check_invariant(total > 0, "CensusReport: empty population");
    return static_cast<double>(class_counts[i]) / static_cast<double>(total);
}

double CensusReport::deviation(std::size_t i) const {
    return std::abs(frequency(i) - table.fractions[i].get_d());
}

double CensusReport::max_deviation() const {
    double m = 0;
    for (std::size_t i = 0; i < class_counts.size(); ++i) m = std::max(m, deviation(i));
    return m;
}

double CensusReport::rs_fraction() const {
    check_invariant(total > 0, "CensusReport: empty population");
    return static_cast<double>(rs) / static_cast<double>(total);
}

void enumerate_sl2(std::uint64_t q, const MatrixVisitor& visit) {
    require(is_probable_prime(q), "enumerate_sl2: q must be prime");
    require(q <= 512, "enumerate_sl2: q capped at 512");
    ModMatrix m(2, q);
    std::uint64_t index = 0;
    // a != 0: d = a^{-1} (1 + b c)
    for (std::uint64_t a = 1; a < q; ++a) {
        const std::uint64_t ainv = invmod(a, q);
        m.at(0, 0) = a;
        for (std::uint64_t b = 0; b < q; ++b) {
            m.at(0, 1) = b;
            for (std::uint64_t c = 0; c < q; ++c) {
                m.at(1, 0) = c;
                m.at(1, 1) = mulmod(ainv, addmod(1, mulmod(b, c, q), q), q);
                visit(index++, m);
            }
        }
    }
    // a = 0: need -bc = 1, so b != 0 and c = -b^{-1}; d free
    m.at(0, 0) = 0;
    for (std::uint64_t b = 1; b < q; ++b) {
        m.at(0, 1) = b;
        m.at(1, 0) = negmod(invmod(b, q), q);
        for (std::uint64_t d = 0; d < q; ++d) {
            m.at(1, 1) = d;
            visit(index++, m);
        }
    }
}

namespace {

// Gaussian elimination determinant on a scratch copy.
std::uint64_t det_of(const std::vector<std::uint64_t>& entries, unsigned m, std::uint64_t q,
                     std::vector<std::uint64_t>& scratch) {
    scratch = entries;
    auto e = [&](unsigned i, unsigned j) -> std::uint64_t& { return scratch[i * m + j]; };
    std::uint64_t d = 1;
    bool neg = false;
    for (unsigned k = 0; k < m; ++k) {
        unsigned piv = k;
        while (piv < m && e(piv, k) == 0) ++piv;
        if (piv == m) return 0;
        if (piv != k) {
            for (unsigned j = k; j < m; ++j) std::swap(e(k, j), e(piv, j));
            neg = !neg;
        }
        d = mulmod(d, e(k, k), q);
        const std::uint64_t inv = invmod(e(k, k), q);
        for (unsigned i = k + 1; i < m; ++i) {
            if (e(i, k) == 0) continue;
            const std::uint64_t f = mulmod(e(i, k), inv, q);
            for (unsigned j = k; j < m; ++j) e(i, j) = submod(e(i, j), mulmod(f, e(k, j), q), q);
        }
    }
    return neg ? negmod(d, q) : d;
}

} // namespace

void sample_sl_uniform(unsigned m, std::uint64_t q, std::uint64_t index_begin,
                       std::uint64_t index_end, std::uint64_t seed,
                       const MatrixVisitor& visit) {
    require(is_probable_prime(q), "sample_sl_uniform: q must be prime");
    require(m >= 2, "sample_sl_uniform: m must be >= 2");
    ModMatrix mat(m, q);
    std::vector<std::uint64_t> scratch;
    for (std::uint64_t i = index_begin; i < index_end; ++i) {
        RngStream rng = RngStream::substream(seed, i);
        std::uint64_t det = 0;
        do {
            for (unsigned r = 0; r < m; ++r)
                for (unsigned c = 0; c < m; ++c) mat.at(r, c) = rng.below(q);
            det = det_of(mat.entries(), m, q, scratch);
        } while (det == 0);
        const std::uint64_t fix = invmod(det, q);
        for (unsigned c = 0; c < m; ++c) mat.at(0, c) = mulmod(mat.at(0, c), fix, q);
        visit(i, mat);
    }
}

void sample_sl_uniform(unsigned m, std::uint64_t q, std::uint64_t count, std::uint64_t seed,
                       const MatrixVisitor& visit) {
    sample_sl_uniform(m, q, 0, count, seed, visit);
}

void enumerate_by_bfs(const GroupSpec& group, std::uint64_t q, const MatrixVisitor& visit,
                      std::uint64_t order_cap) {
    const mpz_class order = group_order_mod_p(group, q);
    require(order <= mpz_class(static_cast<unsigned long>(order_cap)),
            "enumerate_by_bfs: |G(F_q)| exceeds the cap");
    const std::vector<Generator> gens = default_generators(group);
    std::vector<ModMatrix> gens_p;
    for (const auto& g : gens) gens_p.push_back(g.matrix.reduce(q));

    auto pack = [](const ModMatrix& m) {
        std::string key(m.dim() * m.dim() * 2, '\0');
        for (std::size_t i = 0; i < m.entries().size(); ++i) {
            key[2 * i] = static_cast<char>(m.entries()[i] & 0xFF);
            key[2 * i + 1] = static_cast<char>((m.entries()[i] >> 8) & 0xFF);
        }
        return key;
    };
    require(q <= 0xFFFF, "enumerate_by_bfs: q too large for key packing");

    std::unordered_set<std::string> seen;
    std::deque<ModMatrix> queue;
    std::uint64_t index = 0;
    ModMatrix id = ModMatrix::identity(group.dim(), q);
    seen.insert(pack(id));
    visit(index++, id);
    queue.push_back(std::move(id));
    ModMatrix next(group.dim(), q);
    while (!queue.empty()) {
        ModMatrix cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& gp : gens_p) {
            cur.mul_into(gp, next);
            if (seen.insert(pack(next)).second) {
                visit(index++, next);
                queue.push_back(next);
            }
        }
    }
    check_invariant(mpz_class(static_cast<unsigned long>(seen.size())) == order,
                    "enumerate_by_bfs: closure size " + std::to_string(seen.size()) +
                        " disagrees with the group order");
}

CensusReport run_census(const GroupSpec& group, std::uint64_t q, CensusMode mode,
                        std::uint64_t seed, unsigned threads) {
    require(group.family == Family::A || q != 2, "run_census: type C requires odd q");
    CensusReport report;
    report.group = group;
    report.q = q;
    report.mode = mode;
    report.table = enumerate_classes(GroupSpec{group.family, group.rank});
    report.class_counts.assign(report.table.size(), 0);

    struct Tally {
        std::uint64_t total = 0;
        std::uint64_t rs = 0;
        std::vector<std::uint64_t> counts;
    };
    auto tally_into = [&](Tally& t, std::uint64_t index, const ModMatrix& m) {
        RngStream rng = RngStream::substream(seed ^ 0x9E3779B97F4A7C15ull, index);
        const FrobeniusObservation obs = classify_modular(m, group, rng);
        ++t.total;
        if (obs.status == FrobStatus::Good) {
            ++t.rs;
            ++t.counts[report.table.index_of(*obs.cls)];
        }
    };

    std::vector<Tally> shards;
    if (mode.kind == CensusMode::Kind::Sample) {
        require(group.family == Family::A,
                "run_census: sampling implemented for SL only; use enumeration for Sp");
        require(mode.samples >= 1, "run_census: sample count must be >= 1");
        const unsigned workers = std::max(1u, threads);
        shards.assign(workers, Tally{0, 0, std::vector<std::uint64_t>(report.table.size(), 0)});
        const std::uint64_t chunk = (mode.samples + workers - 1) / workers;
        parallel_for(0, workers, workers, [&](std::uint64_t w) {
            const std::uint64_t lo = w * chunk;
            const std::uint64_t hi = std::min<std::uint64_t>(mode.samples, lo + chunk);
            if (lo >= hi) return;
            sample_sl_uniform(group.rank, q, lo, hi, seed,
                              [&](std::uint64_t i, const ModMatrix& m) {
                                  tally_into(shards[w], i, m);
                              });
        });
    } else {
        shards.assign(1, Tally{0, 0, std::vector<std::uint64_t>(report.table.size(), 0)});
        auto tally = [&](std::uint64_t i, const ModMatrix& m) { tally_into(shards[0], i, m); };
        if (group.family == Family::A && group.rank == 2) {
            enumerate_sl2(q, tally);
        } else {
            enumerate_by_bfs(group, q, tally);
        }
    }

    for (const Tally& t : shards) {
        report.total += t.total;
        report.rs += t.rs;
        for (std::size_t i = 0; i < report.class_counts.size(); ++i)
            report.class_counts[i] += t.counts[i];
    }
    std::uint64_t sum = 0;
    for (std::uint64_t c : report.class_counts) sum += c;
    check_invariant(sum == report.rs, "run_census: class counts do not sum to the rs count");
    return report;
}

} // namespace weylwalk
