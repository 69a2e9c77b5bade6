#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "weylwalk/matrix.hpp"
#include "weylwalk/walker.hpp"
#include "weylwalk/weyl.hpp"

namespace weylwalk {

struct CensusMode {
    enum class Kind { Enumerate, Sample };
    Kind kind = Kind::Enumerate;
    std::uint64_t samples = 0; // Sample only

    static CensusMode enumerate() { return {Kind::Enumerate, 0}; }
    static CensusMode sample(std::uint64_t n) { return {Kind::Sample, n}; }
};

// Per-class tallies of theta over a population of G(F_q), with exact
// rational targets |C|/|W| to compare against.
struct CensusReport {
    GroupSpec group;
    std::uint64_t q = 0;
    CensusMode mode;
    ClassTable table;
    std::uint64_t total = 0;
    std::uint64_t rs = 0;                    // regular semisimple = Good
    std::vector<std::uint64_t> class_counts; // aligned with table

    double frequency(std::size_t i) const;
    double deviation(std::size_t i) const; // |freq - |C|/|W||
    double max_deviation() const;
    double rs_fraction() const;
};

// Visitors receive a stable element index: the enumeration position, or the
// sample index. Classification substreams key off it, so partitioned runs
// tally identically.
using MatrixVisitor = std::function<void(std::uint64_t, const ModMatrix&)>;

// Every element of SL(2, F_q) exactly once: free (b, c) with a != 0 and
// solved d, plus the a = 0 branch. q capped at 512.
void enumerate_sl2(std::uint64_t q, const MatrixVisitor& visit);

// i.i.d. uniform samples of SL(m, F_q): rejection from random matrices until
// invertible, then scale the first row by det^{-1} (the projection
// GL -> SL is exactly (q-1)-to-1, so uniformity is exact). Sample i is a
// pure function of (seed, i); the ranged overload emits one shard.
void sample_sl_uniform(unsigned m, std::uint64_t q, std::uint64_t count, std::uint64_t seed,
                       const MatrixVisitor& visit);
void sample_sl_uniform(unsigned m, std::uint64_t q, std::uint64_t index_begin,
                       std::uint64_t index_end, std::uint64_t seed, const MatrixVisitor& visit);

// Every element once via BFS closure from the default generators; hard
// error if the closure size disagrees with the closed-form group order.
void enumerate_by_bfs(const GroupSpec& group, std::uint64_t q, const MatrixVisitor& visit,
                      std::uint64_t order_cap = 10000000);

// Sampled censuses shard across threads; enumerations run sequentially.
// Tallies are exact integers merged associatively, so the report does not
// depend on the worker count.
CensusReport run_census(const GroupSpec& group, std::uint64_t q, CensusMode mode,
                        std::uint64_t seed, unsigned threads = 1);

} // namespace weylwalk
