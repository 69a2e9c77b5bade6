#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weylwalk/weyl.hpp"

namespace weylwalk {

// Finite coset chain: exact rational kernel, symmetric (reversible w.r.t.
// the uniform stationary law), rows summing to 1.
struct ChainSpec {
    std::vector<std::string> states;
    std::vector<std::vector<mpq_class>> kernel;
    std::size_t start = 0;

    std::size_t size() const { return states.size(); }
    void validate() const;
    bool irreducible() const;
};

// Generator label -> image of each state (a permutation of the states).
using CosetAction = std::map<std::string, std::vector<std::size_t>>;

// K(s, s') = sum of weights of generators mapping s to s'. Verifies the
// action is by permutations, the kernel symmetric (fails on step weights
// with p(s) != p(s^-1)) and the chain irreducible.
ChainSpec kernel_from_walk(const std::vector<std::string>& labels,
                           const std::vector<mpq_class>& weights, const CosetAction& action,
                           std::vector<std::string> states, std::size_t start);

// beta = 1 - lambda_2 via cyclic Jacobi rotations, absolute tolerance 1e-10.
// States capped at 4096.
double spectral_gap(const ChainSpec& spec);

// e^{beta/5} |C|^{3/2} exp(-beta (n+1) / (48 |C|^2)): the large-deviation
// bound on P(iota_n < (n+1) / (2|C|)) summed over the cosets.
double lezaud_bound(const ChainSpec& spec, std::uint64_t n, double beta);

// iota_n = #{0 <= i <= n : X_i = X_n}, the visit count of the current state
// including the present step (so iota_n >= 1).
struct DeviationReport {
    std::vector<std::uint64_t> n_grid;
    std::vector<double> empirical; // P(iota_n < (n+1) / (2|C|)) estimates
    std::vector<double> bound;     // lezaud_bound at each n
    double beta = 0;
    std::uint64_t trials = 0;
};

DeviationReport simulate_iota(const ChainSpec& spec, const std::vector<std::uint64_t>& n_grid,
                              std::uint64_t trials, std::uint64_t seed);

// Leading-order sieve mass for a class: V = (|C|/|W|) * pi(L), ignoring the
// O(1/q) correction per prime.
mpq_class sieve_density(const ClassTable& table, const WeylClass& cls, std::uint64_t prime_bound);

} // namespace weylwalk
