#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "weylwalk/chain.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/rng.hpp"
#include "weylwalk/stats.hpp"

using namespace weylwalk;

namespace {

ChainSpec two_state(const mpq_class& stay) {
    ChainSpec spec;
    spec.states = {"a", "b"};
    const mpq_class go = 1 - stay;
    spec.kernel = {{stay, go}, {go, stay}};
    spec.start = 0;
    return spec;
}

} // namespace

TEST_SUITE("chain") {

TEST_CASE("kernel_from_walk: coset counting example") {
    // five uniform generators, three fixing each coset and two swapping
    std::vector<std::string> labels{"s1", "s2", "s3", "s4", "s5"};
    std::vector<mpq_class> weights(5, mpq_class(1, 5));
    CosetAction action;
    action["s1"] = {0, 1};
    action["s2"] = {0, 1};
    action["s3"] = {0, 1};
    action["s4"] = {1, 0};
    action["s5"] = {1, 0};
    const ChainSpec spec = kernel_from_walk(labels, weights, action, {"e", "w"}, 0);
    CHECK(spec.kernel[0][0] == mpq_class(3, 5));
    CHECK(spec.kernel[0][1] == mpq_class(2, 5));
    CHECK(spec.kernel[1][0] == mpq_class(2, 5));
    CHECK(spec.kernel[1][1] == mpq_class(3, 5));
}

TEST_CASE("kernel_from_walk: single coset") {
    CosetAction action;
    action["s"] = {0};
    action["t"] = {0};
    const ChainSpec spec = kernel_from_walk({"s", "t"}, {mpq_class(1, 2), mpq_class(1, 2)},
                                            action, {"only"}, 0);
    CHECK(spec.kernel == std::vector<std::vector<mpq_class>>{{mpq_class(1)}});
}

TEST_CASE("kernel_from_walk: asymmetric weights are rejected") {
    // the swap generator pairs with itself, but its two directions get
    // different masses on a 3-cycle action, breaking symmetry
    CosetAction action;
    action["r"] = {1, 2, 0};  // rotation
    action["id"] = {0, 1, 2};
    const std::vector<std::string> labels{"r", "id"};
    const std::vector<mpq_class> weights{mpq_class(1, 2), mpq_class(1, 2)};
    CHECK_THROWS_AS(kernel_from_walk(labels, weights, action, {"x", "y", "z"}, 0),
                    config_error);
}

TEST_CASE("kernel_from_walk: non-permutation actions are rejected") {
    CosetAction action;
    action["s"] = {0, 0};
    CHECK_THROWS_AS(kernel_from_walk({"s"}, {mpq_class(1)}, action, {"x", "y"}, 0),
                    config_error);
}

TEST_CASE("spectral gap of the flip chain is 1, of the sticky chain 0.2") {
    CHECK(spectral_gap(two_state(mpq_class(1, 2))) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(spectral_gap(two_state(mpq_class(9, 10))) == doctest::Approx(0.2).epsilon(1e-9));
}

TEST_CASE("jacobi eigenvalues match the root-bracketing oracle on random kernels") {
    RngStream rng(51);
    for (int rep = 0; rep < 10; ++rep) {
        // random symmetric stochastic 5x5: diagonally dominant mixture
        const std::size_t n = 5;
        std::vector<std::vector<double>> base(n, std::vector<double>(n, 0));
        ChainSpec spec;
        spec.states = {"1", "2", "3", "4", "5"};
        std::vector<std::vector<mpq_class>> k(n, std::vector<mpq_class>(n, 0));
        // build as uniform mixture of transposition chains to stay symmetric
        std::vector<mpq_class> diag(n, mpq_class(1));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                mpq_class w(1 + static_cast<long>(rng.below(5)), 40);
                w.canonicalize();
                k[i][j] = w;
                k[j][i] = w;
                diag[i] -= w;
                diag[j] -= w;
            }
        }
        for (std::size_t i = 0; i < n; ++i) k[i][i] = diag[i];
        spec.kernel = k;
        spec.validate();
        const double beta = spectral_gap(spec);
        // self-loop states (diag >= 1/2) keep the chain aperiodic
        CHECK(beta > 0);
        CHECK(beta <= 1.0 + 1e-12);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) base[i][j] = k[i][j].get_d();
        const std::vector<double> roots = oracles::bracketed_eigenvalues(base);
        REQUIRE(roots.size() == n);
        CHECK(beta == doctest::Approx(1.0 - roots[1]).epsilon(1e-8));
    }
}

TEST_CASE("lezaud bound formula values") {
    const ChainSpec spec = two_state(mpq_class(1, 2));
    const double b0 = lezaud_bound(spec, 0, 1.0);
    CHECK(b0 == doctest::Approx(std::exp(0.2) * std::pow(2.0, 1.5) * std::exp(-1.0 / 192.0))
                    .epsilon(1e-12));
    double prev = b0;
    for (std::uint64_t n : {10ull, 100ull, 1000ull, 10000ull}) {
        const double b = lezaud_bound(spec, n, 1.0);
        CHECK(b < prev);
        prev = b;
    }
}

TEST_CASE("simulate_iota: single coset never deviates") {
    ChainSpec spec;
    spec.states = {"only"};
    spec.kernel = {{mpq_class(1)}};
    const DeviationReport r = simulate_iota(spec, {1, 10, 50}, 2000, 3);
    for (double e : r.empirical) CHECK(e == 0.0);
}

TEST_CASE("simulate_iota: estimates under the bound, log-linear decay") {
    const ChainSpec spec = two_state(mpq_class(9, 10));
    std::vector<std::uint64_t> grid;
    for (std::uint64_t n = 50; n <= 500; n += 50) grid.push_back(n);
    const DeviationReport r = simulate_iota(spec, grid, 100000, 20260809);
    CHECK(r.beta == doctest::Approx(0.2).epsilon(1e-9));
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(r.empirical[i] <= r.bound[i]);
        if (r.empirical[i] > 0) {
            xs.push_back(static_cast<double>(grid[i]));
            ys.push_back(std::log(r.empirical[i]));
        }
    }
    REQUIRE(xs.size() >= 5);
    const LinearFit fit = linear_fit(xs, ys);
    CHECK(fit.slope < 0);
    CHECK(fit.r2 > 0.9);
}

TEST_CASE("simulate_iota is deterministic per seed") {
    const ChainSpec spec = two_state(mpq_class(3, 4));
    const DeviationReport a = simulate_iota(spec, {20, 40}, 5000, 11);
    const DeviationReport b = simulate_iota(spec, {20, 40}, 5000, 11);
    CHECK(a.empirical == b.empirical);
}

TEST_CASE("empirical stationary distribution is uniform after burn-in") {
    for (const auto& spec :
         {two_state(mpq_class(9, 10)),
          [] {
              ChainSpec s;
              s.states = {"1", "2", "3", "4"};
              const mpq_class h(1, 2), q(1, 6);
              s.kernel = {{h, q, q, q}, {q, h, q, q}, {q, q, h, q}, {q, q, q, h}};
              return s;
          }()}) {
        spec.validate();
        const std::size_t ns = spec.size();
        const std::uint64_t trials = 20000, burn = 200;
        std::vector<std::uint64_t> counts(ns, 0);
        const mpz_class two128 = mpz_class(1) << 128;
        for (std::uint64_t t = 0; t < trials; ++t) {
            RngStream rng(mix64(5150, t));
            std::size_t state = 0;
            for (std::uint64_t s = 0; s < burn; ++s) {
                const U128 u = rng.next128();
                mpq_class running = 0;
                std::size_t idx = ns - 1;
                for (std::size_t j = 0; j + 1 < ns; ++j) {
                    running += spec.kernel[state][j];
                    const mpz_class thr = (running.get_num() * two128) / running.get_den();
                    const mpz_class uz = (mpz_class(u.hi) << 64) + u.lo;
                    if (uz < thr) {
                        idx = j;
                        break;
                    }
                }
                state = idx;
            }
            ++counts[state];
        }
        const double bound = 3.0 / std::sqrt(static_cast<double>(trials));
        for (std::size_t s = 0; s < ns; ++s) {
            const double freq = static_cast<double>(counts[s]) / static_cast<double>(trials);
            CHECK(std::abs(freq - 1.0 / static_cast<double>(ns)) <= bound);
        }
    }
}

TEST_CASE("sieve_density examples") {
    const ClassTable s3 = enumerate_classes(GroupSpec{Family::A, 3});
    CHECK(sieve_density(s3, WeylClass::type_a({2, 1}), 10) == 2);
    CHECK_THROWS_AS(sieve_density(s3, WeylClass::type_a({2, 1}), 1), config_error);
    mpq_class total = 0;
    for (const auto& cls : s3.classes) total += sieve_density(s3, cls, 100);
    CHECK(total == 25); // pi(100)
}

TEST_CASE("chain validation rejects bad kernels") {
    ChainSpec bad = two_state(mpq_class(1, 2));
    bad.kernel[0][0] = mpq_class(2, 3); // row no longer sums to 1
    CHECK_THROWS_AS(bad.validate(), config_error);
    ChainSpec asym = two_state(mpq_class(1, 2));
    asym.kernel[0][1] = mpq_class(1, 2);
    asym.kernel[1][0] = mpq_class(1, 3);
    asym.kernel[1][1] = mpq_class(2, 3);
    CHECK_THROWS_AS(asym.validate(), config_error);
}

} // TEST_SUITE
