#include "weylwalk/chain.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/rng.hpp"

namespace weylwalk {

void ChainSpec::validate() const {
    const std::size_t n = states.size();
    require(n >= 1, "chain: at least one state required");
    require(kernel.size() == n, "chain: kernel row count mismatch");
    require(start < n, "chain: start index out of range");
    for (std::size_t i = 0; i < n; ++i) {
        require(kernel[i].size() == n, "chain: kernel column count mismatch");
        mpq_class row_sum = 0;
        for (std::size_t j = 0; j < n; ++j) {
            require(kernel[i][j] >= 0, "chain: negative kernel entry");
            require(kernel[i][j] == kernel[j][i], "chain: kernel not symmetric");
            row_sum += kernel[i][j];
        }
        require(row_sum == 1, "chain: kernel row " + std::to_string(i) + " does not sum to 1");
    }
}

bool ChainSpec::irreducible() const {
    const std::size_t n = states.size();
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const std::size_t s = queue.front();
        queue.pop_front();
        for (std::size_t t = 0; t < n; ++t) {
            if (!seen[t] && kernel[s][t] > 0) {
                seen[t] = true;
                ++count;
                queue.push_back(t);
            }
        }
    }
    return count == n;
}

ChainSpec kernel_from_walk(const std::vector<std::string>& labels,
                           const std::vector<mpq_class>& weights, const CosetAction& action,
                           std::vector<std::string> states, std::size_t start) {
    require(labels.size() == weights.size(), "kernel_from_walk: labels/weights size mismatch");
    const std::size_t n = states.size();
    require(n >= 1, "kernel_from_walk: empty state set");
    ChainSpec spec;
    spec.states = std::move(states);
    spec.start = start;
    spec.kernel.assign(n, std::vector<mpq_class>(n, 0));
    for (std::size_t k = 0; k < labels.size(); ++k) {
        auto it = action.find(labels[k]);
        require(it != action.end(), "kernel_from_walk: no action for label " + labels[k]);
        const std::vector<std::size_t>& image = it->second;
        require(image.size() == n, "kernel_from_walk: action size mismatch for " + labels[k]);
        std::vector<bool> hit(n, false);
        for (std::size_t s = 0; s < n; ++s) {
            require(image[s] < n, "kernel_from_walk: image out of range for " + labels[k]);
            require(!hit[image[s]], "kernel_from_walk: action of " + labels[k] +
                                        " is not a permutation");
            hit[image[s]] = true;
            spec.kernel[s][image[s]] += weights[k];
        }
    }
    spec.validate(); // symmetry failure here means p(s) != p(s^-1)
    require(spec.irreducible(), "kernel_from_walk: induced chain is not irreducible");
    return spec;
}

namespace {

// Cyclic Jacobi on a symmetric matrix; returns eigenvalues, descending.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
    const std::size_t n = a.size();
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
        if (off < 1e-24) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a[p][q]) < 1e-300) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

} // namespace

double spectral_gap(const ChainSpec& spec) {
    spec.validate();
    require(spec.size() <= 4096, "spectral_gap: state count capped at 4096");
    const std::size_t n = spec.size();
    if (n == 1) return 1.0; // single state: the chain mixes immediately
    std::vector<std::vector<double>> a(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = spec.kernel[i][j].get_d();
    const std::vector<double> ev = jacobi_eigenvalues(std::move(a));
    return 1.0 - ev[1];
}

double lezaud_bound(const ChainSpec& spec, std::uint64_t n, double beta) {
    check_invariant(beta > 0, "lezaud_bound: spectral gap must be positive");
    const double c = static_cast<double>(spec.size());
    return std::exp(beta / 5.0) * std::pow(c, 1.5) *
           std::exp(-beta * static_cast<double>(n + 1) / (48.0 * c * c));
}

DeviationReport simulate_iota(const ChainSpec& spec, const std::vector<std::uint64_t>& n_grid,
                              std::uint64_t trials, std::uint64_t seed) {
    spec.validate();
    require(trials >= 1, "simulate_iota: trials must be >= 1");
    require(!n_grid.empty(), "simulate_iota: empty grid");
    std::vector<std::uint64_t> grid = n_grid;
    std::sort(grid.begin(), grid.end());

    const std::size_t ns = spec.size();
    // per-row inverse-CDF thresholds, same 128-bit scheme as the walk sampler
    const mpz_class two128 = mpz_class(1) << 128;
    std::vector<std::vector<U128>> row_thresholds(ns);
    for (std::size_t s = 0; s < ns; ++s) {
        mpq_class running = 0;
        for (std::size_t t = 0; t + 1 < ns; ++t) {
            running += spec.kernel[s][t];
            const mpz_class v = (running.get_num() * two128) / running.get_den();
            U128 u;
            const mpz_class hi = v >> 64;
            const mpz_class lo = v - (hi << 64);
            u.hi = hi.get_ui();
            u.lo = lo.get_ui();
            row_thresholds[s].push_back(u);
        }
    }

    std::vector<std::uint64_t> below(grid.size(), 0);
    std::vector<std::uint64_t> visits(ns);
    const std::uint64_t n_max = grid.back();
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        RngStream rng = RngStream::substream(seed, trial);
        std::fill(visits.begin(), visits.end(), 0);
        std::size_t state = spec.start;
        visits[state] = 1; // i = 0
        std::size_t gi = 0;
        for (std::uint64_t n = 0; n <= n_max; ++n) {
            if (n > 0) {
                const U128 u = rng.next128();
                const auto& th = row_thresholds[state];
                std::size_t idx = 0;
                while (idx < th.size() && !(u < th[idx])) ++idx;
                state = idx;
                ++visits[state];
            }
            while (gi < grid.size() && grid[gi] == n) {
                // iota_n < (n+1)/(2|C|), compared exactly in integers
                if (2 * ns * visits[state] < n + 1) ++below[gi];
                ++gi;
            }
        }
    }

    DeviationReport report;
    report.n_grid = grid;
    report.trials = trials;
    report.beta = spectral_gap(spec);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        report.empirical.push_back(static_cast<double>(below[i]) / static_cast<double>(trials));
        report.bound.push_back(lezaud_bound(spec, grid[i], report.beta));
    }
    return report;
}

mpq_class sieve_density(const ClassTable& table, const WeylClass& cls, std::uint64_t prime_bound) {
    require(prime_bound >= 2, "sieve_density: prime bound must be >= 2");
    const std::size_t idx = table.index_of(cls);
    const std::uint64_t count = prime_pi(prime_bound);
    return table.fractions[idx] * mpq_class(static_cast<unsigned long>(count));
}

} // namespace weylwalk
