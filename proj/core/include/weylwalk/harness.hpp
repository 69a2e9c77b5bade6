#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "weylwalk/frobenius.hpp"
#include "weylwalk/walker.hpp"
#include "weylwalk/weyl.hpp"

namespace weylwalk {

struct CertifyOptions {
    std::size_t prime_budget = 25;
    std::uint64_t prime_min = 2; // default 5 for type C at the CLI layer
};

struct CertifyResult {
    Certificate cert;
    std::vector<FrobeniusObservation> observations;
    std::size_t primes_used = 0;
};

// Classify at successive primes >= prime_min, collecting Weyl classes until
// all of them are observed (early stop) or the budget runs out. Degenerate
// when the global char poly has discriminant zero.
CertifyResult galois_certify(const IntMatrix& M, const GroupSpec& group,
                             const CertifyOptions& options, RngStream& rng);

// Same contract for walk states carried natively mod p; consumes only the
// carried primes (requesting more is a config error). Degenerate when every
// consumed prime reports NotSquarefree.
CertifyResult galois_certify_modular(std::span<const ModMatrix> components,
                                     std::span<const std::uint64_t> primes,
                                     const GroupSpec& group, std::size_t prime_budget,
                                     RngStream& rng);

struct TrialRecord {
    std::uint64_t trial = 0;
    std::size_t n = 0;
    Certificate cert;
    std::size_t primes_used = 0;
    double wall_ms = 0;
};

struct SurveyPoint {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t certified = 0;
    double fraction = 0;
    double wilson_lo = 0;
    double wilson_hi = 0;
    double mean_primes = 0;
    // trials in which each class was observed, table order
    std::vector<std::uint64_t> observed_histogram;
};

struct SurveyResult {
    ClassTable table;
    std::vector<TrialRecord> records; // ordered by (n, trial)
    std::vector<SurveyPoint> points;  // ordered by n
    // decay rate c fitted from log(1 - fraction) over points with
    // 0 < fraction < 1; absent when fewer than two such points exist
    std::optional<double> decay_rate;
};

// Independent trials per n (fresh walks, substream mix64(mix64(seed, n), t)).
// Certification consumes the walk's carried primes in modular/dual mode and a
// fresh ascending prime stream in exact mode.
SurveyResult survey(const WalkConfig& base, const std::vector<std::size_t>& n_grid,
                    std::uint64_t trials, const CertifyOptions& options, unsigned threads);

struct TauSample {
    std::uint64_t trial = 0;
    std::size_t tau = 0; // first n >= 1 whose prefix certifies
    bool censored = false;
};

// Certify every prefix X_1..X_{n_max} of each walk against a shared prime
// set. Modular mode only; certification randomness is drawn from substreams
// independent of the walk, so a larger budget never increases any tau.
std::vector<TauSample> estimate_tau(const WalkConfig& config, std::uint64_t trials,
                                    std::size_t n_max, std::size_t prime_budget,
                                    unsigned threads);

enum class TorusMode { ExactDP, MonteCarlo };

struct TorusRow {
    std::uint64_t n = 0;
    mpq_class exact;      // ExactDP only
    double probability = 0;
    double sqrt_n_scaled = 0; // sqrt(n) * P(S_n = 0)
};

// P(S_n = 0) for S_n a sum of n uniform {-1, 0, +1} steps: exact integer
// dynamic programming or Monte Carlo.
std::vector<TorusRow> torus_demo(const std::vector<std::uint64_t>& ns, TorusMode mode,
                                 std::uint64_t trials, std::uint64_t seed);

// Exact count of {-1,0,+1}^n sequences summing to zero (central trinomial
// coefficient), for n = 0..n_max. Linear-recurrence dynamic program; the
// convolution oracle in the test suite cross-checks it.
std::vector<mpz_class> torus_zero_counts(std::uint64_t n_max);

struct DecayRow {
    std::size_t n = 0;
    std::uint64_t trials = 0;
    std::uint64_t nonregular = 0;
    double fraction = 0;
};

// Fraction of walks of length n whose char poly is not squarefree: disc = 0
// in exact mode, all carried primes NotSquarefree in modular mode (>= 10
// primes required).
std::vector<DecayRow> nonreg_decay(const WalkConfig& config,
                                   const std::vector<std::size_t>& n_grid, std::uint64_t trials,
                                   unsigned threads);

} // namespace weylwalk
