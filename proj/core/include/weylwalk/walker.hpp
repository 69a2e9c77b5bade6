#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weylwalk/group.hpp"
#include "weylwalk/matrix.hpp"
#include "weylwalk/poly.hpp"
#include "weylwalk/rng.hpp"

namespace weylwalk {

// J = [[0, I_g], [-I_g, 0]] for type C.
IntMatrix symplectic_form(unsigned g);

// det = 1 (type A) or M^T J M = J (type C).
bool group_contains(const GroupSpec& group, const IntMatrix& M);
bool group_contains_mod(const GroupSpec& group, const ModMatrix& M);

// |G(F_p)| from the closed-form order formulas.
mpz_class group_order_mod_p(const GroupSpec& group, std::uint64_t p);

struct Generator {
    IntMatrix matrix;
    std::string label;
};

// Type A: identity plus all elementary matrices Id +- E_ij.
// Type C: identity plus symplectic transvections x -> x +- <x,v> v for
// v a standard basis vector or e_i + e_j (i < j).
// Symmetric, contains the identity, every element in the group.
std::vector<Generator> default_generators(const GroupSpec& group);

// BFS closure of the reductions mod p equals |G(F_p)|. Work capped by the
// group order (default 1e7).
bool verify_generation_mod_p(const GroupSpec& group, const std::vector<Generator>& generators,
                             std::uint64_t p, std::uint64_t order_cap = 10000000);

enum class WalkMode { Exact, Modular, Dual };

struct WalkConfig {
    GroupSpec group;
    std::vector<Generator> generators; // empty means defaults
    std::vector<mpq_class> weights;    // empty means uniform
    std::size_t length = 0;
    std::uint64_t master_seed = 0;
    WalkMode mode = WalkMode::Exact;
    std::vector<std::uint64_t> primes; // Modular / Dual
    std::size_t membership_check_stride = 64;
    std::size_t trace_limit = 0;

    // Resolves defaults and verifies every invariant: weights positive
    // rationals summing to 1, generator set symmetric (inverse present with
    // equal weight), identity present, all generators in the group, primes
    // prime and distinct (nonempty in Modular/Dual mode).
    void validate_and_fill();
};

struct WalkState {
    std::size_t steps = 0;
    std::optional<IntMatrix> exact;
    std::vector<ModMatrix> modular; // aligned with config primes
    std::vector<std::uint32_t> trace;
    std::size_t max_entry_bits = 0; // exact mode growth monitor
};

// Advances a single walk step by step. Step index n is drawn from the
// substream mix64(master_seed, trial_index) by inverse CDF over the exact
// rational weights using 128-bit uniform draws (per-step bias < 2^-128).
class WalkDriver {
public:
    WalkDriver(const WalkConfig& config, std::uint64_t trial_index);

    void step();
    const WalkState& state() const { return state_; }
    std::size_t n() const { return state_.steps; }

private:
    void audit() const;     // membership + dual-mode consistency
    std::size_t draw_step();

    const WalkConfig& config_;
    RngStream rng_;
    WalkState state_;
    std::vector<std::vector<ModMatrix>> reduced_; // [generator][prime]
    std::vector<U128> thresholds_;                // inverse-CDF table, last bucket implicit
    std::vector<ModMatrix> scratch_;              // aligned with primes
};

WalkState run_walk(const WalkConfig& config, std::uint64_t trial_index);

struct WalkCharpoly {
    std::optional<IntPoly> exact;
    std::vector<ModPoly> modular; // aligned with config primes
};

WalkCharpoly walk_charpoly(const WalkState& state);

// Resolves a prime set request: an explicit list, or the first `count`
// primes >= `min`.
struct PrimeRequest {
    std::vector<std::uint64_t> explicit_primes;
    std::size_t count = 0;
    std::uint64_t min = 2;
    std::vector<std::uint64_t> resolve() const;
};

} // namespace weylwalk
