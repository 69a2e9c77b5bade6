#include "weylwalk/walker.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"

namespace weylwalk {

IntMatrix symplectic_form(unsigned g) {
    IntMatrix J(2 * g);
    for (unsigned i = 0; i < g; ++i) {
        J.at(i, g + i) = 1;
        J.at(g + i, i) = -1;
    }
    return J;
}

bool group_contains(const GroupSpec& group, const IntMatrix& M) {
    if (M.dim() != group.dim()) return false;
    if (group.family == Family::A) return M.det() == 1;
    const IntMatrix J = symplectic_form(group.rank);
    return M.transpose() * J * M == J;
}

bool group_contains_mod(const GroupSpec& group, const ModMatrix& M) {
    if (M.dim() != group.dim()) return false;
    if (group.family == Family::A) return M.det() == 1 % M.modulus();
    const ModMatrix J = symplectic_form(group.rank).reduce(M.modulus());
    return M.transpose() * J * M == J;
}

mpz_class group_order_mod_p(const GroupSpec& group, std::uint64_t p) {
    return group.family == Family::A ? sl_group_order(group.rank, p)
                                     : sp_group_order(group.rank, p);
}

std::vector<Generator> default_generators(const GroupSpec& group) {
    std::vector<Generator> gens;
    const unsigned d = group.dim();
    gens.push_back({IntMatrix::identity(d), "id"});
    if (group.family == Family::A) {
        for (unsigned i = 0; i < d; ++i) {
            for (unsigned j = 0; j < d; ++j) {
                if (i == j) continue;
                for (int sign : {+1, -1}) {
                    IntMatrix m = IntMatrix::identity(d);
                    m.at(i, j) = sign;
                    gens.push_back({std::move(m), "E(" + std::to_string(i + 1) + "," +
                                                     std::to_string(j + 1) + ")" +
                                                     (sign > 0 ? "+" : "-")});
                }
            }
        }
    } else {
        const unsigned g = group.rank;
        const IntMatrix J = symplectic_form(g);
        std::vector<std::pair<std::vector<int>, std::string>> vs;
        for (unsigned i = 0; i < d; ++i) {
            std::vector<int> v(d, 0);
            v[i] = 1;
            vs.emplace_back(std::move(v), "e" + std::to_string(i + 1));
        }
        for (unsigned i = 0; i < d; ++i) {
            for (unsigned j = i + 1; j < d; ++j) {
                std::vector<int> v(d, 0);
                v[i] = 1;
                v[j] = 1;
                vs.emplace_back(std::move(v), "e" + std::to_string(i + 1) + "+e" +
                                                  std::to_string(j + 1));
            }
        }
        // transvection x -> x + lam <x,v> v as the matrix I - lam v v^T J
        for (const auto& [v, vname] : vs) {
            for (int lam : {+1, -1}) {
                IntMatrix m = IntMatrix::identity(d);
                for (unsigned r = 0; r < d; ++r) {
                    if (v[r] == 0) continue;
                    for (unsigned c = 0; c < d; ++c) {
                        mpz_class dot = 0;
                        for (unsigned k = 0; k < d; ++k) dot += v[k] * J.at(k, c);
                        m.at(r, c) -= lam * v[r] * dot;
                    }
                }
                gens.push_back({std::move(m), "T(" + vname + ")" + (lam > 0 ? "+" : "-")});
            }
        }
    }
    for (const auto& gen : gens)
        check_invariant(group_contains(group, gen.matrix),
                        "default_generators: generator outside the group: " + gen.label);
    return gens;
}

namespace {

std::string pack_key(const ModMatrix& m) {
    const std::uint64_t p = m.modulus();
    std::string key;
    if (p <= 0xFF) {
        key.resize(m.dim() * m.dim());
        for (std::size_t i = 0; i < key.size(); ++i)
            key[i] = static_cast<char>(m.entries()[i]);
    } else {
        key.resize(m.dim() * m.dim() * 4);
        for (std::size_t i = 0; i < m.entries().size(); ++i) {
            const std::uint64_t v = m.entries()[i];
            for (int b = 0; b < 4; ++b) key[4 * i + b] = static_cast<char>(v >> (8 * b));
        }
    }
    return key;
}

} // namespace

bool verify_generation_mod_p(const GroupSpec& group, const std::vector<Generator>& generators,
                             std::uint64_t p, std::uint64_t order_cap) {
    const mpz_class order = group_order_mod_p(group, p);
    require(order <= mpz_class(static_cast<unsigned long>(order_cap)),
            "verify_generation_mod_p: |G(F_p)| exceeds the BFS cap");
    std::vector<ModMatrix> gens_p;
    gens_p.reserve(generators.size());
    for (const auto& gen : generators) gens_p.push_back(gen.matrix.reduce(p));

    std::unordered_set<std::string> seen;
    std::deque<ModMatrix> queue;
    ModMatrix id = ModMatrix::identity(group.dim(), p);
    seen.insert(pack_key(id));
    queue.push_back(std::move(id));
    ModMatrix next(group.dim(), p);
    while (!queue.empty()) {
        ModMatrix cur = std::move(queue.front());
        queue.pop_front();
        for (const auto& gp : gens_p) {
            cur.mul_into(gp, next);
            std::string key = pack_key(next);
            if (seen.insert(std::move(key)).second) queue.push_back(next);
        }
    }
    return mpz_class(static_cast<unsigned long>(seen.size())) == order;
}

void WalkConfig::validate_and_fill() {
    require(group.rank >= 1 && (group.family != Family::A || group.rank >= 2),
            "walk config: bad group rank");
    if (generators.empty()) generators = default_generators(group);
    if (weights.empty())
        weights.assign(generators.size(),
                       mpq_class(1, static_cast<unsigned long>(generators.size())));
    require(weights.size() == generators.size(),
            "walk config: weights count does not match generators");
    mpq_class total = 0;
    for (auto& w : weights) {
        w.canonicalize();
        require(w > 0, "walk config: weights must be positive");
        total += w;
    }
    require(total == 1, "walk config: weights must sum to 1");

    bool has_identity = false;
    const IntMatrix id = IntMatrix::identity(group.dim());
    for (std::size_t i = 0; i < generators.size(); ++i) {
        require(generators[i].matrix.dim() == group.dim(),
                "walk config: generator dimension mismatch: " + generators[i].label);
        require(group_contains(group, generators[i].matrix),
                "walk config: generator outside the group: " + generators[i].label);
        if (generators[i].matrix == id) has_identity = true;
        // symmetry audit: the inverse must appear with the same weight
        const IntMatrix inv = generators[i].matrix.inverse_unimodular();
        bool found = false;
        for (std::size_t j = 0; j < generators.size(); ++j) {
            if (generators[j].matrix == inv) {
                require(weights[i] == weights[j],
                        "walk config: asymmetric weights for " + generators[i].label + " and " +
                            generators[j].label);
                found = true;
                break;
            }
        }
        require(found, "walk config: inverse of " + generators[i].label + " is not in the set");
    }
    require(has_identity, "walk config: identity generator required (balanced pair)");

    if (mode == WalkMode::Modular || mode == WalkMode::Dual) {
        require(!primes.empty(), "walk config: modular mode needs primes");
        std::vector<std::uint64_t> sorted = primes;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                "walk config: duplicate primes");
        for (std::uint64_t p : primes)
            require(is_probable_prime(p), "walk config: " + std::to_string(p) + " is not prime");
    } else {
        require(primes.empty(), "walk config: primes given but mode is exact");
    }
    require(membership_check_stride >= 1, "walk config: check stride must be >= 1");
}

WalkDriver::WalkDriver(const WalkConfig& config, std::uint64_t trial_index)
    : config_(config), rng_(RngStream::substream(config.master_seed, trial_index)) {
    check_invariant(!config_.generators.empty() && !config_.weights.empty(),
                    "WalkDriver: config not validated");
    const bool exact = config_.mode == WalkMode::Exact || config_.mode == WalkMode::Dual;
    const bool modular = config_.mode == WalkMode::Modular || config_.mode == WalkMode::Dual;
    if (exact) state_.exact = IntMatrix::identity(config_.group.dim());
    if (modular) {
        reduced_.resize(config_.generators.size());
        for (std::size_t i = 0; i < config_.generators.size(); ++i) {
            for (std::uint64_t p : config_.primes)
                reduced_[i].push_back(config_.generators[i].matrix.reduce(p));
        }
        for (std::uint64_t p : config_.primes) {
            state_.modular.push_back(ModMatrix::identity(config_.group.dim(), p));
            scratch_.push_back(ModMatrix(config_.group.dim(), p));
        }
    }

    // inverse-CDF thresholds: floor(2^128 * cumulative weight); the final
    // bucket is implicit so the all-ones draw still lands in range
    const mpz_class two128 = mpz_class(1) << 128;
    mpq_class running = 0;
    for (std::size_t i = 0; i + 1 < config_.weights.size(); ++i) {
        running += config_.weights[i];
        const mpz_class t = (running.get_num() * two128) / running.get_den();
        U128 u;
        const mpz_class hi = t >> 64;
        const mpz_class lo = t - (hi << 64);
        u.hi = hi.get_ui();
        u.lo = lo.get_ui();
        thresholds_.push_back(u);
    }
}

std::size_t WalkDriver::draw_step() {
    const U128 u = rng_.next128();
    std::size_t idx = 0;
    while (idx < thresholds_.size() && !(u < thresholds_[idx])) ++idx;
    return idx;
}

void WalkDriver::step() {
    const std::size_t idx = draw_step();
    if (state_.exact) {
        state_.exact = *state_.exact * config_.generators[idx].matrix;
        state_.max_entry_bits = std::max(state_.max_entry_bits, state_.exact->max_entry_bits());
    }
    for (std::size_t k = 0; k < state_.modular.size(); ++k) {
        state_.modular[k].mul_into(reduced_[idx][k], scratch_[k]);
        std::swap(state_.modular[k], scratch_[k]);
    }
    if (state_.trace.size() < config_.trace_limit)
        state_.trace.push_back(static_cast<std::uint32_t>(idx));
    ++state_.steps;
    if (state_.steps % config_.membership_check_stride == 0) audit();
}

void WalkDriver::audit() const {
    if (state_.exact) {
        check_invariant(group_contains(config_.group, *state_.exact),
                        "walk audit: exact state left the group");
    }
    for (std::size_t k = 0; k < state_.modular.size(); ++k) {
        check_invariant(group_contains_mod(config_.group, state_.modular[k]),
                        "walk audit: modular state left the group at p=" +
                            std::to_string(config_.primes[k]));
        if (state_.exact) {
            check_invariant(state_.exact->reduce(config_.primes[k]) == state_.modular[k],
                            "walk audit: dual-mode mismatch at p=" +
                                std::to_string(config_.primes[k]));
        }
    }
}

WalkState run_walk(const WalkConfig& config, std::uint64_t trial_index) {
    WalkDriver driver(config, trial_index);
    for (std::size_t i = 0; i < config.length; ++i) driver.step();
    return driver.state();
}

WalkCharpoly walk_charpoly(const WalkState& state) {
    WalkCharpoly out;
    if (state.exact) out.exact = charpoly_exact(*state.exact);
    for (const auto& m : state.modular) out.modular.push_back(charpoly_mod(m));
    return out;
}

std::vector<std::uint64_t> PrimeRequest::resolve() const {
    if (!explicit_primes.empty()) {
        require(count == 0, "prime request: give either a list or a count, not both");
        for (std::uint64_t p : explicit_primes)
            require(is_probable_prime(p), "prime request: " + std::to_string(p) + " is not prime");
        return explicit_primes;
    }
    require(count >= 1, "prime request: empty");
    return primes_from(min, count);
}

} // namespace weylwalk
