#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "weylwalk/poly.hpp"
#include "weylwalk/rng.hpp"

namespace weylwalk {

// Complete irreducible factorization over F_p. Construction re-verifies that
// the factors multiply back to the input, are pairwise distinct, monic and
// irreducible, so a Factorization value is trustworthy evidence.
class Factorization {
public:
    Factorization(const ModPoly& input, std::vector<std::pair<ModPoly, unsigned>> factors);

    std::uint64_t modulus() const { return p_; }
    const std::vector<std::pair<ModPoly, unsigned>>& factors() const { return factors_; }

private:
    std::uint64_t p_;
    std::vector<std::pair<ModPoly, unsigned>> factors_;
};

// Squarefree decomposition: pairwise-coprime squarefree g_i with
// P = prod g_i^{m_i}. Handles p-th powers.
std::vector<std::pair<ModPoly, unsigned>> squarefree_decomposition(const ModPoly& P);

// Distinct-degree split of a monic squarefree polynomial: pairs (g, d) where
// g is the product of all irreducible factors of degree d, ascending in d.
std::vector<std::pair<ModPoly, unsigned>> distinct_degree_split(const ModPoly& P);

// Degrees of the irreducible factors of a monic squarefree polynomial,
// descending; the DDF degree pattern without splitting factors apart.
std::vector<unsigned> ddf_degree_pattern(const ModPoly& P);

// Equal-degree splitting (Cantor-Zassenhaus) of a product of r distinct monic
// irreducibles, all of degree d. Las Vegas: retries until split; output order
// deterministic given the rng stream.
std::vector<ModPoly> equal_degree_split(const ModPoly& P, unsigned d, RngStream& rng);

// Full factorization pipeline: squarefree split, DDF, then CZ. Works for all
// primes including p = 2 (additive trace map splitting).
Factorization factor_mod(const ModPoly& P, RngStream& rng);

// Rabin irreducibility test.
bool is_irreducible(const ModPoly& P);

} // namespace weylwalk
