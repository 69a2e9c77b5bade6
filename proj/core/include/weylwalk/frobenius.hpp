#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "weylwalk/matrix.hpp"
#include "weylwalk/poly.hpp"
#include "weylwalk/rng.hpp"
#include "weylwalk/weyl.hpp"

namespace weylwalk {

enum class FrobStatus { Good, NotSquarefree, WrongCharacteristic };

std::string status_name(FrobStatus s);

// One sampled prime: either a Weyl conjugacy class (the Frobenius class of
// the splitting field at p) or the reason the prime was skipped.
// NotSquarefree covers both ramified primes and non-regular reductions; the
// two conditions coincide for the natural representations used here.
struct FrobeniusObservation {
    std::uint64_t prime = 0;
    FrobStatus status = FrobStatus::NotSquarefree;
    std::optional<WeylClass> cls;
};

struct ThetaResult {
    FrobStatus status = FrobStatus::NotSquarefree;
    std::optional<WeylClass> cls;
};

// Factorization pattern of a squarefree monic polynomial of degree m: the
// irreducible factor degrees form a partition of m, the cycle type of
// Frobenius on the roots. Distinct-degree factorization suffices.
ThetaResult theta_type_a(const ModPoly& P);

// Signed cycle type of a squarefree monic palindromic polynomial of degree
// 2g over F_p, p odd: each self-reciprocal irreducible factor has even
// degree 2d and contributes a negative d-part; the remaining factors pair up
// as {f, reciprocal(f)} with deg f = d, each pair a positive d-part.
ThetaResult theta_type_c(const ModPoly& P, RngStream& rng);

// Reduce M mod p, take the char poly, dispatch on the group family.
FrobeniusObservation classify(const IntMatrix& M, const GroupSpec& group, std::uint64_t p,
                              RngStream& rng);

// Same contract for a walk state carried natively mod p.
FrobeniusObservation classify_modular(const ModMatrix& M, const GroupSpec& group, RngStream& rng);

// Dispatch on an already-computed char poly mod p.
FrobeniusObservation classify_poly(const ModPoly& charpoly, const GroupSpec& group,
                                   RngStream& rng);

} // namespace weylwalk
