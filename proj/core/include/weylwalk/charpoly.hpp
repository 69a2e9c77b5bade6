#pragma once

#include "weylwalk/matrix.hpp"
#include "weylwalk/poly.hpp"

namespace weylwalk {

// Monic char poly det(T*I - M) over Z, by the Berkowitz algorithm
// (division-free, exact).
IntPoly charpoly_exact(const IntMatrix& M);

// Monic char poly det(T*I - M) over F_p, by similarity reduction to
// Hessenberg form and the leading-minor recurrence. Independent of the
// Berkowitz route, which the cross-mode tests rely on.
ModPoly charpoly_mod(const ModMatrix& M);

// disc(P) = (-1)^{m(m-1)/2} Res(P, P') for monic P of degree m >= 1;
// zero iff P has a repeated complex root. Resultant computed as the Bareiss
// determinant of the Sylvester matrix.
mpz_class discriminant(const IntPoly& P);

} // namespace weylwalk
