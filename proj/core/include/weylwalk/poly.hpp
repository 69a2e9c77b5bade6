#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace weylwalk {

class ModPoly;

// Univariate polynomial over Z, coefficients ascending. The zero polynomial
// has an empty coefficient vector; otherwise the leading coefficient is
// nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one() { return IntPoly({mpz_class(1)}); }

    bool is_zero() const { return c_.empty(); }
    // degree of the zero polynomial is reported as -1
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return c_; }

    mpz_class operator()(const mpz_class& x) const;
    IntPoly derivative() const;
    ModPoly reduce(std::uint64_t p) const;

    bool operator==(const IntPoly& rhs) const = default;

    // coeff(i) == coeff(deg - i) for all i
    bool is_palindromic() const;

private:
    std::vector<mpz_class> c_;
};

// Univariate polynomial over F_p, coefficients ascending and reduced.
class ModPoly {
public:
    explicit ModPoly(std::uint64_t p); // zero polynomial
    ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);

    static ModPoly zero(std::uint64_t p) { return ModPoly(p); }
    static ModPoly one(std::uint64_t p) { return ModPoly(p, {1}); }
    static ModPoly x(std::uint64_t p) { return ModPoly(p, {0, 1}); }
    static ModPoly constant(std::uint64_t p, std::uint64_t c) { return ModPoly(p, {c}); }

    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    std::uint64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }

    std::uint64_t operator()(std::uint64_t x) const;

    ModPoly operator+(const ModPoly& rhs) const;
    ModPoly operator-(const ModPoly& rhs) const;
    ModPoly operator*(const ModPoly& rhs) const;
    bool operator==(const ModPoly& rhs) const = default;

    ModPoly make_monic() const;
    ModPoly derivative() const;

    // quotient/remainder by a nonzero divisor
    struct DivRem;
    DivRem divrem(const ModPoly& divisor) const;
    ModPoly operator/(const ModPoly& divisor) const;
    ModPoly operator%(const ModPoly& divisor) const;

    bool is_palindromic() const;

private:
    void trim();
    std::uint64_t p_;
    std::vector<std::uint64_t> c_;
};

struct ModPoly::DivRem {
    ModPoly quot;
    ModPoly rem;
};

inline ModPoly ModPoly::operator/(const ModPoly& divisor) const { return divrem(divisor).quot; }
inline ModPoly ModPoly::operator%(const ModPoly& divisor) const { return divrem(divisor).rem; }

// Monic gcd (Euclid).
ModPoly gcd(const ModPoly& a, const ModPoly& b);

// base^e mod modulus, e an arbitrary-precision exponent.
ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modulus);

// gcd(P, P') == 1; encodes the good-prime condition for reduced
// characteristic polynomials.
bool squarefree_mod(const ModPoly& P);

// Monic normalization of T^{deg P} * P(1/T); requires P(0) != 0.
ModPoly reciprocal(const ModPoly& P);

} // namespace weylwalk
