#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace weylwalk {

class ModMatrix;

// Square matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
public:
    explicit IntMatrix(std::size_t dim);
    static IntMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    mpz_class& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    const mpz_class& at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    IntMatrix transpose() const;

    // Exact determinant (fraction-free Bareiss elimination).
    mpz_class det() const;

    // Inverse of a matrix with det = +-1, via Cayley-Hamilton. Throws
    // invariant_error otherwise; all walk generators are unimodular.
    IntMatrix inverse_unimodular() const;

    ModMatrix reduce(std::uint64_t p) const;

    // Largest bit length over all entries; walk growth monitoring.
    std::size_t max_entry_bits() const;

private:
    std::size_t dim_;
    std::vector<mpz_class> a_;
};

// Square matrix over F_p, entries reduced to [0, p). p must be (probable)
// prime; validation is memoized so tight loops pay one integer compare.
class ModMatrix {
public:
    ModMatrix(std::size_t dim, std::uint64_t p);
    static ModMatrix identity(std::size_t dim, std::uint64_t p);

    std::size_t dim() const { return dim_; }
    std::uint64_t modulus() const { return p_; }
    std::uint64_t& at(std::size_t i, std::size_t j) { return a_[i * dim_ + j]; }
    std::uint64_t at(std::size_t i, std::size_t j) const { return a_[i * dim_ + j]; }
    const std::vector<std::uint64_t>& entries() const { return a_; }

    ModMatrix operator*(const ModMatrix& rhs) const;
    // out = *this * rhs without allocating; out must not alias the operands.
    void mul_into(const ModMatrix& rhs, ModMatrix& out) const;
    bool operator==(const ModMatrix& rhs) const = default;

    ModMatrix transpose() const;

    // Determinant by Gaussian elimination over F_p.
    std::uint64_t det() const;

private:
    std::size_t dim_;
    std::uint64_t p_;
    std::vector<std::uint64_t> a_;
};

} // namespace weylwalk
