#include "weylwalk/matrix.hpp"

#include "weylwalk/charpoly.hpp"
#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"
#include "weylwalk/poly.hpp"

namespace weylwalk {

IntMatrix::IntMatrix(std::size_t dim) : dim_(dim), a_(dim * dim) {
    require(dim >= 1, "IntMatrix: dimension must be >= 1");
}

IntMatrix IntMatrix::identity(std::size_t dim) {
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    check_invariant(dim_ == rhs.dim_, "IntMatrix::mul: dimension mismatch");
    IntMatrix out(dim_);
    mpz_class acc;
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            acc = 0;
            for (std::size_t k = 0; k < dim_; ++k) acc += at(i, k) * rhs.at(k, j);
            out.at(i, j) = acc;
        }
    }
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

mpz_class IntMatrix::det() const {
    // Bareiss: divisions are exact, intermediate entries stay minimal.
    std::vector<mpz_class> w = a_;
    const std::size_t n = dim_;
    auto e = [&](std::size_t i, std::size_t j) -> mpz_class& { return w[i * n + j]; };
    mpz_class den = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (e(k, k) == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && e(pivot, k) == 0) ++pivot;
            if (pivot == n) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = e(i, j) * e(k, k) - e(i, k) * e(k, j);
                mpz_divexact(e(i, j).get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            }
            e(i, k) = 0;
        }
        den = e(k, k);
    }
    return sign > 0 ? e(n - 1, n - 1) : mpz_class(-e(n - 1, n - 1));
}

IntMatrix IntMatrix::inverse_unimodular() const {
    // Cayley-Hamilton: with P(T) = T^d + c_{d-1} T^{d-1} + ... + c_0 and
    // c_0 = +-1, M^{-1} = -c_0 * (M^{d-1} + c_{d-1} M^{d-2} + ... + c_1 I).
    const IntPoly p = charpoly_exact(*this);
    const mpz_class& c0 = p.coeff(0);
    check_invariant(c0 == 1 || c0 == -1, "inverse_unimodular: determinant is not +-1");
    const std::size_t d = dim_;
    IntMatrix acc = identity(d); // Horner accumulation of the cofactor polynomial
    for (std::size_t k = d - 1; k >= 1; --k) {
        acc = acc * (*this);
        for (std::size_t i = 0; i < d; ++i) acc.at(i, i) += p.coeff(k);
    }
    if (c0 == 1) {
        for (std::size_t i = 0; i < d * d; ++i) acc.a_[i] = -acc.a_[i];
    }
    return acc;
}

ModMatrix IntMatrix::reduce(std::uint64_t p) const {
    ModMatrix out(dim_, p);
    mpz_class r;
    const mpz_class mod(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < dim_ * dim_; ++i) {
        mpz_mod(r.get_mpz_t(), a_[i].get_mpz_t(), mod.get_mpz_t());
        out.at(i / dim_, i % dim_) = r.get_ui();
    }
    return out;
}

std::size_t IntMatrix::max_entry_bits() const {
    std::size_t bits = 0;
    for (const auto& v : a_) {
        if (v == 0) continue;
        bits = std::max(bits, mpz_sizeinbase(v.get_mpz_t(), 2));
    }
    return bits;
}

ModMatrix::ModMatrix(std::size_t dim, std::uint64_t p) : dim_(dim), p_(p), a_(dim * dim) {
    require(dim >= 1, "ModMatrix: dimension must be >= 1");
    ensure_prime_modulus(p);
}

ModMatrix ModMatrix::identity(std::size_t dim, std::uint64_t p) {
    ModMatrix m(dim, p);
    for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1 % p;
    return m;
}

ModMatrix ModMatrix::operator*(const ModMatrix& rhs) const {
    ModMatrix out(dim_, p_);
    mul_into(rhs, out);
    return out;
}

void ModMatrix::mul_into(const ModMatrix& rhs, ModMatrix& out) const {
    check_invariant(dim_ == rhs.dim_ && p_ == rhs.p_ && dim_ == out.dim_ && p_ == out.p_,
                    "ModMatrix::mul: shape or modulus mismatch");
    const std::size_t n = dim_;
    if (p_ < (1ull << 31)) {
        // products fit u64 and sums of up to 4 products fit before reduction
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    acc += a_[i * n + k] * rhs.a_[k * n + j] % p_;
                }
                out.a_[i * n + j] = acc % p_;
            }
        }
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::uint64_t acc = 0;
                for (std::size_t k = 0; k < n; ++k) {
                    acc = addmod(acc, mulmod(a_[i * n + k], rhs.a_[k * n + j], p_), p_);
                }
                out.a_[i * n + j] = acc;
            }
        }
    }
}

ModMatrix ModMatrix::transpose() const {
    ModMatrix out(dim_, p_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) out.at(j, i) = at(i, j);
    return out;
}

std::uint64_t ModMatrix::det() const {
    std::vector<std::uint64_t> w = a_;
    const std::size_t n = dim_;
    auto e = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return w[i * n + j]; };
    std::uint64_t d = 1 % p_;
    bool neg = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && e(pivot, k) == 0) ++pivot;
        if (pivot == n) return 0;
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(e(k, j), e(pivot, j));
            neg = !neg;
        }
        d = mulmod(d, e(k, k), p_);
        const std::uint64_t pivinv = invmod(e(k, k), p_);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (e(i, k) == 0) continue;
            const std::uint64_t f = mulmod(e(i, k), pivinv, p_);
            for (std::size_t j = k; j < n; ++j) {
                e(i, j) = submod(e(i, j), mulmod(f, e(k, j), p_), p_);
            }
        }
    }
    return neg ? negmod(d, p_) : d;
}

} // namespace weylwalk
