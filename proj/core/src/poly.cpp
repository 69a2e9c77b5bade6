#include "weylwalk/poly.hpp"

#include "weylwalk/errors.hpp"
#include "weylwalk/fp.hpp"

namespace weylwalk {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& IntPoly::coeff(std::size_t i) const {
    static const mpz_class kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
}

mpz_class IntPoly::operator()(const mpz_class& x) const {
    mpz_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return IntPoly();
    std::vector<mpz_class> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
    return IntPoly(std::move(d));
}

ModPoly IntPoly::reduce(std::uint64_t p) const {
    std::vector<std::uint64_t> r(c_.size());
    mpz_class tmp;
    const mpz_class mod(static_cast<unsigned long>(p));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        mpz_mod(tmp.get_mpz_t(), c_[i].get_mpz_t(), mod.get_mpz_t());
        r[i] = tmp.get_ui();
    }
    return ModPoly(p, std::move(r));
}

bool IntPoly::is_palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return !c_.empty();
}

ModPoly::ModPoly(std::uint64_t p) : p_(p) { ensure_prime_modulus(p); }

ModPoly::ModPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), c_(std::move(coeffs)) {
    ensure_prime_modulus(p);
    for (auto& v : c_)
        if (v >= p_) v %= p_;
    trim();
}

void ModPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t ModPoly::operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    x %= p_;
    for (std::size_t i = c_.size(); i-- > 0;) acc = addmod(mulmod(acc, x, p_), c_[i], p_);
    return acc;
}

ModPoly ModPoly::operator+(const ModPoly& rhs) const {
    check_invariant(p_ == rhs.p_, "ModPoly::add: modulus mismatch");
    std::vector<std::uint64_t> r(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = addmod(coeff(i), rhs.coeff(i), p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator-(const ModPoly& rhs) const {
    check_invariant(p_ == rhs.p_, "ModPoly::sub: modulus mismatch");
    std::vector<std::uint64_t> r(std::max(c_.size(), rhs.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = submod(coeff(i), rhs.coeff(i), p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::operator*(const ModPoly& rhs) const {
    check_invariant(p_ == rhs.p_, "ModPoly::mul: modulus mismatch");
    if (is_zero() || rhs.is_zero()) return zero(p_);
    std::vector<std::uint64_t> r(c_.size() + rhs.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
            r[i + j] = addmod(r[i + j], mulmod(c_[i], rhs.c_[j], p_), p_);
        }
    }
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::make_monic() const {
    check_invariant(!is_zero(), "make_monic: zero polynomial");
    if (c_.back() == 1) return *this;
    const std::uint64_t s = invmod(c_.back(), p_);
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = mulmod(c_[i], s, p_);
    return ModPoly(p_, std::move(r));
}

ModPoly ModPoly::derivative() const {
    if (c_.size() <= 1) return zero(p_);
    std::vector<std::uint64_t> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % p_, p_);
    return ModPoly(p_, std::move(d));
}

ModPoly::DivRem ModPoly::divrem(const ModPoly& divisor) const {
    check_invariant(p_ == divisor.p_, "ModPoly::divrem: modulus mismatch");
    check_invariant(!divisor.is_zero(), "ModPoly::divrem: division by zero");
    if (degree() < divisor.degree()) return {zero(p_), *this};
    std::vector<std::uint64_t> rem = c_;
    const std::size_t dq = c_.size() - divisor.c_.size() + 1;
    std::vector<std::uint64_t> quot(dq, 0);
    const std::uint64_t lead_inv = invmod(divisor.c_.back(), p_);
    for (std::size_t i = dq; i-- > 0;) {
        const std::uint64_t q = mulmod(rem[i + divisor.c_.size() - 1], lead_inv, p_);
        quot[i] = q;
        if (q == 0) continue;
        for (std::size_t j = 0; j < divisor.c_.size(); ++j) {
            rem[i + j] = submod(rem[i + j], mulmod(q, divisor.c_[j], p_), p_);
        }
    }
    rem.resize(divisor.c_.size() - 1);
    return {ModPoly(p_, std::move(quot)), ModPoly(p_, std::move(rem))};
}

bool ModPoly::is_palindromic() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return !c_.empty();
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        ModPoly r2 = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return r0;
    return r0.make_monic();
}

ModPoly powmod(const ModPoly& base, const mpz_class& e, const ModPoly& modulus) {
    check_invariant(e >= 0, "powmod: negative exponent");
    check_invariant(modulus.degree() >= 1, "powmod: modulus must have degree >= 1");
    ModPoly result = ModPoly::one(base.modulus());
    ModPoly sq = base % modulus;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return result;
    for (std::size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * sq) % modulus;
        if (i + 1 < bits) sq = (sq * sq) % modulus;
    }
    return result;
}

bool squarefree_mod(const ModPoly& P) {
    check_invariant(P.degree() >= 1, "squarefree_mod: degree must be >= 1");
    const ModPoly d = P.derivative();
    if (d.is_zero()) return false; // P is a p-th power
    return gcd(P, d).degree() == 0;
}

ModPoly reciprocal(const ModPoly& P) {
    require(P.coeff(0) != 0, "reciprocal: P(0) must be nonzero");
    std::vector<std::uint64_t> r(P.coeffs().rbegin(), P.coeffs().rend());
    return ModPoly(P.modulus(), std::move(r)).make_monic();
}

} // namespace weylwalk
