#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace weylwalk {

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    std::uint64_t s = a + b;
    if (s >= p || s < a) s -= p;
    return s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a >= b ? a - b : a + p - b;
}

inline std::uint64_t negmod(std::uint64_t a, std::uint64_t p) {
    return a == 0 ? 0 : p - a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    if (p <= 0xFFFFFFFFull) return (a * b) % p;
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p);

// Inverse of a mod p; throws invariant_error when gcd(a, p) != 1.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);

// Miller-Rabin with 64 rounds on bases derived deterministically from n via
// splitmix64, so the function is pure. Error probability <= 4^-64 = 2^-128
// for composite n.
bool is_probable_prime(std::uint64_t n);

// Throws config_error unless p is (probable) prime. Memoizes the last few
// moduli so hot loops pay one atomic compare.
void ensure_prime_modulus(std::uint64_t p);

// Least prime >= n.
std::uint64_t next_prime(std::uint64_t n);

// The first `count` primes >= min, ascending.
std::vector<std::uint64_t> primes_from(std::uint64_t min, std::size_t count);

// pi(limit): number of primes <= limit (Eratosthenes; limit capped at 1e8).
std::uint64_t prime_pi(std::uint64_t limit);

// |SL(m, F_p)| = p^{m(m-1)/2} * prod_{i=2}^{m} (p^i - 1)
mpz_class sl_group_order(unsigned m, std::uint64_t p);

// |Sp(2g, F_p)| = p^{g^2} * prod_{i=1}^{g} (p^{2i} - 1)
mpz_class sp_group_order(unsigned g, std::uint64_t p);

} // namespace weylwalk
