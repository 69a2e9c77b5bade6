#include "weylwalk/fp.hpp"

#include <atomic>

#include "weylwalk/errors.hpp"
#include "weylwalk/rng.hpp"

namespace weylwalk {

void ensure_prime_modulus(std::uint64_t p) {
    static std::atomic<std::uint64_t> recent[4] = {};
    for (const auto& r : recent)
        if (r.load(std::memory_order_relaxed) == p) return;
    require(is_probable_prime(p), "modulus " + std::to_string(p) + " is not prime");
    static std::atomic<unsigned> slot{0};
    recent[slot.fetch_add(1, std::memory_order_relaxed) % 4].store(p, std::memory_order_relaxed);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    check_invariant(a != 0, "invmod: zero is not invertible");
    // extended Euclid on (p, a); signed remainders fit since p < 2^63 in all
    // call sites (primes come from next_prime which rejects larger inputs)
    std::int64_t r0 = static_cast<std::int64_t>(p), r1 = static_cast<std::int64_t>(a);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1;
        r0 = r1; r1 = r2;
        std::int64_t s2 = s0 - q * s1;
        s0 = s1; s1 = s2;
    }
    check_invariant(r0 == 1, "invmod: argument shares a factor with the modulus");
    if (s0 < 0) s0 += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(s0);
}

bool is_probable_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }

    std::uint64_t state = n;
    for (int round = 0; round < 64; ++round) {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t a = 2 + avalanche64(state) % (n - 3);
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t n) {
    require(n <= (1ull << 62), "next_prime: argument too large");
    if (n <= 2) return 2;
    std::uint64_t c = n | 1;
    while (!is_probable_prime(c)) c += 2;
    return c;
}

std::vector<std::uint64_t> primes_from(std::uint64_t min, std::size_t count) {
    std::vector<std::uint64_t> out;
    out.reserve(count);
    std::uint64_t p = min;
    while (out.size() < count) {
        p = next_prime(p);
        out.push_back(p);
        ++p;
    }
    return out;
}

std::uint64_t prime_pi(std::uint64_t limit) {
    require(limit <= 100000000ull, "prime_pi: limit exceeds 1e8 cap");
    if (limit < 2) return 0;
    std::vector<bool> composite(limit + 1, false);
    std::uint64_t count = 0;
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        ++count;
        for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return count;
}

mpz_class sl_group_order(unsigned m, std::uint64_t p) {
    mpz_class q(static_cast<unsigned long>(p));
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(m) * (m - 1) / 2);
    for (unsigned i = 2; i <= m; ++i) {
        mpz_class qi;
        mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), i);
        order *= qi - 1;
    }
    return order;
}

mpz_class sp_group_order(unsigned g, std::uint64_t p) {
    mpz_class q(static_cast<unsigned long>(p));
    mpz_class order;
    mpz_pow_ui(order.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(g) * g);
    for (unsigned i = 1; i <= g; ++i) {
        mpz_class qi;
        mpz_pow_ui(qi.get_mpz_t(), q.get_mpz_t(), 2 * i);
        order *= qi - 1;
    }
    return order;
}

} // namespace weylwalk
