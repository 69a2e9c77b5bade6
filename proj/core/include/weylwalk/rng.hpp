#pragma once

#include <cstdint>

namespace weylwalk {

// splitmix64 finalizer: the avalanche mixer used for all seed derivation.
// Every bit of the input affects every bit of the output.
inline std::uint64_t avalanche64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

// Derives an independent substream seed from (master seed, stream index).
// Defined as avalanche64(master + GOLDEN_GAMMA * (index + 1)), the splitmix64
// sequence jumped to position index+1; collisions across indices would need
// a 64-bit cycle.
inline std::uint64_t mix64(std::uint64_t master, std::uint64_t index) {
    return avalanche64(master + 0x9E3779B97F4A7C15ull * (index + 1));
}

struct U128 {
    std::uint64_t hi = 0;
    std::uint64_t lo = 0;
    friend bool operator<(const U128& a, const U128& b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }
};

// xoshiro256++ with splitmix64 state expansion. Self-contained so that
// streams are bit-identical across platforms and standard libraries.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& w : s_) {
            sm += 0x9E3779B97F4A7C15ull;
            w = avalanche64(sm);
        }
    }

    static RngStream substream(std::uint64_t master, std::uint64_t index) {
        return RngStream(mix64(master, index));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    U128 next128() {
        U128 u;
        u.hi = next();
        u.lo = next();
        return u;
    }

    // Unbiased uniform draw from [0, n) by rejection.
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n; // 2^64 mod n
        for (;;) {
            std::uint64_t r = next();
            if (r >= threshold) return r % n;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

} // namespace weylwalk
