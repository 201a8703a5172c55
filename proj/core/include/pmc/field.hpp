#pragma once

#include <cstdint>

namespace pmc {

bool is_prime(std::uint32_t p);

// Arithmetic in the prime field of order p (p < 2^16).
struct Fp {
    std::uint32_t p;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    std::uint32_t inv(std::uint32_t a) const;
    // Reduce an arbitrary signed integer.
    std::uint32_t from_int(long long v) const {
        long long r = v % static_cast<long long>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
};

}  // namespace pmc
