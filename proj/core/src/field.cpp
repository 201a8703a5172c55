#include "pmc/field.hpp"

#include "pmc/error.hpp"

namespace pmc {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t Fp::inv(std::uint32_t a) const {
    if (a % p == 0) throw DomainError("inverse of zero in F_" + std::to_string(p));
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace pmc
