#pragma once

#include <cstdint>

namespace pibf {

// Arithmetic on canonical residues in [0, p). The modulus is a runtime
// parameter so tests can enumerate tiny fields; p never exceeds 2^61, so
// sums of two residues fit in 64 bits.
namespace field {

inline constexpr uint64_t kDefaultPrime = (uint64_t{1} << 61) - 1;

inline constexpr uint64_t add(uint64_t a, uint64_t b, uint64_t p) {
    uint64_t s = a + b;
    return s >= p ? s - p : s;
}

inline constexpr uint64_t sub(uint64_t a, uint64_t b, uint64_t p) {
    return a >= b ? a - b : a + (p - b);
}

inline constexpr uint64_t neg(uint64_t a, uint64_t p) {
    return a == 0 ? 0 : p - a;
}

// Residues above (p-1)/2 are read as negative.
inline constexpr int64_t to_signed(uint64_t a, uint64_t p) {
    return a <= (p - 1) / 2 ? static_cast<int64_t>(a)
                            : static_cast<int64_t>(a) - static_cast<int64_t>(p);
}

inline constexpr uint64_t from_signed(int64_t s, uint64_t p) {
    int64_t r = s % static_cast<int64_t>(p);
    if (r < 0) r += static_cast<int64_t>(p);
    return static_cast<uint64_t>(r);
}

} // namespace field
} // namespace pibf
