#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <span>

namespace pibf {

// SipHash-2-4. Keyed 64-bit PRF over short messages; the key is the 128-bit
// sketch seed, so both protocol sides derive identical hash families from
// the wire header.
inline uint64_t siphash24(uint64_t k0, uint64_t k1, std::span<const uint8_t> data) {
    auto rotl = [](uint64_t x, int b) { return (x << b) | (x >> (64 - b)); };

    uint64_t v0 = 0x736f6d6570736575ULL ^ k0;
    uint64_t v1 = 0x646f72616e646f6dULL ^ k1;
    uint64_t v2 = 0x6c7967656e657261ULL ^ k0;
    uint64_t v3 = 0x7465646279746573ULL ^ k1;

    auto round = [&] {
        v0 += v1; v1 = rotl(v1, 13); v1 ^= v0; v0 = rotl(v0, 32);
        v2 += v3; v3 = rotl(v3, 16); v3 ^= v2;
        v0 += v3; v3 = rotl(v3, 21); v3 ^= v0;
        v2 += v1; v1 = rotl(v1, 17); v1 ^= v2; v2 = rotl(v2, 32);
    };

    const size_t n = data.size();
    const size_t end = n - (n % 8);
    for (size_t i = 0; i < end; i += 8) {
        uint64_t m;
        std::memcpy(&m, data.data() + i, 8);
        v3 ^= m;
        round();
        round();
        v0 ^= m;
    }

    uint64_t last = static_cast<uint64_t>(n) << 56;
    for (size_t i = end; i < n; ++i) {
        last |= static_cast<uint64_t>(data[i]) << (8 * (i - end));
    }
    v3 ^= last;
    round();
    round();
    v0 ^= last;

    v2 ^= 0xff;
    round();
    round();
    round();
    round();
    return v0 ^ v1 ^ v2 ^ v3;
}

inline uint64_t siphash24(const std::array<uint8_t, 16>& key, std::span<const uint8_t> data) {
    uint64_t k0, k1;
    std::memcpy(&k0, key.data(), 8);
    std::memcpy(&k1, key.data() + 8, 8);
    return siphash24(k0, k1, data);
}

// Hash of a (value, tag) pair, the building block for deriving independent
// hash functions from one key.
inline uint64_t siphash24_u64_pair(const std::array<uint8_t, 16>& key, uint64_t value,
                                   uint64_t tag) {
    std::array<uint8_t, 16> msg;
    std::memcpy(msg.data(), &value, 8);
    std::memcpy(msg.data() + 8, &tag, 8);
    return siphash24(key, msg);
}

} // namespace pibf
