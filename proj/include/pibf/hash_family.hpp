#pragma once

#include <cstdint>
#include <vector>

#include "pibf/params.hpp"
#include "pibf/siphash.hpp"

namespace pibf {

// The k cell hashes and the checksum hash, derived from the 128-bit seed.
// The table is split into k sub-tables of t/k cells and hash i maps into
// sub-table i, so an item's k cells are pairwise distinct by construction.
class HashFamily {
public:
    explicit HashFamily(const IbfParams& params)
        : key_(params.hash_seed),
          k_(params.k),
          subtable_size_(params.t / params.k),
          g_range_((uint64_t{1} << params.lambda) - 1) {}

    uint16_t k() const { return k_; }

    // Cell index for hash i (0-based), in [i*t/k, (i+1)*t/k).
    uint32_t cell_index(uint64_t item, uint16_t i) const {
        uint64_t h = siphash24_u64_pair(key_, item, i);
        return static_cast<uint32_t>(i * subtable_size_ + h % subtable_size_);
    }

    void cell_indices(uint64_t item, std::vector<uint32_t>& out) const {
        out.resize(k_);
        for (uint16_t i = 0; i < k_; ++i) out[i] = cell_index(item, i);
    }

    // Checksum hash with range [1, 2^lambda).
    uint64_t g(uint64_t item) const {
        uint64_t h = siphash24_u64_pair(key_, item, kChecksumTag);
        return 1 + h % g_range_;
    }

private:
    static constexpr uint64_t kChecksumTag = ~uint64_t{0};

    std::array<uint8_t, 16> key_;
    uint16_t k_;
    uint64_t subtable_size_;
    uint64_t g_range_;
};

} // namespace pibf
