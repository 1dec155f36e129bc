#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pibf/hash_family.hpp"
#include "pibf/params.hpp"

namespace pibf {

// One table cell. All three fields are canonical residues in [0, p);
// count is interpreted as signed around the midpoint.
struct Cell {
    uint64_t count = 0;
    uint64_t id_sum = 0;
    uint64_t g_sum = 0;

    bool operator==(const Cell&) const = default;
    bool is_zero() const { return count == 0 && id_sum == 0 && g_sum == 0; }
};

enum class Membership : uint8_t { absent, present, undetermined };

struct DecodeResult {
    std::vector<uint64_t> positives; // items with positive sign
    std::vector<uint64_t> negatives; // items with negative sign
    bool complete = false;           // residual table all-zero after peeling

    bool operator==(const DecodeResult&) const = default;
};

// Invertible Bloom filter: a table of t cells summing contributions of
// inserted minus deleted items in Z_p. Linear in its contents, so two
// tables built with equal params subtract cell-wise into a table of their
// signed symmetric difference.
class Ibf {
public:
    explicit Ibf(const IbfParams& params);

    const IbfParams& params() const { return params_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const Cell& cell(size_t i) const { return cells_[i]; }

    // Item ids live in the open interval (0, p).
    void insert(uint64_t item);
    void remove(uint64_t item);

    // Bulk counterparts. The parallel versions accumulate per-thread
    // partial tables and merge; results are bit-identical to the serial
    // loop because field addition is exact and commutative.
    void insert_all(std::span<const uint64_t> items);
    void remove_all(std::span<const uint64_t> items);
    void insert_all_serial(std::span<const uint64_t> items);
    void remove_all_serial(std::span<const uint64_t> items);

    Membership is_member(uint64_t item) const;

    // Peels pure cells in ascending index order off a working copy.
    DecodeResult list_items() const;

    bool all_zero() const;

    bool operator==(const Ibf&) const = default;

private:
    friend Ibf subtract(const Ibf& a, const Ibf& b);
    friend Ibf subtract_serial(const Ibf& a, const Ibf& b);
    friend class Pad;
    friend Ibf unmask(const Ibf& response, const Pad& pad);
    friend Ibf ibf_from_bytes(std::span<const uint8_t> bytes);

    Ibf(const IbfParams& params, std::vector<Cell> cells);

    void check_item(uint64_t item) const;
    void apply(uint64_t item, bool inserting);
    void bulk_apply(std::span<const uint64_t> items, bool inserting);

    IbfParams params_;
    HashFamily hashes_;
    std::vector<Cell> cells_;
};

// Convenience constructors for a table holding a whole set.
Ibf build_ibf(const IbfParams& params, std::span<const uint64_t> items);
Ibf build_ibf_serial(const IbfParams& params, std::span<const uint64_t> items);

// Cell-wise field-wise difference; params of both operands must be equal.
Ibf subtract(const Ibf& a, const Ibf& b);
Ibf subtract_serial(const Ibf& a, const Ibf& b);

// Binary table format, little-endian:
//   "PIBF" | version u8 | t u32 | k u16 | lambda u16 | p u64 | seed[16]
// followed by t cells of (count, idSum, gSum) as u64 residues in [0, p).
inline constexpr size_t kIbfHeaderSize = 4 + 1 + 4 + 2 + 2 + 8 + 16;
inline constexpr uint8_t kIbfFormatVersion = 1;

std::vector<uint8_t> to_bytes(const Ibf& ibf);
Ibf ibf_from_bytes(std::span<const uint8_t> bytes);

void write_params_header(std::vector<uint8_t>& out, const IbfParams& params);
// Reads a header from the front of `bytes` and advances `offset`.
IbfParams read_params_header(std::span<const uint8_t> bytes, size_t& offset);

} // namespace pibf
