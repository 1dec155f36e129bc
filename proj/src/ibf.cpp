#include "pibf/ibf.hpp"

#include <algorithm>
#include <cstring>
#include <queue>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pibf/errors.hpp"
#include "pibf/field.hpp"

namespace pibf {

namespace {

const IbfParams& checked(const IbfParams& params) {
    validate_structure(params);
    return params;
}

} // namespace

Ibf::Ibf(const IbfParams& params)
    : params_(checked(params)), hashes_(params), cells_(params.t) {}

Ibf::Ibf(const IbfParams& params, std::vector<Cell> cells)
    : params_(params), hashes_(params), cells_(std::move(cells)) {}

void Ibf::check_item(uint64_t item) const {
    if (item == 0 || item >= params_.p)
        throw std::invalid_argument("ibf: item id must be in (0, p)");
}

void Ibf::apply(uint64_t item, bool inserting) {
    check_item(item);
    const uint64_t p = params_.p;
    const uint64_t g = hashes_.g(item) % p;
    for (uint16_t i = 0; i < params_.k; ++i) {
        Cell& c = cells_[hashes_.cell_index(item, i)];
        if (inserting) {
            c.count = field::add(c.count, 1, p);
            c.id_sum = field::add(c.id_sum, item % p, p);
            c.g_sum = field::add(c.g_sum, g, p);
        } else {
            c.count = field::sub(c.count, 1, p);
            c.id_sum = field::sub(c.id_sum, item % p, p);
            c.g_sum = field::sub(c.g_sum, g, p);
        }
    }
}

void Ibf::insert(uint64_t item) { apply(item, true); }
void Ibf::remove(uint64_t item) { apply(item, false); }

void Ibf::insert_all_serial(std::span<const uint64_t> items) {
    for (uint64_t x : items) insert(x);
}

void Ibf::remove_all_serial(std::span<const uint64_t> items) {
    for (uint64_t x : items) remove(x);
}

void Ibf::bulk_apply(std::span<const uint64_t> items, bool inserting) {
    for (uint64_t x : items) check_item(x);
    const uint64_t p = params_.p;
    const size_t t = cells_.size();

    std::vector<std::vector<Cell>> partials;
#ifdef _OPENMP
#pragma omp parallel
    {
#pragma omp single
        partials.resize(static_cast<size_t>(omp_get_num_threads()),
                        std::vector<Cell>(t));
        std::vector<Cell>& local = partials[static_cast<size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
        for (ptrdiff_t n = 0; n < static_cast<ptrdiff_t>(items.size()); ++n) {
            uint64_t x = items[static_cast<size_t>(n)];
            uint64_t g = hashes_.g(x) % p;
            for (uint16_t i = 0; i < params_.k; ++i) {
                Cell& c = local[hashes_.cell_index(x, i)];
                c.count = field::add(c.count, 1, p);
                c.id_sum = field::add(c.id_sum, x % p, p);
                c.g_sum = field::add(c.g_sum, g, p);
            }
        }
    }
#else
    partials.emplace_back(t);
    for (uint64_t x : items) {
        uint64_t g = hashes_.g(x) % p;
        for (uint16_t i = 0; i < params_.k; ++i) {
            Cell& c = partials[0][hashes_.cell_index(x, i)];
            c.count = field::add(c.count, 1, p);
            c.id_sum = field::add(c.id_sum, x % p, p);
            c.g_sum = field::add(c.g_sum, g, p);
        }
    }
#endif

    // Merge in thread order; field addition is commutative and exact, so
    // the result matches the serial loop bit for bit.
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (ptrdiff_t i = 0; i < static_cast<ptrdiff_t>(t); ++i) {
        Cell& dst = cells_[static_cast<size_t>(i)];
        for (const auto& local : partials) {
            const Cell& src = local[static_cast<size_t>(i)];
            if (inserting) {
                dst.count = field::add(dst.count, src.count, p);
                dst.id_sum = field::add(dst.id_sum, src.id_sum, p);
                dst.g_sum = field::add(dst.g_sum, src.g_sum, p);
            } else {
                dst.count = field::sub(dst.count, src.count, p);
                dst.id_sum = field::sub(dst.id_sum, src.id_sum, p);
                dst.g_sum = field::sub(dst.g_sum, src.g_sum, p);
            }
        }
    }
}

void Ibf::insert_all(std::span<const uint64_t> items) { bulk_apply(items, true); }
void Ibf::remove_all(std::span<const uint64_t> items) { bulk_apply(items, false); }

Membership Ibf::is_member(uint64_t item) const {
    check_item(item);
    const uint64_t p = params_.p;
    const uint64_t g = hashes_.g(item) % p;
    for (uint16_t i = 0; i < params_.k; ++i) {
        const Cell& c = cells_[hashes_.cell_index(item, i)];
        if (c.is_zero()) return Membership::absent;
        if (c.count == 1 && c.id_sum == item % p && c.g_sum == g) return Membership::present;
    }
    return Membership::undetermined;
}

bool Ibf::all_zero() const {
    return std::all_of(cells_.begin(), cells_.end(), [](const Cell& c) { return c.is_zero(); });
}

namespace {

enum class Purity : uint8_t { none, positive, negative };

Purity purity(const Cell& c, const HashFamily& hashes, uint64_t p) {
    if (c.count == 1) {
        if (c.g_sum == hashes.g(c.id_sum) % p) return Purity::positive;
    } else if (c.count == p - 1) {
        // count = -1: the cell holds the negation of one item.
        uint64_t item = field::neg(c.id_sum, p);
        if (field::neg(c.g_sum, p) == hashes.g(item) % p) return Purity::negative;
    }
    return Purity::none;
}

} // namespace

DecodeResult Ibf::list_items() const {
    const uint64_t p = params_.p;
    std::vector<Cell> work = cells_;
    DecodeResult result;

    // Lowest-index-first worklist; entries are re-verified at pop so stale
    // candidates are harmless.
    std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> ready;
    for (uint32_t i = 0; i < work.size(); ++i)
        if (purity(work[i], hashes_, p) != Purity::none) ready.push(i);

    auto peel = [&](uint64_t item, bool positive) {
        uint64_t g = hashes_.g(item) % p;
        for (uint16_t i = 0; i < params_.k; ++i) {
            uint32_t idx = hashes_.cell_index(item, i);
            Cell& c = work[idx];
            if (positive) {
                c.count = field::sub(c.count, 1, p);
                c.id_sum = field::sub(c.id_sum, item % p, p);
                c.g_sum = field::sub(c.g_sum, g, p);
            } else {
                c.count = field::add(c.count, 1, p);
                c.id_sum = field::add(c.id_sum, item % p, p);
                c.g_sum = field::add(c.g_sum, g, p);
            }
            if (purity(c, hashes_, p) != Purity::none) ready.push(idx);
        }
    };

    // A checksum collision can emit a bogus item and re-dirty cells, so cap
    // the number of peels rather than trusting the queue to drain.
    size_t peels = 0;
    const size_t max_peels = 2 * work.size() + 16;
    while (!ready.empty() && peels < max_peels) {
        uint32_t idx = ready.top();
        ready.pop();
        Purity pu = purity(work[idx], hashes_, p);
        if (pu == Purity::none) continue;
        ++peels;
        if (pu == Purity::positive) {
            uint64_t item = work[idx].id_sum;
            result.positives.push_back(item);
            peel(item, true);
        } else {
            uint64_t item = field::neg(work[idx].id_sum, p);
            result.negatives.push_back(item);
            peel(item, false);
        }
    }

    result.complete =
        std::all_of(work.begin(), work.end(), [](const Cell& c) { return c.is_zero(); });
    return result;
}

Ibf build_ibf(const IbfParams& params, std::span<const uint64_t> items) {
    Ibf ibf(params);
    ibf.insert_all(items);
    return ibf;
}

Ibf build_ibf_serial(const IbfParams& params, std::span<const uint64_t> items) {
    Ibf ibf(params);
    ibf.insert_all_serial(items);
    return ibf;
}

namespace {

void check_same_params(const Ibf& a, const Ibf& b) {
    if (!(a.params() == b.params()))
        throw std::invalid_argument("subtract: sketch parameters differ");
}

} // namespace

Ibf subtract(const Ibf& a, const Ibf& b) {
    check_same_params(a, b);
    const uint64_t p = a.params().p;
    Ibf out(a.params());
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (ptrdiff_t i = 0; i < static_cast<ptrdiff_t>(out.cells_.size()); ++i) {
        auto idx = static_cast<size_t>(i);
        out.cells_[idx].count = field::sub(a.cells_[idx].count, b.cells_[idx].count, p);
        out.cells_[idx].id_sum = field::sub(a.cells_[idx].id_sum, b.cells_[idx].id_sum, p);
        out.cells_[idx].g_sum = field::sub(a.cells_[idx].g_sum, b.cells_[idx].g_sum, p);
    }
    return out;
}

Ibf subtract_serial(const Ibf& a, const Ibf& b) {
    check_same_params(a, b);
    const uint64_t p = a.params().p;
    Ibf out(a.params());
    for (size_t i = 0; i < out.cells_.size(); ++i) {
        out.cells_[i].count = field::sub(a.cells_[i].count, b.cells_[i].count, p);
        out.cells_[i].id_sum = field::sub(a.cells_[i].id_sum, b.cells_[i].id_sum, p);
        out.cells_[i].g_sum = field::sub(a.cells_[i].g_sum, b.cells_[i].g_sum, p);
    }
    return out;
}

namespace {

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
    out.push_back(static_cast<uint8_t>(v));
    out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_u64(std::vector<uint8_t>& out, uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint64_t get_u64(std::span<const uint8_t> bytes, size_t off) {
    uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= static_cast<uint64_t>(bytes[off + i]) << (8 * i);
    return v;
}

} // namespace

void write_params_header(std::vector<uint8_t>& out, const IbfParams& params) {
    out.push_back('P');
    out.push_back('I');
    out.push_back('B');
    out.push_back('F');
    out.push_back(kIbfFormatVersion);
    put_u32(out, params.t);
    put_u16(out, params.k);
    put_u16(out, params.lambda);
    put_u64(out, params.p);
    out.insert(out.end(), params.hash_seed.begin(), params.hash_seed.end());
}

IbfParams read_params_header(std::span<const uint8_t> bytes, size_t& offset) {
    if (bytes.size() < offset + kIbfHeaderSize) throw WireError("ibf header truncated");
    const uint8_t* h = bytes.data() + offset;
    if (std::memcmp(h, "PIBF", 4) != 0) throw WireError("bad ibf magic");
    if (h[4] != kIbfFormatVersion) throw WireError("unsupported ibf version");

    IbfParams params;
    params.t = static_cast<uint32_t>(h[5]) | static_cast<uint32_t>(h[6]) << 8 |
               static_cast<uint32_t>(h[7]) << 16 | static_cast<uint32_t>(h[8]) << 24;
    params.k = static_cast<uint16_t>(h[9] | h[10] << 8);
    params.lambda = static_cast<uint16_t>(h[11] | h[12] << 8);
    params.p = get_u64(bytes, offset + 13);
    std::copy(h + 21, h + 37, params.hash_seed.begin());
    offset += kIbfHeaderSize;
    return params;
}

std::vector<uint8_t> to_bytes(const Ibf& ibf) {
    std::vector<uint8_t> out;
    out.reserve(kIbfHeaderSize + ibf.cells().size() * 24);
    write_params_header(out, ibf.params());
    for (const Cell& c : ibf.cells()) {
        put_u64(out, c.count);
        put_u64(out, c.id_sum);
        put_u64(out, c.g_sum);
    }
    return out;
}

Ibf ibf_from_bytes(std::span<const uint8_t> bytes) {
    size_t off = 0;
    IbfParams params = read_params_header(bytes, off);
    try {
        validate(params);
    } catch (const std::invalid_argument& e) {
        throw WireError(std::string("ibf header invalid: ") + e.what());
    }
    if (bytes.size() != off + static_cast<size_t>(params.t) * 24)
        throw WireError("ibf body length mismatch");

    std::vector<Cell> cells(params.t);
    for (uint32_t i = 0; i < params.t; ++i) {
        cells[i].count = get_u64(bytes, off);
        cells[i].id_sum = get_u64(bytes, off + 8);
        cells[i].g_sum = get_u64(bytes, off + 16);
        if (cells[i].count >= params.p || cells[i].id_sum >= params.p ||
            cells[i].g_sum >= params.p)
            throw WireError("ibf cell field not a canonical residue");
        off += 24;
    }
    return Ibf(params, std::move(cells));
}

} // namespace pibf
