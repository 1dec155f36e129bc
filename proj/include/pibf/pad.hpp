#pragma once

#include <span>

#include "pibf/entropy.hpp"
#include "pibf/ibf.hpp"

namespace pibf {

// One-time pad shaped like a table: every field of every cell an
// independent uniform residue. Adding a set on top of a fresh pad yields a
// table whose distribution is uniform regardless of the set, so the masked
// query leaks nothing. A pad backs at most one query; it is kept by its
// owner to unmask the responses and wiped on destruction.
class Pad {
public:
    Pad(const Pad&) = delete;
    Pad& operator=(const Pad&) = delete;
    Pad(Pad&&) noexcept = default;
    Pad& operator=(Pad&&) noexcept = default;
    ~Pad() { zeroize(); }

    const IbfParams& params() const { return params_; }
    const std::vector<Cell>& cells() const { return cells_; }
    bool spent() const { return spent_; }

    void zeroize();

private:
    friend Pad make_pad(const IbfParams& params, EntropySource& entropy);
    friend Ibf mask_build(Pad& pad, std::span<const uint64_t> items);
    friend Ibf unmask(const Ibf& response, const Pad& pad);

    Pad() = default;

    IbfParams params_;
    std::vector<Cell> cells_;
    bool spent_ = false;
};

// Draws 3t independent uniform residues. The entropy source must be the
// system CSPRNG in protocol use; seeded sources are for tests.
Pad make_pad(const IbfParams& params, EntropySource& entropy);

// Copy of the pad with all items inserted. Marks the pad spent; a second
// build from the same pad throws, since pad reuse across queries forfeits
// the masking guarantee.
Ibf mask_build(Pad& pad, std::span<const uint64_t> items);

// subtract(response, pad): recovers a plain table ready for decoding.
Ibf unmask(const Ibf& response, const Pad& pad);

} // namespace pibf
