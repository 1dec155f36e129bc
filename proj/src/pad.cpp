#include "pibf/pad.hpp"

#include <stdexcept>

#include <sodium.h>

#include "pibf/field.hpp"

namespace pibf {

void Pad::zeroize() {
    if (!cells_.empty()) sodium_memzero(cells_.data(), cells_.size() * sizeof(Cell));
}

Pad make_pad(const IbfParams& params, EntropySource& entropy) {
    validate(params);
    Pad pad;
    pad.params_ = params;
    pad.cells_.resize(params.t);
    for (Cell& c : pad.cells_) {
        c.count = entropy.uniform_below(params.p);
        c.id_sum = entropy.uniform_below(params.p);
        c.g_sum = entropy.uniform_below(params.p);
    }
    return pad;
}

Ibf mask_build(Pad& pad, std::span<const uint64_t> items) {
    if (pad.cells_.empty()) throw std::invalid_argument("mask_build: pad is empty or wiped");
    if (pad.spent_) throw std::invalid_argument("mask_build: pad already used for a query");
    pad.spent_ = true;

    Ibf masked(pad.params_, pad.cells_);
    masked.insert_all(items);
    return masked;
}

Ibf unmask(const Ibf& response, const Pad& pad) {
    if (!(response.params() == pad.params_))
        throw std::invalid_argument("unmask: sketch parameters differ from pad");
    const uint64_t p = pad.params_.p;
    std::vector<Cell> cells(response.cells().size());
    for (size_t i = 0; i < cells.size(); ++i) {
        cells[i].count = field::sub(response.cells()[i].count, pad.cells_[i].count, p);
        cells[i].id_sum = field::sub(response.cells()[i].id_sum, pad.cells_[i].id_sum, p);
        cells[i].g_sum = field::sub(response.cells()[i].g_sum, pad.cells_[i].g_sum, p);
    }
    return Ibf(pad.params_, std::move(cells));
}

} // namespace pibf
