#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "pibf/field.hpp"

namespace pibf {

class EntropySource;

// Sketch geometry shared by every table in a reconciliation session. Both
// sides must hold identical values, including the hash seed, before any of
// their tables may be combined.
struct IbfParams {
    uint32_t t = 0;      // cell count, multiple of k
    uint16_t k = 0;      // number of hash functions, >= 2
    uint16_t lambda = 0; // checksum bit width, >= k + ceil(log2 k)
    uint64_t p = field::kDefaultPrime;
    std::array<uint8_t, 16> hash_seed{};

    bool operator==(const IbfParams&) const = default;
};

// Shape checks only: t > 0 and t % k == 0, k >= 2, p >= 3. Enough to build
// and combine tables; algebraic tests use tiny fields that fail the decode
// sizing below.
void validate_structure(const IbfParams& params);

// Full invariants for decodable sketches: structure plus
// lambda >= k + ceil(log2 k) and p > 2^lambda. Enforced wherever a table
// crosses a module or wire boundary.
void validate(const IbfParams& params);

// Sizing rule for decoding a symmetric difference of up to tau elements
// with failure probability epsilon: k = ceil(log2(tau/epsilon)) + 1 and
// t = 2*k*tau rounded up to a multiple of k. The seed is drawn fresh unless
// the caller supplies one.
IbfParams make_params(uint32_t tau, double epsilon,
                      std::optional<std::array<uint8_t, 16>> hash_seed = std::nullopt,
                      EntropySource* entropy = nullptr);

// Minimum number of stored elements for which, with probability at least
// 1 - epsilon, no cell of the table is singly occupied (so peeling cannot
// start): ceil(1 + (t/k) * (ln t + ln ln t + ln k + ln(1/epsilon))).
uint64_t privacy_threshold(const IbfParams& params, double epsilon);

} // namespace pibf
