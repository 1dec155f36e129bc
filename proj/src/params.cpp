#include "pibf/params.hpp"

#include <cmath>
#include <stdexcept>

#include "pibf/entropy.hpp"

namespace pibf {

namespace {

uint32_t ceil_log2(uint64_t v) {
    uint32_t bits = 0;
    uint64_t x = 1;
    while (x < v) {
        x <<= 1;
        ++bits;
    }
    return bits;
}

} // namespace

void validate_structure(const IbfParams& params) {
    if (params.k < 2) throw std::invalid_argument("params: k must be at least 2");
    if (params.t == 0 || params.t % params.k != 0)
        throw std::invalid_argument("params: t must be a positive multiple of k");
    if (params.p < 3) throw std::invalid_argument("params: p too small");
}

void validate(const IbfParams& params) {
    validate_structure(params);
    uint32_t min_lambda = params.k + ceil_log2(params.k);
    if (params.lambda < min_lambda)
        throw std::invalid_argument("params: lambda below k + ceil(log2 k)");
    if (params.lambda >= 63 || params.p <= (uint64_t{1} << params.lambda))
        throw std::invalid_argument("params: p must exceed 2^lambda");
}

IbfParams make_params(uint32_t tau, double epsilon,
                      std::optional<std::array<uint8_t, 16>> hash_seed,
                      EntropySource* entropy) {
    if (tau < 1) throw std::invalid_argument("make_params: tau must be >= 1");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("make_params: epsilon must be in (0, 1)");

    double ratio = static_cast<double>(tau) / epsilon;
    uint32_t k = static_cast<uint32_t>(std::ceil(std::log2(ratio))) + 1;
    if (k < 2) k = 2;

    uint64_t t = uint64_t{2} * k * tau;
    t = (t + k - 1) / k * k;
    if (t > 0xffffffffULL) throw std::invalid_argument("make_params: table too large");

    IbfParams params;
    params.t = static_cast<uint32_t>(t);
    params.k = static_cast<uint16_t>(k);
    params.lambda = static_cast<uint16_t>(k + ceil_log2(k));
    params.p = field::kDefaultPrime;
    if (hash_seed) {
        params.hash_seed = *hash_seed;
    } else {
        SystemEntropy system;
        EntropySource& src = entropy ? *entropy : static_cast<EntropySource&>(system);
        src.fill(params.hash_seed);
    }
    validate(params);
    return params;
}

uint64_t privacy_threshold(const IbfParams& params, double epsilon) {
    validate(params);
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("privacy_threshold: epsilon must be in (0, 1)");
    if (params.t < 3) throw std::invalid_argument("privacy_threshold: t must be >= 3");

    double t = static_cast<double>(params.t);
    double k = static_cast<double>(params.k);
    double bound =
        1.0 + (t / k) * (std::log(t) + std::log(std::log(t)) + std::log(k) + std::log(1.0 / epsilon));
    return static_cast<uint64_t>(std::ceil(bound));
}

} // namespace pibf
