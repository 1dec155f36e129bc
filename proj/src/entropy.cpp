#include "pibf/entropy.hpp"

#include <cstring>
#include <mutex>
#include <stdexcept>

#include <sodium.h>

#include "pibf/siphash.hpp"

namespace pibf {

uint64_t EntropySource::next_u64() {
    std::array<uint8_t, 8> buf;
    fill(buf);
    uint64_t v;
    std::memcpy(&v, buf.data(), 8);
    return v;
}

uint64_t EntropySource::uniform_below(uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
    // Rejection sampling over the largest multiple of bound below 2^64.
    const uint64_t limit = bound * (~uint64_t{0} / bound);
    for (;;) {
        uint64_t v = next_u64();
        if (v < limit) return v % bound;
    }
}

SystemEntropy::SystemEntropy() {
    static std::once_flag once;
    std::call_once(once, [] {
        if (sodium_init() < 0) throw std::runtime_error("sodium_init failed");
    });
}

void SystemEntropy::fill(std::span<uint8_t> out) {
    randombytes_buf(out.data(), out.size());
}

InsecureSeededEntropy::InsecureSeededEntropy(uint64_t seed, uint64_t stream) {
    std::memcpy(key_.data(), &seed, 8);
    std::memcpy(key_.data() + 8, &stream, 8);
}

void InsecureSeededEntropy::fill(std::span<uint8_t> out) {
    size_t off = 0;
    while (off < out.size()) {
        uint64_t block = siphash24_u64_pair(key_, counter_++, 0x9e3779b97f4a7c15ULL);
        size_t n = std::min<size_t>(8, out.size() - off);
        std::memcpy(out.data() + off, &block, n);
        off += n;
    }
}

InsecureSeededEntropy InsecureSeededEntropy::for_trial(uint64_t master_seed, uint64_t trial) {
    // Counter-mode split: the trial index becomes the stream id, so grids
    // parallelize without coordinating generator state.
    return InsecureSeededEntropy(master_seed, 0x7472ed61u ^ trial);
}

} // namespace pibf
