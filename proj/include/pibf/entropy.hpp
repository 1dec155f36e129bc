#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace pibf {

// Byte source for pads, key generation and encryption randomness.
class EntropySource {
public:
    virtual ~EntropySource() = default;
    virtual void fill(std::span<uint8_t> out) = 0;

    uint64_t next_u64();
    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t uniform_below(uint64_t bound);
};

// Operating-system CSPRNG (libsodium). The only source protocol code
// accepts for pads and keys.
class SystemEntropy final : public EntropySource {
public:
    SystemEntropy();
    void fill(std::span<uint8_t> out) override;
};

// Deterministic counter-mode stream for tests and experiments. NOT a
// CSPRNG; the name is deliberately off-putting and the CLI only enables it
// behind --insecure-test-keys / --seed.
class InsecureSeededEntropy final : public EntropySource {
public:
    explicit InsecureSeededEntropy(uint64_t seed, uint64_t stream = 0);
    void fill(std::span<uint8_t> out) override;

    // Per-trial derivation: independent stream for (master seed, counter),
    // stable no matter which thread runs the trial.
    static InsecureSeededEntropy for_trial(uint64_t master_seed, uint64_t trial);

private:
    std::array<uint8_t, 16> key_;
    uint64_t counter_ = 0;
};

} // namespace pibf
