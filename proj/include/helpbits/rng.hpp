#pragma once

#include <cstdint>

namespace helpbits {

// Deterministic splittable generator built on the SplitMix64 finalizer.
//
// A stream is identified by a 64-bit key; output i is mix(key + i * GOLDEN),
// which is the standard SplitMix64 sequence seeded at the key. Child streams
// derive their key from the parent key and a stream id only, never from the
// parent's position, so every (seed, stream id) pair names the same sequence
// regardless of scheduling or parallelism.
class SplitRng {
public:
    explicit SplitRng(std::uint64_t seed) : key_(mix(seed + kGolden)) {}

    // Child generator for stream `id`, independent of this generator's position.
    SplitRng stream(std::uint64_t id) const {
        return SplitRng(from_key{}, mix(key_ ^ mix(id + kStreamSalt)));
    }

    std::uint64_t next_u64() { return mix(key_ + (++counter_) * kGolden); }

    // Uniform in [0, bound), unbiased via rejection on the top 32 bits.
    std::uint32_t below(std::uint32_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t threshold = (1ull << 32) % bound;
        for (;;) {
            const std::uint32_t r = static_cast<std::uint32_t>(next_u64() >> 32);
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool next_bit() { return next_u64() & 1u; }

    std::uint64_t key() const { return key_; }

private:
    struct from_key {};
    SplitRng(from_key, std::uint64_t key) : key_(key) {}

    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
    static constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ull;

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t key_ = 0;
    std::uint64_t counter_ = 0;
};

}  // namespace helpbits
