#pragma once

#include <cstdint>
#include <stdexcept>

namespace berge {

// One step of the splitmix64 sequence, used to expand 64-bit seeds into
// generator state.
inline uint64_t splitmix64_next(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/**
 * Deterministic seedable generator: xoshiro256** with its state expanded
 * from the 64-bit seed via splitmix64. Bounded draws use rejection
 * sampling, so every output is fully determined by the documented
 * algorithm and the seed. Independent streams come from derive(tag).
 */
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed) {
        uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    uint64_t next() {
        uint64_t result = rotl(state_[1] * 5, 7) * 9;
        uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Unbiased draw from [0, bound) by rejection.
    uint64_t below(uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Child stream for a tag; distinct tags give independent streams and the
    // parent state is left untouched.
    Rng derive(uint64_t tag) const {
        uint64_t mix = seed_ ^ (0x9e3779b97f4a7c15ull * (tag + 1));
        return Rng(splitmix64_next(mix));
    }

    uint64_t seed() const { return seed_; }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t seed_;
    uint64_t state_[4];
};

}  // namespace berge
