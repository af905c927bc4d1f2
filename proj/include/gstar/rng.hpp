#pragma once

// Seedable, platform-stable randomness. All randomness in the project flows
// from a single root seed through derive_seed(), so any cell of an experiment
// can be reproduced in isolation.
//
// Generator: xoshiro256** (Blackman/Vigna), state seeded from SplitMix64.
// Substream derivation: derive_seed(root, {a, b, ...}) folds each label into
// the state with the SplitMix64 finalizer, i.e.
//     s = mix(root); for each label L: s = mix(s ^ mix(L));
// Everything below uses only integer ops, IEEE double +,*,/ and sqrt, so the
// streams are bit-identical across conforming platforms.

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gstar {

constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::initializer_list<std::uint64_t> labels) {
    std::uint64_t s = splitmix64_mix(root);
    for (std::uint64_t l : labels) s = splitmix64_mix(s ^ splitmix64_mix(l));
    return s;
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) {
        // Expand the seed with SplitMix64; xoshiro requires a nonzero state.
        std::uint64_t sm = seed;
        for (auto& w : state_) {
            sm += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = sm;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            w = z ^ (z >> 31);
        }
        state_[0] |= 1;
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, bound), bias-free via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(next_below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t state_[4];
};

// Binomial(trials, p) by CDF inversion, splitting the trial count until the
// mean is small enough that (1-p)^trials cannot underflow. Uses only IEEE
// basic arithmetic; O(mean) time, one uniform per leaf.
std::uint64_t sample_binomial(Rng& rng, std::uint64_t trials, double p);

}  // namespace gstar
