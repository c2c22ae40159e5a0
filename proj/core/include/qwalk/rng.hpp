#pragma once

#include <cstdint>

namespace qwalk {

// Counter-based random numbers: every draw is a pure hash of
// (seed, stream, step, slot), so any worker can evaluate any draw in any
// order and reproduce it bit for bit. Stream 0 belongs to standalone
// configuration sampling; Monte Carlo trajectory t uses stream t + 1.
//
// The mixer is the splitmix64 finalizer applied after folding in each
// coordinate; it passes the usual avalanche checks and is plenty for
// Bernoulli and inverse-CDF sampling.
class CounterRng {
  public:
    static constexpr std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static constexpr std::uint64_t hash(std::uint64_t seed, std::uint64_t stream,
                                        std::uint64_t step, std::uint64_t slot) {
        std::uint64_t h = mix(seed);
        h = mix(h ^ (stream + 0x632be59bd9b4e019ULL));
        h = mix(h ^ (step + 0x9e6c63d0a9de9951ULL));
        h = mix(h ^ (slot + 0xc2b2ae3d27d4eb4fULL));
        return h;
    }

    // Uniform double in [0, 1) with 53 random bits.
    static constexpr double uniform(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t step, std::uint64_t slot) {
        return static_cast<double>(hash(seed, stream, step, slot) >> 11) *
               0x1.0p-53;
    }
};

}  // namespace qwalk
