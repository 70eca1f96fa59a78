#pragma once

#include <cstdint>
#include <random>

namespace pcd {

using Seed = std::uint64_t;

// Independent streams derived from one user seed. Each consumer owns a
// fixed stream id so that changing how one stream is used never shifts
// the draws seen by another.
enum class Stream : std::uint64_t {
    kInit = 0,       // initial assignment
    kSelect = 1,     // vertex selection during local search
    kGenerate = 2,   // m-SSBM edge draws
};

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Platform-stable generator: std::mt19937_64 has a fully specified output
// sequence, and the two distributions below are implemented here rather
// than through <random> distributions, whose algorithms are
// implementation-defined.
//
// Stream splitting rule: engine seed = mix64(mix64(seed) ^ (stream_id + 1)).
class Rng {
public:
    Rng(Seed seed, Stream stream)
        : engine_(mix64(mix64(seed) ^ (static_cast<std::uint64_t>(stream) + 1))) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [0, bound). Lemire's multiply-shift with rejection.
    std::uint64_t below(std::uint64_t bound) {
        __extension__ using u128 = unsigned __int128;
        if (bound <= 1) return 0;
        std::uint64_t x = next();
        u128 m = static_cast<u128>(x) * bound;
        auto low = static_cast<std::uint64_t>(m);
        if (low < bound) {
            const std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold) {
                x = next();
                m = static_cast<u128>(x) * bound;
                low = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace pcd
