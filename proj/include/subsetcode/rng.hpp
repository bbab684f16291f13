#pragma once

// Deterministic randomness. The engine is mt19937_64 (bit-exact across
// platforms); the distributions are hand-rolled because the standard
// library's are implementation-defined and would break the byte-identical
// reproducibility contract.

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace subsetcode {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Independent per-trial stream derived from one master seed.
    static Rng for_trial(std::uint64_t master_seed, std::uint64_t trial) {
        return Rng(splitmix64(master_seed) ^ splitmix64(trial + 0x6a09e667f3bcc909ull));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, bound) by rejection; no modulo bias.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng: zero bound");
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Knuth's product method; adequate for desk-scale means.
    unsigned poisson(double mean) {
        if (mean < 0) throw std::invalid_argument("Rng: negative Poisson mean");
        if (mean == 0) return 0;
        double limit = std::exp(-mean);
        unsigned count = 0;
        double prod = uniform01();
        while (prod > limit) {
            ++count;
            prod *= uniform01();
        }
        return count;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace subsetcode
