#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace minktree {

/// Deterministic random stream. Uniform and normal variates are derived from
/// raw mt19937_64 output by fixed formulas, so traces replay bit-for-bit for
/// a given seed on a given build.
class Rng {
  public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    int uniformInt(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

    /// Standard normal via Box-Muller (cached spare).
    double normal() {
        if (haveSpare_) {
            haveSpare_ = false;
            return spare_;
        }
        double u1 = uniform(), u2 = uniform();
        while (u1 == 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        haveSpare_ = true;
        return r * std::cos(a);
    }

    /// Independent substream seed (splitmix64 of base + index).
    static uint64_t substream(uint64_t base, uint64_t index) {
        uint64_t z = base + 0x9e3779b97f4a7c15ull * (index + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 gen_;
    bool haveSpare_ = false;
    double spare_ = 0;
};

}  // namespace minktree
