#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace lgn {

/// Deterministic random source. All randomness in the pipeline flows through
/// this class so that a run is reproducible from its seed alone. The raw
/// engine is std::mt19937_64 (bit-stable across platforms); the real-valued
/// transforms are hand-rolled because the standard distributions are
/// implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller; caches the second variate.
    double normal() {
        if (has_cache_) {
            has_cache_ = false;
            return cache_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        cache_ = r * std::sin(a);
        has_cache_ = true;
        return r * std::cos(a);
    }

    /// Uniform integer in [0, n) by rejection (unbiased).
    std::uint64_t integer(std::uint64_t n) {
        if (n == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x = gen_();
        while (x >= limit) x = gen_();
        return x % n;
    }

    /// Derive an independent stream for a sub-task (seed mixing via splitmix64).
    Rng fork(std::uint64_t stream) {
        std::uint64_t z = gen_() + 0x9e3779b97f4a7c15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return Rng(z ^ (z >> 31));
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(integer(i));
            std::swap(v[i - 1], v[j]);
        }
    }

  private:
    std::mt19937_64 gen_;
    double cache_ = 0.0;
    bool has_cache_ = false;
};

}  // namespace lgn
