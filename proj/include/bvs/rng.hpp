#ifndef BVS_RNG_HPP
#define BVS_RNG_HPP

#include <cstdint>
#include <random>

namespace bvs {

// Mixes a 64-bit value through the SplitMix64 finalizer. Used for seeding and
// for deriving independent child streams from a master seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Child seed for stream `k` of a master seed (splittable counter scheme).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return mix_seed(master ^ mix_seed(k + 1));
}

// Deterministic random stream. The engine is std::mt19937_64 (bit-exact per
// the C++ standard); all distribution transforms are implemented here because
// the standard library distributions are implementation-defined.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(mix_seed(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    // Unbiased integer in [0, n). Rejection method, n >= 1.
    std::uint64_t uniform_below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller; the paired draw is cached.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    bool bernoulli(double prob) { return uniform() < prob; }

    // Poisson draw; Knuth's product method for small means, Hormann's PTRS
    // transformed rejection otherwise.
    std::int64_t poisson(double mean);

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace bvs

#endif
