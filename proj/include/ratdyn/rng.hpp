#ifndef RATDYN_RNG_HPP
#define RATDYN_RNG_HPP

#include <complex>
#include <cstdint>

namespace ratdyn {

// Self-contained splitmix64 generator. We avoid <random> engines/distributions
// so that streams are bit-identical across platforms and standard libraries,
// which the reproducibility guarantees of the reports depend on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in {0, ..., n-1}
    std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

    // uniform in the complex square [-1,1)^2
    std::complex<double> next_in_square() {
        double re = 2.0 * next_double() - 1.0;
        double im = 2.0 * next_double() - 1.0;
        return {re, im};
    }

    // uniform in the closed unit disk (rejection)
    std::complex<double> next_in_disk() {
        for (;;) {
            std::complex<double> z = next_in_square();
            if (std::norm(z) <= 1.0) return z;
        }
    }

    // Derive an independent substream; used to give each parallel work item
    // its own generator so results do not depend on scheduling.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        Rng mix(seed ^ (0x94d049bb133111ebULL * (stream + 1)));
        mix.next_u64();
        return mix.next_u64();
    }

    static Rng substream(std::uint64_t seed, std::uint64_t stream) { return Rng(derive(seed, stream)); }

  private:
    std::uint64_t state_;
};

}  // namespace ratdyn

#endif
