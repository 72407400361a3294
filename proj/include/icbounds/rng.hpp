#pragma once

// Counter-based deterministic randomness. Every consumer derives values
// from (seed, stream, counter) through splitmix64, so batches can be
// evaluated independently and results are identical across platforms.

#include <cmath>
#include <cstdint>

namespace icb {

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline uint64_t derive_stream(uint64_t seed, uint64_t stream) {
    return splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

// Uniform in [0, 1), 53-bit mantissa.
inline double u01(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Sequential generator over a derived stream.
class Rng {
  public:
    Rng(uint64_t seed, uint64_t stream) : state_(derive_stream(seed, stream)) {}

    uint64_t next() {
        state_ = splitmix64(state_);
        return state_;
    }
    double uniform() { return u01(next()); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    // Box-Muller; one value per call, the pair partner is discarded to keep
    // the stream position independent of usage patterns.
    double normal() {
        const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(6.28318530717958647692 * u2);
    }

  private:
    uint64_t state_;
};

}  // namespace icb
