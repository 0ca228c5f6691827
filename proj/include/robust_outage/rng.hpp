#ifndef ROBUST_OUTAGE_RNG_HPP
#define ROBUST_OUTAGE_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>

namespace robust_outage {

/// Counter-based generator: output n is the SplitMix64 finalizer applied
/// to key + n * 0x9E3779B97F4A7C15 (i.e. SplitMix64 evaluated at an
/// arbitrary stream offset). Stateless apart from the counter, so streams
/// can be split across workers without shared mutable state; substream k
/// of seed s uses key s ^ k.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(seed ^ stream) {}

  static std::uint64_t at(std::uint64_t key, std::uint64_t counter) {
    std::uint64_t z = key + counter * 0x9E3779B97F4A7C15ULL + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() { return at(key_, counter_++); }

  /// Repositions the stream; O(1), used to index draws by trial number.
  void jump_to(std::uint64_t counter) { counter_ = counter; }

  /// Uniform double in the open interval (0, 1).
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Circularly-symmetric complex Gaussian with E|z|^2 = 1
  /// (real and imaginary parts independent N(0, 1/2)).
  std::complex<double> next_complex_gaussian() {
    const double r = std::sqrt(-std::log(next_uniform()));
    const double phi = 2.0 * M_PI * next_uniform();
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace robust_outage

#endif
