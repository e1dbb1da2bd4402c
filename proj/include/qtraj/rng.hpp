#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace qtraj {

// Stable seed-splitting hash (splitmix64). Per-trajectory streams are
// derived as derive_seed(master_seed, trajectory_index); this mapping is
// part of the reproducibility contract and must not change.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64(master ^ splitmix64(index + 1));
}

// Deterministic random stream. mt19937_64 output is fully specified by the
// standard; uniform/gaussian conversion is done by hand so that results do
// not depend on the standard library's distribution implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // 53-bit uniform in [0, 1)
  double next_double() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Box-Muller; second variate cached.
  double next_gaussian() {
    if (have_cached_) {
      have_cached_ = false;
      return cached_;
    }
    double u1 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    cached_ = r * std::sin(a);
    have_cached_ = true;
    return r * std::cos(a);
  }

  bool next_bernoulli(double p) { return next_double() < p; }

  // Draw an index from unnormalized nonnegative weights.
  template <class Weights>
  int next_discrete(const Weights& w) {
    double total = 0.0;
    for (double x : w) total += x;
    double u = next_double() * total;
    int last = 0;
    int i = 0;
    for (double x : w) {
      if (x > 0.0) {
        last = i;
        if (u < x) return i;
        u -= x;
      }
      ++i;
    }
    return last;  // u consumed by rounding; return last positive-weight index
  }

 private:
  std::mt19937_64 engine_;
  double cached_ = 0.0;
  bool have_cached_ = false;
};

}  // namespace qtraj
