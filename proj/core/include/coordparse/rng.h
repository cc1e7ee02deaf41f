#ifndef COORDPARSE_RNG_H_
#define COORDPARSE_RNG_H_

#include <cstdint>
#include <random>
#include <vector>

namespace coordparse {

// mt19937_64 with hand-rolled draw helpers. The standard distributions are
// implementation-defined, which would break bit-identical reruns across
// toolchains; everything here is pinned to the raw engine output.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }

  // Uniform in [0, 1) with 53 significant bits.
  double uniform() { return (bits() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n), n >= 1. Rejection-free modulo is fine here:
  // n is tiny compared to 2^64, the bias is unobservable.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(bits() % n); }

  bool bernoulli(double p) { return uniform() < p; }

  // Draw from discrete weights (need not be normalized).
  std::size_t categorical(const std::vector<double>& weights);

  // Fisher-Yates; std::shuffle is implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = index(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline std::size_t Rng::categorical(const std::vector<double>& weights) {
  double total = 0;
  for (double w : weights) total += w;
  double r = uniform() * total;
  double acc = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (r < acc) return i;
  }
  return weights.empty() ? 0 : weights.size() - 1;
}

}  // namespace coordparse

#endif  // COORDPARSE_RNG_H_
