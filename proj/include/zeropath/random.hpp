#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace zeropath {

// Deterministic RNG. Only raw mt19937_64 draws are used; the std <random>
// distributions are not guaranteed to produce identical streams across
// standard libraries, these helpers are.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }

  // Uniform in [0, n), rejection-free modulo bias is fine for test sizes but
  // we reject anyway to keep draws exact.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("below(0)");
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = eng_();
    while (x >= limit) x = eng_();
    return x % n;
  }

  int in(int lo, int hi) {  // inclusive
    if (lo > hi) throw std::invalid_argument("empty range");
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T>
  const T& pick(const std::vector<T>& xs) {
    if (xs.empty()) throw std::invalid_argument("pick from empty");
    return xs[static_cast<size_t>(below(xs.size()))];
  }

  // k distinct elements, order of first draw.
  template <typename T>
  std::vector<T> sample(std::vector<T> xs, size_t k) {
    if (k > xs.size()) throw std::invalid_argument("sample larger than pool");
    std::vector<T> out;
    out.reserve(k);
    for (size_t i = 0; i < k; ++i) {
      size_t j = i + static_cast<size_t>(below(xs.size() - i));
      std::swap(xs[i], xs[j]);
      out.push_back(xs[i]);
    }
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace zeropath
