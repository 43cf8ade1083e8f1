#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace czlab {

/// mt19937_64 with hand-rolled uniforms so that streams depend only on the
/// engine, not on library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }

  std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }
  double sign() { return (eng_() & 1u) ? 1.0 : -1.0; }

  std::array<double, 2> gaussian_pair() {
    double u1 = 0.0;
    do { u1 = uniform(); } while (u1 <= 0.0);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 6.283185307179586476925286766559 * uniform();
    return {r * std::cos(t), r * std::sin(t)};
  }

  std::vector<double> direction(std::size_t d) {
    std::vector<double> v(d);
    double s = 0.0;
    do {
      for (std::size_t i = 0; i < d; i += 2) {
        auto [a, b] = gaussian_pair();
        v[i] = a;
        if (i + 1 < d) v[i + 1] = b;
      }
      s = 0.0;
      for (double x : v) s += x * x;
    } while (s == 0.0);
    const double inv = 1.0 / std::sqrt(s);
    for (double& x : v) x *= inv;
    return v;
  }

  std::complex<double> unit_phase() {
    const double t = 6.283185307179586476925286766559 * uniform();
    return {std::cos(t), std::sin(t)};
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace czlab
