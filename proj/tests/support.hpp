#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <random>

#include <zetaquad/complexfn.hpp>

namespace zqtest {

using zetaquad::Complex;

// |x - y| <= atol + rtol * max(|x|, |y|)
inline bool close(Complex x, Complex y, double atol, double rtol) {
  return std::abs(x - y) <= atol + rtol * std::max(std::abs(x), std::abs(y));
}

inline double rel(Complex got, Complex want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    const double re = uniform(re_lo, re_hi);
    return {re, uniform(im_lo, im_hi)};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace zqtest
