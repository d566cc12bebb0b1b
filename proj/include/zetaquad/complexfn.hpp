#pragma once

// Branch-aware complex elementary functions, the Gamma family and Bernoulli
// numbers. Double precision throughout, except that the Bernoulli table is
// built and kept in long double for the Hurwitz summation.

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "errors.hpp"

namespace zetaquad {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

/// A nonzero constant held in polar form so that its logarithm lives on a
/// fixed sheet: log(a) = ln r + i*theta with theta in [0, 2*pi), never
/// reduced to the principal range.
class BranchedConstant {
 public:
  BranchedConstant() = default;

  BranchedConstant(double r, double theta) : r_(r), theta_(theta) {
    if (!(r > 0.0) || !std::isfinite(r)) {
      throw std::invalid_argument("BranchedConstant: modulus must be finite and > 0");
    }
    if (!(theta >= 0.0 && theta < two_pi)) {
      throw std::invalid_argument("BranchedConstant: theta must lie in [0, 2*pi)");
    }
  }

  /// Positive real constant (theta = 0).
  static BranchedConstant real(double r) { return {r, 0.0}; }

  double r() const { return r_; }
  double theta() const { return theta_; }

  Complex log() const { return {std::log(r_), theta_}; }
  Complex value() const { return std::polar(r_, theta_); }

  bool is_positive_real() const { return theta_ == 0.0; }
  bool is_one() const { return r_ == 1.0 && theta_ == 0.0; }

  friend bool operator==(const BranchedConstant&, const BranchedConstant&) = default;

 private:
  double r_ = 1.0;
  double theta_ = 0.0;
};

/// ln|z| + i Arg z with Arg in (-pi, pi]. A negative real with a signed-zero
/// imaginary part still maps to +pi.
inline Complex principal_log(Complex z) {
  if (z == Complex{0.0, 0.0}) {
    throw DomainError("principal_log: logarithm of zero");
  }
  double arg = std::arg(z);
  if (arg <= -pi) arg = pi;
  return {std::log(std::abs(z)), arg};
}

/// z^k = exp(k * principal_log(z)); 0^k = 0 for Re k > 0.
inline Complex complex_pow(Complex z, Complex k) {
  if (z == Complex{0.0, 0.0}) {
    if (k.real() > 0.0) return {0.0, 0.0};
    throw DomainError("complex_pow: zero base requires Re(k) > 0");
  }
  return std::exp(k * principal_log(z));
}

/// sin(pi x) for real x with exact reduction, so integers give exact zeros.
inline double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < -1.0) r += 2.0;
  if (r > 1.0) r -= 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) return std::sin(pi * (1.0 - r));
  if (r < -0.5) return -std::sin(pi * (1.0 + r));
  return std::sin(pi * r);
}

inline double cos_pi(double x) { return sin_pi(x + 0.5); }

/// sin(pi z) for complex z.
inline Complex sin_pi(Complex z) {
  const double y = pi * z.imag();
  return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

inline bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

inline bool is_integer(Complex z) {
  return z.imag() == 0.0 && std::floor(z.real()) == z.real();
}

namespace detail {

// Lanczos g = 7, nine terms.
inline constexpr double lanczos_g = 7.0;
inline constexpr std::array<double, 9> lanczos_coef = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

inline Complex gamma_right(Complex z) {
  z -= 1.0;
  Complex x = lanczos_coef[0];
  for (std::size_t i = 1; i < lanczos_coef.size(); ++i) {
    x += lanczos_coef[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + lanczos_g + 0.5;
  return std::sqrt(two_pi) * std::exp((z + 0.5) * std::log(t) - t) * x;
}

// B_2j / (2j (2j - 1)), j = 1..8
inline constexpr std::array<double, 8> stirling_coef = {
    1.0 / 12.0,       -1.0 / 360.0,          1.0 / 1260.0,  -1.0 / 1680.0,
    1.0 / 1188.0,     -691.0 / 360360.0,     1.0 / 156.0,   -3617.0 / 122400.0};

inline Complex log_gamma_stirling(Complex w) {
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = stirling_coef.back();
  for (std::size_t j = stirling_coef.size() - 1; j-- > 0;) {
    series = series * inv2 + stirling_coef[j];
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(two_pi) + series * inv;
}

}  // namespace detail

/// Gamma function. Lanczos approximation on Re z >= 1/2, reflection
/// Gamma(z) = pi / (sin(pi z) Gamma(1 - z)) to the left of that line.
inline Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at non-positive integer " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    return pi / (sin_pi(z) * detail::gamma_right(1.0 - z));
  }
  return detail::gamma_right(z);
}

/// Principal branch of log Gamma: analytic on C \ (-inf, 0], real on the
/// positive axis. On the negative axis the value is the limit from above.
/// Built from the upward recurrence and the Stirling series at Re w >= 15.
inline Complex log_gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("log_gamma: pole at non-positive integer " + std::to_string(z.real()));
  }
  constexpr double shift_to = 15.0;
  Complex shift_sum{0.0, 0.0};
  Complex w = z;
  while (w.real() < shift_to) {
    shift_sum += principal_log(w);
    w += 1.0;
  }
  return detail::log_gamma_stirling(w) - shift_sum;
}

/// B_0..B_n with B_1 = -1/2.
struct BernoulliTable {
  std::vector<double> values;

  double operator[](std::size_t n) const { return values.at(n); }
  std::size_t size() const { return values.size(); }
};

inline constexpr std::size_t bernoulli_cap = 200;

namespace detail {

// zeta(m) for integer m >= 2: partial sum to K plus the Euler-Maclaurin
// remainder through the B_6 term. The first omitted term is below 1e-22.
inline long double zeta_int_ld(unsigned m) {
  constexpr unsigned K = 100;
  const long double mm = m;
  long double sum = 0.0L;
  for (unsigned k = K - 1; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -mm);
  const long double x = K;
  const long double xm = std::pow(x, -mm);
  sum += x * xm / (mm - 1.0L) + 0.5L * xm + mm * xm / (12.0L * x);
  sum -= mm * (mm + 1) * (mm + 2) * xm / (720.0L * x * x * x);
  sum += mm * (mm + 1) * (mm + 2) * (mm + 3) * (mm + 4) * xm / (30240.0L * x * x * x * x * x);
  return sum;
}

// B_2n = (-1)^(n+1) 2 (2n)! zeta(2n) / (2 pi)^(2n). Avoids the cancellation
// of the defining recurrence.
inline std::vector<long double> build_bernoulli(std::size_t n_max) {
  constexpr long double two_pi_ld = 6.283185307179586476925286766559005768L;
  std::vector<long double> b(n_max + 1, 0.0L);
  b[0] = 1.0L;
  if (n_max >= 1) b[1] = -0.5L;
  long double fact_ratio = 1.0L;  // (2n)! / (2 pi)^(2n)
  for (std::size_t n = 1; 2 * n <= n_max; ++n) {
    const long double m = static_cast<long double>(2 * n);
    fact_ratio *= ((m - 1.0L) / two_pi_ld) * (m / two_pi_ld);
    const long double sign = (n % 2 == 1) ? 1.0L : -1.0L;
    b[2 * n] = sign * 2.0L * fact_ratio * zeta_int_ld(static_cast<unsigned>(2 * n));
  }
  return b;
}

inline const std::vector<long double>& bernoulli_cache_ld() {
  static const std::vector<long double> table = build_bernoulli(bernoulli_cap);
  return table;
}

inline const std::vector<double>& bernoulli_cache() {
  static const std::vector<double> table = [] {
    const auto& ld = bernoulli_cache_ld();
    return std::vector<double>(ld.begin(), ld.end());
  }();
  return table;
}

}  // namespace detail

/// Bernoulli numbers B_0..B_{n_max}, n_max <= 200.
inline BernoulliTable bernoulli_numbers(std::size_t n_max) {
  if (n_max > bernoulli_cap) {
    throw SizeError("bernoulli_numbers: n_max " + std::to_string(n_max) +
                    " exceeds cap " + std::to_string(bernoulli_cap));
  }
  const auto& all = detail::bernoulli_cache();
  return {std::vector<double>(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(n_max + 1))};
}

/// Bernoulli polynomial B_m(x) = sum_j C(m, j) B_j x^(m - j).
inline Complex bernoulli_polynomial(std::size_t m, Complex x) {
  const auto& b = detail::bernoulli_cache();
  if (m > bernoulli_cap) throw SizeError("bernoulli_polynomial: degree exceeds cap");
  // Horner in x over the coefficients C(m, j) B_j, j = 0..m.
  Complex acc{0.0, 0.0};
  double binom = 1.0;
  for (std::size_t j = 0; j <= m; ++j) {
    acc = acc * x + binom * b[j];
    binom = binom * static_cast<double>(m - j) / static_cast<double>(j + 1);
  }
  return acc;
}

}  // namespace zetaquad
