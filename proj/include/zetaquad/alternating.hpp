#pragma once

// Convergence acceleration for alternating series sum_{n>=0} (-1)^n b_n.
//
// Uses the Cohen / Rodriguez Villegas / Zagier weighting: with d_n the
// Chebyshev-derived normaliser, the n-term estimate has error of order
// (3 + sqrt 8)^-n whenever b_n is a moment sequence of a (possibly complex)
// measure on [0, 1]. Power-law terms (n + q)^-s with Re q, Re s > 0 qualify.

#include <cmath>
#include <complex>
#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>

#include "errors.hpp"

namespace zetaquad {

template <class T>
struct AlternatingSum {
  T value{};
  std::size_t terms = 0;
  bool converged = false;
};

/// Single CVZ pass with exactly n terms.
template <class Term>
auto alternating_sum_fixed(Term&& term, std::size_t n) {
  using T = decltype(term(std::size_t{0}));
  double d = std::pow(3.0 + std::sqrt(8.0), static_cast<double>(n));
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  T s{};
  const double nn = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double kk = static_cast<double>(k);
    c = b - c;
    s += c * term(k);
    b = (kk + nn) * (kk - nn) * b / ((kk + 0.5) * (kk + 1.0));
  }
  return T(s / d);
}

/// Accelerated sum of (-1)^n term(n). The term count grows by a fixed step
/// until two successive estimates agree to `rel_tol` of the larger magnitude,
/// or to the rounding floor set by |term(0)|. Throws ConvergenceError if
/// `n_cap` is reached first.
template <class Term>
auto alternating_sum(Term&& term, std::size_t n_cap = 200,
                     double rel_tol = 1e-14) {
  using T = decltype(term(std::size_t{0}));
  constexpr std::size_t step = 8;
  AlternatingSum<T> out;
  T prev = alternating_sum_fixed(term, step);
  const double scale = std::abs(term(0));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t n = 2 * step; n <= n_cap; n += step) {
    const T cur = alternating_sum_fixed(term, n);
    const double diff = std::abs(cur - prev);
    const double mag = std::max(std::abs(cur), std::abs(prev));
    const double floor = 4.0 * static_cast<double>(n) * eps * scale;
    if (diff <= std::max(rel_tol * mag, floor)) {
      out.value = cur;
      out.terms = n;
      out.converged = true;
      return out;
    }
    prev = cur;
  }
  throw ConvergenceError("alternating series did not settle within " +
                         std::to_string(n_cap) + " terms");
}

}  // namespace zetaquad
