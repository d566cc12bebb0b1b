#pragma once

// Double-exponential quadrature for complex-valued integrands.
//
// integrate_finite uses the tanh-sinh map on [a, b]; integrate_semi_infinite
// uses the exp-sinh map t = exp(pi/2 sinh x) on (0, inf). Both reduce the
// problem to a trapezoid sum on the real line whose step is halved until two
// successive levels agree. Endpoints are never evaluated: nodes are generated
// as offsets from the nearer endpoint and any node that rounds onto an
// endpoint is dropped.

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "complexfn.hpp"
#include "errors.hpp"

namespace zetaquad {

struct QuadConfig {
  double atol = 1e-10;
  double rtol = 1e-10;
  std::size_t max_evals = 1'000'000;

  void validate() const {
    if (!(atol >= 1e-15)) throw std::invalid_argument("QuadConfig: atol must be >= 1e-15");
    if (!(rtol >= 1e-15)) throw std::invalid_argument("QuadConfig: rtol must be >= 1e-15");
    if (max_evals < 1 || max_evals > 10'000'000) {
      throw std::invalid_argument("QuadConfig: max_evals must be in [1, 1e7]");
    }
  }
};

struct QuadResult {
  Complex value{0.0, 0.0};
  double err_estimate = 0.0;
  std::size_t n_evals = 0;
  bool converged = false;
};

namespace detail {

struct DeNode {
  double point;
  double weight;  // includes the Jacobian; zero means "skip"
};

inline constexpr int de_min_level = 3;
inline constexpr int de_max_level = 14;
inline constexpr double de_h0 = 0.5;

// Trapezoid refinement over x in [x_lo, x_hi] for the map `node(x)`.
template <class F, class Map>
QuadResult de_refine(F& f, Map node, double x_lo, double x_hi, const QuadConfig& cfg) {
  cfg.validate();
  QuadResult res;
  Complex raw{0.0, 0.0};  // sum of w f over all nodes seen so far
  double raw_abs = 0.0;

  auto visit = [&](double x) {
    const DeNode nd = node(x);
    if (nd.weight == 0.0) return;
    const Complex fx = Complex(f(nd.point));
    ++res.n_evals;
    if (!std::isfinite(fx.real()) || !std::isfinite(fx.imag())) {
      throw DomainError("quadrature: integrand not finite at " + std::to_string(nd.point));
    }
    raw += nd.weight * fx;
    raw_abs += nd.weight * std::abs(fx);
  };

  // Level 0: all multiples of h0.
  const auto j_lo = static_cast<long>(std::ceil(x_lo / de_h0));
  const auto j_hi = static_cast<long>(std::floor(x_hi / de_h0));
  for (long j = j_lo; j <= j_hi; ++j) visit(static_cast<double>(j) * de_h0);

  double h = de_h0;
  Complex prev = h * raw;
  constexpr double eps = std::numeric_limits<double>::epsilon();

  for (int level = 1; level <= de_max_level; ++level) {
    const double h_new = 0.5 * h;
    // New nodes are the odd multiples of h_new inside the range.
    const auto k_lo = static_cast<long>(std::ceil((x_lo / h_new - 1.0) / 2.0));
    const auto k_hi = static_cast<long>(std::floor((x_hi / h_new - 1.0) / 2.0));
    const auto pending = static_cast<std::size_t>(std::max(0L, k_hi - k_lo + 1));
    if (res.n_evals + pending > cfg.max_evals) break;

    for (long k = k_lo; k <= k_hi; ++k) visit(static_cast<double>(2 * k + 1) * h_new);
    h = h_new;

    const Complex cur = h * raw;
    const double roundoff = 64.0 * eps * h * raw_abs;
    res.value = cur;
    res.err_estimate = std::max(std::abs(cur - prev), roundoff);
    prev = cur;
    if (level >= de_min_level &&
        res.err_estimate <= cfg.atol + cfg.rtol * std::abs(cur)) {
      res.converged = true;
      return res;
    }
  }
  if (res.n_evals == 0 || h == de_h0) {
    res.value = h * raw;
    res.err_estimate = INFINITY;
  }
  return res;
}

}  // namespace detail

/// Integral of f over (a, b) by tanh-sinh quadrature. f : double -> Complex
/// (or anything convertible) is only called strictly inside the interval, so
/// integrable algebraic or logarithmic endpoint singularities are fine.
/// Interior singularities must be split out by the caller.
template <class F>
QuadResult integrate_finite(F&& f, double a, double b, const QuadConfig& cfg = {}) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw std::invalid_argument("integrate_finite: need finite a < b");
  }
  const double len = b - a;
  // x -> a + len/2 (1 + tanh(pi/2 sinh x)); distance to the near end is
  // len / (1 + exp(2|v|)).
  auto node = [a, b, len](double x) {
    const double v = 0.5 * pi * std::sinh(x);
    const double e = std::exp(-2.0 * std::abs(v));
    const double dist = len * e / (1.0 + e);
    const double point = (x < 0.0) ? a + dist : b - dist;
    if (!(point > a && point < b) || dist == 0.0) return detail::DeNode{point, 0.0};
    // len/2 * sech^2(v) * pi/2 cosh(x)
    const double sech2 = 4.0 * e / ((1.0 + e) * (1.0 + e));
    return detail::DeNode{point, 0.5 * len * sech2 * 0.5 * pi * std::cosh(x)};
  };
  return detail::de_refine(f, node, -6.2, 6.2, cfg);
}

/// Integral of f over (0, inf) by exp-sinh quadrature. f must decay at least
/// exponentially at infinity with an O(1) rate; an integrable singularity at
/// 0 is allowed. The origin is never evaluated.
template <class F>
QuadResult integrate_semi_infinite(F&& f, const QuadConfig& cfg = {}) {
  auto node = [](double x) {
    const double t = std::exp(0.5 * pi * std::sinh(x));
    if (!(t > 0.0) || !std::isfinite(t)) return detail::DeNode{t, 0.0};
    return detail::DeNode{t, t * 0.5 * pi * std::cosh(x)};
  };
  return detail::de_refine(f, node, -6.9, 3.2, cfg);
}

}  // namespace zetaquad
