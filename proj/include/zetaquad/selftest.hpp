#pragma once

// Runtime invariant checks for every module, seeded and deterministic.
// Backs the `selftest` CLI command.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "complexfn.hpp"
#include "hurwitz.hpp"
#include "identities.hpp"
#include "quad.hpp"

namespace zetaquad {

struct CheckResult {
  std::string name;
  double worst = 0.0;  ///< largest observed error measure
  double limit = 0.0;  ///< acceptance threshold for `worst`
  bool passed = false;
};

namespace detail {

inline double rel_err(Complex got, Complex want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

inline Complex random_away_from_poles(std::mt19937_64& rng, double half_width) {
  std::uniform_real_distribution<double> u(-half_width, half_width);
  for (;;) {
    const Complex z{u(rng), u(rng)};
    const double nearest = std::round(z.real());
    const double dist = std::abs(z - Complex{nearest, 0.0});
    // Poles of Gamma(z) and Gamma(1-z) sit on all integers.
    if (dist >= 0.1) return z;
  }
}

template <class Body>
CheckResult run_check(std::string name, double limit, Body&& body) {
  CheckResult r{std::move(name), 0.0, limit, false};
  try {
    r.worst = body();
    r.passed = r.worst <= limit;
  } catch (const std::exception&) {
    r.worst = INFINITY;
  }
  return r;
}

}  // namespace detail

inline std::vector<CheckResult> run_selftest(std::uint64_t seed = 20240611) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  std::vector<Complex> gamma_sample;
  for (int i = 0; i < 100; ++i) gamma_sample.push_back(detail::random_away_from_poles(rng, 5.0));

  out.push_back(detail::run_check("gamma reflection", 1e-12, [&] {
    double worst = 0.0;
    for (const Complex z : gamma_sample) {
      const Complex lhs = gamma(z) * gamma(1.0 - z) * sin_pi(z) / pi;
      worst = std::max(worst, std::abs(lhs - 1.0));
    }
    return worst;
  }));
  out.push_back(detail::run_check("gamma recurrence", 1e-12, [&] {
    double worst = 0.0;
    for (const Complex z : gamma_sample) {
      worst = std::max(worst, detail::rel_err(gamma(z + 1.0), z * gamma(z)));
    }
    return worst;
  }));
  out.push_back(detail::run_check("gamma conjugation", 1e-13, [&] {
    double worst = 0.0;
    for (const Complex z : gamma_sample) {
      worst = std::max(worst, detail::rel_err(gamma(std::conj(z)), std::conj(gamma(z))));
    }
    return worst;
  }));
  out.push_back(detail::run_check("exp(log_gamma) = gamma", 1e-11, [&] {
    double worst = 0.0;
    for (const Complex z : gamma_sample) {
      worst = std::max(worst, detail::rel_err(std::exp(log_gamma(z)), gamma(z)));
    }
    return worst;
  }));
  out.push_back(detail::run_check("complex_pow integer powers", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const Complex z = gamma_sample[static_cast<std::size_t>(i)] / 3.0;
      Complex prod{1.0, 0.0};
      for (int m = 1; m <= 6; ++m) {
        prod *= z;
        worst = std::max(worst, detail::rel_err(complex_pow(z, m), prod));
      }
    }
    return worst;
  }));
  out.push_back(detail::run_check("bernoulli odd entries vanish", 0.0, [] {
    const auto b = bernoulli_numbers(bernoulli_cap);
    double worst = 0.0;
    for (std::size_t n = 3; n <= bernoulli_cap; n += 2) worst = std::max(worst, std::abs(b[n]));
    return worst;
  }));

  // hurwitz
  out.push_back(detail::run_check("zeta recurrence", 1e-12, [&] {
    std::uniform_real_distribution<double> uq(0.1, 3.0);
    std::uniform_real_distribution<double> us(-6.0, 6.0);
    double worst = 0.0;
    for (int i = 0; i < 50;) {
      const Complex s{us(rng), us(rng)};
      if (std::abs(s) > 6.0 || std::abs(s - 1.0) < 0.2) continue;
      const Complex q{uq(rng), us(rng) / 4.0};
      const Complex a = hurwitz_zeta(s, q);
      const Complex b = hurwitz_zeta(s, q + 1.0);
      const Complex p = complex_pow(q, -s);
      worst = std::max(worst, std::abs(a - b - p) / std::max({std::abs(a), std::abs(b), std::abs(p)}));
      ++i;
    }
    return worst;
  }));
  out.push_back(detail::run_check("zeta conjugation", 1e-13, [] {
    double worst = 0.0;
    for (const Complex s : {Complex{2.5, 1.0}, Complex{-1.5, 0.7}, Complex{0.3, -2.0}}) {
      for (const Complex q : {Complex{0.25, 0.3}, Complex{1.7, -0.4}}) {
        worst = std::max(worst, detail::rel_err(hurwitz_zeta(std::conj(s), std::conj(q)),
                                                std::conj(hurwitz_zeta(s, q))));
      }
    }
    return worst;
  }));
  out.push_back(detail::run_check("zeta vs Bernoulli polynomial oracle", 1e-11, [] {
    double worst = 0.0;
    for (std::size_t n = 0; n <= 4; ++n) {
      for (const Complex q : {Complex{0.25}, Complex{0.5}, Complex{0.75}, Complex{1.0}, Complex{1.0, 0.5}}) {
        const Complex z = hurwitz_zeta(-static_cast<double>(n), q);
        const Complex o = zeta_neg_int_oracle(n, q);
        worst = std::max(worst, std::abs(z - o) / std::max(std::abs(o), 1.0));
      }
    }
    return worst;
  }));
  out.push_back(detail::run_check("Lerch formula", 1e-10, [] {
    double worst = 0.0;
    for (const double q : {0.25, 1.0 / 3.0, 0.5, 0.75, 1.0, 1.5}) {
      const Complex want = log_gamma(q) - 0.5 * std::log(two_pi);
      worst = std::max(worst, std::abs(hurwitz_zeta_ds(0.0, q) - want));
    }
    return worst;
  }));
  out.push_back(detail::run_check("Riemann reduction", 1e-12, [] {
    double worst = 0.0;
    for (const int s : {2, 3, 4}) {
      // direct partial sum plus integral tail with midpoint correction
      double sum = 0.0;
      constexpr int n_terms = 100000;
      for (int n = n_terms; n >= 1; --n) sum += std::pow(static_cast<double>(n), -s);
      const double x = n_terms + 0.5;
      sum += std::pow(x, 1.0 - s) / (s - 1.0);
      worst = std::max(worst, std::abs(hurwitz_zeta(static_cast<double>(s), 1.0) - sum));
    }
    return worst;
  }));

  // quad
  out.push_back(detail::run_check("quadrature reference integrals", 1e-10, [] {
    double worst = 0.0;
    worst = std::max(worst, std::abs(integrate_finite([](double) { return 1.0; }, 0.0, 1.0).value - 1.0));
    worst = std::max(worst, std::abs(integrate_finite([](double y) { return std::cos(2 * y); }, 0.0, pi / 2).value));
    worst = std::max(worst, std::abs(integrate_finite([](double x) { return std::log(x); }, 0.0, 1.0).value + 1.0));
    worst = std::max(worst, std::abs(integrate_semi_infinite([](double t) { return std::exp(-t); }).value - 1.0));
    worst = std::max(worst, std::abs(integrate_semi_infinite([](double t) { return 1.0 / std::cosh(pi * t / 2); }).value - 1.0));
    worst = std::max(worst, std::abs(integrate_semi_infinite([](double t) { return std::exp(-t) / std::sqrt(t); }).value -
                                     std::sqrt(pi)));
    return worst;
  }));

  // identities
  out.push_back(detail::run_check("Cauchy kernel on the unit circle", 1e-10, [] {
    double worst = 0.0;
    for (const Complex y : {Complex{1.0}, Complex{2.0}, Complex{0.5, 0.5}}) {
      double fact = 1.0;
      for (int k = 0; k <= 6; ++k) {
        if (k > 0) fact *= k;
        const Complex want = complex_pow(y, k) / fact;
        worst = std::max(worst, std::abs(contour_cauchy_check(y, k) - want) / std::max(1.0, std::abs(want)));
      }
    }
    return worst;
  }));
  out.push_back(detail::run_check("series = zeta closed form", 1e-9, [&] {
    std::uniform_real_distribution<double> ure(-1.8, 0.9);
    std::uniform_real_distribution<double> uim(-1.0, 1.0);
    std::uniform_real_distribution<double> ur(0.5, 2.0);
    std::uniform_real_distribution<double> uth(0.05, two_pi - 0.05);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      IdentityCase c;
      c.k = {ure(rng), uim(rng)};
      c.a = BranchedConstant(ur(rng), uth(rng));
      const Complex s = rhs_series(c);
      const Complex z = rhs_zeta(c);
      worst = std::max(worst, std::abs(s - z) / std::max(std::abs(s), std::abs(z)));
    }
    return worst;
  }));
  out.push_back(detail::run_check("antisymmetry at even k", 1e-9, [] {
    double worst = 0.0;
    for (const double k : {2.0, 4.0}) {
      IdentityCase c;
      c.k = k;
      worst = std::max({worst, std::abs(lhs_integral(c).value), std::abs(rhs_zeta(c))});
    }
    return worst;
  }));
  out.push_back(detail::run_check("u-substitution vs y-domain quadrature", 1e-8, [] {
    double worst = 0.0;
    const std::pair<double, double> cases[] = {{1.0, 1.0}, {3.0, 1.0}, {0.5, 2.0}};
    for (const auto& [k, r] : cases) {
      IdentityCase c;
      c.k = k;
      c.a = BranchedConstant::real(r);
      worst = std::max(worst, std::abs(lhs_integral(c).value - lhs_integral_direct(c).value));
    }
    return worst;
  }));
  return out;
}

}  // namespace zetaquad
