#pragma once

// Hurwitz zeta(s, q) and d/ds zeta(s, q) for complex s and q by
// Euler-Maclaurin summation:
//
//   zeta(s, q) = sum_{n<N} (n+q)^-s + (N+q)^(1-s)/(s-1) + (N+q)^-s / 2
//              + sum_{j>=1} B_2j/(2j)! * s(s+1)...(s+2j-2) * (N+q)^(-s-2j+1)
//
// N grows until |N+q| >= max(10, |s|) and the first neglected tail term
// falls below tolerance. For s a non-positive integer the tail is a finite
// Bernoulli sum and N = 1 is used instead.
//
// For Re s < 0 the head terms grow like |N+q|^(1-Re s) and cancel down to a
// result that can be ten orders smaller, so that case is summed in 113-bit
// binary floating point (Boost.Multiprecision); everything else in long
// double. Tail coefficients B_2j/(2j)! come from exact rationals.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <type_traits>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "complexfn.hpp"
#include "errors.hpp"

namespace zetaquad {

struct ZetaConfig {
  std::size_t direct_terms = 10;  ///< initial N
  std::size_t tail_terms = 30;    ///< M, Bernoulli tail terms, <= 30
  double tolerance = 1e-15;       ///< relative

  void validate() const {
    if (direct_terms < 1) throw std::invalid_argument("ZetaConfig: direct_terms must be >= 1");
    if (tail_terms < 1 || tail_terms > 30) {
      throw std::invalid_argument("ZetaConfig: tail_terms must be in [1, 30]");
    }
    if (!(tolerance >= 1e-15 && tolerance <= 1e-2)) {
      throw std::invalid_argument("ZetaConfig: tolerance must be in [1e-15, 1e-2]");
    }
  }
};

namespace detail {

struct ZetaTerms {
  Complex value;
  Complex deriv;
};

using QuadReal = boost::multiprecision::cpp_bin_float_quad;

template <class R>
struct WideComplexOf {
  using type = std::complex<R>;
};
template <>
struct WideComplexOf<QuadReal> {
  using type = boost::multiprecision::cpp_complex_quad;
};

using WideComplex = std::complex<long double>;

inline constexpr std::size_t zeta_max_direct = std::size_t{1} << 20;
inline constexpr std::size_t zeta_max_tail = 30;

// B_2j / (2j)! for j = 0..30 from the exact recurrence
// sum_{i<=n} C(n+1, i) B_i = 0.
inline std::vector<boost::multiprecision::cpp_rational> exact_tail_coefficients() {
  using boost::multiprecision::cpp_int;
  using boost::multiprecision::cpp_rational;
  const std::size_t n_max = 2 * zeta_max_tail;
  std::vector<cpp_rational> b(n_max + 1);
  b[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    cpp_rational acc = 0;
    cpp_int binom = 1;  // C(n+1, i)
    for (std::size_t i = 0; i < n; ++i) {
      acc += cpp_rational(binom) * b[i];
      binom = binom * (n + 1 - i) / (i + 1);
    }
    b[n] = -acc / (n + 1);
  }
  std::vector<cpp_rational> coef(zeta_max_tail + 1);
  cpp_int fact = 1;
  for (std::size_t j = 0; j <= zeta_max_tail; ++j) {
    if (j > 0) fact *= (2 * j - 1) * (2 * j);
    coef[j] = b[2 * j] / cpp_rational(fact);
  }
  return coef;
}

template <class R>
const std::vector<R>& tail_coefficients() {
  static const std::vector<R> table = [] {
    std::vector<R> out;
    for (const auto& c : exact_tail_coefficients()) {
      if constexpr (std::is_same_v<R, QuadReal>) {
        out.push_back(R(c));
      } else {
        out.push_back(c.template convert_to<R>());
      }
    }
    return out;
  }();
  return table;
}

// Principal log with Arg in (-pi, pi].
inline WideComplex wide_log(WideComplex z) {
  long double arg = std::arg(z);
  if (arg <= -std::numbers::pi_v<long double>) arg = std::numbers::pi_v<long double>;
  return {std::log(std::abs(z)), arg};
}

template <class C>
struct WideTerms {
  C value;
  C deriv;
};

// Returns false when the tail does not reach tolerance for this N. Requires
// Re q > 0, so every log argument is off the branch cut.
template <class R, bool WithDeriv>
bool euler_maclaurin(const typename WideComplexOf<R>::type& s,
                     const typename WideComplexOf<R>::type& q, std::size_t n_direct,
                     const ZetaConfig& cfg, bool terminating,
                     WideTerms<typename WideComplexOf<R>::type>& out) {
  using C = typename WideComplexOf<R>::type;
  using std::abs;
  using std::exp;
  using std::log;
  C sum{0, 0};
  C dsum{0, 0};
  for (std::size_t n = 0; n < n_direct; ++n) {
    const C x = q + C(R(n));
    const C lx = log(x);
    const C p = exp(-s * lx);
    sum += p;
    if constexpr (WithDeriv) dsum -= lx * p;
  }

  const C x = q + C(R(n_direct));
  const C lx = log(x);
  const C x_ms = exp(-s * lx);  // x^-s
  const C sm1 = s - C(1);
  const C half(R(0.5));
  sum += x * x_ms / sm1 + half * x_ms;
  if constexpr (WithDeriv) {
    dsum += -lx * x * x_ms / sm1 - x * x_ms / (sm1 * sm1) - half * lx * x_ms;
  }

  const auto& coef = tail_coefficients<R>();
  const C inv_x = C(1) / x;
  const C inv_x2 = inv_x * inv_x;
  C poch = s;           // s (s+1) ... (s+2j-2)
  C dpoch{1, 0};        // d/ds of poch
  C xpow = x_ms * inv_x;  // x^(-s-2j+1)
  R prev_mag = R(INFINITY);
  const R scale_floor = R(1e-12);

  for (std::size_t j = 1; j <= cfg.tail_terms; ++j) {
    if (terminating && poch == C(0)) break;
    const C c(coef[j]);
    const C term = c * poch * xpow;
    const C dterm = c * (dpoch - poch * lx) * xpow;
    sum += term;
    if constexpr (WithDeriv) dsum += dterm;

    if (!terminating) {
      // Relative to the running total, which already carries the head
      // cancellation; the floor keeps exact zeros of zeta finite.
      const R scale = std::max<R>(abs(sum), scale_floor * abs(x_ms));
      R mag = abs(term) / scale;
      if constexpr (WithDeriv) {
        const R dscale = std::max<R>(abs(dsum), scale_floor * abs(lx * x_ms));
        mag = std::max<R>(mag, abs(dterm) / dscale);
      }
      if (mag < cfg.tolerance) {
        out = {sum, dsum};
        return true;
      }
      if (mag > prev_mag && j > 2) return false;  // asymptotic tail turned around
      prev_mag = mag;
    }

    const C f1 = s + C(R(2 * j - 1));
    const C f2 = s + C(R(2 * j));
    dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch *= f1 * f2;
    xpow *= inv_x2;
  }
  if (terminating && poch == C(0)) {
    out = {sum, dsum};
    return true;
  }
  return false;
}

template <class R, bool WithDeriv>
WideTerms<WideComplex> sum_at(Complex s_in, WideComplex q_in, std::size_t n, const ZetaConfig& cfg,
                              bool terminating) {
  using C = typename WideComplexOf<R>::type;
  const C s(R(s_in.real()), R(s_in.imag()));
  const C q(R(q_in.real()), R(q_in.imag()));
  WideTerms<C> em{};
  while (!euler_maclaurin<R, WithDeriv>(s, q, n, cfg, terminating, em)) {
    n *= 2;
    if (n > zeta_max_direct) {
      throw ConvergenceError("hurwitz_zeta: Euler-Maclaurin tail did not reach tolerance");
    }
  }
  auto narrow = [](const C& z) {
    return WideComplex(static_cast<long double>(z.real()), static_cast<long double>(z.imag()));
  };
  return {narrow(em.value), narrow(em.deriv)};
}

template <bool WithDeriv>
ZetaTerms hurwitz_eval(Complex s_in, Complex q_in, const ZetaConfig& cfg) {
  cfg.validate();
  if (s_in == Complex{1.0, 0.0}) {
    throw PoleError("hurwitz_zeta: pole at s = 1");
  }
  const WideComplex s(s_in.real(), s_in.imag());
  WideComplex q(q_in.real(), q_in.imag());
  // zeta(s, q) = zeta(s, q + 1) + q^-s, applied until Re q > 0.
  WideTerms<WideComplex> shift{{0.0L, 0.0L}, {0.0L, 0.0L}};
  while (q.real() <= 0.0L) {
    if (q == WideComplex{0.0L, 0.0L}) {
      throw DomainError("hurwitz_zeta: q is a non-positive integer");
    }
    const WideComplex lq = wide_log(q);
    const WideComplex p = std::exp(-s * lq);
    shift.value += p;
    if constexpr (WithDeriv) shift.deriv -= lq * p;
    q += 1.0L;
  }

  // At s = 0, -1, -2, ... the tail terminates, so the value is exact for any
  // N; a small N then avoids cancelling terms of size |N+q|^(1-s). The
  // s-derivative tail never terminates and keeps the reach floor.
  std::size_t n = cfg.direct_terms;
  // The finite tail must fit in tail_terms: -s <= 2 tail_terms - 1.
  const bool terminating = !WithDeriv && is_nonpositive_integer(s_in) &&
                           -s_in.real() <= 2.0 * static_cast<double>(cfg.tail_terms) - 1.0;
  if (terminating) {
    n = 1;
  } else {
    const long double reach = std::max(10.0L, static_cast<long double>(std::abs(s_in)));
    while (std::abs(static_cast<long double>(n) + q) < reach) ++n;
  }

  const WideTerms<WideComplex> em = (s_in.real() < 0.0 && !terminating)
                                        ? sum_at<QuadReal, WithDeriv>(s_in, q, n, cfg, false)
                                        : sum_at<long double, WithDeriv>(s_in, q, n, cfg, terminating);
  const WideComplex v = em.value + shift.value;
  const WideComplex d = em.deriv + shift.deriv;
  return {Complex(static_cast<double>(v.real()), static_cast<double>(v.imag())),
          Complex(static_cast<double>(d.real()), static_cast<double>(d.imag()))};
}

}  // namespace detail

inline Complex hurwitz_zeta(Complex s, Complex q, const ZetaConfig& cfg = {}) {
  return detail::hurwitz_eval<false>(s, q, cfg).value;
}

/// d/ds zeta(s, q), by term-wise differentiation of the same expansion.
inline Complex hurwitz_zeta_ds(Complex s, Complex q, const ZetaConfig& cfg = {}) {
  return detail::hurwitz_eval<true>(s, q, cfg).deriv;
}

inline constexpr std::size_t zeta_oracle_cap = 20;

/// zeta(-n, q) = -B_{n+1}(q) / (n+1). Closed form used to check the
/// summation engine at non-positive integers.
inline Complex zeta_neg_int_oracle(std::size_t n, Complex q) {
  if (n > zeta_oracle_cap) {
    throw SizeError("zeta_neg_int_oracle: n exceeds " + std::to_string(zeta_oracle_cap));
  }
  return -bernoulli_polynomial(n + 1, q) / static_cast<double>(n + 1);
}

}  // namespace zetaquad
