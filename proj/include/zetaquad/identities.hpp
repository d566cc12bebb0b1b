#pragma once

// Four independent evaluations of
//
//   I(k, a) = int_0^{pi/2} cos(2y) log^k(a tan y) dy
//           = 2^(k-1) k pi^k i^(k+1) [zeta(1-k, 1/4 - i log(a)/(2pi))
//                                     - zeta(1-k, 3/4 - i log(a)/(2pi))]
//
// lhs      direct quadrature after u = ln tan y
// zeta     the Hurwitz zeta closed form (valid for all k != 0)
// series   -pi k sum_n (-1)^n (pi i (2n+1)/2 + log a)^(k-1), Re k < 1
// contour  Gamma(k+1) times the Hankel integral of pi a^w w^-k sec(pi w/2)
//          around a cut on the positive imaginary axis, Re k < 1, k not an
//          integer
//
// Branches: log a = ln r + i theta with theta in [0, 2pi); the inner
// logarithm is (ln r + i theta) + ln tan y, never re-reduced; the outer
// power is principal.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "alternating.hpp"
#include "complexfn.hpp"
#include "errors.hpp"
#include "hurwitz.hpp"
#include "quad.hpp"

namespace zetaquad {

/// Residual rule |x - y| <= atol + rtol * max(|x|, |y|).
struct Tolerance {
  double atol = 1e-6;
  double rtol = 1e-6;

  double bound(Complex x, Complex y) const {
    return atol + rtol * std::max(std::abs(x), std::abs(y));
  }
  bool accepts(Complex x, Complex y) const { return std::abs(x - y) <= bound(x, y); }
};

struct IdentityCase {
  Complex k{0.0, 0.0};
  BranchedConstant a{};
  QuadConfig quad{};
  ZetaConfig zeta{};
  Tolerance check{};
};

/// Reason the case violates the integrability requirements of the definite
/// integral, if any. A positive real a != 1 puts a zero of log(a tan y)
/// inside the interval, which Re k < 0 cannot integrate; for a = 1 the zero
/// sits at pi/4 where cos(2y) also vanishes, so Re k > -2 suffices.
inline std::optional<std::string> case_violation(const IdentityCase& c) {
  if (c.a.is_positive_real() && c.k.real() < 0.0 && !c.a.is_one()) {
    return "a positive real and != 1 requires Re(k) >= 0";
  }
  if (c.a.is_one() && c.k.real() <= -2.0) {
    return "a = 1 requires Re(k) > -2";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Route values

/// cos(2y) log^k(a tan y) for y in (0, pi/2).
///
/// For a = 1 the identity cos(2y) = -tanh(u), u = ln tan y, is used in the
/// form -(tanh(u)/u) u^(k+1), so the removable point y = pi/4 stays accurate
/// when Re k < 0.
inline Complex integrand(double y, Complex k, const BranchedConstant& a);

namespace detail {

// 1 / (2 cosh u) without overflow.
inline double half_sech(double u) {
  const double e = std::exp(-std::abs(u));
  return e / (1.0 + e * e);
}

// tanh(u) / u, continuous through u = 0.
inline double tanh_over(double u) {
  if (std::abs(u) < 1e-4) {
    const double u2 = u * u;
    return 1.0 - u2 / 3.0 + 2.0 * u2 * u2 / 15.0;
  }
  return std::tanh(u) / u;
}

}  // namespace detail

inline Complex integrand(double y, Complex k, const BranchedConstant& a) {
  if (!(y > 0.0 && y < 0.5 * pi)) {
    throw std::invalid_argument("integrand: y must lie in (0, pi/2)");
  }
  const double u = std::log(std::tan(y));
  if (a.is_one()) {
    if (k.real() <= -2.0) throw DomainError("integrand: a = 1 requires Re(k) > -2");
    if (u == 0.0) {
      if (k == Complex{-1.0, 0.0}) return {-1.0, 0.0};
      if (k.real() > -1.0) return {0.0, 0.0};
      throw DomainError("integrand: non-integrable point u = 0 for Re(k) <= -1");
    }
    return -detail::tanh_over(u) * complex_pow(Complex{u, 0.0}, k + 1.0);
  }
  const Complex inner = a.log() + u;
  return std::cos(2.0 * y) * complex_pow(inner, k);
}

/// Left side by quadrature after u = ln tan y:
///   -int_R tanh(u) (log a + u)^k / (2 cosh u) du.
/// The line is split at the branch point u = -ln r when a is a positive
/// real, and at 0 otherwise. Each half-line goes to the exp-sinh rule with
/// the local offset t passed exactly, so the power sees the exact value
/// +-t at the split point.
inline QuadResult lhs_integral(const IdentityCase& c) {
  if (auto why = case_violation(c)) throw std::invalid_argument("lhs_integral: " + *why);
  const Complex k = c.k;
  const Complex log_a = c.a.log();
  const bool real_a = c.a.is_positive_real();
  const double split = real_a ? -std::log(c.a.r()) : 0.0;

  auto half = [&](double side) {
    auto f = [&, side](double t) -> Complex {
      const double u = split + side * t;
      if (c.a.is_one()) {
        // tanh(u) u^k = (tanh(u)/u) u^(k+1); finite down to subnormal t.
        return -detail::tanh_over(u) * complex_pow(Complex{u, 0.0}, k + 1.0) *
               detail::half_sech(u);
      }
      const Complex base = real_a ? Complex{side * t, 0.0} : log_a + u;
      return -std::tanh(u) * complex_pow(base, k) * detail::half_sech(u);
    };
    return integrate_semi_infinite(f, c.quad);
  };
  const QuadResult right = half(+1.0);
  const QuadResult left = half(-1.0);
  return {right.value + left.value, right.err_estimate + left.err_estimate,
          right.n_evals + left.n_evals, right.converged && left.converged};
}

/// Left side by quadrature in the original variable y, split where
/// log(a tan y) can vanish (pi/4 for a = 1, arctan(1/r) for a positive
/// real) or at pi/4 otherwise. Independent of lhs_integral; used as a cross
/// check.
inline QuadResult lhs_integral_direct(const IdentityCase& c) {
  if (auto why = case_violation(c)) throw std::invalid_argument("lhs_integral_direct: " + *why);
  const double mid = c.a.is_positive_real() ? std::atan(1.0 / c.a.r()) : 0.25 * pi;
  auto f = [&c](double y) { return integrand(y, c.k, c.a); };
  const QuadResult lo = integrate_finite(f, 0.0, mid, c.quad);
  const QuadResult hi = integrate_finite(f, mid, 0.5 * pi, c.quad);
  return {lo.value + hi.value, lo.err_estimate + hi.err_estimate, lo.n_evals + hi.n_evals,
          lo.converged && hi.converged};
}

/// Hurwitz zeta closed form. k = 0 short-circuits to 0 (int cos 2y dy).
inline Complex rhs_zeta(const IdentityCase& c) {
  const Complex k = c.k;
  if (k == Complex{0.0, 0.0}) return {0.0, 0.0};
  const Complex shift = Complex{0.0, -1.0} * c.a.log() / two_pi;
  const Complex s = 1.0 - k;
  const Complex diff = hurwitz_zeta(s, 0.25 + shift, c.zeta) - hurwitz_zeta(s, 0.75 + shift, c.zeta);
  const Complex i_pow = std::exp(Complex{0.0, 0.5 * pi} * (k + 1.0));
  const Complex pref = std::exp((k - 1.0) * std::log(2.0) + k * std::log(pi)) * k * i_pow;
  return pref * diff;
}

/// d/dk of rhs_zeta, analytic: product rule on the prefactor plus
/// -prefactor * d/ds zeta at s = 1 - k.
inline Complex rhs_zeta_dk(const IdentityCase& c) {
  const Complex k = c.k;
  if (k == Complex{0.0, 0.0}) {
    throw PoleError("rhs_zeta_dk: zeta pole at k = 0");
  }
  const Complex shift = Complex{0.0, -1.0} * c.a.log() / two_pi;
  const Complex s = 1.0 - k;
  const Complex q1 = 0.25 + shift;
  const Complex q2 = 0.75 + shift;
  const Complex diff = hurwitz_zeta(s, q1, c.zeta) - hurwitz_zeta(s, q2, c.zeta);
  const Complex ddiff = hurwitz_zeta_ds(s, q1, c.zeta) - hurwitz_zeta_ds(s, q2, c.zeta);
  const Complex i_pow = std::exp(Complex{0.0, 0.5 * pi} * (k + 1.0));
  const Complex pref = std::exp((k - 1.0) * std::log(2.0) + k * std::log(pi)) * k * i_pow;
  const Complex dlog_pref = std::log(2.0) + 1.0 / k + std::log(pi) + Complex{0.0, 0.5 * pi};
  return pref * dlog_pref * diff - pref * ddiff;
}

inline constexpr std::size_t default_series_cap = 400;

/// Accelerated alternating series, Re k < 1.
inline Complex rhs_series(const IdentityCase& c, std::size_t n_cap = default_series_cap) {
  const Complex k = c.k;
  if (k.real() >= 1.0) {
    throw RegionError("rhs_series: alternating series needs Re(k) < 1");
  }
  if (k == Complex{0.0, 0.0}) return {0.0, 0.0};
  const Complex log_a = c.a.log();
  auto term = [&](std::size_t n) {
    const Complex base = Complex{0.0, 0.5 * pi * static_cast<double>(2 * n + 1)} + log_a;
    return complex_pow(base, k - 1.0);
  };
  const auto sum = alternating_sum(term, n_cap);
  return -pi * k * sum.value;
}

/// Hankel-contour route, Re k < 1 and k not an integer.
///
/// The contour runs down the left side of a cut on the positive imaginary
/// axis (arg w = pi/2 - 2pi), around the origin counter-clockwise and up the
/// right side (arg w = pi/2). On w = i t, sec(pi w/2) = sech(pi t/2) and
/// a^w = e^{i t log a}; the two rays differ only by the factor e^{2 pi i k}
/// on w^-k, and the whole route collapses to
///
///   Gamma(k+1) (i/2) e^{i pi k/2} sin(pi k) int_0^inf a^{it} t^-k sech(pi t/2) dt.
inline QuadResult rhs_contour(const IdentityCase& c) {
  const Complex k = c.k;
  if (k.real() >= 1.0) {
    throw RegionError("rhs_contour: Hankel integral needs Re(k) < 1");
  }
  if (is_integer(k)) {
    throw RegionError(
        "rhs_contour: the two rays cancel for integer k; use contour_cauchy_check");
  }
  const double ln_r = std::log(c.a.r());
  const double theta = c.a.theta();
  auto f = [&](double t) -> Complex {
    const double lt = std::log(t);
    const Complex expo{-theta * t - k.real() * lt, t * ln_r - k.imag() * lt};
    return std::exp(expo) * (2.0 * detail::half_sech(0.5 * pi * t));
  };
  QuadResult j = integrate_semi_infinite(f, c.quad);
  const Complex factor = gamma(k + 1.0) * Complex{0.0, 0.5} *
                         std::exp(Complex{0.0, 0.5 * pi} * k) * sin_pi(k);
  j.value *= factor;
  j.err_estimate *= std::abs(factor);
  return j;
}

/// (1/2 pi i) times the integral of e^{wy} w^{-k-1} around the unit circle,
/// by the periodic trapezoid rule. Equals y^k / k!.
inline Complex contour_cauchy_check(Complex y, int k) {
  if (k < 0) throw std::invalid_argument("contour_cauchy_check: k must be >= 0");
  if (!(std::abs(y) <= 10.0)) throw std::invalid_argument("contour_cauchy_check: |y| must be <= 10");
  constexpr int nodes = 128;
  Complex acc{0.0, 0.0};
  for (int j = 0; j < nodes; ++j) {
    const double phi = two_pi * static_cast<double>(j) / nodes;
    const Complex w = std::polar(1.0, phi);
    acc += std::exp(w * y) * std::polar(1.0, -static_cast<double>(k) * phi);
  }
  return acc / static_cast<double>(nodes);
}

/// Catalan's constant from the accelerated alternating series
/// sum (-1)^n / (2n+1)^2.
inline double catalan_constant() {
  return alternating_sum([](std::size_t n) {
           const double m = static_cast<double>(2 * n + 1);
           return 1.0 / (m * m);
         }).value;
}

// ---------------------------------------------------------------------------
// Reports

enum class Verdict { pass, fail, partial };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::partial: return "partial";
  }
  return "?";
}

struct RouteValue {
  std::string name;
  Complex value{0.0, 0.0};
  std::optional<QuadResult> quad;  ///< set for quadrature routes
};

struct Residual {
  std::string first;
  std::string second;
  double value = 0.0;  ///< |first - second|
  double bound = 0.0;  ///< atol + rtol max(|first|, |second|)

  bool ok() const { return value <= bound; }
  std::string pair() const { return first + "-" + second; }
};

struct VerificationReport {
  std::string label = "identity";
  IdentityCase identity_case{};
  std::vector<RouteValue> routes;
  std::vector<Residual> residuals;
  Verdict verdict = Verdict::partial;
  std::vector<std::string> notes;

  const RouteValue* route(const std::string& name) const {
    for (const auto& r : routes) {
      if (r.name == name) return &r;
    }
    return nullptr;
  }
  std::optional<QuadResult> lhs() const {
    const auto* r = route("lhs");
    return r ? r->quad : std::nullopt;
  }
  std::optional<Complex> zeta_value() const { return value_of("zeta"); }
  std::optional<Complex> series_value() const { return value_of("series"); }
  std::optional<QuadResult> contour_value() const {
    const auto* r = route("contour");
    return r ? r->quad : std::nullopt;
  }
  std::optional<Complex> value_of(const std::string& name) const {
    const auto* r = route(name);
    return r ? std::optional<Complex>(r->value) : std::nullopt;
  }
  const Residual* residual(const std::string& a, const std::string& b) const {
    for (const auto& r : residuals) {
      if ((r.first == a && r.second == b) || (r.first == b && r.second == a)) return &r;
    }
    return nullptr;
  }
};

namespace detail {

inline void add_residual(VerificationReport& rep, const RouteValue& x, const RouteValue& y,
                         const Tolerance& tol) {
  rep.residuals.push_back({x.name, y.name, std::abs(x.value - y.value), tol.bound(x.value, y.value)});
}

inline void add_all_pairs(VerificationReport& rep, const Tolerance& tol) {
  for (std::size_t i = 0; i < rep.routes.size(); ++i) {
    for (std::size_t j = i + 1; j < rep.routes.size(); ++j) {
      add_residual(rep, rep.routes[i], rep.routes[j], tol);
    }
  }
}

inline Verdict settle(const VerificationReport& rep, bool route_failed) {
  for (const auto& r : rep.residuals) {
    if (!r.ok()) return Verdict::fail;
  }
  if (route_failed || rep.routes.size() < 2) return Verdict::partial;
  return Verdict::pass;
}

inline std::string complex_text(Complex z) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6g%+.6gi", z.real(), z.imag());
  return buf;
}

}  // namespace detail

/// Runs every route applicable to the case and compares all pairs.
/// lhs and zeta always run; series needs Re k < 1; contour additionally
/// needs non-integer k. A route that throws or whose quadrature does not
/// converge is recorded in the notes and leaves the verdict partial.
inline VerificationReport verify(const IdentityCase& c) {
  if (auto why = case_violation(c)) throw std::invalid_argument("verify: " + *why);
  VerificationReport rep;
  rep.identity_case = c;
  bool route_failed = false;

  auto quad_route = [&](const char* name, auto&& eval) {
    try {
      QuadResult q = eval();
      if (!q.converged) {
        route_failed = true;
        rep.notes.push_back(std::string(name) + " route: quadrature did not converge (err " +
                            std::to_string(q.err_estimate) + ")");
        return;
      }
      rep.routes.push_back({name, q.value, q});
    } catch (const std::exception& e) {
      route_failed = true;
      rep.notes.push_back(std::string(name) + " route failed: " + e.what());
    }
  };
  auto value_route = [&](const char* name, auto&& eval) {
    try {
      rep.routes.push_back({name, eval(), std::nullopt});
    } catch (const std::exception& e) {
      route_failed = true;
      rep.notes.push_back(std::string(name) + " route failed: " + e.what());
    }
  };

  quad_route("lhs", [&] { return lhs_integral(c); });
  value_route("zeta", [&] { return rhs_zeta(c); });
  if (c.k.real() < 1.0) {
    value_route("series", [&] { return rhs_series(c); });
    rep.notes.emplace_back(
        "series route carries the -pi*k prefactor; a bare (2 pi i)^(k-1)/Gamma(k) "
        "zeta-difference conversion of the sum omits the -pi factor");
    if (!is_integer(c.k)) {
      quad_route("contour", [&] { return rhs_contour(c); });
    } else {
      rep.notes.emplace_back("contour route skipped: integer k (rays cancel)");
    }
  } else {
    rep.notes.emplace_back("series and contour routes skipped: Re(k) >= 1");
  }

  detail::add_all_pairs(rep, c.check);
  rep.verdict = detail::settle(rep, route_failed);
  return rep;
}

/// The k = -1, a = 1 instance: every route against -4G/pi, absolute 1e-8.
inline VerificationReport catalan_case(const QuadConfig& quad_cfg = {}) {
  IdentityCase c;
  c.k = {-1.0, 0.0};
  c.a = BranchedConstant::real(1.0);
  c.quad = quad_cfg;
  c.check = {1e-8, 0.0};

  VerificationReport rep;
  rep.label = "catalan";
  rep.identity_case = c;
  const double g = catalan_constant();
  rep.routes.push_back({"reference", Complex{-4.0 * g / pi, 0.0}, std::nullopt});
  bool route_failed = false;
  try {
    const QuadResult q = lhs_integral(c);
    rep.routes.push_back({"lhs", q.value, q});
    if (!q.converged) {
      route_failed = true;
      rep.notes.emplace_back("lhs route: quadrature did not converge");
    }
  } catch (const std::exception& e) {
    route_failed = true;
    rep.notes.push_back(std::string("lhs route failed: ") + e.what());
  }
  try {
    rep.routes.push_back({"zeta", rhs_zeta(c), std::nullopt});
    rep.routes.push_back({"series", rhs_series(c), std::nullopt});
  } catch (const std::exception& e) {
    route_failed = true;
    rep.notes.push_back(std::string("route failed: ") + e.what());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "G = %.17g", g);
  rep.notes.emplace_back(buf);
  detail::add_all_pairs(rep, c.check);
  rep.verdict = detail::settle(rep, route_failed);
  return rep;
}

/// The closed form (pi/4)(log[81 Gamma^4(-3/4) / (4 pi^2 e^2 Gamma^4(-1/4))] - pi i)
/// for int_0^{pi/2} cos(2y) log(tan y) log(log(tan y)) dy.
inline Complex loggamma_closed_form() {
  const Complex ratio = gamma(Complex{-0.75, 0.0}) / gamma(Complex{-0.25, 0.0});
  const Complex r2 = ratio * ratio;
  const Complex inner = 81.0 / (4.0 * pi * pi * std::exp(2.0)) * r2 * r2;
  const Complex log_inner = principal_log(inner);
  return {0.25 * pi * log_inner.real(), 0.25 * pi * (log_inner.imag() - pi)};
}

/// The same integral by direct quadrature in y. For y < pi/4 the inner
/// logarithm of the negative value ln tan y is ln|.| + i pi.
inline QuadResult loggamma_direct_integral(const QuadConfig& quad_cfg = {}) {
  auto f = [](double y) -> Complex {
    const double l = std::log(std::tan(y));
    if (l == 0.0) return {0.0, 0.0};
    return std::cos(2.0 * y) * l * principal_log(Complex{l, 0.0});
  };
  const QuadResult lo = integrate_finite(f, 0.0, 0.25 * pi, quad_cfg);
  const QuadResult hi = integrate_finite(f, 0.25 * pi, 0.5 * pi, quad_cfg);
  return {lo.value + hi.value, lo.err_estimate + hi.err_estimate, lo.n_evals + hi.n_evals,
          lo.converged && hi.converged};
}

/// k-derivative of the identity at k = 1, a = 1 four ways: direct integral,
/// Gamma closed form, central difference of rhs_zeta, and the analytic
/// derivative built from zeta(0, .) and zeta'(0, .).
inline VerificationReport loggamma_case(const QuadConfig& quad_cfg = {}, double fd_step = 1e-4) {
  if (!(fd_step >= 1e-6 && fd_step <= 1e-2)) {
    throw std::invalid_argument("loggamma_case: fd_step must be in [1e-6, 1e-2]");
  }
  IdentityCase c;
  c.k = {1.0, 0.0};
  c.a = BranchedConstant::real(1.0);
  c.quad = quad_cfg;

  VerificationReport rep;
  rep.label = "loggamma";
  rep.identity_case = c;
  bool route_failed = false;

  const QuadResult direct = loggamma_direct_integral(quad_cfg);
  if (direct.converged) {
    rep.routes.push_back({"direct", direct.value, direct});
  } else {
    route_failed = true;
    rep.notes.emplace_back("direct route: quadrature did not converge");
  }
  const RouteValue closed{"closed_form", loggamma_closed_form(), std::nullopt};
  rep.routes.push_back(closed);

  IdentityCase up = c;
  IdentityCase down = c;
  up.k = 1.0 + fd_step;
  down.k = 1.0 - fd_step;
  const Complex fd = (rhs_zeta(up) - rhs_zeta(down)) / (2.0 * fd_step);
  const RouteValue fd_route{"fd_derivative", fd, std::nullopt};
  rep.routes.push_back(fd_route);
  const RouteValue analytic{"analytic_derivative", rhs_zeta_dk(c), std::nullopt};
  rep.routes.push_back(analytic);

  const Tolerance tight{1e-6, 1e-6};
  const Tolerance fd_tol{1e-5, 1e-5};
  if (const auto* d = rep.route("direct")) {
    detail::add_residual(rep, *d, closed, tight);
    detail::add_residual(rep, fd_route, *d, fd_tol);
  }
  detail::add_residual(rep, analytic, closed, tight);
  detail::add_residual(rep, fd_route, closed, fd_tol);

  char buf[64];
  std::snprintf(buf, sizeof buf, "fd_step = %.17g", fd_step);
  rep.notes.emplace_back(buf);
  rep.verdict = detail::settle(rep, route_failed);
  return rep;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepConfig {
  QuadConfig quad{};
  ZetaConfig zeta{};
  Tolerance check{};
  bool parallel = true;
};

struct SweepResult {
  std::vector<VerificationReport> reports;  ///< k-major input order
  std::vector<std::string> notes;           ///< skipped pairs
};

inline std::vector<Complex> default_grid_k() {
  return {{-1.5, 0.0}, {-1.0, 0.0}, {-0.5, 0.0}, {0.5, 0.0}, {0.5, 0.3}, {2.0, 0.0}, {3.0, 0.0}};
}

inline std::vector<BranchedConstant> default_grid_a() {
  return {BranchedConstant::real(1.0), BranchedConstant::real(2.0), BranchedConstant::real(0.5),
          BranchedConstant(1.0, pi / 3.0), BranchedConstant(2.0, 0.75 * pi)};
}

/// Verifies the Cartesian product k_list x a_list. Pairs violating the case
/// invariants are skipped with a note. Reports come back in k-major input
/// order whether or not cases ran concurrently.
inline SweepResult sweep(const std::vector<Complex>& k_list,
                         const std::vector<BranchedConstant>& a_list, const SweepConfig& cfg = {}) {
  SweepResult out;
  std::vector<IdentityCase> cases;
  for (const Complex& k : k_list) {
    for (const BranchedConstant& a : a_list) {
      IdentityCase c{k, a, cfg.quad, cfg.zeta, cfg.check};
      if (auto why = case_violation(c)) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "skipped k=%s a=%.6g@%.6g: ", detail::complex_text(k).c_str(),
                      a.r(), a.theta());
        out.notes.push_back(buf + *why);
        continue;
      }
      cases.push_back(c);
    }
  }
  if (cases.empty()) {
    out.notes.emplace_back("no valid (k, a) pairs after filtering");
    return out;
  }
  out.reports.reserve(cases.size());
  if (cfg.parallel) {
    std::vector<std::future<VerificationReport>> jobs;
    jobs.reserve(cases.size());
    for (const auto& c : cases) jobs.push_back(std::async(std::launch::async, [c] { return verify(c); }));
    for (auto& j : jobs) out.reports.push_back(j.get());
  } else {
    for (const auto& c : cases) out.reports.push_back(verify(c));
  }
  return out;
}

}  // namespace zetaquad
