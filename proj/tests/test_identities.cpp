#include <gtest/gtest.h>

#include <cmath>
#include <string>
#include <vector>

#include <zetaquad/identities.hpp>

#include "support.hpp"

using namespace zetaquad;
using zqtest::close;
using zqtest::rel;

namespace {

constexpr double catalan_ref = 0.915965594177219015;
constexpr double catalan_value = -4.0 * catalan_ref / pi;

IdentityCase make(Complex k, BranchedConstant a = BranchedConstant::real(1.0)) {
  IdentityCase c;
  c.k = k;
  c.a = a;
  return c;
}

// Values from a 30-digit reference evaluation of the closed form.
struct Frozen {
  Complex k;
  BranchedConstant a;
  Complex value;
};

std::vector<Frozen> frozen() {
  return {
      {1.0, BranchedConstant::real(1.0), {-1.57079632679489662, 0.0}},
      {3.0, BranchedConstant::real(1.0), {-11.6273537551124326, 0.0}},
      {0.5, BranchedConstant::real(2.0), {-0.687014696882324877, 0.389394894326141714}},
      {{0.5, 0.3}, BranchedConstant(2.0, 0.75 * pi), {-0.352367953999399017, -0.0703665114762369065}},
      {-1.0, BranchedConstant::real(1.0), {-1.16624361612327512, 0.0}},
      {-1.5, BranchedConstant(1.0, pi / 3), {-0.268403263624683894, 0.268403263624683894}},
      {0.5, BranchedConstant::real(1.0), {-0.591726147256219140, 0.591726147256219140}},
      {-0.5, BranchedConstant(1.0, pi / 3), {-0.207903916692890763, -0.207903916692890763}},
      {2.0, BranchedConstant::real(0.5), {2.17758609030360213, 0.0}},
      {{0.5, 0.3}, BranchedConstant::real(1.0), {-0.605368588621751345, 0.143806411802298123}},
  };
}

}  // namespace

TEST(CaseInvariant, PositiveRealNeedsNonNegativeReK) {
  EXPECT_TRUE(case_violation(make(-0.5, BranchedConstant::real(2.0))).has_value());
  EXPECT_FALSE(case_violation(make(-0.5, BranchedConstant::real(1.0))).has_value());
  EXPECT_FALSE(case_violation(make(-0.5, BranchedConstant(2.0, 0.1))).has_value());
  EXPECT_TRUE(case_violation(make(-2.0)).has_value());
  EXPECT_FALSE(case_violation(make(-1.9)).has_value());
  EXPECT_THROW(verify(make(-1.0, BranchedConstant::real(2.0))), std::invalid_argument);
}

TEST(Integrand, Examples) {
  // the double nearest pi/4 gives u = ln tan y of order 1e-16, not 0
  EXPECT_LT(std::abs(integrand(pi / 4, -1.0, BranchedConstant::real(1.0)) - Complex(-1.0, 0.0)), 1e-15);
  EXPECT_LT(std::abs(integrand(pi / 4, 2.0, BranchedConstant::real(1.0))), 1e-30);
  EXPECT_LT(std::abs(integrand(std::nextafter(pi / 4, 1.0), -1.0, BranchedConstant::real(1.0)) + 1.0), 1e-15);
  const Complex v = integrand(pi / 3, 1.0, BranchedConstant::real(1.0));
  EXPECT_LT(std::abs(v - (-0.5 * std::log(std::sqrt(3.0)))), 1e-15);
}

TEST(Integrand, DomainErrors) {
  EXPECT_THROW(integrand(0.0, 1.0, BranchedConstant::real(1.0)), std::invalid_argument);
  EXPECT_THROW(integrand(pi / 2, 1.0, BranchedConstant::real(1.0)), std::invalid_argument);
  EXPECT_THROW(integrand(0.3, -2.5, BranchedConstant::real(1.0)), DomainError);
  const Complex near_zero = integrand(pi / 4, -1.5, BranchedConstant::real(1.0));
  EXPECT_TRUE(std::isfinite(near_zero.real()) && std::isfinite(near_zero.imag()));
}

TEST(Integrand, InnerLogIsNotReduced) {
  // theta = 3pi/2 stays on its sheet: log(a tan y) has imaginary part 3pi/2
  const BranchedConstant a(1.0, 1.5 * pi);
  const double y = 0.4;
  const Complex inner{std::log(std::tan(y)), 1.5 * pi};
  const Complex want = std::cos(2 * y) * complex_pow(inner, 0.5);
  EXPECT_LT(std::abs(integrand(y, 0.5, a) - want), 1e-15);
}

TEST(LhsIntegral, Examples) {
  EXPECT_LT(std::abs(lhs_integral(make(1.0)).value - (-pi / 2)), 1e-8);
  EXPECT_LT(std::abs(lhs_integral(make(2.0)).value), 1e-9);
  EXPECT_LT(std::abs(lhs_integral(make(-1.0)).value - catalan_value), 1e-8);
  EXPECT_LT(std::abs(lhs_integral(make(3.0)).value - (-3.0 * pi * pi * pi / 8.0)), 1e-8);
}

TEST(LhsIntegral, RejectsInvalidCase) {
  EXPECT_THROW(lhs_integral(make(-1.0, BranchedConstant::real(0.5))), std::invalid_argument);
}

TEST(RhsZeta, Examples) {
  EXPECT_LT(std::abs(rhs_zeta(make(-1.0)) - catalan_value), 1e-12);
  EXPECT_LT(std::abs(rhs_zeta(make(2.0))), 1e-9);
  EXPECT_LT(std::abs(rhs_zeta(make(3.0)) - (-3.0 * pi * pi * pi / 8.0)), 1e-10);
  EXPECT_EQ(rhs_zeta(make(0.0, BranchedConstant(2.0, 1.0))), Complex(0.0, 0.0));
}

TEST(RhsZeta, CatalanChain) {
  const Complex chain = -(hurwitz_zeta(2.0, 0.25) - hurwitz_zeta(2.0, 0.75)) / (4.0 * pi);
  EXPECT_LT(std::abs(chain - catalan_value), 1e-13);
  EXPECT_LT(std::abs(rhs_zeta(make(-1.0)) - chain), 1e-14);
}

TEST(RhsSeries, Examples) {
  EXPECT_LT(std::abs(rhs_series(make(-1.0)) - catalan_value), 1e-12);
  EXPECT_EQ(rhs_series(make(0.0, BranchedConstant(3.0, 2.0))), Complex(0.0, 0.0));
  const auto c = make(0.5);
  EXPECT_TRUE(close(rhs_series(c), rhs_zeta(c), 0.0, 1e-9));
}

TEST(RhsSeries, RegionError) {
  EXPECT_THROW(rhs_series(make(1.0)), RegionError);
  EXPECT_THROW(rhs_series(make({1.2, -0.4})), RegionError);
}

TEST(RhsContour, Examples) {
  const auto half = make(0.5);
  EXPECT_TRUE(close(rhs_contour(half).value, rhs_series(half), 0.0, 1e-6));
  // Re k < 0 with a = 2 fails the integrability invariant of the left
  // side, but both right-hand routes are defined there.
  const auto c = make(-0.5, BranchedConstant::real(2.0));
  EXPECT_TRUE(case_violation(c).has_value());
  EXPECT_TRUE(close(rhs_contour(c).value, rhs_zeta(c), 0.0, 1e-6));
}

TEST(RhsContour, IntegerAndRegionErrors) {
  EXPECT_THROW(rhs_contour(make(2.0)), RegionError);
  EXPECT_THROW(rhs_contour(make(-1.0)), RegionError);
  EXPECT_THROW(rhs_contour(make(1.5)), RegionError);
}

TEST(RhsContour, MatchesZetaOnGrid) {
  for (const double k : {-1.5, -0.5, 0.5}) {
    for (const BranchedConstant a : {BranchedConstant::real(1.0), BranchedConstant::real(2.0),
                                     BranchedConstant(1.0, pi / 3)}) {
      IdentityCase c;
      c.k = k;
      c.a = a;
      const auto q = rhs_contour(c);
      EXPECT_TRUE(q.converged);
      EXPECT_LE(std::abs(q.value - rhs_zeta(c)), 1e-6 * std::abs(rhs_zeta(c)))
          << "k=" << k << " a=" << a.r() << "@" << a.theta();
    }
  }
}

TEST(CauchyCheck, Examples) {
  EXPECT_LT(std::abs(contour_cauchy_check(1.0, 3) - 1.0 / 6.0), 1e-14);
  EXPECT_LT(std::abs(contour_cauchy_check(2.0, 1) - 2.0), 1e-14);
  EXPECT_LT(std::abs(contour_cauchy_check({0.5, 0.5}, 0) - 1.0), 1e-14);
  EXPECT_THROW(contour_cauchy_check(1.0, -1), std::invalid_argument);
}

TEST(CauchyCheck, KernelGrid) {
  for (const Complex y : {Complex(1.0), Complex(2.0), Complex(0.5, 0.5)}) {
    for (int k = 0; k <= 6; ++k) {
      const Complex want = complex_pow(y, k) / zetaquad::gamma(k + 1.0);
      EXPECT_LT(std::abs(contour_cauchy_check(y, k) - want), 1e-10) << "y=" << y << " k=" << k;
    }
  }
}

TEST(Catalan, ReferenceSeries) {
  EXPECT_LT(std::abs(catalan_constant() - catalan_ref), 1e-12);
}

TEST(Catalan, CaseReportPasses) {
  const auto rep = catalan_case();
  EXPECT_EQ(rep.verdict, Verdict::pass);
  for (const auto& r : rep.residuals) EXPECT_LE(r.value, 1e-8) << r.pair();
  ASSERT_NE(rep.route("lhs"), nullptr);
  EXPECT_LT(std::abs(rep.route("lhs")->value - catalan_value), 1e-8);
}

TEST(LogGamma, ClosedFormParts) {
  const Complex v = loggamma_closed_form();
  EXPECT_LT(std::abs(v.imag() - (-pi * pi / 4.0)), 1e-10);
  EXPECT_LT(std::abs(v.real() - (-1.04991071419291973)), 1e-12);
}

TEST(LogGamma, ClosedFormFromReferenceGammas) {
  // Gamma(-3/4) = -4/3 Gamma(1/4), Gamma(-1/4) = -4 Gamma(3/4)
  const double g14 = 3.62560990822190831;
  const double g34 = 1.22541670246517765;
  const double ratio = (4.0 / 3.0 * g14) / (4.0 * g34);
  const double re = 0.25 * pi * std::log(81.0 * std::pow(ratio, 4) / (4.0 * pi * pi * std::exp(2.0)));
  EXPECT_LT(std::abs(loggamma_closed_form().real() - re), 1e-12);
}

TEST(LogGamma, CaseReportPasses) {
  const auto rep = loggamma_case();
  EXPECT_EQ(rep.verdict, Verdict::pass);
  const auto* dc = rep.residual("direct", "closed_form");
  ASSERT_NE(dc, nullptr);
  EXPECT_LE(dc->value, 1e-6);
  const auto* fd = rep.residual("fd_derivative", "closed_form");
  ASSERT_NE(fd, nullptr);
  EXPECT_LE(fd->value, 1e-5);
  const auto* an = rep.residual("analytic_derivative", "closed_form");
  ASSERT_NE(an, nullptr);
  EXPECT_LE(an->value, 1e-10);
}

TEST(LogGamma, FdStepValidated) {
  EXPECT_THROW(loggamma_case({}, 0.0), std::invalid_argument);
  EXPECT_THROW(loggamma_case({}, 0.1), std::invalid_argument);
}

TEST(Verify, CatalanHasThreeRoutes) {
  const auto rep = verify(make(-1.0));
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_EQ(rep.routes.size(), 3u);
  EXPECT_EQ(rep.residuals.size(), 3u);
}

TEST(Verify, KThreeHasTwoRoutes) {
  const auto rep = verify(make(3.0));
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_EQ(rep.routes.size(), 2u);
  ASSERT_TRUE(rep.zeta_value().has_value());
  EXPECT_LT(std::abs(*rep.zeta_value() - (-3.0 * pi * pi * pi / 8.0)), 1e-8);
  ASSERT_TRUE(rep.lhs().has_value());
  EXPECT_LT(std::abs(rep.lhs()->value - (-3.0 * pi * pi * pi / 8.0)), 1e-8);
}

TEST(Verify, GeneralCaseHasFourRoutes) {
  const auto rep = verify(make({0.5, 0.3}, BranchedConstant(2.0, 0.75 * pi)));
  EXPECT_EQ(rep.verdict, Verdict::pass);
  EXPECT_EQ(rep.routes.size(), 4u);
  EXPECT_EQ(rep.residuals.size(), 6u);
  EXPECT_TRUE(rep.contour_value().has_value());
  EXPECT_TRUE(rep.series_value().has_value());
}

TEST(Verify, AbsurdToleranceFails) {
  auto c = make(-1.0);
  c.check = {1e-18, 1e-18};
  EXPECT_EQ(verify(c).verdict, Verdict::fail);
}

TEST(Verify, StarvedQuadratureIsPartialNotFatal) {
  auto c = make(0.5);
  c.quad.max_evals = 20;
  const auto rep = verify(c);
  EXPECT_NE(rep.verdict, Verdict::pass);
  EXPECT_FALSE(rep.notes.empty());
}

TEST(FrozenValues, ZetaAndLhsMatchReference) {
  for (const auto& f : frozen()) {
    const auto c = make(f.k, f.a);
    EXPECT_TRUE(close(rhs_zeta(c), f.value, 1e-12, 1e-12)) << "k=" << f.k << " got " << rhs_zeta(c);
    EXPECT_TRUE(close(lhs_integral(c).value, f.value, 1e-9, 1e-9)) << "k=" << f.k;
  }
}

TEST(IdentityProperty, SeriesEqualsZeta) {
  zqtest::Gen g(31);
  for (int i = 0; i < 20; ++i) {
    const Complex k = g.box(-1.8, 0.9, -1.0, 1.0);
    const BranchedConstant a(g.uniform(0.3, 3.0), g.uniform(0.0, two_pi - 1e-9));
    const auto c = make(k, a);
    EXPECT_TRUE(close(rhs_series(c), rhs_zeta(c), 0.0, 1e-9))
        << "k=" << k << " a=" << a.r() << "@" << a.theta();
  }
}

TEST(IdentityProperty, AntisymmetryAtEvenK) {
  for (const double k : {2.0, 4.0, 6.0}) {
    EXPECT_LE(std::abs(lhs_integral(make(k)).value), 1e-9) << k;
    EXPECT_LE(std::abs(rhs_zeta(make(k))), 1e-9) << k;
  }
}

TEST(IdentityProperty, SubstitutionConsistency) {
  const std::pair<double, double> cases[] = {{1.0, 1.0}, {3.0, 1.0}, {0.5, 2.0}};
  for (const auto& [k, r] : cases) {
    const auto c = make(k, BranchedConstant::real(r));
    EXPECT_LT(std::abs(lhs_integral(c).value - lhs_integral_direct(c).value), 1e-8) << k << "," << r;
  }
}

TEST(IdentityProperty, LhsMatchesZetaAtRandomCases) {
  zqtest::Gen g(32);
  for (int i = 0; i < 12; ++i) {
    const Complex k = g.box(-1.5, 3.0, -0.8, 0.8);
    const BranchedConstant a(g.uniform(0.4, 2.5), g.uniform(0.05, two_pi - 0.05));
    const auto c = make(k, a);
    const auto q = lhs_integral(c);
    ASSERT_TRUE(q.converged);
    EXPECT_TRUE(close(q.value, rhs_zeta(c), 1e-6, 1e-6)) << "k=" << k << " a=" << a.r() << "@" << a.theta();
  }
}

TEST(IdentityProperty, AnalyticDkMatchesDifference) {
  zqtest::Gen g(33);
  for (int i = 0; i < 10; ++i) {
    const Complex k = g.box(-1.5, 2.5, -0.5, 0.5);
    const BranchedConstant a(g.uniform(0.5, 2.0), g.uniform(0.0, 6.0));
    auto c = make(k, a);
    auto up = c;
    auto dn = c;
    const double h = 1e-5;
    up.k += h;
    dn.k -= h;
    const Complex fd = (rhs_zeta(up) - rhs_zeta(dn)) / (2 * h);
    EXPECT_TRUE(close(rhs_zeta_dk(c), fd, 1e-7, 1e-7)) << "k=" << k;
  }
}

TEST(Sweep, DefaultGridAllPass) {
  const auto res = sweep(default_grid_k(), default_grid_a());
  EXPECT_FALSE(res.reports.empty());
  for (const auto& r : res.reports) {
    EXPECT_EQ(r.verdict, Verdict::pass) << "k=" << r.identity_case.k << " a=" << r.identity_case.a.r()
                                        << "@" << r.identity_case.a.theta();
  }
  // 7 x 5 grid minus the 3 negative k against a = 2 and a = 1/2
  EXPECT_EQ(res.reports.size(), 35u - 6u);
  EXPECT_EQ(res.notes.size(), 6u);
}

TEST(Sweep, SingleCaseMatchesVerify) {
  const BranchedConstant a(1.0, pi / 3);
  const auto res = sweep({Complex(-0.5)}, {a});
  ASSERT_EQ(res.reports.size(), 1u);
  const auto direct = verify(make(-0.5, a));
  ASSERT_EQ(res.reports[0].routes.size(), direct.routes.size());
  for (std::size_t i = 0; i < direct.routes.size(); ++i) {
    EXPECT_EQ(res.reports[0].routes[i].name, direct.routes[i].name);
    EXPECT_EQ(res.reports[0].routes[i].value, direct.routes[i].value);
  }
  EXPECT_EQ(res.reports[0].verdict, direct.verdict);
}

TEST(Sweep, EmptyAfterFiltering) {
  const auto res = sweep({Complex(-1.0)}, {BranchedConstant::real(2.0)});
  EXPECT_TRUE(res.reports.empty());
  ASSERT_FALSE(res.notes.empty());
  EXPECT_NE(res.notes.back().find("no valid"), std::string::npos);
}

TEST(Sweep, ParallelMatchesSerialInOrder) {
  SweepConfig serial;
  serial.parallel = false;
  const auto ks = std::vector<Complex>{-0.5, 0.5, 2.0};
  const auto as = std::vector<BranchedConstant>{BranchedConstant::real(1.0), BranchedConstant(2.0, 0.75 * pi)};
  const auto p = sweep(ks, as);
  const auto s = sweep(ks, as, serial);
  ASSERT_EQ(p.reports.size(), s.reports.size());
  for (std::size_t i = 0; i < p.reports.size(); ++i) {
    EXPECT_EQ(p.reports[i].identity_case.k, s.reports[i].identity_case.k);
    EXPECT_EQ(p.reports[i].identity_case.a, s.reports[i].identity_case.a);
    ASSERT_EQ(p.reports[i].routes.size(), s.reports[i].routes.size());
    for (std::size_t j = 0; j < p.reports[i].routes.size(); ++j) {
      EXPECT_EQ(p.reports[i].routes[j].value, s.reports[i].routes[j].value);
    }
  }
}
