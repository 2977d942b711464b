#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "lifshitz/quadrature.hpp"

using namespace lifshitz;

TEST(Quadrature, KronrodRuleIsExactForLowDegreePolynomials) {
  // A single 21-point Kronrod panel integrates degree <= 31 exactly.
  for (int degree = 0; degree <= 31; ++degree) {
    auto f = [degree](double x) { return std::pow(x, degree); };
    const auto r = integrate(f, -1.0, 1.0);
    const double exact = degree % 2 == 1 ? 0.0 : 2.0 / (degree + 1);
    EXPECT_NEAR(r.value, exact, 1e-15) << "degree " << degree;
  }
}

TEST(Quadrature, SmoothIntegrals) {
  QuadratureSettings s;
  s.rel_tol = 1e-13;
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, M_PI, s).value, 2.0, 1e-13);
  EXPECT_NEAR(integrate([](double x) { return 1.0 / (1.0 + x * x); }, -10.0, 10.0, s).value, 2.0 * std::atan(10.0),
              1e-12);
  // Integrable endpoint singularity: needs adaptivity.
  EXPECT_NEAR(integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, s).value, 2.0 / 3.0, 1e-12);
}

TEST(Quadrature, ReversedLimitsFlipSign) {
  auto f = [](double x) { return std::exp(x); };
  EXPECT_NEAR(integrate(f, 1.0, 0.0).value, -(std::exp(1.0) - 1.0), 1e-13);
  EXPECT_EQ(integrate(f, 1.0, 1.0).value, 0.0);
}

TEST(Quadrature, ComplexIntegrand) {
  auto f = [](double x) { return std::exp(std::complex<double>(0.0, x)); };
  const auto r = integrate(f, 0.0, M_PI / 2.0);
  EXPECT_NEAR(r.value.real(), 1.0, 1e-13);
  EXPECT_NEAR(r.value.imag(), 1.0, 1e-13);
}

TEST(Quadrature, SemiInfinite) {
  QuadratureSettings s;
  s.rel_tol = 1e-13;
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, s).value, 1.0, 1e-13);
  EXPECT_NEAR(integrate_to_infinity([](double x) { return x * x * x * std::exp(-x); }, 0.0, s).value, 6.0, 1e-12);
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-x); }, 2.0, s).value, std::exp(-2.0), 1e-14);
  // Wider envelope with a matching scale.
  EXPECT_NEAR(integrate_to_infinity([](double x) { return std::exp(-x / 50.0); }, 0.0, s, 50.0).value, 50.0, 1e-10);
}

TEST(Quadrature, ErrorEstimateCoversTrueError) {
  auto f = [](double x) { return std::cos(30.0 * x) * std::exp(-x); };
  const double exact = (1.0 - std::exp(-2.0) * (std::cos(60.0) - 30.0 * std::sin(60.0))) / 901.0;
  QuadratureSettings s;
  s.rel_tol = 1e-6;
  const auto r = integrate(f, 0.0, 2.0, s);
  EXPECT_LE(std::abs(r.value - exact), r.error);
  EXPECT_GT(r.evaluations, 21);
  EXPECT_GE(r.intervals, 1);
}

TEST(Quadrature, NonIntegrableSingularityFails) {
  QuadratureSettings s;
  s.max_depth = 20;
  EXPECT_THROW(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0, s), QuadratureFailure);
}

TEST(Quadrature, NonFiniteIntegrandFails) {
  EXPECT_THROW(integrate([](double) { return NAN; }, 0.0, 1.0), QuadratureFailure);
}

TEST(Quadrature, SettingsValidation) {
  QuadratureSettings s;
  s.rel_tol = 0.0;
  EXPECT_THROW(s.validate(), InvalidArgument);
  s = {};
  s.abs_tol = -1.0;
  EXPECT_THROW(s.validate(), InvalidArgument);
  s = {};
  s.max_depth = 9;
  EXPECT_THROW(s.validate(), InvalidArgument);
  s = {};
  EXPECT_NO_THROW(s.validate());
}
