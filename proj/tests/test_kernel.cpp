#include <gtest/gtest.h>

#include <cmath>

#include "lifshitz/kernel.hpp"

using namespace lifshitz;

namespace {

// Fresnel amplitudes written in the textbook (difference) form.
double r_par_plain(double eps, double zeta, double y) {
  const double q = std::sqrt(y * y + zeta * zeta * (eps - 1.0));
  return (eps * y - q) / (eps * y + q);
}
double r_perp_plain(double eps, double zeta, double y) {
  const double q = std::sqrt(y * y + zeta * zeta * (eps - 1.0));
  return (q - y) / (q + y);
}

}  // namespace

TEST(Kernel, VacuumReflectsNothing) {
  const auto r = reflection_squares(Epsilon::finite(1.0), 0.5, 1.0);
  EXPECT_EQ(r.par, 0.0);
  EXPECT_EQ(r.perp, 0.0);
  EXPECT_EQ(free_energy_integrand(Epsilon::finite(1.0), 0.5, 1.0), 0.0);
  EXPECT_EQ(pressure_integrand(Epsilon::finite(1.0), 0.5, 1.0), 0.0);
}

TEST(Kernel, StaticLimitAtZeroFrequency) {
  for (double eps0 : {1.5, 2.0, 10.0}) {
    const auto r = reflection_squares(Epsilon::finite(eps0), 0.0, 0.7);
    const double expected = std::pow((eps0 - 1.0) / (eps0 + 1.0), 2);
    EXPECT_NEAR(r.par, expected, 1e-15);
    EXPECT_EQ(r.perp, 0.0);
  }
}

TEST(Kernel, HandEvaluatedPoint) {
  // eps = 2, zeta = 1, y = 1: both amplitudes have magnitude 3 - 2 sqrt(2), so the
  // squares are (3 - 2 sqrt 2)^2 = 17 - 12 sqrt 2.
  const auto r = reflection_squares(Epsilon::finite(2.0), 1.0, 1.0);
  const double amplitude = 3.0 - 2.0 * std::sqrt(2.0);
  const double square = 17.0 - 12.0 * std::sqrt(2.0);
  EXPECT_NEAR(std::sqrt(r.par), amplitude, 1e-14);
  EXPECT_NEAR(r.par, square, 1e-14);
  EXPECT_NEAR(r.perp, square, 1e-14);

  const double f = 2.0 * std::log(1.0 - square * std::exp(-1.0));
  EXPECT_NEAR(free_energy_integrand(Epsilon::finite(2.0), 1.0, 1.0), f, 1e-14);
  EXPECT_NEAR(f, -0.0217764, 1e-6);

  const double p = 2.0 * square / (std::exp(1.0) - square);
  EXPECT_NEAR(pressure_integrand(Epsilon::finite(2.0), 1.0, 1.0), p, 1e-14);
  EXPECT_NEAR(p, 0.0218962, 1e-6);
}

TEST(Kernel, DivergentPermittivityAtZeroFrequency) {
  const auto r = reflection_squares(Epsilon::infinite(), 0.0, 1.0);
  EXPECT_EQ(r.par, 1.0);
  EXPECT_EQ(r.perp, 0.0);
  EXPECT_NEAR(free_energy_integrand(Epsilon::infinite(), 0.0, 1.0), std::log(1.0 - std::exp(-1.0)), 1e-15);
  EXPECT_NEAR(free_energy_integrand(Epsilon::infinite(), 0.0, 1.0), -0.458675, 1e-6);
  EXPECT_NEAR(pressure_integrand(Epsilon::infinite(), 0.0, 1.0), 1.0 / (std::exp(1.0) - 1.0), 1e-15);
  EXPECT_NEAR(pressure_integrand(Epsilon::infinite(), 0.0, 1.0), 0.581977, 1e-6);
}

TEST(Kernel, RejectsNonPositiveY) {
  EXPECT_THROW(reflection_squares(Epsilon::finite(2.0), 0.5, 0.0), InvalidArgument);
  EXPECT_THROW(reflection_squares(Epsilon::finite(2.0), 0.5, -1.0), InvalidArgument);
  EXPECT_THROW(free_energy_integrand(Epsilon::finite(2.0), 0.5, 0.0), InvalidArgument);
  EXPECT_THROW(reflection_squares(Epsilon::finite(2.0), -0.5, 1.0), InvalidArgument);
}

TEST(Kernel, MatchesTextbookFormOnGrid) {
  for (double eps : {1.01, 2.0, 3.801, 100.0, 1e4}) {
    for (double zeta : {0.0, 0.1, 1.0, 7.0, 50.0}) {
      for (double y : {1e-3, 0.5, 1.0, 10.0, 50.0}) {
        if (y < zeta) continue;  // y >= zeta on the physical domain
        const auto r = reflection_squares(Epsilon::finite(eps), zeta, y);
        const double par = std::pow(r_par_plain(eps, zeta, y), 2);
        const double perp = std::pow(r_perp_plain(eps, zeta, y), 2);
        EXPECT_NEAR(r.par, par, 1e-13 * std::max(par, 1e-3));
        EXPECT_NEAR(r.perp, perp, 1e-13 * std::max(perp, 1e-3));
      }
    }
  }
}

TEST(Kernel, SquaresInUnitIntervalAndMonotoneInEps) {
  for (double zeta : {0.0, 0.3, 5.0, 50.0}) {
    for (double y : {0.01, 0.5, 3.0, 50.0}) {
      double previous_par = -1.0;
      double previous_perp = -1.0;
      for (double eps : {1.0, 1.5, 2.0, 5.0, 10.0, 100.0, 1e4}) {
        const auto r = reflection_squares(Epsilon::finite(eps), zeta, y);
        EXPECT_GE(r.par, 0.0);
        EXPECT_LT(r.par, 1.0);
        EXPECT_GE(r.perp, 0.0);
        EXPECT_LT(r.perp, 1.0);
        if (y >= zeta) {
          EXPECT_GE(r.par, previous_par);
          EXPECT_GE(r.perp, previous_perp);
        }
        previous_par = r.par;
        previous_perp = r.perp;
        EXPECT_LE(free_energy_integrand(Epsilon::finite(eps), zeta, y), 0.0);
        EXPECT_GE(pressure_integrand(Epsilon::finite(eps), zeta, y), 0.0);
      }
    }
  }
}

TEST(Kernel, ComplexContinuationAgreesOnRealAxis) {
  for (double y : {0.2, 1.0, 4.0}) {
    const auto c = reflection_squares_complex(2.0, Complex(0.0, 0.0), y);
    const auto r = reflection_squares(Epsilon::finite(2.0), 0.0, y);
    EXPECT_NEAR(c.par.real(), r.par, 1e-15);
    EXPECT_EQ(c.par.imag(), 0.0);
    EXPECT_NEAR(c.perp.real(), r.perp, 1e-15);
    const auto c1 = reflection_squares_complex(2.0, Complex(0.7, 0.0), y);
    const auto r1 = reflection_squares(Epsilon::finite(2.0), 0.7, y);
    EXPECT_NEAR(c1.par.real(), r1.par, 1e-15);
    EXPECT_NEAR(c1.perp.real(), r1.perp, 1e-15);
    EXPECT_NEAR(free_energy_integrand_complex(2.0, Complex(0.7, 0.0), Complex(y, 0.0)).real(),
                free_energy_integrand(Epsilon::finite(2.0), 0.7, y), 1e-15);
    EXPECT_NEAR(pressure_integrand_complex(2.0, Complex(0.7, 0.0), Complex(y, 0.0)).real(),
                pressure_integrand(Epsilon::finite(2.0), 0.7, y), 1e-15);
  }
}

TEST(Kernel, ImaginaryFrequencyBelowYGivesRealSquares) {
  const double t = 0.5;
  for (double y : {0.6, 1.0, 3.0}) {
    const auto r = reflection_squares_complex(2.0, Complex(0.0, t), y);
    EXPECT_EQ(r.par.imag(), 0.0);
    EXPECT_EQ(r.perp.imag(), 0.0);
    // Radicand y^2 - t^2 stays positive: textbook form with zeta^2 -> -t^2.
    const double q = std::sqrt(y * y - t * t);
    EXPECT_NEAR(r.perp.real(), std::pow((q - y) / (q + y), 2), 1e-15);
    EXPECT_NEAR(r.par.real(), std::pow((2.0 * y - q) / (2.0 * y + q), 2), 1e-15);
  }
}

TEST(Kernel, ConjugationSymmetry) {
  // x = 2i with y <= 1 lies on the cut of the square root.
  for (const Complex x : {Complex(0.0, 2.0), Complex(0.2, 2.0), Complex(0.3, 1.1), Complex(0.0, 0.01)}) {
    for (double y : {0.5, 1.0, 3.0}) {
      const auto up = reflection_squares_complex(2.0, x, y);
      const auto down = reflection_squares_complex(2.0, std::conj(x), y);
      EXPECT_NEAR(std::abs(up.par - std::conj(down.par)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(up.perp - std::conj(down.perp)), 0.0, 1e-15);
    }
  }
  const auto at_2i = reflection_squares_complex(2.0, Complex(0.0, 2.0), 1.0);
  EXPECT_NE(at_2i.par.imag(), 0.0);
}

TEST(Kernel, ComplexGuardsOutsideUnitDisk) {
  // |r^2 e^-y| is about 3.7 here.
  EXPECT_THROW(free_energy_integrand_complex(10.0, Complex(0.0, 1.0), Complex(0.0, -1.0)), DomainError);
  EXPECT_THROW(reflection_squares_complex(0.5, Complex(0.0, 1.0), 1.0), InvalidArgument);
  EXPECT_THROW(reflection_squares_complex(2.0, Complex(0.0, 1.0), -1.0), InvalidArgument);
}
