#include <gtest/gtest.h>

#include <cmath>

#include "lifshitz/matsubara.hpp"
#include "lifshitz/asymptotics.hpp"

using namespace lifshitz;

namespace {

constexpr double kHbar = 1.054571817e-34;
constexpr double kC = 299792458.0;

struct Squares {
  double par;
  double perp;
};

Squares plain_squares(double eps, double zeta, double y) {
  const double q = std::sqrt(y * y + zeta * zeta * (eps - 1.0));
  const double par = (eps * y - q) / (eps * y + q);
  const double perp = (q - y) / (q + y);
  return {par * par, perp * perp};
}

// Brute-force oracle: fixed composite Simpson on s in [0, 60] for every term up
// to zeta = 700, no adaptivity and no truncation rule.
double brute_force_reduced(bool pressure, double eps, double tau) {
  const int n = 20000;
  const double width = 60.0;
  const double h = width / n;
  double total = 0.0;
  for (int l = 0; l * tau <= 700.0; ++l) {
    const double zeta = l * tau;
    double term = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double y = zeta + i * h;
      if (y == 0.0) continue;  // integrand vanishes there
      const auto r = plain_squares(eps, zeta, y);
      double v;
      if (pressure) {
        v = y * y * (r.par / (std::exp(y) - r.par) + r.perp / (std::exp(y) - r.perp));
      } else {
        v = y * (std::log(1.0 - r.par * std::exp(-y)) + std::log(1.0 - r.perp * std::exp(-y)));
      }
      const double w = (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
      term += w * v;
    }
    term *= h / 3.0;
    total += (l == 0 ? 0.5 : 1.0) * term;
  }
  return tau * total;
}

}  // namespace

TEST(Matsubara, VacuumGivesZero) {
  const PlateConfig cfg(1e-6, 300.0);
  EXPECT_EQ(free_energy(StaticModel(1.0), cfg).value, 0.0);
  EXPECT_EQ(pressure(StaticModel(1.0), cfg).value, 0.0);
}

TEST(Matsubara, FreeEnergyMatchesBruteForce) {
  const PlateConfig cfg(1e-6, 300.0);
  const auto r = free_energy(StaticModel(2.0), cfg);
  const double scale = kHbar * kC / (32.0 * M_PI * M_PI * 1e-18);
  const double oracle = scale * brute_force_reduced(false, 2.0, cfg.tau());
  EXPECT_LT(r.value, 0.0);
  EXPECT_NEAR(r.value, oracle, 1e-8 * std::abs(oracle));
  EXPECT_GT(r.terms, 8);
  EXPECT_GE(r.error, 0.0);
}

TEST(Matsubara, PressureMatchesBruteForce) {
  const PlateConfig cfg(1e-6, 300.0);
  const auto r = pressure(StaticModel(2.0), cfg);
  const double scale = kHbar * kC / (32.0 * M_PI * M_PI * 1e-24);
  const double oracle = -scale * brute_force_reduced(true, 2.0, cfg.tau());
  EXPECT_LT(r.value, 0.0);
  EXPECT_NEAR(r.value, oracle, 1e-8 * std::abs(oracle));
}

TEST(Matsubara, StaticScalingAtFixedTau) {
  const PermittivityModel m = StaticModel(2.0);
  const double F1 = free_energy(m, PlateConfig(1e-6, 300.0)).value;
  const double F2 = free_energy(m, PlateConfig(2e-6, 150.0)).value;
  EXPECT_NEAR(F2, F1 / 8.0, 1e-12 * std::abs(F1));
  const double P1 = pressure(m, PlateConfig(1e-6, 300.0)).value;
  const double P2 = pressure(m, PlateConfig(2e-6, 150.0)).value;
  EXPECT_NEAR(P2, P1 / 16.0, 1e-12 * std::abs(P1));
}

TEST(Matsubara, ReducedSumDependsOnlyOnTau) {
  const PermittivityModel m = StaticModel(5.0);
  const auto r1 = free_energy(m, PlateConfig(9e-7, 100.0));
  const auto r2 = free_energy(m, PlateConfig(3e-7, 300.0));
  EXPECT_NEAR(r1.reduced, r2.reduced, 1e-10 * std::abs(r1.reduced));
}

TEST(Matsubara, TermsDecreaseMonotonically) {
  const PlateConfig cfg(1e-6, 300.0);
  double previous = INFINITY;
  for (int l = 1; l < 12; ++l) {
    const double term = std::abs(spectral_free_energy(Epsilon::finite(2.0), matsubara_zeta(l, cfg.tau()), {}).value);
    EXPECT_LT(term, previous);
    previous = term;
  }
}

TEST(Matsubara, ZeroTemperatureRejected) {
  EXPECT_THROW(free_energy(StaticModel(2.0), PlateConfig(1e-6, 0.0)), InvalidArgument);
}

TEST(Matsubara, MaxTermsExhausted) {
  SummationSettings s;
  s.max_terms = 10;
  // Very small tau needs thousands of terms.
  EXPECT_THROW(free_energy(StaticModel(2.0), PlateConfig(1e-8, 1.0), s), NoConvergence);
}

TEST(Matsubara, SettingsValidation) {
  SummationSettings s;
  s.rel_tol = 1e-3;
  EXPECT_THROW(s.validate(), InvalidArgument);
  s = {};
  s.max_terms = 9;
  EXPECT_THROW(s.validate(), InvalidArgument);
}

TEST(Matsubara, DcWithZeroConductivityEqualsBase) {
  const PlateConfig cfg(1e-6, 300.0);
  const auto dc = DcConductivityModel(StaticModel(2.0), 0.0, 0.0);
  EXPECT_EQ(free_energy_dc(dc, cfg).value, free_energy(StaticModel(2.0), cfg).value);
}

TEST(Matsubara, DcShiftOfZeroFrequencyTerm) {
  // With beta negligible at l >= 1, only the l = 0 term changes, by exactly
  // -(k_B T / 16 pi a^2)(zeta(3) - Li3(r0^2)).
  const double a = 1e-6;
  const double T = 300.0;
  const PlateConfig cfg(a, T);
  const auto dc = DcConductivityModel::with_beta(StaticModel(2.0), 1e-12, T, 0.0);
  const double shift = free_energy_dc(dc, cfg).value - free_energy(StaticModel(2.0), cfg).value;
  const double expected = dc_shift(2.0, a, T);
  EXPECT_NEAR(shift, expected, 1e-7 * std::abs(expected));
}

TEST(Matsubara, BetaNegligibleForPositiveIndices) {
  const PlateConfig cfg(1e-6, 300.0);
  SummationSettings s;
  s.rel_tol = 1e-12;
  const auto dc = DcConductivityModel::with_beta(StaticModel(3.801), 1e-12, 300.0, 0.0);
  const double with = free_energy_partial(dc, cfg, s, 1).value;
  const double without = free_energy_partial(StaticModel(3.801), cfg, s, 1).value;
  EXPECT_LT(std::abs(with - without) / std::abs(without), 1e-10);
}

TEST(Matsubara, PartialSumSplitsTheTotal) {
  const PlateConfig cfg(1e-6, 300.0);
  const PermittivityModel m = StaticModel(2.0);
  const double total = free_energy(m, cfg).value;
  const double tail = free_energy_partial(m, cfg, {}, 1).value;
  const double head = cfg.energy_scale() * cfg.tau() * 0.5 * spectral_free_energy(Epsilon::finite(2.0), 0.0, {}).value;
  EXPECT_NEAR(head + tail, total, 1e-9 * std::abs(total));
}
