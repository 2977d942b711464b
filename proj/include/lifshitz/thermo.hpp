#pragma once

// Thermodynamic derivatives of the Lifshitz free energy, Nernst-theorem
// diagnostics, and the comparison of numerics against the low-T expansions.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abelplana.hpp"
#include "asymptotics.hpp"
#include "errors.hpp"
#include "fit.hpp"
#include "matsubara.hpp"
#include "permittivity.hpp"
#include "units.hpp"

namespace lifshitz {

struct NumericsSettings {
  QuadratureSettings quad{};
  SummationSettings sum{};
  /// Relative step for central differences (h = diff_step * T or diff_step * a).
  double diff_step = 1e-2;

  void validate() const {
    quad.validate();
    sum.validate();
    detail::require(diff_step > 0.0 && diff_step < 0.25, "NumericsSettings: diff_step must lie in (0, 0.25)");
  }
};

namespace detail {

/// Central difference with h, h/2, h/4 and Richardson extrapolation of the
/// last two levels. Throws StepTooLarge when the two extrapolants disagree by
/// more than 10x the predicted O(h^2) truncation error plus evaluation noise.
inline Estimate richardson_derivative(const std::function<Estimate(double)>& f, double x0, double h) {
  auto central = [&](double step) {
    const Estimate up = f(x0 + step);
    const Estimate down = f(x0 - step);
    return Estimate{(up.value - down.value) / (2.0 * step), (up.error + down.error) / (2.0 * step)};
  };
  const Estimate d1 = central(h);
  const Estimate d2 = central(0.5 * h);
  const Estimate d3 = central(0.25 * h);
  const double r1 = (4.0 * d2.value - d1.value) / 3.0;
  const double r2 = (4.0 * d3.value - d2.value) / 3.0;
  const double noise = (4.0 * d3.error + d2.error) / 3.0;
  const double predicted = std::abs(d2.value - d3.value) / 3.0;
  const double disagreement = std::abs(r1 - r2);
  if (disagreement > 10.0 * (predicted + noise) && disagreement > 1e-12 * std::abs(r2)) {
    throw StepTooLarge("finite difference: Richardson levels disagree; reduce the step");
  }
  return {r2, disagreement + noise};
}

}  // namespace detail

/// Delta F = F - E(a) through the most accurate available route.
inline ThermalCorrection thermal_free_energy(const PermittivityModel& model, const PlateConfig& config,
                                             const NumericsSettings& settings) {
  if (config.T() == 0.0) return {0.0, 0.0, "zero-T", std::nullopt, std::nullopt};
  return thermal_correction_F(model, config, settings.quad, ThermalRoute::automatic, settings.sum.max_terms);
}

inline ThermalCorrection thermal_pressure(const PermittivityModel& model, const PlateConfig& config,
                                          const NumericsSettings& settings) {
  if (config.T() == 0.0) return {0.0, 0.0, "zero-T", std::nullopt, std::nullopt};
  return thermal_correction_P(model, config, settings.quad, ThermalRoute::automatic, settings.sum.max_terms);
}

/// S = -dF/dT (J/(K m^2)). E(a) does not depend on T, so only Delta F is differenced.
inline Estimate entropy_numeric(const PermittivityModel& model, double a, double T,
                                const NumericsSettings& settings = {}) {
  settings.validate();
  detail::require(std::isfinite(T) && T > 0.0, "entropy_numeric: temperature must be positive");
  const double h = settings.diff_step * T;
  auto dF = [&](double temperature) {
    const auto r = thermal_free_energy(model, PlateConfig(a, temperature), settings);
    return Estimate{r.value, r.error};
  };
  const Estimate d = detail::richardson_derivative(dF, T, h);
  return {-d.value, d.error};
}

/// P = -dF/da (Pa) with F = E(a) + Delta F(a, T).
inline Estimate pressure_from_energy(const PermittivityModel& model, double a, double T,
                                     const NumericsSettings& settings = {}) {
  settings.validate();
  detail::require(std::isfinite(a) && a > 0.0, "pressure_from_energy: separation must be positive");
  const double h = settings.diff_step * a;
  auto F = [&](double separation) {
    const Estimate E = zero_temperature_energy(model, separation, settings.quad);
    if (T == 0.0) return E;
    const auto dF = thermal_free_energy(model, PlateConfig(separation, T), settings);
    return Estimate{E.value + dF.value, E.error + dF.error};
  };
  const Estimate d = detail::richardson_derivative(F, a, h);
  return {-d.value, d.error};
}

// ---------------------------------------------------------------------------
// Nernst heat theorem

enum class NernstClass { satisfies, violates, inconclusive };

inline const char* to_string(NernstClass c) {
  switch (c) {
    case NernstClass::satisfies: return "satisfies";
    case NernstClass::violates: return "violates";
    case NernstClass::inconclusive: return "inconclusive";
  }
  return "?";
}

struct NernstVerdict {
  double limit_estimate = 0.0;  // fitted S(T -> 0), J/(K m^2)
  bool expected_zero = true;
  double expected_value = 0.0;  // J/(K m^2)
  NernstClass classification = NernstClass::inconclusive;
  // Fit S = s0 + s2 tau^2 + s3 tau^3 (J/(K m^2)); s0 == limit_estimate.
  double s2 = 0.0;
  double s3 = 0.0;
  // Closed-form static-permittivity coefficients in the same units.
  double s2_reference = 0.0;
  double s3_reference = 0.0;
  std::vector<double> tau;
  std::vector<double> entropy;
};

/// Fits the entropy on a decreasing temperature grid and classifies its T -> 0 limit.
inline NernstVerdict nernst_diagnose(const PermittivityModel& model, double a, const std::vector<double>& T_grid,
                                     const NumericsSettings& settings = {}, double tol = 0.05) {
  detail::require(T_grid.size() >= 4, "nernst_diagnose: need at least 4 temperatures");
  detail::require(tol > 0.0, "nernst_diagnose: tolerance must be positive");
  for (std::size_t i = 0; i < T_grid.size(); ++i) {
    detail::require(T_grid[i] > 0.0, "nernst_diagnose: temperatures must be positive");
    if (i > 0) detail::require(T_grid[i] < T_grid[i - 1], "nernst_diagnose: grid must be strictly decreasing");
    detail::require(tau_from(a, T_grid[i]) <= 0.2 * (1.0 + 1e-12), "nernst_diagnose: every grid point needs tau <= 0.2");
  }

  NernstVerdict v;
  for (double T : T_grid) {
    v.tau.push_back(tau_from(a, T));
    v.entropy.push_back(entropy_numeric(model, a, T, settings).value);
  }
  const double exponents[] = {0.0, 2.0, 3.0};
  const auto fit = fit_powers(v.tau, v.entropy, exponents);
  v.limit_estimate = fit.coefficients[0];
  v.s2 = fit.coefficients[1];
  v.s3 = fit.coefficients[2];

  const double eps0 = static_permittivity(model);
  const auto coeffs = asymptotic_coefficients(eps0);
  const double unit = PhysicalConstants::k_B / (a * a);
  v.s2_reference = unit * coeffs.s2_S;
  v.s3_reference = unit * coeffs.s3_S;

  const auto* dc = std::get_if<DcConductivityModel>(&model);
  v.expected_zero = !(dc && dc->sigma0(T_grid.back()) > 0.0);
  v.expected_value = v.expected_zero ? 0.0 : nernst_entropy_dc(eps0, a);

  double scale = 0.0;
  for (double s : v.entropy) scale = std::max(scale, std::abs(s));
  if (std::abs(v.limit_estimate) <= tol * scale || (scale == 0.0 && v.limit_estimate == 0.0)) {
    v.classification = NernstClass::satisfies;
  } else if (v.limit_estimate > 0.0 && !v.expected_zero &&
             std::abs(v.limit_estimate - v.expected_value) <= tol * v.expected_value) {
    v.classification = NernstClass::violates;
  } else {
    v.classification = NernstClass::inconclusive;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Asymptote vs numerics

struct AsymptoteComparison {
  double deviation = 0.0;   // |dF_numeric - dF_asymptotic| / |dF_numeric|
  double numeric = 0.0;     // J/m^2
  double asymptotic = 0.0;  // J/m^2
  std::string method;
};

inline AsymptoteComparison asymptote_error(const PermittivityModel& model, double a, double T,
                                           const NumericsSettings& settings = {}) {
  settings.validate();
  detail::require(std::isfinite(T) && T > 0.0, "asymptote_error: temperature must be positive");
  const auto numeric = thermal_free_energy(model, PlateConfig(a, T), settings);
  AsymptoteComparison c;
  c.numeric = numeric.value;
  c.asymptotic = free_energy_lowT(static_permittivity(model), a, T);
  c.method = numeric.method;
  c.deviation = numeric.value == 0.0 ? std::abs(c.asymptotic) : std::abs(c.numeric - c.asymptotic) / std::abs(c.numeric);
  return c;
}

// ---------------------------------------------------------------------------
// Report

struct Quantity {
  double value = 0.0;
  double error = 0.0;
  std::string method;
};

struct ThermoReport {
  std::optional<Quantity> E, dF, F;
  std::optional<Quantity> P0, dP, P;
  std::optional<Quantity> S;
};

struct ReportRequest {
  bool energy = true;
  bool pressure = true;
  bool entropy = true;
};

inline ThermoReport thermo_report(const PermittivityModel& model, const PlateConfig& config,
                                  const NumericsSettings& settings = {}, ReportRequest request = {}) {
  settings.validate();
  ThermoReport r;
  const double a = config.a();
  const double T = config.T();
  if (request.energy) {
    const Estimate E = zero_temperature_energy(model, a, settings.quad);
    const auto dF = thermal_free_energy(model, config, settings);
    r.E = Quantity{E.value, E.error, "quadrature"};
    r.dF = Quantity{dF.value, dF.error, dF.method};
    r.F = Quantity{E.value + dF.value, E.error + dF.error, "E+dF"};
  }
  if (request.pressure) {
    const Estimate P0 = zero_temperature_pressure(model, a, settings.quad);
    const auto dP = thermal_pressure(model, config, settings);
    r.P0 = Quantity{P0.value, P0.error, "quadrature"};
    r.dP = Quantity{dP.value, dP.error, dP.method};
    r.P = Quantity{P0.value + dP.value, P0.error + dP.error, "P0+dP"};
  }
  if (request.entropy) {
    if (T > 0.0) {
      const Estimate S = entropy_numeric(model, a, T, settings);
      const std::string route = is_static(model) ? "contour" : "difference";
      r.S = Quantity{S.value, S.error, "fd-" + route};
    } else {
      const auto* dc = std::get_if<DcConductivityModel>(&model);
      const bool residual = dc && dc->sigma_ref() > 0.0;
      r.S = residual ? Quantity{nernst_entropy_dc(static_permittivity(model), a), 0.0, "closed-form-T0"}
                     : Quantity{0.0, 0.0, "zero-T"};
    }
  }
  return r;
}

}  // namespace lifshitz
