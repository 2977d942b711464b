#pragma once

// Zero-temperature energy and pressure, the complex-contour spectral functions,
// and the thermal corrections obtained from the Abel-Plana decomposition
//   sum'_{l>=0} G(l) = int_0^inf G(t) dt + i int_0^inf [G(it) - G(-it)] / (e^{2 pi t} - 1) dt.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <string>

#include "errors.hpp"
#include "kernel.hpp"
#include "permittivity.hpp"
#include "quadrature.hpp"
#include "reduced.hpp"
#include "units.hpp"

namespace lifshitz {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

// ---------------------------------------------------------------------------
// T = 0 quantities

/// int_0^inf dzeta spectral(eps(i zeta xi_c), zeta), with the permittivity of
/// the model at zero temperature.
inline Estimate reduced_zero_temperature(Spectral kind, const PermittivityModel& model, double a,
                                         const QuadratureSettings& quad) {
  const double xi_c = characteristic_frequency(a);
  const QuadratureSettings inner = detail::inner_settings(quad);
  double inner_error = 0.0;
  auto outer = [&](double zeta) {
    const auto spectral_term = spectral(kind, eval_at_imaginary(model, zeta * xi_c, 0.0), zeta, inner);
    inner_error += spectral_term.error;
    return spectral_term.value;
  };
  const auto r = integrate_to_infinity(outer, 0.0, quad);
  // Inner errors are accumulated per node; weight them by the mean node weight.
  const double mean_weight = r.evaluations > 0 ? 1.0 / r.evaluations : 0.0;
  return {r.value, r.error + inner_error * mean_weight};
}

/// E(a) in J/m^2.
inline Estimate zero_temperature_energy(const PermittivityModel& model, double a,
                                        const QuadratureSettings& quad = {}) {
  quad.validate();
  const PlateConfig cfg(a, 0.0);
  const auto r = reduced_zero_temperature(Spectral::free_energy, model, a, quad);
  return {cfg.energy_scale() * r.value, cfg.energy_scale() * r.error};
}

/// P0(a) in Pa: the continuous-frequency limit of the pressure sum.
inline Estimate zero_temperature_pressure(const PermittivityModel& model, double a,
                                          const QuadratureSettings& quad = {}) {
  quad.validate();
  const PlateConfig cfg(a, 0.0);
  const auto r = reduced_zero_temperature(Spectral::pressure, model, a, quad);
  return {-cfg.pressure_scale() * r.value, cfg.pressure_scale() * r.error};
}

// ---------------------------------------------------------------------------
// Complex-contour spectral functions (static permittivity)

/// F(x) = int_0^inf f(x, x + s) ds along the path parallel to the real axis.
inline QuadratureResult<Complex> contour_F(double eps0, const Complex& x, const QuadratureSettings& quad = {}) {
  detail::require(x.real() >= 0.0, "contour_F: Re(x) must be non-negative");
  auto integrand = [&](double s) { return free_energy_integrand_complex(eps0, x, x + s); };
  return integrate_to_infinity(integrand, 0.0, quad);
}

/// Phi(x) = Phi_par(x) + Phi_perp(x) along the same path.
inline QuadratureResult<Complex> contour_Phi(double eps0, const Complex& x, const QuadratureSettings& quad = {}) {
  detail::require(x.real() >= 0.0, "contour_Phi: Re(x) must be non-negative");
  auto integrand = [&](double s) { return pressure_integrand_complex(eps0, x, x + s); };
  return integrate_to_infinity(integrand, 0.0, quad);
}

/// Absolute rounding level of [G(ix) - G(-ix)] / i. The imaginary parts are
/// taken from complex values of size ~G(0), so their noise does not shrink with x.
inline double contour_noise_floor(Spectral kind, double eps0, const QuadratureSettings& quad = {}) {
  const double g0 = spectral(kind, Epsilon::finite(eps0), 0.0, quad).value;
  return 64.0 * std::numeric_limits<double>::epsilon() * std::abs(g0);
}

/// [G(ix) - G(-ix)] / i for real x, where G is F or Phi. Real by conjugation symmetry;
/// evaluated as one real integral of the imaginary parts. A negative `noise_floor`
/// means "compute it"; the integral is not refined below that level.
inline QuadratureResult<double> contour_difference(Spectral kind, double eps0, double x,
                                                   const QuadratureSettings& quad = {}, double noise_floor = -1.0) {
  detail::require(std::isfinite(x), "contour_difference: x must be finite");
  if (noise_floor < 0.0) noise_floor = contour_noise_floor(kind, eps0, quad);
  QuadratureSettings settings = quad;
  settings.abs_tol = std::max(quad.abs_tol, noise_floor);
  const Complex up(0.0, x);
  const Complex down(0.0, -x);
  auto integrand = [&](double s) {
    if (kind == Spectral::free_energy) {
      return free_energy_integrand_complex(eps0, up, up + s).imag() -
             free_energy_integrand_complex(eps0, down, down + s).imag();
    }
    return pressure_integrand_complex(eps0, up, up + s).imag() -
           pressure_integrand_complex(eps0, down, down + s).imag();
  };
  return integrate_to_infinity(integrand, 0.0, settings);
}

// ---------------------------------------------------------------------------
// Thermal corrections

enum class ThermalRoute {
  both,        // difference and contour (static model), cross-checked
  difference,  // Matsubara sum minus the T = 0 integral
  contour,     // Abel-Plana contour integral (static model only)
  automatic,   // contour for a static model, difference otherwise
};

struct ThermalCorrection {
  double value = 0.0;  // SI
  double error = 0.0;
  std::string method;  // route that produced `value`
  std::optional<Estimate> difference;
  std::optional<Estimate> contour;
};

/// Reduced thermal correction via the contour term:
///   -tau int_0^{t_max} D(tau t) / (e^{2 pi t} - 1) dt,  D(x) = [G(ix) - G(-ix)] / i.
/// t_max is where e^{-2 pi t} drops below abs_tol.
inline Estimate reduced_thermal_contour(Spectral kind, double eps0, double tau, const QuadratureSettings& quad) {
  if (tau == 0.0 || eps0 == 1.0) return {};
  const QuadratureSettings inner = detail::inner_settings(quad);
  const double t_max = std::log(1.0 / quad.abs_tol) / (2.0 * pi) + 1.0;
  const double floor = contour_noise_floor(kind, eps0, inner);
  QuadratureSettings outer = quad;
  outer.abs_tol = std::max(quad.abs_tol, tau * floor);
  double inner_error = 0.0;
  auto integrand = [&](double t) {
    const auto d = contour_difference(kind, eps0, tau * t, inner, floor);
    const double weight = 1.0 / std::expm1(2.0 * pi * t);
    inner_error += weight * d.error;
    return -tau * d.value * weight;
  };
  const auto r = integrate(integrand, 0.0, t_max, outer);
  const double mean_weight = r.evaluations > 0 ? t_max / r.evaluations : 0.0;
  return {r.value, r.error + tau * inner_error * mean_weight};
}

/// Reduced thermal correction as (Matsubara sum) - (T = 0 integral), evaluated
/// panel by panel: on [tau l, tau (l+1)] the contribution is the trapezoid defect
///   tau (G_l + G_{l+1}) / 2 - int_panel G0(zeta) dzeta,
/// where G_l are the Matsubara-term spectral values and G0 the zero-temperature
/// spectral function. Summing defects avoids subtracting two nearly equal totals.
inline Estimate reduced_thermal_difference(Spectral kind, const PermittivityModel& model, const PlateConfig& config,
                                           const QuadratureSettings& quad, std::int64_t max_panels = 1'000'000) {
  const double tau = config.tau();
  if (tau == 0.0) return {};
  // Panels decay roughly like e^-zeta; fail up front when the cap cannot reach the tail.
  if (-std::log(quad.rel_tol) / tau > static_cast<double>(max_panels)) {
    throw NoConvergence("thermal difference route: tau too small for the panel limit");
  }
  const double T = config.T();
  const double xi_c = config.xi_c();
  const double envelope = -std::expm1(-tau);

  QuadratureSettings node = quad;
  node.rel_tol = 1e-14;
  node.abs_tol = std::min(quad.abs_tol, 1e-30);

  auto matsubara_value = [&](std::int64_t l) {
    return spectral(kind, eval_at_matsubara(model, l, T), matsubara_zeta(l, tau), node).value;
  };
  auto zero_temperature_value = [&](double zeta) {
    return spectral(kind, eval_at_imaginary(model, zeta * xi_c, 0.0), zeta, node).value;
  };

  detail::CompensatedSum total;
  double magnitude = 0.0;
  double error = 0.0;
  double left = matsubara_value(0);
  for (std::int64_t l = 0;; ++l) {
    if (l >= max_panels) throw NoConvergence("thermal difference route: panel limit reached");
    const double lo = matsubara_zeta(l, tau);
    const double hi = matsubara_zeta(l + 1, tau);
    const double right = matsubara_value(l + 1);
    auto defect = [&](double zeta) {
      const double w = (zeta - lo) / tau;
      return (1.0 - w) * left + w * right - zero_temperature_value(zeta);
    };
    QuadratureSettings panel = quad;
    // Node values carry ~1e-14 relative noise; do not chase the defect below it.
    panel.abs_tol = std::max(quad.abs_tol, 1e-13 * tau * std::max(std::abs(left), std::abs(right)));
    const auto r = integrate(defect, lo, hi, panel);
    total.add(r.value);
    magnitude += std::abs(r.value);
    error += r.error;
    left = right;
    if (l >= 8 && std::abs(r.value) <= quad.rel_tol * magnitude * envelope &&
        std::abs(tau * right) <= quad.rel_tol * magnitude) {
      error += std::abs(r.value) * std::exp(-tau) / envelope;
      break;
    }
    if (magnitude == 0.0 && l >= 8) break;
  }
  return {total.value(), error};
}

namespace detail {

inline ThermalCorrection thermal_correction(Spectral kind, const PermittivityModel& model, const PlateConfig& config,
                                            const QuadratureSettings& quad, ThermalRoute route,
                                            std::int64_t max_panels) {
  quad.validate();
  detail::require(config.T() > 0.0, "thermal correction: temperature must be positive");
  const bool static_model = is_static(model);
  if (route == ThermalRoute::automatic) route = static_model ? ThermalRoute::contour : ThermalRoute::difference;
  if (route == ThermalRoute::contour) {
    detail::require(static_model, "thermal correction: contour route needs a static permittivity");
  }
  // Free energy scales with +energy_scale; pressure with -pressure_scale.
  const double scale = kind == Spectral::free_energy ? config.energy_scale() : -config.pressure_scale();

  ThermalCorrection out;
  if (route == ThermalRoute::difference || (route == ThermalRoute::both)) {
    const auto d = reduced_thermal_difference(kind, model, config, quad, max_panels);
    out.difference = Estimate{scale * d.value, std::abs(scale) * d.error};
  }
  if (static_model && (route == ThermalRoute::contour || route == ThermalRoute::both)) {
    const double eps0 = static_permittivity(model);
    const auto c = reduced_thermal_contour(kind, eps0, config.tau(), quad);
    out.contour = Estimate{scale * c.value, std::abs(scale) * c.error};
  }
  if (out.difference && out.contour) {
    const double gap = std::abs(out.difference->value - out.contour->value);
    const double budget = 100.0 * (out.difference->error + out.contour->error);
    if (gap > budget) {
      throw MethodDisagreement("thermal correction: difference and contour routes disagree (gap " +
                               std::to_string(gap) + ", budget " + std::to_string(budget) + ")");
    }
  }
  const Estimate& chosen = out.contour ? *out.contour : *out.difference;
  out.value = chosen.value;
  out.error = chosen.error;
  out.method = out.contour ? "contour" : "difference";
  return out;
}

}  // namespace detail

/// Delta F(a, T) in J/m^2.
inline ThermalCorrection thermal_correction_F(const PermittivityModel& model, const PlateConfig& config,
                                              const QuadratureSettings& quad = {},
                                              ThermalRoute route = ThermalRoute::both,
                                              std::int64_t max_panels = 1'000'000) {
  return detail::thermal_correction(Spectral::free_energy, model, config, quad, route, max_panels);
}

/// Delta P(a, T) in Pa.
inline ThermalCorrection thermal_correction_P(const PermittivityModel& model, const PlateConfig& config,
                                              const QuadratureSettings& quad = {},
                                              ThermalRoute route = ThermalRoute::both,
                                              std::int64_t max_panels = 1'000'000) {
  return detail::thermal_correction(Spectral::pressure, model, config, quad, route, max_panels);
}

}  // namespace lifshitz
