#pragma once

// Direct Matsubara summation of the Lifshitz free energy and pressure.

#include <cmath>
#include <cstdint>
#include <string>

#include "errors.hpp"
#include "permittivity.hpp"
#include "quadrature.hpp"
#include "reduced.hpp"
#include "units.hpp"

namespace lifshitz {

struct SummationSettings {
  double rel_tol = 1e-9;
  std::int64_t max_terms = 1'000'000;
  QuadratureSettings quad{};

  void validate() const {
    detail::require(rel_tol > 0.0 && rel_tol <= 1e-4, "SummationSettings: rel_tol must lie in (0, 1e-4]");
    detail::require(max_terms >= 10, "SummationSettings: max_terms must be at least 10");
    quad.validate();
  }
};

struct SumResult {
  double value = 0.0;  // SI (J/m^2 or Pa)
  double error = 0.0;
  double reduced = 0.0;  // dimensionless sum tau * sum' spectral(zeta_l)
  std::int64_t terms = 0;
};

/// tau * sum'_{l >= first} spectral(eps_l, l tau), the l = 0 term halved.
/// Stops at the first l >= 8 with |term| <= rel_tol |sum| (1 - e^-tau).
inline SumResult reduced_matsubara_sum(Spectral kind, const PermittivityModel& model, const PlateConfig& config,
                                       const SummationSettings& settings, std::int64_t first = 0) {
  settings.validate();
  detail::require(config.T() > 0.0, "matsubara sum: temperature must be positive");
  detail::require(first >= 0, "matsubara sum: negative first index");
  const double tau = config.tau();
  const double T = config.T();
  const double envelope = -std::expm1(-tau);

  detail::CompensatedSum sum;
  double error = 0.0;
  SumResult result;
  for (std::int64_t l = first;; ++l) {
    if (l - first >= settings.max_terms) {
      throw NoConvergence("matsubara sum: max_terms (" + std::to_string(settings.max_terms) +
                          ") reached before the tail criterion");
    }
    const double zeta = matsubara_zeta(l, tau);
    const auto spectral_term = spectral(kind, eval_at_matsubara(model, l, T), zeta, settings.quad);
    const double weight = (l == 0) ? 0.5 * tau : tau;
    const double term = weight * spectral_term.value;
    sum.add(term);
    error += weight * spectral_term.error;
    ++result.terms;
    const double partial = sum.value();
    if (l >= 8 && std::abs(term) <= settings.rel_tol * std::abs(partial) * envelope) {
      // Terms decay at least like e^{-tau l}; bound the tail by the geometric series.
      error += std::abs(term) * std::exp(-tau) / envelope;
      break;
    }
  }
  result.reduced = sum.value();
  result.error = error;
  return result;
}

/// Free energy per unit area (J/m^2) by direct Matsubara summation.
inline SumResult free_energy(const PermittivityModel& model, const PlateConfig& config,
                             const SummationSettings& settings = {}) {
  SumResult r = reduced_matsubara_sum(Spectral::free_energy, model, config, settings);
  r.value = config.energy_scale() * r.reduced;
  r.error *= config.energy_scale();
  return r;
}

/// Pressure (Pa, negative = attraction) by direct Matsubara summation.
inline SumResult pressure(const PermittivityModel& model, const PlateConfig& config,
                          const SummationSettings& settings = {}) {
  SumResult r = reduced_matsubara_sum(Spectral::pressure, model, config, settings);
  r.value = -config.pressure_scale() * r.reduced;
  r.error *= config.pressure_scale();
  return r;
}

/// Free energy with the dc-conductivity permittivity; the l = 0 term takes the
/// eps -> infinity limit (r_par^2 = 1) whenever sigma0(T) > 0.
inline SumResult free_energy_dc(const DcConductivityModel& model, const PlateConfig& config,
                                const SummationSettings& settings = {}) {
  return free_energy(PermittivityModel{model}, config, settings);
}

/// Free energy restricted to l >= first (J/m^2).
inline SumResult free_energy_partial(const PermittivityModel& model, const PlateConfig& config,
                                     const SummationSettings& settings, std::int64_t first) {
  SumResult r = reduced_matsubara_sum(Spectral::free_energy, model, config, settings, first);
  r.value = config.energy_scale() * r.reduced;
  r.error *= config.energy_scale();
  return r;
}

}  // namespace lifshitz
