#pragma once

// Closed-form low-temperature (short-separation) expansions for two identical
// dielectric half-spaces described by their static permittivity eps0, and the
// closed forms for the dc-conductivity model.

#include <cmath>
#include <functional>
#include <iostream>
#include <mutex>
#include <string>
#include <string_view>

#include "errors.hpp"
#include "special.hpp"
#include "units.hpp"

namespace lifshitz {

using WarningHandler = std::function<void(std::string_view)>;

namespace detail {

inline std::mutex& warning_mutex() {
  static std::mutex m;
  return m;
}

inline WarningHandler& warning_handler() {
  static WarningHandler handler = [](std::string_view msg) { std::cerr << "warning: " << msg << '\n'; };
  return handler;
}

inline void warn(std::string_view msg) {
  std::lock_guard lock(warning_mutex());
  if (warning_handler()) warning_handler()(msg);
}

}  // namespace detail

/// Replaces the sink for library warnings (default: stderr). Returns the previous one.
inline WarningHandler set_warning_handler(WarningHandler handler) {
  std::lock_guard lock(detail::warning_mutex());
  auto previous = std::move(detail::warning_handler());
  detail::warning_handler() = std::move(handler);
  return previous;
}

/// Above this eps0 the expansions are still evaluated, but the ideal-metal
/// limit cannot be reached by taking eps0 -> infinity in them.
inline constexpr double kLargeEps0 = 1e4;

namespace detail {

inline void check_eps0(double eps0, std::string_view where) {
  if (!(std::isfinite(eps0) && eps0 >= 1.0)) {
    throw InvalidArgument(std::string(where) + ": eps0 must be finite and >= 1");
  }
  if (eps0 > kLargeEps0) {
    warn(std::string(where) + ": eps0 > 1e4; the expansion does not approach the ideal-metal limit");
  }
}

}  // namespace detail

/// Coefficients of
///   F - E = -(hbar c / 32 pi^2 a^3) [c3_F tau^3 - C4 tau^4]
///   S     = (k_B / a^2) [s2_S tau^2 + s3_S tau^3]
struct AsymptoticCoefficients {
  double c3_F = 0.0;
  double C4 = 0.0;
  double s2_S = 0.0;
  double s3_S = 0.0;

  /// alpha of the contour expansion F(ix) - F(-ix) = i k x^2 - i alpha x^3, alpha = 240 C4.
  double alpha() const { return 240.0 * C4; }
};

inline double coeff_c3(double eps0) {
  detail::check_eps0(eps0, "coeff_c3");
  const double em1 = eps0 - 1.0;
  return zeta3() * em1 * em1 / (8.0 * pi * pi * (eps0 + 1.0));
}

inline double coeff_C4(double eps0) {
  detail::check_eps0(eps0, "coeff_C4");
  const double s = std::sqrt(eps0);
  return (s - 1.0) * (eps0 * eps0 + eps0 * s - 2.0) / 720.0;
}

inline AsymptoticCoefficients asymptotic_coefficients(double eps0) {
  AsymptoticCoefficients c;
  c.c3_F = coeff_c3(eps0);
  c.C4 = coeff_C4(eps0);
  const double s = std::sqrt(eps0);
  const double em1 = eps0 - 1.0;
  c.s2_S = 3.0 * zeta3() * em1 * em1 / (64.0 * pi * pi * pi * (eps0 + 1.0));
  const double bracket = 2.0 * pi * pi * (eps0 + 1.0) * (eps0 * s + 2.0 * eps0 + 2.0 * s + 2.0) /
                         (135.0 * zeta3() * (s + 1.0) * (s + 1.0));
  c.s3_S = -c.s2_S * bracket;
  return c;
}

/// Leading coefficient k of [F(ix) - F(-ix)] / i = k x^2 - alpha x^3 + ...
inline double contour_coefficient_F(double eps0) {
  detail::check_eps0(eps0, "contour_coefficient_F");
  return pi * (eps0 - 1.0) * (eps0 - 1.0) / (2.0 * (eps0 + 1.0));
}

/// Leading coefficient K of [Phi(ix) - Phi(-ix)] / i = -K x^3 + ...
inline double contour_coefficient_Phi(double eps0) {
  detail::check_eps0(eps0, "contour_coefficient_Phi");
  const double s = std::sqrt(eps0);
  return (s - 1.0) * (eps0 * eps0 + eps0 * s - 2.0) / 3.0;
}

/// Thermal part of the free energy, F - E, to order tau^4 (J/m^2).
inline double free_energy_lowT(double eps0, double a, double T) {
  const PlateConfig cfg(a, T);
  const double tau = cfg.tau();
  const double tau3 = tau * tau * tau;
  return -cfg.energy_scale() * (coeff_c3(eps0) * tau3 - coeff_C4(eps0) * tau3 * tau);
}

/// Thermal part of the pressure, P - P0, to order tau^4 (Pa).
inline double pressure_lowT(double eps0, double a, double T) {
  const PlateConfig cfg(a, T);
  const double tau2 = cfg.tau() * cfg.tau();
  return -cfg.pressure_scale() * coeff_C4(eps0) * tau2 * tau2;
}

/// Entropy per unit area to order tau^3 (J/(K m^2)).
inline double entropy_lowT(double eps0, double a, double T) {
  const PlateConfig cfg(a, T);
  const auto c = asymptotic_coefficients(eps0);
  const double tau = cfg.tau();
  return PhysicalConstants::k_B / (a * a) * tau * tau * (c.s2_S + c.s3_S * tau);
}

/// zeta(3) - Li_3(r^2), r = (eps0 - 1)/(eps0 + 1) the static TM reflection coefficient.
inline double dc_gap(double eps0) {
  detail::check_eps0(eps0, "dc_gap");
  const double r = (eps0 - 1.0) / (eps0 + 1.0);
  return zeta3() - li3(r * r);
}

/// tau-independent free-energy shift from including dc conductivity (J/m^2);
/// the exponentially small remainder R(tau) is excluded.
inline double dc_shift(double eps0, double a, double T) {
  detail::require(std::isfinite(T) && T > 0.0, "dc_shift: temperature must be positive");
  detail::require(std::isfinite(a) && a > 0.0, "dc_shift: separation must be positive");
  return -PhysicalConstants::k_B * T / (16.0 * pi * a * a) * dc_gap(eps0);
}

/// Zero-temperature entropy left over by the dc-conductivity model (J/(K m^2)); > 0.
inline double nernst_entropy_dc(double eps0, double a) {
  detail::require(std::isfinite(a) && a > 0.0, "nernst_entropy_dc: separation must be positive");
  return PhysicalConstants::k_B / (16.0 * pi * a * a) * dc_gap(eps0);
}

}  // namespace lifshitz
