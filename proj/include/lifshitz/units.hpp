#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

#include "errors.hpp"

namespace lifshitz {

/// CODATA-2018 values (SI). c and k_B are exact by definition of the SI.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;  // J s
  static constexpr double c = 299792458.0;         // m / s
  static constexpr double k_B = 1.380649e-23;      // J / K
};

inline constexpr double pi = std::numbers::pi;

/// Dimensionless thermal parameter tau = 4 pi k_B a T / (hbar c).
inline double tau_from(double a, double T) {
  detail::require(std::isfinite(a) && std::isfinite(T), "tau_from: non-finite input");
  detail::require(a > 0.0, "tau_from: separation must be positive");
  detail::require(T >= 0.0, "tau_from: temperature must be non-negative");
  using C = PhysicalConstants;
  return 4.0 * pi * C::k_B * a * T / (C::hbar * C::c);
}

/// Characteristic frequency xi_c = c / (2a) in rad/s.
inline double characteristic_frequency(double a) {
  detail::require(std::isfinite(a) && a > 0.0, "characteristic_frequency: separation must be positive");
  return PhysicalConstants::c / (2.0 * a);
}

inline double matsubara_zeta(std::int64_t l, double tau) {
  detail::require(l >= 0, "matsubara_zeta: negative index");
  detail::require(std::isfinite(tau) && tau >= 0.0, "matsubara_zeta: tau must be finite and non-negative");
  return static_cast<double>(l) * tau;
}

/// xi_l = 2 pi k_B T l / hbar in rad/s.
inline double matsubara_xi(std::int64_t l, double T) {
  detail::require(l >= 0, "matsubara_xi: negative index");
  detail::require(std::isfinite(T) && T >= 0.0, "matsubara_xi: temperature must be finite and non-negative");
  using C = PhysicalConstants;
  return 2.0 * pi * C::k_B * T * static_cast<double>(l) / C::hbar;
}

/// Plate separation and temperature. The dimensionless state is derived on
/// every access so it can never go stale.
class PlateConfig {
 public:
  PlateConfig(double a, double T) : a_(a), T_(T) {
    detail::require(std::isfinite(a) && a > 0.0, "PlateConfig: separation must be positive and finite");
    detail::require(std::isfinite(T) && T >= 0.0, "PlateConfig: temperature must be non-negative and finite");
  }

  double a() const { return a_; }
  double T() const { return T_; }
  double tau() const { return tau_from(a_, T_); }
  double xi_c() const { return characteristic_frequency(a_); }

  /// hbar c / (32 pi^2 a^3): converts the reduced free energy to J/m^2.
  double energy_scale() const {
    using C = PhysicalConstants;
    return C::hbar * C::c / (32.0 * pi * pi * a_ * a_ * a_);
  }
  /// hbar c / (32 pi^2 a^4): converts the reduced pressure to Pa.
  double pressure_scale() const { return energy_scale() / a_; }

  PlateConfig with_a(double a) const { return {a, T_}; }
  PlateConfig with_T(double T) const { return {a_, T}; }

 private:
  double a_;
  double T_;
};

}  // namespace lifshitz
