#pragma once

// Single-frequency spectral functions of the reduced (dimensionless) Lifshitz
// formulas:
//   F(zeta)   = int_zeta^inf f(zeta, y) dy
//   Phi(zeta) = int_zeta^inf y^2 [r^2/(e^y - r^2)]_{par+perp} dy
// Both are integrated in the shifted variable s = y - zeta >= 0.

#include <algorithm>
#include <cmath>

#include "kernel.hpp"
#include "permittivity.hpp"
#include "quadrature.hpp"

namespace lifshitz {

inline QuadratureResult<double> spectral_free_energy(const Epsilon& eps, double zeta,
                                                     const QuadratureSettings& quad) {
  auto integrand = [&](double s) {
    const double y = zeta + s;
    return y > 0.0 ? free_energy_integrand(eps, zeta, y) : 0.0;
  };
  return integrate_to_infinity(integrand, 0.0, quad);
}

inline QuadratureResult<double> spectral_pressure(const Epsilon& eps, double zeta,
                                                  const QuadratureSettings& quad) {
  auto integrand = [&](double s) {
    const double y = zeta + s;
    return y > 0.0 ? pressure_integrand(eps, zeta, y) : 0.0;
  };
  return integrate_to_infinity(integrand, 0.0, quad);
}

/// Which of the two spectral functions a routine works on.
enum class Spectral { free_energy, pressure };

inline QuadratureResult<double> spectral(Spectral kind, const Epsilon& eps, double zeta,
                                         const QuadratureSettings& quad) {
  return kind == Spectral::free_energy ? spectral_free_energy(eps, zeta, quad)
                                       : spectral_pressure(eps, zeta, quad);
}

namespace detail {

/// Settings for an inner integral nested inside an outer one.
inline QuadratureSettings inner_settings(const QuadratureSettings& outer) {
  QuadratureSettings inner = outer;
  inner.rel_tol = std::max(outer.rel_tol * 0.1, 1e-15);
  inner.abs_tol = outer.abs_tol * 0.1;
  return inner;
}

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace detail
}  // namespace lifshitz
