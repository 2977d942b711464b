#pragma once

// Fresnel reflection coefficients at imaginary frequency and the integrands of
// the reduced free-energy and pressure formulas. Only squared coefficients are
// ever formed, so analytic continuation never has to pick a sign for r.

#include <cmath>
#include <complex>

#include "errors.hpp"
#include "permittivity.hpp"

namespace lifshitz {

template <class T>
struct ReflectionSquares {
  T par{};   // TM
  T perp{};  // TE
};

using Complex = std::complex<double>;

namespace detail {

// Cancellation-free forms:
//   r_perp = (q - y)/(q + y)       = zeta^2 (eps - 1) / (q + y)^2
//   r_par  = (eps y - q)/(eps y + q) = (eps - 1)((eps + 1) y^2 - zeta^2) / (eps y + q)^2
// with q = sqrt(y^2 + zeta^2 (eps - 1)).
inline double radicand_root(double r, double) { return std::sqrt(r); }

// On the cut (real negative radicand) take the limit from Re zeta -> 0+, where
// Im(zeta^2) has the sign of Im zeta; this keeps conj(r^2(x)) = r^2(conj x).
inline Complex radicand_root(Complex r, const Complex& zeta) {
  if (r.imag() == 0.0 && r.real() < 0.0) r = {r.real(), std::copysign(0.0, zeta.imag())};
  return std::sqrt(r);
}

template <class T>
ReflectionSquares<T> fresnel_squares(double eps, const T& zeta, const T& y) {
  const double em1 = eps - 1.0;
  const T z2 = zeta * zeta;
  const T q = radicand_root(y * y + z2 * em1, zeta);
  const T sum_perp = q + y;
  const T sum_par = eps * y + q;
  const T r_perp = z2 * em1 / (sum_perp * sum_perp);
  const T r_par = em1 * ((eps + 1.0) * y * y - z2) / (sum_par * sum_par);
  return {r_par * r_par, r_perp * r_perp};
}

// log(1 + z) without losing the small-|z| digits.
inline Complex log1p(const Complex& z) {
  const double re = z.real();
  const double im = z.imag();
  return {0.5 * std::log1p(2.0 * re + re * re + im * im), std::atan2(im, 1.0 + re)};
}

}  // namespace detail

inline ReflectionSquares<double> reflection_squares(const Epsilon& eps, double zeta, double y) {
  detail::require(std::isfinite(y) && y > 0.0, "reflection_squares: y must be positive");
  detail::require(std::isfinite(zeta) && zeta >= 0.0, "reflection_squares: zeta must be non-negative");
  if (eps.divergent) {
    // eps -> infinity: r_par -> 1 always; r_perp -> 1 unless zeta = 0, where it is 0 for any eps.
    return {1.0, zeta == 0.0 ? 0.0 : 1.0};
  }
  detail::require(eps.value >= 1.0, "reflection_squares: eps must be >= 1");
  return detail::fresnel_squares<double>(eps.value, zeta, y);
}

/// f(zeta, y) = y { ln[1 - r_par^2 e^-y] + ln[1 - r_perp^2 e^-y] }.
inline double free_energy_integrand(const Epsilon& eps, double zeta, double y) {
  const auto r = reflection_squares(eps, zeta, y);
  const double decay = std::exp(-y);
  const double w_par = r.par * decay;
  const double w_perp = r.perp * decay;
  if (w_par >= 1.0 || w_perp >= 1.0) throw DomainError("free_energy_integrand: 1 - r^2 e^-y <= 0");
  return y * (std::log1p(-w_par) + std::log1p(-w_perp));
}

/// y^2 [ r_par^2/(e^y - r_par^2) + r_perp^2/(e^y - r_perp^2) ], evaluated with e^-y to avoid overflow.
inline double pressure_integrand(const Epsilon& eps, double zeta, double y) {
  const auto r = reflection_squares(eps, zeta, y);
  const double decay = std::exp(-y);
  const double w_par = r.par * decay;
  const double w_perp = r.perp * decay;
  if (w_par >= 1.0 || w_perp >= 1.0) throw DomainError("pressure_integrand: e^y - r^2 <= 0");
  return y * y * (w_par / (1.0 - w_par) + w_perp / (1.0 - w_perp));
}

/// Reflection squares continued to complex frequency x (zeta -> x) and complex y,
/// static permittivity only. The square root is the principal branch, which
/// agrees with the physical values on the positive real axis; on the cut itself
/// the value is the limit from Re x > 0.
inline ReflectionSquares<Complex> reflection_squares_complex(double eps0, const Complex& x, const Complex& y) {
  detail::require(std::isfinite(eps0) && eps0 >= 1.0, "reflection_squares_complex: eps0 must be >= 1");
  return detail::fresnel_squares<Complex>(eps0, x, y);
}

inline ReflectionSquares<Complex> reflection_squares_complex(double eps0, const Complex& x, double y) {
  detail::require(y >= 0.0, "reflection_squares_complex: y must be non-negative");
  return reflection_squares_complex(eps0, x, Complex(y, 0.0));
}

inline Complex free_energy_integrand_complex(double eps0, const Complex& x, const Complex& y) {
  const auto r = reflection_squares_complex(eps0, x, y);
  const Complex decay = std::exp(-y);
  const Complex w_par = r.par * decay;
  const Complex w_perp = r.perp * decay;
  if (std::abs(w_par) >= 1.0 || std::abs(w_perp) >= 1.0 || !std::isfinite(std::abs(w_par)) ||
      !std::isfinite(std::abs(w_perp))) {
    throw DomainError("free_energy_integrand_complex: |r^2 e^-y| >= 1 off the real axis");
  }
  return y * (detail::log1p(-w_par) + detail::log1p(-w_perp));
}

inline Complex pressure_integrand_complex(double eps0, const Complex& x, const Complex& y) {
  const auto r = reflection_squares_complex(eps0, x, y);
  const Complex decay = std::exp(-y);
  const Complex w_par = r.par * decay;
  const Complex w_perp = r.perp * decay;
  if (std::abs(w_par) >= 1.0 || std::abs(w_perp) >= 1.0 || !std::isfinite(std::abs(w_par)) ||
      !std::isfinite(std::abs(w_perp))) {
    throw DomainError("pressure_integrand_complex: |r^2 e^-y| >= 1 off the real axis");
  }
  return y * y * (w_par / (1.0 - w_par) + w_perp / (1.0 - w_perp));
}

}  // namespace lifshitz
