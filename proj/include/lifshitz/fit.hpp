#pragma once

// Small least-squares fits used to extract expansion coefficients.

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "errors.hpp"

namespace lifshitz {

struct LinearFit {
  std::vector<double> coefficients;  // one per exponent, in input order
  double rms_residual = 0.0;
  double condition = 1.0;  // ratio of extreme |R_ii| after column scaling
};

/// Least-squares fit y ~ sum_k c_k x^{p_k} by Householder QR.
inline LinearFit fit_powers(std::span<const double> x, std::span<const double> y, std::span<const double> exponents,
                            double max_condition = 1e12) {
  const std::size_t n = x.size();
  const std::size_t k = exponents.size();
  detail::require(y.size() == n, "fit_powers: x and y differ in length");
  detail::require(k >= 1, "fit_powers: no basis functions");
  if (n < k) throw IllConditionedFit("fit_powers: fewer points than basis functions");

  // Column-major design matrix with unit-max columns.
  std::vector<double> A(n * k);
  std::vector<double> col_scale(k, 0.0);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const double v = std::pow(x[i], exponents[j]);
      A[j * n + i] = v;
      col_scale[j] = std::max(col_scale[j], std::abs(v));
    }
    if (col_scale[j] == 0.0) throw IllConditionedFit("fit_powers: basis column vanishes on the grid");
    for (std::size_t i = 0; i < n; ++i) A[j * n + i] /= col_scale[j];
  }
  std::vector<double> b(y.begin(), y.end());

  std::vector<double> diag(k);
  for (std::size_t j = 0; j < k; ++j) {
    double norm = 0.0;
    for (std::size_t i = j; i < n; ++i) norm += A[j * n + i] * A[j * n + i];
    norm = std::sqrt(norm);
    const double alpha = A[j * n + j] > 0.0 ? -norm : norm;
    std::vector<double> v(n, 0.0);
    for (std::size_t i = j; i < n; ++i) v[i] = A[j * n + i];
    v[j] -= alpha;
    double vnorm2 = 0.0;
    for (std::size_t i = j; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 > 0.0) {
      for (std::size_t c = j; c < k; ++c) {
        double dot = 0.0;
        for (std::size_t i = j; i < n; ++i) dot += v[i] * A[c * n + i];
        const double f = 2.0 * dot / vnorm2;
        for (std::size_t i = j; i < n; ++i) A[c * n + i] -= f * v[i];
      }
      double dot = 0.0;
      for (std::size_t i = j; i < n; ++i) dot += v[i] * b[i];
      const double f = 2.0 * dot / vnorm2;
      for (std::size_t i = j; i < n; ++i) b[i] -= f * v[i];
    }
    diag[j] = A[j * n + j];
  }

  const auto [dmin, dmax] = std::minmax_element(diag.begin(), diag.end(),
                                                [](double p, double q) { return std::abs(p) < std::abs(q); });
  LinearFit fit;
  fit.condition = std::abs(*dmin) > 0.0 ? std::abs(*dmax) / std::abs(*dmin) : std::numeric_limits<double>::infinity();
  if (!(fit.condition <= max_condition)) {
    throw IllConditionedFit("fit_powers: design matrix is ill-conditioned (grid too narrow)");
  }

  fit.coefficients.assign(k, 0.0);
  for (std::size_t jj = k; jj-- > 0;) {
    double s = b[jj];
    for (std::size_t c = jj + 1; c < k; ++c) s -= A[c * n + jj] * fit.coefficients[c];
    fit.coefficients[jj] = s / A[jj * n + jj];
  }
  double ss = 0.0;
  for (std::size_t i = k; i < n; ++i) ss += b[i] * b[i];
  fit.rms_residual = std::sqrt(ss / static_cast<double>(n));
  for (std::size_t j = 0; j < k; ++j) fit.coefficients[j] /= col_scale[j];
  return fit;
}

struct PowerLaw {
  double exponent = 0.0;
  double prefactor = 0.0;
};

/// Fits |y| ~ prefactor * x^exponent by linear regression in log-log space.
inline PowerLaw fit_power_law(std::span<const double> x, std::span<const double> y) {
  detail::require(x.size() == y.size() && x.size() >= 2, "fit_power_law: need at least two points");
  std::vector<double> lx;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    detail::require(x[i] > 0.0 && y[i] != 0.0, "fit_power_law: x must be positive and y non-zero");
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(std::abs(y[i])));
  }
  const double mx = [&] { double s = 0; for (double v : lx) s += v; return s / lx.size(); }();
  const double my = [&] { double s = 0; for (double v : ly) s += v; return s / ly.size(); }();
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sxx += (lx[i] - mx) * (lx[i] - mx);
    sxy += (lx[i] - mx) * (ly[i] - my);
  }
  if (sxx == 0.0) throw IllConditionedFit("fit_power_law: all x identical");
  PowerLaw p;
  p.exponent = sxy / sxx;
  p.prefactor = std::exp(my - p.exponent * mx);
  return p;
}

}  // namespace lifshitz
