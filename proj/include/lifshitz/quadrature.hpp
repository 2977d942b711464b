#pragma once

// Globally adaptive Gauss-Kronrod (10/21) quadrature for smooth real or complex
// integrands, plus a semi-infinite variant for exponentially decaying tails.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <string>
#include <type_traits>
#include <vector>

#include "errors.hpp"

namespace lifshitz {

struct QuadratureSettings {
  double rel_tol = 1e-10;
  double abs_tol = 1e-20;
  int max_depth = 40;
  int max_intervals = 4000;

  void validate() const {
    detail::require(rel_tol > 0.0 && abs_tol > 0.0, "QuadratureSettings: tolerances must be positive");
    detail::require(max_depth >= 10, "QuadratureSettings: max_depth must be at least 10");
    detail::require(max_intervals >= 1, "QuadratureSettings: max_intervals must be positive");
  }
};

template <class Value>
struct QuadratureResult {
  Value value{};
  double error = 0.0;
  int evaluations = 0;
  int intervals = 0;
  /// True when the requested tolerance was below what rounding allows and the
  /// result was accepted at the rounding floor instead.
  bool roundoff_limited = false;
};

namespace detail {

// Kronrod abscissae on [-1, 1]; odd indices (1, 3, ..., 9) are the 10-point Gauss nodes.
inline constexpr double kXgk[11] = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.0};
inline constexpr double kWgk[11] = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr double kWg[5] = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

template <class Value>
struct Panel {
  double lo = 0.0;
  double hi = 0.0;
  Value value{};
  double error = 0.0;
  double roundoff = 0.0;
  int depth = 0;
};

template <class Value>
bool finite_value(const Value& v) {
  if constexpr (std::is_floating_point_v<Value>) {
    return std::isfinite(v);
  } else {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
  }
}

template <class Value, class F>
Panel<Value> gauss_kronrod21(F& f, double lo, double hi, int depth) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);

  Value fv_lo[10];
  Value fv_hi[10];
  const Value fc = f(center);
  Value kronrod = kWgk[10] * fc;
  Value gauss{};
  double resabs = kWgk[10] * std::abs(fc);
  for (int j = 0; j < 10; ++j) {
    const double dx = half * kXgk[j];
    fv_lo[j] = f(center - dx);
    fv_hi[j] = f(center + dx);
    const Value sum = fv_lo[j] + fv_hi[j];
    kronrod += kWgk[j] * sum;
    resabs += kWgk[j] * (std::abs(fv_lo[j]) + std::abs(fv_hi[j]));
    if (j % 2 == 1) gauss += kWg[j / 2] * sum;
  }
  const Value mean = 0.5 * kronrod;
  double resasc = kWgk[10] * std::abs(fc - mean);
  for (int j = 0; j < 10; ++j) {
    resasc += kWgk[j] * (std::abs(fv_lo[j] - mean) + std::abs(fv_hi[j] - mean));
  }

  const double width = std::abs(half);
  resabs *= width;
  resasc *= width;
  double err = std::abs((kronrod - gauss) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double roundoff = 50.0 * eps * resabs;
  err = std::max(err, roundoff);

  Panel<Value> panel;
  panel.lo = lo;
  panel.hi = hi;
  panel.value = kronrod * half;
  panel.error = err;
  panel.roundoff = roundoff;
  panel.depth = depth;
  if (!finite_value(panel.value) || !std::isfinite(err)) {
    throw QuadratureFailure("quadrature: non-finite integrand on [" + std::to_string(lo) + ", " +
                            std::to_string(hi) + "]");
  }
  return panel;
}

}  // namespace detail

/// Integrates f over [lo, hi] until the summed error estimate is below
/// max(abs_tol, rel_tol * |I|). The value type (double or std::complex<double>)
/// is taken from f's return type.
template <class F>
auto integrate(F&& f, double lo, double hi, const QuadratureSettings& settings = {})
    -> QuadratureResult<std::decay_t<decltype(f(lo))>> {
  using Value = std::decay_t<decltype(f(lo))>;
  settings.validate();
  QuadratureResult<Value> result;
  if (lo == hi) return result;

  auto by_error = [](const detail::Panel<Value>& x, const detail::Panel<Value>& y) {
    return x.error < y.error;
  };
  std::vector<detail::Panel<Value>> heap;
  heap.reserve(64);
  heap.push_back(detail::gauss_kronrod21<Value>(f, lo, hi, 0));
  result.evaluations = 21;

  Value total = heap.front().value;
  double total_error = heap.front().error;
  double total_roundoff = heap.front().roundoff;

  for (;;) {
    const double target = std::max(settings.abs_tol, settings.rel_tol * std::abs(total));
    if (total_error <= target) break;
    if (total_error <= 2.0 * total_roundoff) {
      result.roundoff_limited = true;
      break;
    }
    std::pop_heap(heap.begin(), heap.end(), by_error);
    detail::Panel<Value> worst = heap.back();
    heap.pop_back();
    if (worst.depth >= settings.max_depth || static_cast<int>(heap.size()) + 2 > settings.max_intervals) {
      char msg[160];
      std::snprintf(msg, sizeof msg, "quadrature: tolerance not met on [%.6g, %.6g] (error %.3e, target %.3e)", lo,
                    hi, total_error, target);
      throw QuadratureFailure(msg);
    }
    const double mid = 0.5 * (worst.lo + worst.hi);
    auto left = detail::gauss_kronrod21<Value>(f, worst.lo, mid, worst.depth + 1);
    auto right = detail::gauss_kronrod21<Value>(f, mid, worst.hi, worst.depth + 1);
    result.evaluations += 42;
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    total_roundoff += left.roundoff + right.roundoff - worst.roundoff;
    heap.push_back(left);
    std::push_heap(heap.begin(), heap.end(), by_error);
    heap.push_back(right);
    std::push_heap(heap.begin(), heap.end(), by_error);
  }

  // Re-sum from the panels so the running updates leave no drift.
  Value value{};
  double error = 0.0;
  std::sort(heap.begin(), heap.end(), [](const auto& x, const auto& y) { return x.lo < y.lo; });
  for (const auto& p : heap) {
    value += p.value;
    error += p.error;
  }
  result.value = value;
  result.error = error;
  result.intervals = static_cast<int>(heap.size());
  return result;
}

/// Integrates f over [lo, inf) through x = lo + scale * t / (1 - t). Suited to
/// integrands with an exponential envelope of decay length ~scale: the mapped
/// integrand and all its derivatives vanish at t = 1.
template <class F>
auto integrate_to_infinity(F&& f, double lo, const QuadratureSettings& settings = {},
                           double scale = 1.0) -> QuadratureResult<std::decay_t<decltype(f(lo))>> {
  using Value = std::decay_t<decltype(f(lo))>;
  auto mapped = [&](double t) -> Value {
    const double one_minus = 1.0 - t;
    const double x = lo + scale * t / one_minus;
    const Value v = f(x);
    if (v == Value{}) return v;
    return v * (scale / (one_minus * one_minus));
  };
  return integrate(mapped, 0.0, 1.0, settings);
}

}  // namespace lifshitz
