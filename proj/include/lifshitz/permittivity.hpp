#pragma once

// Dielectric response along the imaginary frequency axis.

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "units.hpp"

namespace lifshitz {

/// Value of eps(i xi). `divergent` is set only for the dc-conductivity model at
/// xi = 0, where 4 pi sigma0 / xi has no finite value.
struct Epsilon {
  double value = 1.0;
  bool divergent = false;

  static Epsilon finite(double v) { return {v, false}; }
  static Epsilon infinite() { return {std::numeric_limits<double>::infinity(), true}; }
};

class StaticModel {
 public:
  explicit StaticModel(double eps0) : eps0_(eps0) {
    detail::require(std::isfinite(eps0) && eps0 >= 1.0, "StaticModel: eps0 must be finite and >= 1");
  }
  double eps0() const { return eps0_; }
  double at(double /*xi*/) const { return eps0_; }

 private:
  double eps0_;
};

struct Oscillator {
  double strength;   // C_j
  double frequency;  // w_j, rad/s
};

/// Undamped Ninham-Parsegian form eps(i xi) = 1 + sum_j C_j / (1 + xi^2 / w_j^2).
class OscillatorModel {
 public:
  explicit OscillatorModel(std::vector<Oscillator> oscillators) : oscillators_(std::move(oscillators)) {
    detail::require(!oscillators_.empty(), "OscillatorModel: at least one oscillator required");
    for (const auto& o : oscillators_) {
      detail::require(std::isfinite(o.strength) && o.strength > 0.0,
                      "OscillatorModel: strengths must be positive");
      detail::require(std::isfinite(o.frequency) && o.frequency > 0.0,
                      "OscillatorModel: frequencies must be positive");
    }
  }

  const std::vector<Oscillator>& oscillators() const { return oscillators_; }

  double eps0() const {
    double sum = 1.0;
    for (const auto& o : oscillators_) sum += o.strength;
    return sum;
  }

  double at(double xi) const {
    double sum = 1.0;
    for (const auto& o : oscillators_) {
      const double ratio = xi / o.frequency;
      sum += o.strength / (1.0 + ratio * ratio);
    }
    return sum;
  }

 private:
  std::vector<Oscillator> oscillators_;
};

using DielectricModel = std::variant<StaticModel, OscillatorModel>;

inline double base_eps0(const DielectricModel& m) {
  return std::visit([](const auto& x) { return x.eps0(); }, m);
}

inline double base_at(const DielectricModel& m, double xi) {
  return std::visit([xi](const auto& x) { return x.at(xi); }, m);
}

/// Wraps a dielectric with a thermally activated dc conductivity
/// sigma0(T) = sigma_ref exp(-b / T), Gaussian units (rad/s), so that
/// eps~(i xi) = eps(i xi) + 4 pi sigma0 / xi.
class DcConductivityModel {
 public:
  DcConductivityModel(DielectricModel base, double sigma_ref, double b)
      : base_(std::move(base)), sigma_ref_(sigma_ref), b_(b) {
    detail::require(std::isfinite(sigma_ref) && sigma_ref >= 0.0,
                    "DcConductivityModel: sigma_ref must be finite and non-negative");
    detail::require(std::isfinite(b) && b >= 0.0, "DcConductivityModel: b must be finite and non-negative");
  }

  /// Model whose beta(T_ref) = 2 hbar sigma0 / (k_B T_ref) equals `beta`.
  static DcConductivityModel with_beta(DielectricModel base, double beta, double T_ref, double b) {
    detail::require(std::isfinite(beta) && beta >= 0.0, "with_beta: beta must be non-negative");
    detail::require(std::isfinite(T_ref) && T_ref > 0.0, "with_beta: reference temperature must be positive");
    using C = PhysicalConstants;
    const double sigma0 = beta * C::k_B * T_ref / (2.0 * C::hbar);
    return {std::move(base), sigma0 * std::exp(b / T_ref), b};
  }

  const DielectricModel& base() const { return base_; }
  double sigma_ref() const { return sigma_ref_; }
  double b() const { return b_; }

  double sigma0(double T) const {
    detail::require(std::isfinite(T) && T >= 0.0, "DcConductivityModel: temperature must be non-negative");
    if (T == 0.0) return b_ > 0.0 ? 0.0 : sigma_ref_;
    return sigma_ref_ * std::exp(-b_ / T);
  }

  double beta(double T) const {
    detail::require(std::isfinite(T) && T > 0.0, "DcConductivityModel: beta needs T > 0");
    using C = PhysicalConstants;
    return 2.0 * C::hbar * sigma0(T) / (C::k_B * T);
  }

 private:
  DielectricModel base_;
  double sigma_ref_;
  double b_;
};

using PermittivityModel = std::variant<StaticModel, OscillatorModel, DcConductivityModel>;

/// Static permittivity of the dielectric part (the dc term excluded).
inline double static_permittivity(const PermittivityModel& model) {
  if (const auto* dc = std::get_if<DcConductivityModel>(&model)) return base_eps0(dc->base());
  if (const auto* s = std::get_if<StaticModel>(&model)) return s->eps0();
  return std::get<OscillatorModel>(model).eps0();
}

inline bool is_static(const PermittivityModel& model) {
  return std::holds_alternative<StaticModel>(model);
}

/// eps(i xi). T is only consulted by the dc-conductivity model.
inline Epsilon eval_at_imaginary(const PermittivityModel& model, double xi, double T = 0.0) {
  detail::require(std::isfinite(xi) && xi >= 0.0, "eval_at_imaginary: xi must be finite and non-negative");
  if (const auto* s = std::get_if<StaticModel>(&model)) return Epsilon::finite(s->eps0());
  if (const auto* o = std::get_if<OscillatorModel>(&model)) return Epsilon::finite(o->at(xi));
  const auto& dc = std::get<DcConductivityModel>(model);
  const double sigma0 = dc.sigma0(T);
  const double base = base_at(dc.base(), xi);
  if (sigma0 == 0.0) return Epsilon::finite(base);
  if (xi == 0.0) return Epsilon::infinite();
  return Epsilon::finite(base + 4.0 * pi * sigma0 / xi);
}

inline Epsilon eval_at_matsubara(const PermittivityModel& model, std::int64_t l, double T) {
  detail::require(l >= 0, "eval_at_matsubara: negative index");
  if (std::holds_alternative<DcConductivityModel>(model)) {
    detail::require(std::isfinite(T) && T > 0.0, "eval_at_matsubara: dc model needs T > 0");
  }
  return eval_at_imaginary(model, matsubara_xi(l, T), T);
}

}  // namespace lifshitz
