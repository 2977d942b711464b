#pragma once

#include <array>
#include <cmath>
#include <numbers>

#include "errors.hpp"

namespace lifshitz {

namespace detail {

// zeta(3) = (5/2) sum_{k>=1} (-1)^{k+1} / (k^3 binom(2k, k)); each term is ~4x smaller.
inline double zeta3_series() {
  double sum = 0.0;
  double binom = 1.0;  // binom(2k, k), updated incrementally
  for (int k = 1; k <= 40; ++k) {
    binom *= 2.0 * (2.0 * k - 1.0) / k;
    const double kd = static_cast<double>(k);
    const double term = 1.0 / (kd * kd * kd * binom);
    sum += (k % 2 == 1) ? term : -term;
    if (term < 1e-18 * sum) break;
  }
  return 2.5 * sum;
}

}  // namespace detail

/// Riemann zeta(3) (Apery's constant), computed once.
inline double zeta3() {
  static const double value = detail::zeta3_series();
  return value;
}

/// Trilogarithm Li_3(z) = sum_{k>=1} z^k / k^3 for 0 <= z < 1.
inline double li3(double z) {
  if (!(z >= 0.0 && z < 1.0)) throw DomainError("li3: argument outside [0, 1)");
  if (z <= 0.5) {
    double sum = 0.0;
    double power = z;
    for (int k = 1; k < 200 && power != 0.0; ++k) {
      const double kd = static_cast<double>(k);
      const double term = power / (kd * kd * kd);
      sum += term;
      if (term < 1e-18 * sum) break;
      power *= z;
    }
    return sum;
  }
  // Expansion about z = 1 in mu = ln z (|mu| < ln 2 here):
  // Li_3(e^mu) = zeta(3) + zeta(2) mu + mu^2/2 (3/2 - ln(-mu)) + sum_{k>=3} zeta(3-k) mu^k / k!
  // with zeta(3-k) = 0 for odd k >= 5.
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  const double mu = std::log(z);
  double sum = zeta3() + pi2 / 6.0 * mu + 0.5 * mu * mu * (1.5 - std::log(-mu));
  // zeta(0), zeta(-1), zeta(-3), ..., zeta(-17) for k = 3, 4, 6, ..., 20
  constexpr std::array<std::pair<int, double>, 10> tail = {{{3, -0.5},
                                                             {4, -1.0 / 12.0},
                                                             {6, 1.0 / 120.0},
                                                             {8, -1.0 / 252.0},
                                                             {10, 1.0 / 240.0},
                                                             {12, -1.0 / 132.0},
                                                             {14, 691.0 / 32760.0},
                                                             {16, -1.0 / 12.0},
                                                             {18, 3617.0 / 8160.0},
                                                             {20, -43867.0 / 14364.0}}};
  double power = 0.5 * mu * mu;  // mu^k / k!, starting from k = 2
  int k = 2;
  for (const auto& [order, zeta_value] : tail) {
    while (k < order) {
      ++k;
      power *= mu / k;
    }
    sum += zeta_value * power;
  }
  return sum;
}

}  // namespace lifshitz
