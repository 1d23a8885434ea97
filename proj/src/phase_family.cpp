/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/phase_family.hpp"

#include <cmath>
#include <numbers>

#include "mubkit/hadamard.hpp"

namespace mub {

SignConfig sign_config(int i, int j) {
  if (i < 1 || i > 4 || j < 1 || j > 4)
    throw ContractError("sign_config: column indices must lie in 1..4");
  const ComplexMatrix h = hadamard4();
  SignConfig cfg;
  cfg.pair = {i, j};
  for (int m = 2; m <= 4; ++m) {
    const double prod = h(m - 1, i - 1).real() * h(m - 1, j - 1).real();
    cfg.eps[m - 2] = prod > 0.0 ? 1 : -1;
  }
  return cfg;
}

Complex overlap_from_phases(const SignConfig& cfg, const PhaseDelta& d) {
  const Complex sum = Complex(1.0, 0.0) +
                      static_cast<double>(cfg.eps[0]) * std::polar(1.0, d.alpha) +
                      static_cast<double>(cfg.eps[1]) * std::polar(1.0, d.beta) +
                      static_cast<double>(cfg.eps[2]) * std::polar(1.0, d.gamma);
  return 0.25 * sum;
}

double trig_criterion(const SignConfig& cfg, const PhaseDelta& d) {
  const double e2 = cfg.eps[0];
  const double e3 = cfg.eps[1];
  const double e4 = cfg.eps[2];
  return 2.0 * (e2 * std::cos(d.alpha) + e3 * std::cos(d.beta) + e4 * std::cos(d.gamma) +
                e2 * e3 * std::cos(d.alpha - d.beta) + e2 * e4 * std::cos(d.alpha - d.gamma) +
                e3 * e4 * std::cos(d.beta - d.gamma));
}

bool is_unbiased_family_pair(const PhaseDelta& d, double tol) {
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (std::abs(trig_criterion(sign_config(i, j), d)) > tol) return false;
  return true;
}

std::vector<double> symmetric_case_solutions(int k) {
  if (k != -3 && k != -1 && k != 1 && k != 3)
    throw ContractError("symmetric_case_solutions: k must lie in {-3,-1,1,3}");
  // |1 + k e^{iD}|^2 = 4  <=>  cos D = (3 - k^2) / (2k)
  const double c = (3.0 - static_cast<double>(k) * k) / (2.0 * static_cast<double>(k));
  if (c > 1.0 || c < -1.0) return {};
  if (c >= 1.0) return {0.0};
  if (c <= -1.0) return {std::numbers::pi};
  const double d0 = std::acos(c);
  return {d0, 2.0 * std::numbers::pi - d0};
}

}  // namespace mub
