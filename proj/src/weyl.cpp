/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "mubkit/hadamard.hpp"

namespace mub {

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

ComplexMatrix weyl_x(std::size_t d) {
  if (d < 2) throw DimensionError("weyl_x requires d >= 2");
  ComplexMatrix x(d, d);
  for (std::size_t k = 0; k < d; ++k) x((k + 1) % d, k) = Complex(1.0, 0.0);
  return x;
}

ComplexMatrix weyl_z(std::size_t d) {
  if (d < 2) throw DimensionError("weyl_z requires d >= 2");
  const std::vector<Complex> roots = unit_roots(d);
  ComplexMatrix z(d, d);
  for (std::size_t k = 0; k < d; ++k) z(k, k) = roots[k];
  return z;
}

bool commutator_check(std::size_t d) {
  const ComplexMatrix x = weyl_x(d);
  const ComplexMatrix z = weyl_z(d);
  const Complex w = unit_roots(d)[1];
  return max_abs_diff(z * x, (x * z) * w) <= 1e-12;
}

namespace {

double eigenvalue_phase(const Complex& lambda) {
  double ph = std::atan2(lambda.imag(), lambda.real());
  if (ph < 0.0) ph += 2.0 * std::numbers::pi;
  return ph;
}

void require_supported_prime(std::size_t d, const char* op) {
  if (d > 16) throw UnsupportedError(std::string(op) + " supports d <= 16");
  if (!is_prime(d)) throw UnsupportedError(std::string(op) + " requires prime dimension");
}

}  // namespace

Basis weyl_eigenbasis(std::size_t d, std::size_t z_power) {
  require_supported_prime(d, "weyl_eigenbasis");
  if (z_power >= d) throw ContractError("weyl_eigenbasis: z_power must lie in 0..d-1");

  const std::string label = "weyl:d=" + std::to_string(d) + ":XZ^" + std::to_string(z_power);

  ComplexMatrix vecs;
  std::vector<Complex> lambdas;
  if (z_power == 0) {
    // Shift eigenbasis: Fourier column j carries eigenvalue w^{-j}.
    vecs = fourier(d);
    lambdas.resize(d);
    const std::vector<Complex> roots = unit_roots(d);
    for (std::size_t j = 0; j < d; ++j) lambdas[j] = roots[(d - j) % d];
  } else {
    // X Z^a maps e_k to w^{a k} e_{k+1}; assembled entrywise from the root
    // table so repeated powers stay bit-identical.
    const std::vector<Complex> roots = unit_roots(d);
    ComplexMatrix w(d, d);
    for (std::size_t k = 0; k < d; ++k) w((k + 1) % d, k) = roots[(z_power * k) % d];
    vecs = unitary_eigenbasis(w, &lambdas);
  }

  std::vector<std::size_t> order(d);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return eigenvalue_phase(lambdas[a]) < eigenvalue_phase(lambdas[b]);
  });
  ComplexMatrix sorted(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t r = 0; r < d; ++r) sorted(r, j) = vecs(r, order[j]);
  normalize_column_phases(sorted);
  return Basis(std::move(sorted), label);
}

MubSet weyl_mub_set(std::size_t d) {
  require_supported_prime(d, "weyl_mub_set");
  MubSet set;
  set.dim = d;
  set.bases.push_back(standard_basis(d, "weyl:d=" + std::to_string(d) + ":Z"));
  for (std::size_t a = 0; a < d; ++a) set.bases.push_back(weyl_eigenbasis(d, a));
  const VerifyResult res = certify_set(set, 1e-10, 1e-10);
  if (!res.certified)
    throw std::logic_error("weyl_mub_set: constructed set failed verification");
  return set;
}

}  // namespace mub
