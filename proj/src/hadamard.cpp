/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/hadamard.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace mub {

double wrap_angle(double x) {
  const double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  if (r >= two_pi) r = 0.0;  // fmod rounding at the seam
  return r;
}

PhaseVector::PhaseVector(std::size_t d, std::vector<double> raw_phases) : dim(d), phases(std::move(raw_phases)) {
  if (dim == 0) throw DimensionError("phase vector requires d >= 1");
  if (phases.size() != dim - 1)
    throw DimensionError("phase vector for dimension d carries d-1 phases");
  for (double& p : phases) {
    if (!std::isfinite(p)) throw ContractError("phase vector entries must be finite");
    p = wrap_angle(p);
  }
}

ComplexMatrix hadamard2() {
  ComplexMatrix h(2, 2);
  h(0, 0) = 1.0;
  h(0, 1) = 1.0;
  h(1, 0) = 1.0;
  h(1, 1) = -1.0;
  return h;
}

ComplexMatrix hadamard4() { return tensor(hadamard2(), hadamard2()); }

ComplexMatrix fourier(std::size_t d) {
  if (d == 0) throw DimensionError("fourier requires d >= 1");
  const std::vector<Complex> roots = unit_roots(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix f(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) f(j, k) = roots[(j * k) % d] * scale;
  return f;
}

ComplexMatrix phase_diag(const PhaseVector& p) {
  ComplexMatrix m(p.dim, p.dim);
  m(0, 0) = Complex(1.0, 0.0);
  for (std::size_t k = 1; k < p.dim; ++k) m(k, k) = std::polar(1.0, p.phases[k - 1]);
  return m;
}

namespace {

std::string default_phased_label(const PhaseVector& p) {
  std::string lbl = "phased:d=" + std::to_string(p.dim) + ":theta=[";
  char buf[32];
  for (std::size_t i = 0; i < p.phases.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", p.phases[i]);
    if (i) lbl += ',';
    lbl += buf;
  }
  lbl += ']';
  return lbl;
}

}  // namespace

Basis phased_basis(const ComplexMatrix& h, const PhaseVector& p, std::string label) {
  if (!h.is_square() || h.rows() != p.dim)
    throw DimensionError("phased_basis: phase vector dimension must match the matrix");
  if (!is_unitary(h, 1e-8))
    throw ContractError("phased_basis requires a unitary matrix");
  const double want = 1.0 / std::sqrt(static_cast<double>(h.rows()));
  for (const Complex& z : h.entries())
    if (std::abs(std::abs(z) - want) > 1e-8)
      throw ContractError("phased_basis requires constant-modulus entries");

  ComplexMatrix out(h.rows(), h.cols());
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const Complex d_r = r == 0 ? Complex(1.0, 0.0) : std::polar(1.0, p.phases[r - 1]);
    for (std::size_t c = 0; c < h.cols(); ++c) out(r, c) = d_r * h(r, c);
  }
  if (label.empty()) label = default_phased_label(p);
  return Basis(std::move(out), std::move(label));
}

bool is_complex_hadamard(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("is_complex_hadamard requires a square matrix");
  if (!m.all_finite()) return false;
  const double want = 1.0 / std::sqrt(static_cast<double>(m.rows()));
  for (const Complex& z : m.entries())
    if (std::abs(std::abs(z) - want) > tol) return false;
  return is_unitary(m, tol);
}

ComplexMatrix dephase(const ComplexMatrix& m) {
  if (!is_complex_hadamard(m, 1e-8))
    throw ContractError("dephase requires a complex Hadamard matrix");
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  // Row phases make the first column real-positive ...
  for (std::size_t r = 0; r < n; ++r) {
    const Complex lead = m(r, 0);
    if (std::abs(lead) < 1e-12) throw ContractError("dephase: vanishing entry in first column");
    const Complex rowphase = std::conj(lead) / std::abs(lead);
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rowphase * m(r, c);
  }
  // ... then column phases make the first row real-positive; column 0 is
  // already positive and keeps phase 1.
  for (std::size_t c = 0; c < n; ++c) {
    const Complex lead = out(0, c);
    if (std::abs(lead) < 1e-12) throw ContractError("dephase: vanishing entry in first row");
    const Complex colphase = std::conj(lead) / std::abs(lead);
    for (std::size_t r = 0; r < n; ++r) out(r, c) *= colphase;
  }
  return out;
}

MubSet hadamard2_set() {
  const double s = 1.0 / std::sqrt(2.0);
  ComplexMatrix h = hadamard2() * Complex(s, 0.0);

  ComplexMatrix circ(2, 2);
  circ(0, 0) = Complex(s, 0.0);
  circ(0, 1) = Complex(s, 0.0);
  circ(1, 0) = Complex(0.0, s);
  circ(1, 1) = Complex(0.0, -s);

  MubSet set;
  set.dim = 2;
  set.bases.push_back(standard_basis(2));
  set.bases.emplace_back(std::move(h), "hadamard2:d=2");
  set.bases.emplace_back(std::move(circ), "circular:d=2");
  certify_set(set, 1e-12, 1e-12);
  return set;
}

}  // namespace mub
