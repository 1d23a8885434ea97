/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/pauli2q.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace mub {

ComplexMatrix single_pauli(Pauli p) {
  ComplexMatrix m(2, 2);
  switch (p) {
    case Pauli::I:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case Pauli::X:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case Pauli::Y:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case Pauli::Z:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix pauli_matrix(const PauliLabel& l) {
  return tensor(single_pauli(l.first), single_pauli(l.second));
}

std::array<CommutingClass, 5> commuting_classes() {
  using P = Pauli;
  const std::array<CommutingClass, 5> classes{{
      {1, {PauliLabel{P::Z, P::I}, PauliLabel{P::I, P::Z}}},
      {2, {PauliLabel{P::X, P::I}, PauliLabel{P::I, P::X}}},
      {3, {PauliLabel{P::Y, P::I}, PauliLabel{P::I, P::Y}}},
      {4, {PauliLabel{P::X, P::Y}, PauliLabel{P::Y, P::Z}}},
      {5, {PauliLabel{P::Y, P::X}, PauliLabel{P::Z, P::Y}}},
  }};
  for (const CommutingClass& c : classes) {
    const ComplexMatrix a = pauli_matrix(c.generators[0]);
    const ComplexMatrix b = pauli_matrix(c.generators[1]);
    if (max_abs_diff(a * b, b * a) != 0.0)
      throw std::logic_error("commuting_classes: generators fail to commute");
  }
  return classes;
}

Basis joint_eigenbasis(const CommutingClass& c) {
  const ComplexMatrix a = pauli_matrix(c.generators[0]);
  const ComplexMatrix b = pauli_matrix(c.generators[1]);
  if (max_abs_diff(a * b, b * a) > 1e-14)
    throw ContractError("joint_eigenbasis requires commuting generators");

  // Both spectra are {-1,+1}; an irrational weight keeps the four joint
  // eigenvalues lambda_A + c*lambda_B distinct.
  const double weight = std::numbers::pi * std::numbers::e;
  EigenDecomposition dec = hermitian_eigen(a + b * Complex(weight, 0.0), 1e-12);
  ComplexMatrix vecs = dec.eigenvectors;
  normalize_column_phases(vecs);

  for (std::size_t j = 0; j < 4; ++j) {
    const std::vector<Complex> v = vecs.column(j);
    for (const ComplexMatrix* op : {&a, &b}) {
      Complex lambda(0.0, 0.0);
      std::vector<Complex> opv(4, Complex(0.0, 0.0));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t k = 0; k < 4; ++k) opv[r] += (*op)(r, k) * v[k];
      lambda = inner_product(v, opv);
      double residual = 0.0;
      for (std::size_t r = 0; r < 4; ++r) residual = std::max(residual, std::abs(opv[r] - lambda * v[r]));
      if (residual > 1e-10)
        throw std::logic_error("joint_eigenbasis: eigenvector residual too large");
    }
  }
  return Basis(std::move(vecs), "pauli4:class=" + std::to_string(c.id));
}

MubSet pauli_mub_set() {
  MubSet set;
  set.dim = 4;
  for (const CommutingClass& c : commuting_classes()) set.bases.push_back(joint_eigenbasis(c));
  const VerifyResult res = certify_set(set, 1e-10, 1e-10);
  if (!res.certified)
    throw std::logic_error("pauli_mub_set: constructed set failed verification");
  return set;
}

}  // namespace mub
