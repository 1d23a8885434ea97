/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <vector>

#include "mubkit/basis.hpp"
#include "mubkit/linalg.hpp"

namespace mub {

/// A point on the torus T^(d-1): phases (radians) for diagonal entries
/// 1..d-1 of a diagonal unitary whose leading entry is fixed to 1 (global
/// phase carries no information). Each phase is stored reduced into [0, 2pi).
struct PhaseVector {
  std::size_t dim = 0;
  std::vector<double> phases;  // length dim - 1

  PhaseVector() = default;
  PhaseVector(std::size_t d, std::vector<double> raw_phases);
};

/// Reduce an angle into [0, 2pi).
double wrap_angle(double x);

/// The 2x2 matrix of +-1 (unnormalized; callers scale by 1/sqrt(2)).
ComplexMatrix hadamard2();

/// The 4x4 matrix of +-1, the Kronecker square of hadamard2().
ComplexMatrix hadamard4();

/// Unitary discrete Fourier matrix, entries w^{jk}/sqrt(d) with
/// w = e^{2*pi*i/d}, j,k in 0..d-1.
ComplexMatrix fourier(std::size_t d);

/// diag(1, e^{i p_1}, ..., e^{i p_{d-1}}).
ComplexMatrix phase_diag(const PhaseVector& p);

/// Basis with vectors D(p) * h, i.e. phases attached to vector components.
/// Requires h unitary with constant-modulus entries; the result is then
/// automatically unbiased to the standard basis. Attaching phases to whole
/// columns instead would rescale each vector by a unit scalar and could
/// never change any overlap, so the component convention is the only one
/// that parametrizes anything.
Basis phased_basis(const ComplexMatrix& h, const PhaseVector& p, std::string label = {});

/// True iff every entry has modulus 1/sqrt(d) within tol and m is unitary
/// within tol (normalized convention: sqrt(d)*m has unit-modulus entries
/// and orthogonal columns).
bool is_complex_hadamard(const ComplexMatrix& m, double tol);

/// Canonical form: multiply by diagonal unitaries on both sides so the
/// first row and first column are real and positive. Requires a complex
/// Hadamard input (within 1e-8); the result is again complex Hadamard and
/// the map is idempotent.
ComplexMatrix dephase(const ComplexMatrix& m);

/// The three-basis d=2 set: standard, normalized Hadamard columns, and the
/// circular basis (1,+-i)/sqrt(2). Certified at 1e-12.
MubSet hadamard2_set();

}  // namespace mub
