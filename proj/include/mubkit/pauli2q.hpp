/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>

#include "mubkit/basis.hpp"
#include "mubkit/linalg.hpp"

namespace mub {

enum class Pauli { I, X, Y, Z };

/// A two-qubit Pauli operator sigma_first (x) sigma_second.
struct PauliLabel {
  Pauli first = Pauli::I;
  Pauli second = Pauli::I;
};

/// One of the five maximal commuting classes of two-qubit Pauli operators.
/// The two generators commute exactly; together with their product they
/// span the class. Classes intersect only in the identity, which is what
/// makes their joint eigenbases pairwise unbiased.
struct CommutingClass {
  int id = 0;  // 1..5
  std::array<PauliLabel, 2> generators;
};

/// Single-qubit Pauli matrix.
ComplexMatrix single_pauli(Pauli p);

/// The 4x4 Kronecker product sigma_first (x) sigma_second.
ComplexMatrix pauli_matrix(const PauliLabel& l);

/// The five commuting classes partitioning the 15 nontrivial two-qubit
/// Pauli operators into triples:
///   1: {Z(x)I, I(x)Z}   (plus Z(x)Z)
///   2: {X(x)I, I(x)X}   (plus X(x)X)
///   3: {Y(x)I, I(x)Y}   (plus Y(x)Y)
///   4: {X(x)Y, Y(x)Z}   (plus Z(x)X up to sign)
///   5: {Y(x)X, Z(x)Y}   (plus X(x)Z up to sign)
/// Commutation of each generator pair is verified before returning.
std::array<CommutingClass, 5> commuting_classes();

/// Orthonormal basis simultaneously diagonalizing both generators of the
/// class, computed as the eigenbasis of A + pi*e*B (the irrational weight
/// keeps the four joint eigenvalue pairs separated). Per-generator residuals
/// are checked at 1e-10; columns are rephased so the first component of
/// modulus > 1e-8 is real-positive.
Basis joint_eigenbasis(const CommutingClass& c);

/// The complete set of five bases in d = 4, one per commuting class,
/// certified at 1e-10 before returning.
MubSet pauli_mub_set();

}  // namespace mub
