/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mubkit/linalg.hpp"

namespace mub {

/// An orthonormal basis of C^d. Columns of `vectors` are the basis vectors;
/// `label` records which construction produced it ("method:parameters").
struct Basis {
  std::size_t dim = 0;
  ComplexMatrix vectors;  // d x d, columns are the basis vectors
  std::string label;

  Basis() = default;
  Basis(ComplexMatrix m, std::string lbl);

  std::vector<Complex> vector(std::size_t i) const { return vectors.column(i); }

  /// max-norm distance of V^dagger V from the identity.
  double orthonormality_defect() const { return unitarity_defect(vectors); }
  bool is_orthonormal(double tol = 1e-10) const { return orthonormality_defect() <= tol; }
};

/// Computational basis e_0..e_{d-1}.
Basis standard_basis(std::size_t d, std::string label = {});

/// Squared-modulus overlaps |<a_i|b_j>|^2 between two bases of equal
/// dimension. Each row sums to 1 because the second basis is complete.
struct OverlapReport {
  std::pair<std::size_t, std::size_t> pair{0, 0};  // basis indices, when taken from a set
  std::size_t dim = 0;
  std::vector<double> table;  // row-major d x d
  double max_deviation = 0.0; // max |table_ij - 1/d|

  double at(std::size_t i, std::size_t j) const { return table[i * dim + j]; }
};

OverlapReport overlap_table(const Basis& a, const Basis& b);

/// True iff every squared overlap is within tol of 1/d.
bool is_unbiased_pair(const Basis& a, const Basis& b, double tol);

/// An ordered collection of bases in a common dimension. `certified` is set
/// only by certify_set / the construction routines after verification passes
/// at `tol`; documents loaded from disk always start uncertified.
struct MubSet {
  std::size_t dim = 0;
  std::vector<Basis> bases;
  bool certified = false;
  double tol = 1e-10;
};

struct VerifyResult {
  bool certified = false;
  std::pair<std::size_t, std::size_t> worst_pair{0, 0};
  double max_deviation = 0.0;          // worst cross-pair |overlap^2 - 1/d|
  bool orthonormal_ok = true;
  std::size_t worst_ortho_basis = 0;
  double worst_orthonormality = 0.0;   // worst basis orthonormality defect
};

/// Checks every basis for orthonormality (ortho_tol) and every unordered
/// pair for unbiasedness (unbiased_tol). worst_pair is the cross pair with
/// the maximal deviation.
VerifyResult verify_set(const MubSet& s, double unbiased_tol = 1e-10, double ortho_tol = 1e-10);

/// verify_set + update of s.certified / s.tol.
VerifyResult certify_set(MubSet& s, double unbiased_tol = 1e-10, double ortho_tol = 1e-10);

/// Smooth aggregate for search: sum over unordered basis pairs of
/// sum_ij (|overlap|^2 - 1/d)^2. Zero iff the set is exactly unbiased.
double defect(const MubSet& s);

}  // namespace mub
