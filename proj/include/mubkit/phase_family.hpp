/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <array>
#include <utility>
#include <vector>

#include "mubkit/linalg.hpp"

namespace mub {

/// Row products of two columns of the raw +-1 4x4 Hadamard matrix. The
/// first row is all ones, so only rows 2..4 carry sign information; for
/// distinct columns orthogonality forces 1 + e2 + e3 + e4 = 0.
struct SignConfig {
  std::pair<int, int> pair{1, 1};  // 1-based column indices
  std::array<int, 3> eps{1, 1, 1}; // (e2, e3, e4), each +-1

  int k() const { return eps[0] + eps[1] + eps[2]; }
};

/// Phase differences (da, db, dg) between two members of the d=4 family
/// diag(1,e^{ia},e^{ib},e^{ig}) * H4/2.
struct PhaseDelta {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

/// Sign configuration of columns (i, j), 1-based.
SignConfig sign_config(int i, int j);

/// The overlap between column i of one family member and column j of
/// another, as a function of the phase differences alone:
/// (1 + e2 e^{i da} + e3 e^{i db} + e4 e^{i dg}) / 4.
Complex overlap_from_phases(const SignConfig& cfg, const PhaseDelta& d);

/// |4 * overlap|^2 - 4 evaluated through its cosine expansion:
/// 2 * (e2 cos da + e3 cos db + e4 cos dg
///      + e2 e3 cos(da-db) + e2 e4 cos(da-dg) + e3 e4 cos(db-dg)).
/// Zero iff the (i,j) vector pair satisfies the unbiasedness condition.
/// The expansion and the complex route of overlap_from_phases are kept
/// deliberately independent so tests can play them against each other.
double trig_criterion(const SignConfig& cfg, const PhaseDelta& d);

/// True iff |trig_criterion| <= tol for all 16 column-pair configurations,
/// i.e. two family members separated by d are mutually unbiased. Both the
/// k = 3 (equal-column) and k = -1 (distinct-column) classes must vanish
/// simultaneously.
bool is_unbiased_family_pair(const PhaseDelta& d, double tol = 1e-10);

/// Solutions Delta in [0, 2pi) of |1 + k e^{i Delta}|^2 = 4 for the
/// equal-phase-difference case, k in {-3,-1,1,3}:
/// k=3 -> {pi}; k=-3 -> {0}; k=1 -> {0}; k=-1 -> {pi}.
std::vector<double> symmetric_case_solutions(int k);

}  // namespace mub
