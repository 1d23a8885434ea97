/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace mub {

Basis::Basis(ComplexMatrix m, std::string lbl) : dim(m.rows()), vectors(std::move(m)), label(std::move(lbl)) {
  if (!vectors.is_square() || dim == 0)
    throw DimensionError("basis requires a nonempty square matrix of column vectors");
  if (!vectors.all_finite())
    throw ContractError("basis entries must be finite");
}

Basis standard_basis(std::size_t d, std::string label) {
  if (d == 0) throw DimensionError("standard_basis requires d >= 1");
  if (label.empty()) label = "standard:d=" + std::to_string(d);
  return Basis(ComplexMatrix::identity(d), std::move(label));
}

OverlapReport overlap_table(const Basis& a, const Basis& b) {
  if (a.dim != b.dim)
    throw DimensionError("overlap_table: bases have different dimensions");
  const std::size_t d = a.dim;
  const ComplexMatrix t = a.vectors.adjoint() * b.vectors;
  OverlapReport rep;
  rep.dim = d;
  rep.table.resize(d * d);
  const double target = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double sq = std::norm(t(i, j));
      rep.table[i * d + j] = sq;
      rep.max_deviation = std::max(rep.max_deviation, std::abs(sq - target));
    }
  return rep;
}

bool is_unbiased_pair(const Basis& a, const Basis& b, double tol) {
  return overlap_table(a, b).max_deviation <= tol;
}

VerifyResult verify_set(const MubSet& s, double unbiased_tol, double ortho_tol) {
  if (s.bases.empty()) throw ContractError("verify_set: empty set");
  VerifyResult res;
  for (std::size_t i = 0; i < s.bases.size(); ++i) {
    if (s.bases[i].dim != s.dim)
      throw DimensionError("verify_set: basis dimension disagrees with set dimension");
    const double ortho = s.bases[i].orthonormality_defect();
    if (ortho > res.worst_orthonormality) {
      res.worst_orthonormality = ortho;
      res.worst_ortho_basis = i;
    }
  }
  res.orthonormal_ok = res.worst_orthonormality <= ortho_tol;

  bool have_pair = false;
  for (std::size_t i = 0; i < s.bases.size(); ++i) {
    for (std::size_t j = i + 1; j < s.bases.size(); ++j) {
      OverlapReport rep = overlap_table(s.bases[i], s.bases[j]);
      if (!have_pair || rep.max_deviation > res.max_deviation) {
        res.max_deviation = rep.max_deviation;
        res.worst_pair = {i, j};
        have_pair = true;
      }
    }
  }
  res.certified = res.orthonormal_ok && res.max_deviation <= unbiased_tol;
  return res;
}

VerifyResult certify_set(MubSet& s, double unbiased_tol, double ortho_tol) {
  VerifyResult res = verify_set(s, unbiased_tol, ortho_tol);
  s.certified = res.certified;
  s.tol = unbiased_tol;
  return res;
}

double defect(const MubSet& s) {
  if (s.bases.empty()) throw ContractError("defect: empty set");
  const double target = 1.0 / static_cast<double>(s.dim);
  double acc = 0.0;
  for (std::size_t i = 0; i < s.bases.size(); ++i)
    for (std::size_t j = i + 1; j < s.bases.size(); ++j) {
      OverlapReport rep = overlap_table(s.bases[i], s.bases[j]);
      for (double v : rep.table) {
        const double dev = v - target;
        acc += dev * dev;
      }
    }
  return acc;
}

}  // namespace mub
