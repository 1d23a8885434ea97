/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>

#include "mubkit/linalg.hpp"
#include "mubkit/search6.hpp"

namespace testutil {

inline mub::ComplexMatrix random_matrix(std::size_t n, mub::SplitMix64& rng) {
  mub::ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = mub::Complex(2.0 * rng.uniform() - 1.0, 2.0 * rng.uniform() - 1.0);
  return m;
}

inline mub::ComplexMatrix random_hermitian(std::size_t n, mub::SplitMix64& rng) {
  const mub::ComplexMatrix r = random_matrix(n, rng);
  return (r + r.adjoint()) * mub::Complex(0.5, 0.0);
}

// Independent Kronecker oracle: entry-by-entry index decomposition, no reuse
// of the library loop structure.
inline mub::ComplexMatrix kron_oracle(const mub::ComplexMatrix& a, const mub::ComplexMatrix& b) {
  mub::ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

}  // namespace testutil
