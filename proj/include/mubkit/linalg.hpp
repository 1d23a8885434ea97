/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mubkit/errors.hpp"

namespace mub {

using Complex = std::complex<double>;

/// Dense complex matrix in row-major storage. Sized for small dimensions
/// (d <= 16); everything is computed with plain loops, no blocking.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols, Complex(0.0, 0.0)) {}

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<const Complex> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  std::vector<Complex> column(std::size_t c) const;

  const std::vector<Complex>& entries() const noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;
  ComplexMatrix operator+(const ComplexMatrix& rhs) const;
  ComplexMatrix operator-(const ComplexMatrix& rhs) const;
  ComplexMatrix operator*(const Complex& scale) const;

  /// Largest entry modulus.
  double max_abs() const;
  bool all_finite() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

/// max_ij |a_ij - b_ij|
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Hermitian inner product, conjugate-linear in the first argument:
/// sum_m conj(u_m) * v_m.
Complex inner_product(std::span<const Complex> u, std::span<const Complex> v);

/// Kronecker product, (a.rows*b.rows) x (a.cols*b.cols).
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

/// max-norm of (M^dagger M - I) <= tol.
bool is_unitary(const ComplexMatrix& m, double tol);

/// max-norm of (M^dagger M - I); the quantity behind is_unitary.
double unitarity_defect(const ComplexMatrix& m);

/// The d-th roots of unity, index k holding e^{2*pi*i*k/d}. Every consumer
/// indexes into one of these tables so repeated powers are bit-identical.
std::vector<Complex> unit_roots(std::size_t d);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // columns, orthonormal
};

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix (d <= 16).
/// tol bounds the accepted Hermiticity defect max|M - M^dagger| of the
/// input; violation raises ContractError. Eigenvectors inside a degenerate
/// cluster (gap < 1e-8) are re-orthonormalized by Gram-Schmidt.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol = 1e-10);

/// Orthonormal eigenbasis of a unitary matrix, computed from the commuting
/// Hermitian pair W + W^dagger and i(W - W^dagger): clusters of the first
/// spectrum are split by diagonalizing the second inside them. When
/// eigenvalues is non-null it receives the unit-modulus eigenvalue of each
/// returned column, in column order. Columns are not reordered or rephased.
ComplexMatrix unitary_eigenbasis(const ComplexMatrix& w, std::vector<Complex>* eigenvalues = nullptr);

/// Rescale each column by a unit scalar so its first component of modulus
/// > 1e-8 is real and positive. Deterministic representative for golden
/// comparisons.
void normalize_column_phases(ComplexMatrix& m);

}  // namespace mub
