/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace mub {

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Complex(1.0, 0.0);
  return m;
}

std::vector<Complex> ComplexMatrix::column(std::size_t c) const {
  std::vector<Complex> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (cols_ != rhs.rows_)
    throw DimensionError("matrix product: inner dimensions disagree");
  ComplexMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Complex a = (*this)(i, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix sum: shapes disagree");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw DimensionError("matrix difference: shapes disagree");
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const Complex& scale) const {
  ComplexMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scale;
  return out;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex& z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& z : entries_)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("max_abs_diff: shapes disagree");
  double m = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    m = std::max(m, std::abs(a.entries()[i] - b.entries()[i]));
  return m;
}

Complex inner_product(std::span<const Complex> u, std::span<const Complex> v) {
  if (u.size() != v.size())
    throw DimensionError("inner_product: vector lengths disagree");
  Complex acc(0.0, 0.0);
  for (std::size_t i = 0; i < u.size(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex f = a(i, j);
      if (f == Complex(0.0, 0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = f * b(k, l);
    }
  return out;
}

double unitarity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw DimensionError("unitarity test requires a square matrix");
  const std::size_t n = m.rows();
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc(0.0, 0.0);
      for (std::size_t k = 0; k < n; ++k) acc += std::conj(m(k, i)) * m(k, j);
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  return m.all_finite() && unitarity_defect(m) <= tol;
}

std::vector<Complex> unit_roots(std::size_t d) {
  std::vector<Complex> roots(d);
  for (std::size_t k = 0; k < d; ++k)
    roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
  return roots;
}

namespace {

// One two-sided Jacobi rotation zeroing a(p,q), accumulating into v.
void jacobi_rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex beta = a(p, q);
  const double babs = std::abs(beta);
  if (babs == 0.0) return;
  const Complex u = beta / babs;  // unit phase of the pivot
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (app - aqq) / (2.0 * babs);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();

  // A <- U^dagger A U with the plane rotation
  //   U(p,p)=c, U(p,q)=-s*u, U(q,p)=s*conj(u), U(q,q)=c.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp + s * std::conj(u) * akq;
    a(k, q) = -s * u * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk + s * u * aqk;
    a(q, k) = -s * std::conj(u) * apk + c * aqk;
  }
  a(p, p) = Complex(app * c * c + aqq * s * s + 2.0 * s * c * babs, 0.0);
  a(q, q) = Complex(app * s * s + aqq * c * c - 2.0 * s * c * babs, 0.0);
  a(p, q) = Complex(0.0, 0.0);
  a(q, p) = Complex(0.0, 0.0);

  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp + s * std::conj(u) * vkq;
    v(k, q) = -s * u * vkp + c * vkq;
  }
}

double offdiag_max(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t p = 0; p < a.rows(); ++p)
    for (std::size_t q = p + 1; q < a.cols(); ++q) m = std::max(m, std::abs(a(p, q)));
  return m;
}

// Modified Gram-Schmidt on the given column range of v.
void gram_schmidt_columns(ComplexMatrix& v, std::size_t first, std::size_t last) {
  const std::size_t n = v.rows();
  for (std::size_t j = first; j < last; ++j) {
    for (std::size_t k = first; k < j; ++k) {
      Complex proj(0.0, 0.0);
      for (std::size_t r = 0; r < n; ++r) proj += std::conj(v(r, k)) * v(r, j);
      for (std::size_t r = 0; r < n; ++r) v(r, j) -= proj * v(r, k);
    }
    double nrm = 0.0;
    for (std::size_t r = 0; r < n; ++r) nrm += std::norm(v(r, j));
    nrm = std::sqrt(nrm);
    for (std::size_t r = 0; r < n; ++r) v(r, j) /= nrm;
  }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) throw DimensionError("hermitian_eigen requires a square matrix");
  const std::size_t n = m.rows();
  if (n == 0 || n > 16)
    throw UnsupportedError("hermitian_eigen supports 1 <= d <= 16");
  if (!m.all_finite()) throw ContractError("hermitian_eigen: non-finite entries");
  if (max_abs_diff(m, m.adjoint()) > tol)
    throw ContractError("hermitian_eigen: input is not Hermitian within tolerance");

  // Symmetrize rounding noise so the sweep sees an exactly Hermitian matrix.
  ComplexMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = Complex(m(i, i).real(), 0.0);
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m(i, j) + std::conj(m(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = std::max(1.0, a.max_abs());
  const double threshold = 1e-15 * scale;
  for (int sweep = 0; sweep < 100 && offdiag_max(a) > threshold; ++sweep) {
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (std::abs(a(p, q)) > threshold) jacobi_rotate(a, v, p, q);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

  EigenDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, j) = v(r, order[j]);
  }

  // Re-orthonormalize degenerate clusters.
  std::size_t start = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == n || out.eigenvalues[j] - out.eigenvalues[j - 1] >= 1e-8) {
      if (j - start > 1) gram_schmidt_columns(out.eigenvectors, start, j);
      start = j;
    }
  }
  return out;
}

ComplexMatrix unitary_eigenbasis(const ComplexMatrix& w, std::vector<Complex>* eigenvalues) {
  if (!w.is_square()) throw DimensionError("unitary_eigenbasis requires a square matrix");
  if (!is_unitary(w, 1e-8)) throw ContractError("unitary_eigenbasis: input is not unitary");
  const std::size_t n = w.rows();
  const ComplexMatrix wd = w.adjoint();
  const ComplexMatrix re2 = w + wd;                       // 2 Re W, Hermitian
  const ComplexMatrix im2 = (w - wd) * Complex(0.0, 1.0); // i(W - W^dagger), Hermitian

  EigenDecomposition first = hermitian_eigen(re2, 1e-8);
  ComplexMatrix v = first.eigenvectors;

  // Split clusters of the first spectrum with the second Hermitian part.
  std::size_t start = 0;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j == n || first.eigenvalues[j] - first.eigenvalues[j - 1] >= 1e-8) {
      const std::size_t len = j - start;
      if (len > 1) {
        ComplexMatrix sub(len, len);
        for (std::size_t x = 0; x < len; ++x)
          for (std::size_t y = 0; y < len; ++y) {
            Complex acc(0.0, 0.0);
            for (std::size_t r = 0; r < n; ++r) {
              Complex tmp(0.0, 0.0);
              for (std::size_t c = 0; c < n; ++c) tmp += im2(r, c) * v(c, start + y);
              acc += std::conj(v(r, start + x)) * tmp;
            }
            sub(x, y) = acc;
          }
        EigenDecomposition inner = hermitian_eigen(sub, 1e-8);
        ComplexMatrix rotated(n, len);
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t y = 0; y < len; ++y) {
            Complex acc(0.0, 0.0);
            for (std::size_t x = 0; x < len; ++x) acc += v(r, start + x) * inner.eigenvectors(x, y);
            rotated(r, y) = acc;
          }
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t y = 0; y < len; ++y) v(r, start + y) = rotated(r, y);
      }
      start = j;
    }
  }

  if (eigenvalues) {
    eigenvalues->resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      Complex lambda(0.0, 0.0);
      for (std::size_t r = 0; r < n; ++r) {
        Complex tmp(0.0, 0.0);
        for (std::size_t c = 0; c < n; ++c) tmp += w(r, c) * v(c, j);
        lambda += std::conj(v(r, j)) * tmp;
      }
      (*eigenvalues)[j] = lambda;
    }
  }
  return v;
}

void normalize_column_phases(ComplexMatrix& m) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const Complex z = m(r, j);
      if (std::abs(z) > 1e-8) {
        const Complex phase = std::conj(z) / std::abs(z);
        for (std::size_t k = 0; k < m.rows(); ++k) m(k, j) *= phase;
        break;
      }
    }
  }
}

}  // namespace mub
