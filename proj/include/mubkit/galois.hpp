/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "mubkit/basis.hpp"

namespace mub {

class GaloisField;

/// Element of GF(p^n): coefficient vector of a residue polynomial, degree
/// index i holding the coefficient of t^i, each reduced mod p. Elements keep
/// a pointer to the field that made them; mixing fields raises.
struct FieldElement {
  const GaloisField* field = nullptr;
  std::vector<int> coeffs;  // length n
};

/// GF(p^n) as polynomials over GF(p) modulo a monic irreducible of degree n.
/// Irreducibility is validated at construction by exhaustive trial division,
/// which is cheap for the supported orders (p^n <= 4096). The default
/// modulus is the lexicographically smallest monic irreducible, so fields
/// are reproducible from (p, n) alone.
class GaloisField {
public:
  GaloisField(int p, int n);
  GaloisField(int p, int n, std::vector<int> modulus);  // degree-indexed, size n+1, monic

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return n_; }
  std::size_t order() const noexcept { return order_; }
  const std::vector<int>& modulus() const noexcept { return modulus_; }

  FieldElement zero() const;
  FieldElement one() const;
  /// Element with the given degree-indexed coefficients (reduced mod p).
  FieldElement element(std::vector<int> coeffs) const;
  /// Enumeration index -> element; lexicographic on the coefficient tuple
  /// (c_0, ..., c_{n-1}) with c_0 most significant. This fixed order also
  /// indexes basis-vector coordinates.
  FieldElement element_at(std::size_t index) const;
  std::size_t index_of(const FieldElement& a) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, std::uint64_t e) const;
  bool is_zero(const FieldElement& a) const;
  bool equal(const FieldElement& a, const FieldElement& b) const;

  /// Tr(x) = x + x^p + ... + x^{p^{n-1}}, landing in the prime subfield;
  /// returned as an integer in 0..p-1.
  int trace(const FieldElement& a) const;

private:
  void check_element(const FieldElement& a) const;
  int p_;
  int n_;
  std::size_t order_;
  std::vector<int> modulus_;
};

/// Basis of dimension d = p^n (p odd) whose vectors, indexed by field
/// element b, have coordinates w_p^{Tr(a x^2 + b x)} / sqrt(d) at the
/// coordinate of field element x, with w_p = e^{2*pi*i/p}. The quadratic
/// term makes bases with different a mutually unbiased; constant modulus
/// makes each unbiased to the computational basis.
Basis quadratic_phase_basis(const GaloisField& field, const FieldElement& a);

/// Computational basis plus the p^n quadratic-phase bases (one per a).
/// Requires odd p: with p = 2 the quadratic exponent collapses because
/// squaring is a field automorphism in characteristic 2, and the formula
/// stops producing unbiased pairs. Certified at 1e-10 before returning.
MubSet galois_mub_set(const GaloisField& field);

}  // namespace mub
