/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/galois.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mubkit/weyl.hpp"

namespace mub {

namespace {

int mod(int a, int p) {
  int r = a % p;
  return r < 0 ? r + p : r;
}

// Degree of a coefficient vector, -1 for the zero polynomial.
int poly_degree(const std::vector<int>& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
  std::vector<int> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  }
  return out;
}

// Remainder of a modulo the monic polynomial m over GF(p).
std::vector<int> poly_rem(std::vector<int> a, const std::vector<int>& m, int p) {
  const int dm = poly_degree(m);
  for (int da = poly_degree(a); da >= dm; da = poly_degree(a)) {
    const int factor = a[da];  // m is monic
    const int shift = da - dm;
    for (int i = 0; i <= dm; ++i) a[i + shift] = mod(a[i + shift] - factor * m[i], p);
  }
  a.resize(dm);
  return a;
}

bool poly_is_zero(const std::vector<int>& a) { return poly_degree(a) < 0; }

// A composite monic polynomial of degree n has a monic factor of degree
// <= n/2; trial-divide by every monic polynomial of those degrees.
bool is_irreducible(const std::vector<int>& m, int p) {
  const int n = poly_degree(m);
  if (n < 1) return false;
  for (int deg = 1; deg <= n / 2; ++deg) {
    std::size_t count = 1;
    for (int i = 0; i < deg; ++i) count *= static_cast<std::size_t>(p);
    for (std::size_t v = 0; v < count; ++v) {
      std::vector<int> f(deg + 1, 0);
      std::size_t rest = v;
      for (int i = 0; i < deg; ++i) {
        f[i] = static_cast<int>(rest % static_cast<std::size_t>(p));
        rest /= static_cast<std::size_t>(p);
      }
      f[deg] = 1;
      if (poly_is_zero(poly_rem(m, f, p))) return false;
    }
  }
  return true;
}

// Lexicographically smallest (on the tuple c_0..c_{n-1}) monic irreducible
// of degree n over GF(p).
std::vector<int> smallest_irreducible(int p, int n) {
  std::size_t count = 1;
  for (int i = 0; i < n; ++i) count *= static_cast<std::size_t>(p);
  for (std::size_t v = 0; v < count; ++v) {
    std::vector<int> m(n + 1, 0);
    std::size_t rest = v;
    for (int i = n - 1; i >= 0; --i) {
      m[i] = static_cast<int>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
    }
    m[n] = 1;
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // cannot happen
}

void validate_field_params(int p, int n) {
  if (p < 2 || !is_prime(static_cast<std::size_t>(p)))
    throw UnsupportedError("field characteristic must be prime");
  if (n < 1) throw UnsupportedError("field extension degree must be >= 1");
  double order = 1.0;
  for (int i = 0; i < n; ++i) order *= p;
  if (order > 4096.0) throw UnsupportedError("field order above supported range (p^n <= 4096)");
}

}  // namespace

GaloisField::GaloisField(int p, int n)
    : GaloisField(p, n, (validate_field_params(p, n), smallest_irreducible(p, n))) {}

GaloisField::GaloisField(int p, int n, std::vector<int> modulus) : p_(p), n_(n), modulus_(std::move(modulus)) {
  validate_field_params(p, n);
  if (static_cast<int>(modulus_.size()) != n + 1)
    throw ContractError("modulus must have degree n (n+1 coefficients)");
  for (int& c : modulus_) c = mod(c, p_);
  if (modulus_[n_] != 1) throw ContractError("modulus must be monic");
  if (!is_irreducible(modulus_, p_))
    throw ContractError("modulus is reducible over GF(p)");
  order_ = 1;
  for (int i = 0; i < n_; ++i) order_ *= static_cast<std::size_t>(p_);
}

void GaloisField::check_element(const FieldElement& a) const {
  if (a.field != this)
    throw ContractError("field element belongs to a different field");
  if (a.coeffs.size() != static_cast<std::size_t>(n_))
    throw ContractError("field element has wrong coefficient count");
}

FieldElement GaloisField::zero() const { return FieldElement{this, std::vector<int>(n_, 0)}; }

FieldElement GaloisField::one() const {
  FieldElement e = zero();
  e.coeffs[0] = 1;
  return e;
}

FieldElement GaloisField::element(std::vector<int> coeffs) const {
  if (coeffs.size() > static_cast<std::size_t>(n_))
    throw ContractError("too many coefficients for this field");
  coeffs.resize(n_, 0);
  for (int& c : coeffs) c = mod(c, p_);
  return FieldElement{this, std::move(coeffs)};
}

FieldElement GaloisField::element_at(std::size_t index) const {
  if (index >= order_) throw ContractError("element index out of range");
  FieldElement e = zero();
  for (int i = n_ - 1; i >= 0; --i) {
    e.coeffs[i] = static_cast<int>(index % static_cast<std::size_t>(p_));
    index /= static_cast<std::size_t>(p_);
  }
  return e;
}

std::size_t GaloisField::index_of(const FieldElement& a) const {
  check_element(a);
  std::size_t idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * static_cast<std::size_t>(p_) + static_cast<std::size_t>(a.coeffs[i]);
  return idx;
}

FieldElement GaloisField::add(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement out = zero();
  for (int i = 0; i < n_; ++i) out.coeffs[i] = mod(a.coeffs[i] + b.coeffs[i], p_);
  return out;
}

FieldElement GaloisField::sub(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  FieldElement out = zero();
  for (int i = 0; i < n_; ++i) out.coeffs[i] = mod(a.coeffs[i] - b.coeffs[i], p_);
  return out;
}

FieldElement GaloisField::mul(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  std::vector<int> prod = poly_rem(poly_mul(a.coeffs, b.coeffs, p_), modulus_, p_);
  prod.resize(n_, 0);
  return FieldElement{this, std::move(prod)};
}

FieldElement GaloisField::pow(const FieldElement& a, std::uint64_t e) const {
  check_element(a);
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

bool GaloisField::is_zero(const FieldElement& a) const {
  check_element(a);
  return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](int c) { return c == 0; });
}

bool GaloisField::equal(const FieldElement& a, const FieldElement& b) const {
  check_element(a);
  check_element(b);
  return a.coeffs == b.coeffs;
}

int GaloisField::trace(const FieldElement& a) const {
  check_element(a);
  FieldElement acc = a;
  FieldElement term = a;
  for (int i = 1; i < n_; ++i) {
    term = pow(term, static_cast<std::uint64_t>(p_));  // a^{p^i} by iterated Frobenius
    acc = add(acc, term);
  }
  for (int i = 1; i < n_; ++i)
    if (acc.coeffs[i] != 0)
      throw std::logic_error("trace did not land in the prime subfield");
  return acc.coeffs[0];
}

Basis quadratic_phase_basis(const GaloisField& field, const FieldElement& a) {
  if (field.characteristic() == 2)
    throw UnsupportedError("quadratic_phase_basis requires odd characteristic");
  const std::size_t d = field.order();
  if (d > 16) throw UnsupportedError("quadratic_phase_basis supports d <= 16");
  const std::vector<Complex> roots = unit_roots(static_cast<std::size_t>(field.characteristic()));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));

  ComplexMatrix vecs(d, d);
  for (std::size_t bi = 0; bi < d; ++bi) {
    const FieldElement b = field.element_at(bi);
    for (std::size_t xi = 0; xi < d; ++xi) {
      const FieldElement x = field.element_at(xi);
      const FieldElement phase = field.add(field.mul(a, field.mul(x, x)), field.mul(b, x));
      vecs(xi, bi) = roots[static_cast<std::size_t>(field.trace(phase))] * scale;
    }
  }
  const std::string label = "galois:p=" + std::to_string(field.characteristic()) + ":n=" +
                            std::to_string(field.degree()) + ":a=" + std::to_string(field.index_of(a));
  return Basis(std::move(vecs), label);
}

MubSet galois_mub_set(const GaloisField& field) {
  if (field.characteristic() == 2)
    throw UnsupportedError("galois_mub_set requires odd characteristic");
  const std::size_t d = field.order();
  if (d > 16) throw UnsupportedError("galois_mub_set supports d <= 16");

  MubSet set;
  set.dim = d;
  const std::string prefix =
      "galois:p=" + std::to_string(field.characteristic()) + ":n=" + std::to_string(field.degree());
  set.bases.push_back(standard_basis(d, prefix + ":computational"));
  for (std::size_t ai = 0; ai < d; ++ai)
    set.bases.push_back(quadratic_phase_basis(field, field.element_at(ai)));
  const VerifyResult res = certify_set(set, 1e-10, 1e-10);
  if (!res.certified)
    throw std::logic_error("galois_mub_set: constructed set failed verification");
  return set;
}

}  // namespace mub
