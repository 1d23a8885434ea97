/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mubkit/hadamard.hpp"
#include "mubkit/pauli2q.hpp"
#include "mubkit/weyl.hpp"

using mub::Basis;
using mub::Complex;
using mub::ComplexMatrix;

namespace {

// Library-independent X Z^a, multiplying the explicitly built factors.
ComplexMatrix xz_power(std::size_t d, std::size_t a) {
  ComplexMatrix w = mub::weyl_x(d);
  for (std::size_t k = 0; k < a; ++k) w = w * mub::weyl_z(d);
  return w;
}

// True iff the overlap table of the two bases is a permutation matrix,
// i.e. the bases agree up to vector order and phases.
bool same_basis_up_to_phase(const Basis& a, const Basis& b) {
  const mub::OverlapReport rep = mub::overlap_table(a, b);
  for (std::size_t i = 0; i < rep.dim; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < rep.dim; ++j) best = std::max(best, rep.at(i, j));
    if (std::abs(best - 1.0) > 1e-10) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("weyl_x: cyclic shift") {
  const ComplexMatrix x = mub::weyl_x(3);
  std::vector<Complex> e0{Complex(1, 0), Complex(0, 0), Complex(0, 0)};
  std::vector<Complex> shifted(3, Complex(0, 0));
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) shifted[r] += x(r, c) * e0[c];
  CHECK(shifted[1] == Complex(1, 0));
  CHECK(shifted[0] == Complex(0, 0));
  CHECK(shifted[2] == Complex(0, 0));
}

TEST_CASE("weyl_z: diagonal of roots of unity") {
  const ComplexMatrix z = mub::weyl_z(3);
  const std::vector<Complex> roots = mub::unit_roots(3);
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(z(k, k) == roots[k]);
    for (std::size_t j = 0; j < 3; ++j)
      if (j != k) CHECK(z(k, j) == Complex(0, 0));
  }
}

TEST_CASE("weyl operators reduce to the single-qubit flips in d=2") {
  CHECK(mub::max_abs_diff(mub::weyl_x(2), mub::single_pauli(mub::Pauli::X)) == 0.0);
  CHECK(mub::max_abs_diff(mub::weyl_z(2), mub::single_pauli(mub::Pauli::Z)) < 1e-15);
}

TEST_CASE("commutator_check: Z X = w X Z for d = 2, 3, 7") {
  CHECK(mub::commutator_check(2));
  CHECK(mub::commutator_check(3));
  CHECK(mub::commutator_check(7));
}

TEST_CASE("weyl_eigenbasis: d=3 shift eigenbasis matches Fourier columns up to order/phase") {
  const Basis b = mub::weyl_eigenbasis(3, 0);
  const Basis f(mub::fourier(3), "fourier:d=3");
  CHECK(same_basis_up_to_phase(b, f));
}

TEST_CASE("weyl_eigenbasis: d=2 shift eigenbasis is the normalized Hadamard") {
  const Basis b = mub::weyl_eigenbasis(2, 0);
  const ComplexMatrix h = mub::hadamard2() * Complex(1.0 / std::sqrt(2.0), 0.0);
  CHECK(mub::max_abs_diff(b.vectors, h) < 1e-14);
}

TEST_CASE("weyl_eigenbasis: d=5 power-3 eigenbasis is unbiased to the standard basis") {
  const Basis b = mub::weyl_eigenbasis(5, 3);
  const mub::OverlapReport rep = mub::overlap_table(mub::standard_basis(5), b);
  for (double v : rep.table) CHECK(v == doctest::Approx(0.2).epsilon(1e-11));
}

TEST_CASE("weyl_eigenbasis: eigenvector residuals stay below 1e-10") {
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    for (std::size_t a = 0; a < d; ++a) {
      const ComplexMatrix w = xz_power(d, a);
      const Basis b = mub::weyl_eigenbasis(d, a);
      for (std::size_t j = 0; j < d; ++j) {
        const std::vector<Complex> v = b.vector(j);
        std::vector<Complex> wv(d, Complex(0, 0));
        for (std::size_t r = 0; r < d; ++r)
          for (std::size_t c = 0; c < d; ++c) wv[r] += w(r, c) * v[c];
        const Complex lambda = mub::inner_product(v, wv);
        CHECK(std::abs(std::abs(lambda) - 1.0) < 1e-10);
        double res = 0.0;
        for (std::size_t r = 0; r < d; ++r) res = std::max(res, std::abs(wv[r] - lambda * v[r]));
        CHECK(res <= 1e-10);
      }
    }
  }
}

TEST_CASE("weyl operators: X Z^a is unitary and its d-th power is a unit scalar") {
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    for (std::size_t a = 0; a < d; ++a) {
      const ComplexMatrix w = xz_power(d, a);
      CHECK(mub::is_unitary(w, 1e-12));
      ComplexMatrix p = ComplexMatrix::identity(d);
      for (std::size_t k = 0; k < d; ++k) p = p * w;
      const Complex scalar = p(0, 0);
      CHECK(std::abs(std::abs(scalar) - 1.0) < 1e-12);
      CHECK(mub::max_abs_diff(p, ComplexMatrix::identity(d) * scalar) < 1e-12);
    }
  }
}

TEST_CASE("weyl_mub_set: complete certified sets for d = 2, 3, 5, 7") {
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    const mub::MubSet set = mub::weyl_mub_set(d);
    CHECK(set.bases.size() == d + 1);
    CHECK(set.certified);
    const mub::VerifyResult res = mub::verify_set(set, 1e-10, 1e-10);
    CHECK(res.certified);
    CHECK(res.max_deviation <= 1e-10);
  }
}

TEST_CASE("weyl_mub_set: d=3 cross overlaps are all exactly 1/3") {
  const mub::MubSet set = mub::weyl_mub_set(3);
  for (std::size_t a = 0; a < set.bases.size(); ++a)
    for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
      const mub::OverlapReport rep = mub::overlap_table(set.bases[a], set.bases[b]);
      for (double v : rep.table) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
}

TEST_CASE("weyl_mub_set: d=2 reproduces the standard/Hadamard/circular triple up to phases") {
  const mub::MubSet weyl = mub::weyl_mub_set(2);
  const mub::MubSet named = mub::hadamard2_set();
  REQUIRE(weyl.bases.size() == 3);
  CHECK(same_basis_up_to_phase(weyl.bases[0], named.bases[0]));
  CHECK(same_basis_up_to_phase(weyl.bases[1], named.bases[1]));
  CHECK(same_basis_up_to_phase(weyl.bases[2], named.bases[2]));
}

TEST_CASE("weyl_mub_set: non-prime dimensions are rejected") {
  CHECK_THROWS_AS((void)mub::weyl_mub_set(4), mub::UnsupportedError);
  CHECK_THROWS_AS((void)mub::weyl_mub_set(6), mub::UnsupportedError);
  CHECK_THROWS_AS((void)mub::weyl_eigenbasis(9, 0), mub::UnsupportedError);
}

TEST_CASE("is_prime: trial division on the supported range") {
  CHECK(mub::is_prime(2));
  CHECK(mub::is_prime(13));
  CHECK_FALSE(mub::is_prime(1));
  CHECK_FALSE(mub::is_prime(9));
  CHECK_FALSE(mub::is_prime(15));
}
