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

using mub::Complex;
using mub::ComplexMatrix;
using mub::Pauli;
using mub::PauliLabel;

TEST_CASE("pauli_matrix: Z (x) I is the signed diagonal") {
  const ComplexMatrix m = mub::pauli_matrix({Pauli::Z, Pauli::I});
  const double expected[4] = {1, 1, -1, -1};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(m(i, i) == Complex(expected[i], 0));
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(m(i, j) == Complex(0, 0));
  }
}

TEST_CASE("pauli_matrix: X (x) X and Y (x) Y against the Kronecker oracle") {
  const ComplexMatrix xx = mub::pauli_matrix({Pauli::X, Pauli::X});
  CHECK(mub::max_abs_diff(xx, testutil::kron_oracle(mub::single_pauli(Pauli::X),
                                                    mub::single_pauli(Pauli::X))) == 0.0);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(xx(i, j) == Complex(i + j == 3 ? 1 : 0, 0));

  const ComplexMatrix yy = mub::pauli_matrix({Pauli::Y, Pauli::Y});
  CHECK(mub::max_abs_diff(yy, testutil::kron_oracle(mub::single_pauli(Pauli::Y),
                                                    mub::single_pauli(Pauli::Y))) == 0.0);
  // the (-i)(i) products leave a real {0, +-1} pattern
  for (const Complex& z : yy.entries()) {
    CHECK(z.imag() == 0.0);
    CHECK((z.real() == 0.0 || z.real() == 1.0 || z.real() == -1.0));
  }
  CHECK(yy(0, 3) == Complex(-1, 0));
  CHECK(yy(1, 2) == Complex(1, 0));
}

TEST_CASE("pauli tensors are Hermitian, unitary, and square to the identity") {
  const Pauli all[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  for (Pauli a : all)
    for (Pauli b : all) {
      const ComplexMatrix m = mub::pauli_matrix({a, b});
      CHECK(mub::max_abs_diff(m, m.adjoint()) == 0.0);
      CHECK(mub::is_unitary(m, 1e-15));
      CHECK(mub::max_abs_diff(m * m, ComplexMatrix::identity(4)) == 0.0);
    }
}

TEST_CASE("commuting_classes: five classes with exactly commuting generators") {
  const auto classes = mub::commuting_classes();
  REQUIRE(classes.size() == 5);
  for (const mub::CommutingClass& c : classes) {
    const ComplexMatrix a = mub::pauli_matrix(c.generators[0]);
    const ComplexMatrix b = mub::pauli_matrix(c.generators[1]);
    CHECK(mub::max_abs_diff(a * b, b * a) == 0.0);
  }
}

TEST_CASE("commuting_classes: generated triples cover the 15 nontrivial operators once") {
  const auto classes = mub::commuting_classes();
  auto code = [](Pauli a, Pauli b) { return static_cast<int>(a) * 4 + static_cast<int>(b); };
  std::vector<int> seen;
  for (const mub::CommutingClass& c : classes) {
    const ComplexMatrix a = mub::pauli_matrix(c.generators[0]);
    const ComplexMatrix b = mub::pauli_matrix(c.generators[1]);
    const ComplexMatrix prod = a * b;
    // identify the product as +-(third Pauli tensor)
    const Pauli all[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
    int third = -1;
    for (Pauli pa : all)
      for (Pauli pb : all) {
        const ComplexMatrix cand = mub::pauli_matrix({pa, pb});
        if (mub::max_abs_diff(prod, cand) < 1e-14 ||
            mub::max_abs_diff(prod, cand * Complex(-1, 0)) < 1e-14)
          third = code(pa, pb);
      }
    REQUIRE(third >= 0);
    CHECK(third != code(Pauli::I, Pauli::I));
    seen.push_back(code(c.generators[0].first, c.generators[0].second));
    seen.push_back(code(c.generators[1].first, c.generators[1].second));
    seen.push_back(third);
  }
  std::sort(seen.begin(), seen.end());
  CHECK(seen.size() == 15);
  CHECK(std::unique(seen.begin(), seen.end()) == seen.end());
}

TEST_CASE("commuting operators may still live in different classes") {
  // X(x)I and I(x)Z commute as matrices but share no class.
  const ComplexMatrix a = mub::pauli_matrix({Pauli::X, Pauli::I});
  const ComplexMatrix b = mub::pauli_matrix({Pauli::I, Pauli::Z});
  CHECK(mub::max_abs_diff(a * b, b * a) == 0.0);
  // X(x)X and Y(x)Y commute as matrices as well, without forming a class
  // here: each already lives inside the group of classes 2 and 3.
  const ComplexMatrix xx = mub::pauli_matrix({Pauli::X, Pauli::X});
  const ComplexMatrix yy = mub::pauli_matrix({Pauli::Y, Pauli::Y});
  CHECK(mub::max_abs_diff(xx * yy, yy * xx) == 0.0);
}

TEST_CASE("cross-class generators either commute or anticommute") {
  const auto classes = mub::commuting_classes();
  for (const mub::CommutingClass& ca : classes)
    for (const mub::CommutingClass& cb : classes)
      for (const PauliLabel& la : ca.generators)
        for (const PauliLabel& lb : cb.generators) {
          const ComplexMatrix a = mub::pauli_matrix(la);
          const ComplexMatrix b = mub::pauli_matrix(lb);
          const double comm = mub::max_abs_diff(a * b, b * a);
          const double anti = mub::max_abs_diff(a * b, (b * a) * Complex(-1, 0));
          CHECK((comm == 0.0 || anti == 0.0));
        }
}

TEST_CASE("joint_eigenbasis: class 1 is the standard basis up to order") {
  const auto classes = mub::commuting_classes();
  const mub::Basis b = mub::joint_eigenbasis(classes[0]);
  for (std::size_t j = 0; j < 4; ++j) {
    int ones = 0, zeros = 0;
    for (std::size_t r = 0; r < 4; ++r) {
      const double a = std::abs(b.vectors(r, j));
      if (a > 1.0 - 1e-12) ++ones;
      if (a < 1e-12) ++zeros;
    }
    CHECK(ones == 1);
    CHECK(zeros == 3);
  }
}

TEST_CASE("joint_eigenbasis: class 2 matches the scaled 4x4 Hadamard up to order and phase") {
  const auto classes = mub::commuting_classes();
  const mub::Basis b = mub::joint_eigenbasis(classes[1]);
  const mub::Basis h(mub::hadamard4() * Complex(0.5, 0.0), "hadamard");
  const mub::OverlapReport rep = mub::overlap_table(b, h);
  for (std::size_t i = 0; i < 4; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < 4; ++j) best = std::max(best, rep.at(i, j));
    CHECK(best == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("joint_eigenbasis: both generators become diagonal in the returned basis") {
  for (const mub::CommutingClass& c : mub::commuting_classes()) {
    const mub::Basis basis = mub::joint_eigenbasis(c);
    for (const PauliLabel& l : c.generators) {
      const ComplexMatrix conj = basis.vectors.adjoint() * mub::pauli_matrix(l) * basis.vectors;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          if (i != j) CHECK(std::abs(conj(i, j)) <= 1e-10);
    }
  }
}

TEST_CASE("joint_eigenbasis: entangled classes stay unbiased to the computational basis") {
  const auto classes = mub::commuting_classes();
  for (int idx : {3, 4}) {
    const mub::Basis b = mub::joint_eigenbasis(classes[static_cast<std::size_t>(idx)]);
    const mub::OverlapReport rep = mub::overlap_table(mub::standard_basis(4), b);
    for (double v : rep.table) CHECK(v == doctest::Approx(0.25).epsilon(1e-11));
  }
}

TEST_CASE("joint_eigenbasis: rejects non-commuting generators") {
  mub::CommutingClass broken{9, {PauliLabel{Pauli::X, Pauli::I}, PauliLabel{Pauli::Z, Pauli::I}}};
  CHECK_THROWS_AS((void)mub::joint_eigenbasis(broken), mub::ContractError);
}

TEST_CASE("pauli_mub_set: five certified bases at 1e-12") {
  const mub::MubSet set = mub::pauli_mub_set();
  REQUIRE(set.bases.size() == 5);  // d + 1 for d = 2^2
  CHECK(set.certified);
  const mub::VerifyResult res = mub::verify_set(set, 1e-12, 1e-12);
  CHECK(res.certified);
  CHECK(res.max_deviation <= 1e-12);
}

TEST_CASE("pauli_mub_set: direct vector-pair loop confirms every cross overlap") {
  // independent of the table machinery: raw inner products per vector pair
  const mub::MubSet set = mub::pauli_mub_set();
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          const double sq = std::norm(mub::inner_product(set.bases[a].vector(i), set.bases[b].vector(j)));
          CHECK(std::abs(sq - 0.25) <= 1e-12);
        }
}

TEST_CASE("pauli_mub_set: every transition matrix is complex Hadamard") {
  const mub::MubSet set = mub::pauli_mub_set();
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      const ComplexMatrix t = set.bases[a].vectors.adjoint() * set.bases[b].vectors;
      CHECK(mub::is_complex_hadamard(t, 1e-10));
    }
}

TEST_CASE("pauli_mub_set: dropping a basis keeps the rest pairwise unbiased") {
  mub::MubSet set = mub::pauli_mub_set();
  set.bases.erase(set.bases.begin());
  CHECK(mub::verify_set(set, 1e-12, 1e-12).certified);
}
