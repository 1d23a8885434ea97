/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mubkit/basis.hpp"
#include "mubkit/hadamard.hpp"

namespace mub {

/// Portable 64-bit generator with splitmix state update; every language
/// binding can reproduce the stream, which is what makes search reports
/// byte-identical for a fixed seed.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent stream for a numbered substream of the given seed.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);
};

struct SearchConfig {
  std::uint64_t seed = 0;
  int restarts = 8;
  int max_iters = 2000;
  int target_bases = 2;  // echoed in reports; each call adds one basis
  double tol = 1e-8;
};

struct SearchReport {
  std::vector<PhaseVector> best_phases;            // best point found (single entry)
  double best_defect = 0.0;
  long iterations_used = 0;                        // optimizer iterations across restarts
  std::vector<std::pair<long, double>> history;    // (iteration, defect) at improvements
};

/// Member of the d=6 Fourier family: phases attached to vector components
/// of the unitary Fourier matrix. Constant entry modulus 1/sqrt(6) makes
/// every member unbiased to the standard basis regardless of theta.
Basis fourier_family_basis(const PhaseVector& theta);

/// Sum over all 36 vector pairs of (|overlap|^2 - 1/6)^2 between two family
/// members, evaluated through the closed-form single sum
/// overlap(i,j) = (1/6) sum_k e^{i(theta2_k - theta_k)} w^{k(j-i)}.
/// Depends only on the phase differences; zero iff the transition matrix
/// between the members is complex Hadamard.
double pair_defect(const PhaseVector& theta, const PhaseVector& theta2);

/// Three bases in d=6 built by pairing the i-th basis of the complete d=2
/// set with the i-th basis of the complete d=3 set under Kronecker product.
/// Overlap moduli multiply across factors: (1/sqrt(2))*(1/sqrt(3)) = 1/sqrt(6).
/// Certified at 1e-10 before returning.
MubSet tensor_mub_triple();

/// Restarted Nelder-Mead over theta in T^5 minimizing the total squared
/// overlap deviation of a new family member against every basis of
/// `existing`, which must itself verify as a mutually unbiased set (checked
/// at 1e-8). Purely descriptive: the report records what the search found
/// and never claims anything about existence. Identical configs produce
/// identical reports.
SearchReport search_additional_basis(const MubSet& existing, const SearchConfig& cfg);

struct CandidateCheck {
  bool certified = false;
  VerifyResult verdict;
  std::vector<OverlapReport> reports;  // all unordered pairs, fixed order
};

/// Builds the standard basis plus one family member per theta and verifies
/// the whole set at tol, returning per-pair overlap tables.
CandidateCheck check_candidate(const std::vector<PhaseVector>& thetas, double tol = 1e-10);

}  // namespace mub
