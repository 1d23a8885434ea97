/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/search6.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "mubkit/weyl.hpp"

namespace mub {

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 scramble(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
  return SplitMix64(scramble.next());
}

Basis fourier_family_basis(const PhaseVector& theta) {
  if (theta.dim != 6)
    throw DimensionError("fourier_family_basis requires a dimension-6 phase vector");
  std::string label = "fourier6:theta=[";
  char buf[32];
  for (std::size_t i = 0; i < theta.phases.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.6g", theta.phases[i]);
    if (i) label += ',';
    label += buf;
  }
  label += ']';
  return phased_basis(fourier(6), theta, std::move(label));
}

double pair_defect(const PhaseVector& theta, const PhaseVector& theta2) {
  if (theta.dim != 6 || theta2.dim != 6)
    throw DimensionError("pair_defect requires dimension-6 phase vectors");
  // c_m = e^{i(theta2_m - theta_m)}, with the leading phases fixed to 0.
  std::array<Complex, 6> c;
  c[0] = Complex(1.0, 0.0);
  for (std::size_t m = 1; m < 6; ++m)
    c[m] = std::polar(1.0, theta2.phases[m - 1] - theta.phases[m - 1]);

  const std::vector<Complex> roots = unit_roots(6);
  double acc = 0.0;
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      Complex overlap(0.0, 0.0);
      const int shift = ((j - i) % 6 + 6) % 6;
      for (int m = 0; m < 6; ++m) overlap += c[m] * roots[(m * shift) % 6];
      const double dev = std::norm(overlap) / 36.0 - 1.0 / 6.0;
      acc += dev * dev;
    }
  }
  return acc;
}

MubSet tensor_mub_triple() {
  const MubSet two = weyl_mub_set(2);
  const MubSet three = weyl_mub_set(3);
  MubSet set;
  set.dim = 6;
  for (std::size_t i = 0; i < 3; ++i) {
    ComplexMatrix vecs = tensor(two.bases[i].vectors, three.bases[i].vectors);
    set.bases.emplace_back(std::move(vecs), "tensor6:pair=" + std::to_string(i + 1));
  }
  const VerifyResult res = certify_set(set, 1e-10, 1e-10);
  if (!res.certified)
    throw std::logic_error("tensor_mub_triple: constructed set failed verification");
  return set;
}

namespace {

constexpr int kDim = 5;  // free phases on T^5

// Total squared overlap deviation of the family member at theta against
// every basis of the existing set, computed from raw matrices.
double objective(const std::vector<ComplexMatrix>& existing, const double* theta) {
  std::array<Complex, 6> d;
  d[0] = Complex(1.0, 0.0);
  for (int m = 1; m < 6; ++m) d[m] = std::polar(1.0, theta[m - 1]);

  static const ComplexMatrix f6 = fourier(6);
  ComplexMatrix member(6, 6);
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) member(r, c) = d[r] * f6(r, c);

  double acc = 0.0;
  for (const ComplexMatrix& b : existing) {
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        Complex overlap(0.0, 0.0);
        for (int m = 0; m < 6; ++m) overlap += std::conj(b(m, i)) * member(m, j);
        const double dev = std::norm(overlap) - 1.0 / 6.0;
        acc += dev * dev;
      }
    }
  }
  return acc;
}

struct Tracker {
  double best = 0.0;
  bool have_best = false;
  std::array<double, kDim> best_point{};
  long iterations = 0;
  std::vector<std::pair<long, double>> history;

  void offer(const double* x, double f) {
    if (!have_best || f < best) {
      best = f;
      have_best = true;
      std::copy(x, x + kDim, best_point.begin());
      history.emplace_back(iterations, f);
    }
  }
};

// One Nelder-Mead run from the given start, at most `budget` iterations.
// Restarts a fresh simplex around this run's own incumbent whenever the
// simplex collapses before the budget is spent; that cheap polishing step
// is what carries the endgame from ~1e-6 to ~1e-14. Runs only read their
// own state, so restarts stay independent and could execute concurrently
// with a min-reduction at the end; `tr` merely records the merged view in
// the fixed sequential order.
void nelder_mead(const std::vector<ComplexMatrix>& existing, const std::array<double, kDim>& start,
                 int budget, double stop_below, Tracker& tr) {
  constexpr double kReflect = 1.0;
  constexpr double kExpand = 2.0;
  constexpr double kContract = 0.5;
  constexpr double kShrink = 0.5;

  std::array<double, kDim> local_best = start;
  double local_best_f = 0.0;
  bool have_local = false;
  auto eval = [&](const double* p) {
    const double f = objective(existing, p);
    if (!have_local || f < local_best_f) {
      local_best_f = f;
      have_local = true;
      std::copy(p, p + kDim, local_best.begin());
    }
    tr.offer(p, f);
    return f;
  };

  std::array<double, kDim> anchor = start;
  double step = 0.8;
  int used = 0;

  while (used < budget) {
    // simplex of kDim+1 vertices around the anchor
    std::array<std::array<double, kDim>, kDim + 1> x;
    std::array<double, kDim + 1> f;
    x[0] = anchor;
    f[0] = eval(x[0].data());
    for (int k = 0; k < kDim; ++k) {
      x[k + 1] = anchor;
      x[k + 1][k] += step;
      f[k + 1] = eval(x[k + 1].data());
    }

    std::array<int, kDim + 1> ord{};
    std::iota(ord.begin(), ord.end(), 0);
    auto sort_ord = [&] {
      std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return f[a] < f[b]; });
    };
    sort_ord();

    bool collapsed = false;
    while (used < budget && !collapsed) {
      ++used;
      ++tr.iterations;

      const int best = ord[0];
      const int worst = ord[kDim];
      const int second_worst = ord[kDim - 1];

      if (f[best] <= stop_below) return;
      if (f[worst] - f[best] <= 1e-16 * (1.0 + std::abs(f[best]))) {
        collapsed = true;
        break;
      }

      std::array<double, kDim> centroid{};
      for (int v = 0; v <= kDim; ++v) {
        if (v == worst) continue;
        for (int k = 0; k < kDim; ++k) centroid[k] += x[v][k];
      }
      for (int k = 0; k < kDim; ++k) centroid[k] /= kDim;

      std::array<double, kDim> refl;
      for (int k = 0; k < kDim; ++k) refl[k] = centroid[k] + kReflect * (centroid[k] - x[worst][k]);
      const double f_refl = eval(refl.data());

      if (f_refl < f[ord[0]]) {
        std::array<double, kDim> expa;
        for (int k = 0; k < kDim; ++k) expa[k] = centroid[k] + kExpand * (refl[k] - centroid[k]);
        const double f_expa = eval(expa.data());
        if (f_expa < f_refl) {
          x[worst] = expa;
          f[worst] = f_expa;
        } else {
          x[worst] = refl;
          f[worst] = f_refl;
        }
      } else if (f_refl < f[second_worst]) {
        x[worst] = refl;
        f[worst] = f_refl;
      } else {
        const bool outside = f_refl < f[worst];
        std::array<double, kDim> ctr;
        const std::array<double, kDim>& toward = outside ? refl : x[worst];
        for (int k = 0; k < kDim; ++k) ctr[k] = centroid[k] + kContract * (toward[k] - centroid[k]);
        const double f_ctr = eval(ctr.data());
        if (f_ctr < std::min(f_refl, f[worst])) {
          x[worst] = ctr;
          f[worst] = f_ctr;
        } else {
          for (int v = 0; v <= kDim; ++v) {
            if (v == ord[0]) continue;
            for (int k = 0; k < kDim; ++k) x[v][k] = x[ord[0]][k] + kShrink * (x[v][k] - x[ord[0]][k]);
            f[v] = eval(x[v].data());
          }
        }
      }
      sort_ord();
    }

    if (local_best_f <= stop_below) return;
    anchor = local_best;
    step = std::max(step * 0.1, 1e-7);
  }
}

}  // namespace

SearchReport search_additional_basis(const MubSet& existing, const SearchConfig& cfg) {
  if (existing.bases.empty())
    throw ContractError("search_additional_basis: existing set is empty");
  if (existing.dim != 6)
    throw DimensionError("search_additional_basis operates in dimension 6");
  if (cfg.restarts < 1 || cfg.max_iters < 1)
    throw ContractError("search_additional_basis: restarts and max_iters must be positive");
  // re-verify rather than trusting the flag; a slightly loose band so sets
  // parsed back from 17-digit JSON never trip it
  if (!verify_set(existing, 1e-8, 1e-8).certified)
    throw ContractError("search_additional_basis: existing set does not verify as mutually unbiased");

  std::vector<ComplexMatrix> mats;
  mats.reserve(existing.bases.size());
  for (const Basis& b : existing.bases) mats.push_back(b.vectors);

  const double stop_below = std::min(1e-18, cfg.tol * cfg.tol);
  Tracker tr;
  for (int r = 0; r < cfg.restarts; ++r) {
    SplitMix64 rng = SplitMix64::stream(cfg.seed, static_cast<std::uint64_t>(r));
    std::array<double, kDim> start;
    for (double& v : start) v = 2.0 * std::numbers::pi * rng.uniform();
    nelder_mead(mats, start, cfg.max_iters, stop_below, tr);
    if (tr.best <= stop_below) break;
  }

  SearchReport rep;
  rep.best_defect = tr.best;
  rep.iterations_used = tr.iterations;
  rep.history = std::move(tr.history);
  std::vector<double> phases(tr.best_point.begin(), tr.best_point.end());
  rep.best_phases.emplace_back(6, std::move(phases));
  return rep;
}

CandidateCheck check_candidate(const std::vector<PhaseVector>& thetas, double tol) {
  MubSet set;
  set.dim = 6;
  set.bases.push_back(standard_basis(6));
  for (const PhaseVector& t : thetas) set.bases.push_back(fourier_family_basis(t));

  CandidateCheck out;
  out.verdict = verify_set(set, tol, tol);
  out.certified = out.verdict.certified;
  for (std::size_t i = 0; i < set.bases.size(); ++i)
    for (std::size_t j = i + 1; j < set.bases.size(); ++j) {
      OverlapReport rep = overlap_table(set.bases[i], set.bases[j]);
      rep.pair = {i, j};
      out.reports.push_back(std::move(rep));
    }
  return out;
}

}  // namespace mub
