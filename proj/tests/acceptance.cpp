/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Acceptance suite: one line per criterion, nonzero exit if any fails.
// argv[1] must point at the mub CLI binary (used by the round-trip
// criterion).

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/hadamard.hpp"
#include "mubkit/pauli2q.hpp"
#include "mubkit/phase_family.hpp"
#include "mubkit/search6.hpp"
#include "mubkit/serialize.hpp"
#include "mubkit/weyl.hpp"

namespace {

using Clock = std::chrono::steady_clock;
constexpr double kPi = std::numbers::pi;

int g_failures = 0;
std::string g_cli_path;

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error(what);
}

void run_criterion(int number, const std::string& title, const std::function<void()>& body) {
  const auto start = Clock::now();
  try {
    body();
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    std::printf("[PASS] criterion %2d: %s (%.2f ms)\n", number, title.c_str(), ms);
  } catch (const std::exception& e) {
    ++g_failures;
    std::printf("[FAIL] criterion %2d: %s -- %s\n", number, title.c_str(), e.what());
  }
  std::fflush(stdout);
}

double elapsed_ms(const Clock::time_point& t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void check_all_cross_overlaps(const mub::MubSet& set, double target, double tol) {
  for (std::size_t a = 0; a < set.bases.size(); ++a)
    for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
      const mub::OverlapReport rep = mub::overlap_table(set.bases[a], set.bases[b]);
      for (double v : rep.table)
        require(std::abs(v - target) <= tol,
                "overlap " + std::to_string(v) + " off target in pair (" + std::to_string(a) + "," +
                    std::to_string(b) + ")");
    }
}

// ---- criterion bodies ------------------------------------------------

void criterion_1_d2_triple() {
  const auto t0 = Clock::now();
  const mub::MubSet set = mub::hadamard2_set();
  const mub::VerifyResult res = mub::verify_set(set, 1e-12, 1e-12);
  const double ms = elapsed_ms(t0);
  require(res.certified, "d=2 triple failed verification");
  check_all_cross_overlaps(set, 0.5, 1e-12);
  // the (1+i)/2 cross value between the Hadamard and circular bases
  const mub::Complex cross = mub::inner_product(set.bases[1].vector(0), set.bases[2].vector(0));
  require(std::abs(cross - mub::Complex(0.5, 0.5)) < 1e-14, "cross overlap is not (1+i)/2");
  require(std::abs(std::norm(cross) - 0.5) <= 1e-15, "|(1+i)/2|^2 != 1/2 at rounding level");
  require(std::norm(mub::Complex(0.5, 0.5)) == 0.5, "|(1+i)/2|^2 != 1/2 exactly");
  require(ms < 1.0, "runtime " + std::to_string(ms) + " ms exceeds 1 ms");
}

void criterion_2_d3_weyl() {
  const auto t0 = Clock::now();
  const mub::MubSet set = mub::weyl_mub_set(3);
  const double ms = elapsed_ms(t0);
  require(set.bases.size() == 4, "expected 4 bases");
  check_all_cross_overlaps(set, 1.0 / 3.0, 1e-12);
  const mub::Complex w = mub::unit_roots(3)[1];
  require(std::abs(std::norm(mub::Complex(1, 0) + 2.0 * w) - 3.0) < 1e-14, "|1+2w|^2 != 3");
  const double s = 1.0 / std::sqrt(3.0);
  const std::vector<mub::Complex> u{{s, 0}, {s, 0}, {s, 0}};
  const std::vector<mub::Complex> v{{s, 0}, s * w, s * w};
  const mub::Complex ip = mub::inner_product(u, v);
  require(std::abs(ip - (mub::Complex(1, 0) + 2.0 * w) / 3.0) < 1e-15, "inner product != (1+2w)/3");
  require(std::abs(std::norm(ip) - 1.0 / 3.0) < 1e-14, "squared overlap != 1/3");
  require(ms < 10.0, "runtime " + std::to_string(ms) + " ms exceeds 10 ms");
}

void criterion_3_d4_pauli() {
  const auto t0 = Clock::now();
  const mub::MubSet set = mub::pauli_mub_set();
  const mub::VerifyResult res = mub::verify_set(set, 1e-12, 1e-12);
  const double ms = elapsed_ms(t0);
  require(set.bases.size() == 5, "expected 5 bases");
  require(res.certified && res.max_deviation <= 1e-12, "set not certified at 1e-12");
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b) {
      const mub::ComplexMatrix t = set.bases[a].vectors.adjoint() * set.bases[b].vectors;
      require(mub::is_complex_hadamard(t, 1e-10), "transition matrix not complex Hadamard");
    }
  require(ms < 50.0, "runtime " + std::to_string(ms) + " ms exceeds 50 ms");
}

void criterion_4_prime_completeness() {
  const auto t0 = Clock::now();
  for (std::size_t d : {2u, 3u, 5u, 7u}) {
    const mub::MubSet set = mub::weyl_mub_set(d);
    require(set.bases.size() == d + 1, "expected d+1 bases for d=" + std::to_string(d));
    require(mub::verify_set(set, 1e-10, 1e-10).certified, "set not certified for d=" + std::to_string(d));
  }
  const double ms = elapsed_ms(t0);
  require(ms < 1000.0, "runtime " + std::to_string(ms) + " ms exceeds 1 s");
}

void criterion_5_prime_power() {
  const auto t0 = Clock::now();
  const mub::GaloisField f9(3, 2);
  const mub::MubSet set = mub::galois_mub_set(f9);
  require(set.bases.size() == 10, "expected 10 bases for GF(9)");
  const mub::VerifyResult res = mub::verify_set(set, 1e-10, 1e-10);
  require(res.certified, "GF(9) set not certified at 1e-10");

  // exhaustive trace checks: every pair of GF(9) for additivity, every
  // element for Frobenius invariance and prime-subfield scaling; repeated
  // over the 81 elements of GF(81).
  for (const mub::GaloisField& f : {mub::GaloisField(3, 2), mub::GaloisField(3, 4)}) {
    const int p = f.characteristic();
    for (std::size_t ia = 0; ia < f.order(); ++ia) {
      const mub::FieldElement a = f.element_at(ia);
      require(f.trace(f.pow(a, static_cast<std::uint64_t>(p))) == f.trace(a), "Frobenius invariance failed");
      for (int c = 0; c < p; ++c) {
        std::vector<int> cv(static_cast<std::size_t>(f.degree()), 0);
        cv[0] = c;
        require(f.trace(f.mul(f.element(cv), a)) == (c * f.trace(a)) % p, "trace scaling failed");
      }
      for (std::size_t ib = 0; ib < f.order(); ++ib) {
        const mub::FieldElement b = f.element_at(ib);
        require(f.trace(f.add(a, b)) == (f.trace(a) + f.trace(b)) % p, "trace additivity failed");
      }
    }
  }
  const double ms = elapsed_ms(t0);
  require(ms < 1000.0, "runtime " + std::to_string(ms) + " ms exceeds 1 s");
}

void criterion_6_trig_identity() {
  long checked = 0;
  auto check_point = [&](double a, double b, double g) {
    const mub::PhaseDelta d{a, b, g};
    for (int i = 1; i <= 4; ++i)
      for (int j = 1; j <= 4; ++j) {
        const mub::SignConfig cfg = mub::sign_config(i, j);
        const double via_trig = mub::trig_criterion(cfg, d);
        const double via_overlap = std::norm(4.0 * mub::overlap_from_phases(cfg, d)) - 4.0;
        require(std::abs(via_trig - via_overlap) <= 1e-12, "identity violated");
        ++checked;
      }
  };
  for (int ia = 0; ia < 10; ++ia)
    for (int ib = 0; ib < 10; ++ib)
      for (int ig = 0; ig < 10; ++ig)
        check_point(2.0 * kPi * ia / 10.0, 2.0 * kPi * ib / 10.0, 2.0 * kPi * ig / 10.0);
  mub::SplitMix64 rng(314159);
  for (int t = 0; t < 100; ++t)
    check_point(2.0 * kPi * rng.uniform(), 2.0 * kPi * rng.uniform(), 2.0 * kPi * rng.uniform());
  require(checked == (1000 + 100) * 16, "unexpected check count");
}

void criterion_7_symmetric_case() {
  for (const auto& [k, want] : {std::pair{3, kPi}, std::pair{-1, kPi}}) {
    const auto sols = mub::symmetric_case_solutions(k);
    require(sols.size() == 1 && std::abs(sols[0] - want) < 1e-15, "wrong solution set for k");
  }
  for (int k : {1, -3}) {
    const auto sols = mub::symmetric_case_solutions(k);
    require(sols.size() == 1 && sols[0] == 0.0, "wrong solution set for k");
  }

  require(mub::is_unbiased_family_pair({kPi, kPi, kPi}, 1e-12), "half-turn pair not unbiased");
  const mub::ComplexMatrix half_h4 = mub::hadamard4() * mub::Complex(0.5, 0.0);
  const mub::Basis b0 = mub::phased_basis(half_h4, mub::PhaseVector(4, {0, 0, 0}));
  const mub::Basis b1 = mub::phased_basis(half_h4, mub::PhaseVector(4, {kPi, kPi, kPi}));
  const mub::OverlapReport rep = mub::overlap_table(b0, b1);
  for (double v : rep.table) require(std::abs(v - 0.25) <= 1e-12, "full-matrix table not flat 1/4");

  // quarter-turn divergence: |1+3i|^2 = 10 leaves the all-plus class at 6
  const mub::PhaseDelta quarter{kPi / 2.0, kPi / 2.0, kPi / 2.0};
  require(!mub::is_unbiased_family_pair(quarter, 1e-10), "quarter-turn unexpectedly unbiased");
  const double value = mub::trig_criterion(mub::sign_config(1, 1), quarter);
  require(std::abs(value - 6.0) < 1e-12, "all-plus criterion at quarter-turn != 6");
  require(std::abs(std::norm(4.0 * mub::overlap_from_phases(mub::sign_config(1, 1), quarter)) - 10.0) < 1e-12,
          "|1+3i|^2 != 10");
}

void criterion_8_family_invariant() {
  const mub::Basis std6 = mub::standard_basis(6);
  mub::SplitMix64 rng(8080);
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> phases(5);
    for (double& v : phases) v = 2.0 * kPi * rng.uniform();
    const mub::Basis b = mub::fourier_family_basis(mub::PhaseVector(6, std::move(phases)));
    worst = std::max(worst, mub::overlap_table(std6, b).max_deviation);
  }
  require(worst <= 1e-12, "deviation " + std::to_string(worst) + " above 1e-12");
}

void criterion_9_tensor_triple() {
  const auto t0 = Clock::now();
  const mub::MubSet set = mub::tensor_mub_triple();
  const mub::VerifyResult res = mub::verify_set(set, 1e-10, 1e-10);
  const double ms = elapsed_ms(t0);
  require(set.bases.size() == 3, "expected 3 bases");
  require(res.certified, "tensor triple not certified at 1e-10");
  require(ms < 100.0, "runtime " + std::to_string(ms) + " ms exceeds 100 ms");
}

void criterion_10_search() {
  const auto t0 = Clock::now();

  mub::MubSet standard_only;
  standard_only.dim = 6;
  standard_only.bases.push_back(mub::standard_basis(6));
  mub::SearchConfig cfg1;
  cfg1.seed = 1;
  cfg1.restarts = 1;
  cfg1.max_iters = 2000;
  const mub::SearchReport rep1 = mub::search_additional_basis(standard_only, cfg1);
  require(rep1.best_defect <= 1e-12, "standard-only search missed the trivial solution");

  mub::MubSet std_fourier;
  std_fourier.dim = 6;
  std_fourier.bases.push_back(mub::standard_basis(6));
  std_fourier.bases.push_back(mub::fourier_family_basis(mub::PhaseVector(6, {0, 0, 0, 0, 0})));
  mub::SearchConfig cfg2;
  cfg2.seed = 7;
  cfg2.restarts = 8;
  cfg2.max_iters = 2000;
  const mub::SearchReport rep2 = mub::search_additional_basis(std_fourier, cfg2);
  require(rep2.best_defect <= 1e-8,
          "search stalled at defect " + std::to_string(rep2.best_defect));

  const mub::SearchReport rep2_again = mub::search_additional_basis(std_fourier, cfg2);
  require(mub::search_report_to_json(rep2, cfg2, "standard+fourier") ==
              mub::search_report_to_json(rep2_again, cfg2, "standard+fourier"),
          "identical seeds produced different reports");

  const double ms = elapsed_ms(t0);
  require(ms < 30000.0, "runtime " + std::to_string(ms) + " ms exceeds 30 s");
}

// ---- CLI round trip --------------------------------------------------

int run_command(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status < 0) throw std::runtime_error("failed to launch: " + cmd);
  return WEXITSTATUS(status);
}

std::string capture_command(const std::string& cmd) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("failed to launch: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  if (WEXITSTATUS(status) != 0) throw std::runtime_error("command failed: " + cmd);
  return out;
}

void criterion_11_cli_round_trip() {
  require(!g_cli_path.empty(), "CLI path not supplied as argv[1]");
  const std::string cli = "'" + g_cli_path + "'";
  const std::filesystem::path tmp =
      std::filesystem::temp_directory_path() / ("mubkit_acceptance_" + std::to_string(::getpid()));
  std::filesystem::create_directories(tmp);

  const std::vector<std::pair<std::string, std::string>> methods = {
      {"hadamard2-set", "--method hadamard2-set"},
      {"weyl", "--method weyl --dim 5"},
      {"galois", "--method galois --p 3 --n 2"},
      {"pauli4", "--method pauli4"},
      {"fourier-family", "--method fourier-family --theta 0.3,1.1,2.2,0.7,0.1"},
      {"tensor6", "--method tensor6"},
  };

  for (const auto& [name, flags] : methods) {
    const std::string doc = capture_command(cli + " construct " + flags);

    const std::filesystem::path good = tmp / (name + ".json");
    std::ofstream(good) << doc;
    const int code = run_command(cli + " verify '" + good.string() + "' --no-tables > /dev/null 2>&1");
    require(code == 0, name + ": verify of fresh output exited " + std::to_string(code));

    // flip the sign of a single entry in the second basis
    nlohmann::json j = nlohmann::json::parse(doc);
    auto& entry = j["bases"][1]["columns"][0][0];
    const double re = entry[0].get<double>();
    const double im = entry[1].get<double>();
    require(re != 0.0 || im != 0.0, name + ": corruption target entry is zero");
    entry[0] = -re;
    entry[1] = -im;
    const std::filesystem::path bad = tmp / (name + "_corrupt.json");
    std::ofstream(bad) << j.dump();
    const int bad_code = run_command(cli + " verify '" + bad.string() + "' --no-tables > /dev/null 2>&1");
    require(bad_code == 1, name + ": corrupted verify exited " + std::to_string(bad_code) + ", wanted 1");
  }
  std::filesystem::remove_all(tmp);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  run_criterion(1, "d=2 standard/Hadamard/circular triple certifies with overlaps 1/2", criterion_1_d2_triple);
  run_criterion(2, "d=3 shift/phase eigenbasis set has all overlaps 1/3", criterion_2_d3_weyl);
  run_criterion(3, "d=4 Pauli-class set certifies at 1e-12 with Hadamard transitions", criterion_3_d4_pauli);
  run_criterion(4, "prime d in {2,3,5,7} yields d+1 certified bases", criterion_4_prime_completeness);
  run_criterion(5, "GF(9) yields 10 certified bases; trace identities exhaustive", criterion_5_prime_power);
  run_criterion(6, "analytic criterion equals |4*overlap|^2-4 on grid and samples", criterion_6_trig_identity);
  run_criterion(7, "symmetric-case solutions and the quarter-turn divergence", criterion_7_symmetric_case);
  run_criterion(8, "1000 family members stay unbiased to the standard basis", criterion_8_family_invariant);
  run_criterion(9, "d=6 tensor triple certifies at 1e-10", criterion_9_tensor_triple);
  run_criterion(10, "d=6 search: feasibility and byte-identical determinism", criterion_10_search);
  run_criterion(11, "CLI round trip: construct verifies clean, corruption flips exit code", criterion_11_cli_round_trip);

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
