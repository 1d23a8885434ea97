/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */

// Command-line frontend. Everything goes through the C API in mubkit.h so
// this binary doubles as a smoke test of the shared-library surface.

#include <cctype>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mubkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

constexpr double kPi = 3.14159265358979323846;

struct SetDeleter {
  void operator()(mub_set_t* s) const { mub_set_free(s); }
};
using SetHandle = std::unique_ptr<mub_set_t, SetDeleter>;

struct StringDeleter {
  void operator()(char* s) const { mub_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

[[noreturn]] void die_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(kExitUsage);
}

void check_api(mub_status st) {
  if (st != MUB_OK) die_usage(mub_last_error());
}

// Angles accept plain decimals and simple pi expressions: "pi", "-pi",
// "2pi", "pi/2", "3pi/4".
double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (s.empty()) die_usage("empty angle");

  double sign = 1.0;
  std::size_t pos = 0;
  if (s[pos] == '+' || s[pos] == '-') {
    if (s[pos] == '-') sign = -1.0;
    ++pos;
  }

  const std::size_t pi_at = s.find("pi", pos);
  if (pi_at == std::string::npos) {
    try {
      std::size_t used = 0;
      const double v = std::stod(s.substr(pos), &used);
      if (used != s.size() - pos) throw std::invalid_argument(s);
      return sign * v;
    } catch (const std::exception&) {
      die_usage("cannot parse angle '" + text + "'");
    }
  }

  double coeff = 1.0;
  if (pi_at > pos) {
    try {
      std::size_t used = 0;
      coeff = std::stod(s.substr(pos, pi_at - pos), &used);
      if (used != pi_at - pos) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      die_usage("cannot parse angle '" + text + "'");
    }
  }
  double divisor = 1.0;
  std::size_t rest = pi_at + 2;
  if (rest < s.size()) {
    if (s[rest] != '/') die_usage("cannot parse angle '" + text + "'");
    try {
      std::size_t used = 0;
      divisor = std::stod(s.substr(rest + 1), &used);
      if (used != s.size() - rest - 1 || divisor == 0.0) throw std::invalid_argument(s);
    } catch (const std::exception&) {
      die_usage("cannot parse angle '" + text + "'");
    }
  }
  return sign * coeff * kPi / divisor;
}

std::vector<double> parse_theta_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_angle(item));
  if (out.size() != 5) die_usage("--theta expects 5 comma-separated phases, got " + std::to_string(out.size()));
  return out;
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) die_usage("cannot open output file '" + path + "'");
  f << text;
}

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) die_usage("cannot open input file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int run_construct(const std::string& method, int dim, int p, int n,
                  const std::vector<std::string>& thetas, const std::string& out_path) {
  mub_set_t* raw = nullptr;
  mub_status st = MUB_OK;
  if (method == "hadamard2-set") {
    st = mub_construct_hadamard2_set(&raw);
  } else if (method == "weyl") {
    if (dim <= 0) die_usage("weyl requires --dim");
    st = mub_construct_weyl(dim, &raw);
  } else if (method == "galois") {
    if (p <= 0 || n <= 0) die_usage("galois requires --p and --n");
    st = mub_construct_galois(p, n, &raw);
  } else if (method == "pauli4") {
    st = mub_construct_pauli4(&raw);
  } else if (method == "tensor6") {
    st = mub_construct_tensor6(&raw);
  } else if (method == "fourier-family") {
    std::vector<double> flat;
    for (const std::string& t : thetas) {
      const std::vector<double> one = parse_theta_list(t);
      flat.insert(flat.end(), one.begin(), one.end());
    }
    st = mub_construct_fourier_family(flat.data(), static_cast<int>(thetas.size()), &raw);
  } else {
    die_usage("unknown method '" + method + "'");
  }
  if (st != MUB_OK) die_usage(mub_last_error());
  SetHandle set(raw);

  char* json = nullptr;
  check_api(mub_set_to_json(set.get(), &json));
  ApiString holder(json);
  write_output(json, out_path);
  return kExitOk;
}

int run_verify(const std::string& in_path, double tol, double ortho_tol, bool tables) {
  const std::string text = read_input(in_path);
  mub_set_t* raw = nullptr;
  if (mub_set_from_json(text.c_str(), &raw) != MUB_OK) {
    std::cerr << "error: " << mub_last_error() << "\n";
    return kExitUsage;
  }
  SetHandle set(raw);

  const int dim = mub_set_dim(set.get());
  const int count = mub_set_basis_count(set.get());
  std::printf("dim %d, %d bases, unbiased tol %.3g, orthonormality tol %.3g\n", dim, count, tol, ortho_tol);

  bool ortho_ok = true;
  for (int i = 0; i < count; ++i) {
    double dev = 0.0;
    check_api(mub_set_basis_orthonormality(set.get(), i, &dev));
    const bool ok = dev <= ortho_tol;
    ortho_ok = ortho_ok && ok;
    std::printf("basis %d [%s]: orthonormality deviation %.3e%s\n", i,
                mub_set_basis_label(set.get(), i), dev, ok ? "" : "  <-- FAIL");
  }

  const double target = dim > 0 ? 1.0 / dim : 0.0;
  std::vector<double> table(static_cast<std::size_t>(dim) * dim);
  int certified = 0, worst_a = 0, worst_b = 0;
  double worst_dev = 0.0;
  check_api(mub_set_verify(set.get(), tol, ortho_tol, &certified, &worst_a, &worst_b, &worst_dev));

  for (int a = 0; a < count; ++a) {
    for (int b = a + 1; b < count; ++b) {
      double dev = 0.0;
      check_api(mub_set_overlap_table(set.get(), a, b, table.data(), &dev));
      std::printf("pair (%d,%d): max |overlap^2 - 1/%d| = %.3e%s\n", a, b, dim, dev,
                  dev <= tol ? "" : "  <-- FAIL");
      if (tables) {
        for (int i = 0; i < dim; ++i) {
          std::printf("   ");
          for (int j = 0; j < dim; ++j) {
            const double v = table[static_cast<std::size_t>(i) * dim + j];
            std::printf(" %.4f%c", v, std::abs(v - target) <= tol ? ' ' : '*');
          }
          std::printf("\n");
        }
      }
    }
  }

  std::printf("worst pair: (%d,%d) deviation %.3e\n", worst_a, worst_b, worst_dev);
  std::printf("certified: %s\n", certified ? "yes" : "no");
  return certified ? kExitOk : kExitVerifyFailed;
}

int run_analyze_phase(const std::vector<std::string>& delta_args, double tol) {
  if (delta_args.size() != 3) die_usage("--delta expects three angles");
  const double da = parse_angle(delta_args[0]);
  const double db = parse_angle(delta_args[1]);
  const double dg = parse_angle(delta_args[2]);
  std::printf("phase differences: %.10g %.10g %.10g\n", da, db, dg);

  // Group the 16 column pairs by their sign configuration.
  std::map<std::string, std::pair<double, int>> classes;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      int e2 = 0, e3 = 0, e4 = 0;
      check_api(mub_phase_sign_config(i, j, &e2, &e3, &e4));
      double value = 0.0;
      check_api(mub_phase_criterion(i, j, da, db, dg, &value));
      char key[64];
      std::snprintf(key, sizeof key, "eps=(%+d,%+d,%+d) k=%+d", e2, e3, e4, e2 + e3 + e4);
      auto [it, inserted] = classes.try_emplace(key, value, 0);
      it->second.second += 1;
      (void)inserted;
    }
  }
  bool all_ok = true;
  for (const auto& [key, entry] : classes) {
    const bool ok = std::abs(entry.first) <= tol;
    all_ok = all_ok && ok;
    std::printf("class %s  (%d pairs): criterion %+.6e  %s\n", key.c_str(), entry.second,
                entry.first, ok ? "ok" : "violated");
  }

  int unbiased = 0;
  check_api(mub_phase_pair_unbiased(da, db, dg, tol, &unbiased));
  std::printf("verdict: %s\n", unbiased ? "PASS" : "FAIL");
  return unbiased ? kExitOk : kExitVerifyFailed;
}

int run_search6(const std::string& base_set, std::uint64_t seed, int restarts, int max_iters,
                double tol, const std::string& out_path) {
  char* json = nullptr;
  double best = 0.0;
  const mub_status st = mub_search6(base_set.c_str(), seed, restarts, max_iters, tol, &json, &best);
  if (st != MUB_OK) die_usage(mub_last_error());
  ApiString holder(json);
  write_output(json, out_path);
  // Search outcome is data, not failure.
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct, verify, and search mutually unbiased bases"};
  app.require_subcommand(1);

  // construct
  std::string method;
  int dim = 0, p = 0, n = 0;
  std::vector<std::string> thetas;
  std::string out_path;
  CLI::App* construct = app.add_subcommand("construct", "build a basis set and emit it as JSON");
  construct->add_option("--method", method, "hadamard2-set | weyl | galois | pauli4 | fourier-family | tensor6")
      ->required();
  construct->add_option("--dim", dim, "dimension (weyl)");
  construct->add_option("--p", p, "field characteristic (galois)");
  construct->add_option("--n", n, "field extension degree (galois)");
  construct->add_option("--theta", thetas, "5 comma-separated phases (fourier-family); repeatable");
  construct->add_option("-o,--output", out_path, "output file (default stdout)");

  // verify
  std::string in_path;
  double tol = 1e-10, ortho_tol = 1e-10;
  bool no_tables = false;
  CLI::App* verify = app.add_subcommand("verify", "verify a basis-set document");
  verify->add_option("input", in_path, "input file ('-' or empty reads stdin)");
  verify->add_option("--tol", tol, "unbiasedness tolerance (default 1e-10)");
  verify->add_option("--ortho-tol", ortho_tol, "orthonormality tolerance (default 1e-10)");
  verify->add_flag("--no-tables", no_tables, "suppress the per-pair overlap tables");

  // analyze-phase
  std::vector<std::string> delta_args;
  double phase_tol = 1e-10;
  CLI::App* analyze = app.add_subcommand("analyze-phase", "evaluate the d=4 family criterion at a phase difference");
  analyze->add_option("--delta", delta_args, "three angles (numbers or pi expressions like pi, pi/2)")
      ->expected(3)
      ->required();
  analyze->add_option("--tol", phase_tol, "acceptance tolerance (default 1e-10)");

  // search6
  std::string base_set;
  std::uint64_t seed = 0;
  int restarts = 8, max_iters = 2000;
  double search_tol = 1e-8;
  std::string search_out;
  CLI::App* search = app.add_subcommand("search6", "search for one more d=6 Fourier-family basis");
  search->add_option("--base-set", base_set, "standard | standard+fourier | tensor-triple")->required();
  search->add_option("--seed", seed, "PRNG seed (default 0)");
  search->add_option("--restarts", restarts, "optimizer restarts (default 8)");
  search->add_option("--max-iters", max_iters, "iterations per restart (default 2000)");
  search->add_option("--tol", search_tol, "defect acceptance band (default 1e-8)");
  search->add_option("-o,--output", search_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (construct->parsed()) return run_construct(method, dim, p, n, thetas, out_path);
  if (verify->parsed()) return run_verify(in_path, tol, ortho_tol, !no_tables);
  if (analyze->parsed()) return run_analyze_phase(delta_args, phase_tol);
  if (search->parsed()) return run_search6(base_set, seed, restarts, max_iters, search_tol, search_out);
  return kExitUsage;
}
