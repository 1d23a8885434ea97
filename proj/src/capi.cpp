/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit.h"

#include <cstring>
#include <new>
#include <string>

#include "mubkit/basis.hpp"
#include "mubkit/galois.hpp"
#include "mubkit/hadamard.hpp"
#include "mubkit/pauli2q.hpp"
#include "mubkit/phase_family.hpp"
#include "mubkit/search6.hpp"
#include "mubkit/serialize.hpp"
#include "mubkit/weyl.hpp"

struct mub_set {
  mub::BasisSetDocument doc;
};

namespace {

thread_local std::string g_last_error;

void clear_error() { g_last_error.clear(); }

mub_status fail(mub_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

// Run the body, mapping exceptions to status codes.
template <typename Fn>
mub_status guarded(Fn&& fn) {
  clear_error();
  try {
    return fn();
  } catch (const mub::DimensionError& e) {
    return fail(MUB_ERR_DIMENSION, e.what());
  } catch (const mub::UnsupportedError& e) {
    return fail(MUB_ERR_UNSUPPORTED, e.what());
  } catch (const mub::ParseError& e) {
    return fail(MUB_ERR_PARSE, e.what());
  } catch (const mub::ContractError& e) {
    return fail(MUB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(MUB_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(MUB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(MUB_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(MUB_ERR_INTERNAL, "unknown error");
  }
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mub_status take_set(mub::MubSet&& set, std::map<std::string, std::string> metadata, mub_set_t** out) {
  auto* handle = new mub_set;
  handle->doc.set = std::move(set);
  handle->doc.metadata = std::move(metadata);
  *out = handle;
  return MUB_OK;
}

std::map<std::string, std::string> construction_metadata(const mub::MubSet& set, const std::string& method) {
  return {
      {"method", method},
      {"certified", set.certified ? "true" : "false"},
      {"tol", mub::format_double(set.tol)},
      {"generator", std::string("mubkit ") + MUBKIT_VERSION},
  };
}

mub_status require(bool ok, const char* what) {
  if (ok) return MUB_OK;
  return fail(MUB_ERR_INVALID_ARGUMENT, what);
}

mub_status check_basis_index(const mub_set_t* set, int index) {
  if (!set) return fail(MUB_ERR_INVALID_ARGUMENT, "null set handle");
  if (index < 0 || static_cast<std::size_t>(index) >= set->doc.set.bases.size())
    return fail(MUB_ERR_INVALID_ARGUMENT, "basis index out of range");
  return MUB_OK;
}

mub::MubSet named_base_set(const std::string& name) {
  if (name == "standard") {
    mub::MubSet set;
    set.dim = 6;
    set.bases.push_back(mub::standard_basis(6));
    mub::certify_set(set);
    return set;
  }
  if (name == "standard+fourier") {
    mub::MubSet set;
    set.dim = 6;
    set.bases.push_back(mub::standard_basis(6));
    set.bases.push_back(mub::fourier_family_basis(mub::PhaseVector(6, {0, 0, 0, 0, 0})));
    mub::certify_set(set);
    return set;
  }
  if (name == "tensor-triple") return mub::tensor_mub_triple();
  throw mub::ContractError("unknown base set '" + name +
                           "' (expected standard, standard+fourier, or tensor-triple)");
}

}  // namespace

extern "C" {

const char* mub_version(void) { return MUBKIT_VERSION; }

const char* mub_last_error(void) { return g_last_error.c_str(); }

void mub_set_free(mub_set_t* set) { delete set; }

void mub_string_free(char* s) { delete[] s; }

mub_status mub_construct_hadamard2_set(mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    mub::MubSet set = mub::hadamard2_set();
    auto meta = construction_metadata(set, "hadamard2-set");
    return take_set(std::move(set), std::move(meta), out);
  });
}

mub_status mub_construct_weyl(int dim, mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    if (dim < 2) throw mub::UnsupportedError("weyl requires prime dimension >= 2");
    mub::MubSet set = mub::weyl_mub_set(static_cast<std::size_t>(dim));
    auto meta = construction_metadata(set, "weyl");
    meta["dim"] = std::to_string(dim);
    return take_set(std::move(set), std::move(meta), out);
  });
}

mub_status mub_construct_galois(int p, int n, mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    mub::GaloisField field(p, n);
    mub::MubSet set = mub::galois_mub_set(field);
    auto meta = construction_metadata(set, "galois");
    meta["p"] = std::to_string(p);
    meta["n"] = std::to_string(n);
    return take_set(std::move(set), std::move(meta), out);
  });
}

mub_status mub_construct_pauli4(mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    mub::MubSet set = mub::pauli_mub_set();
    auto meta = construction_metadata(set, "pauli4");
    return take_set(std::move(set), std::move(meta), out);
  });
}

mub_status mub_construct_tensor6(mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    mub::MubSet set = mub::tensor_mub_triple();
    auto meta = construction_metadata(set, "tensor6");
    return take_set(std::move(set), std::move(meta), out);
  });
}

mub_status mub_construct_standard6(mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    mub::MubSet set = named_base_set("standard");
    auto meta = construction_metadata(set, "standard6");
    return take_set(std::move(set), std::move(meta), out);
  });
}

mub_status mub_construct_fourier_family(const double* thetas, int count, mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(out != nullptr, "null output pointer"); st != MUB_OK) return st;
    if (count < 0 || (count > 0 && !thetas))
      throw mub::ContractError("fourier-family requires count >= 0 phase vectors");
    mub::MubSet set;
    set.dim = 6;
    set.bases.push_back(mub::standard_basis(6));
    for (int i = 0; i < count; ++i) {
      std::vector<double> phases(thetas + i * 5, thetas + (i + 1) * 5);
      set.bases.push_back(mub::fourier_family_basis(mub::PhaseVector(6, std::move(phases))));
    }
    mub::certify_set(set);  // uncertified output is legitimate here
    auto meta = construction_metadata(set, "fourier-family");
    meta["family_members"] = std::to_string(count);
    return take_set(std::move(set), std::move(meta), out);
  });
}

int mub_set_dim(const mub_set_t* set) { return set ? static_cast<int>(set->doc.set.dim) : 0; }

int mub_set_basis_count(const mub_set_t* set) {
  return set ? static_cast<int>(set->doc.set.bases.size()) : 0;
}

const char* mub_set_basis_label(const mub_set_t* set, int index) {
  if (check_basis_index(set, index) != MUB_OK) return nullptr;
  return set->doc.set.bases[static_cast<std::size_t>(index)].label.c_str();
}

mub_status mub_set_entry(const mub_set_t* set, int index, int row, int col, double* re, double* im) {
  return guarded([&]() -> mub_status {
    if (mub_status st = check_basis_index(set, index); st != MUB_OK) return st;
    if (mub_status st = require(re && im, "null output pointer"); st != MUB_OK) return st;
    const mub::Basis& b = set->doc.set.bases[static_cast<std::size_t>(index)];
    if (row < 0 || col < 0 || static_cast<std::size_t>(row) >= b.dim || static_cast<std::size_t>(col) >= b.dim)
      return fail(MUB_ERR_INVALID_ARGUMENT, "entry index out of range");
    const mub::Complex z = b.vectors(static_cast<std::size_t>(row), static_cast<std::size_t>(col));
    *re = z.real();
    *im = z.imag();
    return MUB_OK;
  });
}

const char* mub_set_metadata(const mub_set_t* set, const char* key) {
  if (!set || !key) return nullptr;
  const auto it = set->doc.metadata.find(key);
  return it == set->doc.metadata.end() ? nullptr : it->second.c_str();
}

mub_status mub_set_verify(const mub_set_t* set, double unbiased_tol, double ortho_tol,
                          int* certified, int* worst_a, int* worst_b, double* max_deviation) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(set != nullptr, "null set handle"); st != MUB_OK) return st;
    const mub::VerifyResult res = mub::verify_set(set->doc.set, unbiased_tol, ortho_tol);
    if (certified) *certified = res.certified ? 1 : 0;
    if (worst_a) *worst_a = static_cast<int>(res.worst_pair.first);
    if (worst_b) *worst_b = static_cast<int>(res.worst_pair.second);
    if (max_deviation) *max_deviation = res.max_deviation;
    return MUB_OK;
  });
}

mub_status mub_set_basis_orthonormality(const mub_set_t* set, int index, double* max_deviation) {
  return guarded([&]() -> mub_status {
    if (mub_status st = check_basis_index(set, index); st != MUB_OK) return st;
    if (mub_status st = require(max_deviation != nullptr, "null output pointer"); st != MUB_OK) return st;
    *max_deviation = set->doc.set.bases[static_cast<std::size_t>(index)].orthonormality_defect();
    return MUB_OK;
  });
}

mub_status mub_set_overlap_table(const mub_set_t* set, int a, int b, double* table, double* max_deviation) {
  return guarded([&]() -> mub_status {
    if (mub_status st = check_basis_index(set, a); st != MUB_OK) return st;
    if (mub_status st = check_basis_index(set, b); st != MUB_OK) return st;
    if (mub_status st = require(table != nullptr, "null output pointer"); st != MUB_OK) return st;
    const mub::OverlapReport rep = mub::overlap_table(set->doc.set.bases[static_cast<std::size_t>(a)],
                                                      set->doc.set.bases[static_cast<std::size_t>(b)]);
    std::memcpy(table, rep.table.data(), rep.table.size() * sizeof(double));
    if (max_deviation) *max_deviation = rep.max_deviation;
    return MUB_OK;
  });
}

mub_status mub_set_defect(const mub_set_t* set, double* value) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(set && value, "null pointer"); st != MUB_OK) return st;
    *value = mub::defect(set->doc.set);
    return MUB_OK;
  });
}

mub_status mub_set_to_json(const mub_set_t* set, char** json_out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(set && json_out, "null pointer"); st != MUB_OK) return st;
    *json_out = dup_string(mub::to_json(set->doc));
    return MUB_OK;
  });
}

mub_status mub_set_from_json(const char* json_text, mub_set_t** out) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(json_text && out, "null pointer"); st != MUB_OK) return st;
    mub::BasisSetDocument doc = mub::basis_set_from_json(json_text);
    auto* handle = new mub_set;
    handle->doc = std::move(doc);
    *out = handle;
    return MUB_OK;
  });
}

mub_status mub_phase_sign_config(int i, int j, int* e2, int* e3, int* e4) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(e2 && e3 && e4, "null output pointer"); st != MUB_OK) return st;
    const mub::SignConfig cfg = mub::sign_config(i, j);
    *e2 = cfg.eps[0];
    *e3 = cfg.eps[1];
    *e4 = cfg.eps[2];
    return MUB_OK;
  });
}

mub_status mub_phase_criterion(int i, int j, double da, double db, double dg, double* value) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(value != nullptr, "null output pointer"); st != MUB_OK) return st;
    *value = mub::trig_criterion(mub::sign_config(i, j), mub::PhaseDelta{da, db, dg});
    return MUB_OK;
  });
}

mub_status mub_phase_pair_unbiased(double da, double db, double dg, double tol, int* unbiased) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(unbiased != nullptr, "null output pointer"); st != MUB_OK) return st;
    *unbiased = mub::is_unbiased_family_pair(mub::PhaseDelta{da, db, dg}, tol) ? 1 : 0;
    return MUB_OK;
  });
}

mub_status mub_search_additional(const mub_set_t* existing, const char* base_set_name,
                                 uint64_t seed, int restarts, int max_iters, double tol,
                                 char** report_json, double* best_defect) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(existing && report_json, "null pointer"); st != MUB_OK) return st;
    mub::SearchConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.tol = tol;
    cfg.target_bases = static_cast<int>(existing->doc.set.bases.size()) + 1;
    const mub::SearchReport rep = mub::search_additional_basis(existing->doc.set, cfg);
    *report_json = dup_string(mub::search_report_to_json(
        rep, cfg, base_set_name ? base_set_name : "custom"));
    if (best_defect) *best_defect = rep.best_defect;
    return MUB_OK;
  });
}

mub_status mub_search6(const char* base_set, uint64_t seed, int restarts, int max_iters, double tol,
                       char** report_json, double* best_defect) {
  return guarded([&]() -> mub_status {
    if (mub_status st = require(base_set && report_json, "null pointer"); st != MUB_OK) return st;
    const mub::MubSet existing = named_base_set(base_set);
    mub::SearchConfig cfg;
    cfg.seed = seed;
    cfg.restarts = restarts;
    cfg.max_iters = max_iters;
    cfg.tol = tol;
    cfg.target_bases = static_cast<int>(existing.bases.size()) + 1;
    const mub::SearchReport rep = mub::search_additional_basis(existing, cfg);
    *report_json = dup_string(mub::search_report_to_json(rep, cfg, base_set));
    if (best_defect) *best_defect = rep.best_defect;
    return MUB_OK;
  });
}

} /* extern "C" */
