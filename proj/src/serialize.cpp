/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "mubkit/serialize.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <system_error>

#include "json.hpp"

namespace mub {

namespace {

constexpr const char* kSchemaVersion = "1.0";

void append_json_string(std::string& out, std::string_view s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) throw ContractError("cannot serialize non-finite number");
  // std::to_chars is locale-independent, unlike the printf family
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (res.ec != std::errc()) throw ContractError("number formatting failed");
  std::string out(buf, res.ptr);
  // keep the literal float-typed for JSON readers, so -0.0 survives the trip
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

std::string to_json(const BasisSetDocument& doc) {
  std::string out;
  out += "{\n";
  out += "  \"schema_version\": \"";
  out += kSchemaVersion;
  out += "\",\n";
  out += "  \"kind\": \"mub_basis_set\",\n";
  out += "  \"dim\": " + std::to_string(doc.set.dim) + ",\n";

  out += "  \"metadata\": {";
  bool first = true;
  for (const auto& [key, value] : doc.metadata) {
    out += first ? "\n" : ",\n";
    out += "    ";
    append_json_string(out, key);
    out += ": ";
    append_json_string(out, value);
    first = false;
  }
  out += first ? "},\n" : "\n  },\n";

  out += "  \"bases\": [";
  for (std::size_t b = 0; b < doc.set.bases.size(); ++b) {
    const Basis& basis = doc.set.bases[b];
    if (basis.dim != doc.set.dim)
      throw ContractError("document basis dimension disagrees with set dimension");
    out += b == 0 ? "\n" : ",\n";
    out += "    {\"label\": ";
    append_json_string(out, basis.label);
    out += ", \"columns\": [\n";
    for (std::size_t c = 0; c < basis.dim; ++c) {
      out += "      [";
      for (std::size_t r = 0; r < basis.dim; ++r) {
        const Complex z = basis.vectors(r, c);
        if (r) out += ", ";
        out += '[';
        out += format_double(z.real());
        out += ", ";
        out += format_double(z.imag());
        out += ']';
      }
      out += c + 1 < basis.dim ? "],\n" : "]\n";
    }
    out += "    ]}";
  }
  out += doc.set.bases.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError("invalid basis-set document at " + path + ": " + what);
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "non-finite value");
  return v;
}

}  // namespace

BasisSetDocument basis_set_from_json(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what(), e.byte);
  } catch (const json::exception& e) {
    throw ParseError(std::string("JSON parse error: ") + e.what());
  }
  if (!root.is_object()) schema_error("$", "expected an object");

  const auto version = root.find("schema_version");
  if (version == root.end() || !version->is_string())
    schema_error("$.schema_version", "missing or not a string");
  const std::string ver = version->get<std::string>();
  if (ver.rfind("1.", 0) != 0)
    schema_error("$.schema_version", "unsupported version " + ver);

  const auto dim_it = root.find("dim");
  if (dim_it == root.end() || !dim_it->is_number_unsigned() || dim_it->get<std::size_t>() == 0)
    schema_error("$.dim", "missing or not a positive integer");
  const std::size_t dim = dim_it->get<std::size_t>();

  BasisSetDocument doc;
  doc.set.dim = dim;
  doc.set.certified = false;

  if (const auto meta = root.find("metadata"); meta != root.end()) {
    if (!meta->is_object()) schema_error("$.metadata", "expected an object");
    for (const auto& [key, value] : meta->items()) {
      if (value.is_string())
        doc.metadata[key] = value.get<std::string>();
      else
        doc.metadata[key] = value.dump();
    }
  }

  const auto bases = root.find("bases");
  if (bases == root.end() || !bases->is_array() || bases->empty())
    schema_error("$.bases", "missing, not an array, or empty");

  for (std::size_t b = 0; b < bases->size(); ++b) {
    const json& jb = (*bases)[b];
    const std::string path = "$.bases[" + std::to_string(b) + "]";
    if (!jb.is_object()) schema_error(path, "expected an object");
    const auto label = jb.find("label");
    if (label == jb.end() || !label->is_string()) schema_error(path + ".label", "missing or not a string");
    const auto cols = jb.find("columns");
    if (cols == jb.end() || !cols->is_array() || cols->size() != dim)
      schema_error(path + ".columns", "expected an array of dim columns");

    ComplexMatrix m(dim, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      const json& jc = (*cols)[c];
      const std::string cpath = path + ".columns[" + std::to_string(c) + "]";
      if (!jc.is_array() || jc.size() != dim) schema_error(cpath, "expected dim entries");
      for (std::size_t r = 0; r < dim; ++r) {
        const json& jz = jc[r];
        const std::string zpath = cpath + "[" + std::to_string(r) + "]";
        if (!jz.is_array() || jz.size() != 2) schema_error(zpath, "expected [re, im]");
        m(r, c) = Complex(number_at(jz[0], zpath + "[0]"), number_at(jz[1], zpath + "[1]"));
      }
    }
    doc.set.bases.emplace_back(std::move(m), label->get<std::string>());
  }
  return doc;
}

std::string search_report_to_json(const SearchReport& report, const SearchConfig& cfg,
                                  const std::string& base_set_name) {
  std::string out;
  out += "{\n";
  out += "  \"schema_version\": \"";
  out += kSchemaVersion;
  out += "\",\n";
  out += "  \"kind\": \"mub_search_report\",\n";
  out += "  \"dim\": 6,\n";
  out += "  \"base_set\": ";
  append_json_string(out, base_set_name);
  out += ",\n";
  out += "  \"seed\": " + std::to_string(cfg.seed) + ",\n";
  out += "  \"restarts\": " + std::to_string(cfg.restarts) + ",\n";
  out += "  \"max_iters\": " + std::to_string(cfg.max_iters) + ",\n";
  out += "  \"target_bases\": " + std::to_string(cfg.target_bases) + ",\n";
  out += "  \"tol\": " + format_double(cfg.tol) + ",\n";
  out += "  \"best_defect\": " + format_double(report.best_defect) + ",\n";
  out += "  \"iterations_used\": " + std::to_string(report.iterations_used) + ",\n";

  out += "  \"best_phases\": [";
  for (std::size_t i = 0; i < report.best_phases.size(); ++i) {
    out += i ? ", [" : "[";
    const PhaseVector& pv = report.best_phases[i];
    for (std::size_t k = 0; k < pv.phases.size(); ++k) {
      if (k) out += ", ";
      out += format_double(pv.phases[k]);
    }
    out += ']';
  }
  out += "],\n";

  out += "  \"history\": [";
  for (std::size_t i = 0; i < report.history.size(); ++i) {
    out += i ? ", [" : "[";
    out += std::to_string(report.history[i].first) + ", " + format_double(report.history[i].second);
    out += ']';
  }
  out += "]\n";
  out += "}\n";
  return out;
}

}  // namespace mub
