/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <map>
#include <string>
#include <string_view>

#include "mubkit/basis.hpp"
#include "mubkit/search6.hpp"

namespace mub {

/// A basis-set document: the MubSet payload plus free-form string metadata
/// (construction method, parameters, certification claim, ...). The
/// in-memory `set.certified` flag is never trusted from a file; parsing
/// always returns an uncertified set and callers re-verify.
struct BasisSetDocument {
  MubSet set;
  std::map<std::string, std::string> metadata;  // sorted, so output is stable
};

/// Serialize to schema-versioned JSON. Complex entries are written as
/// two-element arrays [re, im] with 17 significant digits, which round-trips
/// binary64 exactly; output is deterministic byte-for-byte and
/// newline-terminated.
std::string to_json(const BasisSetDocument& doc);

/// Parse and validate a basis-set document. Raises ParseError with the byte
/// offset for malformed JSON and with a field path for schema violations.
/// Unknown fields are ignored for forward compatibility.
BasisSetDocument basis_set_from_json(std::string_view text);

/// Serialize a search report together with the configuration that produced
/// it. Same determinism guarantees as to_json above.
std::string search_report_to_json(const SearchReport& report, const SearchConfig& cfg,
                                  const std::string& base_set_name);

/// Exact decimal form used throughout the writers (17 significant digits).
std::string format_double(double v);

}  // namespace mub
