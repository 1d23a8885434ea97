/*
 * (C) Copyright 2026 mubkit developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mub {

/// Shape or size disagreement between operands.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Request outside the supported parameter range (non-prime dimension,
/// even characteristic, dimension above the small-d scope, ...).
struct UnsupportedError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Input violates a documented precondition of the operation
/// (non-Hermitian matrix, non-constant-modulus entries, ...).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed or schema-invalid document. byte_offset() is the position
/// reported by the JSON parser when known, 0 for schema-level failures.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, std::size_t byte_offset = 0)
      : std::runtime_error(what), byte_offset_(byte_offset) {}
  std::size_t byte_offset() const noexcept { return byte_offset_; }

private:
  std::size_t byte_offset_;
};

}  // namespace mub
