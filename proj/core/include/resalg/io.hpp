#pragma once

#include <stdexcept>
#include <string>

#include "resalg/algebra.hpp"

namespace resalg {

/// Malformed document: bad JSON, missing fields, wrong table shapes or
/// out-of-range entries.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed document whose tables do not satisfy the axioms of the
/// declared signature.
struct ValidationError : std::runtime_error {
  ValidationError(const std::string& what, ValidationReport rep)
      : std::runtime_error(what), report(std::move(rep)) {}
  ValidationReport report;
};

struct LoadResult {
  FiniteAlgebra algebra;
  bool relabeled = false;  // input had bot/top off the canonical positions
  std::string notice;
};

/// Parses, normalizes noncanonical element order (bot to 0, top to n-1) and
/// validates. Throws ParseError / ValidationError.
LoadResult load_algebra(const std::string& path);
LoadResult algebra_from_document(const std::string& text);

/// Serializes as a UTF-8 JSON document with row-major integer tables. Hoop
/// signatures omit the derived meet and the absent join/bot.
std::string to_document(const FiniteAlgebra& a);
void save_algebra(const FiniteAlgebra& a, const std::string& path);

}  // namespace resalg
