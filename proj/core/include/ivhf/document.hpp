#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ivhf/soft_set.hpp"

namespace ivhf {

struct ParsedDocument {
  SoftSet soft_set;
  /// Non-fatal notes, e.g. a cell whose intervals were not in rank order.
  std::vector<std::string> warnings;
};

/// Parses the soft-set document format:
///
///   {"universe": ["h1", ...], "parameters": ["e1", ...],
///    "values": {"e1": {"h1": [[0.3, 0.8], ...], ...}, ...}}
///
/// Throws ParseError for malformed JSON and SchemaError for anything that
/// does not describe a well-formed soft set (missing or unknown keys,
/// endpoints outside [0,1], inverted pairs, empty interval lists, duplicate
/// identifiers). Every cell is put in rank order.
ParsedDocument parse_document(std::string_view text);

/// Canonical rendering: parameters and objects in declared order, intervals
/// in rank order, numbers with up to 12 significant digits, fixed layout.
std::string serialize_document(const SoftSet& soft_set);

/// Shortest rendering of a number that the document format uses.
std::string format_number(double value);

}  // namespace ivhf
