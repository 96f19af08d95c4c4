#include "ivhf/document.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include <json.hpp>

namespace ivhf {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& message) { throw Error(ErrorKind::SchemaError, message); }

std::vector<std::string> read_names(const json& doc, const char* key) {
  const auto it = doc.find(key);
  if (it == doc.end()) schema_error(std::string("missing key '") + key + "'");
  if (!it->is_array()) schema_error(std::string("'") + key + "' must be an array of strings");
  std::vector<std::string> names;
  std::set<std::string> seen;
  for (const auto& item : *it) {
    if (!item.is_string()) schema_error(std::string("'") + key + "' must be an array of strings");
    auto name = item.get<std::string>();
    if (!seen.insert(name).second) schema_error(std::string("duplicate identifier '") + name + "' in '" + key + "'");
    names.push_back(std::move(name));
  }
  if (names.empty()) schema_error(std::string("'") + key + "' must not be empty");
  return names;
}

UnitInterval read_interval(const json& pair, const std::string& where) {
  if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
    schema_error(where + ": an interval must be a [lower, upper] pair of numbers");
  }
  try {
    return UnitInterval::make(pair[0].get<double>(), pair[1].get<double>());
  } catch (const Error& e) {
    schema_error(where + ": " + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

ParsedDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("a soft-set document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "universe" && key != "parameters" && key != "values") schema_error("unknown key '" + key + "'");
  }
  auto universe = read_names(doc, "universe");
  auto parameters = read_names(doc, "parameters");

  const auto values = doc.find("values");
  if (values == doc.end()) schema_error("missing key 'values'");
  if (!values->is_object()) schema_error("'values' must be an object keyed by parameter");
  for (const auto& [key, _] : values->items()) {
    if (std::find(parameters.begin(), parameters.end(), key) == parameters.end()) {
      schema_error("'values' has undeclared parameter '" + key + "'");
    }
  }

  std::vector<std::string> warnings;
  std::vector<Ivhfe> cells;
  cells.reserve(parameters.size() * universe.size());
  for (const auto& parameter : parameters) {
    const auto row = values->find(parameter);
    if (row == values->end()) schema_error("missing values for parameter '" + parameter + "'");
    if (!row->is_object()) schema_error("values of parameter '" + parameter + "' must be an object keyed by object");
    for (const auto& [key, _] : row->items()) {
      if (std::find(universe.begin(), universe.end(), key) == universe.end()) {
        schema_error("parameter '" + parameter + "' has undeclared object '" + key + "'");
      }
    }
    for (const auto& object : universe) {
      const std::string where = parameter + "/" + object;
      const auto list = row->find(object);
      if (list == row->end()) schema_error("missing value for " + where);
      if (!list->is_array()) schema_error(where + ": expected a list of intervals");
      if (list->empty()) schema_error(where + ": the interval list must not be empty");
      std::vector<UnitInterval> raw;
      raw.reserve(list->size());
      for (const auto& pair : *list) raw.push_back(read_interval(pair, where));
      auto element = Ivhfe::canonical(raw);
      if (!std::equal(raw.begin(), raw.end(), element.begin(), element.end())) {
        warnings.push_back(where + ": intervals reordered into rank order");
      }
      cells.push_back(std::move(element));
    }
  }
  return {SoftSet::make(std::move(universe), std::move(parameters), std::move(cells)), std::move(warnings)};
}

std::string serialize_document(const SoftSet& soft_set) {
  const auto name_list = [](const std::vector<std::string>& names) {
    std::string s = "[";
    for (std::size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + quoted(names[i]);
    return s + "]";
  };
  std::string out = "{\n";
  out += "  \"universe\": " + name_list(soft_set.universe()) + ",\n";
  out += "  \"parameters\": " + name_list(soft_set.parameters()) + ",\n";
  out += "  \"values\": {\n";
  for (std::size_t p = 0; p < soft_set.parameter_count(); ++p) {
    out += "    " + quoted(soft_set.parameters()[p]) + ": {\n";
    for (std::size_t o = 0; o < soft_set.object_count(); ++o) {
      out += "      " + quoted(soft_set.universe()[o]) + ": [";
      const Ivhfe sorted = canonicalize(soft_set.cell(p, o));
      for (std::size_t k = 0; k < sorted.size(); ++k) {
        if (k) out += ", ";
        out += "[" + format_number(sorted[k].lower()) + ", " + format_number(sorted[k].upper()) + "]";
      }
      out += o + 1 < soft_set.object_count() ? "],\n" : "]\n";
    }
    out += p + 1 < soft_set.parameter_count() ? "    },\n" : "    }\n";
  }
  out += "  }\n}\n";
  return out;
}

}  // namespace ivhf
