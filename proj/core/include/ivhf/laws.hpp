#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivhf/soft_set.hpp"

namespace ivhf {

enum class LawLevel { element, soft };
enum class ParameterMode { shared, mixed };

/// The relation a law asserts between its two sides.
///   strict     — identity; checked under strict equality first, then under
///                dedup equivalence if strict equality fails somewhere.
///   equivalent — identity under dedup equivalence only.
///   subset     — inclusion lhs ⊆ rhs.
enum class Equality { strict, equivalent, subset };

/// identity: the source asserts the law. non_identity: the source asserts
/// the law fails; it is checked under strict equality only and its status
/// still says whether the identity holds.
enum class Claim { identity, non_identity };

enum class LawStatus { holds, violated };

/// complete: every tuple of the exhaustive enumeration was checked.
/// budget_exceeded: the enumeration was larger than the configured cap and
/// was skipped; a `holds` status then rests on random trials alone.
enum class Enumeration { complete, budget_exceeded };

std::string_view to_string(LawLevel v) noexcept;
std::string_view to_string(ParameterMode v) noexcept;
std::string_view to_string(Equality v) noexcept;
std::string_view to_string(LawStatus v) noexcept;
std::string_view to_string(Enumeration v) noexcept;

struct Law {
  std::string id;         // e.g. "P3.6.i"
  std::string statement;  // human-readable form of the identity
  int arity = 0;          // operand count (family laws: family size)
  LawLevel level = LawLevel::soft;
  ParameterMode parameter_mode = ParameterMode::shared;
  Equality equality = Equality::strict;
  Claim claim = Claim::identity;
  LawStatus expected_status = LawStatus::holds;  // advisory only
};

/// All 54 laws, in a fixed order.
const std::vector<Law>& registry();

/// Throws UnknownLaw.
const Law& find_law(std::string_view id);

struct CheckConfig {
  double grid_step = 0.25;
  int max_element_size = 2;
  int max_parameters = 2;
  int max_objects = 2;
  std::uint64_t random_trials = 10000;
  std::uint64_t seed = 20240611;
  double tolerance = 1e-12;
  /// Exhaustive enumerations larger than this are skipped.
  std::uint64_t enumeration_cap = 5'000'000;
};

/// Throws InvalidConfig when a field is outside its domain: grid_step must
/// lie in (0,1], counts must be at least 1, tolerance must be >= 0.
void validate(const CheckConfig& config);

using Operand = std::variant<Ivhfe, SoftSet>;

struct Counterexample {
  std::vector<Operand> operands;
  Operand lhs;
  Operand rhs;
};

struct LawReport {
  std::string law_id;
  LawStatus status = LawStatus::holds;
  Enumeration enumeration = Enumeration::complete;
  std::uint64_t tuples_enumerated = 0;
  std::uint64_t trials_run = 0;
  /// The predicate the status refers to (strict, equivalent or subset).
  Equality equality_used = Equality::strict;
  /// Present when status == violated.
  std::optional<Counterexample> counterexample;
  /// For identities that fail strictly but hold under equivalence: the
  /// shrunk strict counterexample.
  std::optional<Counterexample> strict_counterexample;
  int shrink_steps = 0;
  LawStatus expected_status = LawStatus::holds;
};

LawReport check_law(const Law& law, const CheckConfig& config);
std::vector<LawReport> run_suite(const CheckConfig& config);

/// Evaluates both sides on `operands`. Returns nullopt when a side is
/// undefined (e.g. an empty parameter intersection).
std::optional<std::pair<Operand, Operand>> evaluate(const Law& law, const std::vector<Operand>& operands);

/// True when the operands violate the law under `equality`.
bool replay_violates(const Law& law, const std::vector<Operand>& operands, Equality equality,
                     double tolerance = 1e-12);

/// JSON report: an array with one object per law. Doubles are written with
/// round-trip precision so counterexamples replay exactly.
std::string report_to_json(const std::vector<LawReport>& reports);

/// Reads the operand tuples back from a report produced by report_to_json.
struct ReplayCase {
  std::string law_id;
  LawStatus status;
  Equality equality_used;
  std::vector<Operand> operands;
};
std::vector<ReplayCase> replay_cases_from_json(std::string_view report_json);

}  // namespace ivhf
