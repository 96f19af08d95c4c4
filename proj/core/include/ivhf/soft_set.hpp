#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivhf/element.hpp"

namespace ivhf {

/// Immutable, shareable list of identifiers (objects or parameters).
using Names = std::shared_ptr<const std::vector<std::string>>;

Names make_names(std::vector<std::string> names);

/// The value of one parameter: object identifier -> membership.
using IvhfSet = std::map<std::string, Ivhfe, std::less<>>;

struct CombineOptions {
  CombineMode mode = CombineMode::aligned;
  AlignmentPolicy policy = AlignmentPolicy::optimistic;
};

/// Interval-valued hesitant fuzzy soft set: a universe of objects, a set of
/// parameters, and one element per (parameter, object) cell.
///
/// Cells are stored row-major (parameter-major). Both identifier lists are
/// shared between soft sets derived from one another, so operations on soft
/// sets with a common parameter set do not copy strings.
class SoftSet {
 public:
  /// Validates: nonempty universe (EmptyUniverse), nonempty parameter list
  /// and unique identifiers (InvalidSoftSet), and
  /// cells.size() == |parameters| * |universe| (InvalidSoftSet).
  static SoftSet make(Names universe, Names parameters, std::vector<Ivhfe> cells);
  static SoftSet make(std::vector<std::string> universe, std::vector<std::string> parameters,
                      std::vector<Ivhfe> cells);

  const std::vector<std::string>& universe() const noexcept { return *universe_; }
  const std::vector<std::string>& parameters() const noexcept { return *parameters_; }
  const Names& shared_universe() const noexcept { return universe_; }
  const Names& shared_parameters() const noexcept { return parameters_; }

  std::size_t object_count() const noexcept { return universe_->size(); }
  std::size_t parameter_count() const noexcept { return parameters_->size(); }

  std::optional<std::size_t> parameter_index(std::string_view parameter) const noexcept;
  std::optional<std::size_t> object_index(std::string_view object) const noexcept;
  bool has_parameter(std::string_view parameter) const noexcept {
    return parameter_index(parameter).has_value();
  }

  const Ivhfe& cell(std::size_t parameter, std::size_t object) const noexcept {
    return cells_[parameter * universe_->size() + object];
  }
  std::span<const Ivhfe> row(std::size_t parameter) const noexcept {
    return {cells_.data() + parameter * universe_->size(), universe_->size()};
  }
  std::span<const Ivhfe> cells() const noexcept { return cells_; }

  /// Throws InvalidSoftSet for an unknown parameter or object.
  const Ivhfe& at(std::string_view parameter, std::string_view object) const;
  IvhfSet value(std::string_view parameter) const;

 private:
  SoftSet(Names universe, Names parameters, std::vector<Ivhfe> cells)
      : universe_(std::move(universe)), parameters_(std::move(parameters)), cells_(std::move(cells)) {}

  Names universe_;
  Names parameters_;
  std::vector<Ivhfe> cells_;
};

/// Every cell {[0,0]} / {[1,1]}. Throws EmptyUniverse.
SoftSet empty_of(std::vector<std::string> parameters, std::vector<std::string> universe);
SoftSet full_of(std::vector<std::string> parameters, std::vector<std::string> universe);
/// Same shape as `like`.
SoftSet empty_like(const SoftSet& like);
SoftSet full_like(const SoftSet& like);

// Binary operations require the same set of objects (UniverseMismatch
// otherwise); the result lists objects in the left operand's order.

/// Parameters A ∪ B (A's order, then B − A). Cells of A − B come from F,
/// cells of B − A from G, shared cells are combined.
SoftSet soft_union(const SoftSet& f, const SoftSet& g, CombineOptions options = {});

/// Parameters A ∩ B in A's order. Throws EmptyParameterIntersection.
SoftSet soft_intersection(const SoftSet& f, const SoftSet& g, CombineOptions options = {});

SoftSet soft_complement(const SoftSet& f);

/// A ⊆ B and, for every shared cell, the canonical forms aligned under
/// `policy` are componentwise ≤ index by index.
bool is_subset(const SoftSet& f, const SoftSet& g,
               AlignmentPolicy policy = AlignmentPolicy::optimistic, double tol = kElementTolerance);

/// Require equal parameter sets (ParameterMismatch).
SoftSet soft_ring_sum(const SoftSet& f, const SoftSet& g);
SoftSet soft_ring_product(const SoftSet& f, const SoftSet& g);

/// apply_operator on every cell of the shared parameters A ∩ B.
SoftSet soft_apply_operator(OperatorKind kind, const SoftSet& f, const SoftSet& g);

/// Left folds. Throw EmptyFamily for an empty list.
SoftSet family_union(std::span<const SoftSet> members, CombineOptions options = {});
SoftSet family_intersection(std::span<const SoftSet> members, CombineOptions options = {});

/// Same parameter set, same object set, cellwise strict_equal.
bool strict_equal(const SoftSet& f, const SoftSet& g, double tol = kElementTolerance);
/// Same parameter set, same object set, cellwise equivalent.
bool equivalent(const SoftSet& f, const SoftSet& g, double tol = kElementTolerance);

/// Multi-line rendering for diagnostics.
std::string to_string(const SoftSet& f);

}  // namespace ivhf
