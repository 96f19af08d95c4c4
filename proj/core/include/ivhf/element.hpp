#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>

#include <boost/container/small_vector.hpp>

#include "ivhf/interval.hpp"

namespace ivhf {

/// How the shorter of two elements is padded before index-wise combination.
/// optimistic repeats the last (largest) interval at the back, pessimistic
/// repeats the first (smallest) interval at the front.
enum class AlignmentPolicy { optimistic, pessimistic };

/// aligned: pad, then combine index by index (the worked-example reading).
/// pairwise: combine every interval of one element with every interval of
/// the other, then deduplicate and sort (the set-builder reading).
enum class CombineMode { aligned, pairwise };

enum class SetOp { union_op, intersection_op };

/// Default tolerance for element comparisons in user-facing code.
inline constexpr double kElementTolerance = 1e-9;

/// Interval-valued hesitant fuzzy element: a nonempty sequence of unit
/// intervals, duplicates allowed.
///
/// Elements built from raw data go through canonical(), which sorts by
/// rank_compare. Results of aligned operations keep the index order the
/// operation produced: padding and complement are positional, so feeding a
/// result into another aligned operation pairs the same intervals the
/// algebra paired. Use canonicalize() to get the sorted form back.
class Ivhfe {
 public:
  using Storage = boost::container::small_vector<UnitInterval, 4>;
  using const_iterator = Storage::const_iterator;

  /// Sorted by rank_compare. Throws EmptyElement for an empty input.
  static Ivhfe canonical(std::span<const UnitInterval> raw);
  static Ivhfe canonical(std::initializer_list<UnitInterval> raw);

  /// Keeps the given order. Throws EmptyElement for an empty input.
  static Ivhfe sequence(std::span<const UnitInterval> items);
  static Ivhfe sequence(Storage items);

  /// {[0,0]}; the membership of every cell of the empty soft set.
  static Ivhfe empty_membership();
  /// {[1,1]}
  static Ivhfe full_membership();

  std::size_t size() const noexcept { return items_.size(); }
  std::span<const UnitInterval> intervals() const noexcept { return {items_.data(), items_.size()}; }
  const UnitInterval& operator[](std::size_t i) const noexcept { return items_[i]; }
  const UnitInterval& front() const noexcept { return items_.front(); }
  const UnitInterval& back() const noexcept { return items_.back(); }
  const_iterator begin() const noexcept { return items_.begin(); }
  const_iterator end() const noexcept { return items_.end(); }

  /// True when the intervals are in rank order.
  bool is_canonical() const noexcept;

  /// Exact, order-sensitive comparison. See strict_equal() / equivalent()
  /// for the algebraic equalities.
  friend bool operator==(const Ivhfe&, const Ivhfe&) = default;

 private:
  explicit Ivhfe(Storage items) : items_(std::move(items)) {}
  Storage items_;
};

std::string to_string(const Ivhfe& e);

Ivhfe canonicalize(std::span<const UnitInterval> raw);
Ivhfe canonicalize(const Ivhfe& e);

/// Pads the shorter element to the longer one's size according to `policy`.
/// Equal sizes are returned unchanged.
std::pair<Ivhfe, Ivhfe> align(const Ivhfe& a, const Ivhfe& b, AlignmentPolicy policy);

/// Componentwise mean of the intervals.
RealInterval score(const Ivhfe& e);

/// rank_compare applied to the two scores.
RankOutcome compare_by_score(const Ivhfe& a, const Ivhfe& b);

/// Complements every interval in place; size and positions are preserved.
Ivhfe complement(const Ivhfe& e);

Ivhfe combine(SetOp op, const Ivhfe& a, const Ivhfe& b,
              CombineMode mode = CombineMode::aligned,
              AlignmentPolicy policy = AlignmentPolicy::optimistic);

inline Ivhfe element_union(const Ivhfe& a, const Ivhfe& b,
                           CombineMode mode = CombineMode::aligned,
                           AlignmentPolicy policy = AlignmentPolicy::optimistic) {
  return combine(SetOp::union_op, a, b, mode, policy);
}

inline Ivhfe element_intersection(const Ivhfe& a, const Ivhfe& b,
                                  CombineMode mode = CombineMode::aligned,
                                  AlignmentPolicy policy = AlignmentPolicy::optimistic) {
  return combine(SetOp::intersection_op, a, b, mode, policy);
}

// All-pairs operations: every (x, y) in a x b, deduplicated and sorted.
Ivhfe ring_sum(const Ivhfe& a, const Ivhfe& b);
Ivhfe ring_product(const Ivhfe& a, const Ivhfe& b);
Ivhfe apply_operator(OperatorKind kind, const Ivhfe& a, const Ivhfe& b);

/// Evaluates `f` on every choice of one interval from each operand and
/// collects the results (deduplicated, sorted). With a single kernel this is
/// exactly the all-pairs operation; with a compound expression every
/// sub-term sees the same chosen intervals.
Ivhfe lift_choices(std::span<const Ivhfe* const> operands,
                   const std::function<UnitInterval(std::span<const UnitInterval>)>& f);

/// Same multiset of intervals (order ignored), endpoints within `tol`.
bool strict_equal(const Ivhfe& a, const Ivhfe& b, double tol = kElementTolerance);

/// Same set of distinct intervals (multiplicity ignored), within `tol`.
bool equivalent(const Ivhfe& a, const Ivhfe& b, double tol = kElementTolerance);

/// Sorted, with intervals that agree within `tol` collapsed.
Ivhfe deduplicate(const Ivhfe& e, double tol = 1e-12);

}  // namespace ivhf
