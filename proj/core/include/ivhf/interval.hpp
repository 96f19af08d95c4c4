#pragma once

#include <compare>
#include <string>

#include "ivhf/error.hpp"

namespace ivhf {

/// A plain closed real interval. Produced by the additive operations, whose
/// results may leave [0,1] (sums used for score averaging).
struct RealInterval {
  double lower = 0.0;
  double upper = 0.0;

  double width() const noexcept { return upper - lower; }
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// A closed subinterval [lower, upper] of [0,1]. The only way to obtain one
/// is through make() / canonical_pair(), so every instance satisfies
/// 0 <= lower <= upper <= 1.
class UnitInterval {
 public:
  constexpr UnitInterval() noexcept = default;

  /// Throws OutOfRange for endpoints outside [0,1] (or non-finite) and
  /// Inverted when lower > upper.
  static UnitInterval make(double lower, double upper);

  /// Orders the two endpoints before constructing; used for operator
  /// kernels whose endpoint formulas can cross.
  static UnitInterval canonical_pair(double a, double b);

  static constexpr UnitInterval zero() noexcept { return {0.0, 0.0}; }
  static constexpr UnitInterval one() noexcept { return {1.0, 1.0}; }

  constexpr double lower() const noexcept { return lower_; }
  constexpr double upper() const noexcept { return upper_; }
  constexpr double width() const noexcept { return upper_ - lower_; }

  constexpr operator RealInterval() const noexcept { return {lower_, upper_}; }

  friend constexpr bool operator==(const UnitInterval&,
                                   const UnitInterval&) = default;

 private:
  constexpr UnitInterval(double lower, double upper) noexcept
      : lower_(lower), upper_(upper) {}

  double lower_ = 0.0;
  double upper_ = 0.0;
};

std::string to_string(const UnitInterval& a);
std::string to_string(const RealInterval& a);

/// Both endpoints within `tol` of each other.
bool approx_equal(const UnitInterval& a, const UnitInterval& b,
                  double tol) noexcept;

// ---------------------------------------------------------------------------
// Interval-number arithmetic (non-negative scalars only).

RealInterval interval_add(const RealInterval& a, const RealInterval& b) noexcept;

/// Throws NegativeScalar for scale < 0. A zero scale yields [0,0].
RealInterval interval_scale(double scale, const RealInterval& a);

// ---------------------------------------------------------------------------
// Ranking.

/// Degree of possibility that a >= b:
///   max{1 - max((b.upper - a.lower) / (width(a) + width(b)), 0), 0}.
/// When both widths are zero the point values are compared directly
/// (1, 0, or 0.5 on equality).
double possibility_ge(const RealInterval& a, const RealInterval& b) noexcept;

enum class Verdict { less, equal, greater };

struct RankOutcome {
  double possibility = 0.5;  // possibility_ge(a, b)
  Verdict verdict = Verdict::equal;
};

/// Total order on intervals. The verdict is `greater` when the possibility
/// of a >= b exceeds 1/2 and `less` when it falls short; at exactly 1/2 the
/// lower endpoint decides (ascending), then the upper endpoint.
///
/// p(a >= b) > 1/2 exactly when a.lower + a.upper > b.lower + b.upper, so
/// the verdict is computed from endpoint sums quantized at 1e-12. Decimal
/// data that ties in exact arithmetic ties here too, and the order stays transitive.
RankOutcome rank_compare(const RealInterval& a, const RealInterval& b) noexcept;

/// Strict-weak-order predicate equivalent to
/// rank_compare(a, b).verdict == Verdict::less.
bool rank_less(const RealInterval& a, const RealInterval& b) noexcept;

// ---------------------------------------------------------------------------
// Lattice and t-norm kernels. All of them are closed on UnitInterval.

UnitInterval interval_complement(const UnitInterval& a) noexcept;
UnitInterval interval_join(const UnitInterval& a, const UnitInterval& b) noexcept;
UnitInterval interval_meet(const UnitInterval& a, const UnitInterval& b) noexcept;

/// [aL + bL - aL*bL, aU + bU - aU*bU]
UnitInterval ring_sum_kernel(const UnitInterval& a, const UnitInterval& b) noexcept;
/// [aL*bL, aU*bU]
UnitInterval ring_product_kernel(const UnitInterval& a,
                                 const UnitInterval& b) noexcept;

/// The intuitionistic-fuzzy star operation (a + b) / (2 (a b + 1)).
/// Values in [0,1] map into [0, 1/2].
double star_kernel(double a, double b) noexcept;

enum class OperatorKind { O1, O2, O3, O4 };

std::string_view to_string(OperatorKind kind) noexcept;

/// Endpoint-wise O-kernel before reordering. For O1..O3 with d = |x - y|:
///   O1: d / (1 + d),  O2: d / (1 + 2d),  O3: d / 2
/// and O4: |star(x, y)| / 2. The lower endpoint uses the two lower
/// endpoints, the upper endpoint the two upper ones, so lower > upper is
/// possible.
RealInterval operator_kernel_raw(OperatorKind kind, const UnitInterval& a,
                                 const UnitInterval& b) noexcept;

/// operator_kernel_raw() with the endpoints put in order.
UnitInterval operator_kernel(OperatorKind kind, const UnitInterval& a,
                             const UnitInterval& b) noexcept;

}  // namespace ivhf
