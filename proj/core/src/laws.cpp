#include "ivhf/laws.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include <json.hpp>

#include "ivhf/document.hpp"

namespace ivhf {

std::string_view to_string(LawLevel v) noexcept { return v == LawLevel::element ? "element" : "soft"; }
std::string_view to_string(ParameterMode v) noexcept { return v == ParameterMode::shared ? "shared" : "mixed"; }
std::string_view to_string(Equality v) noexcept {
  switch (v) {
    case Equality::strict: return "strict";
    case Equality::equivalent: return "equivalent";
    case Equality::subset: return "subset";
  }
  return "?";
}
std::string_view to_string(LawStatus v) noexcept { return v == LawStatus::holds ? "holds" : "violated"; }
std::string_view to_string(Enumeration v) noexcept {
  return v == Enumeration::complete ? "complete" : "budget-exceeded";
}

namespace {

using nlohmann::json;

using ElementSides = std::pair<Ivhfe, Ivhfe>;
using SoftSides = std::optional<std::pair<SoftSet, SoftSet>>;
using ElementEval = std::function<ElementSides(std::span<const Ivhfe>)>;
using SoftEval = std::function<SoftSides(std::span<const SoftSet>)>;

struct Entry {
  Law law;
  ElementEval element;
  SoftEval soft;
};

// ---------------------------------------------------------------------------
// Law bodies.

/// Evaluates `f` once per choice of intervals, as the all-pairs operations
/// are written: every sub-term of a compound expression sees the same choice.
template <typename F>
Ivhfe lifted(std::span<const Ivhfe> operands, F f) {
  std::array<const Ivhfe*, 3> ptrs{};
  for (std::size_t i = 0; i < operands.size(); ++i) ptrs[i] = &operands[i];
  return lift_choices(std::span<const Ivhfe* const>(ptrs.data(), operands.size()), f);
}

/// Runs a soft-level body; an empty parameter intersection makes it undefined.
template <typename F>
SoftSides defined(F f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::EmptyParameterIntersection) return std::nullopt;
    throw;
  }
}

Law make_law(std::string id, std::string statement, int arity, LawLevel level, ParameterMode mode,
             Equality equality, LawStatus expected, Claim claim = Claim::identity) {
  return Law{std::move(id), std::move(statement), arity, level, mode, equality, claim, expected};
}

void add_element(std::vector<Entry>& out, Law law, ElementEval f) { out.push_back({std::move(law), std::move(f), {}}); }
void add_soft(std::vector<Entry>& out, Law law, SoftEval f) { out.push_back({std::move(law), {}, std::move(f)}); }

void add_operator_laws(std::vector<Entry>& out, const std::string& prop, OperatorKind k) {
  const std::string o(to_string(k));
  const auto el = [](std::string id, std::string st, int arity, LawStatus expected) {
    return make_law(std::move(id), std::move(st), arity, LawLevel::element, ParameterMode::shared, Equality::strict,
                    expected);
  };
  const auto H = LawStatus::holds;
  const auto V = LawStatus::violated;
  add_element(out, el(prop + ".i", "(m1 (+) m2) n (m1 " + o + " m2) = m1 " + o + " m2", 2, H),
              [k](std::span<const Ivhfe> m) -> ElementSides {
                return {lifted(m, [k](std::span<const UnitInterval> g) {
                          return interval_meet(ring_sum_kernel(g[0], g[1]), operator_kernel(k, g[0], g[1]));
                        }),
                        apply_operator(k, m[0], m[1])};
              });
  add_element(out, el(prop + ".ii", "(m1 (+) m2) u (m1 " + o + " m2) = m1 (+) m2", 2, H),
              [k](std::span<const Ivhfe> m) -> ElementSides {
                return {lifted(m, [k](std::span<const UnitInterval> g) {
                          return interval_join(ring_sum_kernel(g[0], g[1]), operator_kernel(k, g[0], g[1]));
                        }),
                        ring_sum(m[0], m[1])};
              });
  add_element(out, el(prop + ".iii", "(m1 (x) m2) n (m1 " + o + " m2) = m1 " + o + " m2", 2, V),
              [k](std::span<const Ivhfe> m) -> ElementSides {
                return {lifted(m, [k](std::span<const UnitInterval> g) {
                          return interval_meet(ring_product_kernel(g[0], g[1]), operator_kernel(k, g[0], g[1]));
                        }),
                        apply_operator(k, m[0], m[1])};
              });
  add_element(out, el(prop + ".iv", "(m1 (x) m2) u (m1 " + o + " m2) = m1 (x) m2", 2, V),
              [k](std::span<const Ivhfe> m) -> ElementSides {
                return {lifted(m, [k](std::span<const UnitInterval> g) {
                          return interval_join(ring_product_kernel(g[0], g[1]), operator_kernel(k, g[0], g[1]));
                        }),
                        ring_product(m[0], m[1])};
              });
  add_element(out, el(prop + ".v", "(m1 u m2) " + o + " m3 = (m1 " + o + " m3) u (m2 " + o + " m3)", 3, V),
              [k](std::span<const Ivhfe> m) -> ElementSides {
                return {lifted(m, [k](std::span<const UnitInterval> g) {
                          return operator_kernel(k, interval_join(g[0], g[1]), g[2]);
                        }),
                        lifted(m, [k](std::span<const UnitInterval> g) {
                          return interval_join(operator_kernel(k, g[0], g[2]), operator_kernel(k, g[1], g[2]));
                        })};
              });
  add_element(out, el(prop + ".vi", "(m1 n m2) " + o + " m3 = (m1 " + o + " m3) n (m2 " + o + " m3)", 3, V),
              [k](std::span<const Ivhfe> m) -> ElementSides {
                return {lifted(m, [k](std::span<const UnitInterval> g) {
                          return operator_kernel(k, interval_meet(g[0], g[1]), g[2]);
                        }),
                        lifted(m, [k](std::span<const UnitInterval> g) {
                          return interval_meet(operator_kernel(k, g[0], g[2]), operator_kernel(k, g[1], g[2]));
                        })};
              });
}

std::vector<Entry> build_entries() {
  std::vector<Entry> out;
  const auto H = LawStatus::holds;
  const auto V = LawStatus::violated;
  const auto E = LawLevel::element;
  const auto S = LawLevel::soft;
  const auto shared = ParameterMode::shared;
  const auto mixed = ParameterMode::mixed;
  const auto strict = Equality::strict;
  const auto subset = Equality::subset;

  using M = std::span<const Ivhfe>;
  using F = std::span<const SoftSet>;

  add_element(out, make_law("P2.12.i", "(m1 u m2)^c = m1^c n m2^c", 2, E, shared, strict, H), [](M m) -> ElementSides {
    return {complement(element_union(m[0], m[1])), element_intersection(complement(m[0]), complement(m[1]))};
  });
  add_element(out, make_law("P2.12.ii", "(m1 n m2)^c = m1^c u m2^c", 2, E, shared, strict, H), [](M m) -> ElementSides {
    return {complement(element_intersection(m[0], m[1])), element_union(complement(m[0]), complement(m[1]))};
  });

  add_soft(out, make_law("P3.5.i", "F u F = F", 1, S, shared, strict, H),
           [](F f) -> SoftSides { return std::pair{soft_union(f[0], f[0]), f[0]}; });
  add_soft(out, make_law("P3.5.ii", "F n F = F", 1, S, shared, strict, H),
           [](F f) -> SoftSides { return std::pair{soft_intersection(f[0], f[0]), f[0]}; });
  add_soft(out, make_law("P3.5.iii", "F u empty = F", 1, S, shared, strict, H),
           [](F f) -> SoftSides { return std::pair{soft_union(f[0], empty_like(f[0])), f[0]}; });
  add_soft(out, make_law("P3.5.iv", "F n empty = empty", 1, S, shared, strict, H), [](F f) -> SoftSides {
    const SoftSet e = empty_like(f[0]);
    return std::pair{soft_intersection(f[0], e), e};
  });
  add_soft(out, make_law("P3.5.v", "F u full = full", 1, S, shared, strict, H), [](F f) -> SoftSides {
    const SoftSet e = full_like(f[0]);
    return std::pair{soft_union(f[0], e), e};
  });
  add_soft(out, make_law("P3.5.vi", "F n full = F", 1, S, shared, strict, H),
           [](F f) -> SoftSides { return std::pair{soft_intersection(f[0], full_like(f[0])), f[0]}; });

  add_soft(out, make_law("P3.6.i", "(F u G)^c = F^c n G^c", 2, S, shared, strict, H), [](F f) -> SoftSides {
    return std::pair{soft_complement(soft_union(f[0], f[1])),
                     soft_intersection(soft_complement(f[0]), soft_complement(f[1]))};
  });
  add_soft(out, make_law("P3.6.ii", "(F n G)^c = F^c u G^c", 2, S, shared, strict, H), [](F f) -> SoftSides {
    return std::pair{soft_complement(soft_intersection(f[0], f[1])),
                     soft_union(soft_complement(f[0]), soft_complement(f[1]))};
  });

  add_soft(out, make_law("P3.7.i", "F^c n G^c <= (F u G)^c", 2, S, mixed, subset, H), [](F f) {
    return defined([&] {
      return std::pair{soft_intersection(soft_complement(f[0]), soft_complement(f[1])),
                       soft_complement(soft_union(f[0], f[1]))};
    });
  });
  add_soft(out, make_law("P3.7.ii", "(F n G)^c <= F^c u G^c", 2, S, mixed, subset, H), [](F f) {
    return defined([&] {
      return std::pair{soft_complement(soft_intersection(f[0], f[1])),
                       soft_union(soft_complement(f[0]), soft_complement(f[1]))};
    });
  });
  add_soft(out, make_law("P3.7.iii", "F^c n G^c <= (F n G)^c", 2, S, mixed, subset, H), [](F f) {
    return defined([&] {
      return std::pair{soft_intersection(soft_complement(f[0]), soft_complement(f[1])),
                       soft_complement(soft_intersection(f[0], f[1]))};
    });
  });
  add_soft(out, make_law("P3.7.iv", "(F u G)^c <= F^c u G^c", 2, S, mixed, subset, H), [](F f) {
    return defined([&] {
      return std::pair{soft_complement(soft_union(f[0], f[1])),
                       soft_union(soft_complement(f[0]), soft_complement(f[1]))};
    });
  });

  for (const auto& [prop, mode] : {std::pair{std::string("P3.8"), mixed}, std::pair{std::string("P3.9"), shared}}) {
    add_soft(out, make_law(prop + ".i", "F u G = G u F", 2, S, mode, strict, H),
             [](F f) { return defined([&] { return std::pair{soft_union(f[0], f[1]), soft_union(f[1], f[0])}; }); });
    add_soft(out, make_law(prop + ".ii", "F n G = G n F", 2, S, mode, strict, H), [](F f) {
      return defined([&] { return std::pair{soft_intersection(f[0], f[1]), soft_intersection(f[1], f[0])}; });
    });
    add_soft(out, make_law(prop + ".iii", "F u (G u H) = (F u G) u H", 3, S, mode, strict, H), [](F f) {
      return defined([&] {
        return std::pair{soft_union(f[0], soft_union(f[1], f[2])), soft_union(soft_union(f[0], f[1]), f[2])};
      });
    });
    add_soft(out, make_law(prop + ".iv", "F n (G n H) = (F n G) n H", 3, S, mode, strict, H), [](F f) {
      return defined([&] {
        return std::pair{soft_intersection(f[0], soft_intersection(f[1], f[2])),
                         soft_intersection(soft_intersection(f[0], f[1]), f[2])};
      });
    });
  }

  for (const auto& [prop, mode, expected, claim] :
       {std::tuple{std::string("P3.10"), shared, H, Claim::identity},
        std::tuple{std::string("P3.11"), mixed, V, Claim::non_identity}}) {
    add_soft(out, make_law(prop + ".i", "F u (G n H) = (F u G) n (F u H)", 3, S, mode, strict, expected, claim),
             [](F f) {
               return defined([&] {
                 return std::pair{soft_union(f[0], soft_intersection(f[1], f[2])),
                                  soft_intersection(soft_union(f[0], f[1]), soft_union(f[0], f[2]))};
               });
             });
    add_soft(out, make_law(prop + ".ii", "F n (G u H) = (F n G) u (F n H)", 3, S, mode, strict, expected, claim),
             [](F f) {
               return defined([&] {
                 return std::pair{soft_intersection(f[0], soft_union(f[1], f[2])),
                                  soft_union(soft_intersection(f[0], f[1]), soft_intersection(f[0], f[2]))};
               });
             });
  }

  const auto complements = [](F f) {
    std::vector<SoftSet> out;
    out.reserve(f.size());
    for (const auto& s : f) out.push_back(soft_complement(s));
    return out;
  };
  for (const auto& [prop, mode, equality] :
       {std::tuple{std::string("P3.16"), mixed, subset}, std::tuple{std::string("P3.17"), shared, strict}}) {
    const std::string rel = equality == subset ? " <= " : " = ";
    add_soft(out, make_law(prop + ".i", "n_i F_i^c" + rel + "(u_i F_i)^c", 3, S, mode, equality, H),
             [complements](F f) {
               return defined([&] {
                 return std::pair{family_intersection(complements(f)), soft_complement(family_union(f))};
               });
             });
    add_soft(out, make_law(prop + ".ii", "(n_i F_i)^c" + rel + "u_i F_i^c", 3, S, mode, equality, H),
             [complements](F f) {
               return defined([&] {
                 return std::pair{soft_complement(family_intersection(f)), family_union(complements(f))};
               });
             });
  }

  add_operator_laws(out, "P4.2", OperatorKind::O1);
  add_operator_laws(out, "P4.3", OperatorKind::O2);
  add_operator_laws(out, "P4.4", OperatorKind::O3);
  add_operator_laws(out, "P4.5", OperatorKind::O4);
  return out;
}

const std::vector<Entry>& entries() {
  static const std::vector<Entry> all = build_entries();
  return all;
}

const Entry& entry_for(const Law& law) {
  for (const auto& e : entries()) {
    if (e.law.id == law.id) return e;
  }
  throw Error(ErrorKind::UnknownLaw, "unknown law '" + law.id + "'");
}

// ---------------------------------------------------------------------------
// Relations.

bool related(const Ivhfe& lhs, const Ivhfe& rhs, Equality eq, double tol) {
  return eq == Equality::equivalent ? equivalent(lhs, rhs, tol) : strict_equal(lhs, rhs, tol);
}

bool related(const SoftSet& lhs, const SoftSet& rhs, Equality eq, double tol) {
  switch (eq) {
    case Equality::strict: return strict_equal(lhs, rhs, tol);
    case Equality::equivalent: return equivalent(lhs, rhs, tol);
    case Equality::subset: return is_subset(lhs, rhs, AlignmentPolicy::optimistic, tol);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Deterministic generation.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0,1), identical on every platform.
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (const unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::vector<double> grid_points(double step) {
  std::vector<double> points;
  const auto n = static_cast<long>(std::floor(1.0 / step + 1e-9));
  for (long k = 0; k <= n; ++k) points.push_back(std::min(1.0, static_cast<double>(k) * step));
  if (points.back() < 1.0) points.push_back(1.0);
  return points;
}

double snap(double v, double step) { return std::clamp(std::round(v / step) * step, 0.0, 1.0); }

/// Every canonical element of size 1..max_size over the grid intervals.
std::vector<Ivhfe> element_pool(const CheckConfig& cfg) {
  const auto points = grid_points(cfg.grid_step);
  std::vector<UnitInterval> intervals;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) intervals.push_back(UnitInterval::make(points[i], points[j]));
  }
  std::stable_sort(intervals.begin(), intervals.end(), [](const auto& a, const auto& b) { return rank_less(a, b); });

  std::vector<Ivhfe> pool;
  std::vector<std::size_t> idx;
  // Nondecreasing index sequences over the rank-sorted intervals are exactly
  // the canonical multisets.
  const std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t size) {
    if (idx.size() == size) {
      Ivhfe::Storage items;
      for (const auto i : idx) items.push_back(intervals[i]);
      pool.push_back(Ivhfe::sequence(std::move(items)));
      return;
    }
    for (std::size_t i = from; i < intervals.size(); ++i) {
      idx.push_back(i);
      extend(i, size);
      idx.pop_back();
    }
  };
  for (int size = 1; size <= cfg.max_element_size; ++size) extend(0, static_cast<std::size_t>(size));
  return pool;
}

Ivhfe random_element(Rng& rng, const CheckConfig& cfg) {
  const std::size_t size = rng.between(1, static_cast<std::size_t>(cfg.max_element_size));
  std::vector<UnitInterval> raw;
  for (std::size_t k = 0; k < size; ++k) {
    const double a = rng.unit();
    const double b = rng.unit();
    raw.push_back(UnitInterval::canonical_pair(a, b));
  }
  return Ivhfe::canonical(raw);
}

std::vector<std::string> numbered(const char* prefix, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

SoftSet random_soft(Rng& rng, const CheckConfig& cfg, const Names& universe, const Names& parameters) {
  std::vector<Ivhfe> cells;
  cells.reserve(universe->size() * parameters->size());
  for (std::size_t i = 0; i < universe->size() * parameters->size(); ++i) cells.push_back(random_element(rng, cfg));
  return SoftSet::make(universe, parameters, std::move(cells));
}

std::uint64_t saturating_pow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    out *= base;
  }
  return out;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max() : a + b;
}

// ---------------------------------------------------------------------------
// Search and shrinking, generic over the operand type.

template <typename T>
struct Outcome {
  std::optional<std::vector<T>> found;
  std::uint64_t enumerated = 0;
  std::uint64_t trials = 0;
  Enumeration enumeration = Enumeration::complete;
};

template <typename T>
class Checker {
 public:
  using Sides = std::optional<std::pair<T, T>>;
  using Eval = std::function<Sides(std::span<const T>)>;

  Checker(const Law& law, const CheckConfig& cfg, Eval eval) : law_(law), cfg_(cfg), eval_(std::move(eval)) {}

  bool violates(std::span<const T> operands, Equality eq) const {
    const Sides sides = eval_(operands);
    return sides && !related(sides->first, sides->second, eq, cfg_.tolerance);
  }

  Sides sides(std::span<const T> operands) const { return eval_(operands); }

  Outcome<T> search(Equality eq) const {
    Outcome<T> out;
    const auto space = enumeration_size();
    if (space > cfg_.enumeration_cap) {
      out.enumeration = Enumeration::budget_exceeded;
    } else {
      const auto pool = enumeration_pool();
      std::vector<std::size_t> index(static_cast<std::size_t>(law_.arity), 0);
      std::vector<T> current(index.size(), pool.front());
      for (;;) {
        ++out.enumerated;
        if (violates(current, eq)) {
          out.found = current;
          return out;
        }
        std::size_t i = index.size();
        bool done = true;
        while (i > 0) {
          --i;
          if (++index[i] < pool.size()) {
            current[i] = pool[index[i]];
            done = false;
            break;
          }
          index[i] = 0;
          current[i] = pool[0];
        }
        if (done) break;
      }
    }
    Rng rng(cfg_.seed ^ fnv1a(law_.id));
    for (std::uint64_t t = 0; t < cfg_.random_trials; ++t) {
      ++out.trials;
      auto operands = random_operands(rng);
      if (violates(operands, eq)) {
        out.found = std::move(operands);
        return out;
      }
    }
    return out;
  }

  /// Greedy shrinking: apply the first simplification that keeps the
  /// violation, until none does.
  std::vector<T> shrink(std::vector<T> operands, Equality eq, int& steps) const {
    constexpr int kMaxSteps = 10000;
    bool progress = true;
    while (progress && steps < kMaxSteps) {
      progress = false;
      for (auto& candidate : candidates(operands)) {
        if (violates(candidate, eq)) {
          operands = std::move(candidate);
          ++steps;
          progress = true;
          break;
        }
      }
    }
    return operands;
  }

 private:
  std::uint64_t enumeration_size() const;
  std::vector<T> enumeration_pool() const;
  std::vector<T> random_operands(Rng& rng) const;
  std::vector<std::vector<T>> candidates(const std::vector<T>& operands) const;

  const Law& law_;
  const CheckConfig& cfg_;
  Eval eval_;
};

// Candidate simplifications of one element: drop an interval, snap one to
// the grid.
std::vector<Ivhfe> element_candidates(const Ivhfe& e, double step) {
  std::vector<Ivhfe> out;
  if (e.size() > 1) {
    for (std::size_t k = 0; k < e.size(); ++k) {
      Ivhfe::Storage items;
      for (std::size_t j = 0; j < e.size(); ++j) {
        if (j != k) items.push_back(e[j]);
      }
      out.push_back(Ivhfe::sequence(std::move(items)));
    }
  }
  for (std::size_t k = 0; k < e.size(); ++k) {
    const auto snapped = UnitInterval::make(snap(e[k].lower(), step), snap(e[k].upper(), step));
    if (snapped == e[k]) continue;
    std::vector<UnitInterval> items(e.begin(), e.end());
    items[k] = snapped;
    out.push_back(Ivhfe::canonical(items));
  }
  return out;
}

template <>
std::uint64_t Checker<Ivhfe>::enumeration_size() const {
  return saturating_pow(element_pool(cfg_).size(), law_.arity);
}

template <>
std::vector<Ivhfe> Checker<Ivhfe>::enumeration_pool() const {
  return element_pool(cfg_);
}

template <>
std::vector<Ivhfe> Checker<Ivhfe>::random_operands(Rng& rng) const {
  std::vector<Ivhfe> out;
  for (int i = 0; i < law_.arity; ++i) out.push_back(random_element(rng, cfg_));
  return out;
}

template <>
std::vector<std::vector<Ivhfe>> Checker<Ivhfe>::candidates(const std::vector<Ivhfe>& operands) const {
  std::vector<std::vector<Ivhfe>> out;
  for (std::size_t i = 0; i < operands.size(); ++i) {
    for (auto& c : element_candidates(operands[i], cfg_.grid_step)) {
      auto next = operands;
      next[i] = std::move(c);
      out.push_back(std::move(next));
    }
  }
  return out;
}

// Soft-level enumeration covers single-parameter, single-object soft sets
// whose cell ranges over the element pool. Mixed-parameter laws need
// several parameter sets per operand, which puts the space far above any
// reasonable cap; they rely on random trials.
template <>
std::uint64_t Checker<SoftSet>::enumeration_size() const {
  const std::uint64_t pool = element_pool(cfg_).size();
  if (law_.parameter_mode == ParameterMode::shared) return saturating_pow(pool, law_.arity);
  // Per operand: every nonempty parameter subset (of size <= max_parameters)
  // of a pool of max_parameters + 1 names, each cell over the element pool.
  const auto n = static_cast<std::uint64_t>(cfg_.max_parameters) + 1;
  std::uint64_t per_operand = 0;
  std::uint64_t choose = 1;
  for (std::uint64_t k = 1; k <= static_cast<std::uint64_t>(cfg_.max_parameters); ++k) {
    choose = choose * (n - k + 1) / k;
    per_operand = saturating_add(per_operand, choose * saturating_pow(pool, static_cast<int>(k)));
  }
  return saturating_pow(per_operand, law_.arity);
}

template <>
std::vector<SoftSet> Checker<SoftSet>::enumeration_pool() const {
  const Names universe = make_names({"h1"});
  const Names parameters = make_names({"e1"});
  std::vector<SoftSet> out;
  for (auto& e : element_pool(cfg_)) out.push_back(SoftSet::make(universe, parameters, {std::move(e)}));
  return out;
}

template <>
std::vector<SoftSet> Checker<SoftSet>::random_operands(Rng& rng) const {
  const std::size_t objects = rng.between(1, static_cast<std::size_t>(cfg_.max_objects));
  const Names universe = make_names(numbered("h", objects));
  std::vector<SoftSet> out;
  if (law_.parameter_mode == ParameterMode::shared) {
    const Names parameters = make_names(numbered("e", rng.between(1, static_cast<std::size_t>(cfg_.max_parameters))));
    for (int i = 0; i < law_.arity; ++i) out.push_back(random_soft(rng, cfg_, universe, parameters));
    return out;
  }
  const auto pool = numbered("e", static_cast<std::size_t>(cfg_.max_parameters) + 1);
  for (int i = 0; i < law_.arity; ++i) {
    auto names = pool;
    const std::size_t count = rng.between(1, static_cast<std::size_t>(cfg_.max_parameters));
    for (std::size_t k = 0; k < count; ++k) std::swap(names[k], names[rng.between(k, names.size() - 1)]);
    names.resize(count);
    out.push_back(random_soft(rng, cfg_, universe, make_names(std::move(names))));
  }
  return out;
}

SoftSet without_parameter(const SoftSet& s, std::size_t p) {
  auto names = s.parameters();
  names.erase(names.begin() + static_cast<std::ptrdiff_t>(p));
  std::vector<Ivhfe> cells;
  for (std::size_t q = 0; q < s.parameter_count(); ++q) {
    if (q == p) continue;
    const auto row = s.row(q);
    cells.insert(cells.end(), row.begin(), row.end());
  }
  return SoftSet::make(s.shared_universe(), make_names(std::move(names)), std::move(cells));
}

/// `s` restricted to the objects of `universe` (a subset of its own).
SoftSet restricted_to(const SoftSet& s, const Names& universe) {
  std::vector<Ivhfe> cells;
  for (std::size_t p = 0; p < s.parameter_count(); ++p) {
    for (const auto& name : *universe) cells.push_back(s.cell(p, *s.object_index(name)));
  }
  return SoftSet::make(universe, s.shared_parameters(), std::move(cells));
}

template <>
std::vector<std::vector<SoftSet>> Checker<SoftSet>::candidates(const std::vector<SoftSet>& operands) const {
  std::vector<std::vector<SoftSet>> out;
  const SoftSet& first = operands.front();

  // Drop a parameter: from every operand when the parameter set is shared,
  // from one operand otherwise.
  if (law_.parameter_mode == ParameterMode::shared) {
    if (first.parameter_count() > 1) {
      for (const auto& name : first.parameters()) {
        std::vector<SoftSet> next;
        const auto kept = [&] {
          auto names = first.parameters();
          names.erase(std::find(names.begin(), names.end(), name));
          return make_names(std::move(names));
        }();
        for (const auto& s : operands) {
          std::vector<Ivhfe> cells;
          for (const auto& pname : *kept) {
            const auto row = s.row(*s.parameter_index(pname));
            cells.insert(cells.end(), row.begin(), row.end());
          }
          next.push_back(SoftSet::make(s.shared_universe(), kept, std::move(cells)));
        }
        out.push_back(std::move(next));
      }
    }
  } else {
    for (std::size_t i = 0; i < operands.size(); ++i) {
      if (operands[i].parameter_count() < 2) continue;
      for (std::size_t p = 0; p < operands[i].parameter_count(); ++p) {
        auto next = operands;
        next[i] = without_parameter(operands[i], p);
        out.push_back(std::move(next));
      }
    }
  }

  // Drop an object from every operand.
  if (first.object_count() > 1) {
    for (const auto& object : first.universe()) {
      auto names = first.universe();
      names.erase(std::find(names.begin(), names.end(), object));
      const Names universe = make_names(std::move(names));
      std::vector<SoftSet> next;
      for (const auto& s : operands) next.push_back(restricted_to(s, universe));
      out.push_back(std::move(next));
    }
  }

  // Simplify one cell.
  for (std::size_t i = 0; i < operands.size(); ++i) {
    const SoftSet& s = operands[i];
    for (std::size_t c = 0; c < s.cells().size(); ++c) {
      for (auto& e : element_candidates(s.cells()[c], cfg_.grid_step)) {
        std::vector<Ivhfe> cells(s.cells().begin(), s.cells().end());
        cells[c] = std::move(e);
        auto next = operands;
        next[i] = SoftSet::make(s.shared_universe(), s.shared_parameters(), std::move(cells));
        out.push_back(std::move(next));
      }
    }
  }
  return out;
}

template <typename T>
Counterexample make_counterexample(const Checker<T>& checker, const std::vector<T>& operands) {
  const auto sides = checker.sides(operands);
  Counterexample cx{{}, sides->first, sides->second};
  for (const auto& o : operands) cx.operands.emplace_back(o);
  return cx;
}

template <typename T>
LawReport run_checker(const Law& law, const Checker<T>& checker) {
  LawReport report;
  report.law_id = law.id;
  report.expected_status = law.expected_status;

  const auto finish = [&](const Outcome<T>& o, Equality eq) {
    report.equality_used = eq;
    report.tuples_enumerated = o.enumerated;
    report.trials_run = o.trials;
    report.enumeration = o.enumeration;
  };

  const Equality primary = law.equality;
  const Outcome<T> first = checker.search(primary);
  finish(first, primary);
  if (!first.found) return report;

  int steps = 0;
  const auto shrunk = checker.shrink(*first.found, primary, steps);
  const bool fallback = primary == Equality::strict && law.claim == Claim::identity;
  if (!fallback) {
    report.status = LawStatus::violated;
    report.counterexample = make_counterexample(checker, shrunk);
    report.shrink_steps = steps;
    return report;
  }

  const Outcome<T> second = checker.search(Equality::equivalent);
  finish(second, Equality::equivalent);
  if (!second.found) {
    report.strict_counterexample = make_counterexample(checker, shrunk);
    report.shrink_steps = steps;
    return report;
  }
  int equivalent_steps = 0;
  const auto shrunk_eq = checker.shrink(*second.found, Equality::equivalent, equivalent_steps);
  report.status = LawStatus::violated;
  report.counterexample = make_counterexample(checker, shrunk_eq);
  report.shrink_steps = equivalent_steps;
  return report;
}

Checker<Ivhfe>::Eval element_eval(const Entry& e) {
  return [f = e.element](std::span<const Ivhfe> m) -> std::optional<ElementSides> { return f(m); };
}

// ---------------------------------------------------------------------------
// JSON.

json interval_json(const UnitInterval& a) { return json::array({a.lower(), a.upper()}); }

json element_json(const Ivhfe& e) {
  json out = json::array();
  for (const auto& a : e) out.push_back(interval_json(a));
  return out;
}

json soft_json(const SoftSet& s) {
  json values = json::object();
  for (std::size_t p = 0; p < s.parameter_count(); ++p) {
    json row = json::object();
    for (std::size_t o = 0; o < s.object_count(); ++o) row[s.universe()[o]] = element_json(s.cell(p, o));
    values[s.parameters()[p]] = std::move(row);
  }
  return json{{"universe", s.universe()}, {"parameters", s.parameters()}, {"values", std::move(values)}};
}

json operand_json(const Operand& o) {
  return std::visit(
      [](const auto& v) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Ivhfe>) {
          return element_json(v);
        } else {
          return soft_json(v);
        }
      },
      o);
}

json counterexample_json(const Counterexample& cx) {
  json operands = json::array();
  for (const auto& o : cx.operands) operands.push_back(operand_json(o));
  return json{{"operands", std::move(operands)}, {"lhs", operand_json(cx.lhs)}, {"rhs", operand_json(cx.rhs)}};
}

Operand operand_from_json(const json& j, LawLevel level) {
  if (level == LawLevel::soft) return parse_document(j.dump()).soft_set;
  std::vector<UnitInterval> raw;
  for (const auto& pair : j) raw.push_back(UnitInterval::make(pair.at(0).get<double>(), pair.at(1).get<double>()));
  return Ivhfe::canonical(raw);
}

Equality equality_from_string(const std::string& s) {
  if (s == "strict") return Equality::strict;
  if (s == "equivalent") return Equality::equivalent;
  if (s == "subset") return Equality::subset;
  throw Error(ErrorKind::SchemaError, "unknown equality '" + s + "'");
}

}  // namespace

const std::vector<Law>& registry() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> out;
    for (const auto& e : entries()) out.push_back(e.law);
    return out;
  }();
  return laws;
}

const Law& find_law(std::string_view id) {
  for (const auto& law : registry()) {
    if (law.id == id) return law;
  }
  throw Error(ErrorKind::UnknownLaw, "unknown law '" + std::string(id) + "'");
}

void validate(const CheckConfig& config) {
  if (!(config.grid_step > 0.0 && config.grid_step <= 1.0)) {
    throw Error(ErrorKind::InvalidConfig, "grid step must lie in (0, 1]");
  }
  if (config.max_element_size < 1 || config.max_parameters < 1 || config.max_objects < 1) {
    throw Error(ErrorKind::InvalidConfig, "element size, parameter and object bounds must be at least 1");
  }
  if (!(config.tolerance >= 0.0)) throw Error(ErrorKind::InvalidConfig, "tolerance must be non-negative");
}

LawReport check_law(const Law& law, const CheckConfig& config) {
  validate(config);
  const Entry& e = entry_for(law);
  if (law.level == LawLevel::element) {
    return run_checker(law, Checker<Ivhfe>(e.law, config, element_eval(e)));
  }
  return run_checker(law, Checker<SoftSet>(e.law, config, e.soft));
}

std::vector<LawReport> run_suite(const CheckConfig& config) {
  validate(config);
  std::vector<LawReport> out;
  for (const auto& law : registry()) out.push_back(check_law(law, config));
  return out;
}

std::optional<std::pair<Operand, Operand>> evaluate(const Law& law, const std::vector<Operand>& operands) {
  const Entry& e = entry_for(law);
  if (operands.size() != static_cast<std::size_t>(law.arity)) {
    throw Error(ErrorKind::InvalidConfig, "law " + law.id + " takes " + std::to_string(law.arity) + " operands");
  }
  if (law.level == LawLevel::element) {
    std::vector<Ivhfe> m;
    for (const auto& o : operands) m.push_back(std::get<Ivhfe>(o));
    auto sides = e.element(m);
    return std::pair<Operand, Operand>{std::move(sides.first), std::move(sides.second)};
  }
  std::vector<SoftSet> f;
  for (const auto& o : operands) f.push_back(std::get<SoftSet>(o));
  auto sides = e.soft(f);
  if (!sides) return std::nullopt;
  return std::pair<Operand, Operand>{std::move(sides->first), std::move(sides->second)};
}

bool replay_violates(const Law& law, const std::vector<Operand>& operands, Equality equality, double tolerance) {
  const auto sides = evaluate(law, operands);
  if (!sides) return false;
  if (law.level == LawLevel::element) {
    return !related(std::get<Ivhfe>(sides->first), std::get<Ivhfe>(sides->second), equality, tolerance);
  }
  return !related(std::get<SoftSet>(sides->first), std::get<SoftSet>(sides->second), equality, tolerance);
}

std::string report_to_json(const std::vector<LawReport>& reports) {
  json out = json::array();
  for (const auto& r : reports) {
    const Law& law = find_law(r.law_id);
    json item{{"law_id", r.law_id},
              {"statement", law.statement},
              {"level", to_string(law.level)},
              {"parameter_mode", to_string(law.parameter_mode)},
              {"status", to_string(r.status)},
              {"enumeration", to_string(r.enumeration)},
              {"tuples_enumerated", r.tuples_enumerated},
              {"trials_run", r.trials_run},
              {"equality_used", to_string(r.equality_used)},
              {"expected_status", to_string(r.expected_status)},
              {"shrink_steps", r.shrink_steps}};
    if (r.counterexample) item["counterexample"] = counterexample_json(*r.counterexample);
    if (r.strict_counterexample) item["strict_counterexample"] = counterexample_json(*r.strict_counterexample);
    out.push_back(std::move(item));
  }
  return out.dump(2) + "\n";
}

std::vector<ReplayCase> replay_cases_from_json(std::string_view report_json) {
  json doc;
  try {
    doc = json::parse(report_json.begin(), report_json.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed report: ") + e.what());
  }
  std::vector<ReplayCase> out;
  try {
    for (const auto& item : doc) {
      const Law& law = find_law(item.at("law_id").get<std::string>());
      ReplayCase c{law.id,
                   item.at("status").get<std::string>() == "holds" ? LawStatus::holds : LawStatus::violated,
                   equality_from_string(item.at("equality_used").get<std::string>()),
                   {}};
      if (const auto cx = item.find("counterexample"); cx != item.end()) {
        for (const auto& o : cx->at("operands")) c.operands.push_back(operand_from_json(o, law.level));
      }
      out.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::SchemaError, std::string("malformed report: ") + e.what());
  }
  return out;
}

}  // namespace ivhf
