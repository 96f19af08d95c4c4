#include "ivhf/element.hpp"

#include <algorithm>
#include <vector>

namespace ivhf {

namespace {

constexpr double kDedupTolerance = 1e-12;

void sort_by_rank(Ivhfe::Storage& items) {
  std::stable_sort(items.begin(), items.end(),
                   [](const UnitInterval& x, const UnitInterval& y) { return rank_less(x, y); });
}

/// Items are in rank order, i.e. ascending by quantized endpoint sum. Two
/// intervals within `tol` of each other have sums within 2*tol, so only the
/// kept items in that window need checking.
void dedup_sorted(Ivhfe::Storage& items, double tol) {
  const double window = 2.0 * tol + 2e-12;
  Ivhfe::Storage out;
  for (const auto& x : items) {
    const double sum = x.lower() + x.upper();
    bool seen = false;
    for (auto it = out.rbegin(); it != out.rend() && sum - (it->lower() + it->upper()) <= window; ++it) {
      if (approx_equal(x, *it, tol)) {
        seen = true;
        break;
      }
    }
    if (!seen) out.push_back(x);
  }
  items = std::move(out);
}

Ivhfe::Storage padded(const Ivhfe& e, std::size_t size, AlignmentPolicy policy) {
  Ivhfe::Storage out;
  out.reserve(size);
  const std::size_t extra = size - e.size();
  if (policy == AlignmentPolicy::pessimistic) {
    out.insert(out.end(), extra, e.front());
    out.insert(out.end(), e.begin(), e.end());
  } else {
    out.insert(out.end(), e.begin(), e.end());
    out.insert(out.end(), extra, e.back());
  }
  return out;
}

template <typename Kernel>
Ivhfe all_pairs(const Ivhfe& a, const Ivhfe& b, Kernel kernel) {
  Ivhfe::Storage out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) out.push_back(kernel(x, y));
  }
  sort_by_rank(out);
  dedup_sorted(out, kDedupTolerance);
  return Ivhfe::sequence(std::move(out));
}

}  // namespace

Ivhfe Ivhfe::canonical(std::span<const UnitInterval> raw) {
  Storage items(raw.begin(), raw.end());
  if (items.empty()) throw Error(ErrorKind::EmptyElement, "an element needs at least one interval");
  sort_by_rank(items);
  return Ivhfe(std::move(items));
}

Ivhfe Ivhfe::canonical(std::initializer_list<UnitInterval> raw) {
  return canonical(std::span<const UnitInterval>(raw.begin(), raw.size()));
}

Ivhfe Ivhfe::sequence(std::span<const UnitInterval> items) {
  return sequence(Storage(items.begin(), items.end()));
}

Ivhfe Ivhfe::sequence(Storage items) {
  if (items.empty()) throw Error(ErrorKind::EmptyElement, "an element needs at least one interval");
  return Ivhfe(std::move(items));
}

Ivhfe Ivhfe::empty_membership() { return Ivhfe(Storage{UnitInterval::zero()}); }
Ivhfe Ivhfe::full_membership() { return Ivhfe(Storage{UnitInterval::one()}); }

bool Ivhfe::is_canonical() const noexcept {
  return std::is_sorted(items_.begin(), items_.end(),
                        [](const UnitInterval& x, const UnitInterval& y) { return rank_less(x, y); });
}

std::string to_string(const Ivhfe& e) {
  std::string out = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ", ";
    out += to_string(e[i]);
  }
  return out + "}";
}

Ivhfe canonicalize(std::span<const UnitInterval> raw) { return Ivhfe::canonical(raw); }
Ivhfe canonicalize(const Ivhfe& e) { return Ivhfe::canonical(e.intervals()); }

std::pair<Ivhfe, Ivhfe> align(const Ivhfe& a, const Ivhfe& b, AlignmentPolicy policy) {
  if (a.size() == b.size()) return {a, b};
  const std::size_t n = std::max(a.size(), b.size());
  if (a.size() < n) return {Ivhfe::sequence(padded(a, n, policy)), b};
  return {a, Ivhfe::sequence(padded(b, n, policy))};
}

RealInterval score(const Ivhfe& e) {
  RealInterval sum;
  for (const auto& x : e) sum = interval_add(sum, x);
  return interval_scale(1.0 / static_cast<double>(e.size()), sum);
}

RankOutcome compare_by_score(const Ivhfe& a, const Ivhfe& b) {
  return rank_compare(score(a), score(b));
}

Ivhfe complement(const Ivhfe& e) {
  Ivhfe::Storage out;
  out.reserve(e.size());
  for (const auto& x : e) out.push_back(interval_complement(x));
  return Ivhfe::sequence(std::move(out));
}

Ivhfe combine(SetOp op, const Ivhfe& a, const Ivhfe& b, CombineMode mode, AlignmentPolicy policy) {
  const auto kernel = op == SetOp::union_op ? &interval_join : &interval_meet;
  if (mode == CombineMode::pairwise) return all_pairs(a, b, kernel);

  const std::size_t n = std::max(a.size(), b.size());
  Ivhfe::Storage out;
  out.reserve(n);
  // Padding is index arithmetic here; no padded copies are materialised.
  const auto pick = [&](const Ivhfe& e, std::size_t k) -> const UnitInterval& {
    const std::size_t extra = n - e.size();
    if (policy == AlignmentPolicy::optimistic) return k < e.size() ? e[k] : e.back();
    return k < extra ? e.front() : e[k - extra];
  };
  for (std::size_t k = 0; k < n; ++k) out.push_back(kernel(pick(a, k), pick(b, k)));
  return Ivhfe::sequence(std::move(out));
}

Ivhfe ring_sum(const Ivhfe& a, const Ivhfe& b) { return all_pairs(a, b, &ring_sum_kernel); }

Ivhfe ring_product(const Ivhfe& a, const Ivhfe& b) { return all_pairs(a, b, &ring_product_kernel); }

Ivhfe apply_operator(OperatorKind kind, const Ivhfe& a, const Ivhfe& b) {
  return all_pairs(a, b, [kind](const UnitInterval& x, const UnitInterval& y) {
    return operator_kernel(kind, x, y);
  });
}

Ivhfe lift_choices(std::span<const Ivhfe* const> operands,
                   const std::function<UnitInterval(std::span<const UnitInterval>)>& f) {
  if (operands.empty()) throw Error(ErrorKind::EmptyElement, "lift_choices needs at least one operand");
  std::vector<std::size_t> index(operands.size(), 0);
  std::vector<UnitInterval> choice(operands.size());
  Ivhfe::Storage out;
  for (;;) {
    for (std::size_t i = 0; i < operands.size(); ++i) choice[i] = (*operands[i])[index[i]];
    out.push_back(f(choice));
    // odometer increment, last operand fastest
    std::size_t i = operands.size();
    while (i > 0) {
      --i;
      if (++index[i] < operands[i]->size()) break;
      index[i] = 0;
      if (i == 0) {
        sort_by_rank(out);
        dedup_sorted(out, kDedupTolerance);
        return Ivhfe::sequence(std::move(out));
      }
    }
  }
}

bool strict_equal(const Ivhfe& a, const Ivhfe& b, double tol) {
  if (a.size() != b.size()) return false;
  boost::container::small_vector<bool, 8> used(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!used[j] && approx_equal(x, b[j], tol)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool equivalent(const Ivhfe& a, const Ivhfe& b, double tol) {
  const auto covered = [tol](const Ivhfe& from, const Ivhfe& into) {
    return std::all_of(from.begin(), from.end(), [&](const UnitInterval& x) {
      return std::any_of(into.begin(), into.end(),
                         [&](const UnitInterval& y) { return approx_equal(x, y, tol); });
    });
  };
  return covered(a, b) && covered(b, a);
}

Ivhfe deduplicate(const Ivhfe& e, double tol) {
  Ivhfe::Storage items(e.begin(), e.end());
  sort_by_rank(items);
  dedup_sorted(items, tol);
  return Ivhfe::sequence(std::move(items));
}

}  // namespace ivhf
