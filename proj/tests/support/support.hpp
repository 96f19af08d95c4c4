#pragma once

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "ivhf/document.hpp"
#include "ivhf/soft_set.hpp"

namespace ivhf::testing {

inline std::string data_path(const std::string& name) { return std::string(IVHF_TEST_DATA_DIR) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline SoftSet load_data(const std::string& name) { return parse_document(read_text(data_path(name))).soft_set; }

inline UnitInterval iv(double lower, double upper) { return UnitInterval::make(lower, upper); }

/// Builds an element in the given order (no sorting).
inline Ivhfe seq(std::initializer_list<std::pair<double, double>> items) {
  std::vector<UnitInterval> out;
  for (const auto& [l, u] : items) out.push_back(iv(l, u));
  return Ivhfe::sequence(out);
}

/// Builds a canonical (rank-sorted) element.
inline Ivhfe elem(std::initializer_list<std::pair<double, double>> items) {
  std::vector<UnitInterval> out;
  for (const auto& [l, u] : items) out.push_back(iv(l, u));
  return Ivhfe::canonical(out);
}

/// Interval multisets equal within `tol`, order ignored.
inline bool same_multiset(const Ivhfe& a, const Ivhfe& b, double tol = 1e-9) { return strict_equal(a, b, tol); }

/// Cells of `actual` and `expected` agree as interval multisets for every
/// parameter/object of `expected`, and the parameter sets match. Returns a
/// description of the first mismatch, or an empty string.
inline std::string compare_tables(const SoftSet& actual, const SoftSet& expected, double tol = 1e-9,
                                  const std::vector<std::pair<std::string, std::string>>& dedup_cells = {}) {
  if (actual.parameter_count() != expected.parameter_count()) return "parameter count differs";
  for (const auto& p : expected.parameters()) {
    if (!actual.has_parameter(p)) return "missing parameter " + p;
    for (const auto& o : expected.universe()) {
      const bool dedup = std::find(dedup_cells.begin(), dedup_cells.end(), std::pair{p, o}) != dedup_cells.end();
      const Ivhfe& a = actual.at(p, o);
      const Ivhfe& e = expected.at(p, o);
      const bool ok = dedup ? equivalent(a, e, tol) : strict_equal(a, e, tol);
      if (!ok) return p + "/" + o + ": got " + to_string(a) + ", expected " + to_string(e);
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Exact oracle on rational endpoints, independent of the floating-point
// kernels.

using Q = boost::rational<long long>;

struct QInterval {
  Q lower;
  Q upper;
};

inline Q q_abs(Q v) { return v < Q(0) ? -v : v; }
inline Q q_max(Q a, Q b) { return a < b ? b : a; }
inline Q q_min(Q a, Q b) { return a < b ? a : b; }

inline QInterval q_join(QInterval a, QInterval b) { return {q_max(a.lower, b.lower), q_max(a.upper, b.upper)}; }
inline QInterval q_meet(QInterval a, QInterval b) { return {q_min(a.lower, b.lower), q_min(a.upper, b.upper)}; }
inline QInterval q_complement(QInterval a) { return {1 - a.upper, 1 - a.lower}; }
inline QInterval q_ring_sum(QInterval a, QInterval b) {
  return {a.lower + b.lower - a.lower * b.lower, a.upper + b.upper - a.upper * b.upper};
}
inline QInterval q_ring_product(QInterval a, QInterval b) { return {a.lower * b.lower, a.upper * b.upper}; }

/// Possibility degree from the definition, with the point-interval rule.
inline Q q_possibility(QInterval a, QInterval b) {
  const Q span = (a.upper - a.lower) + (b.upper - b.lower);
  if (span == Q(0)) return a.lower > b.lower ? Q(1) : (a.lower < b.lower ? Q(0) : Q(1, 2));
  return q_max(1 - q_max((b.upper - a.lower) / span, Q(0)), Q(0));
}

/// Endpoint kernel of O1..O4 (index 1..4).
inline Q q_operator_endpoint(int k, Q x, Q y) {
  const Q d = q_abs(x - y);
  switch (k) {
    case 1: return d / (1 + d);
    case 2: return d / (1 + 2 * d);
    case 3: return d / 2;
    default: return ((x + y) / (2 * (x * y + 1))) / 2;
  }
}

inline double to_double(Q v) { return boost::rational_cast<double>(v); }

/// Rational grid points 0, 1/n, ..., 1.
inline std::vector<Q> q_grid(long long n) {
  std::vector<Q> out;
  for (long long i = 0; i <= n; ++i) out.emplace_back(i, n);
  return out;
}

inline std::vector<QInterval> q_grid_intervals(long long n) {
  const auto g = q_grid(n);
  std::vector<QInterval> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i; j < g.size(); ++j) out.push_back({g[i], g[j]});
  }
  return out;
}

inline UnitInterval to_unit(QInterval a) { return UnitInterval::make(to_double(a.lower), to_double(a.upper)); }

}  // namespace ivhf::testing
