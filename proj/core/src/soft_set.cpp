#include "ivhf/soft_set.hpp"

#include <algorithm>
#include <unordered_set>

namespace ivhf {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  const auto duplicate = [what](const std::string& n) {
    return Error(ErrorKind::InvalidSoftSet, std::string("duplicate ") + what + " identifier '" + n + "'");
  };
  // Soft sets built by the law checker are tiny and numerous; avoid hashing.
  if (names.size() <= 16) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (names[i] == names[j]) throw duplicate(names[i]);
      }
    }
    return;
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw duplicate(n);
  }
}

std::optional<std::size_t> find_name(const std::vector<std::string>& names, std::string_view name) noexcept {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names.begin());
}

bool same_names(const Names& a, const Names& b) { return a == b || *a == *b; }

bool same_name_set(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  return std::all_of(a.begin(), a.end(), [&](const std::string& n) { return find_name(b, n).has_value(); });
}

/// For each object of `f`, its index in `g`; empty when the orders agree.
std::vector<std::size_t> object_map(const SoftSet& f, const SoftSet& g) {
  if (same_names(f.shared_universe(), g.shared_universe())) return {};
  if (f.object_count() != g.object_count()) {
    throw Error(ErrorKind::UniverseMismatch, "soft sets are defined over different universes");
  }
  std::vector<std::size_t> map;
  map.reserve(f.object_count());
  for (const auto& object : f.universe()) {
    const auto j = g.object_index(object);
    if (!j) throw Error(ErrorKind::UniverseMismatch, "object '" + object + "' is missing from the other soft set");
    map.push_back(*j);
  }
  return map;
}

const Ivhfe& cell_of(const SoftSet& g, std::size_t parameter, std::size_t object,
                     const std::vector<std::size_t>& map) {
  return g.cell(parameter, map.empty() ? object : map[object]);
}

/// Row indices in `g` of each parameter of `f`, or nullopt when absent.
std::vector<std::optional<std::size_t>> parameter_map(const SoftSet& f, const SoftSet& g) {
  std::vector<std::optional<std::size_t>> map;
  map.reserve(f.parameter_count());
  if (same_names(f.shared_parameters(), g.shared_parameters())) {
    for (std::size_t p = 0; p < f.parameter_count(); ++p) map.emplace_back(p);
    return map;
  }
  for (const auto& parameter : f.parameters()) map.push_back(g.parameter_index(parameter));
  return map;
}

template <typename CellOp>
SoftSet cellwise_shared(const SoftSet& f, const SoftSet& g, CellOp op, const char* what) {
  const auto objects = object_map(f, g);
  if (!same_names(f.shared_parameters(), g.shared_parameters()) &&
      !same_name_set(f.parameters(), g.parameters())) {
    throw Error(ErrorKind::ParameterMismatch, std::string(what) + " requires identical parameter sets");
  }
  const auto params = parameter_map(f, g);
  std::vector<Ivhfe> cells;
  cells.reserve(f.cells().size());
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      cells.push_back(op(f.cell(p, o), cell_of(g, *params[p], o, objects)));
    }
  }
  return SoftSet::make(f.shared_universe(), f.shared_parameters(), std::move(cells));
}

SoftSet constant_like(const Names& universe, const Names& parameters, const Ivhfe& value) {
  std::vector<Ivhfe> cells(universe->size() * parameters->size(), value);
  return SoftSet::make(universe, parameters, std::move(cells));
}

template <typename CellPredicate>
bool same_shape_and_cells(const SoftSet& f, const SoftSet& g, CellPredicate pred) {
  if (f.object_count() != g.object_count() || f.parameter_count() != g.parameter_count()) return false;
  if (!same_names(f.shared_parameters(), g.shared_parameters()) &&
      !same_name_set(f.parameters(), g.parameters())) {
    return false;
  }
  std::vector<std::size_t> objects;
  try {
    objects = object_map(f, g);
  } catch (const Error&) {
    return false;
  }
  const auto params = parameter_map(f, g);
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      if (!pred(f.cell(p, o), cell_of(g, *params[p], o, objects))) return false;
    }
  }
  return true;
}

}  // namespace

Names make_names(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

SoftSet SoftSet::make(Names universe, Names parameters, std::vector<Ivhfe> cells) {
  if (!universe || universe->empty()) throw Error(ErrorKind::EmptyUniverse, "the universe must not be empty");
  if (!parameters || parameters->empty()) {
    throw Error(ErrorKind::InvalidSoftSet, "a soft set needs at least one parameter");
  }
  require_unique(*universe, "object");
  require_unique(*parameters, "parameter");
  if (cells.size() != universe->size() * parameters->size()) {
    throw Error(ErrorKind::InvalidSoftSet, "cell count does not match parameters x objects");
  }
  return SoftSet(std::move(universe), std::move(parameters), std::move(cells));
}

SoftSet SoftSet::make(std::vector<std::string> universe, std::vector<std::string> parameters,
                      std::vector<Ivhfe> cells) {
  return make(make_names(std::move(universe)), make_names(std::move(parameters)), std::move(cells));
}

std::optional<std::size_t> SoftSet::parameter_index(std::string_view parameter) const noexcept {
  return find_name(*parameters_, parameter);
}

std::optional<std::size_t> SoftSet::object_index(std::string_view object) const noexcept {
  return find_name(*universe_, object);
}

const Ivhfe& SoftSet::at(std::string_view parameter, std::string_view object) const {
  const auto p = parameter_index(parameter);
  if (!p) throw Error(ErrorKind::InvalidSoftSet, "unknown parameter '" + std::string(parameter) + "'");
  const auto o = object_index(object);
  if (!o) throw Error(ErrorKind::InvalidSoftSet, "unknown object '" + std::string(object) + "'");
  return cell(*p, *o);
}

IvhfSet SoftSet::value(std::string_view parameter) const {
  const auto p = parameter_index(parameter);
  if (!p) throw Error(ErrorKind::InvalidSoftSet, "unknown parameter '" + std::string(parameter) + "'");
  IvhfSet out;
  for (std::size_t o = 0; o < object_count(); ++o) out.emplace(universe()[o], cell(*p, o));
  return out;
}

SoftSet empty_of(std::vector<std::string> parameters, std::vector<std::string> universe) {
  if (universe.empty()) throw Error(ErrorKind::EmptyUniverse, "the universe must not be empty");
  return constant_like(make_names(std::move(universe)), make_names(std::move(parameters)),
                       Ivhfe::empty_membership());
}

SoftSet full_of(std::vector<std::string> parameters, std::vector<std::string> universe) {
  if (universe.empty()) throw Error(ErrorKind::EmptyUniverse, "the universe must not be empty");
  return constant_like(make_names(std::move(universe)), make_names(std::move(parameters)),
                       Ivhfe::full_membership());
}

SoftSet empty_like(const SoftSet& like) {
  return constant_like(like.shared_universe(), like.shared_parameters(), Ivhfe::empty_membership());
}

SoftSet full_like(const SoftSet& like) {
  return constant_like(like.shared_universe(), like.shared_parameters(), Ivhfe::full_membership());
}

SoftSet soft_union(const SoftSet& f, const SoftSet& g, CombineOptions options) {
  const auto objects = object_map(f, g);
  const auto join = [&](const Ivhfe& a, const Ivhfe& b) {
    return combine(SetOp::union_op, a, b, options.mode, options.policy);
  };
  if (same_names(f.shared_parameters(), g.shared_parameters())) {
    std::vector<Ivhfe> cells;
    cells.reserve(f.cells().size());
    for (std::size_t p = 0; p < f.parameter_count(); ++p) {
      for (std::size_t o = 0; o < f.object_count(); ++o) cells.push_back(join(f.cell(p, o), cell_of(g, p, o, objects)));
    }
    return SoftSet::make(f.shared_universe(), f.shared_parameters(), std::move(cells));
  }

  std::vector<std::string> names = f.parameters();
  std::vector<std::size_t> extra;  // rows of g whose parameter is not in f
  for (std::size_t q = 0; q < g.parameter_count(); ++q) {
    if (!f.has_parameter(g.parameters()[q])) {
      names.push_back(g.parameters()[q]);
      extra.push_back(q);
    }
  }
  const auto in_g = parameter_map(f, g);
  std::vector<Ivhfe> cells;
  cells.reserve(names.size() * f.object_count());
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      if (in_g[p]) {
        cells.push_back(join(f.cell(p, o), cell_of(g, *in_g[p], o, objects)));
      } else {
        cells.push_back(f.cell(p, o));
      }
    }
  }
  for (const std::size_t q : extra) {
    for (std::size_t o = 0; o < f.object_count(); ++o) cells.push_back(cell_of(g, q, o, objects));
  }
  return SoftSet::make(f.shared_universe(), make_names(std::move(names)), std::move(cells));
}

SoftSet soft_intersection(const SoftSet& f, const SoftSet& g, CombineOptions options) {
  const auto objects = object_map(f, g);
  const auto meet = [&](const Ivhfe& a, const Ivhfe& b) {
    return combine(SetOp::intersection_op, a, b, options.mode, options.policy);
  };
  const bool shared = same_names(f.shared_parameters(), g.shared_parameters());
  const auto in_g = parameter_map(f, g);
  std::vector<std::string> names;
  std::vector<Ivhfe> cells;
  cells.reserve(f.cells().size());
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    if (!in_g[p]) continue;
    if (!shared) names.push_back(f.parameters()[p]);
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      cells.push_back(meet(f.cell(p, o), cell_of(g, *in_g[p], o, objects)));
    }
  }
  if (shared) return SoftSet::make(f.shared_universe(), f.shared_parameters(), std::move(cells));
  if (names.empty()) {
    throw Error(ErrorKind::EmptyParameterIntersection, "the soft sets share no parameters");
  }
  return SoftSet::make(f.shared_universe(), make_names(std::move(names)), std::move(cells));
}

SoftSet soft_complement(const SoftSet& f) {
  std::vector<Ivhfe> cells;
  cells.reserve(f.cells().size());
  for (const auto& c : f.cells()) cells.push_back(complement(c));
  return SoftSet::make(f.shared_universe(), f.shared_parameters(), std::move(cells));
}

bool is_subset(const SoftSet& f, const SoftSet& g, AlignmentPolicy policy, double tol) {
  const auto objects = object_map(f, g);
  const auto in_g = parameter_map(f, g);
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    if (!in_g[p]) return false;
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      const auto [a, b] = align(canonicalize(f.cell(p, o)), canonicalize(cell_of(g, *in_g[p], o, objects)), policy);
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].lower() > b[k].lower() + tol || a[k].upper() > b[k].upper() + tol) return false;
      }
    }
  }
  return true;
}

SoftSet soft_ring_sum(const SoftSet& f, const SoftSet& g) {
  return cellwise_shared(f, g, [](const Ivhfe& a, const Ivhfe& b) { return ring_sum(a, b); }, "ring sum");
}

SoftSet soft_ring_product(const SoftSet& f, const SoftSet& g) {
  return cellwise_shared(f, g, [](const Ivhfe& a, const Ivhfe& b) { return ring_product(a, b); },
                         "ring product");
}

SoftSet soft_apply_operator(OperatorKind kind, const SoftSet& f, const SoftSet& g) {
  const auto objects = object_map(f, g);
  const auto in_g = parameter_map(f, g);
  const bool shared = same_names(f.shared_parameters(), g.shared_parameters());
  std::vector<std::string> names;
  std::vector<Ivhfe> cells;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    if (!in_g[p]) continue;
    if (!shared) names.push_back(f.parameters()[p]);
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      cells.push_back(apply_operator(kind, f.cell(p, o), cell_of(g, *in_g[p], o, objects)));
    }
  }
  if (shared) return SoftSet::make(f.shared_universe(), f.shared_parameters(), std::move(cells));
  if (names.empty()) {
    throw Error(ErrorKind::EmptyParameterIntersection, "the soft sets share no parameters");
  }
  return SoftSet::make(f.shared_universe(), make_names(std::move(names)), std::move(cells));
}

SoftSet family_union(std::span<const SoftSet> members, CombineOptions options) {
  if (members.empty()) throw Error(ErrorKind::EmptyFamily, "family union of an empty family");
  SoftSet acc = members.front();
  for (const auto& m : members.subspan(1)) acc = soft_union(acc, m, options);
  return acc;
}

SoftSet family_intersection(std::span<const SoftSet> members, CombineOptions options) {
  if (members.empty()) throw Error(ErrorKind::EmptyFamily, "family intersection of an empty family");
  SoftSet acc = members.front();
  for (const auto& m : members.subspan(1)) acc = soft_intersection(acc, m, options);
  return acc;
}

bool strict_equal(const SoftSet& f, const SoftSet& g, double tol) {
  return same_shape_and_cells(f, g, [tol](const Ivhfe& a, const Ivhfe& b) { return strict_equal(a, b, tol); });
}

bool equivalent(const SoftSet& f, const SoftSet& g, double tol) {
  return same_shape_and_cells(f, g, [tol](const Ivhfe& a, const Ivhfe& b) { return equivalent(a, b, tol); });
}

std::string to_string(const SoftSet& f) {
  std::string out;
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    out += f.parameters()[p] + ":";
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      out += " " + f.universe()[o] + "=" + to_string(f.cell(p, o));
    }
    out += "\n";
  }
  return out;
}

}  // namespace ivhf
