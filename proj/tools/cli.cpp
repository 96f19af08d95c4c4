#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ivhf/document.hpp"
#include "ivhf/laws.hpp"

namespace ivhf::cli {

namespace {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SoftSet load(const std::string& path, std::ostream& err) {
  auto parsed = parse_document(read_file(path));
  for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << "\n";
  return std::move(parsed.soft_set);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << text;
  if (!file) throw IoError("failed writing '" + path + "'");
}

std::string interval_text(const RealInterval& a) {
  return "[" + format_number(a.lower) + ", " + format_number(a.upper) + "]";
}

std::string json_string(const std::string& s) {
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string score_document(const SoftSet& f) {
  std::string out = "{\n  \"scores\": {\n";
  for (std::size_t p = 0; p < f.parameter_count(); ++p) {
    out += "    " + json_string(f.parameters()[p]) + ": {";
    for (std::size_t o = 0; o < f.object_count(); ++o) {
      out += (o ? ", " : "") + json_string(f.universe()[o]) + ": " + interval_text(score(f.cell(p, o)));
    }
    out += p + 1 < f.parameter_count() ? "},\n" : "}\n";
  }
  return out + "  }\n}\n";
}

struct Ranked {
  std::string object;
  RealInterval mean;
};

/// Objects ordered best-first by the mean of their score intervals; equal
/// means share a position.
std::string rank_document(const SoftSet& f) {
  std::vector<Ranked> rows;
  for (std::size_t o = 0; o < f.object_count(); ++o) {
    RealInterval sum;
    for (std::size_t p = 0; p < f.parameter_count(); ++p) sum = interval_add(sum, score(f.cell(p, o)));
    rows.push_back({f.universe()[o], interval_scale(1.0 / static_cast<double>(f.parameter_count()), sum)});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Ranked& a, const Ranked& b) { return rank_less(b.mean, a.mean); });

  std::string out = "{\n  \"ranking\": [\n";
  std::size_t position = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool tied = i > 0 && rank_compare(rows[i - 1].mean, rows[i].mean).verdict == Verdict::equal;
    if (i > 0 && !tied) position = i + 1;
    out += "    {\"position\": " + std::to_string(position) + ", \"object\": " + json_string(rows[i].object) +
           ", \"score\": " + interval_text(rows[i].mean) + ", \"tied\": " +
           ((tied || (i + 1 < rows.size() && rank_compare(rows[i].mean, rows[i + 1].mean).verdict == Verdict::equal))
                ? "true"
                : "false") +
           "}" + (i + 1 < rows.size() ? ",\n" : "\n");
  }
  return out + "  ]\n}\n";
}

const std::map<std::string, CombineMode> kModes{{"aligned", CombineMode::aligned}, {"pairwise", CombineMode::pairwise}};
const std::map<std::string, AlignmentPolicy> kPolicies{{"optimistic", AlignmentPolicy::optimistic},
                                                       {"pessimistic", AlignmentPolicy::pessimistic}};
const std::map<std::string, OperatorKind> kKinds{
    {"o1", OperatorKind::O1}, {"o2", OperatorKind::O2}, {"o3", OperatorKind::O3}, {"o4", OperatorKind::O4}};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Algebra of interval-valued hesitant fuzzy soft sets", "ivhf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::vector<std::string> inputs;
  std::string output;
  CombineOptions combine_options;
  std::string kind_name;
  std::function<int()> action;

  const auto add_inputs = [&](CLI::App* cmd, std::size_t count) {
    cmd->add_option("inputs", inputs, "Soft-set documents (JSON)")->required()->expected(static_cast<int>(count));
  };
  const auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "Output file (default: stdout)"); };
  const auto add_combine_flags = [&](CLI::App* cmd) {
    cmd->add_option("--mode", combine_options.mode, "Element combination: aligned (default) or pairwise")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
    cmd->add_option("--align", combine_options.policy, "Padding of shorter elements: optimistic (default) or pessimistic")
        ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
  };
  const auto write_soft = [&](const SoftSet& s) {
    emit(serialize_document(s), output, out);
    return kExitOk;
  };

  auto* cmd_union = app.add_subcommand("union", "Union of two soft sets");
  add_inputs(cmd_union, 2);
  add_combine_flags(cmd_union);
  add_output(cmd_union);
  cmd_union->callback([&] {
    action = [&] { return write_soft(soft_union(load(inputs[0], err), load(inputs[1], err), combine_options)); };
  });

  auto* cmd_intersect = app.add_subcommand("intersect", "Intersection of two soft sets (parameters must overlap)");
  add_inputs(cmd_intersect, 2);
  add_combine_flags(cmd_intersect);
  add_output(cmd_intersect);
  cmd_intersect->callback([&] {
    action = [&] { return write_soft(soft_intersection(load(inputs[0], err), load(inputs[1], err), combine_options)); };
  });

  auto* cmd_complement = app.add_subcommand("complement", "Complement of a soft set");
  add_inputs(cmd_complement, 1);
  add_output(cmd_complement);
  cmd_complement->callback([&] { action = [&] { return write_soft(soft_complement(load(inputs[0], err))); }; });

  auto* cmd_ringsum = app.add_subcommand("ringsum", "Ring sum of two soft sets with equal parameter sets");
  add_inputs(cmd_ringsum, 2);
  add_output(cmd_ringsum);
  cmd_ringsum->callback([&] {
    action = [&] { return write_soft(soft_ring_sum(load(inputs[0], err), load(inputs[1], err))); };
  });

  auto* cmd_ringprod = app.add_subcommand("ringprod", "Ring product of two soft sets with equal parameter sets");
  add_inputs(cmd_ringprod, 2);
  add_output(cmd_ringprod);
  cmd_ringprod->callback([&] {
    action = [&] { return write_soft(soft_ring_product(load(inputs[0], err), load(inputs[1], err))); };
  });

  AlignmentPolicy subset_policy = AlignmentPolicy::optimistic;
  auto* cmd_subset = app.add_subcommand("subset", "Exit 0 if the first soft set is a subset of the second, 3 if not");
  add_inputs(cmd_subset, 2);
  cmd_subset->add_option("--align", subset_policy, "Padding of shorter elements: optimistic (default) or pessimistic")
      ->transform(CLI::CheckedTransformer(kPolicies, CLI::ignore_case));
  cmd_subset->callback([&] {
    action = [&] {
      const bool result = is_subset(load(inputs[0], err), load(inputs[1], err), subset_policy);
      out << (result ? "true" : "false") << "\n";
      return result ? kExitOk : kExitNegative;
    };
  });

  auto* cmd_elem = app.add_subcommand("elem-op", "Apply O1-O4 cellwise on the shared parameters");
  cmd_elem->add_option("--kind", kind_name, "Operator: o1, o2, o3 or o4")
      ->required()
      ->check(CLI::IsMember(kKinds, CLI::ignore_case));
  add_inputs(cmd_elem, 2);
  add_output(cmd_elem);
  cmd_elem->callback([&] {
    action = [&] { const OperatorKind kind = kKinds.at(CLI::detail::to_lower(kind_name));
      return write_soft(soft_apply_operator(kind, load(inputs[0], err), load(inputs[1], err))); };
  });

  auto* cmd_score = app.add_subcommand("score", "Score interval of every cell");
  add_inputs(cmd_score, 1);
  add_output(cmd_score);
  cmd_score->callback([&] {
    action = [&] {
      emit(score_document(load(inputs[0], err)), output, out);
      return kExitOk;
    };
  });

  auto* cmd_rank = app.add_subcommand("rank", "Rank objects by the mean of their scores across parameters");
  add_inputs(cmd_rank, 1);
  add_output(cmd_rank);
  cmd_rank->callback([&] {
    action = [&] {
      emit(rank_document(load(inputs[0], err)), output, out);
      return kExitOk;
    };
  });

  const auto add_family = [&](const char* name, const char* help, bool is_union) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("inputs", inputs, "Soft-set documents (JSON)")->required();
    add_combine_flags(cmd);
    add_output(cmd);
    cmd->callback([&, is_union] {
      action = [&, is_union] {
        std::vector<SoftSet> members;
        for (const auto& path : inputs) members.push_back(load(path, err));
        return write_soft(is_union ? family_union(members, combine_options)
                                   : family_intersection(members, combine_options));
      };
    });
  };
  add_family("family-union", "Union of a family of soft sets", true);
  add_family("family-intersect", "Intersection of a family of soft sets", false);

  CheckConfig config;
  std::string report_path;
  std::vector<std::string> law_ids;
  auto* cmd_laws = app.add_subcommand("check-laws", "Check every registered law; statuses go to the report");
  cmd_laws->add_option("--grid-step", config.grid_step, "Endpoint grid step for exhaustive enumeration")
      ->capture_default_str();
  cmd_laws->add_option("--trials", config.random_trials, "Random trials per law")->capture_default_str();
  cmd_laws->add_option("--seed", config.seed, "Random seed")->capture_default_str();
  cmd_laws->add_option("--max-element-size", config.max_element_size, "Largest element size generated")
      ->capture_default_str();
  cmd_laws->add_option("--law", law_ids, "Check only these law ids (repeatable)");
  cmd_laws->add_option("--report", report_path, "Write the JSON report here (default: stdout)");
  cmd_laws->callback([&] {
    action = [&] {
      std::vector<LawReport> reports;
      if (law_ids.empty()) {
        reports = run_suite(config);
      } else {
        for (const auto& id : law_ids) reports.push_back(check_law(find_law(id), config));
      }
      const std::string json = report_to_json(reports);
      if (report_path.empty()) {
        out << json;
      } else {
        emit(json, report_path, out);
        for (const auto& r : reports) {
          out << r.law_id << " " << to_string(r.status) << " (" << to_string(r.equality_used) << ", "
              << to_string(r.enumeration) << ")\n";
        }
      }
      return kExitOk;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return e.kind() == ErrorKind::UnknownLaw || e.kind() == ErrorKind::InvalidConfig ? kExitUsage : kExitData;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace ivhf::cli
