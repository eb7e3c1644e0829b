#include "favorable/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "favorable/assignment.hpp"
#include "favorable/document.hpp"
#include "favorable/extremal.hpp"
#include "favorable/hasse.hpp"
#include "favorable/oracle.hpp"
#include "favorable/order.hpp"
#include "favorable/social.hpp"

namespace favorable::cli {

using nlohmann::json;

namespace {

constexpr std::array<const char*, 9> kSubcommands = {
    "frontier", "compare", "classify", "descend", "assign",
    "social",   "continuum", "census", "hasse"};

/// Reading or writing a file failed.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A flag combination the chosen command cannot honor.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  json data;
  std::string text;
  std::optional<std::string> dot;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

ProfileDocument load(const std::string& path) {
  return parse_document(read_file(path));
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) out += sep;
    out += parts[k];
  }
  return out;
}

std::string int_list(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return "(" + join(parts, ",") + ")";
}

std::string witness_text(const std::optional<PsiWitness>& psi) {
  if (!psi) return "none";
  std::vector<std::string> parts;
  for (const auto& [x, y] : psi->mapping) {
    parts.push_back(std::to_string(x.value) + "->" + std::to_string(y.value));
  }
  return "{" + join(parts, ", ") + "}";
}

json optional_witness(const std::optional<PsiWitness>& psi,
                      const PreferenceProfile& labels_from) {
  return psi ? witness_to_json(*psi, labels_from) : json(nullptr);
}

// ---------------------------------------------------------------- commands

Output cmd_frontier(const std::string& path) {
  const PreferenceProfile p = document_profile(load(path));
  const ParetoFrontier pe = pareto_frontier(p);
  Output o;
  json members = json::array();
  std::vector<std::string> labels;
  for (AllocationId x : pe.members) {
    const RankVector r = rank_vector(p, x);
    members.push_back({{"id", x.value}, {"label", p.label(x)}, {"ranks", r.values}});
    labels.push_back(p.label(x));
    o.text += p.label(x) + " " + int_list(r.values) + "\n";
  }
  o.data = {{"allocations", labels}, {"frontier", members}};
  return o;
}

Output cmd_compare(const std::string& first, const std::string& second,
                   const std::string& variant, bool require_strict) {
  const PreferenceProfile p = document_profile(load(first));
  const PreferenceProfile q = document_profile(load(second));
  require_same_shape(p, q);
  Output o;
  if (variant == "def") {
    const OrderVerdict v = compare(p, q);
    o.data = {{"variant", "def"},
              {"relation", std::string(to_string(v.relation))},
              {"forward", optional_witness(v.forward, p)},
              {"backward", optional_witness(v.backward, p)}};
    o.text = std::string(to_string(v.relation)) + "\nforward: " +
             witness_text(v.forward) + "\nbackward: " +
             witness_text(v.backward) + "\n";
  } else if (variant == "tilde") {
    const auto psi = decide_tilde(p, q);
    o.data = {{"variant", "tilde"},
              {"holds", psi.has_value()},
              {"witness", optional_witness(psi, p)}};
    o.text = std::string(psi ? "true" : "false") + "\nwitness: " +
             witness_text(psi) + "\n";
  } else if (variant == "hat") {
    const bool holds = decide_hat(p, q);
    o.data = {{"variant", "hat"}, {"holds", holds}};
    o.text = std::string(holds ? "true" : "false") + "\n";
  } else {
    const bool holds = decide_wso(p, q, require_strict);
    o.data = {{"variant", "wso"},
              {"require_strict", require_strict},
              {"holds", holds}};
    o.text = std::string(holds ? "true" : "false") + "\n";
  }
  return o;
}

json classification_json(const ExtremalClassification& c) {
  return {{"max_condition", c.is_max_condition},
          {"min_condition", c.is_min_condition},
          {"witness_top", c.witness_top ? json(c.witness_top->value)
                                        : json(nullptr)}};
}

std::string classification_text(const ExtremalClassification& c) {
  return std::string("max_condition: ") +
         (c.is_max_condition ? "true" : "false") +
         "\nmin_condition: " + (c.is_min_condition ? "true" : "false") +
         "\nwitness_top: " +
         (c.witness_top ? std::to_string(c.witness_top->value) : "none") +
         "\n";
}

Output cmd_classify(const std::string& path) {
  const ProfileDocument doc = load(path);
  Output o;
  if (doc.ranks) {
    const auto c = classify_extremal(document_profile(doc));
    o.data = classification_json(c);
    o.text = classification_text(c);
  } else {
    const auto c = classify_private_extremal(document_instance(doc));
    o.data = classification_json(c);
    o.data["setting"] = "assignment";
    o.text = classification_text(c);
  }
  return o;
}

json step_json(const DescentStep& s) {
  return {{"rule", std::string(to_string(s.rule))},
          {"before", s.before.ranks()},
          {"after", s.after.ranks()},
          {"relation", std::string(to_string(s.verdict.relation))},
          {"flagged", s.flagged},
          {"used_demotion", s.used_demotion}};
}

std::string step_text(const DescentStep& s) {
  std::string line = std::string(to_string(s.rule)) + ": " +
                     matrix_string(s.before.ranks()) + " -> " +
                     matrix_string(s.after.ranks()) + " " +
                     std::string(to_string(s.verdict.relation));
  if (s.used_demotion) line += " (demotion)";
  if (s.flagged) line += " [flagged]";
  return line + "\n";
}

Output chain_output(const PreferenceProfile& start,
                    const std::vector<DescentStep>& steps, bool complete) {
  Output o;
  json list = json::array();
  for (const auto& s : steps) {
    list.push_back(step_json(s));
    o.text += step_text(s);
  }
  const RankMatrix last = steps.empty() ? start.ranks() : steps.back().after.ranks();
  o.data = {{"start", start.ranks()},
            {"steps", list},
            {"end", last},
            {"complete", complete}};
  o.text += std::string(complete ? "minimal: " : "incomplete: ") +
            matrix_string(last) + "\n";
  return o;
}

Output cmd_assign(const std::string& path,
                  const std::optional<std::string>& target_path) {
  const ProfileDocument doc = load(path);
  const AssignmentInstance inst = document_instance(doc);
  const auto space =
      enumerate_assignments(inst.num_individuals(), inst.num_widgets());
  const PreferenceProfile lifted = lift_to_profile(inst);
  const ParetoFrontier pe = pareto_frontier(lifted);
  const auto cls = classify_private_extremal(inst);

  Output o;
  json frontier = json::array();
  for (AllocationId x : pe.members) {
    const Assignment& a = space[x.value];
    const bool envy = check_envy_cycle_free(inst, a);
    const bool better = check_no_better_available(inst, a);
    const bool diagonal = diagonal_bound_check(inst, a);
    const auto ranks = private_rank_vector(inst, a);
    frontier.push_back({{"id", x.value},
                        {"assignment", assignment_label(a)},
                        {"private_ranks", ranks},
                        {"envy_cycle_free", envy},
                        {"no_better_available", better},
                        {"diagonal_bound", diagonal}});
    o.text += assignment_label(a) + " " + int_list(ranks) +
              (envy && better && diagonal ? " ok" : " VIOLATION") + "\n";
  }
  o.data = {{"space_size", space.size()},
            {"frontier", frontier},
            {"classification", classification_json(cls)}};
  o.text += classification_text(cls);

  if (target_path) {
    const AssignmentInstance target = document_instance(load(*target_path));
    json psi = json::array();
    o.text += "psi:\n";
    for (AllocationId x : pe.members) {
      const Assignment y = greedy_psi(inst, target, space[x.value]);
      psi.push_back({{"from", assignment_label(space[x.value])},
                     {"to", assignment_label(y)}});
      o.text += "  " + assignment_label(space[x.value]) + " -> " +
                assignment_label(y) + "\n";
    }
    o.data["psi"] = psi;
  }
  return o;
}

Output cmd_social(const std::string& path) {
  const LexProfile lp = document_lex_profile(load(path));
  const bool carry = check_carryover(lp);
  const IndividualismReport r = individualism_compare(lp);
  Output o;
  o.data = {{"carryover", carry},
            {"relation", std::string(to_string(r.verdict.relation))},
            {"condition_b", r.condition_b},
            {"condition_c", r.condition_c},
            {"no_social_gap", r.no_social_gap},
            {"violations", r.violations}};
  o.text = std::string("carryover: ") + (carry ? "true" : "false") +
           "\nindividualistic vs social: " +
           std::string(to_string(r.verdict.relation)) +
           "\ncondition_b: " + (r.condition_b ? "true" : "false") +
           "\ncondition_c: " + (r.condition_c ? "true" : "false") +
           "\nno_social_gap: " + (r.no_social_gap ? "true" : "false") +
           "\nviolations: " + std::to_string(r.violations.size()) + "\n";
  return o;
}

Output cmd_continuum(const std::string& top_spec, const std::string& bottom_spec,
                     std::size_t resolution) {
  const auto top = continuum::frontier_sample(parse_utility_spec(top_spec),
                                              resolution);
  const auto bottom = continuum::frontier_sample(
      parse_utility_spec(bottom_spec), resolution);
  const bool holds = continuum::rpe_dominance_check(top, bottom);
  auto pairs_text = [](const continuum::FrontierSample& s) {
    std::ostringstream os;
    for (const auto& e : s.rpe) os << "  (" << e[0] << ", " << e[1] << ")\n";
    return os.str();
  };
  Output o;
  o.data = {{"top", {{"spec", top_spec}, {"rpe", top.rpe}}},
            {"bottom", {{"spec", bottom_spec}, {"rpe", bottom.rpe}}},
            {"resolution", resolution},
            {"top_dominates", holds}};
  o.text = "top " + top_spec + ":\n" + pairs_text(top) + "bottom " +
           bottom_spec + ":\n" + pairs_text(bottom) +
           "top_dominates: " + (holds ? "true" : "false") + "\n";
  return o;
}

Output cmd_census(std::size_t n, std::size_t m, bool strict_only) {
  const auto report = oracle::extremal_census(n, m, strict_only);
  Output o;
  o.data = census_to_json(report);
  auto ids = [](const std::vector<std::size_t>& v) {
    std::vector<std::string> parts;
    for (auto x : v) parts.push_back(std::to_string(x));
    return "[" + join(parts, ",") + "]";
  };
  o.text = "profiles: " + std::to_string(report.total_profiles) +
           "\nmaximal: " + ids(report.maximal_ids) +
           "\nupper_bounds: " + ids(report.upper_bound_ids) +
           "\nminimal: " + ids(report.minimal_ids) +
           "\nviolations: " + std::to_string(report.violations.size()) + "\n";
  for (const auto& v : report.violations) {
    o.text += "  " + v.claim + " " + std::to_string(v.first) + " " +
              std::to_string(v.second) + "\n";
  }
  return o;
}

Output cmd_hasse(std::size_t n, std::size_t m, bool strict_only) {
  const auto profiles = oracle::enumerate_profiles(n, m, strict_only);
  if (profiles.size() > oracle::kMaxComparisons / profiles.size()) {
    throw Error(ErrorKind::SpaceTooLarge,
                std::to_string(profiles.size()) +
                    " profiles need too many comparisons");
  }
  const oracle::DominanceMatrix geq(profiles);
  const HasseDiagram d = hasse_diagram(geq);
  Output o;
  json classes = json::array();
  for (const auto& members : d.classes) {
    json ms = json::array();
    for (auto a : members) ms.push_back(profiles[a].ranks());
    classes.push_back({{"name", "C" + std::to_string(members.front())},
                       {"members", members},
                       {"profiles", ms}});
  }
  json edges = json::array();
  for (const auto& [from, to] : d.edges) {
    edges.push_back({"C" + std::to_string(d.classes[from].front()),
                     "C" + std::to_string(d.classes[to].front())});
  }
  o.data = {{"profiles", profiles.size()}, {"classes", classes}, {"edges", edges}};
  o.text = "profiles: " + std::to_string(profiles.size()) +
           "\nclasses: " + std::to_string(d.classes.size()) + "\n";
  for (const auto& [from, to] : d.edges) {
    o.text += "C" + std::to_string(d.classes[from].front()) + " -> C" +
              std::to_string(d.classes[to].front()) + "\n";
  }
  o.dot = to_dot(d, profiles);
  return o;
}

std::string render(const Output& o, const std::string& format) {
  if (format == "json") return o.data.dump(2) + "\n";
  if (format == "text") return o.text;
  if (!o.dot) throw UsageError("--format dot is only available for hasse");
  return *o.dot;
}

bool is_subcommand(const std::string& s) {
  return std::any_of(kSubcommands.begin(), kSubcommands.end(),
                     [&](const char* c) { return s == c; });
}

}  // namespace

continuum::ExchangeExample parse_utility_spec(const std::string& spec) {
  auto one = [](const std::string& part, std::size_t individual) {
    if (part == "own") return continuum::Utility::own_good(individual);
    if (part == "sum") return continuum::Utility::sum();
    const auto comma = part.find(',');
    if (comma == std::string::npos) {
      throw Error(ErrorKind::InvalidArgument,
                  "utility spec '" + part + "' is not own, sum or a,b");
    }
    try {
      std::size_t used1 = 0;
      std::size_t used2 = 0;
      const std::string a = part.substr(0, comma);
      const std::string b = part.substr(comma + 1);
      const double w1 = std::stod(a, &used1);
      const double w2 = std::stod(b, &used2);
      if (used1 != a.size() || used2 != b.size()) throw std::invalid_argument(part);
      return continuum::Utility::linear(w1, w2);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidArgument,
                  "utility spec '" + part + "' has non-numeric weights");
    }
  };
  const auto slash = spec.find('/');
  if (slash == std::string::npos) {
    return {{one(spec, 0), one(spec, 1)}};
  }
  return {{one(spec.substr(0, slash), 0), one(spec.substr(slash + 1), 1)}};
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  if (!args.empty() && !args.front().empty() && args.front()[0] != '-' &&
      !is_subcommand(args.front())) {
    err << "error: unknown subcommand '" << args.front() << "'\n";
    return kExitInput;
  }

  CLI::App app{"Pareto-favorability decisions over finite preference profiles",
               "favorable"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "text", "dot"}));
    sub->add_option("--out", out_path, "Write output to this file");
  };

  std::string file1;
  std::string file2;
  std::string variant = "def";
  bool require_strict = false;
  std::optional<std::size_t> max_steps;
  std::size_t max_n = 2;
  std::size_t max_m = 2;
  bool strict_only = false;
  std::size_t resolution = 5;
  std::string top_spec = "own";
  std::string bottom_spec = "sum";

  std::function<Output()> action;

  auto* frontier = app.add_subcommand("frontier", "Pareto frontier of a profile");
  frontier->add_option("profile", file1)->required();
  common(frontier);
  frontier->callback([&] { action = [&] { return cmd_frontier(file1); }; });

  auto* cmp = app.add_subcommand("compare", "Decide P against P'");
  cmp->add_option("p", file1)->required();
  cmp->add_option("p_prime", file2)->required();
  cmp->add_option("--variant", variant, "Order variant")
      ->check(CLI::IsMember({"def", "tilde", "hat", "wso"}));
  cmp->add_flag("--require-strict", require_strict,
                "wso: demand a strictly dominated pair");
  common(cmp);
  cmp->callback([&] {
    action = [&] { return cmd_compare(file1, file2, variant, require_strict); };
  });

  auto* classify = app.add_subcommand("classify", "Extremal-condition check");
  classify->add_option("profile", file1)->required();
  common(classify);
  classify->callback([&] { action = [&] { return cmd_classify(file1); }; });

  auto* descend = app.add_subcommand("descend", "Perturb toward a minimal profile");
  descend->add_option("profile", file1)->required();
  descend->add_option("--max-steps", max_steps,
                      "Step budget (default N*M*M)");
  common(descend);
  descend->callback([&] {
    action = [&]() -> Output {
      const PreferenceProfile p = document_profile(load(file1));
      const std::size_t budget =
          max_steps.value_or(p.num_individuals() * p.num_allocations() *
                             p.num_allocations());
      return chain_output(p, descend_to_minimal(p, budget), true);
    };
  });

  std::optional<std::string> target;
  auto* assign = app.add_subcommand("assign", "Widget-assignment report");
  assign->add_option("instance", file1)->required();
  assign->add_option("target", target, "Target instance for the greedy map");
  common(assign);
  assign->callback([&] { action = [&] { return cmd_assign(file1, target); }; });

  auto* social = app.add_subcommand("social", "Social-preference report");
  social->add_option("instance", file1)->required();
  common(social);
  social->callback([&] { action = [&] { return cmd_social(file1); }; });

  auto* cont = app.add_subcommand("continuum", "Two-good exchange frontiers");
  cont->add_option("--top", top_spec, "own | sum | a,b [/ second individual]");
  cont->add_option("--bottom", bottom_spec, "own | sum | a,b [/ second individual]");
  cont->add_option("--resolution", resolution, "Grid points per leg")
      ->check(CLI::PositiveNumber);
  common(cont);
  cont->callback([&] {
    action = [&] { return cmd_continuum(top_spec, bottom_spec, resolution); };
  });

  for (const char* name : {"census", "hasse"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "census" ? "Exhaustive extremal census"
                                            : "Hasse diagram of a census");
    sub->add_option("--max-n", max_n, "Individuals")->check(CLI::PositiveNumber);
    sub->add_option("--max-m", max_m, "Allocations")->check(CLI::PositiveNumber);
    sub->add_flag("--strict-only", strict_only, "Only strict profiles");
    common(sub);
  }
  app.get_subcommand("census")->callback([&] {
    action = [&] { return cmd_census(max_n, max_m, strict_only); };
  });
  app.get_subcommand("hasse")->callback([&] {
    action = [&] { return cmd_hasse(max_n, max_m, strict_only); };
  });

  std::vector<const char*> argv{"favorable"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    Output result;
    try {
      result = action();
    } catch (const StepBudgetExhausted& e) {
      const PreferenceProfile p = document_profile(load(file1));
      result = chain_output(p, e.partial_chain(), false);
      err << "error: " << e.what() << "\n";
      const std::string text = render(result, format);
      if (out_path.empty()) out << text;
      return kExitDomain;
    }
    const std::string text = render(result, format);
    if (out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(out_path, std::ios::binary);
      if (!file || !(file << text)) throw IoError("cannot write " + out_path);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const ParseError& e) {
    err << "error: parse: " << e.what() << "\n";
    return kExitInput;
  } catch (const IoError& e) {
    err << "error: io: " << e.what() << "\n";
    return kExitInput;
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << "\n";
    return kExitInput;
  }
}

}  // namespace favorable::cli
