#include "omega3rb/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "omega3rb/algebra.hpp"
#include "omega3rb/params.hpp"
#include "omega3rb/report.hpp"

namespace omega3rb {

namespace {

/// Everything a subcommand needs, as typed on the command line.
struct RunConfig {
  std::string case_name;
  std::string params;
  std::string params_file;
  std::string reading = "literal";
  Index radius = 12;
  Index k = 0;
  std::string weight = "1";
  std::string values = "0,-1";
  Index margin = 2;
  bool strict = false;
  bool all_solutions = false;
  std::uint64_t budget = kDefaultBudget;
  std::string suite;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
  std::string output;
  std::vector<std::string> bracket_args;
  bool catalog_json = false;
};

/// A family picked by --case/--params or --params-file.
struct FamilyChoice {
  CaseId id;
  FamilyParams params;
  Reading reading;
  CoeffSpec f;
};

Reading parse_reading(const std::string& s) {
  if (s == "literal") return Reading::Literal;
  if (s == "amended") return Reading::Amended;
  throw ParseError("reading must be 'literal' or 'amended', got '" + s + "'");
}

std::optional<FamilyChoice> choose_family(const RunConfig& c) {
  if (!c.params_file.empty() && (!c.case_name.empty() || !c.params.empty()))
    throw ParseError("--params-file cannot be combined with --case or --params");
  ParamDocument doc{};
  if (!c.params_file.empty()) {
    doc = load_param_document(c.params_file);
  } else if (!c.case_name.empty()) {
    doc.id = parse_case_id(c.case_name);
    doc.params = parse_params(doc.id, c.params);
  } else {
    if (!c.params.empty()) throw ParseError("--params needs --case");
    return std::nullopt;
  }
  const Reading r = parse_reading(c.reading);
  if (r == Reading::Amended && !case_info(doc.id).has_amended)
    throw ParseError(std::string(to_string(doc.id)) + " has no amended reading");
  return FamilyChoice{doc.id, doc.params, r, build_family(doc.id, doc.params, r)};
}

std::vector<Scalar> parse_values(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_scalar(item));
  if (out.empty()) throw ParseError("--values needs at least one value");
  return out;
}

Json family_config(const FamilyChoice& fc) {
  return {{"case", to_string(fc.id)}, {"reading", to_string(fc.reading)}, {"params", to_json(fc.params)}};
}

void emit(const Json& j, const RunConfig& c, std::ostream& out) {
  if (c.output.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream file(c.output);
  if (!file) throw std::runtime_error("cannot write " + c.output);
  file << j.dump(2) << "\n";
}

int cmd_bracket(const RunConfig& c, std::ostream& out) {
  const Index l = parse_index(c.bracket_args.at(0));
  const Index m = parse_index(c.bracket_args.at(1));
  const Index n = parse_index(c.bracket_args.at(2));
  out << to_string(bracket_generators(l, m, n)) << "\n";
  return kExitPass;
}

int cmd_check(const RunConfig& c, std::ostream& out) {
  auto fc = choose_family(c);
  if (!fc) throw ParseError("check needs --case or --params-file");
  const Weight w{parse_scalar(c.weight)};
  const Window window = Window::symmetric(c.radius);
  const unsigned workers = resolve_workers(c.workers);
  Json config = family_config(*fc);
  config["window"] = c.radius;
  config["k"] = c.k;
  config["weight"] = to_string(w.lambda);
  config["workers"] = workers;

  const HomOp R{c.k, fc->f};
  Json j = report_envelope("check", std::move(config));
  bool passed;
  if (c.k != 0 && w.lambda == 1) {
    const CollapseReport rep = check_k_collapse(R, window, workers);
    j.update(to_json(rep));
    passed = rep.passed();
  } else {
    const ResidualReport rep = sweep_residuals(R, w, window, workers);
    j.update(to_json(rep));
    passed = rep.passed();
  }
  emit(j, c, out);
  return passed ? kExitPass : kExitFailure;
}

int cmd_identities(const RunConfig& c, std::ostream& out) {
  const Suite suite = parse_suite(c.suite);
  SuiteConfig sc;
  sc.window = Window::symmetric(c.radius);
  sc.trials = c.trials;
  sc.seed = c.seed;
  Json config = {{"suite", to_string(suite)}, {"window", c.radius}};
  if (suite == Suite::Fundamental) {
    config["trials"] = c.trials;
    config["seed"] = c.seed;
  }
  if (auto fc = choose_family(c)) {
    sc.family = fc->f;
    if (fc->params.ints.count("m0")) sc.m0 = fc->params.int_at("m0");
    config["family"] = family_config(*fc);
  } else if (suite == Suite::DerivedABranch || suite == Suite::Derived01Branch) {
    throw ParseError(std::string(to_string(suite)) + " needs --case or --params-file");
  }
  const SuiteReport rep = run_suite(suite, sc);
  Json j = report_envelope("identities", std::move(config));
  j.update(to_json(rep));
  emit(j, c, out);
  return rep.passed() ? kExitPass : kExitFailure;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  SearchSpace s;
  s.window = Window::symmetric(c.radius);
  s.values = parse_values(c.values);
  s.k = c.k;
  s.weight = parse_scalar(c.weight);
  s.budget = c.budget;
  const unsigned workers = resolve_workers(c.workers);
  Json values = Json::array();
  for (const auto& v : s.values) values.push_back(to_string(v));
  Json config = {{"window", c.radius}, {"values", values}, {"k", c.k}, {"weight", to_string(s.weight)},
                 {"margin", c.margin}, {"strict", c.strict}, {"budget", c.budget}, {"workers", workers}};
  const CompletenessReport rep = completeness_report(s, c.margin, workers);
  Json j = report_envelope("search", std::move(config));
  j.update(to_json(rep, c.all_solutions));
  emit(j, c, out);
  const bool clean = rep.unexplained_count == 0 && rep.collapse_violations == 0;
  return (c.strict && !clean) ? kExitFailure : kExitPass;
}

std::string_view group_name(CaseGroup g) {
  switch (g) {
    case CaseGroup::Finite: return "finite";
    case CaseGroup::RisingSupport: return "rising";
    case CaseGroup::FallingSupport: return "falling";
    case CaseGroup::TwoSided: return "two-sided";
    case CaseGroup::ABranch: return "a-branch";
    case CaseGroup::ZeroBranchFinite: return "zero-branch";
    case CaseGroup::ZeroBranchInfinite: return "zero-branch-inf";
  }
  return "?";
}

std::string join(const std::vector<std::string>& xs) {
  std::string s;
  for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
  return s.empty() ? "-" : s;
}

int cmd_catalog(const RunConfig& c, std::ostream& out) {
  const auto& cases = enumerate_cases();
  if (c.catalog_json) {
    Json rows = Json::array();
    for (const CaseInfo& i : cases)
      rows.push_back({{"case", to_string(i.id)},
                      {"group", group_name(i.group)},
                      {"statement", i.statement == Statement::IfAndOnlyIf ? "iff" : "necessary"},
                      {"int_params", i.int_params},
                      {"scalar_params", i.scalar_params},
                      {"constraints", i.constraints},
                      {"amended", i.has_amended}});
    Json j = report_envelope("catalog", Json::object());
    j["cases"] = std::move(rows);
    emit(j, c, out);
    return kExitPass;
  }
  std::ostringstream t;
  t << std::left << std::setw(9) << "case" << std::setw(17) << "group" << std::setw(10) << "statement"
    << std::setw(16) << "int params" << std::setw(14) << "scalars" << "constraints\n";
  for (const CaseInfo& i : cases) {
    std::string id(to_string(i.id));
    if (i.has_amended) id += "*";
    t << std::setw(9) << id << std::setw(17) << group_name(i.group) << std::setw(10)
      << (i.statement == Statement::IfAndOnlyIf ? "iff" : "necessary") << std::setw(16) << join(i.int_params)
      << std::setw(14) << join(i.scalar_params) << (i.constraints.empty() ? "-" : i.constraints) << "\n";
  }
  t << "* has an amended reading\n";
  if (c.output.empty()) {
    out << t.str();
  } else {
    std::ofstream(c.output) << t.str();
  }
  return kExitPass;
}

unsigned default_workers() {
  const char* env = std::getenv("OMEGA3RB_WORKERS");
  if (!env || !*env) return 0;
  const Index n = parse_index(env);
  if (n < 0) throw ParseError("OMEGA3RB_WORKERS must be >= 0");
  return static_cast<unsigned>(n);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of homogeneous Rota-Baxter operators on the 3-Lie algebra A_omega", "omega3rb"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);
  RunConfig c;
  try {
    c.workers = default_workers();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--case", c.case_name, "case id, e.g. F0A3-A2");
    sub->add_option("--params", c.params, "parameters, e.g. m0=1,c=-1,d=2");
    sub->add_option("--params-file", c.params_file, "key = value parameter document with a 'case' key");
    sub->add_option("--reading", c.reading, "literal or amended")->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output,-o", c.output, "write the report here"); };
  auto add_workers = [&](CLI::App* sub) {
    sub->add_option("--workers", c.workers, "threads; 0 = all cores (default from OMEGA3RB_WORKERS)");
  };

  auto* bracket = app.add_subcommand("bracket", "print [L_l, L_m, L_n]");
  bracket->add_option("indices", c.bracket_args, "l m n")->expected(3)->required()->allow_extra_args(false);

  auto* check = app.add_subcommand("check", "residual sweep of one family on [-N, N]^3");
  add_family(check);
  check->add_option("--window", c.radius, "window radius N")->capture_default_str();
  check->add_option("--k", c.k, "operator order k")->capture_default_str();
  check->add_option("--weight", c.weight, "weight, integer or p/q")->capture_default_str();
  add_workers(check);
  add_output(check);

  auto* identities = app.add_subcommand("identities", "run an invariant suite");
  identities->add_option("--suite", c.suite, "fundamental, derived-a-branch, derived-01-branch or det-criterion")
      ->required();
  add_family(identities);
  identities->add_option("--window", c.radius, "window radius N")->capture_default_str();
  identities->add_option("--trials", c.trials, "random trials (fundamental)")->capture_default_str();
  identities->add_option("--seed", c.seed, "seed (fundamental)")->capture_default_str();
  add_output(identities);

  auto* search = app.add_subcommand("search", "enumerate coefficient tables and explain them by the catalog");
  search->add_option("--window", c.radius, "window radius N")->required();
  search->add_option("--values", c.values, "comma separated candidate values")->capture_default_str();
  search->add_option("--k", c.k, "operator order k")->capture_default_str();
  search->add_option("--weight", c.weight, "weight, integer or p/q")->capture_default_str();
  search->add_option("--margin", c.margin, "inner margin for explanation")->capture_default_str();
  search->add_flag("--strict", c.strict, "exit 1 when a solution is unexplained or breaks the k != 0 collapse");
  search->add_flag("--all-solutions", c.all_solutions, "list every solution in the report");
  search->add_option("--budget", c.budget, "maximum enumeration size")->capture_default_str();
  add_workers(search);
  add_output(search);

  auto* catalog = app.add_subcommand("catalog", "list the 40 cases");
  catalog->add_subcommand("list", "list the 40 cases (default)");
  catalog->add_flag("--json", c.catalog_json, "JSON instead of a table");
  add_output(catalog);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (dynamic_cast<const CLI::CallForVersion*>(&e) ? tool_version() + "\n" : app.help());
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*bracket) return cmd_bracket(c, out);
    if (*check) return cmd_check(c, out);
    if (*identities) return cmd_identities(c, out);
    if (*search) return cmd_search(c, out);
    if (*catalog) return cmd_catalog(c, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    // ParseError, ValidationError, InvalidWeight and PreconditionError
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace omega3rb
