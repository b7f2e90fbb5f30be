#include "omega3rb/report.hpp"

namespace omega3rb {

std::string tool_version() { return OMEGA3RB_VERSION; }

Json report_envelope(const std::string& command, Json config) {
  Json j;
  j["schema"] = kReportSchema;
  j["tool_version"] = tool_version();
  j["command"] = command;
  j["config"] = std::move(config);
  return j;
}

void put_counts(Json& out, Window window, std::uint64_t checked, std::uint64_t skipped, std::uint64_t failed) {
  out["window"] = to_json(window);
  out["counts"] = {{"checked", checked}, {"skipped", skipped}, {"failed", failed}};
  if (!out.contains("witnesses")) out["witnesses"] = Json::array();
  if (!out.contains("approximation_notes")) out["approximation_notes"] = Json::array();
}

Json to_json(const Window& w) { return Json::array({w.lo, w.hi}); }

Json to_json(const FamilyParams& p) {
  Json j = Json::object();
  for (const auto& [k, v] : p.ints) j[k] = v;
  for (const auto& [k, v] : p.scalars) j[k] = to_string(v);
  return j;
}

Json to_json(const ResidualReport& r) {
  Json j;
  j["operator"] = r.operator_label;
  j["k"] = r.k;
  j["weight"] = to_string(r.weight);
  j["passed"] = r.passed();
  Json w = Json::array();
  for (const auto& wit : r.witnesses)
    w.push_back({{"triple", {wit.triple.l, wit.triple.m, wit.triple.n}}, {"residual", to_string(wit.residual)}});
  j["witnesses"] = std::move(w);
  if (!r.uncovered.empty()) j["uncovered_indices"] = r.uncovered;
  j["approximation_notes"] = r.notes;
  put_counts(j, r.window, r.checked, r.skipped, r.failed);
  return j;
}

Json to_json(const CollapseReport& r) {
  Json j = to_json(r.residuals);
  j["passed"] = r.passed();
  j["reachable"] = r.reachable;
  j["nonzero_on_reachable"] = r.nonzero_on_reachable;
  return j;
}

Json to_json(const ConstraintReport& r) {
  Json j;
  j["name"] = r.name;
  j["passed"] = r.passed();
  Json v = Json::array();
  for (const auto& x : r.violations) {
    if (v.size() >= kMaxWitnesses) break;
    v.push_back({{"item", x.item}, {"args", x.args}, {"index", x.index}, {"value", to_string(x.value)}, {"what", x.what}});
  }
  j["witnesses"] = std::move(v);
  j["approximation_notes"] = r.notes;
  put_counts(j, r.window, r.checked, r.skipped, r.violations.size());
  return j;
}

Json to_json(const SupporterSets& s) {
  return {{"window", to_json(s.window)}, {"W1", s.W1}, {"W2", s.W2}, {"U1", s.U1}, {"U2", s.U2}};
}

Json to_json(const Explanation& e) {
  Json table = Json::array();
  for (const auto& v : e.solution.table) table.push_back(to_string(v));
  Json m = Json::array();
  for (const auto& x : e.matches) m.push_back({{"case", match_key(x.id, x.reading)}, {"params", to_json(x.params)}});
  return {{"table", std::move(table)}, {"inner", to_json(e.inner)}, {"matches", std::move(m)},
          {"unexplained", e.unexplained()}};
}

Json to_json(const CompletenessReport& r, bool include_solutions) {
  Json j;
  j["solutions"] = r.explanations.size();
  j["unexplained"] = r.unexplained_count;
  j["explained_per_case"] = r.explained_per_case;
  Json un = Json::array();
  for (const auto& e : r.explanations)
    if (e.unexplained()) un.push_back(to_json(e));
  j["unexplained_solutions"] = std::move(un);
  if (include_solutions) {
    Json all = Json::array();
    for (const auto& e : r.explanations) all.push_back(to_json(e));
    j["all_solutions"] = std::move(all);
  }
  j["search"] = {{"nodes", r.stats.nodes}, {"order", r.stats.order}};
  if (r.space.k != 0) {
    j["reachable"] = r.reachable;
    j["collapse_violations"] = r.collapse_violations;
  }
  j["approximation_notes"] = r.notes;
  put_counts(j, r.space.window, r.stats.instances, r.stats.skipped_instances, r.unexplained_count);
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = to_string(r.suite);
  j["passed"] = r.passed();
  Json checks = Json::array();
  Json witnesses = Json::array();
  Json notes = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed()},
                      {"counts", {{"checked", c.checked}, {"skipped", c.skipped}, {"failed", c.failed}}},
                      {"witnesses", c.witnesses}});
    for (const auto& w : c.witnesses) {
      if (witnesses.size() >= kMaxWitnesses) break;
      witnesses.push_back(c.name + ": " + w);
    }
    for (const auto& n : c.notes) notes.push_back(c.name + ": " + n);
  }
  j["checks"] = std::move(checks);
  j["witnesses"] = std::move(witnesses);
  j["approximation_notes"] = std::move(notes);
  put_counts(j, r.window, r.checked(), r.skipped(), r.failed());
  return j;
}

}  // namespace omega3rb
