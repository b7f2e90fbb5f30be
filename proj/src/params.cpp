#include "omega3rb/params.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace omega3rb {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void assign(CaseId id, FamilyParams& p, const std::string& key, const std::string& value) {
  const CaseInfo& info = case_info(id);
  auto has = [](const std::vector<std::string>& v, const std::string& k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };
  if (has(info.int_params, key)) {
    if (!p.ints.emplace(key, parse_index(value)).second)
      throw ValidationError("parameter '" + key + "' given twice");
  } else if (has(info.scalar_params, key)) {
    if (!p.scalars.emplace(key, parse_scalar(value)).second)
      throw ValidationError("parameter '" + key + "' given twice");
  } else {
    throw ValidationError(std::string(to_string(id)) + " has no parameter '" + key + "'");
  }
}

}  // namespace

FamilyParams parse_params(CaseId id, std::string_view text) {
  FamilyParams p;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("expected key=value, got '" + item + "'");
    assign(id, p, trim(item.substr(0, eq)), trim(item.substr(eq + 1)));
  }
  return p;
}

ParamDocument parse_param_document(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::optional<CaseId> id;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
    if (key == "case")
      id = parse_case_id(value);
    else
      entries.emplace_back(key, value);
  }
  if (!id) throw ParseError("parameter document has no 'case' entry");
  ParamDocument doc{*id, {}};
  for (const auto& [k, v] : entries) assign(*id, doc.params, k, v);
  return doc;
}

ParamDocument load_param_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open parameter document '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_param_document(ss.str());
}

}  // namespace omega3rb
