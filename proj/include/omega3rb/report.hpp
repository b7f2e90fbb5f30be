#pragma once

#include <string>

#include <json.hpp>

#include "omega3rb/constraints.hpp"
#include "omega3rb/operator.hpp"
#include "omega3rb/search.hpp"
#include "omega3rb/suites.hpp"

namespace omega3rb {

inline constexpr const char* kReportSchema = "omega3rb/1";

std::string tool_version();

using Json = nlohmann::ordered_json;

/// Common head of every report: schema, tool_version, command, config.
Json report_envelope(const std::string& command, Json config);

/// Fills window, counts {checked, skipped, failed}, witnesses and
/// approximation_notes of `out`.
void put_counts(Json& out, Window window, std::uint64_t checked, std::uint64_t skipped, std::uint64_t failed);

Json to_json(const Window& w);
Json to_json(const FamilyParams& p);
Json to_json(const ResidualReport& r);
Json to_json(const CollapseReport& r);
Json to_json(const ConstraintReport& r);
Json to_json(const SupporterSets& s);
Json to_json(const Explanation& e);
/// Solutions are listed only when include_solutions is set.
Json to_json(const CompletenessReport& r, bool include_solutions);
Json to_json(const SuiteReport& r);

}  // namespace omega3rb
