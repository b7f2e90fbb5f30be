#pragma once

#include <string>
#include <string_view>

#include "omega3rb/catalog.hpp"

namespace omega3rb {

/// Parses "a=1,m0=1" against the case's declared parameter names. Integer
/// parameters must be integers; scalar parameters accept "p" or "p/q".
FamilyParams parse_params(CaseId id, std::string_view text);

/// A parameter document: one "key = value" per line, '#' starts a comment.
/// The key "case" names the case id; every other key is a parameter.
struct ParamDocument {
  CaseId id;
  FamilyParams params;
};

ParamDocument parse_param_document(std::string_view text);
ParamDocument load_param_document(const std::string& path);

}  // namespace omega3rb
