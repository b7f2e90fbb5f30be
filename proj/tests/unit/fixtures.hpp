#pragma once

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "omega3rb/catalog.hpp"

namespace omega3rb::testing {

inline nlohmann::json load_fixture(const std::string& name) {
  const std::string path = std::string(OMEGA3RB_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  return nlohmann::json::parse(in);
}

inline Reading reading_of(const std::string& s) { return s == "amended" ? Reading::Amended : Reading::Literal; }

}  // namespace omega3rb::testing
