#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "omega3rb/catalog.hpp"

namespace omega3rb {

/// Invariant suites run by `omega3rb identities`.
enum class Suite { Fundamental, DerivedABranch, Derived01Branch, DetCriterion };

std::string_view to_string(Suite s);
/// Throws ParseError on an unknown name.
Suite parse_suite(std::string_view text);

struct SuiteConfig {
  Window window = Window::symmetric(8);
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  /// Coefficient map for the derived suites; m0 of the family when it has one.
  std::optional<CoeffSpec> family;
  std::optional<Index> m0;
};

/// One named family of identity instances inside a suite.
struct SuiteCheck {
  explicit SuiteCheck(std::string n) : name(std::move(n)) {}

  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> witnesses;   // first kMaxWitnesses failures, printed
  std::vector<std::string> notes;

  void fail(std::string what);
  bool passed() const noexcept { return failed == 0; }
};

struct SuiteReport {
  Suite suite;
  Window window;
  std::vector<SuiteCheck> checks;

  bool passed() const noexcept;
  std::uint64_t checked() const noexcept;
  std::uint64_t skipped() const noexcept;
  std::uint64_t failed() const noexcept;
};

/// Fundamental: `trials` seeded random generator quintuples with indices in
/// the window. DetCriterion: every triple of window^3. The derived suites
/// need config.family and throw PreconditionError when it is not in the
/// matching branch (f(0) = a != 0 with f(1) = -1-a, or f(0) = 0, f(1) = -1).
SuiteReport run_suite(Suite suite, const SuiteConfig& config);

/// Deterministic index stream for seeded suites: uniform on the window.
class IndexSampler {
 public:
  IndexSampler(std::uint64_t seed, Window w);
  Index next();

 private:
  std::uint64_t state_;
  Window w_;
};

}  // namespace omega3rb
