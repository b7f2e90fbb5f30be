#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "omega3rb/scalar.hpp"
#include "omega3rb/window.hpp"

namespace omega3rb {

// ---------------------------------------------------------------------------
// Case identifiers

enum class CaseId : int {
  FIN_1, FIN_2, FIN_3, FIN_4,
  RM0_1, RM0_2, RM0_3, RM0_4, RM0_5, RM0_6, RM0_7,
  RM1_1, RM1_2, RM1_3, RM1_4, RM1_5, RM1_6, RM1_7,
  R01_1, R01_2,
  F0A_1, F0A_2,
  F0A1_1, F0A1_2, F0A1_3, F0A1_4,
  F0A3_A1, F0A3_A2, F0A3_A3, F0A3_A4, F0A3_A5, F0A3_A6, F0A3_A7,
  F0A3_B1, F0A3_B2, F0A3_B3, F0A3_B4, F0A3_B5, F0A3_B6, F0A3_B7,
};

inline constexpr std::size_t kCaseCount = 40;

const std::array<CaseId, kCaseCount>& all_cases();
std::string_view to_string(CaseId id);
/// Accepts the printed form, e.g. "F0A3-B5". Throws ParseError.
CaseId parse_case_id(std::string_view text);

/// Transcribed text, or the minimally edited variant kept next to a literal
/// reading that fails the sufficiency sweep.
enum class Reading { Literal, Amended };
std::string_view to_string(Reading r);

/// Which classification a case belongs to.
enum class CaseGroup { Finite, RisingSupport, FallingSupport, TwoSided, ABranch, ZeroBranchFinite, ZeroBranchInfinite };

/// How the classifying statement is phrased. Necessary-only statements list
/// candidate shapes without asserting each one is an operator.
enum class Statement { IfAndOnlyIf, NecessaryOnly };

/// Value of (f(0), f(1)) imposed by the branch a case lives in.
enum class BranchHypothesis { None, ANonzero, ZeroMinusOne };

struct CaseInfo {
  CaseId id;
  CaseGroup group;
  Statement statement;
  BranchHypothesis branch;
  std::vector<std::string> int_params;
  std::vector<std::string> scalar_params;
  std::string constraints;  // printed side conditions, human readable
  bool has_amended;
};

const CaseInfo& case_info(CaseId id);
/// All 40 cases in declaration order.
const std::vector<CaseInfo>& enumerate_cases();

// ---------------------------------------------------------------------------
// Parameters

class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FamilyParams {
  std::map<std::string, Index> ints;
  std::map<std::string, Scalar> scalars;

  Index int_at(const std::string& name) const;
  Scalar scalar_at(const std::string& name) const;

  friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// "m0=1,a=1/2": integers first, then scalars, each in key order.
std::string to_string(const FamilyParams& p);

/// Checks names and every printed inequality of the case; returns a message
/// naming the first violated condition, or nullopt.
std::optional<std::string> param_violation(CaseId id, const FamilyParams& p);

/// Throws ValidationError with the message of param_violation.
void validate_params(CaseId id, const FamilyParams& p);

// ---------------------------------------------------------------------------
// Coefficient maps

class UncoveredIndex : public std::out_of_range {
 public:
  explicit UncoveredIndex(Index i);
  Index index() const noexcept { return index_; }

 private:
  Index index_;
};

/// A coefficient map f: Z -> F. Family and custom maps are total; a table
/// is defined on its window only.
class CoeffSpec {
 public:
  enum class Kind { Family, Table, Custom };
  using Fn = std::function<Scalar(Index)>;

  static CoeffSpec constant(const Scalar& c);
  /// Total map given by a function; used for rescaled and hand-built maps.
  static CoeffSpec custom(Fn fn, std::string label);
  /// Table on w. Indices of w missing from `values` read as zero.
  static CoeffSpec table(Window w, const std::map<Index, Scalar>& values);
  static CoeffSpec table(Window w, std::vector<Scalar> values);

  Kind kind() const noexcept;
  const std::string& label() const noexcept;
  /// Window of a table; nullopt for total maps.
  std::optional<Window> domain() const noexcept;
  bool covers(Index i) const noexcept;

  /// Throws UncoveredIndex outside a table's window.
  Scalar operator()(Index i) const;
  std::optional<Scalar> try_eval(Index i) const;

  std::optional<CaseId> case_id() const noexcept;
  std::optional<Reading> reading() const noexcept;
  const FamilyParams* params() const noexcept;

 private:
  struct Impl;
  explicit CoeffSpec(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;
  friend CoeffSpec build_family(CaseId, const FamilyParams&, Reading);
};

/// Validates p and returns the total map described by the case text.
/// Throws ValidationError, or std::invalid_argument when an amended reading
/// is requested for a case without one.
CoeffSpec build_family(CaseId id, const FamilyParams& p, Reading reading = Reading::Literal);

inline Scalar eval(const CoeffSpec& f, Index m) { return f(m); }

/// Table of f over w. Throws UncoveredIndex when f does not cover w.
CoeffSpec restrict(const CoeffSpec& f, Window w);

/// Values of f over w in index order.
std::vector<Scalar> values_on(const CoeffSpec& f, Window w);

}  // namespace omega3rb
