#include "omega3rb/catalog.hpp"

#include <algorithm>
#include <sstream>

namespace omega3rb {

namespace {

bool is_even(Index m) { return m % 2 == 0; }
// For even m the half m/2, for odd m the n with m = 2n+1. Both divisions are exact.
Index half(Index m) { return is_even(m) ? m / 2 : (m - 1) / 2; }

// x = start + j*step for some j >= 0, step > 0.
bool in_progression(Index x, Index start, Index step) {
  return x >= start && (x - start) % step == 0;
}

bool divides(Index d, Index x) { return x % d == 0; }

const Scalar kZero(0);
const Scalar kMinusOne(-1);

struct CaseRow {
  CaseId id;
  const char* name;
  CaseGroup group;
  Statement statement;
  BranchHypothesis branch;
  std::vector<std::string> ints;
  std::vector<std::string> scalars;
  const char* constraints;
  bool amended;
};

const std::vector<CaseRow>& rows() {
  using G = CaseGroup;
  using S = Statement;
  using B = BranchHypothesis;
  static const std::vector<CaseRow> table = {
      {CaseId::FIN_1, "FIN-1", G::Finite, S::IfAndOnlyIf, B::None, {}, {}, "f = 0", false},
      {CaseId::FIN_2, "FIN-2", G::Finite, S::IfAndOnlyIf, B::None, {}, {}, "f = -1", false},
      {CaseId::FIN_3, "FIN-3", G::Finite, S::IfAndOnlyIf, B::None, {}, {"f0", "f1"}, "f0*(f1+1) = 0", false},
      {CaseId::FIN_4, "FIN-4", G::Finite, S::IfAndOnlyIf, B::None, {}, {"f0", "f1"}, "f1*(f0+1) = 0", false},
      {CaseId::RM0_1, "RM0-1", G::RisingSupport, S::NecessaryOnly, B::None, {"m0", "m1"}, {}, "m0 < m1", false},
      {CaseId::RM0_2, "RM0-2", G::RisingSupport, S::NecessaryOnly, B::None, {}, {}, "none", false},
      {CaseId::RM0_3, "RM0-3", G::RisingSupport, S::NecessaryOnly, B::None, {"m0"}, {}, "m0 > 0", false},
      {CaseId::RM0_4, "RM0-4", G::RisingSupport, S::NecessaryOnly, B::None, {"m0"}, {}, "m0 < 0", false},
      {CaseId::RM0_5, "RM0-5", G::RisingSupport, S::NecessaryOnly, B::None, {"m0", "l0"}, {}, "l0 > -m0", false},
      {CaseId::RM0_6, "RM0-6", G::RisingSupport, S::NecessaryOnly, B::None, {"m0"}, {}, "m0 > 1", false},
      {CaseId::RM0_7, "RM0-7", G::RisingSupport, S::NecessaryOnly, B::None, {"m0", "l0"}, {}, "m0 > 0, l0 > 0, m0 != l0", false},
      {CaseId::RM1_1, "RM1-1", G::FallingSupport, S::NecessaryOnly, B::None, {"m0", "m1"}, {}, "m0 > m1", false},
      {CaseId::RM1_2, "RM1-2", G::FallingSupport, S::NecessaryOnly, B::None, {}, {}, "none", false},
      {CaseId::RM1_3, "RM1-3", G::FallingSupport, S::NecessaryOnly, B::None, {"m0"}, {}, "m0 < 0", false},
      {CaseId::RM1_4, "RM1-4", G::FallingSupport, S::NecessaryOnly, B::None, {"m0"}, {}, "m0 > 0", false},
      {CaseId::RM1_5, "RM1-5", G::FallingSupport, S::NecessaryOnly, B::None, {"m0", "l0"}, {}, "l0 < -m0", false},
      {CaseId::RM1_6, "RM1-6", G::FallingSupport, S::NecessaryOnly, B::None, {"m0"}, {}, "m0 < -1", true},
      {CaseId::RM1_7, "RM1-7", G::FallingSupport, S::NecessaryOnly, B::None, {"m0", "l0"}, {}, "l0 < 0, m0 < 0, m0 != l0", false},
      {CaseId::R01_1, "R01-1", G::TwoSided, S::IfAndOnlyIf, B::None, {"m0"}, {}, "m0 != 0", false},
      {CaseId::R01_2, "R01-2", G::TwoSided, S::IfAndOnlyIf, B::None, {"m0"}, {}, "m0 != 0", false},
      {CaseId::F0A_1, "F0A-1", G::ABranch, S::NecessaryOnly, B::ANonzero, {"m0"}, {"a"}, "m0 != 0, a != 0", false},
      {CaseId::F0A_2, "F0A-2", G::ABranch, S::NecessaryOnly, B::ANonzero, {"m0"}, {"a"}, "m0 != 0, a != 0, -1, -1/2", false},
      {CaseId::F0A1_1, "F0A1-1", G::ZeroBranchFinite, S::IfAndOnlyIf, B::ZeroMinusOne, {}, {}, "none", false},
      {CaseId::F0A1_2, "F0A1-2", G::ZeroBranchFinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"n0"}, {"c"}, "n0 != 0, c != 0, -1", false},
      {CaseId::F0A1_3, "F0A1-3", G::ZeroBranchFinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"n0"}, {}, "n0 != 0", false},
      {CaseId::F0A1_4, "F0A1-4", G::ZeroBranchFinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"h"}, "m0 != 0, h != 0", false},
      {CaseId::F0A3_A1, "F0A3-A1", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0"}, {}, "m0 > 0, n0 < 0", false},
      {CaseId::F0A3_A2, "F0A3-A2", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"c", "d"}, "m0 > 0, c*d != 0, c != -1 or d != -1 (n0 = -3)", false},
      {CaseId::F0A3_A3, "F0A3-A3", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"cprime"}, "m0 > 0, cprime != 0, -1 (n0 = -3)", true},
      {CaseId::F0A3_A4, "F0A3-A4", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"g"}, "m0 > 0, g != 0, -1 (n0 = -2)", false},
      {CaseId::F0A3_A5, "F0A3-A5", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0", "m1"}, {"h"}, "m0 > 0, n0 < 0, m1 >= m0, h != 0, -1", false},
      {CaseId::F0A3_A6, "F0A3-A6", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0", "m1", "n1"}, {"h", "hprime"}, "m0 > 0, n0 < 0, m1 >= m0, n1 > n0, n1 != 0, h, hprime != -1, h*hprime != 0", false},
      {CaseId::F0A3_A7, "F0A3-A7", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0", "m1", "m2"}, {"g", "r"}, "m0 > 0, n0 < 0, m1, m2 >= m0, m1 != m2, g, r != -1, g*r != 0", false},
      {CaseId::F0A3_B1, "F0A3-B1", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0"}, {}, "m0 < 0, n0 > 0", false},
      {CaseId::F0A3_B2, "F0A3-B2", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"c"}, "m0 < 0, c != 0, -1", false},
      {CaseId::F0A3_B3, "F0A3-B3", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"cprime", "dprime"}, "m0 < 0, cprime*dprime != 0, cprime != -1 or dprime != -1", true},
      {CaseId::F0A3_B4, "F0A3-B4", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0"}, {"g"}, "m0 < 0, g != 0, -1", true},
      {CaseId::F0A3_B5, "F0A3-B5", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0", "m1"}, {"h"}, "m0 < 0, n0 > 0, m1 <= m0, h != 0, -1", true},
      {CaseId::F0A3_B6, "F0A3-B6", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0", "m1", "n1"}, {"h", "hprime"}, "m0 < 0, n0 > 0, m1 <= m0, n1 < n0, n1 != 0, h, hprime != -1, h*hprime != 0", false},
      {CaseId::F0A3_B7, "F0A3-B7", G::ZeroBranchInfinite, S::IfAndOnlyIf, B::ZeroMinusOne, {"m0", "n0", "m1", "m2"}, {"g", "r"}, "m0 < 0, n0 > 0, m1, m2 <= m0, m1 != m2, g, r != -1, g*r != 0", false},
  };
  return table;
}

const CaseRow& row(CaseId id) { return rows()[static_cast<std::size_t>(id)]; }

std::string fail(CaseId id, const std::string& condition) {
  return std::string(to_string(id)) + " requires " + condition;
}

bool not_zero_or_minus_one(const Scalar& x) { return x != 0 && x != -1; }

}  // namespace

// ---------------------------------------------------------------------------

const std::array<CaseId, kCaseCount>& all_cases() {
  static const std::array<CaseId, kCaseCount> ids = [] {
    std::array<CaseId, kCaseCount> out{};
    for (std::size_t i = 0; i < kCaseCount; ++i) out[i] = static_cast<CaseId>(i);
    return out;
  }();
  return ids;
}

std::string_view to_string(CaseId id) { return row(id).name; }

CaseId parse_case_id(std::string_view text) {
  for (const auto& r : rows())
    if (text == r.name) return r.id;
  throw ParseError("unknown case id '" + std::string(text) + "'");
}

std::string_view to_string(Reading r) { return r == Reading::Literal ? "literal" : "amended"; }

const CaseInfo& case_info(CaseId id) { return enumerate_cases()[static_cast<std::size_t>(id)]; }

const std::vector<CaseInfo>& enumerate_cases() {
  static const std::vector<CaseInfo> infos = [] {
    std::vector<CaseInfo> out;
    for (const auto& r : rows())
      out.push_back({r.id, r.group, r.statement, r.branch, r.ints, r.scalars, r.constraints, r.amended});
    return out;
  }();
  return infos;
}

// ---------------------------------------------------------------------------

Index FamilyParams::int_at(const std::string& name) const {
  auto it = ints.find(name);
  if (it == ints.end()) throw ValidationError("missing integer parameter '" + name + "'");
  return it->second;
}

Scalar FamilyParams::scalar_at(const std::string& name) const {
  auto it = scalars.find(name);
  if (it == scalars.end()) throw ValidationError("missing scalar parameter '" + name + "'");
  return it->second;
}

std::string to_string(const FamilyParams& p) {
  std::string out;
  for (const auto& [k, v] : p.ints) out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  for (const auto& [k, v] : p.scalars) out += (out.empty() ? "" : ",") + k + "=" + to_string(v);
  return out;
}

std::optional<std::string> param_violation(CaseId id, const FamilyParams& p) {
  const CaseRow& r = row(id);
  for (const auto& name : r.ints)
    if (!p.ints.count(name)) return fail(id, "integer parameter " + name);
  for (const auto& name : r.scalars)
    if (!p.scalars.count(name)) return fail(id, "scalar parameter " + name);
  for (const auto& [name, _] : p.ints)
    if (std::find(r.ints.begin(), r.ints.end(), name) == r.ints.end())
      return std::string(to_string(id)) + " has no integer parameter '" + name + "'";
  for (const auto& [name, _] : p.scalars)
    if (std::find(r.scalars.begin(), r.scalars.end(), name) == r.scalars.end())
      return std::string(to_string(id)) + " has no scalar parameter '" + name + "'";

  auto I = [&](const char* n) { return p.int_at(n); };
  auto S = [&](const char* n) { return p.scalar_at(n); };

  switch (id) {
    case CaseId::FIN_1:
    case CaseId::FIN_2:
    case CaseId::RM0_2:
    case CaseId::RM1_2:
    case CaseId::F0A1_1:
      return std::nullopt;
    case CaseId::FIN_3:
      if (!(S("f0") * (S("f1") + 1) == 0)) return fail(id, "f(0)(f(1)+1) = 0");
      return std::nullopt;
    case CaseId::FIN_4:
      if (!(S("f1") * (S("f0") + 1) == 0)) return fail(id, "f(1)(f(0)+1) = 0");
      return std::nullopt;
    case CaseId::RM0_1: if (!(I("m0") < I("m1"))) return fail(id, "m0 < m1"); return std::nullopt;
    case CaseId::RM0_3: if (!(I("m0") > 0)) return fail(id, "m0 > 0"); return std::nullopt;
    case CaseId::RM0_4: if (!(I("m0") < 0)) return fail(id, "m0 < 0"); return std::nullopt;
    case CaseId::RM0_5: if (!(I("l0") > -I("m0"))) return fail(id, "l0 > -m0"); return std::nullopt;
    case CaseId::RM0_6: if (!(I("m0") > 1)) return fail(id, "m0 > 1"); return std::nullopt;
    case CaseId::RM0_7:
      if (!(I("m0") > 0)) return fail(id, "m0 > 0");
      if (!(I("l0") > 0)) return fail(id, "l0 > 0");
      if (!(I("m0") != I("l0"))) return fail(id, "m0 != l0");
      return std::nullopt;
    case CaseId::RM1_1: if (!(I("m0") > I("m1"))) return fail(id, "m0 > m1"); return std::nullopt;
    case CaseId::RM1_3: if (!(I("m0") < 0)) return fail(id, "m0 < 0"); return std::nullopt;
    case CaseId::RM1_4: if (!(I("m0") > 0)) return fail(id, "m0 > 0"); return std::nullopt;
    case CaseId::RM1_5: if (!(I("l0") < -I("m0"))) return fail(id, "l0 < -m0"); return std::nullopt;
    case CaseId::RM1_6: if (!(I("m0") < -1)) return fail(id, "m0 < -1"); return std::nullopt;
    case CaseId::RM1_7:
      if (!(I("l0") < 0)) return fail(id, "l0 < 0");
      if (!(I("m0") < 0)) return fail(id, "m0 < 0");
      if (!(I("m0") != I("l0"))) return fail(id, "m0 != l0");
      return std::nullopt;
    case CaseId::R01_1:
    case CaseId::R01_2:
      if (!(I("m0") != 0)) return fail(id, "m0 != 0");
      return std::nullopt;
    case CaseId::F0A_1:
      if (!(I("m0") != 0)) return fail(id, "m0 != 0");
      if (!(S("a") != 0)) return fail(id, "a = f(0) != 0");
      return std::nullopt;
    case CaseId::F0A_2:
      if (!(I("m0") != 0)) return fail(id, "m0 != 0");
      if (!(S("a") != 0)) return fail(id, "a = f(0) != 0");
      if (!(S("a") != -1 && S("a") != Scalar(-1, 2))) return fail(id, "a != -1, -1/2");
      return std::nullopt;
    case CaseId::F0A1_2:
      if (!(I("n0") != 0)) return fail(id, "n0 != 0");
      if (!(not_zero_or_minus_one(S("c")))) return fail(id, "f(2n0+1) = c != 0, -1");
      return std::nullopt;
    case CaseId::F0A1_3: if (!(I("n0") != 0)) return fail(id, "n0 != 0"); return std::nullopt;
    case CaseId::F0A1_4:
      if (!(I("m0") != 0)) return fail(id, "m0 != 0");
      if (!(S("h") != 0)) return fail(id, "f(2m0) = h != 0");
      return std::nullopt;
    default:
      break;
  }

  // Zero-branch infinite cases.
  const bool part_a = id >= CaseId::F0A3_A1 && id <= CaseId::F0A3_A7;
  const int item = static_cast<int>(id) - static_cast<int>(part_a ? CaseId::F0A3_A1 : CaseId::F0A3_B1) + 1;
  const Index m0 = I("m0");
  if (part_a && m0 <= 0) return fail(id, "m0 > 0");
  if (!part_a && m0 >= 0) return fail(id, "m0 < 0");
  const bool has_n0 = item == 1 || item >= 5;
  if (has_n0 && part_a && I("n0") >= 0) return fail(id, "n0 < 0");
  if (has_n0 && !part_a && I("n0") <= 0) return fail(id, "n0 > 0");
  auto on_side = [&](Index x, Index bound) { return part_a ? x >= bound : x <= bound; };
  const char* side = part_a ? ">=" : "<=";
  switch (item) {
    case 2:
      if (part_a) {
        if (!(S("c") * S("d") != 0)) return fail(id, "c*d != 0");
        if (!(S("c") != -1 || S("d") != -1)) return fail(id, "c != -1 or d != -1");
      } else {
        if (!(not_zero_or_minus_one(S("c")))) return fail(id, "c != 0, -1");
      }
      return std::nullopt;
    case 3:
      if (part_a) {
        if (!(not_zero_or_minus_one(S("cprime")))) return fail(id, "c' != 0, -1");
      } else {
        if (!(S("cprime") * S("dprime") != 0)) return fail(id, "c'*d' != 0");
        if (!(S("cprime") != -1 || S("dprime") != -1)) return fail(id, "c' != -1 or d' != -1");
      }
      return std::nullopt;
    case 4:
      if (!(not_zero_or_minus_one(S("g")))) return fail(id, "g != 0, -1");
      return std::nullopt;
    case 5:
      if (!(on_side(I("m1"), m0))) return fail(id, std::string("m1 ") + side + " m0");
      if (!(not_zero_or_minus_one(S("h")))) return fail(id, "h != 0, -1");
      return std::nullopt;
    case 6:
      if (!(on_side(I("m1"), m0))) return fail(id, std::string("m1 ") + side + " m0");
      if (!(part_a ? I("n1") > I("n0") : I("n1") < I("n0"))) return fail(id, part_a ? "n1 > n0" : "n1 < n0");
      if (I("n1") == 0) return fail(id, "n1 != 0 (f(1) = -1)");
      if (!(S("h") != -1 && S("hprime") != -1)) return fail(id, "h, h' != -1");
      if (!(S("h") * S("hprime") != 0)) return fail(id, "h*h' != 0");
      return std::nullopt;
    case 7:
      if (!(on_side(I("m1"), m0) && on_side(I("m2"), m0))) return fail(id, std::string("m1, m2 ") + side + " m0");
      if (!(I("m1") != I("m2"))) return fail(id, "m1 != m2");
      if (!(S("g") != -1 && S("r") != -1)) return fail(id, "g, r != -1");
      if (!(S("g") * S("r") != 0)) return fail(id, "g*r != 0");
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

void validate_params(CaseId id, const FamilyParams& p) {
  if (auto why = param_violation(id, p)) throw ValidationError(*why);
}

// ---------------------------------------------------------------------------

UncoveredIndex::UncoveredIndex(Index i)
    : std::out_of_range("coefficient table does not cover index " + std::to_string(i)), index_(i) {}

struct CoeffSpec::Impl {
  Kind kind;
  std::string label;
  Fn fn;                                // Family / Custom
  Window window;                        // Table
  std::vector<Scalar> values;           // Table
  std::optional<CaseId> id;
  std::optional<Reading> reading;
  FamilyParams params;
};

CoeffSpec::CoeffSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

CoeffSpec CoeffSpec::constant(const Scalar& c) {
  return custom([c](Index) { return c; }, "constant " + to_string(c));
}

CoeffSpec CoeffSpec::custom(Fn fn, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Custom;
  impl->label = std::move(label);
  impl->fn = std::move(fn);
  return CoeffSpec(std::move(impl));
}

CoeffSpec CoeffSpec::table(Window w, const std::map<Index, Scalar>& values) {
  std::vector<Scalar> dense(w.size(), Scalar(0));
  for (const auto& [i, v] : values) {
    if (!w.contains(i)) throw UncoveredIndex(i);
    dense[static_cast<std::size_t>(i - w.lo)] = v;
  }
  return table(w, std::move(dense));
}

CoeffSpec CoeffSpec::table(Window w, std::vector<Scalar> values) {
  if (values.size() != w.size()) throw std::invalid_argument("table size does not match its window");
  auto impl = std::make_shared<Impl>();
  impl->kind = Kind::Table;
  impl->label = "table on " + to_string(w);
  impl->window = w;
  impl->values = std::move(values);
  return CoeffSpec(std::move(impl));
}

CoeffSpec::Kind CoeffSpec::kind() const noexcept { return impl_->kind; }
const std::string& CoeffSpec::label() const noexcept { return impl_->label; }

std::optional<Window> CoeffSpec::domain() const noexcept {
  if (impl_->kind == Kind::Table) return impl_->window;
  return std::nullopt;
}

bool CoeffSpec::covers(Index i) const noexcept {
  return impl_->kind != Kind::Table || impl_->window.contains(i);
}

Scalar CoeffSpec::operator()(Index i) const {
  if (impl_->kind != Kind::Table) return impl_->fn(i);
  if (!impl_->window.contains(i)) throw UncoveredIndex(i);
  return impl_->values[static_cast<std::size_t>(i - impl_->window.lo)];
}

std::optional<Scalar> CoeffSpec::try_eval(Index i) const {
  if (!covers(i)) return std::nullopt;
  return (*this)(i);
}

std::optional<CaseId> CoeffSpec::case_id() const noexcept { return impl_->id; }
std::optional<Reading> CoeffSpec::reading() const noexcept { return impl_->reading; }
const FamilyParams* CoeffSpec::params() const noexcept {
  return impl_->kind == Kind::Family ? &impl_->params : nullptr;
}

// ---------------------------------------------------------------------------
// Family transcriptions. Every map ends in "f(m) = 0 (or -1) for the
// remaining m".

namespace {

using Fn = CoeffSpec::Fn;

Fn minus_one_on(std::function<bool(Index)> support) {
  return [support = std::move(support)](Index m) { return support(m) ? kMinusOne : kZero; };
}

Fn finite_family(CaseId id, const FamilyParams& p) {
  switch (id) {
    case CaseId::FIN_1: return [](Index) { return kZero; };
    case CaseId::FIN_2: return [](Index) { return kMinusOne; };
    case CaseId::FIN_3:
    case CaseId::FIN_4: {
      const Scalar f0 = p.scalar_at("f0"), f1 = p.scalar_at("f1");
      const bool even_zero = id == CaseId::FIN_3;
      return [=](Index m) {
        if (m == 0) return f0;
        if (m == 1) return f1;
        return (is_even(m) == even_zero) ? kZero : kMinusOne;
      };
    }
    default: return {};
  }
}

Fn rising_family(CaseId id, const FamilyParams& p) {
  switch (id) {
    case CaseId::RM0_1: {
      // f(2m0) = f(2m1 + 2k(m1-m0)) = -1, f(-2m1+1) = f(-2m0 + 2k(m1-m0) + 1) = -1, k >= 0
      const Index m0 = p.int_at("m0"), m1 = p.int_at("m1"), s = m1 - m0;
      return minus_one_on([=](Index m) {
        const Index h = half(m);
        if (is_even(m)) return h == m0 || in_progression(h, m1, s);
        return h == -m1 || in_progression(h, -m0, s);
      });
    }
    case CaseId::RM0_2:
      // f(2k) = f(-1) = f(2k+1) = -1, k > 0
      return minus_one_on([](Index m) { return m == -1 || (half(m) > 0); });
    case CaseId::RM0_3: {
      // f(2k m0) = f(-2m0+1) = f(2k m0 + 1) = -1, k >= 0, m0 > 0
      const Index m0 = p.int_at("m0");
      return minus_one_on([=](Index m) {
        const Index h = half(m);
        if (!is_even(m) && h == -m0) return true;
        return in_progression(h, 0, m0);
      });
    }
    case CaseId::RM0_4: {
      // f(2m0) = f(2k m0) = f(2k m0 + 1) = -1, k <= 0, m0 < 0
      const Index m0 = p.int_at("m0");
      return minus_one_on([=](Index m) {
        const Index h = half(m);
        if (is_even(m) && h == m0) return true;
        return in_progression(h, 0, -m0);
      });
    }
    case CaseId::RM0_5: {
      const Index m0 = p.int_at("m0"), l0 = p.int_at("l0");
      return minus_one_on([=](Index m) { return half(m) >= (is_even(m) ? m0 : l0); });
    }
    case CaseId::RM0_6: {
      const Index m0 = p.int_at("m0");
      return minus_one_on([=](Index m) { return m == 0 || m == 1 || m >= m0; });
    }
    case CaseId::RM0_7: {
      const Index m0 = p.int_at("m0"), l0 = p.int_at("l0");
      return minus_one_on([=](Index m) { return m == 0 || m == 1 || half(m) >= (is_even(m) ? m0 : l0); });
    }
    default: return {};
  }
}

Fn falling_family(CaseId id, const FamilyParams& p, Reading reading) {
  switch (id) {
    case CaseId::RM1_1: {
      // f(2m0) = f(2m1 + 2k(m0-m1)) = -1, f(-2m1+1) = f(-2m0 + 2k(m0-m1) + 1) = -1, k <= 0
      const Index m0 = p.int_at("m0"), m1 = p.int_at("m1"), s = m0 - m1;
      return minus_one_on([=](Index m) {
        const Index h = half(m);
        if (is_even(m)) return h == m0 || in_progression(-h, -m1, s);
        return h == -m1 || in_progression(-h, m0, s);
      });
    }
    case CaseId::RM1_2:
      // f(2) = f(2k) = f(2k+1) = -1, k < 0
      return minus_one_on([](Index m) { return m == 2 || half(m) < 0; });
    case CaseId::RM1_3: {
      // f(2k m0) = f(-2m0+1) = f(2k m0 + 1) = -1, k >= 0, m0 < 0
      const Index m0 = p.int_at("m0");
      return minus_one_on([=](Index m) {
        const Index h = half(m);
        if (!is_even(m) && h == -m0) return true;
        return in_progression(-h, 0, -m0);
      });
    }
    case CaseId::RM1_4: {
      // f(2m0) = f(2k m0) = f(2k m0 + 1) = -1, k <= 0, m0 > 0
      const Index m0 = p.int_at("m0");
      return minus_one_on([=](Index m) {
        const Index h = half(m);
        if (is_even(m) && h == m0) return true;
        return in_progression(-h, 0, m0);
      });
    }
    case CaseId::RM1_5: {
      const Index m0 = p.int_at("m0"), l0 = p.int_at("l0");
      return minus_one_on([=](Index m) { return half(m) <= (is_even(m) ? m0 : l0); });
    }
    case CaseId::RM1_6: {
      // Literal: f(l) = -1 for l <= 2m0+1. Amended: l <= m0+1, the mirror
      // image of RM0-6 under m -> 1-m.
      const Index m0 = p.int_at("m0");
      const Index top = reading == Reading::Amended ? m0 + 1 : 2 * m0 + 1;
      return minus_one_on([=](Index m) { return m == 0 || m == 1 || m <= top; });
    }
    case CaseId::RM1_7: {
      const Index m0 = p.int_at("m0"), l0 = p.int_at("l0");
      return minus_one_on([=](Index m) { return m == 0 || m == 1 || half(m) <= (is_even(m) ? m0 : l0); });
    }
    default: return {};
  }
}

Fn two_sided_family(CaseId id, const FamilyParams& p) {
  const Index m0 = p.int_at("m0");
  const Index step = m0 < 0 ? -m0 : m0;
  const Scalar on = id == CaseId::R01_1 ? kZero : kMinusOne;
  const Scalar off = id == CaseId::R01_1 ? kMinusOne : kZero;
  // f(2k m0) = f(2k m0 + 1) = on, remaining = off
  return [=](Index m) { return divides(step, half(m)) ? on : off; };
}

Fn a_branch_family(CaseId id, const FamilyParams& p) {
  const Index m0 = p.int_at("m0");
  const Index step = m0 < 0 ? -m0 : m0;
  const Scalar a = p.scalar_at("a");
  const Scalar a1 = -1 - a;
  if (id == CaseId::F0A_1) {
    // f(2m0 k) = a, f(2m0 k + 1) = -1-a
    return [=](Index m) {
      if (!divides(step, half(m))) return kZero;
      return is_even(m) ? a : a1;
    };
  }
  // f(4m0k) = a, f(4m0k+1) = -1-a, f(4m0k+2) = -a/(1+2a), f(4m0k+3) = -(1+a)/(1+2a)
  const Scalar b = -a / (1 + 2 * a);
  const Scalar c = -(1 + a) / (1 + 2 * a);
  const Index period = 4 * step;
  return [=](Index m) {
    Index r = m % period;
    if (r < 0) r += period;
    if (r == 0) return a;
    if (r == 1) return a1;
    if (r == 2) return b;
    if (r == 3) return c;
    return kZero;
  };
}

Fn zero_branch_finite_family(CaseId id, const FamilyParams& p) {
  switch (id) {
    case CaseId::F0A1_1:
      return [](Index m) { return is_even(m) ? kZero : kMinusOne; };
    case CaseId::F0A1_2:
    case CaseId::F0A1_3: {
      const Index n0 = p.int_at("n0");
      const Scalar c = id == CaseId::F0A1_2 ? p.scalar_at("c") : kZero;
      return [=](Index m) {
        if (is_even(m)) return kZero;
        return m == 2 * n0 + 1 ? c : kMinusOne;
      };
    }
    case CaseId::F0A1_4: {
      const Index m0 = p.int_at("m0");
      const Scalar h = p.scalar_at("h");
      return [=](Index m) {
        if (!is_even(m)) return kMinusOne;
        return m == 2 * m0 ? h : kZero;
      };
    }
    default: return {};
  }
}

// Part (1): f(2m) != 0 iff m >= m0 > 0, f(2n+1) != 0 iff n > n0, n0 < 0.
Fn part_a_family(int item, const FamilyParams& p, Reading reading) {
  const Index m0 = p.int_at("m0");
  auto evens = [m0](Index h) { return h >= m0; };
  switch (item) {
    case 1: {
      const Index n0 = p.int_at("n0");
      return minus_one_on([=](Index m) { return is_even(m) ? evens(half(m)) : half(m) > n0; });
    }
    case 2: {
      const Scalar c = p.scalar_at("c"), d = p.scalar_at("d");
      return [=](Index m) {
        if (is_even(m)) return evens(half(m)) ? kMinusOne : kZero;
        if (m == -1) return c;
        if (m == -3) return d;
        return half(m) >= 0 ? kMinusOne : kZero;
      };
    }
    case 3: {
      // Literal: f(3) = c', f(-1) = f(-3) = -1, f(2n+1) = -1 for n >= 0.
      // Amended: c' sits at -3 instead, with f(3) = -1.
      const Scalar cp = p.scalar_at("cprime");
      const Index at = reading == Reading::Amended ? -3 : 3;
      return [=](Index m) {
        if (is_even(m)) return evens(half(m)) ? kMinusOne : kZero;
        if (m == at) return cp;
        if (m == -1 || m == -3) return kMinusOne;
        return half(m) >= 0 ? kMinusOne : kZero;
      };
    }
    case 4: {
      const Scalar g = p.scalar_at("g");
      return [=](Index m) {
        if (is_even(m)) return evens(half(m)) ? kMinusOne : kZero;
        if (m == -1) return g;
        return half(m) >= 0 ? kMinusOne : kZero;
      };
    }
    default: {
      const Index n0 = p.int_at("n0"), m1 = p.int_at("m1");
      const std::optional<Index> m2 = item == 7 ? std::optional<Index>(p.int_at("m2")) : std::nullopt;
      const std::optional<Index> n1 = item == 6 ? std::optional<Index>(p.int_at("n1")) : std::nullopt;
      const Scalar v1 = p.scalar_at(item == 7 ? "g" : "h");
      const Scalar v2 = item == 7 ? p.scalar_at("r") : item == 6 ? p.scalar_at("hprime") : kZero;
      return [=](Index m) {
        const Index h = half(m);
        if (is_even(m)) {
          if (!evens(h)) return kZero;
          if (h == m1) return v1;
          if (m2 && h == *m2) return v2;
          return kMinusOne;
        }
        if (h <= n0) return kZero;
        if (n1 && h == *n1) return v2;
        return kMinusOne;
      };
    }
  }
}

// Part (2): f(2m) != 0 iff m <= m0 < 0, f(2n+1) != 0 iff n < n0, n0 > 0.
Fn part_b_family(int item, const FamilyParams& p, Reading reading) {
  const Index m0 = p.int_at("m0");
  const bool amended = reading == Reading::Amended;
  auto evens_below = [m0](Index h) { return h <= m0; };
  switch (item) {
    case 1: {
      const Index n0 = p.int_at("n0");
      return minus_one_on([=](Index m) { return is_even(m) ? evens_below(half(m)) : half(m) < n0; });
    }
    case 2: {
      const Scalar c = p.scalar_at("c");
      return [=](Index m) {
        if (is_even(m)) return evens_below(half(m)) ? kMinusOne : kZero;
        if (m == 3) return c;
        return half(m) <= 0 ? kMinusOne : kZero;
      };
    }
    case 3: {
      // Literal: f(2n+1) = f(1) = f(3) = -1 for n < -2, f(-1) = c', f(-3) = d'.
      // Amended: f(2n+1) = -1 for n <= 0, f(3) = c', f(5) = d'.
      const Scalar cp = p.scalar_at("cprime"), dp = p.scalar_at("dprime");
      return [=](Index m) {
        if (is_even(m)) return evens_below(half(m)) ? kMinusOne : kZero;
        if (amended) {
          if (m == 3) return cp;
          if (m == 5) return dp;
          return half(m) <= 0 ? kMinusOne : kZero;
        }
        if (m == -1) return cp;
        if (m == -3) return dp;
        if (m == 1 || m == 3) return kMinusOne;
        return half(m) < -2 ? kMinusOne : kZero;
      };
    }
    case 4: {
      // Literal: f(2m) = -1 for m >= m0, f(2n+1) = -1 for n <= 0, n != -1, f(-1) = g.
      // Amended: f(2m) = -1 for m <= m0, f(2n+1) = -1 for n <= 0, f(3) = g.
      const Scalar g = p.scalar_at("g");
      return [=](Index m) {
        if (is_even(m)) {
          const bool on = amended ? evens_below(half(m)) : half(m) >= m0;
          return on ? kMinusOne : kZero;
        }
        if (m == (amended ? 3 : -1)) return g;
        return half(m) <= 0 ? kMinusOne : kZero;
      };
    }
    default: {
      // Literal case 5 prints "m >= m0" for the even support; amended uses m <= m0.
      const Index n0 = p.int_at("n0"), m1 = p.int_at("m1");
      const std::optional<Index> m2 = item == 7 ? std::optional<Index>(p.int_at("m2")) : std::nullopt;
      const std::optional<Index> n1 = item == 6 ? std::optional<Index>(p.int_at("n1")) : std::nullopt;
      const Scalar v1 = p.scalar_at(item == 7 ? "g" : "h");
      const Scalar v2 = item == 7 ? p.scalar_at("r") : item == 6 ? p.scalar_at("hprime") : kZero;
      const bool upward = item == 5 && !amended;
      return [=](Index m) {
        const Index h = half(m);
        if (is_even(m)) {
          if (!(upward ? h >= m0 : evens_below(h))) return kZero;
          if (h == m1) return v1;
          if (m2 && h == *m2) return v2;
          return kMinusOne;
        }
        if (h >= n0) return kZero;
        if (n1 && h == *n1) return v2;
        return kMinusOne;
      };
    }
  }
}

}  // namespace

CoeffSpec build_family(CaseId id, const FamilyParams& p, Reading reading) {
  validate_params(id, p);
  const CaseRow& r = row(id);
  if (reading == Reading::Amended && !r.amended)
    throw std::invalid_argument(std::string(r.name) + " has no amended reading");

  Fn fn;
  switch (r.group) {
    case CaseGroup::Finite: fn = finite_family(id, p); break;
    case CaseGroup::RisingSupport: fn = rising_family(id, p); break;
    case CaseGroup::FallingSupport: fn = falling_family(id, p, reading); break;
    case CaseGroup::TwoSided: fn = two_sided_family(id, p); break;
    case CaseGroup::ABranch: fn = a_branch_family(id, p); break;
    case CaseGroup::ZeroBranchFinite: fn = zero_branch_finite_family(id, p); break;
    case CaseGroup::ZeroBranchInfinite:
      if (id <= CaseId::F0A3_A7)
        fn = part_a_family(static_cast<int>(id) - static_cast<int>(CaseId::F0A3_A1) + 1, p, reading);
      else
        fn = part_b_family(static_cast<int>(id) - static_cast<int>(CaseId::F0A3_B1) + 1, p, reading);
      break;
  }

  auto impl = std::make_shared<CoeffSpec::Impl>();
  impl->kind = CoeffSpec::Kind::Family;
  impl->label = std::string(r.name) + (reading == Reading::Amended ? "+amended" : "");
  const std::string ps = to_string(p);
  if (!ps.empty()) impl->label += " {" + ps + "}";
  impl->fn = std::move(fn);
  impl->id = id;
  impl->reading = reading;
  impl->params = p;
  return CoeffSpec(std::move(impl));
}

std::vector<Scalar> values_on(const CoeffSpec& f, Window w) {
  std::vector<Scalar> out;
  out.reserve(w.size());
  for (Index i = w.lo; i <= w.hi; ++i) out.push_back(f(i));
  return out;
}

CoeffSpec restrict(const CoeffSpec& f, Window w) { return CoeffSpec::table(w, values_on(f, w)); }

}  // namespace omega3rb
