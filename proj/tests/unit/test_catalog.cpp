#include <gtest/gtest.h>

#include <fstream>
#include <set>

#include "fixtures.hpp"
#include "omega3rb/operator.hpp"
#include "omega3rb/params.hpp"
#include "omega3rb/search.hpp"

using namespace omega3rb;
using omega3rb::testing::load_fixture;
using omega3rb::testing::reading_of;

namespace {

CoeffSpec family(const std::string& id, const std::string& params, Reading r = Reading::Literal) {
  const CaseId c = parse_case_id(id);
  return build_family(c, parse_params(c, params), r);
}

std::vector<Scalar> values(const CoeffSpec& f, Index lo, Index hi) { return values_on(f, {lo, hi}); }

std::vector<Scalar> S(std::initializer_list<Scalar> xs) { return xs; }

}  // namespace

TEST(CaseIds, FortyDistinct) {
  EXPECT_EQ(all_cases().size(), 40u);
  EXPECT_EQ(enumerate_cases().size(), 40u);
  std::set<std::string> names;
  for (CaseId id : all_cases()) names.insert(std::string(to_string(id)));
  EXPECT_EQ(names.size(), 40u);
  for (const auto& n : names) EXPECT_EQ(to_string(parse_case_id(n)), n);
  EXPECT_THROW(parse_case_id("F0A3-C1"), ParseError);
}

TEST(CaseIds, GroupsPresent) {
  std::set<std::string> names;
  for (const auto& i : enumerate_cases()) names.insert(std::string(to_string(i.id)));
  for (int k = 1; k <= 7; ++k) {
    EXPECT_TRUE(names.count("RM1-" + std::to_string(k)));
    EXPECT_TRUE(names.count("F0A3-B" + std::to_string(k)));
  }
  EXPECT_EQ(case_info(CaseId::F0A3_A2).scalar_params, (std::vector<std::string>{"c", "d"}));
  EXPECT_EQ(case_info(CaseId::R01_1).int_params, (std::vector<std::string>{"m0"}));
  EXPECT_EQ(case_info(CaseId::RM0_1).statement, Statement::NecessaryOnly);
  EXPECT_EQ(case_info(CaseId::F0A_2).statement, Statement::NecessaryOnly);
  EXPECT_EQ(case_info(CaseId::F0A1_2).statement, Statement::IfAndOnlyIf);
}

TEST(BuildFamily, Examples) {
  EXPECT_EQ(values(family("FIN-1", ""), -5, 5), std::vector<Scalar>(11, Scalar(0)));
  const CoeffSpec f = family("F0A-2", "a=1,m0=1");
  for (Index k = -3; k <= 3; ++k) {
    EXPECT_EQ(f(4 * k), 1);
    EXPECT_EQ(f(4 * k + 1), -2);
    EXPECT_EQ(f(4 * k + 2), Scalar(-1, 3));
    EXPECT_EQ(f(4 * k + 3), Scalar(-2, 3));
  }
  const CoeffSpec g = family("RM0-3", "m0=2");
  for (Index i = -12; i <= 12; ++i) {
    const bool on = (i >= 0 && i % 4 == 0) || i == -3 || (i >= 1 && (i - 1) % 4 == 0);
    EXPECT_EQ(g(i), on ? -1 : 0) << i;
  }
}

TEST(Eval, Examples) {
  EXPECT_EQ(eval(family("F0A-1", "a=2,m0=1"), 0), 2);
  EXPECT_EQ(eval(family("F0A-1", "a=2,m0=1"), 3), -3);
  EXPECT_EQ(eval(family("F0A-1", "a=2,m0=2"), 2), 0);
  const CoeffSpec t = CoeffSpec::table({-1, 1}, std::vector<Scalar>(3, Scalar(4)));
  EXPECT_THROW(eval(t, 2), UncoveredIndex);
  EXPECT_FALSE(t.try_eval(-2));
}

TEST(Restrict, Examples) {
  EXPECT_EQ(values_on(restrict(CoeffSpec::constant(Scalar(0)), {-2, 2}), {-2, 2}), std::vector<Scalar>(5, Scalar(0)));
  const CoeffSpec r = restrict(family("FIN-2", ""), {-1, 1});
  EXPECT_EQ(r.kind(), CoeffSpec::Kind::Table);
  EXPECT_EQ(r.domain(), (Window{-1, 1}));
  EXPECT_EQ(values_on(r, {-1, 1}), S({-1, -1, -1}));
  EXPECT_EQ(values_on(restrict(family("F0A-2", "a=1,m0=1"), {0, 3}), {0, 3}),
            S({1, -2, Scalar(-1, 3), Scalar(-2, 3)}));
}

TEST(Validate, PrintedInequalities) {
  auto bad = [](const char* id, const char* p) {
    const CaseId c = parse_case_id(id);
    EXPECT_THROW(build_family(c, parse_params(c, p)), ValidationError) << id << " " << p;
  };
  bad("F0A-2", "a=-1/2,m0=1");
  bad("F0A-2", "a=-1,m0=1");
  bad("F0A-2", "a=0,m0=1");
  bad("FIN-3", "f0=1,f1=1");
  bad("FIN-4", "f0=1,f1=1");
  bad("RM0-1", "m0=2,m1=2");
  bad("RM0-3", "m0=0");
  bad("RM1-6", "m0=-1");
  bad("RM0-7", "m0=2,l0=2");
  bad("F0A1-2", "n0=1,c=-1");
  bad("F0A1-2", "n0=0,c=2");
  bad("F0A3-A2", "m0=1,c=-1,d=-1");
  bad("F0A3-A2", "m0=1,c=0,d=2");
  bad("F0A3-A6", "m0=1,n0=-2,m1=1,n1=-1,h=-1,hprime=2");
  bad("F0A3-A6", "m0=1,n0=-2,m1=1,n1=-1,h=0,hprime=2");
  bad("F0A3-A6", "m0=1,n0=-2,m1=1,n1=-3,h=2,hprime=2");
  bad("F0A3-A7", "m0=1,n0=-3,m1=1,m2=1,g=2,r=-3");
  bad("F0A3-B1", "m0=1,n0=1");
  bad("F0A3-B5", "m0=-1,n0=2,m1=0,h=2");
  try {
    build_family(CaseId::F0A_2, parse_params(CaseId::F0A_2, "a=-1/2,m0=1"));
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("-1/2"), std::string::npos);
  }
}

TEST(Validate, NamesAndReadings) {
  EXPECT_THROW(parse_params(CaseId::F0A_1, "a=1,m0=1,zz=2"), ValidationError);
  EXPECT_THROW(parse_params(CaseId::F0A_1, "a=1,a=2,m0=1"), ValidationError);
  EXPECT_THROW(parse_params(CaseId::F0A_1, "a=1,m0=1/2"), ParseError);
  EXPECT_THROW(parse_params(CaseId::F0A_1, "a=0.5,m0=1"), ParseError);
  EXPECT_THROW(build_family(CaseId::F0A_1, parse_params(CaseId::F0A_1, "a=1")), ValidationError);
  EXPECT_THROW(build_family(CaseId::FIN_1, {}, Reading::Amended), std::invalid_argument);
  EXPECT_FALSE(param_violation(CaseId::F0A_1, parse_params(CaseId::F0A_1, "a=1,m0=1")));
}

TEST(Labels, CarryCaseReadingAndParams) {
  const CoeffSpec f = family("RM1-6", "m0=-2", Reading::Amended);
  EXPECT_EQ(f.label(), "RM1-6+amended {m0=-2}");
  EXPECT_EQ(f.case_id(), CaseId::RM1_6);
  EXPECT_EQ(f.reading(), Reading::Amended);
  ASSERT_NE(f.params(), nullptr);
  EXPECT_EQ(f.params()->int_at("m0"), -2);
  EXPECT_EQ(to_string(parse_params(CaseId::F0A_1, "a=1/2,m0=1")), "m0=1,a=1/2");
}

TEST(ParamDocument, ParsesKeyValueText) {
  const ParamDocument d = parse_param_document("# fixture\ncase = F0A3-A2\nm0 = 2\nc = -1  # inline\nd = 2\n\n");
  EXPECT_EQ(d.id, CaseId::F0A3_A2);
  EXPECT_EQ(d.params.int_at("m0"), 2);
  EXPECT_EQ(d.params.scalar_at("c"), -1);
  EXPECT_THROW(parse_param_document("m0 = 1\n"), ParseError);
  EXPECT_THROW(parse_param_document("case = F0A-1\nm0 1\n"), ParseError);
  const std::string path = ::testing::TempDir() + "doc.txt";
  std::ofstream(path) << "case = FIN-3\nf0 = 2\nf1 = -1\n";
  EXPECT_EQ(load_param_document(path).params.scalar_at("f0"), 2);
}

TEST(BranchConsistency, HypothesisAtZeroAndOne) {
  const auto fx = load_fixture("catalog_scan.json");
  for (const auto& row : fx["rows"]) {
    const CaseId id = parse_case_id(row["case"].get<std::string>());
    const CaseInfo& info = case_info(id);
    if (info.branch == BranchHypothesis::None) continue;
    if (info.has_amended && reading_of(row["reading"]) == Reading::Literal) continue;
    const CoeffSpec f = build_family(id, parse_params(id, row["params"].get<std::string>()), reading_of(row["reading"]));
    if (info.branch == BranchHypothesis::ANonzero) {
      EXPECT_NE(f(0), 0) << f.label();
      EXPECT_EQ(f(1), -1 - f(0)) << f.label();
    } else {
      EXPECT_EQ(f(0), 0) << f.label();
      EXPECT_EQ(f(1), -1) << f.label();
    }
  }
}

// The printed even support m >= m0 with m0 < 0 reaches index 0.
TEST(BranchConsistency, LiteralB4B5PutMinusOneAtZero) {
  const auto fx = load_fixture("catalog_scan.json");
  std::size_t rows = 0;
  for (const auto& row : fx["rows"]) {
    const std::string name = row["case"];
    if ((name != "F0A3-B4" && name != "F0A3-B5") || row["reading"] != "literal") continue;
    ++rows;
    EXPECT_EQ(family(name, row["params"], Reading::Literal)(0), -1) << row.dump();
    EXPECT_FALSE(row["passes"].get<bool>()) << row.dump();
  }
  EXPECT_GT(rows, 0u);
}

// Per-row sweep outcome at radius 12 against the oracle, failure counts included.
TEST(Sufficiency, MatchesOracleSweep) {
  const auto fx = load_fixture("catalog_sweep.json");
  const Window w = Window::symmetric(fx["window"].get<Index>());
  for (const auto& row : fx["rows"]) {
    const CoeffSpec f = family(row["case"], row["params"], reading_of(row["reading"]));
    const ResidualReport r = sweep_residuals({0, f}, Weight{}, w);
    EXPECT_EQ(r.failed, row["failed"].get<std::uint64_t>()) << f.label();
    if (!row["first_failure"].is_null()) {
      ASSERT_FALSE(r.witnesses.empty());
      const auto& t = row["first_failure"];
      EXPECT_EQ(r.witnesses[0].triple, (Triple{t[0], t[1], t[2]})) << f.label();
    }
  }
}

// Parameter grid at radius 7: pass flag per (case, reading, params).
TEST(Sufficiency, MatchesOracleScan) {
  const auto fx = load_fixture("catalog_scan.json");
  const Window w = Window::symmetric(fx["window"].get<Index>());
  std::size_t rows = 0;
  for (const auto& row : fx["rows"]) {
    const CoeffSpec f = family(row["case"], row["params"], reading_of(row["reading"]));
    EXPECT_EQ(sweep_residuals({0, f}, Weight{}, w).passed(), row["passes"].get<bool>()) << f.label();
    ++rows;
  }
  EXPECT_GT(rows, 500u);
}

TEST(Sufficiency, EveryIffRowPassesUnderSomeReading) {
  const auto fx = load_fixture("catalog_scan.json");
  std::set<std::string> cases_with_pass;
  for (const auto& row : fx["rows"])
    if (row["passes"].get<bool>()) cases_with_pass.insert(row["case"]);
  for (const auto& info : enumerate_cases())
    if (info.statement == Statement::IfAndOnlyIf && info.id != CaseId::F0A3_A7 && info.id != CaseId::F0A3_B7) {
      EXPECT_TRUE(cases_with_pass.count(std::string(to_string(info.id)))) << to_string(info.id);
    }
}

TEST(Distinctness, OnlyRecordedOverlaps) {
  const auto fx = load_fixture("catalog_sweep.json");
  const Window w = Window::symmetric(fx["overlaps"]["window"].get<Index>());
  std::set<std::pair<std::string, std::string>> allowed;
  for (const auto& p : fx["overlaps"]["pairs"]) allowed.emplace(p[0].get<std::string>(), p[1].get<std::string>());
  std::vector<std::pair<std::string, std::vector<Scalar>>> tables;
  for (const auto& row : fx["rows"]) {
    const Reading r = reading_of(row["reading"]);
    const CaseId id = parse_case_id(row["case"].get<std::string>());
    tables.emplace_back(match_key(id, r), values_on(family(row["case"], row["params"], r), w));
  }
  std::set<std::pair<std::string, std::string>> found;
  for (std::size_t i = 0; i < tables.size(); ++i)
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      if (tables[i].second == tables[j].second) found.insert({tables[i].first, tables[j].first});
  EXPECT_EQ(found, allowed);
}
