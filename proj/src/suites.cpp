#include "omega3rb/suites.hpp"

#include <algorithm>

#include "omega3rb/algebra.hpp"
#include "omega3rb/constraints.hpp"

namespace omega3rb {

namespace {

constexpr std::string_view kSuiteNames[] = {"fundamental", "derived-a-branch", "derived-01-branch", "det-criterion"};

// Range of the shift k in the two-branch identities that read f(2 m0 k).
constexpr Index kQuadRange = 3;

std::string args_text(std::initializer_list<Index> xs) {
  std::string s = "(";
  for (Index x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
  return s + ")";
}

bool all_in(Window w, std::initializer_list<Index> xs) {
  return std::all_of(xs.begin(), xs.end(), [&](Index i) { return w.contains(i); });
}

void absorb(SuiteCheck& c, const ConstraintReport& r) {
  c.checked += r.checked;
  c.skipped += r.skipped;
  for (const Violation& v : r.violations) {
    std::string args;
    for (Index a : v.args) args += (args.empty() ? "" : ",") + std::to_string(a);
    c.fail(v.what + " at (" + args + "): f(" + std::to_string(v.index) + ") = " + to_string(v.value));
  }
  c.notes.insert(c.notes.end(), r.notes.begin(), r.notes.end());
}

SuiteCheck fundamental(const SuiteConfig& cfg) {
  SuiteCheck c{"fundamental identity"};
  IndexSampler rng(cfg.seed, cfg.window);
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    Index i[5];
    for (Index& x : i) x = rng.next();
    ++c.checked;
    const Element r = fundamental_identity_residual(Element::generator(i[0]), Element::generator(i[1]),
                                                    Element::generator(i[2]), Element::generator(i[3]),
                                                    Element::generator(i[4]));
    if (!r.is_zero())
      c.fail("L indices " + args_text({i[0], i[1], i[2], i[3], i[4]}) + ": " + to_string(r));
  }
  return c;
}

SuiteCheck det_criterion(Window w) {
  SuiteCheck c{"determinant vanishing criterion"};
  for (Index l = w.lo; l <= w.hi; ++l)
    for (Index m = w.lo; m <= w.hi; ++m)
      for (Index n = w.lo; n <= w.hi; ++n) {
        ++c.checked;
        if ((det3_int(l, m, n) == 0) != det3_vanishes_closed_form(l, m, n))
          c.fail("D" + args_text({l, m, n}) + " = " + std::to_string(det3_int(l, m, n)));
      }
  return c;
}

// The four two-term identities, over (l, m, n) whose indices all lie in w.
template <typename Residuals>
SuiteCheck four_items(const char* name, Window w, Residuals residuals) {
  SuiteCheck c{name};
  const Index r = std::max(-w.lo, w.hi);
  for (Index l = -r; l <= r; ++l)
    for (Index m = -r; m <= r; ++m)
      for (Index n = -r; n <= r; ++n) {
        if (!all_in(w, {2 * l + 1, 2 * m + 1, 2 * m, 2 * n, 2 * l + 2 * m + 1, 2 * m + 2 * n + 1, 2 * l + 2 * m,
                        2 * m + 2 * n})) {
          continue;
        }
        const auto items = residuals(l, m, n);
        for (std::size_t i = 0; i < items.size(); ++i) {
          if (!items[i]) continue;
          ++c.checked;
          if (*items[i] != 0)
            c.fail("item " + std::to_string(i + 1) + " at " + args_text({l, m, n}) + ": " + to_string(*items[i]));
        }
      }
  return c;
}

std::vector<SuiteCheck> derived_a_branch(const SuiteConfig& cfg) {
  const CoeffSpec& f = *cfg.family;
  const Window w = cfg.window;
  const Scalar a = f(0);
  if (a == 0 || f(1) != -1 - a) throw PreconditionError("needs f(0) = a != 0 and f(1) = -1-a");

  std::vector<SuiteCheck> out;
  out.push_back(four_items("a-branch identities", w,
                           [&](Index l, Index m, Index n) { return a_branch_residuals(f, a, l, m, n); }));

  SuiteCheck s39{"f(1-m) + f(m) + 1 = 0"};
  for (Index m = w.lo; m <= w.hi; ++m) {
    if (!w.contains(1 - m)) continue;
    ++s39.checked;
    if (Scalar r = reflection_residual(f, m); r != 0) s39.fail("m = " + std::to_string(m) + ": " + to_string(r));
  }
  out.push_back(std::move(s39));

  if (!cfg.m0) {
    SuiteCheck note{"m0 identities"};
    note.notes.push_back("family has no m0; reciprocal identities and the supporter check are not run");
    out.push_back(std::move(note));
  } else {
    const Index m0 = *cfg.m0;
    SuiteCheck s00{"reciprocal identity in k"};
    for (Index k = w.lo; k <= w.hi; ++k) {
      if (k == 0 || !all_in(w, {2 * m0 * k, -2 * m0 * k})) continue;
      try {
        const Scalar r = reciprocal_pair_residual(f, m0, k, a);
        ++s00.checked;
        if (r != 0) s00.fail("k = " + std::to_string(k) + ": " + to_string(r));
      } catch (const PreconditionError&) {
        ++s00.skipped;
      }
    }
    out.push_back(std::move(s00));

    SuiteCheck s01{"reciprocal identity in (k1,k2,k3)"};
    for (Index k1 = -kQuadRange; k1 <= kQuadRange; ++k1)
      for (Index k2 = -kQuadRange; k2 <= kQuadRange; ++k2)
        for (Index k3 = -kQuadRange; k3 <= kQuadRange; ++k3) {
          if (k2 == k3 || !all_in(w, {2 * m0 * k1, 2 * m0 * k2, 2 * m0 * k3, 2 * m0 * (k2 + k3 - k1)})) continue;
          try {
            const Scalar r = reciprocal_quad_residual(f, m0, k1, k2, k3);
            ++s01.checked;
            if (r != 0) s01.fail(args_text({k1, k2, k3}) + ": " + to_string(r));
          } catch (const PreconditionError&) {
            ++s01.skipped;
          }
        }
    out.push_back(std::move(s01));

    SuiteCheck sup{"supporters equal T_m0"};
    const SupporterSets sets = extract_supporters(f, w);
    ++sup.checked;
    if (!supporters_match(sets, MSupporter{m0})) sup.fail("W1 u U1 differs from T_m0 with m0 = " + std::to_string(m0));
    out.push_back(std::move(sup));
  }

  SuiteCheck klmn{"nonvanishing conclusions"};
  absorb(klmn, klmn_nonvanishing_report(f, w));
  out.push_back(std::move(klmn));
  return out;
}

std::vector<SuiteCheck> derived_01_branch(const SuiteConfig& cfg) {
  const CoeffSpec& f = *cfg.family;
  const Window w = cfg.window;
  if (f(0) != 0 || f(1) != -1) throw PreconditionError("needs f(0) = 0 and f(1) = -1");
  std::vector<SuiteCheck> out;
  out.push_back(four_items("zero-branch products", w,
                           [&](Index l, Index m, Index n) { return zero_branch_residuals(f, l, m, n); }));
  SuiteCheck cor{"zero-branch consequences"};
  absorb(cor, zero_branch_report(f, w));
  out.push_back(std::move(cor));
  SuiteCheck oe{"odd and even identities"};
  absorb(oe, odd_even_report(f, w));
  out.push_back(std::move(oe));
  return out;
}

}  // namespace

std::string_view to_string(Suite s) { return kSuiteNames[static_cast<int>(s)]; }

Suite parse_suite(std::string_view text) {
  for (int i = 0; i < 4; ++i)
    if (kSuiteNames[i] == text) return static_cast<Suite>(i);
  throw ParseError("unknown suite '" + std::string(text) +
                   "' (expected fundamental, derived-a-branch, derived-01-branch or det-criterion)");
}

void SuiteCheck::fail(std::string what) {
  if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(what));
  ++failed;
}

bool SuiteReport::passed() const noexcept {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.passed(); });
}

std::uint64_t SuiteReport::checked() const noexcept {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.checked;
  return n;
}

std::uint64_t SuiteReport::skipped() const noexcept {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.skipped;
  return n;
}

std::uint64_t SuiteReport::failed() const noexcept {
  std::uint64_t n = 0;
  for (const auto& c : checks) n += c.failed;
  return n;
}

SuiteReport run_suite(Suite suite, const SuiteConfig& cfg) {
  if (cfg.window.empty()) throw std::invalid_argument("empty window");
  SuiteReport rep{suite, cfg.window, {}};
  switch (suite) {
    case Suite::Fundamental: rep.checks.push_back(fundamental(cfg)); break;
    case Suite::DetCriterion: rep.checks.push_back(det_criterion(cfg.window)); break;
    case Suite::DerivedABranch:
    case Suite::Derived01Branch:
      if (!cfg.family) throw PreconditionError(std::string(to_string(suite)) + " needs a coefficient map");
      rep.checks = suite == Suite::DerivedABranch ? derived_a_branch(cfg) : derived_01_branch(cfg);
      break;
  }
  return rep;
}

// splitmix64: fixed output for a fixed seed on every platform.
IndexSampler::IndexSampler(std::uint64_t seed, Window w) : state_(seed), w_(w) {}

Index IndexSampler::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return w_.lo + static_cast<Index>(z % w_.size());
}

}  // namespace omega3rb
