#include "omega3rb/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "omega3rb/algebra.hpp"
#include "omega3rb/operator.hpp"

namespace omega3rb {

mpz_class enumeration_size(const SearchSpace& s) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(s.values.size()),
                static_cast<unsigned long>(s.window.size()));
  return out;
}

BudgetExceeded::BudgetExceeded(std::string estimate, std::uint64_t budget)
    : std::runtime_error("search needs " + estimate + " tables, budget is " + std::to_string(budget)),
      estimate_(std::move(estimate)) {}

namespace {

bool scalar_identity_mode(const SearchSpace& s) { return s.k == 0 && s.weight == 1; }

void add_unique(std::vector<Index>& v, Index i) {
  if (std::find(v.begin(), v.end(), i) == v.end()) v.push_back(i);
}

}  // namespace

InstanceSet build_instances(const SearchSpace& s) {
  InstanceSet out;
  const Window w = s.window;
  if (scalar_identity_mode(s)) {
    // Odd identity on (2l+1, 2m+1, 2n), symmetric in l and m; even identity
    // on (2l+1, 2m, 2n), symmetric in m and n.
    for (Index a = w.lo; a <= w.hi; ++a)
      for (Index b = w.lo; b <= w.hi; ++b)
        for (Index c = w.lo; c <= w.hi; ++c) {
          const bool odd = a % 2 != 0 && b % 2 != 0 && c % 2 == 0 && a < b;
          const bool even = a % 2 != 0 && b % 2 == 0 && c % 2 == 0 && b < c;
          if (!odd && !even) continue;
          const Index t = a + b + c - 1;  // 2l+2m+2n+1 (odd) or 2l+2m+2n (even)
          if (!w.contains(t)) {
            ++out.skipped;
            continue;
          }
          Instance in{odd ? Instance::Kind::Odd : Instance::Kind::Even, a, b, c, {}};
          for (Index i : {a, b, c, t}) add_unique(in.reads, i);
          out.enforced.push_back(std::move(in));
        }
    return out;
  }
  // General residual on (l, m, n) reading l+k, m+k, n+k and S+k, S+2k, S+3k.
  for (Index a = w.lo; a <= w.hi; ++a)
    for (Index b = w.lo; b <= w.hi; ++b)
      for (Index c = w.lo; c <= w.hi; ++c) {
        const Index l = a - s.k, m = b - s.k, n = c - s.k;
        const std::vector<Index> idx = residual_indices(s.k, l, m, n);
        if (!std::all_of(idx.begin(), idx.end(), [&](Index i) { return w.contains(i); })) {
          ++out.skipped;
          continue;
        }
        Instance in{Instance::Kind::General, l, m, n, {}};
        for (Index i : idx) add_unique(in.reads, i);
        if (det3_int(l, m, n) != 0) out.reachable.insert(l + m + n + s.k - 1);
        out.enforced.push_back(std::move(in));
      }
  return out;
}

namespace {

class Solver {
 public:
  Solver(const SearchSpace& s, const InstanceSet& inst) : s_(s), inst_(inst.enforced) { plan(); }

  const std::vector<std::size_t>& order() const { return order_; }

  // Enumerates completions of `val` from `step` on; appends full tables.
  void dfs(std::vector<int>& val, std::size_t step, std::vector<std::vector<int>>& out, std::uint64_t& nodes) const {
    if (step == order_.size()) {
      out.push_back(val);
      return;
    }
    const std::size_t pos = order_[step];
    for (int v = 0; v < static_cast<int>(s_.values.size()); ++v) {
      ++nodes;
      val[pos] = v;
      if (consistent(val, step)) dfs(val, step + 1, out, nodes);
    }
    val[pos] = -1;
  }

  // All assignments of the first `depth` variables passing their checks.
  void prefixes(std::vector<int>& val, std::size_t step, std::size_t depth, std::vector<std::vector<int>>& out,
                std::uint64_t& nodes) const {
    if (step == depth) {
      out.push_back(val);
      return;
    }
    const std::size_t pos = order_[step];
    for (int v = 0; v < static_cast<int>(s_.values.size()); ++v) {
      ++nodes;
      val[pos] = v;
      if (consistent(val, step)) prefixes(val, step + 1, depth, out, nodes);
    }
    val[pos] = -1;
  }

 private:
  // Greedy order: next variable completes the most instances; ties go to
  // the variable read by most instances, then to the smallest |index|.
  void plan() {
    const std::size_t n = s_.window.size();
    std::vector<std::vector<std::size_t>> touching(n);
    std::vector<std::size_t> missing(inst_.size());
    for (std::size_t i = 0; i < inst_.size(); ++i) {
      missing[i] = inst_[i].reads.size();
      for (Index r : inst_[i].reads) touching[pos(r)].push_back(i);
    }
    std::vector<bool> used(n, false);
    checks_.assign(n, {});
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      std::size_t best_done = 0, best_touch = 0;
      for (std::size_t v = 0; v < n; ++v) {
        if (used[v]) continue;
        std::size_t done = 0;
        for (std::size_t i : touching[v])
          if (missing[i] == 1) ++done;
        const std::size_t touch = touching[v].size();
        auto dist = [&](std::size_t p) {
          const Index i = s_.window.lo + static_cast<Index>(p);
          return i < 0 ? -i : i;
        };
        if (best == n || done > best_done || (done == best_done && touch > best_touch) ||
            (done == best_done && touch == best_touch && dist(v) < dist(best))) {
          best = v;
          best_done = done;
          best_touch = touch;
        }
      }
      used[best] = true;
      order_.push_back(best);
      for (std::size_t i : touching[best])
        if (--missing[i] == 0) checks_[step].push_back(i);
    }
  }

  std::size_t pos(Index i) const { return static_cast<std::size_t>(i - s_.window.lo); }
  const Scalar& F(const std::vector<int>& val, Index i) const { return s_.values[val[pos(i)]]; }

  bool consistent(const std::vector<int>& val, std::size_t step) const {
    for (std::size_t i : checks_[step])
      if (!holds(val, inst_[i])) return false;
    return true;
  }

  bool holds(const std::vector<int>& val, const Instance& in) const {
    if (in.kind != Instance::Kind::General) {
      const Scalar& x = F(val, in.l);
      const Scalar& y = F(val, in.m);
      const Scalar& z = F(val, in.n);
      const Scalar& t = F(val, in.l + in.m + in.n - 1);
      return x * y * z == (x * y + x * z + y * z + x + y + z + 1) * t;
    }
    const Index k = s_.k, l = in.l, m = in.m, n = in.n, S = l + m + n - 1;
    const Scalar& fl = F(val, l + k);
    const Scalar& fm = F(val, m + k);
    const Scalar& fn = F(val, n + k);
    auto D = [](Index a, Index b, Index c) { return Scalar(static_cast<long>(det3_int(a, b, c))); };
    const Scalar& lam = s_.weight;
    const Scalar c3 = fl * fm * fn * D(l + k, m + k, n + k) -
                      F(val, S + 3 * k) * (fm * fn * D(l, m + k, n + k) + fl * fn * D(l + k, m, n + k) +
                                           fl * fm * D(l + k, m + k, n));
    const Scalar c2 = -lam * F(val, S + 2 * k) * (fl * D(l + k, m, n) + fm * D(l, m + k, n) + fn * D(l, m, n + k));
    const Scalar c1 = -lam * lam * F(val, S + k) * D(l, m, n);
    if (k == 0) return c3 + c2 + c1 == 0;
    return c3 == 0 && c2 == 0 && c1 == 0;
  }

  const SearchSpace& s_;
  const std::vector<Instance>& inst_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::size_t>> checks_;
};

bool table_less(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::vector<Solution> enumerate_solutions(const SearchSpace& s, unsigned workers, SearchStats* stats) {
  if (s.window.empty()) throw std::invalid_argument("search window is empty");
  if (s.values.empty()) throw std::invalid_argument("search value set is empty");
  {
    std::vector<Scalar> sorted = s.values;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("search value set has duplicates");
  }
  const mpz_class size = enumeration_size(s);
  if (size > mpz_class(std::to_string(s.budget))) throw BudgetExceeded(size.get_str(), s.budget);

  const InstanceSet inst = build_instances(s);
  const Solver solver(s, inst);
  const unsigned nthreads = resolve_workers(workers);

  std::vector<int> val(s.window.size(), -1);
  std::vector<std::vector<int>> raw;
  std::uint64_t nodes = 0;
  if (nthreads <= 1) {
    solver.dfs(val, 0, raw, nodes);
  } else {
    // Split the tree at a depth giving several subtrees per worker.
    std::size_t depth = 0;
    for (std::uint64_t leaves = 1; depth < solver.order().size() && leaves < 8ULL * nthreads; ++depth)
      leaves *= s.values.size();
    std::vector<std::vector<int>> roots;
    solver.prefixes(val, 0, depth, roots, nodes);
    std::vector<std::vector<std::vector<int>>> found(roots.size());
    std::vector<std::uint64_t> counts(nthreads, 0);
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t r; (r = next.fetch_add(1)) < roots.size();) {
          std::vector<int> v = roots[r];
          solver.dfs(v, depth, found[r], counts[t]);
        }
      });
    for (auto& th : pool) th.join();
    for (auto c : counts) nodes += c;
    for (auto& f : found)
      for (auto& t : f) raw.push_back(std::move(t));
  }

  std::vector<Solution> out;
  out.reserve(raw.size());
  for (const auto& r : raw) {
    Solution sol{s.window, {}, inst.enforced.size(), inst.skipped};
    sol.table.reserve(r.size());
    for (int v : r) sol.table.push_back(s.values[v]);
    out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end(), [](const Solution& a, const Solution& b) { return table_less(a.table, b.table); });

  if (stats) {
    stats->nodes = nodes;
    stats->instances = inst.enforced.size();
    stats->skipped_instances = inst.skipped;
    stats->order.clear();
    for (std::size_t p : solver.order()) stats->order.push_back(s.window.lo + static_cast<Index>(p));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string match_key(CaseId id, Reading r) {
  return std::string(to_string(id)) + (r == Reading::Amended ? "+amended" : "");
}

const std::vector<Scalar>& fallback_scalars() {
  static const std::vector<Scalar> v = {Scalar(0), Scalar(-1), Scalar(2), Scalar(-3), Scalar(1, 2), Scalar(5)};
  return v;
}

namespace {

// Index whose coefficient equals each scalar parameter, given the integers.
std::map<std::string, Index> scalar_locations(CaseId id, Reading r, const FamilyParams& p) {
  const bool am = r == Reading::Amended;
  auto I = [&](const char* n) { return p.int_at(n); };
  switch (id) {
    case CaseId::FIN_3:
    case CaseId::FIN_4: return {{"f0", 0}, {"f1", 1}};
    case CaseId::F0A_1:
    case CaseId::F0A_2: return {{"a", 0}};
    case CaseId::F0A1_2: return {{"c", 2 * I("n0") + 1}};
    case CaseId::F0A1_4: return {{"h", 2 * I("m0")}};
    case CaseId::F0A3_A2: return {{"c", -1}, {"d", -3}};
    case CaseId::F0A3_A3: return {{"cprime", am ? -3 : 3}};
    case CaseId::F0A3_A4: return {{"g", -1}};
    case CaseId::F0A3_B2: return {{"c", 3}};
    case CaseId::F0A3_B3: return am ? std::map<std::string, Index>{{"cprime", 3}, {"dprime", 5}}
                                    : std::map<std::string, Index>{{"cprime", -1}, {"dprime", -3}};
    case CaseId::F0A3_B4: return {{"g", am ? 3 : -1}};
    case CaseId::F0A3_A5:
    case CaseId::F0A3_B5: return {{"h", 2 * I("m1")}};
    case CaseId::F0A3_A6:
    case CaseId::F0A3_B6: return {{"h", 2 * I("m1")}, {"hprime", 2 * I("n1") + 1}};
    case CaseId::F0A3_A7:
    case CaseId::F0A3_B7: return {{"g", 2 * I("m1")}, {"r", 2 * I("m2")}};
    default: return {};
  }
}

// Odometer over [-radius, radius]^n; false once it wraps around.
bool advance(std::vector<Index>& ints, Index radius) {
  std::size_t j = 0;
  while (j < ints.size() && ++ints[j] > radius) ints[j++] = -radius;
  return j < ints.size();
}

bool agrees(const CoeffSpec& f, const Solution& sol, Window inner) {
  for (Index i = inner.lo; i <= inner.hi; ++i)
    if (f(i) != sol.at(i)) return false;
  return true;
}

std::optional<FamilyParams> find_params(CaseId id, Reading reading, const Solution& sol, Window inner, Index radius) {
  const CaseInfo& info = case_info(id);
  const std::size_t ni = info.int_params.size();
  std::vector<Index> ints(ni, -radius);
  while (true) {
    FamilyParams p;
    for (std::size_t j = 0; j < ni; ++j) p.ints[info.int_params[j]] = ints[j];
    // Every scalar condition of a case with integer parameters accepts 1, so
    // this probe rejects an integer tuple once instead of once per scalar pick.
    for (const auto& name : info.scalar_params) p.scalars[name] = 1;
    if (ni > 0 && param_violation(id, p)) {
      if (!advance(ints, radius)) break;
      continue;
    }

    const auto loc = scalar_locations(id, reading, p);
    std::vector<std::vector<Scalar>> cands;
    for (const auto& name : info.scalar_params) {
      const Index at = loc.at(name);
      cands.push_back(inner.contains(at) ? std::vector<Scalar>{sol.at(at)} : fallback_scalars());
    }
    std::vector<std::size_t> pick(cands.size(), 0);
    while (true) {
      for (std::size_t j = 0; j < cands.size(); ++j) p.scalars[info.scalar_params[j]] = cands[j][pick[j]];
      if (!param_violation(id, p) && agrees(build_family(id, p, reading), sol, inner)) return p;
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == cands[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }

    if (!advance(ints, radius)) break;
  }
  return std::nullopt;
}

}  // namespace

Explanation explain(const Solution& sol, Index inner_margin) {
  if (inner_margin < 0) throw std::invalid_argument("inner margin must be >= 0");
  Explanation ex{sol, sol.window.shrink(inner_margin), {}};
  if (ex.inner.empty()) throw std::invalid_argument("inner window is empty");
  const Index radius = std::max(-sol.window.lo, sol.window.hi);
  for (CaseId id : all_cases()) {
    std::vector<Reading> readings{Reading::Literal};
    if (case_info(id).has_amended) readings.push_back(Reading::Amended);
    for (Reading r : readings)
      if (auto p = find_params(id, r, sol, ex.inner, radius)) ex.matches.push_back({id, r, *p});
  }
  return ex;
}

CompletenessReport completeness_report(const SearchSpace& s, Index inner_margin, unsigned workers) {
  CompletenessReport rep;
  rep.space = s;
  rep.margin = inner_margin;
  const std::vector<Solution> sols = enumerate_solutions(s, workers, &rep.stats);
  if (s.k != 0) rep.reachable = build_instances(s).reachable;
  for (const Solution& sol : sols) {
    Explanation ex = explain(sol, inner_margin);
    if (ex.unexplained()) ++rep.unexplained_count;
    for (const Match& m : ex.matches) ++rep.explained_per_case[match_key(m.id, m.reading)];
    if (s.k != 0 && std::any_of(rep.reachable.begin(), rep.reachable.end(),
                                [&](Index i) { return sol.at(i) != 0; }))
      ++rep.collapse_violations;
    rep.explanations.push_back(std::move(ex));
  }
  rep.notes.push_back("instances reading an index outside " + to_string(s.window) +
                      " are skipped; window solutions over-approximate restrictions of true operators");
  rep.notes.push_back("matches compare the inner window " + to_string(s.window.shrink(inner_margin)) +
                      " only; integer parameters searched over the window radius");
  if (s.k != 0)
    rep.notes.push_back("reachable set is l+m+n+k-1 over enforced instances with D(l,m,n) != 0");
  return rep;
}

}  // namespace omega3rb
