#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "omega3rb/catalog.hpp"

namespace omega3rb {

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

struct SearchSpace {
  Window window;
  std::vector<Scalar> values;
  Index k = 0;
  Scalar weight{1};
  std::uint64_t budget = kDefaultBudget;
};

/// |values|^(window size), exactly.
mpz_class enumeration_size(const SearchSpace& s);

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string estimate, std::uint64_t budget);
  const std::string& estimate() const noexcept { return estimate_; }

 private:
  std::string estimate_;
};

/// One constraint instance: the window indices it reads, and for k = 0 at
/// weight 1 which scalar identity it is.
struct Instance {
  enum class Kind { Odd, Even, General };
  Kind kind;
  Index l, m, n;
  std::vector<Index> reads;
};

/// Instances of a search space. Those reading an out-of-window index are
/// counted in `skipped` and not enforced.
struct InstanceSet {
  std::vector<Instance> enforced;
  std::uint64_t skipped = 0;
  std::set<Index> reachable;   // k != 0: l+m+n+k-1 over enforced instances with D(l,m,n) != 0
};

/// At k = 0 and weight 1: the odd (l < m) and even (m < n) identities.
/// Otherwise: every triple whose six residual indices lie in the window.
InstanceSet build_instances(const SearchSpace& s);

struct Solution {
  Window window;
  std::vector<Scalar> table;   // values on window.lo .. window.hi
  std::uint64_t checked_triples = 0;
  std::uint64_t skipped_triples = 0;

  const Scalar& at(Index i) const { return table[static_cast<std::size_t>(i - window.lo)]; }
  CoeffSpec as_coeffs() const { return CoeffSpec::table(window, table); }
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t instances = 0;
  std::uint64_t skipped_instances = 0;
  std::vector<Index> order;    // variable assignment order
};

/// Every table on the window with values in s.values satisfying all enforced
/// instances, sorted lexicographically by value. Throws BudgetExceeded.
/// Output is identical for every worker count.
std::vector<Solution> enumerate_solutions(const SearchSpace& s, unsigned workers = 1, SearchStats* stats = nullptr);

// ---------------------------------------------------------------------------

struct Match {
  CaseId id;
  Reading reading;
  FamilyParams params;
};

std::string match_key(CaseId id, Reading r);   // "RM1-6" or "RM1-6+amended"

struct Explanation {
  Solution solution;
  Window inner;
  std::vector<Match> matches;   // first parameter choice per (case, reading)
  bool unexplained() const noexcept { return matches.empty(); }
};

/// Fallback values for scalar parameters whose defining index lies outside
/// the inner window.
const std::vector<Scalar>& fallback_scalars();

/// Finds every (case, reading) with parameters whose restriction agrees with
/// the solution on the window shrunk by inner_margin. Integer parameters
/// range over [-N, N] for the window radius N; scalar parameters are read off
/// the table at the index that defines them.
Explanation explain(const Solution& sol, Index inner_margin);

struct CompletenessReport {
  SearchSpace space;
  Index margin = 0;
  SearchStats stats;
  std::vector<Explanation> explanations;
  std::map<std::string, std::size_t> explained_per_case;
  std::size_t unexplained_count = 0;
  /// k != 0 only: solutions that are nonzero somewhere on the reachable set.
  std::size_t collapse_violations = 0;
  std::set<Index> reachable;
  std::vector<std::string> notes;
};

CompletenessReport completeness_report(const SearchSpace& s, Index inner_margin, unsigned workers = 1);

}  // namespace omega3rb
