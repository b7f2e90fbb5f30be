#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "omega3rb/catalog.hpp"
#include "omega3rb/element.hpp"

namespace omega3rb {

/// k-order homogeneous operator: R(L_m) = f(m+k) L_{m+k}.
struct HomOp {
  Index k = 0;
  CoeffSpec f;
};

struct Weight {
  Scalar lambda{1};
};

class InvalidWeight : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Triple {
  Index l = 0, m = 0, n = 0;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A triple whose residual needs a coefficient the map does not cover.
struct SkippedTriple {
  Triple triple;
  Index missing;
};

using ResidualResult = std::variant<Element, SkippedTriple>;

/// Linear extension of R(L_m) = f(m+k) L_{m+k}. Throws UncoveredIndex.
Element apply(const HomOp& R, const Element& x);

/// The six coefficient indices a residual on (l,m,n) reads:
/// l+k, m+k, n+k and l+m+n-1 shifted by k, 2k, 3k.
std::vector<Index> residual_indices(Index k, Index l, Index m, Index n);

/// [RL_l, RL_m, RL_n] - R([RL_l, RL_m, L_n] + [RL_l, L_m, RL_n] + [L_l, RL_m, RL_n]
///   + w[RL_l, L_m, L_n] + w[L_l, RL_m, L_n] + w[L_l, L_m, RL_n] + w^2 [L_l, L_m, L_n]),
/// evaluated through apply and bracket.
ResidualResult rb_residual(const HomOp& R, const Weight& w, Index l, Index m, Index n);

/// The same residual from the closed per-component expansion on the
/// indices S+3k, S+2k, S+k with S = l+m+n-1.
ResidualResult rb_residual_expanded(const HomOp& R, const Weight& w, Index l, Index m, Index n);

/// Same k, f' = f / lambda. Throws InvalidWeight when lambda = 0.
HomOp rescale_weight(const HomOp& R, const Weight& w);

struct Witness {
  Triple triple;
  Element residual;
};

inline constexpr std::size_t kMaxWitnesses = 10;

/// Outcome of checking the residual on every triple of window^3.
struct ResidualReport {
  std::string operator_label;
  Index k = 0;
  Scalar weight{1};
  Window window;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t failed = 0;
  std::vector<Witness> witnesses;       // first kMaxWitnesses failures, lexicographic
  std::set<Index> uncovered;            // coefficient indices behind skipped triples
  std::vector<std::string> notes;

  bool passed() const noexcept { return failed == 0; }
};

/// Checks rb_residual on all (l,m,n) in window^3. Work is split by l across
/// `workers` threads (0 = hardware concurrency); the report does not depend
/// on the worker count.
ResidualReport sweep_residuals(const HomOp& R, const Weight& w, Window window, unsigned workers = 1);

/// Result of the k != 0 collapse check on a window.
struct CollapseReport {
  ResidualReport residuals;
  std::set<Index> reachable;            // l+m+n+k-1 over window triples with D != 0
  std::vector<Index> nonzero_on_reachable;
  bool passed() const noexcept { return residuals.passed() && nonzero_on_reachable.empty(); }
};

/// For k != 0: sweeps the window and confirms that f vanishes on every index
/// l+m+n+k-1 with D(l,m,n) != 0 and (l,m,n) in window^3. Throws
/// PreconditionError when k = 0.
CollapseReport check_k_collapse(const HomOp& R, Window window, unsigned workers = 1);

unsigned resolve_workers(unsigned requested);

}  // namespace omega3rb
