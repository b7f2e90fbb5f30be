#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omega3rb/catalog.hpp"
#include "omega3rb/operator.hpp"

namespace omega3rb {

// All residuals are LHS - RHS. An uncovered table index surfaces as
// UncoveredIndex, which sweeps count as a skipped instance.

/// f(2l+1)f(2m+1)f(2n) - [f(2l+1)f(2m+1) + f(2l+1)f(2n) + f(2m+1)f(2n)
///   + f(2l+1) + f(2m+1) + f(2n) + 1] f(2l+2m+2n+1); needs l != m.
Scalar odd_residual(const CoeffSpec& f, Index l, Index m, Index n);

/// f(2l+1)f(2m)f(2n) - [...] f(2l+2m+2n); needs m != n.
Scalar even_residual(const CoeffSpec& f, Index l, Index m, Index n);

/// (f(0)+f(1)+1) f(m) (f(m)+1); needs m not in {0, 1}.
Scalar zero_or_minus_one_residual(const CoeffSpec& f, Index m);

/// The four identities of the f(0) = a, f(1) = -1-a branch. Item i is
/// nullopt when its side condition fails (1: l != m, 2: m != 0, 3: m != 0,
/// 4: m != n). Items 1 and 3 read (l, m); items 2 and 4 read (m, n).
/// Throws PreconditionError unless f(0) = a and f(1) = -1-a.
std::array<std::optional<Scalar>, 4> a_branch_residuals(const CoeffSpec& f, const Scalar& a, Index l, Index m,
                                                        Index n);

/// f(1-m) + f(m) + 1
Scalar reflection_residual(const CoeffSpec& f, Index m);

/// 1/x + 1/y + 1/(xy) - (1+2a)/a^2 with x = f(2 m0 k), y = f(-2 m0 k).
Scalar reciprocal_pair_residual(const CoeffSpec& f, Index m0, Index k, const Scalar& a);

/// 1/x1 + 1/(x1 x4) + 1/x4 - [1/x2 + 1/(x3 x2) + 1/x3] with x1 = f(2m0 k1),
/// x2 = f(2m0 k2), x3 = f(2m0 k3), x4 = f(2m0(k2+k3-k1)); needs k2 != k3
/// and all four values nonzero.
Scalar reciprocal_quad_residual(const CoeffSpec& f, Index m0, Index k1, Index k2, Index k3);

/// The four products of the f(0) = 0, f(1) = -1 branch:
/// 1) (f(2l+1)+1)(f(2m+1)+1) f(2l+2m+1), l != m
/// 2) f(2m+1) f(2n) (1+f(2m+2n+1)), m != 0
/// 3) (f(2l+1)+1)(f(2m)+1) f(2l+2m), m != 0
/// 4) f(2m) f(2n) (1+f(2m+2n)), m != n
/// nullopt marks a failed side condition. Throws PreconditionError unless
/// f(0) = 0 and f(1) = -1.
std::array<std::optional<Scalar>, 4> zero_branch_residuals(const CoeffSpec& f, Index l, Index m, Index n);

// ---------------------------------------------------------------------------
// Window reports

struct Violation {
  int item = 0;                 // 0 for the odd/even identities
  std::vector<Index> args;      // the quantified variables, in printed order
  Index index = 0;              // coefficient index of the failed conclusion
  Scalar value;                 // residual, or the offending coefficient
  std::string what;
};

struct ConstraintReport {
  std::string name;
  Window window;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool passed() const noexcept { return violations.empty(); }
};

/// Every odd instance (2l+1, 2m+1, 2n; l != m) and even instance
/// (2l+1, 2m, 2n; m != n) whose four indices lie in the window.
ConstraintReport odd_even_report(const CoeffSpec& f, Window window);

/// All eleven nonvanishing conclusions over (k, l, m, n) with klmn != 0 and
/// f(2k), f(2l), f(2m+1), f(2n+1) nonzero, the four hypothesis indices in
/// the window. Throws PreconditionError unless f(0) = a != 0 and
/// f(0) + f(1) + 1 = 0.
ConstraintReport klmn_nonvanishing_report(const CoeffSpec& f, Window window);

/// Items 1-6 of the f(0) = 0, f(1) = -1 consequences on the window; item 7
/// (|W2| = |U1| = infinity) only adds a density note. Throws
/// PreconditionError unless f(0) = 0 and f(1) = -1.
ConstraintReport zero_branch_report(const CoeffSpec& f, Window window);

// ---------------------------------------------------------------------------
// Supporter sets

struct SupporterSets {
  Window window;
  std::set<Index> W1, W2;   // nonzero even indices with f != 0 / f = 0
  std::set<Index> U1, U2;   // odd indices other than 1 with f != 0 / f = 0

  /// Each set has an element in both the negative and positive half of the
  /// window. This is how an infinite set looks on a finite window.
  bool dense(const std::set<Index>& s) const;
};

SupporterSets extract_supporters(const CoeffSpec& f, Window window);

/// T_{m0} = {2 m0 k : k != 0} u {2 m0 k + 1 : k in Z}
struct MSupporter {
  Index m0;
  bool contains(Index i) const;
};

/// W1 and U1 equal T_{m0} on the window indices the supporter sets range
/// over (index 1 belongs to T_{m0} but never to U1).
bool supporters_match(const SupporterSets& s, const MSupporter& t);

}  // namespace omega3rb
