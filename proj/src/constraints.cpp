#include "omega3rb/constraints.hpp"

namespace omega3rb {

namespace {

// c1 c2 c3 - (c1c2 + c1c3 + c2c3 + c1 + c2 + c3 + 1) r
Scalar scalar_form(const Scalar& c1, const Scalar& c2, const Scalar& c3, const Scalar& r) {
  return c1 * c2 * c3 - (c1 * c2 + c1 * c3 + c2 * c3 + c1 + c2 + c3 + 1) * r;
}

void require_a_branch(const CoeffSpec& f, const Scalar& a) {
  if (f(0) != a || f(1) != -1 - a)
    throw PreconditionError("needs f(0) = a and f(1) = -1-a with a = " + to_string(a));
}

void require_zero_branch(const CoeffSpec& f) {
  if (f(0) != 0 || f(1) != -1) throw PreconditionError("needs f(0) = 0 and f(1) = -1");
}

std::string describe(int item, const std::string& text) { return std::to_string(item) + ") " + text; }

// Index ranges so that 2k (even) or 2m+1 (odd) lies in the window.
Index even_lo(Window w) { return (w.lo + (w.lo < 0 ? 0 : 1)) / 2; }
Index even_hi(Window w) { return (w.hi - (w.hi < 0 ? 1 : 0)) / 2; }
Index odd_lo(Window w) { return even_lo({w.lo - 1, w.hi - 1}); }
Index odd_hi(Window w) { return even_hi({w.lo - 1, w.hi - 1}); }

}  // namespace

Scalar odd_residual(const CoeffSpec& f, Index l, Index m, Index n) {
  if (l == m) throw PreconditionError("odd residual needs l != m");
  return scalar_form(f(2 * l + 1), f(2 * m + 1), f(2 * n), f(2 * l + 2 * m + 2 * n + 1));
}

Scalar even_residual(const CoeffSpec& f, Index l, Index m, Index n) {
  if (m == n) throw PreconditionError("even residual needs m != n");
  return scalar_form(f(2 * l + 1), f(2 * m), f(2 * n), f(2 * l + 2 * m + 2 * n));
}

Scalar zero_or_minus_one_residual(const CoeffSpec& f, Index m) {
  if (m == 0 || m == 1) throw PreconditionError("needs m not in {0, 1}");
  const Scalar fm = f(m);
  return (f(0) + f(1) + 1) * fm * (fm + 1);
}

std::array<std::optional<Scalar>, 4> a_branch_residuals(const CoeffSpec& f, const Scalar& a, Index l, Index m,
                                                        Index n) {
  require_a_branch(f, a);
  const Scalar a1 = a + 1;
  std::array<std::optional<Scalar>, 4> out;
  if (l != m) {
    const Scalar x = f(2 * l + 1), y = f(2 * m + 1);
    out[0] = a * x * y - (a1 * x + a1 * y + x * y + a1) * f(2 * l + 2 * m + 1);
  }
  if (m != 0) {
    const Scalar x = f(2 * m + 1), y = f(2 * n);
    out[1] = -a1 * x * y - (-a * x - a * y + x * y - a) * f(2 * m + 2 * n + 1);
  }
  if (m != 0) {
    const Scalar x = f(2 * l + 1), y = f(2 * m);
    out[2] = a * x * y - (a1 * x + a1 * y + x * y + a1) * f(2 * l + 2 * m);
  }
  if (m != n) {
    const Scalar x = f(2 * m), y = f(2 * n);
    out[3] = -a1 * x * y - (-a * x - a * y + x * y - a) * f(2 * m + 2 * n);
  }
  return out;
}

Scalar reflection_residual(const CoeffSpec& f, Index m) { return f(1 - m) + f(m) + 1; }

Scalar reciprocal_pair_residual(const CoeffSpec& f, Index m0, Index k, const Scalar& a) {
  if (k == 0) throw PreconditionError("needs k != 0");
  if (a == 0) throw PreconditionError("needs a != 0");
  const Scalar x = f(2 * m0 * k), y = f(-2 * m0 * k);
  if (x == 0 || y == 0) throw PreconditionError("needs f(2 m0 k) and f(-2 m0 k) nonzero");
  return 1 / x + 1 / y + 1 / (x * y) - (1 + 2 * a) / (a * a);
}

Scalar reciprocal_quad_residual(const CoeffSpec& f, Index m0, Index k1, Index k2, Index k3) {
  if (k2 == k3) throw PreconditionError("needs k2 != k3");
  const Scalar x1 = f(2 * m0 * k1), x2 = f(2 * m0 * k2), x3 = f(2 * m0 * k3);
  const Scalar x4 = f(2 * m0 * (k2 + k3 - k1));
  if (x1 == 0 || x2 == 0 || x3 == 0 || x4 == 0) throw PreconditionError("needs all four values nonzero");
  return (1 / x1 + 1 / (x1 * x4) + 1 / x4) - (1 / x2 + 1 / (x3 * x2) + 1 / x3);
}

std::array<std::optional<Scalar>, 4> zero_branch_residuals(const CoeffSpec& f, Index l, Index m, Index n) {
  require_zero_branch(f);
  std::array<std::optional<Scalar>, 4> out;
  if (l != m) out[0] = (f(2 * l + 1) + 1) * (f(2 * m + 1) + 1) * f(2 * l + 2 * m + 1);
  if (m != 0) out[1] = f(2 * m + 1) * f(2 * n) * (1 + f(2 * m + 2 * n + 1));
  if (m != 0) out[2] = (f(2 * l + 1) + 1) * (f(2 * m) + 1) * f(2 * l + 2 * m);
  if (m != n) out[3] = f(2 * m) * f(2 * n) * (1 + f(2 * m + 2 * n));
  return out;
}

// ---------------------------------------------------------------------------

ConstraintReport odd_even_report(const CoeffSpec& f, Window w) {
  ConstraintReport rep;
  rep.name = "odd-even";
  rep.window = w;
  const Index olo = odd_lo(w), ohi = odd_hi(w), elo = even_lo(w), ehi = even_hi(w);
  for (Index l = olo; l <= ohi; ++l) {
    for (Index m = olo; m <= ohi; ++m) {
      if (l == m) continue;
      for (Index n = elo; n <= ehi; ++n) {
        const Index t = 2 * l + 2 * m + 2 * n + 1;
        if (!w.contains(t)) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        Scalar r = odd_residual(f, l, m, n);
        if (r != 0) rep.violations.push_back({0, {l, m, n}, t, r, "odd identity"});
      }
    }
    for (Index m = elo; m <= ehi; ++m)
      for (Index n = elo; n <= ehi; ++n) {
        if (m == n) continue;
        const Index t = 2 * l + 2 * m + 2 * n;
        if (!w.contains(t)) {
          ++rep.skipped;
          continue;
        }
        ++rep.checked;
        Scalar r = even_residual(f, l, m, n);
        if (r != 0) rep.violations.push_back({0, {l, m, n}, t, r, "even identity"});
      }
  }
  if (rep.skipped) rep.notes.push_back("instances reading an index outside the window are skipped");
  return rep;
}

namespace {

// Runs `check(index)` for one conclusion; records skips and violations.
template <typename Pred>
void conclude(ConstraintReport& rep, const CoeffSpec& f, int item, std::vector<Index> args, Index index,
              const char* text, Pred ok) {
  std::optional<Scalar> v;
  try {
    v = f(index);
  } catch (const UncoveredIndex&) {
    ++rep.skipped;
    return;
  }
  ++rep.checked;
  if (!ok(*v)) rep.violations.push_back({item, std::move(args), index, *v, describe(item, text)});
}

std::vector<Index> collect(const CoeffSpec& f, Index lo, Index hi, bool odd, bool want_nonzero) {
  std::vector<Index> out;
  for (Index v = lo; v <= hi; ++v) {
    if (v == 0) continue;
    if ((f(odd ? 2 * v + 1 : 2 * v) != 0) == want_nonzero) out.push_back(v);
  }
  return out;
}

}  // namespace

ConstraintReport klmn_nonvanishing_report(const CoeffSpec& f, Window w) {
  const Scalar a = f(0);
  if (a == 0 || f(0) + f(1) + 1 != 0) throw PreconditionError("needs f(0) = a != 0 and f(0) + f(1) + 1 = 0");
  ConstraintReport rep;
  rep.name = "klmn";
  rep.window = w;
  const std::vector<Index> K = collect(f, even_lo(w), even_hi(w), false, true);
  const std::vector<Index> M = collect(f, odd_lo(w), odd_hi(w), true, true);
  if (K.empty() || M.empty()) {
    rep.notes.push_back("hypotheses unmet on the window: no nonzero k or m with f(2k), f(2m+1) != 0");
    return rep;
  }
  auto nz = [](const Scalar& v) { return v != 0; };
  auto not_minus_one = [](const Scalar& v) { return v != -1; };

  for (Index k : K) {
    for (Index l : K) conclude(rep, f, 1, {k, l}, 2 * k + 2 * l, "f(2k+2l) != 0", nz);
    for (Index m : M) {
      conclude(rep, f, 2, {k, m}, 2 * k + 2 * m, "f(2k+2m) != 0", nz);
      conclude(rep, f, 3, {k, m}, 2 * k + 2 * m + 1, "f(2k+2m+1) != 0", nz);
      if (m != -k) conclude(rep, f, 7, {k, m}, 1 - 2 * k + 2 * m, "f(1-2k+2m) != 0", nz);
      conclude(rep, f, 9, {k, m}, 1 - 2 * k - 2 * m, "f(1-2k-2m)+1 != 0", not_minus_one);
      conclude(rep, f, 10, {k, m}, 2 * k - 2 * m, "f(2k-2m)+1 != 0", not_minus_one);
    }
    conclude(rep, f, 8, {k}, 4 * k, "f(4k) != 0", nz);
    conclude(rep, f, 11, {k}, 1 - 4 * k, "f(1-4k)+1 != 0", not_minus_one);
  }
  for (Index m : M)
    for (Index n : M) {
      conclude(rep, f, 4, {m, n}, 2 * m + 2 * n + 1, "f(2m+2n+1) != 0", nz);
      for (Index k : K) conclude(rep, f, 5, {m, n, k}, 2 * m + 2 * n + 2 * k + 1, "f(2m+2n+2k+1) != 0", nz);
    }
  for (Index m : M)
    for (Index k : K)
      for (Index l : K) conclude(rep, f, 6, {m, k, l}, 2 * m + 2 * k + 2 * l, "f(2m+2k+2l) != 0", nz);
  rep.notes.push_back("variables range over k, l, m, n with 2k, 2l, 2m+1, 2n+1 in " + to_string(w));
  return rep;
}

ConstraintReport zero_branch_report(const CoeffSpec& f, Window w) {
  require_zero_branch(f);
  ConstraintReport rep;
  rep.name = "zero-branch consequences";
  rep.window = w;
  const Index elo = even_lo(w), ehi = even_hi(w), olo = odd_lo(w), ohi = odd_hi(w);
  const std::vector<Index> Knz = collect(f, elo, ehi, false, true);
  const std::vector<Index> Kz = collect(f, elo, ehi, false, false);
  const std::vector<Index> Mnz = collect(f, olo, ohi, true, true);
  const std::vector<Index> Mz = collect(f, olo, ohi, true, false);
  auto is_minus_one = [](const Scalar& v) { return v == -1; };
  auto is_zero = [](const Scalar& v) { return v == 0; };

  for (Index k : Knz)
    for (Index l : Knz)
      if (k != l && k != -l) conclude(rep, f, 1, {k, l}, 2 * k + 2 * l, "f(2k+2l) = -1", is_minus_one);
  for (Index k : Knz)
    for (Index m : Mnz) conclude(rep, f, 2, {k, m}, 2 * k + 2 * m + 1, "f(2k+2m+1) = -1", is_minus_one);
  for (Index k : Kz)
    for (Index n : Mz) conclude(rep, f, 3, {k, n}, 2 * k + 2 * n, "f(2k+2n) = 0", is_zero);
  for (Index m : Mz)
    for (Index n : Mz)
      if (m != n && m != -n) conclude(rep, f, 4, {m, n}, 2 * m + 2 * n + 1, "f(2m+2n+1) = 0", is_zero);
  for (Index k = elo; k <= ehi; ++k) {
    if (k == 0 || !w.contains(-2 * k)) continue;
    ++rep.checked;
    const Scalar p = f(2 * k) * f(-2 * k);
    if (p != 0) rep.violations.push_back({5, {k}, 2 * k, p, describe(5, "f(2k)f(-2k) = 0")});
  }
  for (Index m = olo; m <= ohi; ++m) {
    if (!w.contains(-2 * m + 1)) continue;
    ++rep.checked;
    const Scalar p = (f(2 * m + 1) + 1) * (f(-2 * m + 1) + 1);
    if (p != 0) rep.violations.push_back({6, {m}, 2 * m + 1, p, describe(6, "(f(2m+1)+1)(f(-2m+1)+1) = 0")});
  }
  const SupporterSets s = extract_supporters(f, w);
  rep.notes.push_back(std::string("7) |W2| = |U1| = infinity is not decidable on a window; W2 ") +
                      (s.dense(s.W2) ? "is" : "is not") + " present in both halves, U1 " +
                      (s.dense(s.U1) ? "is" : "is not") + " present in both halves of " + to_string(w));
  return rep;
}

// ---------------------------------------------------------------------------

bool SupporterSets::dense(const std::set<Index>& s) const {
  return !s.empty() && *s.begin() < 0 && *s.rbegin() > 0;
}

SupporterSets extract_supporters(const CoeffSpec& f, Window w) {
  SupporterSets s;
  s.window = w;
  for (Index i = w.lo; i <= w.hi; ++i) {
    if (i == 0 || i == 1) continue;
    const bool nz = f(i) != 0;
    if (i % 2 == 0)
      (nz ? s.W1 : s.W2).insert(i);
    else
      (nz ? s.U1 : s.U2).insert(i);
  }
  return s;
}

bool MSupporter::contains(Index i) const {
  const Index step = 2 * (m0 < 0 ? -m0 : m0);
  if (step == 0) return false;
  return (i != 0 && i % step == 0) || (i - 1) % step == 0;
}

bool supporters_match(const SupporterSets& s, const MSupporter& t) {
  for (Index i = s.window.lo; i <= s.window.hi; ++i) {
    if (i == 0 || i == 1) continue;
    const bool in_sets = (i % 2 == 0) ? s.W1.count(i) > 0 : s.U1.count(i) > 0;
    if (in_sets != t.contains(i)) return false;
  }
  return true;
}

}  // namespace omega3rb
