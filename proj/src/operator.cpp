#include "omega3rb/operator.hpp"

#include <algorithm>
#include <thread>

#include "omega3rb/algebra.hpp"

namespace omega3rb {

Element apply(const HomOp& R, const Element& x) {
  Element out;
  for (const auto& [m, c] : x.terms()) out.add_term(m + R.k, c * R.f(m + R.k));
  return out;
}

std::vector<Index> residual_indices(Index k, Index l, Index m, Index n) {
  const Index s = l + m + n - 1;
  return {l + k, m + k, n + k, s + 3 * k, s + 2 * k, s + k};
}

namespace {

std::optional<Index> first_uncovered(const HomOp& R, Index l, Index m, Index n) {
  if (R.f.kind() != CoeffSpec::Kind::Table) return std::nullopt;
  for (Index i : residual_indices(R.k, l, m, n))
    if (!R.f.covers(i)) return i;
  return std::nullopt;
}

}  // namespace

ResidualResult rb_residual(const HomOp& R, const Weight& w, Index l, Index m, Index n) {
  if (auto miss = first_uncovered(R, l, m, n)) return SkippedTriple{{l, m, n}, *miss};
  const Element x = Element::generator(l), y = Element::generator(m), z = Element::generator(n);
  const Element rx = apply(R, x), ry = apply(R, y), rz = apply(R, z);
  const Scalar& lam = w.lambda;

  Element inner = bracket(rx, ry, z);
  inner += bracket(rx, y, rz);
  inner += bracket(x, ry, rz);
  Element linear = bracket(rx, y, z);
  linear += bracket(x, ry, z);
  linear += bracket(x, y, rz);
  inner += lam * linear;
  inner += (lam * lam) * bracket(x, y, z);

  return bracket(rx, ry, rz) - apply(R, inner);
}

ResidualResult rb_residual_expanded(const HomOp& R, const Weight& w, Index l, Index m, Index n) {
  if (auto miss = first_uncovered(R, l, m, n)) return SkippedTriple{{l, m, n}, *miss};
  const Index k = R.k;
  const Index s = l + m + n - 1;
  const Scalar fl = R.f(l + k), fm = R.f(m + k), fn = R.f(n + k);
  const Scalar& lam = w.lambda;
  auto D = [](Index a, Index b, Index c) { return det3(a, b, c); };

  Element r;
  r.add_term(s + 3 * k, fl * fm * fn * D(l + k, m + k, n + k));
  r.add_term(s + 3 * k, -R.f(s + 3 * k) * (fm * fn * D(l, m + k, n + k) + fl * fn * D(l + k, m, n + k) +
                                           fl * fm * D(l + k, m + k, n)));
  r.add_term(s + 2 * k, -lam * R.f(s + 2 * k) * (fl * D(l + k, m, n) + fm * D(l, m + k, n) + fn * D(l, m, n + k)));
  r.add_term(s + k, -lam * lam * R.f(s + k) * D(l, m, n));
  return r;
}

HomOp rescale_weight(const HomOp& R, const Weight& w) {
  if (w.lambda == 0) throw InvalidWeight("weight rescaling needs a nonzero lambda");
  if (w.lambda == 1) return R;
  const Scalar inv = 1 / w.lambda;
  if (auto dom = R.f.domain()) {
    std::vector<Scalar> vals = values_on(R.f, *dom);
    for (auto& v : vals) v *= inv;
    return {R.k, CoeffSpec::table(*dom, std::move(vals))};
  }
  CoeffSpec f = R.f;
  return {R.k, CoeffSpec::custom([f, inv](Index i) -> Scalar { return f(i) * inv; },
                                 "(" + f.label() + ") / " + to_string(w.lambda))};
}

unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

struct Partial {
  std::uint64_t checked = 0, skipped = 0, failed = 0;
  std::vector<Witness> witnesses;
  std::set<Index> uncovered;
};

void sweep_slice(const HomOp& R, const Weight& w, Window win, Index l, Partial& out) {
  for (Index m = win.lo; m <= win.hi; ++m)
    for (Index n = win.lo; n <= win.hi; ++n) {
      ResidualResult r = rb_residual(R, w, l, m, n);
      if (auto* skip = std::get_if<SkippedTriple>(&r)) {
        ++out.skipped;
        out.uncovered.insert(skip->missing);
        continue;
      }
      ++out.checked;
      Element& e = std::get<Element>(r);
      if (e.is_zero()) continue;
      ++out.failed;
      if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back({{l, m, n}, std::move(e)});
    }
}

}  // namespace

ResidualReport sweep_residuals(const HomOp& R, const Weight& w, Window window, unsigned workers) {
  ResidualReport rep;
  rep.operator_label = R.f.label();
  rep.k = R.k;
  rep.weight = w.lambda;
  rep.window = window;
  if (window.empty()) return rep;

  const std::size_t rows = window.size();
  std::vector<Partial> parts(rows);
  const unsigned nthreads = std::min<unsigned>(resolve_workers(workers), static_cast<unsigned>(rows));
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < rows; ++i) sweep_slice(R, w, window, window.lo + static_cast<Index>(i), parts[i]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < rows; i += nthreads)
          sweep_slice(R, w, window, window.lo + static_cast<Index>(i), parts[i]);
      });
    for (auto& th : pool) th.join();
  }

  // Rows are merged in l order, so witnesses stay lexicographic.
  for (auto& p : parts) {
    rep.checked += p.checked;
    rep.skipped += p.skipped;
    rep.failed += p.failed;
    rep.uncovered.insert(p.uncovered.begin(), p.uncovered.end());
    for (auto& wit : p.witnesses)
      if (rep.witnesses.size() < kMaxWitnesses) rep.witnesses.push_back(std::move(wit));
  }
  if (rep.skipped > 0)
    rep.notes.push_back(std::to_string(rep.skipped) +
                        " triples skipped: coefficient table does not cover every index they read");
  rep.notes.push_back("identity checked on window triples " + to_string(window) +
                      "^3 only; the statement quantifies over all of Z");
  return rep;
}

CollapseReport check_k_collapse(const HomOp& R, Window window, unsigned workers) {
  if (R.k == 0) throw PreconditionError("collapse check needs k != 0");
  CollapseReport rep;
  rep.residuals = sweep_residuals(R, Weight{Scalar(1)}, window, workers);
  for (Index l = window.lo; l <= window.hi; ++l)
    for (Index m = window.lo; m <= window.hi; ++m)
      for (Index n = window.lo; n <= window.hi; ++n)
        if (det3_int(l, m, n) != 0) rep.reachable.insert(l + m + n + R.k - 1);
  for (Index i : rep.reachable) {
    auto v = R.f.try_eval(i);
    if (v && *v != 0) rep.nonzero_on_reachable.push_back(i);
  }
  rep.residuals.notes.push_back("reachable set computed from window triples only");
  return rep;
}

}  // namespace omega3rb
