"""Naive backtracking search + brute-force explanation (fixture oracle)."""
import itertools
from fractions import Fraction as Q
from families import D, family
from validators import INT_PARAMS, SCALAR_PARAMS, AMENDED, CASES, ok


def instances(lo, hi, k):
    """Constraint instances fully inside [lo, hi]: (l, m, n) with every
    referenced coefficient index in the window."""
    out = []
    W = range(lo, hi + 1)
    for a in W:
        for b in W:
            for c in W:
                l, m, n = a - k, b - k, c - k
                S = l + m + n - 1
                refs = {a, b, c, S + k, S + 2 * k, S + 3 * k}
                if min(refs) < lo or max(refs) > hi:
                    continue
                out.append((l, m, n, max(refs)))
    return out


def residual_zero(f, l, m, n, k, lam):
    S = l + m + n - 1
    fl, fm, fn = f(l + k), f(m + k), f(n + k)
    comp = {}
    def add(i, v):
        comp[i] = comp.get(i, 0) + v
    add(S + 3 * k, fl * fm * fn * D(l + k, m + k, n + k))
    add(S + 3 * k, -f(S + 3 * k) * (fm * fn * D(l, m + k, n + k) + fl * fn * D(l + k, m, n + k)
                                     + fl * fm * D(l + k, m + k, n)))
    add(S + 2 * k, -lam * f(S + 2 * k) * (fl * D(l + k, m, n) + fm * D(l, m + k, n) + fn * D(l, m, n + k)))
    add(S + k, -lam * lam * f(S + k) * D(l, m, n))
    return all(v == 0 for v in comp.values())


def enumerate_solutions(N, values, k=0, lam=1):
    lo, hi = -N, N
    inst = instances(lo, hi, k)
    by_last = {}
    for (l, m, n, last) in inst:
        by_last.setdefault(last, []).append((l, m, n))
    table = {}
    f = lambda i: table[i]
    sols = []

    def rec(i):
        if i > hi:
            sols.append(tuple(table[j] for j in range(lo, hi + 1)))
            return
        for v in values:
            table[i] = v
            if all(residual_zero(f, l, m, n, k, lam) for (l, m, n) in by_last.get(i, ())):
                rec(i + 1)
        del table[i]

    rec(lo)
    sols.sort()
    return sols


SAMPLE = [Q(2), Q(-3), Q(1, 2), Q(5)]


def explain(sol, N, margin):
    """All (case, reading) pairs with some parameter choice whose restriction
    agrees with sol on the inner window."""
    lo = -N + margin
    hi = N - margin
    inner = {i: sol[i + N] for i in range(lo, hi + 1)}
    cands = sorted(set(inner.values()) | set(SAMPLE))
    found = []
    for cid in CASES:
        for amended in ((False, True) if cid in AMENDED else (False,)):
            hit = False
            ip, sp_ = INT_PARAMS[cid], SCALAR_PARAMS.get(cid, [])
            for ints in itertools.product(range(-N, N + 1), repeat=len(ip)):
                if hit: break
                # scalar conditions of cases with integer parameters all accept 1
                if ip and not ok(cid, {**dict(zip(ip, ints)), **{s: Q(1) for s in sp_}}):
                    continue
                for scs in itertools.product(cands, repeat=len(sp_)):
                    p = dict(zip(ip, ints)); p.update(zip(sp_, scs))
                    if not ok(cid, p):
                        continue
                    f = family(cid, p, amended)
                    if all(f(i) == v for i, v in inner.items()):
                        hit = True
                        break
            if hit:
                found.append(cid + ("+amended" if amended else ""))
    return found
