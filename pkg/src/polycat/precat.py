"""Finite precategories and the translations theta / theta_bar.

A precategory only composes a k-cell with an l-cell along i = min(k, l) - 1.
The table ``pcomp[(i, k, l)]`` maps such pairs to cells of dimension max(k, l).
Strict categories correspond exactly to precategories satisfying the exchange
condition (E); ``theta`` and ``theta_bar`` are mutually inverse on the nose.
"""

from dataclasses import dataclass

from .errors import DomainError, Report, StructuralError
from .globset import SRC, TGT, GlobularSet, iterated_boundary, validate_globular
from .strictcat import FiniteStrictCat, composable_pairs


@dataclass(frozen=True)
class FinitePrecat:
    carrier: GlobularSet
    identity: tuple
    pcomp: dict  # (i, k, l) -> {(u, v): w}

    @property
    def dim(self):
        return self.carrier.dim

    def __hash__(self):
        return hash(self.carrier)

    def bd(self, eps, i, u, k):
        return iterated_boundary(self.carrier, eps, i, u, k)

    def ident(self, u, k, m):
        for j in range(k, m):
            u = self.identity[j][u]
        return u

    def star(self, i, u, k, v, l):
        """u *_i v, returning (cell, dimension)."""
        return self.pcomp[(i, k, l)][(u, v)], max(k, l)


def pcomp_keys(n):
    return [(min(k, l) - 1, k, l) for k in range(1, n + 1) for l in range(1, n + 1)]


def _check_tables(P):
    X = P.carrier
    rep = validate_globular(X)
    if not rep.ok:
        raise StructuralError(f"carrier is not globular: {rep}")
    problems = []
    keys = set(pcomp_keys(X.dim))
    if set(P.pcomp) - keys:
        raise StructuralError(f"tables for invalid indices {sorted(set(P.pcomp) - keys)}")
    for key in pcomp_keys(X.dim):
        i, k, l = key
        t = P.pcomp.get(key, {})
        want = set(composable_pairs(X, i, k, l))
        for p in want - set(t):
            problems.append(f"*_{i} undefined on composable pair {p} ({k},{l})")
        for p in set(t) - want:
            problems.append(f"*_{i} defined on non-composable pair {p} ({k},{l})")
        for p, w in t.items():
            if not X.has(max(k, l), w):
                raise StructuralError(f"{p} *_{i} = {w!r} is not a {max(k, l)}-cell")
    if problems:
        raise DomainError("; ".join(sorted(problems)))


def check_precat_axioms(P):
    """Check the precategory axioms, labelled P-i .. P-v.

    P-i   identities have the right boundaries
    P-ii  boundaries of u *_i v: for k = l the usual case split, otherwise the
          higher-dimensional operand's boundary whiskered by the lower one
    P-iii identities are compatible with *: 1(u) *_i v = 1(u *_i v) when the
          other operand has dimension i+1, and the unit laws for *_{k-1}
    P-iv  associativity of *_i wherever both bracketings are defined
    P-v   distributivity of whiskering by an (i+1)-cell over *_j, j > i
    """
    _check_tables(P)
    X = P.carrier
    n = X.dim
    rep = Report()
    T = P.pcomp

    def star(i, u, k, v, l):
        return T.get((i, k, l), {}).get((u, v))

    for k in range(n):
        for u in X.cells[k]:
            w = P.identity[k][u]
            if X.src[k][w] != u or X.tgt[k][w] != u:
                rep.add("P-i", (u,))

    for (i, k, l), t in T.items():
        m = max(k, l)
        for (u, v), w in t.items():
            for eps in (SRC, TGT):
                bm = X.src if eps == SRC else X.tgt
                got = bm[m - 1][w]
                if k == l:
                    if i == k - 1:
                        exp = bm[k - 1][u] if eps == SRC else bm[k - 1][v]
                    else:
                        exp = star(i, bm[k - 1][u], k - 1, bm[k - 1][v], k - 1)
                elif k > l:
                    exp = star(i, bm[k - 1][u], k - 1, v, l)
                else:
                    exp = star(i, u, k, bm[l - 1][v], l - 1)
                if got != exp:
                    rep.add("P-ii", (i, u, v), f"{eps}_{m - 1} is {got}, expected {exp}")

    for (i, k, l), t in T.items():
        if k == l:
            continue
        for (u, v), w in t.items():
            # raise the higher operand by one: 1(u) *_i v = 1(u *_i v)
            if max(k, l) >= n:
                continue
            if k > l:
                lhs = star(i, P.identity[k][u], k + 1, v, l)
            else:
                lhs = star(i, u, k, P.identity[l][v], l + 1)
            if lhs != P.identity[max(k, l)][w]:
                rep.add("P-iii", (i, u, v), "identity not compatible with whiskering")
    for k in range(1, n + 1):
        i = k - 1
        for u in X.cells[k]:
            a = star(i, P.ident(P.bd(SRC, i, u, k), i, i + 1), i + 1, u, k)
            b = star(i, u, k, P.ident(P.bd(TGT, i, u, k), i, i + 1), i + 1)
            if a != u or b != u:
                rep.add("P-iii", (i, u), "unit law fails")

    # associativity: at most one of the three operands exceeds dimension i+1
    dims = range(1, n + 1)
    for i in range(n):
        for ka in dims:
            for kb in dims:
                for kc in dims:
                    ks = (ka, kb, kc)
                    if min(ks) < i + 1 or sum(k > i + 1 for k in ks) > 1:
                        continue
                    if min(ka, kb) - 1 != i or min(kb, kc) - 1 != i:
                        continue
                    tab = T.get((i, ka, kb), {})
                    nxt = {}
                    for (b, c) in T.get((i, kb, kc), {}):
                        nxt.setdefault(b, []).append(c)
                    kab, kbc = max(ka, kb), max(kb, kc)
                    for (a, b), ab in tab.items():
                        for c in nxt.get(b, ()):
                            lhs = star(i, ab, kab, c, kc)
                            bc = star(i, b, kb, c, kc)
                            rhs = star(i, a, ka, bc, kbc) if bc is not None else None
                            if lhs is None or lhs != rhs:
                                rep.add("P-iv", (i, a, b, c), f"{lhs} != {rhs}")

    # distributivity: an (i+1)-cell u whiskers through *_j for every j > i
    for (j, kv, kw), tj in T.items():
        for i in range(j):
            left = T.get((i, i + 1, max(kv, kw)), {})
            right = T.get((i, max(kv, kw), i + 1), {})
            lv, lw = T.get((i, i + 1, kv), {}), T.get((i, i + 1, kw), {})
            rv, rw = T.get((i, kv, i + 1), {}), T.get((i, kw, i + 1), {})
            for u in X.cells[i + 1]:
                for (v, w), vw in tj.items():
                    if (u, vw) in left:
                        lhs = left[(u, vw)]
                        a, b = lv.get((u, v)), lw.get((u, w))
                        rhs = tj.get((a, b))
                        if lhs != rhs:
                            rep.add("P-v", (i, j, u, v, w), "left whiskering does not distribute")
                    if (vw, u) in right:
                        lhs = right[(vw, u)]
                        a, b = rv.get((v, u)), rw.get((w, u))
                        rhs = tj.get((a, b))
                        if lhs != rhs:
                            rep.add("P-v", (i, j, v, w, u), "right whiskering does not distribute")
    return rep


def check_condition_E(P):
    """(u *_{i-1} s_i v) *_i (t_i u *_{i-1} v) = (s_i u *_{i-1} v) *_i (u *_{i-1} t_i v)."""
    _check_tables(P)
    X = P.carrier
    n = X.dim
    rep = Report()
    T = P.pcomp

    def star(i, u, k, v, l):
        r = T.get((i, k, l), {}).get((u, v))
        return r

    for k in range(2, n + 1):
        for l in range(2, n + 1):
            i = min(k, l) - 1
            for u, v in composable_pairs(X, i - 1, k, l):
                su, tu = P.bd(SRC, i, u, k), P.bd(TGT, i, u, k)
                sv, tv = P.bd(SRC, i, v, l), P.bd(TGT, i, v, l)
                lhs = star(i, star(i - 1, u, k, sv, i), k, star(i - 1, tu, i, v, l), l)
                rhs = star(i, star(i - 1, su, i, v, l), l, star(i - 1, u, k, tv, i), k)
                if lhs is None or lhs != rhs:
                    rep.add("E", (i, u, v), f"{lhs} != {rhs}")
    return rep


def theta(C):
    """u *_i v := 1_m(u) o_i 1_m(v) with m = max(dim u, dim v)."""
    X = C.carrier
    pcomp = {}
    for key in pcomp_keys(X.dim):
        i, k, l = key
        m = max(k, l)
        t = C.comp[(i, m)]
        pcomp[key] = {(u, v): t[(C.ident(u, k, m), C.ident(v, l, m))] for u, v in composable_pairs(X, i, k, l)}
    return FinitePrecat(X, C.identity, pcomp)


def theta_bar(P, check=True):
    """Recover the strict category: o_{k-1} is *_{k-1}, and for i < k-1

        u o_i v = (u *_i s_{i+1} v) o_{i+1} (t_{i+1} u *_i v).

    Raises DomainError when P violates condition (E).
    """
    if check:
        rep = check_condition_E(P)
        if not rep.ok:
            raise DomainError(f"condition (E) fails: {rep.violations[0]}")
    X = P.carrier
    memo = {}

    def comp(i, u, v, k):
        if i == k - 1:
            return P.pcomp[(i, k, k)][(u, v)]
        key = (i, k, u, v)
        if key not in memo:
            a = P.pcomp[(i, k, i + 1)][(u, P.bd(SRC, i + 1, v, k))]
            b = P.pcomp[(i, i + 1, k)][(P.bd(TGT, i + 1, u, k), v)]
            memo[key] = comp(i + 1, a, b, k)
        return memo[key]

    tables = {}
    for k in range(1, X.dim + 1):
        for i in range(k):
            tables[(i, k)] = {(u, v): comp(i, u, v, k) for u, v in composable_pairs(X, i, k)}
    return FiniteStrictCat(X, P.identity, tables)


def theta_bar_alt(P):
    """The mirrored expansion (s_{i+1} u *_i v) o_{i+1} (u *_i t_{i+1} v)."""
    X = P.carrier
    memo = {}

    def comp(i, u, v, k):
        if i == k - 1:
            return P.pcomp[(i, k, k)][(u, v)]
        key = (i, k, u, v)
        if key not in memo:
            a = P.pcomp[(i, i + 1, k)][(P.bd(SRC, i + 1, u, k), v)]
            b = P.pcomp[(i, k, i + 1)][(u, P.bd(TGT, i + 1, v, k))]
            memo[key] = comp(i + 1, a, b, k)
        return memo[key]

    tables = {}
    for k in range(1, X.dim + 1):
        for i in range(k):
            tables[(i, k)] = {(u, v): comp(i, u, v, k) for u, v in composable_pairs(X, i, k)}
    return FiniteStrictCat(X, P.identity, tables)
