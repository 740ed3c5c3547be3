"""Finite strict n-categories given by explicit tables.

``identity[k]`` sends k-cells to (k+1)-cells, and ``comp[(i, k)]`` is a dict
from pairs of i-composable k-cells to k-cells.  Composition is written in
diagrammatic order: ``u o_{k-1} v`` has the source of u and the target of v.
"""

from dataclasses import dataclass
from itertools import product

from .errors import DimensionError, DomainError, Report, StructuralError
from .globset import (
    SRC, TGT, GlobMorphism, GlobularSet, coinclude, iterated_boundary,
    pair_name, parallel_pairs, truncate, validate_globular,
)


@dataclass(frozen=True)
class FiniteStrictCat:
    carrier: GlobularSet
    identity: tuple  # identity[k]: dict cells[k] -> cells[k+1]
    comp: dict  # (i, k) -> {(u, v): w}

    @property
    def dim(self):
        return self.carrier.dim

    def __hash__(self):
        return hash(self.carrier)

    def bd(self, eps, i, u, k):
        return iterated_boundary(self.carrier, eps, i, u, k)

    def ident(self, u, k, m):
        """1_m(u) for a k-cell u, iterating the unary identities (m >= k)."""
        for j in range(k, m):
            u = self.identity[j][u]
        return u

    def compose(self, i, u, v, k):
        return self.comp[(i, k)][(u, v)]


def composable_pairs(X, i, k, l=None):
    """All (u, v) in cells[k] x cells[l] with tgt_i(u) = src_i(v)."""
    l = k if l is None else l
    by_src = {}
    for v in X.cells[l]:
        by_src.setdefault(iterated_boundary(X, SRC, i, v, l), []).append(v)
    out = []
    for u in X.cells[k]:
        for v in by_src.get(iterated_boundary(X, TGT, i, u, k), ()):
            out.append((u, v))
    return out


def _check_tables(C):
    X = C.carrier
    rep = validate_globular(X)
    if not rep.ok:
        raise StructuralError(f"carrier is not globular: {rep}")
    if len(C.identity) != X.dim:
        raise StructuralError("one identity map per dimension below the top is required")
    for k, m in enumerate(C.identity):
        if set(m) != set(X.cells[k]):
            raise StructuralError(f"identity map in dimension {k} is not total")
        for u, w in m.items():
            if not X.has(k + 1, w):
                raise StructuralError(f"1({u!r}) = {w!r} is not a {k + 1}-cell")
    problems = []
    for k in range(1, X.dim + 1):
        for i in range(k):
            table = C.comp.get((i, k), {})
            want = set(composable_pairs(X, i, k))
            have = set(table)
            for p in sorted(want - have, key=repr):
                problems.append(f"o_{i} undefined on composable {k}-cells {p}")
            for p in sorted(have - want, key=repr):
                problems.append(f"o_{i} defined on non-composable {k}-cells {p}")
            for p, w in table.items():
                if not X.has(k, w):
                    raise StructuralError(f"{p} o_{i} = {w!r} is not a {k}-cell")
    extra = set(C.comp) - {(i, k) for k in range(1, X.dim + 1) for i in range(k)}
    if extra:
        raise StructuralError(f"composition tables for invalid indices {sorted(extra)}")
    if problems:
        raise DomainError("; ".join(problems))


def check_axioms(C):
    """Exhaustively check (S-i)..(S-vi).

    Table-domain problems raise DomainError before any axiom is looked at;
    axiom failures are collected in the returned report, labelled "S-i" etc.
    """
    _check_tables(C)
    X = C.carrier
    n = X.dim
    rep = Report()
    comp = C.comp

    for k in range(n):
        for u in X.cells[k]:
            w = C.identity[k][u]
            if X.src[k][w] != u or X.tgt[k][w] != u:
                rep.add("S-i", (u,), f"boundary of 1_{k + 1}({u}) is not {u}")

    for k in range(1, n + 1):
        for i in range(k):
            for (u, v), w in comp[(i, k)].items():
                for eps, m in ((SRC, X.src), (TGT, X.tgt)):
                    got = m[k - 1][w]
                    if i == k - 1:
                        exp = m[k - 1][u] if eps == SRC else m[k - 1][v]
                    else:
                        exp = comp[(i, k - 1)].get((m[k - 1][u], m[k - 1][v]))
                    if got != exp:
                        rep.add("S-ii", (i, u, v), f"{eps}_{k - 1} of composite is {got}, expected {exp}")

    for k in range(1, n + 1):
        for i in range(k):
            t = comp[(i, k)]
            for u in X.cells[k]:
                left = t.get((C.ident(C.bd(SRC, i, u, k), i, k), u))
                right = t.get((u, C.ident(C.bd(TGT, i, u, k), i, k)))
                if left != u or right != u:
                    rep.add("S-iii", (i, u), "unit law fails")

    for k in range(1, n + 1):
        for i in range(k):
            t = comp[(i, k)]
            after = {}
            for (a, b) in t:
                after.setdefault(a, []).append(b)
            for (u, v), uv in t.items():
                for w in after.get(v, ()):
                    lhs = t.get((uv, w))
                    rhs = t.get((u, t[(v, w)]))
                    if lhs is None or lhs != rhs:
                        rep.add("S-iv", (i, u, v, w), f"{lhs} != {rhs}")

    for k in range(1, n):
        for i in range(k):
            for (u, v), w in comp[(i, k)].items():
                lhs = C.identity[k][w]
                rhs = comp[(i, k + 1)].get((C.identity[k][u], C.identity[k][v]))
                if lhs != rhs:
                    rep.add("S-v", (i, u, v), f"{lhs} != {rhs}")

    for k in range(2, n + 1):
        for j in range(1, k):
            tj = comp[(j, k)]
            jnext = {}
            for (a, b) in tj:
                jnext.setdefault(a, []).append(b)
            for i in range(j):
                ti = comp[(i, k)]
                for (u, v), uv in ti.items():
                    for u2 in jnext.get(u, ()):
                        for v2 in jnext.get(v, ()):
                            lhs_in = ti.get((u2, v2))
                            a, b = tj.get((u, u2)), tj.get((v, v2))
                            rhs = ti.get((a, b)) if a is not None and b is not None else None
                            lhs = tj.get((uv, lhs_in)) if lhs_in is not None else None
                            if lhs is None or lhs != rhs:
                                rep.add("S-vi", (i, j, u, v, u2, v2), f"{lhs} != {rhs}")
    return rep


def sc_truncate(C, k):
    if k > C.dim:
        raise DimensionError(f"cannot truncate a {C.dim}-category at {k}")
    comp = {key: dict(t) for key, t in C.comp.items() if key[1] <= k}
    return FiniteStrictCat(truncate(C.carrier, k), C.identity[:k], comp)


def sc_include(C, l):
    """C seen as an l-category with only identities above dim(C)."""
    k = C.dim
    if l < k:
        raise DimensionError(f"cannot include a {k}-category into dimension {l}")
    if l == k:
        return C
    top = C.carrier.cells[k]
    cells = C.carrier.cells + (top,) * (l - k)
    ids = {u: u for u in top}
    X = GlobularSet(l, cells, C.carrier.src + (ids,) * (l - k), C.carrier.tgt + (ids,) * (l - k))
    identity = C.identity + (ids,) * (l - k)
    comp = {key: dict(t) for key, t in C.comp.items()}
    for m in range(k + 1, l + 1):
        for i in range(m):
            if i < k:
                comp[(i, m)] = dict(C.comp[(i, k)])
            else:
                comp[(i, m)] = {(u, u): u for u in top}
    return FiniteStrictCat(X, identity, comp)


def sc_coinclude(C, l):
    """Right adjoint to truncation: cells above dim(C) are parallel pairs."""
    k = C.dim
    if l < k:
        raise DimensionError(f"cannot co-include a {k}-category into dimension {l}")
    if l == k:
        return C
    X = coinclude(C.carrier, l)
    pairs = parallel_pairs(C.carrier, k)
    name = {p: pair_name(*p) for p in pairs}
    identity = list(C.identity)
    identity.append({u: name[(u, u)] for u in C.carrier.cells[k]})
    for _ in range(k + 1, l):
        identity.append({p: p for p in name.values()})
    comp = {key: dict(t) for key, t in C.comp.items()}
    for m in range(k + 1, l + 1):
        for i in range(m):
            t = {}
            if i < k:
                base = C.comp[(i, k)]
                for (u, v), (u2, v2) in product(pairs, repeat=2):
                    a, b = base.get((u, u2)), base.get((v, v2))
                    if a is not None and b is not None:
                        t[(name[(u, v)], name[(u2, v2)])] = name[(a, b)]
            elif i == k:
                for (u, v), (u2, v2) in product(pairs, repeat=2):
                    if v == u2:
                        t[(name[(u, v)], name[(u2, v2)])] = name[(u, v2)]
            else:
                # above k all boundaries are the pair itself
                t = {(p, p): p for p in name.values()}
            comp[(i, m)] = t
    return FiniteStrictCat(X, tuple(identity), comp)


@dataclass(frozen=True)
class NFunctor:
    morphism: GlobMorphism

    @property
    def maps(self):
        return self.morphism.maps


def check_functor(F, C, D):
    M = F.morphism
    if M.source != C.carrier or M.target != D.carrier:
        raise StructuralError("functor carriers do not match the given categories")
    rep = Report()
    X = C.carrier
    for k in range(X.dim + 1):
        if set(M.maps[k]) != set(X.cells[k]):
            raise StructuralError(f"functor is not total in dimension {k}")
    for k in range(X.dim):
        for u in X.cells[k + 1]:
            for eps, m, mD in ((SRC, X.src, D.carrier.src), (TGT, X.tgt, D.carrier.tgt)):
                if mD[k][M.maps[k + 1][u]] != M.maps[k][m[k][u]]:
                    rep.add("globular", (k, u), f"{eps} not preserved")
    for k in range(X.dim):
        for u in X.cells[k]:
            if M.maps[k + 1][C.identity[k][u]] != D.identity[k][M.maps[k][u]]:
                rep.add("identity", (k, u))
    for (i, k), t in C.comp.items():
        for (u, v), w in t.items():
            fu, fv = M.maps[k][u], M.maps[k][v]
            if D.comp[(i, k)].get((fu, fv)) != M.maps[k][w]:
                rep.add("composite", (i, u, v), f"F({u} o_{i} {v}) != F({u}) o_{i} F({v})")
    return rep


def identity_functor(C):
    return NFunctor(GlobMorphism(C.carrier, C.carrier, tuple({u: u for u in cs} for cs in C.carrier.cells)))


def counit_functor(C, k):
    """sc_include(sc_truncate(C, k), dim C) -> C, sending an m-cell u to 1_m(u)."""
    n = C.dim
    E = sc_include(sc_truncate(C, k), n)
    maps = []
    for m in range(n + 1):
        if m <= k:
            maps.append({u: u for u in E.carrier.cells[m]})
        else:
            maps.append({u: C.ident(u, k, m) for u in E.carrier.cells[m]})
    return E, NFunctor(GlobMorphism(E.carrier, C.carrier, tuple(maps)))


# -- small catalogue of finite strict categories used by tests and examples


def terminal(n):
    cells = [("*",)] * (n + 1)
    X = GlobularSet(n, tuple(cells), tuple({"*": "*"} for _ in range(n)), tuple({"*": "*"} for _ in range(n)))
    comp = {(i, k): {("*", "*"): "*"} for k in range(1, n + 1) for i in range(k)}
    return FiniteStrictCat(X, tuple({"*": "*"} for _ in range(n)), comp)


def from_category(objects, arrows, identity, compose):
    """A 1-category from objects, arrows {name: (src, tgt)}, identity {obj: arrow}
    and a composition function (f, g) -> f;g on composable pairs."""
    X = GlobularSet.build(
        [list(objects), list(arrows)],
        src=[{f: s for f, (s, t) in arrows.items()}],
        tgt=[{f: t for f, (s, t) in arrows.items()}],
    )
    table = {(f, g): compose(f, g) for f, g in composable_pairs(X, 0, 1)}
    return FiniteStrictCat(X, (dict(identity),), {(0, 1): table})


def monoid_category(elements, op, unit):
    """The one-object category with hom-monoid (elements, op, unit)."""
    look = {str(e): e for e in elements}
    return from_category(
        ["*"], {e: ("*", "*") for e in look}, {"*": str(unit)},
        lambda f, g: str(op(look[f], look[g])),
    )


def cyclic_group(n):
    return monoid_category([str(a) for a in range(n)], lambda a, b: (int(a) + int(b)) % n, "0")


def commutative_monoid_2cat(elements, op, unit):
    """One 0-cell, one 1-cell, 2-cells a commutative monoid (Eckmann-Hilton)."""
    es = [str(e) for e in elements]
    look = {str(e): e for e in elements}
    X = GlobularSet.build(
        [["*"], ["1"], es],
        src=[{"1": "*"}, {e: "1" for e in es}],
        tgt=[{"1": "*"}, {e: "1" for e in es}],
    )
    t = {(a, b): str(op(look[a], look[b])) for a in es for b in es}
    comp = {(0, 1): {("1", "1"): "1"}, (0, 2): dict(t), (1, 2): dict(t)}
    return FiniteStrictCat(X, ({"*": "1"}, {"1": str(unit)}), comp)


def poset_category(objects, leq):
    """The thin category of a finite preorder."""
    arrows = {f"{a}<{b}": (a, b) for a in objects for b in objects if leq(a, b)}
    return from_category(
        objects, arrows, {a: f"{a}<{a}" for a in objects},
        lambda f, g: f"{arrows[f][0]}<{arrows[g][1]}",
    )
