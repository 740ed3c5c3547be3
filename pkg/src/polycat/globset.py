"""Finite n-globular sets.

A globular set of dimension n stores, for each k <= n, an ordered tuple of cell
names, and for k < n the source and target maps ``src[k]``, ``tgt[k]`` sending
(k+1)-cells to k-cells.  Names are plain strings and may repeat across
dimensions, so most functions take the dimension of a cell when it is not
otherwise determined.

>>> X = GlobularSet.build([["x", "y"], ["f"]], src=[{"f": "x"}], tgt=[{"f": "y"}])
>>> iterated_boundary(X, SRC, 0, "f", 1)
'x'
>>> iterated_boundary(X, SRC, -1, "x", 0)
STAR
"""

from dataclasses import dataclass
from itertools import product

from .errors import DimensionError, Report, StructuralError

SRC, TGT = "src", "tgt"


class _Star:
    """The unique (-1)-cell."""

    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self):
        return "STAR"


STAR = _Star()


@dataclass(frozen=True, eq=True)
class GlobularSet:
    dim: int
    cells: tuple  # tuple of tuples of names
    src: tuple  # src[k]: dict cells[k+1] -> cells[k]
    tgt: tuple

    @classmethod
    def build(cls, cells, src=(), tgt=()):
        cells = tuple(tuple(c) for c in cells)
        if not cells:
            raise DimensionError("a globular set needs at least dimension 0")
        dim = len(cells) - 1
        src = tuple(dict(m) for m in src)
        tgt = tuple(dict(m) for m in tgt)
        if len(src) != dim or len(tgt) != dim:
            raise StructuralError(f"expected {dim} source and target maps")
        for k, cs in enumerate(cells):
            if len(set(cs)) != len(cs):
                raise StructuralError(f"duplicate cell name in dimension {k}")
        return cls(dim, cells, src, tgt)

    def boundary(self, eps, k):
        """The map cells[k+1] -> cells[k] for eps in {SRC, TGT}."""
        return (self.src if eps == SRC else self.tgt)[k]

    def has(self, k, u):
        return 0 <= k <= self.dim and u in self._sets()[k]

    def _sets(self):
        s = self.__dict__.get("_cellsets")
        if s is None:
            s = tuple(frozenset(c) for c in self.cells)
            object.__setattr__(self, "_cellsets", s)
        return s

    def dim_of(self, u):
        ks = [k for k in range(self.dim + 1) if u in self._sets()[k]]
        if not ks:
            raise StructuralError(f"unknown cell {u!r}")
        if len(ks) > 1:
            raise DimensionError(f"cell name {u!r} occurs in dimensions {ks}; pass its dimension")
        return ks[0]

    def __hash__(self):
        return hash((self.dim, self.cells))


def _resolve(X, u, k):
    if k is None:
        return X.dim_of(u)
    if not X.has(k, u):
        raise StructuralError(f"{u!r} is not a {k}-cell")
    return k


def _check_structure(X):
    for k in range(X.dim):
        cs, lower = X._sets()[k + 1], X._sets()[k]
        for eps in (SRC, TGT):
            m = X.boundary(eps, k)
            if set(m) != cs:
                raise StructuralError(f"{eps}_{k} is not total on cells[{k + 1}]")
            for u, b in m.items():
                if b not in lower:
                    raise StructuralError(f"{eps}_{k}({u!r}) = {b!r} is not a {k}-cell")


def validate_globular(X):
    """Check both globularity equations in every dimension.

    Raises StructuralError when a map is not total or mentions unknown cells.
    """
    _check_structure(X)
    rep = Report()
    for i in range(X.dim - 1):
        for u in X.cells[i + 2]:
            s, t = X.src[i + 1][u], X.tgt[i + 1][u]
            if X.src[i][s] != X.src[i][t]:
                rep.add("src", (i, u), f"src_{i}(src(u)) != src_{i}(tgt(u))")
            if X.tgt[i][s] != X.tgt[i][t]:
                rep.add("tgt", (i, u), f"tgt_{i}(src(u)) != tgt_{i}(tgt(u))")
    return rep


def iterated_boundary(X, eps, i, u, k=None):
    k = _resolve(X, u, k)
    if i > k:
        raise DimensionError(f"cannot take the {i}-boundary of a {k}-cell")
    if i < -1:
        raise DimensionError("boundary index below -1")
    if i == -1:
        return STAR
    m = X.src if eps == SRC else X.tgt
    for j in range(k - 1, i - 1, -1):
        u = m[j][u]
    return u


def are_composable(X, i, us, dims=None):
    """True iff tgt_i(u_j) = src_i(u_{j+1}) along the sequence."""
    us = list(us)
    dims = list(dims) if dims is not None else [None] * len(us)
    ks = [_resolve(X, u, k) for u, k in zip(us, dims)]
    if any(k <= i for k in ks):
        raise DimensionError(f"{i}-composition needs cells of dimension > {i}")
    return all(
        iterated_boundary(X, TGT, i, a, ka) == iterated_boundary(X, SRC, i, b, kb)
        for a, b, ka, kb in zip(us, us[1:], ks, ks[1:])
    )


def are_parallel(X, u, v, k=None, l=None):
    k, l = _resolve(X, u, k), _resolve(X, v, l)
    if k != l:
        raise DimensionError("parallelism compares cells of the same dimension")
    if k == 0:
        return True
    return X.src[k - 1][u] == X.src[k - 1][v] and X.tgt[k - 1][u] == X.tgt[k - 1][v]


def truncate(X, m):
    if m > X.dim:
        raise DimensionError(f"cannot truncate a {X.dim}-globular set at {m}")
    return GlobularSet(m, X.cells[: m + 1], X.src[:m], X.tgt[:m])


def include(X, n):
    """Left adjoint to truncation: no cells above dim(X)."""
    if n < X.dim:
        raise DimensionError(f"cannot include a {X.dim}-globular set into dimension {n}")
    extra = n - X.dim
    return GlobularSet(n, X.cells + ((),) * extra, X.src + ({},) * extra, X.tgt + ({},) * extra)


def pair_name(u, v):
    return f"({u},{v})"


def parallel_pairs(X, k):
    """Ordered pairs of parallel k-cells, in carrier order."""
    return [(u, v) for u, v in product(X.cells[k], repeat=2) if are_parallel(X, u, v, k, k)]


def coinclude(X, n):
    """Right adjoint to truncation.

    Above m = dim(X) every cell is a pair of parallel m-cells, written "(u,v)".
    """
    m = X.dim
    if n < m:
        raise DimensionError(f"cannot co-include a {m}-globular set into dimension {n}")
    if n == m:
        return X
    pairs = parallel_pairs(X, m)
    names = tuple(pair_name(u, v) for u, v in pairs)
    cells = list(X.cells)
    src, tgt = list(X.src), list(X.tgt)
    cells.append(names)
    src.append({p: u for p, (u, v) in zip(names, pairs)})
    tgt.append({p: v for p, (u, v) in zip(names, pairs)})
    for _ in range(m + 2, n + 1):
        cells.append(names)
        src.append({p: p for p in names})
        tgt.append({p: p for p in names})
    return GlobularSet(n, tuple(cells), tuple(src), tuple(tgt))


@dataclass(frozen=True)
class GlobMorphism:
    source: GlobularSet
    target: GlobularSet
    maps: tuple  # maps[k]: dict source.cells[k] -> target.cells[k]


def validate_morphism(F):
    X, Y = F.source, F.target
    rep = Report()
    if X.dim != Y.dim or len(F.maps) != X.dim + 1:
        raise DimensionError("morphism between globular sets of different dimension")
    for k in range(X.dim + 1):
        if set(F.maps[k]) != set(X.cells[k]):
            raise StructuralError(f"map in dimension {k} is not total")
        for u, v in F.maps[k].items():
            if not Y.has(k, v):
                raise StructuralError(f"F_{k}({u!r}) = {v!r} is not a cell of the target")
    for k in range(X.dim):
        for u in X.cells[k + 1]:
            fu = F.maps[k + 1][u]
            if Y.src[k][fu] != F.maps[k][X.src[k][u]]:
                rep.add("src", (k, u))
            if Y.tgt[k][fu] != F.maps[k][X.tgt[k][u]]:
                rep.add("tgt", (k, u))
    return rep


def identity_morphism(X):
    return GlobMorphism(X, X, tuple({u: u for u in cs} for cs in X.cells))


def counit_j(X, m):
    """The canonical morphism include(truncate(X, m), dim X) -> X."""
    if m > X.dim:
        raise DimensionError(f"cannot truncate a {X.dim}-globular set at {m}")
    src = include(truncate(X, m), X.dim)
    maps = tuple({u: u for u in cs} for cs in src.cells)
    return GlobMorphism(src, X, maps)
