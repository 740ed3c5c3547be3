"""Polygraphs, their morphisms and colimits, and cellular extensions."""

from dataclasses import dataclass, field

from . import freecat
from .errors import (
    CompositionError, DimensionError, Report, StructuralError, TypingError, UnsupportedDimension,
)
from .globset import SRC, TGT, iterated_boundary
from .syntax import Gen, Id, Term, generators_of, parse_term, rename


@dataclass(frozen=True)
class Polygraph:
    gens: tuple  # gens[k]: tuple of names
    src: tuple  # src[k]: dict name -> Term (src[0] is empty)
    tgt: tuple
    name: str = "P"
    _cache: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    @property
    def dim(self):
        return len(self.gens) - 1

    def __hash__(self):
        return hash((self.name, self.gens))

    def count(self, k):
        return len(self.gens[k]) if k <= self.dim else 0

    def dim_of(self, g):
        for k, names in enumerate(self.gens):
            if g in names:
                return k
        raise StructuralError(f"unknown generator {g!r}")


def make_polygraph(dims, name="P"):
    """Build a polygraph from a list of dimensions.

    Each dimension is a list of names (dimension 0) or of
    ``(name, source, target)`` triples whose boundaries are terms or strings.
    """
    gens, src, tgt = [], [], []
    for k, entries in enumerate(dims):
        names, s, t = [], {}, {}
        for e in entries:
            if k == 0:
                names.append(e)
                continue
            g, a, b = e
            names.append(g)
            s[g] = a if isinstance(a, Term) else parse_term(a)
            t[g] = b if isinstance(b, Term) else parse_term(b)
        gens.append(tuple(names))
        src.append(s)
        tgt.append(t)
    P = Polygraph(tuple(gens), tuple(src), tuple(tgt), name)
    _check_names(P)
    return P


def _check_names(P):
    seen = set()
    if not P.gens:
        raise StructuralError("a polygraph has at least dimension 0")
    for k, names in enumerate(P.gens):
        for g in names:
            if g in seen:
                raise StructuralError(f"generator name {g!r} is used twice")
            seen.add(g)
        if k >= 1 and (set(P.src[k]) != set(names) or set(P.tgt[k]) != set(names)):
            raise StructuralError(f"dimension {k}: every generator needs a source and a target")
    for k in range(1, len(P.gens)):
        for g in P.gens[k]:
            for t in (P.src[k][g], P.tgt[k][g]):
                for h in generators_of(t):
                    if h not in seen:
                        raise StructuralError(f"boundary of {g!r} mentions unknown generator {h!r}")


def validate_polygraph(P):
    """Typecheck every boundary and check source/target parallelism.

    Violations carry the generator name; unknown generators raise StructuralError.
    """
    _check_names(P)
    rep = Report()
    freecat.signature(P, report=rep)
    return rep


def truncate_pol(P, k):
    if k > P.dim:
        raise DimensionError(f"cannot truncate a {P.dim}-polygraph at {k}")
    return Polygraph(P.gens[: k + 1], P.src[: k + 1], P.tgt[: k + 1], P.name)


def empty_polygraph(dim=0, name="empty"):
    return Polygraph(((),) * (dim + 1), ({},) * (dim + 1), ({},) * (dim + 1), name)


def pad(P, n):
    if n < P.dim:
        raise DimensionError("padding cannot lower the dimension")
    extra = n - P.dim
    return Polygraph(P.gens + ((),) * extra, P.src + ({},) * extra, P.tgt + ({},) * extra, P.name)


@dataclass(frozen=True)
class PolMorphism:
    source: Polygraph
    target: Polygraph
    maps: tuple  # maps[k]: dict source.gens[k] -> target.gens[k]

    def rename(self, g):
        for m in self.maps:
            if g in m:
                return m[g]
        raise StructuralError(f"{g!r} is not a generator of the source")

    def apply(self, t):
        """Image of a term under the induced free functor."""
        return rename(t, self.rename)


def check_morphism(F):
    """A generator map is a morphism when boundaries are sent to boundaries.

    Boundaries are compared as cells (normal forms up to dimension 2, layered
    forms in dimension 3).
    """
    P, Q = F.source, F.target
    rep = Report()
    if len(F.maps) != P.dim + 1 or P.dim > Q.dim:
        raise DimensionError("morphism maps do not match the source dimension")
    for k in range(P.dim + 1):
        if set(F.maps[k]) != set(P.gens[k]):
            raise StructuralError(f"morphism is not total in dimension {k}")
        for g, h in F.maps[k].items():
            if h not in Q.gens[k]:
                raise StructuralError(f"{g!r} is sent to {h!r}, not a {k}-generator of the target")
    for k in range(1, P.dim + 1):
        for g in P.gens[k]:
            h = F.maps[k][g]
            for eps, bP, bQ in ((SRC, P.src, Q.src), (TGT, P.tgt, Q.tgt)):
                image = _cell(Q, F.apply(bP[k][g]))
                expected = _cell(Q, bQ[k][h])
                if image != expected:
                    rep.add(eps, (g,), f"image of the {eps} of {g} is not the {eps} of {h}")
    return rep


def _cell(P, t):
    v = freecat.evaluate(P, t)
    if isinstance(v, freecat.Diagram):
        return freecat.canonical(freecat.signature(P), v)
    return v


def tagged(tag, g):
    return f"{tag}.{g}"


def coproduct(P, Q, tags=("l", "r")):
    """Disjoint union, dimension by dimension; names get an origin prefix."""
    n = max(P.dim, Q.dim)
    P, Q = pad(P, n), pad(Q, n)
    gens, src, tgt = [], [], []
    for k in range(n + 1):
        names, s, t = [], {}, {}
        for tag, R in zip(tags, (P, Q)):
            f = lambda g, tag=tag: tagged(tag, g)
            for g in R.gens[k]:
                names.append(f(g))
                if k:
                    s[f(g)] = rename(R.src[k][g], f)
                    t[f(g)] = rename(R.tgt[k][g], f)
        gens.append(tuple(names))
        src.append(s)
        tgt.append(t)
    return Polygraph(tuple(gens), tuple(src), tuple(tgt), f"{P.name}+{Q.name}")


def coproduct_injections(P, Q, C, tags=("l", "r")):
    inj = []
    for tag, R in zip(tags, (P, Q)):
        inj.append(PolMorphism(R, C, tuple({g: tagged(tag, g) for g in R.gens[k]} for k in range(R.dim + 1))))
    return inj


def pushout(f, g, tags=("l", "r")):
    """Pushout of P <- R -> Q, computed as a set pushout in each dimension.

    Each glued class is named after its first member in the order P then Q.
    """
    R, P, Q = f.source, f.target, g.target
    if g.source != R:
        raise StructuralError("pushout legs must share their source")
    n = max(P.dim, Q.dim)
    P, Q = pad(P, n), pad(Q, n)
    rep = {}
    gens = []
    for k in range(n + 1):
        members = [(tags[0], x) for x in P.gens[k]] + [(tags[1], y) for y in Q.gens[k]]
        parent = {m: m for m in members}

        def find(m):
            while parent[m] != m:
                parent[m] = parent[parent[m]]
                m = parent[m]
            return m

        if k <= R.dim:
            for r in R.gens[k]:
                a, b = find((tags[0], f.maps[k][r])), find((tags[1], g.maps[k][r]))
                if a != b:
                    # keep the earlier member as representative
                    if members.index(a) < members.index(b):
                        parent[b] = a
                    else:
                        parent[a] = b
        names = []
        for m in members:
            r = find(m)
            rep[m] = tagged(*r)
            if m == r:
                names.append(tagged(*r))
        gens.append(tuple(names))
    src, tgt = [{}], [{}]
    for k in range(1, n + 1):
        s, t = {}, {}
        for tag, X in zip(tags, (P, Q)):
            ren = lambda h, tag=tag: rep[(tag, h)]
            for h in X.gens[k]:
                name = rep[(tag, h)]
                if name == tagged(tag, h):
                    s[name] = rename(X.src[k][h], ren)
                    t[name] = rename(X.tgt[k][h], ren)
        src.append(s)
        tgt.append(t)
    out = Polygraph(tuple(gens), tuple(src), tuple(tgt), f"{P.name}+{R.name}{Q.name}")
    check = validate_polygraph(out)
    assert check.ok, f"pushout failed to validate: {check}"
    return out


# -- cellular extensions


@dataclass(frozen=True)
class CellularExtension:
    """A base k-category with new (k+1)-generators between parallel k-cells.

    ``base`` is either a FiniteStrictCat or a Polygraph, standing for the free
    category it generates.  Boundaries are cell names (finite base) or terms
    (free base).
    """

    base: object
    gens: tuple
    src: dict
    tgt: dict

    @property
    def k(self):
        return self.base.dim


def validate_extension(E):
    rep = Report()
    if isinstance(E.base, Polygraph):
        ext = free_polygraph_extension(E)
        return validate_polygraph(ext)
    C = E.base
    k = C.dim
    for s in E.gens:
        a, b = E.src.get(s), E.tgt.get(s)
        if not C.carrier.has(k, a) or not C.carrier.has(k, b):
            raise StructuralError(f"boundary of {s!r} is not a {k}-cell of the base")
        if k > 0:
            for eps in (SRC, TGT):
                if iterated_boundary(C.carrier, eps, k - 1, a, k) != iterated_boundary(C.carrier, eps, k - 1, b, k):
                    rep.add("parallel", (s,), f"{eps} of source and target differ")
    return rep


def free_polygraph_extension(E):
    P = E.base
    for s in E.gens:
        for t in (E.src[s], E.tgt[s]):
            for h in generators_of(t):
                if not any(h in names for names in P.gens):
                    raise StructuralError(f"boundary of {s!r} mentions {h!r}, not a base generator")
    return Polygraph(
        P.gens + (tuple(E.gens),), P.src + (dict(E.src),), P.tgt + (dict(E.tgt),), P.name + "+",
    )


class FreeContext:
    """Typing context for cells of the free category on a polygraph."""

    def __init__(self, P):
        self.polygraph = P
        self.dim = P.dim

    def generators(self, k):
        return self.polygraph.gens[k] if k <= self.dim else ()

    def infer_type(self, t):
        return freecat.infer_type(self.polygraph, t)

    def cells(self, k, bound):
        return freecat.enumerate_cells(self.polygraph, k, bound)

    def truncate(self, k):
        return FreeContext(truncate_pol(self.polygraph, k))


class BaseContext:
    """Typing context for (k+1)-terms over a finite strict k-category.

    Terms name base cells and new generators; only typing is available, since
    equality in the extension needs the quotient construction.
    """

    def __init__(self, E):
        self.extension = E
        self.base = E.base
        self.dim = E.base.dim + 1

    def generators(self, k):
        if k == self.dim:
            return tuple(self.extension.gens)
        return self.base.carrier.cells[k]

    def cells(self, k, bound=None):
        if k == self.dim:
            raise UnsupportedDimension("cells of an extension over a finite base are not enumerated")
        return list(self.base.carrier.cells[k])

    def truncate(self, k):
        if k >= self.dim:
            return self
        return _CarrierContext(self.base, k)

    def _value(self, t):
        C, E = self.base, self.extension
        kk = C.dim
        if isinstance(t, Gen):
            if t.name in E.gens:
                return (kk + 1, (E.src[t.name], E.tgt[t.name]))
            for k in range(kk + 1):
                if C.carrier.has(k, t.name):
                    return (k, t.name)
            raise StructuralError(f"unknown cell {t.name!r}")
        if isinstance(t, Id):
            k, v = self._value(t.arg)
            return self._ident(k, v)
        a, b = self._value(t.left), self._value(t.right)
        m = max(a[0], b[0])
        if t.i >= m:
            raise TypingError(f"*{t.i} needs cells of dimension > {t.i}")
        while a[0] < m:
            a = self._ident(*a)
        while b[0] < m:
            b = self._ident(*b)
        return self._compose(t.i, a[1], b[1], m)

    def _ident(self, k, v):
        C = self.base
        if k < C.dim:
            return (k + 1, C.identity[k][v])
        if k == C.dim:
            return (k + 1, (v, v))
        raise UnsupportedDimension("identities above the extension dimension")

    def _bd(self, eps, i, v, k):
        C = self.base
        if k == C.dim + 1:
            v = v[0] if eps == SRC else v[1]
            k -= 1
        return iterated_boundary(C.carrier, eps, i, v, k)

    def _compose(self, i, u, v, m):
        C = self.base
        a, b = self._bd(TGT, i, u, m), self._bd(SRC, i, v, m)
        if a != b:
            raise CompositionError(i, a, b)
        if m <= C.dim:
            return (m, C.comp[(i, m)][(u, v)])
        if i == m - 1:
            return (m, (u[0], v[1]))
        return (m, (C.comp[(i, m - 1)][(u[0], v[0])], C.comp[(i, m - 1)][(u[1], v[1])]))

    def infer_type(self, t):
        k, v = self._value(t)
        C = self.base
        if k == 0:
            return freecat.TypeInfo(0, None, None)
        if k == C.dim + 1:
            return freecat.TypeInfo(k, v[0], v[1])
        return freecat.TypeInfo(k, C.carrier.src[k - 1][v], C.carrier.tgt[k - 1][v])


class _CarrierContext:
    def __init__(self, C, k):
        self.base, self.dim = C, k

    def generators(self, k):
        return self.base.carrier.cells[k]

    def cells(self, k, bound=None):
        return list(self.base.carrier.cells[k])

    def truncate(self, k):
        return _CarrierContext(self.base, min(k, self.dim))


def free_extension_terms(E):
    """Typing context for (k+1)-cells generated by a cellular extension."""
    if isinstance(E.base, Polygraph):
        P = free_polygraph_extension(E)
        rep = validate_polygraph(P)
        if not rep.ok:
            raise StructuralError(f"invalid extension: {rep}")
        return FreeContext(P)
    rep = validate_extension(E)
    if not rep.ok:
        raise StructuralError(f"invalid extension: {rep}")
    return BaseContext(E)
