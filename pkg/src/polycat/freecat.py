"""Cells of free strict categories on a polygraph.

Terms (see :mod:`polycat.syntax`) are evaluated to concrete cells:

* 0-cells are generator names (``str``),
* 1-cells are :class:`Word` values (a path of 1-generators with endpoints),
* 2-cells are layered :class:`Diagram` values: a source word and a list of
  ``(offset, generator)`` layers read bottom to top,
* 3-cells are :class:`Cell3` values, sequences of 3-dimensional whiskers.

Mixed-dimension composites are padded with identities first, so ``Comp(i, a, b)``
always composes cells of the same dimension m > i.

Equality of 2-cells is decided by :func:`normalize`.  Every 2-cell splits into
the part connected to its boundary and a number of closed components; each
piece is put in leftmost-lowest order by exchange swaps, and closed components
are then placed at a canonical spot of the face that contains them.
"""

from collections import Counter, deque
from dataclasses import dataclass
from typing import NamedTuple, Optional

from .errors import (
    CompositionError, NotParallel, TypingError, UnknownGenerator, UnsupportedDimension,
)
from .globset import STAR
from .syntax import Comp, Gen, Id


@dataclass(frozen=True)
class Word:
    """A 1-cell: a composable path of 1-generators from ``src`` to ``tgt``."""

    src: str
    tgt: str
    gens: tuple = ()

    dim = 1

    def __len__(self):
        return len(self.gens)

    def __str__(self):
        if not self.gens:
            return f"id({self.src})"
        return " *0 ".join(self.gens)


@dataclass(frozen=True)
class Diagram:
    """A 2-cell as raw layers ``(offset, gen)`` over ``source``; not canonical."""

    source: Word
    layers: tuple
    target: Word

    dim = 2


@dataclass(frozen=True)
class Whisker:
    offset: int
    gen: str
    context: tuple  # the word the generator acts inside

    def __str__(self):
        return f"{self.offset}:{self.gen}"


@dataclass(frozen=True)
class NormalForm:
    source: Word
    layers: tuple  # of Whisker, bottom to top
    target: Word

    dim = 2

    def pairs(self):
        return tuple((w.offset, w.gen) for w in self.layers)

    def diagram(self):
        return Diagram(self.source, self.pairs(), self.target)

    def __str__(self):
        body = ", ".join(str(w) for w in self.layers)
        return f"{self.source} => {self.target} [{body}]"


@dataclass(frozen=True)
class Layer3:
    """pre o1 (left *0 gen *0 right) o1 post, with pre/post 2-cells."""

    pre: Diagram
    left: Word
    gen: str
    right: Word
    post: Diagram


@dataclass(frozen=True)
class Cell3:
    source: NormalForm
    layers: tuple
    target: NormalForm

    dim = 3


class TypeInfo(NamedTuple):
    dim: int
    source: object
    target: object


def dim_of(v):
    return 0 if isinstance(v, str) else v.dim


# -- generator signatures


class Signature:
    """Typed boundaries of every generator of a polygraph, up to dimension 3."""

    def __init__(self):
        self.dims = {}  # name -> dimension
        self.c1 = {}  # 1-gen -> (x, y)
        self.c2 = {}  # 2-gen -> (Word, Word)
        self.c3 = {}  # 3-gen -> (NormalForm, NormalForm)
        self.higher = {}  # gens of dim >= 4 (typed only as names)

    def ar(self, g):
        s, t = self.c2[g]
        return len(s), len(t)


def generator_dims(P):
    dims = {}
    for k, names in enumerate(P.gens):
        for g in names:
            dims[g] = k
    return dims


def signature(P, report=None):
    """Type every generator boundary, caching the result on P.

    With ``report`` given, typing failures become violations and the offending
    generator is left out; otherwise they raise.
    """
    if report is None:
        cached = P._cache.get("sig")
        if cached is not None:
            return cached
    known = generator_dims(P)
    sig = Signature()
    for k, names in enumerate(P.gens):
        for g in names:
            try:
                _add_generator(P, sig, known, k, g)
            except (TypingError, UnsupportedDimension) as e:
                if report is None:
                    raise
                report.add("boundary" if isinstance(e, NotParallel) else "typing", (g,), str(e))
    if report is None:
        P._cache["sig"] = sig
    return sig


def _add_generator(P, sig, known, k, g):
    if k == 0:
        sig.dims[g] = 0
        return
    ev = _Evaluator(P, sig, known, max_dim=k - 1)
    s, t = ev.eval(P.src[k][g]), ev.eval(P.tgt[k][g])
    for side, v in (("source", s), ("target", t)):
        if dim_of(v) != k - 1:
            raise TypingError(f"{side} of {g} has dimension {dim_of(v)}, expected {k - 1}")
    if k >= 2:
        ss, st = boundary(s, 0), boundary(s, 1)
        ts, tt = boundary(t, 0), boundary(t, 1)
        if ss != ts or st != tt:
            raise NotParallel(f"{g}: source and target are not parallel")
    if k == 1:
        sig.c1[g] = (s, t)
    elif k == 2:
        sig.c2[g] = (s, t)
    elif k == 3:
        sig.c3[g] = (canonical(sig, s), canonical(sig, t))
    else:
        sig.higher[g] = (s, t)
    sig.dims[g] = k


def boundary(v, eps):
    """(dim-1)-source (eps=0) or target (eps=1) of a cell value."""
    if isinstance(v, str):
        return STAR
    if isinstance(v, Word):
        return v.src if eps == 0 else v.tgt
    if isinstance(v, (Diagram, NormalForm, Cell3)):
        return v.source if eps == 0 else v.target
    raise TypeError(v)


def iterated(v, eps, i):
    while dim_of(v) > i:
        v = boundary(v, eps)
    return v


# -- evaluation


def empty(x):
    return Word(x, x, ())


def shift(layers, k):
    return tuple((o + k, g) for o, g in layers)


def concat_words(a, b):
    if a.tgt != b.src:
        raise CompositionError(0, a.tgt, b.src)
    return Word(a.src, b.tgt, a.gens + b.gens)


def identity(v):
    if isinstance(v, str):
        return Word(v, v, ())
    if isinstance(v, Word):
        return Diagram(v, (), v)
    raise UnsupportedDimension("identities of 2-cells are built by the evaluator")


def whisker2(d, left, right):
    """left *0 d *0 right for words left, right."""
    src = concat_words(concat_words(left, d.source), right)
    tgt = concat_words(concat_words(left, d.target), right)
    return Diagram(src, shift(d.layers, len(left)), tgt)


def vcat(*ds):
    for a, b in zip(ds, ds[1:]):
        if a.target != b.source:
            raise CompositionError(1, a.target, b.source)
    return Diagram(ds[0].source, sum((d.layers for d in ds), ()), ds[-1].target)


def hcat(a, b, right_first=False):
    if a.target.tgt != b.source.src:
        raise CompositionError(0, a.target.tgt, b.source.src)
    src = concat_words(a.source, b.source)
    tgt = concat_words(a.target, b.target)
    if right_first:
        # (s(a) *0 b) o1 (a *0 t(b))
        layers = shift(b.layers, len(a.source)) + a.layers
    else:
        # (a *0 s(b)) o1 (t(a) *0 b)
        layers = a.layers + shift(b.layers, len(a.target))
    return Diagram(src, layers, tgt)


class _Evaluator:
    def __init__(self, P, sig, known, max_dim=None, right_first=False):
        self.P, self.sig, self.known = P, sig, known
        self.max_dim = max_dim
        self.right_first = right_first

    def eval(self, t):
        if isinstance(t, Gen):
            return self.gen(t.name)
        if isinstance(t, Id):
            return self.ident(self.eval(t.arg))
        if isinstance(t, Comp):
            a, b = self.eval(t.left), self.eval(t.right)
            m = max(dim_of(a), dim_of(b))
            if t.i >= m:
                raise TypingError(f"*{t.i} needs cells of dimension > {t.i}, got {m}")
            while dim_of(a) < m:
                a = self.ident(a)
            while dim_of(b) < m:
                b = self.ident(b)
            return self.compose(t.i, a, b)
        raise TypeError(f"not a term: {t!r}")

    def gen(self, name):
        if name not in self.known:
            raise UnknownGenerator(f"unknown generator {name!r}")
        k = self.known[name]
        if self.max_dim is not None and k > self.max_dim:
            raise TypingError(f"generator {name!r} of dimension {k} used below dimension {self.max_dim + 1}")
        if name not in self.sig.dims:
            raise TypingError(f"generator {name!r} is ill-typed")
        sig = self.sig
        if k == 0:
            return name
        if k == 1:
            x, y = sig.c1[name]
            return Word(x, y, (name,))
        if k == 2:
            s, t = sig.c2[name]
            return Diagram(s, ((0, name),), t)
        if k == 3:
            s, t = sig.c3[name]
            w = s.source
            layer = Layer3(Diagram(w, (), w), empty(w.src), name, empty(w.tgt), Diagram(s.target, (), s.target))
            return Cell3(s, (layer,), t)
        raise UnsupportedDimension(f"generator {name!r} has dimension {k}; terms are typed up to dimension 3")

    def ident(self, v):
        if isinstance(v, (str, Word)):
            return identity(v)
        if isinstance(v, Diagram):
            nf = canonical(self.sig, v)
            return Cell3(nf, (), nf)
        raise UnsupportedDimension("identities on 3-cells have dimension 4")

    def compose(self, i, a, b):
        if isinstance(a, Word):
            return concat_words(a, b)
        if isinstance(a, Diagram):
            if i == 1:
                return vcat(a, b)
            return hcat(a, b, self.right_first)
        return self.compose3(i, a, b)

    def compose3(self, i, a, b):
        sig = self.sig
        if i == 2:
            if a.target != b.source:
                raise CompositionError(2, a.target, b.source)
            return Cell3(a.source, a.layers + b.layers, b.target)
        if i == 1:
            if a.source.target != b.source.source:
                raise CompositionError(1, a.source.target, b.source.source)
            X2, Y = b.source.diagram(), a.target.diagram()
            layers = tuple(Layer3(L.pre, L.left, L.gen, L.right, vcat(L.post, X2)) for L in a.layers)
            layers += tuple(Layer3(vcat(Y, L.pre), L.left, L.gen, L.right, L.post) for L in b.layers)
            src = canonical(sig, vcat(a.source.diagram(), X2))
            tgt = canonical(sig, vcat(Y, b.target.diagram()))
            return Cell3(src, layers, tgt)
        ta, sb = a.source.source.tgt, b.source.source.src
        if ta != sb:
            raise CompositionError(0, ta, sb)
        X2, Y = b.source.diagram(), a.target.diagram()
        q, w = Y.target, X2.target
        layers = tuple(
            Layer3(hcat(L.pre, X2), L.left, L.gen, concat_words(L.right, w), whisker2(L.post, empty(L.post.source.src), w))
            for L in a.layers
        )
        layers += tuple(
            Layer3(hcat(Y, L.pre), concat_words(q, L.left), L.gen, L.right, whisker2(L.post, q, empty(L.post.source.tgt)))
            for L in b.layers
        )
        src = canonical(sig, hcat(a.source.diagram(), X2))
        tgt = canonical(sig, hcat(Y, b.target.diagram()))
        return Cell3(src, layers, tgt)


def layer3_boundaries(sig, L):
    """The 2-cells a single 3-layer goes between (not normalized)."""
    s, t = sig.c3[L.gen]
    mid_s = whisker2(s.diagram(), L.left, L.right)
    mid_t = whisker2(t.diagram(), L.left, L.right)
    return vcat(L.pre, mid_s, L.post), vcat(L.pre, mid_t, L.post)


def evaluate(P, t, right_first=False):
    sig = signature(P)
    return _Evaluator(P, sig, generator_dims(P), right_first=right_first).eval(t)


def infer_type(P, t):
    """Dimension and boundaries of a term.

    For a 2-cell the boundaries are words, for a 3-cell normal forms, for a
    1-cell 0-generators and for a 0-cell the sentinel STAR.
    """
    v = evaluate(P, t)
    if isinstance(v, str):
        return TypeInfo(0, STAR, STAR)
    if isinstance(v, Word):
        return TypeInfo(1, v.src, v.tgt)
    return TypeInfo(v.dim, v.source, v.target)


# -- normal forms of 2-cells


class _UF:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        p = self.parent
        root = x
        while p.get(root, root) != root:
            root = p[root]
        while p.get(x, x) != root:
            p[x], x = root, p[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _levels(n0, layers, ar):
    """Wire identities of each intermediate word, and the inputs of each layer."""
    W = [("s", p) for p in range(n0)]
    words, inputs = [W], []
    for a, g, nid in layers:
        s, t = ar(g)
        inputs.append(W[a:a + s])
        W = W[:a] + [(nid, q) for q in range(t)] + W[a + s:]
        words.append(W)
    return words, inputs


def _local_sort(layers, ar):
    """Leftmost-lowest order by exchange swaps.

    The upper of two adjacent layers moves below the lower one whenever its
    inputs lie entirely to the left of the lower one's outputs.
    """
    L = list(layers)
    cap = 4 * len(L) ** 3 + 64
    steps = 0
    j = 0
    while j < len(L) - 1:
        a, g1, n1 = L[j]
        b, g2, n2 = L[j + 1]
        s1, t1 = ar(g1)
        s2, t2 = ar(g2)
        swap = False
        if b + s2 <= a:
            if a + t1 <= b and s1 == 0 and t2 == 0:
                swap = g2 < g1
                new = [(b, g2, n2), (a, g1, n1)]
            else:
                swap = True
                new = [(b, g2, n2), (a + t2 - s2, g1, n1)]
        if swap:
            L[j:j + 2] = new
            steps += 1
            if steps > cap:
                raise RuntimeError("exchange sorting did not terminate")
            j = max(j - 1, 0)
        else:
            j += 1
    return L


def _faces(n0, layers, ar):
    """Union the gaps between wires into faces.

    Returns the words, the face of each (level, gap), and for every wire the
    face immediately to its right.
    """
    words, _ = _levels(n0, layers, ar)
    uf = _UF()
    for j, (a, g, _) in enumerate(layers):
        s, t = ar(g)
        n = len(words[j])
        for p in range(a + 1):
            uf.union((j, p), (j + 1, p))
        for p in range(a + s, n + 1):
            uf.union((j, p), (j + 1, p - s + t))
    face = [[uf.find((j, p)) for p in range(len(W) + 1)] for j, W in enumerate(words)]
    right = {}
    for j, W in enumerate(words):
        for p, w in enumerate(W):
            right.setdefault(w, face[j][p + 1])
    return words, face, right


def canonical_layers(n0, layers, ar):
    """Canonical representative of the exchange class of a raw layer list."""
    if not layers:
        return ()
    L = [(a, g, j) for j, (a, g) in enumerate(layers)]
    words, inputs = _levels(n0, L, ar)

    uf = _UF()
    FRAME = "frame"
    uf.find(FRAME)

    def owner(w):
        return FRAME if w[0] == "s" else w[0]

    for j, ins in enumerate(inputs):
        for w in ins:
            uf.union(owner(w), j)
    for w in words[-1]:
        uf.union(owner(w), FRAME)
    root = uf.find(FRAME)
    groups = {}
    for j in range(len(L)):
        groups.setdefault(uf.find(j), []).append(j)
    floating = [g for r, g in groups.items() if r != root]
    if not floating:
        return tuple((a, g) for a, g, _ in _local_sort(L, ar))

    comp_of = {}
    for j in range(len(L)):
        r = uf.find(j)
        comp_of[j] = root if r == root else r
    comps = [root] + [uf.find(g[0]) for g in floating]
    members = {c: [] for c in comps}
    for j in range(len(L)):
        members[comp_of[j]].append(j)

    def wire_comp(w):
        return root if w[0] == "s" else comp_of[w[0]]

    def restrict(c):
        out = []
        for j in members[c]:
            a, g, nid = L[j]
            off = sum(1 for w in words[j][:a] if wire_comp(w) == c)
            out.append((off, g, nid))
        return out

    restricted = {c: restrict(c) for c in comps}

    def locate(c, j, a):
        """Where the point (level j, gap a) of the whole diagram sits relative to c:
        None for the leftmost gap, else the c-wire just to its left."""
        left = [w for w in words[j][:a] if wire_comp(w) == c]
        return left[-1] if left else None

    # faces of each floating component in its original layout, to test nesting
    orig_faces = {}
    for c in comps[1:]:
        _, face, right = _faces(0, restricted[c], ar)
        orig_faces[c] = (face[0][0], right)

    anchor = {}
    for c in comps[1:]:
        j0 = members[c][0]
        anchor[c] = (j0, L[j0][0])

    containers = {}
    for c in comps[1:]:
        j0, a0 = anchor[c]
        inside = []
        for d in comps[1:]:
            if d == c:
                continue
            w = locate(d, j0, a0)
            outer, right = orig_faces[d]
            if w is not None and right[w] != outer:
                inside.append(d)
        containers[c] = inside
    children = {c: [] for c in comps}
    for c in comps[1:]:
        if containers[c]:
            parent = max(containers[c], key=lambda d: len(containers[d]))
        else:
            parent = root
        j0, a0 = anchor[c]
        children[parent].append((c, locate(parent, j0, a0)))

    def build(c):
        n = n0 if c == root else 0
        base = _local_sort(restricted[c], ar)
        _, face, right = _faces(n, base, ar)
        first = {}
        for j, gaps in enumerate(face):
            for p, f in enumerate(gaps):
                first.setdefault(f, (j, p))
        inserts = []
        for child, w in children[c]:
            f = face[0][0] if w is None else right[w]
            j, p = first[f]
            inserts.append((j, p, build(child)))
        inserts.sort()
        out, k = [], 0
        for j in range(len(base) + 1):
            while k < len(inserts) and inserts[k][0] == j:
                _, p, code = inserts[k]
                out.extend((o + p, g) for o, g in code)
                k += 1
            if j < len(base):
                out.append(base[j][:2])
        return tuple(out)

    return build(root)


def _whiskers(source, pairs, sig):
    out = []
    W = source.gens
    for a, g in pairs:
        s, t = sig.c2[g]
        out.append(Whisker(a, g, W))
        W = W[:a] + t.gens + W[a + len(s):]
    return tuple(out)


def canonical(sig, d):
    """NormalForm of a Diagram."""
    pairs = canonical_layers(len(d.source), d.layers, sig.ar)
    nf = NormalForm(d.source, _whiskers(d.source, pairs, sig), d.target)
    return nf


def normalize(P, t, layered=False):
    """Normal form of a term of dimension <= 2.

    0-cells normalize to their name and 1-cells to a :class:`Word`.  For a
    3-cell a :class:`Cell3` (layered, not canonical) is returned when
    ``layered`` is set; it is sound but two equal 3-cells may differ.
    """
    v = evaluate(P, t)
    if isinstance(v, (str, Word)):
        return v
    if isinstance(v, Diagram):
        return canonical(signature(P), v)
    if layered:
        return v
    raise UnsupportedDimension("normal forms are only computed up to dimension 2")


def decide_equal(P, t1, t2):
    T1, T2 = infer_type(P, t1), infer_type(P, t2)
    if T1.dim > 2 or T2.dim > 2:
        raise UnsupportedDimension("equality is decided up to dimension 2")
    if T1 != T2:
        return False
    return normalize(P, t1) == normalize(P, t2)


# -- brute-force oracle


def _swaps(L, ar):
    """All layer lists one exchange step away from L (both directions)."""
    for j in range(len(L) - 1):
        a, g1 = L[j]
        b, g2 = L[j + 1]
        s1, t1 = ar(g1)
        s2, t2 = ar(g2)
        if b + s2 <= a:
            yield L[:j] + ((b, g2), (a + t2 - s2, g1)) + L[j + 2:]
        if a + t1 <= b:
            yield L[:j] + ((b - t1 + s1, g2), (a, g1)) + L[j + 2:]


def oracle_equal(P, t1, t2, bound=100000) -> Optional[bool]:
    """Breadth-first search over exchange moves.

    Returns True when t2's layering is reached from t1's, False when the
    closure is exhausted without reaching it, and None when more than
    ``bound`` layerings were visited first.  Units never appear in a layered
    form, so unit insertions and erasures are accounted for by flattening.
    """
    sig = signature(P)
    known = generator_dims(P)
    v1 = _Evaluator(P, sig, known, right_first=True).eval(t1)
    v2 = _Evaluator(P, sig, known, right_first=True).eval(t2)
    if dim_of(v1) > 2 or dim_of(v2) > 2:
        raise UnsupportedDimension("the oracle works up to dimension 2")
    if dim_of(v1) != dim_of(v2):
        return False
    if not isinstance(v1, Diagram):
        return v1 == v2
    if v1.source != v2.source or v1.target != v2.target:
        return False
    start, goal = tuple(v1.layers), tuple(v2.layers)
    if start == goal:
        return True
    if Counter(g for _, g in start) != Counter(g for _, g in goal):
        return False
    seen = {start}
    queue = deque([start])
    while queue:
        L = queue.popleft()
        for M in _swaps(L, sig.ar):
            if M == goal:
                return True
            if M not in seen:
                if len(seen) >= bound:
                    return None
                seen.add(M)
                queue.append(M)
    return False


# -- enumeration


def words(P, max_len, source=None):
    """All 1-cells of length <= max_len, ordered by (length, source, generators)."""
    sig = signature(P)
    out = [Word(x, x, ()) for x in P.gens[0] if source is None or x == source]
    frontier = list(out)
    for _ in range(max_len):
        nxt = []
        for w in frontier:
            for f in P.gens[1] if len(P.gens) > 1 else ():
                x, y = sig.c1[f]
                if x == w.tgt:
                    nxt.append(Word(w.src, y, w.gens + (f,)))
        out.extend(sorted(nxt, key=lambda w: (w.src, w.gens)))
        frontier = nxt
    return out


def point_at(w, sig, p):
    """The 0-cell at gap p of word w."""
    return w.src if p == 0 else sig.c1[w.gens[p - 1]][1]


def whiskers_on(P, w):
    """All (offset, 2-generator) pairs applicable to word w."""
    sig = signature(P)
    out = []
    for g in P.gens[2] if len(P.gens) > 2 else ():
        s, _ = sig.c2[g]
        n = len(s)
        for a in range(len(w) - n + 1):
            if w.gens[a:a + n] == s.gens and point_at(w, sig, a) == s.src:
                out.append((a, g))
    return sorted(out)


def _apply(sig, w, a, g):
    s, t = sig.c2[g]
    return Word(w.src, w.tgt, w.gens[:a] + t.gens + w.gens[a + len(s):])


def enumerate_cells(P, dim, size, source=None, target=None, max_word=None):
    """All distinct cells within the size bound, in a deterministic order.

    For dimension 1 the bound is the word length; for dimension 2 it is the
    number of layers, over the given source word or over all source words of
    length <= ``max_word`` (default: ``size``).
    """
    if dim > 2:
        raise UnsupportedDimension("enumeration is available up to dimension 2")
    if dim > P.dim:
        return []
    if dim == 0:
        return list(P.gens[0])
    if dim == 1:
        cells = words(P, size)
        if source is not None:
            cells = [w for w in cells if w.src == source]
        if target is not None:
            cells = [w for w in cells if w.tgt == target]
        return cells
    sig = signature(P)
    sources = [source] if source is not None else words(P, size if max_word is None else max_word)
    found = {}
    for src in sources:
        start = NormalForm(src, (), src)
        level = {(): start}
        found[(src, ())] = start
        for _ in range(size):
            nxt = {}
            for nf in level.values():
                base = nf.pairs()
                for a, g in whiskers_on(P, nf.target):
                    tgt = _apply(sig, nf.target, a, g)
                    pairs = canonical_layers(len(src), base + ((a, g),), sig.ar)
                    if (src, pairs) not in found and pairs not in nxt:
                        nxt[pairs] = NormalForm(src, _whiskers(src, pairs, sig), tgt)
            for pairs, nf in nxt.items():
                found[(src, pairs)] = nf
            level = nxt
    cells = list(found.values())
    if target is not None:
        cells = [c for c in cells if c.target == target]
    cells.sort(key=lambda c: (len(c.layers), c.source.src, c.source.gens, c.pairs()))
    return cells


# -- finite free categories as explicit tables


def cell_name(v):
    if isinstance(v, str):
        return v
    if isinstance(v, Word):
        return str(v)
    body = ",".join(f"{a}:{g}" for a, g in v.pairs())
    return f"{v.source}|{body}"


def finite_free_category(P, max_size=12):
    """The free category on P (dimension <= 2) as a FiniteStrictCat.

    Only works when that category is finite; raises ValueError when words or
    2-cells keep growing past ``max_size``.
    """
    from .globset import GlobularSet
    from .strictcat import FiniteStrictCat, composable_pairs

    if P.dim > 2:
        raise UnsupportedDimension("finite tables are built up to dimension 2")
    sig = signature(P)
    ws = words(P, max_size + 1) if P.dim >= 1 else []
    if any(len(w) > max_size for w in ws):
        raise ValueError("the free category has infinitely many 1-cells")
    cells = [list(P.gens[0])]
    src, tgt = [], []
    if P.dim >= 1:
        cells.append([str(w) for w in ws])
        src.append({str(w): w.src for w in ws})
        tgt.append({str(w): w.tgt for w in ws})
    nfs = []
    if P.dim >= 2:
        for w in ws:
            found = enumerate_cells(P, 2, max_size + 1, source=w)
            if any(len(c.layers) > max_size for c in found):
                raise ValueError("the free category has infinitely many 2-cells")
            nfs.extend(found)
        cells.append([cell_name(c) for c in nfs])
        src.append({cell_name(c): str(c.source) for c in nfs})
        tgt.append({cell_name(c): str(c.target) for c in nfs})
    X = GlobularSet.build(cells, src, tgt)
    by_name = {str(w): w for w in ws}
    by_name2 = {cell_name(c): c for c in nfs}
    identity = []
    if P.dim >= 1:
        identity.append({x: str(empty(x)) for x in P.gens[0]})
    if P.dim >= 2:
        identity.append({str(w): cell_name(NormalForm(w, (), w)) for w in ws})
    comp = {}
    if P.dim >= 1:
        comp[(0, 1)] = {(u, v): str(concat_words(by_name[u], by_name[v])) for u, v in composable_pairs(X, 0, 1)}
    if P.dim >= 2:
        for i in (0, 1):
            t = {}
            for u, v in composable_pairs(X, i, 2):
                a, b = by_name2[u].diagram(), by_name2[v].diagram()
                d = vcat(a, b) if i == 1 else hcat(a, b)
                t[(u, v)] = cell_name(canonical(sig, d))
            comp[(i, 2)] = t
    return FiniteStrictCat(X, tuple(identity), comp)
