"""Essentially algebraic theories and their finite models.

Terms use positional variables: ``Var(1)`` is x1, the first entry of the
context.  Partial operations have their domain of definition described by
equations between total terms (``defs``).

>>> check_judgment(T_MON, ("s",), App("m", (App("e", ()), Var(1))))
's'
>>> M = z2_xor()
>>> eval_term(M, ("s", "s"), App("m", (Var(1), Var(2))), (1, 1))
0
"""

from dataclasses import dataclass, field
from itertools import product

from .errors import Report, StructuralError, TypingError


class _Undefined:
    def __repr__(self):
        return "UNDEFINED"

    def __bool__(self):
        return False


UNDEFINED = _Undefined()


@dataclass(frozen=True)
class Var:
    index: int  # 1-based

    def __str__(self):
        return f"x{self.index}"


@dataclass(frozen=True)
class App:
    symbol: str
    args: tuple = ()

    def __str__(self):
        return f"{self.symbol}({', '.join(map(str, self.args))})"


@dataclass(frozen=True)
class Symbol:
    arity: tuple
    target: str


@dataclass(frozen=True)
class Equation:
    context: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class Theory:
    sorts: tuple
    symbols: dict  # name -> Symbol
    equations: tuple = ()
    total: frozenset = frozenset()
    defs: dict = field(default_factory=dict)  # partial symbol -> tuple of (t1, t2)
    name: str = "T"

    def __hash__(self):
        return hash((self.name, self.sorts))


def symbols_of(t):
    if isinstance(t, Var):
        return set()
    out = {t.symbol}
    for a in t.args:
        out |= symbols_of(a)
    return out


def check_judgment(T, ctx, t):
    """The sort s with ctx |- t : s; raises TypingError otherwise."""
    if isinstance(t, Var):
        if not 1 <= t.index <= len(ctx):
            raise TypingError(f"variable x{t.index} is not in a context of length {len(ctx)}")
        return ctx[t.index - 1]
    sym = T.symbols.get(t.symbol)
    if sym is None:
        raise TypingError(f"unknown symbol {t.symbol!r}")
    if len(sym.arity) != len(t.args):
        raise TypingError(f"{t.symbol} takes {len(sym.arity)} arguments, got {len(t.args)}")
    for want, a in zip(sym.arity, t.args):
        got = check_judgment(T, ctx, a)
        if got != want:
            raise TypingError(f"argument of {t.symbol} has sort {got}, expected {want}")
    return sym.target


def check_theory(T):
    """Well-formedness: sorts exist, equations are well sorted, Def uses total symbols only."""
    rep = Report()
    sorts = set(T.sorts)
    for name, sym in T.symbols.items():
        for s in sym.arity + (sym.target,):
            if s not in sorts:
                rep.add("sort", (name,), f"unknown sort {s}")
    if not set(T.total) <= set(T.symbols):
        rep.add("total", tuple(sorted(set(T.total) - set(T.symbols))), "unknown total symbols")
    for n, eq in enumerate(T.equations):
        try:
            a = check_judgment(T, eq.context, eq.lhs)
            b = check_judgment(T, eq.context, eq.rhs)
            if a != b:
                rep.add("equation", (n,), f"sides have sorts {a} and {b}")
        except TypingError as e:
            rep.add("equation", (n,), str(e))
    for name, sym in T.symbols.items():
        if name in T.total:
            if T.defs.get(name):
                rep.add("def", (name,), "total symbol with a domain")
            continue
        if name not in T.defs:
            rep.add("def", (name,), "partial symbol without a domain")
            continue
        for t1, t2 in T.defs[name]:
            bad = (symbols_of(t1) | symbols_of(t2)) - set(T.total)
            if bad:
                rep.add("def", (name,), f"domain uses non-total symbols {sorted(bad)}")
                continue
            try:
                a = check_judgment(T, sym.arity, t1)
                b = check_judgment(T, sym.arity, t2)
                if a != b:
                    rep.add("def", (name,), f"domain equation sides have sorts {a} and {b}")
            except TypingError as e:
                rep.add("def", (name,), str(e))
    return rep


@dataclass(frozen=True)
class FiniteModel:
    carriers: dict  # sort -> tuple of values
    ops: dict  # symbol -> {args tuple: value}


def _check_args(M, ctx, ys):
    if len(ys) != len(ctx):
        raise StructuralError(f"{len(ys)} values for a context of length {len(ctx)}")
    for s, y in zip(ctx, ys):
        if y not in M.carriers[s]:
            raise StructuralError(f"{y!r} is not in the carrier of {s}")


def eval_term(M, ctx, t, ys, check=True):
    """Strict partial evaluation; returns UNDEFINED when any step is undefined."""
    if check:
        _check_args(M, ctx, ys)
    if isinstance(t, Var):
        return ys[t.index - 1]
    args = []
    for a in t.args:
        v = eval_term(M, ctx, a, ys, check=False)
        if v is UNDEFINED:
            return UNDEFINED
        args.append(v)
    return M.ops.get(t.symbol, {}).get(tuple(args), UNDEFINED)


def _check_tables(T, M):
    for s in T.sorts:
        if s not in M.carriers:
            raise StructuralError(f"no carrier for sort {s}")
    for name in M.ops:
        if name not in T.symbols:
            raise StructuralError(f"table for unknown symbol {name!r}")
    for name, table in M.ops.items():
        sym = T.symbols[name]
        for args, v in table.items():
            if len(args) != len(sym.arity) or any(a not in M.carriers[s] for s, a in zip(sym.arity, args)):
                raise StructuralError(f"{name}{args}: arguments outside the carriers")
            if v not in M.carriers[sym.target]:
                raise StructuralError(f"{name}{args} = {v!r} is outside the carrier of {sym.target}")


def check_model(T, M):
    """Exhaustive check of both model conditions.

    Labels: "domain" when a partial symbol is defined off its Def locus or
    undefined on it (and "total" for a total symbol with a missing entry),
    "equation" for an equation failing where both sides are defined.
    """
    _check_tables(T, M)
    rep = Report()
    for name, sym in T.symbols.items():
        table = M.ops.get(name, {})
        for ys in product(*(M.carriers[s] for s in sym.arity)):
            defined = ys in table
            if name in T.total:
                if not defined:
                    rep.add("total", (name,) + ys, "total symbol undefined")
                continue
            want = all(
                eval_term(M, sym.arity, a, ys, check=False) == eval_term(M, sym.arity, b, ys, check=False)
                for a, b in T.defs.get(name, ())
            )
            if defined != want:
                rep.add("domain", (name,) + ys, "defined off its domain" if defined else "undefined on its domain")
    for n, eq in enumerate(T.equations):
        for ys in product(*(M.carriers[s] for s in eq.context)):
            a = eval_term(M, eq.context, eq.lhs, ys, check=False)
            b = eval_term(M, eq.context, eq.rhs, ys, check=False)
            if a is not UNDEFINED and b is not UNDEFINED and a != b:
                rep.add("equation", (n,) + ys, f"{eq.lhs} = {a} but {eq.rhs} = {b}")
    return rep


@dataclass(frozen=True)
class TheoryMorphism:
    source: Theory
    target: Theory
    sort_map: dict
    symbol_map: dict

    def sorts(self, ss):
        return tuple(self.sort_map[s] for s in ss)

    def term(self, t):
        if isinstance(t, Var):
            return t
        return App(self.symbol_map[t.symbol], tuple(self.term(a) for a in t.args))


def check_theory_morphism(h, T=None, T2=None):
    T = h.source if T is None else T
    T2 = h.target if T2 is None else T2
    rep = Report()
    for s in T.sorts:
        if h.sort_map.get(s) not in T2.sorts:
            rep.add("arity", (s,), "sort not mapped to a sort of the target")
    if not rep.ok:
        return rep
    for name, sym in T.symbols.items():
        g = h.symbol_map.get(name)
        if g not in T2.symbols:
            rep.add("arity", (name,), "symbol not mapped to a symbol of the target")
            continue
        sym2 = T2.symbols[g]
        if h.sorts(sym.arity) != sym2.arity or h.sort_map[sym.target] != sym2.target:
            rep.add("arity", (name,), f"{name} is not sent to a symbol of the transported type")
        if (name in T.total) != (g in T2.total):
            rep.add("totality", (name,), f"{name} and {g} differ in totality")
    if not rep.ok:
        return rep
    eqs2 = {(e.context, e.lhs, e.rhs) for e in T2.equations}
    for n, e in enumerate(T.equations):
        image = (h.sorts(e.context), h.term(e.lhs), h.term(e.rhs))
        if image not in eqs2:
            rep.add("equation", (n,), f"image of {e.lhs} = {e.rhs} is not an equation of the target")
    for name in T.symbols:
        if name in T.total:
            continue
        mine = {(h.term(a), h.term(b)) for a, b in T.defs.get(name, ())}
        theirs = set(T2.defs.get(h.symbol_map[name], ()))
        if mine != theirs:
            rep.add("def", (name,), "domain equations are not carried over")
    return rep


def reduct(h, M2):
    """The model of the source theory obtained by restriction along h."""
    T = h.source
    carriers = {s: M2.carriers[h.sort_map[s]] for s in T.sorts}
    ops = {name: dict(M2.ops.get(h.symbol_map[name], {})) for name in T.symbols}
    return FiniteModel(carriers, ops)


def identity_morphism(T):
    return TheoryMorphism(T, T, {s: s for s in T.sorts}, {f: f for f in T.symbols})


# -- bundled theories

x1, x2, x3 = Var(1), Var(2), Var(3)


def _a(f, *args):
    return App(f, tuple(args))


T_MON = Theory(
    sorts=("s",),
    symbols={"e": Symbol((), "s"), "m": Symbol(("s", "s"), "s")},
    equations=(
        Equation(("s",), _a("m", _a("e"), x1), x1),
        Equation(("s",), _a("m", x1, _a("e")), x1),
        Equation(("s", "s", "s"), _a("m", _a("m", x1, x2), x3), _a("m", x1, _a("m", x2, x3))),
    ),
    total=frozenset({"e", "m"}),
    name="mon",
)

T_GRP = Theory(
    sorts=("s",),
    symbols={**T_MON.symbols, "i": Symbol(("s",), "s")},
    equations=T_MON.equations + (
        Equation(("s",), _a("m", _a("i", x1), x1), _a("e")),
        Equation(("s",), _a("m", x1, _a("i", x1)), _a("e")),
    ),
    total=frozenset({"e", "m", "i"}),
    name="grp",
)

T_GPH = Theory(
    sorts=("c0", "c1"),
    symbols={"gsrc0": Symbol(("c1",), "c0"), "gtgt0": Symbol(("c1",), "c0")},
    total=frozenset({"gsrc0", "gtgt0"}),
    name="gph",
)

T_CAT = Theory(
    sorts=("c0", "c1"),
    symbols={
        "src0": Symbol(("c1",), "c0"),
        "tgt0": Symbol(("c1",), "c0"),
        "id1": Symbol(("c0",), "c1"),
        "comp": Symbol(("c1", "c1"), "c1"),
    },
    equations=(
        Equation(("c0",), _a("src0", _a("id1", x1)), x1),
        Equation(("c0",), _a("tgt0", _a("id1", x1)), x1),
        Equation(("c1", "c1"), _a("src0", _a("comp", x1, x2)), _a("src0", x1)),
        Equation(("c1", "c1"), _a("tgt0", _a("comp", x1, x2)), _a("tgt0", x2)),
        Equation(("c1",), _a("comp", _a("id1", _a("src0", x1)), x1), x1),
        Equation(("c1",), _a("comp", x1, _a("id1", _a("tgt0", x1))), x1),
        Equation(("c1", "c1", "c1"), _a("comp", _a("comp", x1, x2), x3), _a("comp", x1, _a("comp", x2, x3))),
    ),
    total=frozenset({"src0", "tgt0", "id1"}),
    defs={"comp": ((_a("tgt0", x1), _a("src0", x2)),)},
    name="cat",
)

MON_TO_GRP = TheoryMorphism(T_MON, T_GRP, {"s": "s"}, {"e": "e", "m": "m"})
GPH_TO_CAT = TheoryMorphism(T_GPH, T_CAT, {"c0": "c0", "c1": "c1"}, {"gsrc0": "src0", "gtgt0": "tgt0"})

THEORIES = {"mon": T_MON, "grp": T_GRP, "gph": T_GPH, "cat": T_CAT}


def monoid_model(elements, op, unit, inverse=None):
    es = tuple(elements)
    ops = {"e": {(): unit}, "m": {(a, b): op(a, b) for a in es for b in es}}
    if inverse is not None:
        ops["i"] = {(a,): inverse(a) for a in es}
    return FiniteModel({"s": es}, ops)


def z2_xor():
    return monoid_model((0, 1), lambda a, b: a ^ b, 0)


def category_model(objects, arrows, identity, compose):
    """A T_CAT model from a finite category: arrows {name: (src, tgt)}."""
    objects, names = tuple(objects), tuple(arrows)
    ops = {
        "src0": {(f,): arrows[f][0] for f in names},
        "tgt0": {(f,): arrows[f][1] for f in names},
        "id1": {(x,): identity[x] for x in objects},
        "comp": {(f, g): compose(f, g) for f in names for g in names if arrows[f][1] == arrows[g][0]},
    }
    return FiniteModel({"c0": objects, "c1": names}, ops)


def arrow_category():
    """Two objects and one non-identity arrow a -> b."""
    arrows = {"1a": ("a", "a"), "1b": ("b", "b"), "f": ("a", "b")}
    ident = {"a": "1a", "b": "1b"}

    def compose(f, g):
        if f in ("1a", "1b"):
            return g
        return f

    return category_model(("a", "b"), arrows, ident, compose)
