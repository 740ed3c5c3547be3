"""Finite categories shared by several test modules."""

import copy
from dataclasses import replace

from polycat.freecat import finite_free_category
from polycat.polygraph import make_polygraph
from polycat.strictcat import (
    commutative_monoid_2cat, cyclic_group, from_category, monoid_category,
    poset_category, sc_coinclude, sc_include, sc_truncate, terminal,
)
from polycat.syntax import Comp, Gen


def parallel_arrows():
    arrows = {"1x": ("x", "x"), "1y": ("y", "y"), "f": ("x", "y"), "g": ("x", "y")}
    return from_category(["x", "y"], arrows, {"x": "1x", "y": "1y"},
                         lambda f, g: g if f in ("1x", "1y") else f)


def discrete(n):
    xs = [f"o{i}" for i in range(n)]
    return from_category(xs, {f"1{x}": (x, x) for x in xs}, {x: f"1{x}" for x in xs}, lambda f, g: f)


def chain(n):
    xs = [f"c{i}" for i in range(n)]
    return poset_category(xs, lambda a, b: int(a[1:]) <= int(b[1:]))


def one_categories():
    return {
        "terminal": terminal(1),
        "Z2": cyclic_group(2),
        "Z3": cyclic_group(3),
        "chain3": chain(3),
        "parallel": parallel_arrows(),
        "discrete2": discrete(2),
        "bool-and": monoid_category([0, 1], lambda a, b: a & b, 1),
    }


def free_polygraphs():
    g = Gen
    return {
        "square": make_polygraph([
            ["x", "y", "z"],
            [("f", g("x"), g("y")), ("f2", g("x"), g("y")), ("h", g("y"), g("z")), ("h2", g("y"), g("z"))],
            [("al", g("f"), g("f2")), ("be", g("h"), g("h2"))],
        ], name="square"),
        "chain2": make_polygraph([
            ["x", "y"],
            [("f", g("x"), g("y")), ("g", g("x"), g("y")), ("h", g("x"), g("y"))],
            [("al", g("f"), g("g")), ("be", g("g"), g("h"))],
        ], name="chain2"),
        "triangle": make_polygraph([
            ["x", "y", "z"],
            [("f", g("x"), g("y")), ("g", g("y"), g("z")), ("h", g("x"), g("z"))],
            [("al", Comp(0, g("f"), g("g")), g("h"))],
        ], name="triangle"),
    }


def two_categories():
    """At least ten finite strict 2-categories of different shapes."""
    free = {k: finite_free_category(P) for k, P in free_polygraphs().items()}
    out = {
        "terminal2": terminal(2),
        "incl-Z2": sc_include(cyclic_group(2), 2),
        "incl-chain3": sc_include(chain(3), 2),
        "coincl-Z2": sc_coinclude(cyclic_group(2), 2),
        "coincl-chain2": sc_coinclude(chain(2), 2),
        "coincl-parallel": sc_coinclude(parallel_arrows(), 2),
        "cmon-Z2": commutative_monoid_2cat([0, 1], lambda a, b: (a + b) % 2, 0),
        "cmon-Z3": commutative_monoid_2cat([0, 1, 2], lambda a, b: (a + b) % 3, 0),
        "cmon-max": commutative_monoid_2cat([0, 1, 2], max, 0),
    }
    for k, C in free.items():
        out[f"free-{k}"] = C
        out[f"trunc-free-{k}"] = sc_include(sc_truncate(C, 1), 2)
        out[f"coincl-trunc-free-{k}"] = sc_coinclude(sc_truncate(C, 1), 2)
    return out


def _edit(C, key, entry, value):
    comp = copy.deepcopy(C.comp)
    comp[key][entry] = value
    return replace(C, comp=comp)


def corrupted():
    """(name, category, expected label) triples, each breaking one axiom on purpose."""
    out = []
    # identity of a 1-cell replaced by a 2-cell with another target
    C = finite_free_category(free_polygraphs()["chain2"])
    ident = (C.identity[0], {**C.identity[1], "f": _cell(C, "al")})
    out.append(("identity-boundary", replace(C, identity=ident), "S-i"))
    # vertical composite given the wrong target
    al, be = _cell(C, "al"), _cell(C, "be")
    out.append(("composite-boundary", _edit(C, (1, 2), (al, be), al), "S-ii"))
    # unit law broken in Z/2
    out.append(("unit", _edit(cyclic_group(2), (0, 1), ("0", "1"), "0"), "S-iii"))
    # unital but non-associative magma on {e, a, b}
    mag = {("a", "a"): "b", ("a", "b"): "a", ("b", "a"): "b", ("b", "b"): "a"}
    M = monoid_category(["e", "a", "b"], lambda x, y: y if x == "e" else x if y == "e" else mag[(x, y)], "e")
    out.append(("associativity", M, "S-iv"))
    # horizontal composite of identities is no longer an identity
    out.append(("identity-composite", _edit(commutative_monoid_2cat([0, 1], lambda a, b: (a + b) % 2, 0),
                                            (0, 2), ("0", "0"), "1"), "S-v"))
    # two different monoid structures with the same unit: no interchange
    C = commutative_monoid_2cat([0, 1, 2], lambda a, b: (a + b) % 3, 0)
    hor = {(a, b): str(max(int(a), int(b))) for a, b in C.comp[(0, 2)]}
    out.append(("interchange", replace(C, comp={**C.comp, (0, 2): hor}), "S-vi"))
    return out


def _cell(C, gen):
    """Name of the 2-cell in a finite free category that is the bare generator."""
    return next(n for n in C.carrier.cells[2] if n.endswith(f"|0:{gen}"))


def precat_corrupted():
    """Precategories that break one condition each: (name, precategory, label)."""
    from polycat.precat import theta

    base = theta(commutative_monoid_2cat([0, 1, 2], lambda a, b: (a + b) % 3, 0))
    out = []
    # vertical composition by a non-commutative monoid: whiskering is trivial, so (E)
    # demands commutativity
    left_zero = {(a, b): (a if a != "0" else b) for a, b in base.pcomp[(1, 2, 2)]}
    out.append(("non-commutative", replace(base, pcomp={**base.pcomp, (1, 2, 2): left_zero}), "E"))
    pc = copy.deepcopy(base.pcomp)
    pc[(1, 2, 2)][("1", "1")] = "1"
    out.append(("non-associative", replace(base, pcomp=pc), "P-iv"))
    pc = copy.deepcopy(base.pcomp)
    pc[(0, 2, 1)][("1", "1")] = "2"
    out.append(("whiskering", replace(base, pcomp=pc), "P-v"))
    return out
