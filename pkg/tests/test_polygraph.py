import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from corpus import two_categories
from polycat import cli
from polycat.errors import StructuralError, TypingError, UnsupportedDimension
from polycat.freecat import Word
from polycat.polygraph import (
    BaseContext, CellularExtension, FreeContext, PolMorphism, check_morphism, coproduct,
    coproduct_injections, empty_polygraph, free_extension_terms, make_polygraph, pushout,
    truncate_pol, validate_extension, validate_polygraph,
)
from polycat.strictcat import sc_truncate
from polycat.syntax import Gen, Id, parse_term
from randgen import random_polygraph


def load(name):
    return cli.load_polygraph(cli.fixture_path(f"{name}.pol"))


@pytest.mark.parametrize("name", ["loop", "mono", "adjunction"])
def test_shipped_are_valid(name):
    assert validate_polygraph(load(name)).ok


def test_boundary_violation():
    P = make_polygraph([["x", "y", "z"], [("f", "x", "y"), ("k", "y", "z")], [("g", "f", "k")]])
    rep = validate_polygraph(P)
    assert not rep.ok
    assert {v.witness for v in rep.violations} == {("g",)}


def test_ill_typed_boundary():
    P = make_polygraph([["x", "y"], [("f", "x", "y")], [("g", "f *0 f", "f")]])
    rep = validate_polygraph(P)
    assert rep.labels() == {"typing"}


def test_unknown_and_duplicate_names():
    with pytest.raises(StructuralError):
        make_polygraph([["x"], [("f", "x", "y")]])
    with pytest.raises(StructuralError):
        make_polygraph([["x"], [("x", "x", "x")]])


def test_truncation():
    M = load("mono")
    T = truncate_pol(M, 2)
    assert T.gens == (("x",), ("one",), ("mu", "eta"))
    assert truncate_pol(M, 3) == M
    assert truncate_pol(M, 0).gens == (("x",),)


def test_coproduct_examples():
    L = load("loop")
    C = coproduct(L, L)
    assert C.gens == (("l.x", "r.x"), ("l.f", "r.f"))
    assert validate_polygraph(C).ok
    E = coproduct(L, empty_polygraph())
    assert [len(g) for g in E.gens] == [1, 1]
    for inj in coproduct_injections(L, L, C):
        assert check_morphism(inj).ok


def test_pushout_examples():
    L = load("loop")
    R = make_polygraph([["x"]], name="pt")
    f = PolMorphism(R, L, ({"x": "x"},))
    O = pushout(f, f)
    assert O.gens == (("l.x",), ("l.f", "r.f"))
    assert O.src[1]["r.f"] == Gen("l.x")
    empty = empty_polygraph()
    e1, e2 = PolMorphism(empty, L, ({},)), PolMorphism(empty, L, ({},))
    assert pushout(e1, e2).gens == coproduct(L, L).gens
    ident = PolMorphism(L, L, ({"x": "x"}, {"f": "f"}))
    assert [len(g) for g in pushout(ident, ident).gens] == [1, 1]


def test_morphism_violation():
    A = load("adjunction")
    bad = PolMorphism(A, A, ({"x": "x", "y": "y"}, {"f": "g", "g": "f"}, {"unit": "unit", "counit": "counit"}))
    assert not check_morphism(bad).ok
    swap = make_polygraph([["x", "y"], [("f", "x", "y"), ("g", "x", "y")]])
    F = PolMorphism(swap, swap, ({"x": "x", "y": "y"}, {"f": "g", "g": "f"}))
    assert check_morphism(F).ok


def _oracle_counts(P, Q, f, g, k):
    G = nx.Graph()
    G.add_nodes_from([("l", x) for x in P.gens[k]] + [("r", y) for y in Q.gens[k]])
    if k <= f.source.dim:
        G.add_edges_from((("l", f.maps[k][r]), ("r", g.maps[k][r])) for r in f.source.gens[k])
    return nx.number_connected_components(G)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**9))
def test_colimits_are_dimensionwise(seed):
    rng = random.Random(seed)
    P, Q = random_polygraph(rng), random_polygraph(rng)
    R = make_polygraph([[f"r{i}" for i in range(rng.randint(0, 3))]], name="R")
    f = PolMorphism(R, P, ({r: rng.choice(P.gens[0]) for r in R.gens[0]},))
    g = PolMorphism(R, Q, ({r: rng.choice(Q.gens[0]) for r in R.gens[0]},))
    O = pushout(f, g)
    assert validate_polygraph(O).ok
    for k in range(O.dim + 1):
        assert len(O.gens[k]) == _oracle_counts(P, Q, f, g, k)
    # truncation commutes with both colimits
    for k in range(min(P.dim, Q.dim) + 1):
        assert truncate_pol(coproduct(P, Q), k).gens == coproduct(truncate_pol(P, k), truncate_pol(Q, k)).gens
        fk = PolMorphism(R, truncate_pol(P, k), f.maps)
        gk = PolMorphism(R, truncate_pol(Q, k), g.maps)
        assert truncate_pol(O, k).gens == pushout(fk, gk).gens
        assert truncate_pol(O, k).src == pushout(fk, gk).src


def test_extension_over_free_base():
    L = load("loop")
    E = CellularExtension(L, ("alpha",), {"alpha": Gen("f")}, {"alpha": Gen("f")})
    ctx = free_extension_terms(E)
    T = ctx.infer_type(parse_term("alpha *1 alpha"))
    assert (T.dim, T.source, T.target) == (2, Word("x", "x", ("f",)), Word("x", "x", ("f",)))
    assert ctx.truncate(1).generators(1) == L.gens[1]
    assert ctx.truncate(1).cells(1, 4) == FreeContext(L).cells(1, 4)
    empty = free_extension_terms(CellularExtension(L, (), {}, {}))
    assert empty.generators(2) == ()
    assert empty.infer_type(parse_term("id(f)")).dim == 2
    with pytest.raises(StructuralError):
        free_extension_terms(CellularExtension(L, ("beta",), {"beta": Gen("h")}, {"beta": Gen("f")}))


def test_extension_over_finite_base():
    C = sc_truncate(two_categories()["free-chain2"], 1)
    E = CellularExtension(C, ("s", "t"), {"s": "f", "t": "g"}, {"s": "g", "t": "h"})
    assert validate_extension(E).ok
    ctx = free_extension_terms(E)
    assert isinstance(ctx, BaseContext)
    T = ctx.infer_type(parse_term("s *1 t"))
    assert (T.dim, T.source, T.target) == (2, "f", "h")
    T = ctx.infer_type(parse_term("id(x) *0 s"))
    assert (T.source, T.target) == ("f", "g")
    with pytest.raises(TypingError):
        ctx.infer_type(parse_term("t *1 s"))
    assert ctx.truncate(1).cells(1) == list(C.carrier.cells[1])
    with pytest.raises(UnsupportedDimension):
        ctx.cells(2)
    bad = CellularExtension(C, ("u",), {"u": "f"}, {"u": "id(x)"})
    assert validate_extension(bad).labels() == {"parallel"}


def test_free_context_truncation():
    M = load("mono")
    A = FreeContext(M).truncate(1)
    B = FreeContext(truncate_pol(M, 1))
    assert A.generators(1) == B.generators(1)
    assert A.cells(1, 4) == B.cells(1, 4)
    assert A.infer_type(Id(Gen("one"))).dim == 2
