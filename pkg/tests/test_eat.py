import random

import pytest
from hypothesis import given, settings, strategies as st

from polycat import eat
from polycat.eat import (
    GPH_TO_CAT, MON_TO_GRP, T_CAT, T_GPH, T_GRP, T_MON, UNDEFINED, App, FiniteModel, Theory, TheoryMorphism, Var,
    check_judgment, check_model, check_theory, check_theory_morphism, eval_term, identity_morphism,
    monoid_model, reduct, z2_xor,
)
from polycat.errors import StructuralError, TypingError

x1, x2 = Var(1), Var(2)


def a(f, *args):
    return App(f, tuple(args))


def test_judgments():
    assert check_judgment(T_MON, ("s",), a("m", a("e"), x1)) == "s"
    assert check_judgment(T_CAT, ("c0",), a("id1", x1)) == "c1"
    with pytest.raises(TypingError):
        check_judgment(T_MON, ("s",), x2)
    with pytest.raises(TypingError):
        check_judgment(T_CAT, ("c1",), a("id1", x1))
    with pytest.raises(TypingError):
        check_judgment(T_MON, ("s",), a("m", x1))


@pytest.mark.parametrize("T", [T_MON, T_GRP, T_GPH, T_CAT], ids=lambda T: T.name)
def test_bundled_theories(T):
    assert check_theory(T).ok
    for eq in T.equations:
        assert check_judgment(T, eq.context, eq.lhs) == check_judgment(T, eq.context, eq.rhs)


def test_ill_formed_theory():
    T = Theory(("s",), {"e": eat.Symbol((), "s"), "p": eat.Symbol(("s", "s"), "s")},
               total=frozenset({"e"}), defs={"p": ((a("p", x1, x2), x1),)})
    assert check_theory(T).labels() == {"def"}


def test_evaluation():
    M = z2_xor()
    assert eval_term(M, ("s", "s"), a("m", x1, x2), (1, 1)) == 0
    assert eval_term(M, ("s",), x1, (1,)) == 1
    C = eat.arrow_category()
    assert eval_term(C, ("c1", "c1"), a("comp", x1, x2), ("f", "f")) is UNDEFINED
    assert eval_term(C, ("c1", "c1"), a("comp", x1, x2), ("f", "1b")) == "f"
    with pytest.raises(StructuralError):
        eval_term(M, ("s",), x1, (7,))
    with pytest.raises(StructuralError):
        eval_term(M, ("s", "s"), x1, (1,))


def test_models():
    assert check_model(T_MON, z2_xor()).ok
    # m(x, e) = 1 - x: the unit laws break (and so does associativity)
    ops = dict(z2_xor().ops)
    ops["m"] = {**ops["m"], (0, 0): 1, (1, 0): 0}
    rep = check_model(T_MON, FiniteModel({"s": (0, 1)}, ops))
    assert rep.labels() == {"equation"}
    assert (1, 0) in {v.witness for v in rep.violations}
    assert check_model(T_CAT, eat.arrow_category()).ok


def test_domain_is_an_iff():
    C = eat.arrow_category()
    extra = FiniteModel(C.carriers, {**C.ops, "comp": {**C.ops["comp"], ("f", "f"): "f"}})
    rep = check_model(T_CAT, extra)
    assert ("domain", ("comp", "f", "f")) in {(v.label, v.witness) for v in rep.violations}
    comp = dict(C.ops["comp"])
    del comp[("1a", "f")]
    rep = check_model(T_CAT, FiniteModel(C.carriers, {**C.ops, "comp": comp}))
    assert ("domain", ("comp", "1a", "f")) in {(v.label, v.witness) for v in rep.violations}
    ops = {**C.ops, "id1": {("a",): "1a"}}
    assert "total" in check_model(T_CAT, FiniteModel(C.carriers, ops)).labels()


def test_table_values_must_lie_in_carriers():
    M = z2_xor()
    with pytest.raises(StructuralError):
        check_model(T_MON, FiniteModel(M.carriers, {**M.ops, "e": {(): 5}}))


def test_morphisms():
    assert check_theory_morphism(GPH_TO_CAT).ok
    assert check_theory_morphism(MON_TO_GRP).ok
    assert check_theory_morphism(identity_morphism(T_CAT)).ok
    partial = Theory(("c0", "c1"), T_GPH.symbols, total=frozenset({"gsrc0"}),
                     defs={"gtgt0": ((x1, x1),)}, name="weird")
    h = TheoryMorphism(partial, T_CAT, {"c0": "c0", "c1": "c1"}, {"gsrc0": "src0", "gtgt0": "tgt0"})
    assert "totality" in check_theory_morphism(h).labels()
    wrong = TheoryMorphism(T_GPH, T_CAT, {"c0": "c1", "c1": "c0"}, {"gsrc0": "src0", "gtgt0": "tgt0"})
    assert check_theory_morphism(wrong).labels() == {"arity"}


def test_reducts():
    C = eat.arrow_category()
    G = reduct(GPH_TO_CAT, C)
    assert G.ops == {"gsrc0": C.ops["src0"], "gtgt0": C.ops["tgt0"]}
    assert check_model(T_GPH, G).ok
    assert reduct(identity_morphism(T_CAT), C) == C
    Z4 = monoid_model(range(4), lambda p, q: (p + q) % 4, 0, inverse=lambda p: -p % 4)
    assert check_model(T_GRP, Z4).ok
    assert reduct(MON_TO_GRP, Z4) == monoid_model(range(4), lambda p, q: (p + q) % 4, 0)


def test_reducts_of_corpus_are_models():
    cats = [eat.arrow_category(), eat.category_model(
        ("p", "q"), {"1p": ("p", "p"), "1q": ("q", "q"), "u": ("p", "q"), "v": ("p", "q")},
        {"p": "1p", "q": "1q"}, lambda f, g: g if f in ("1p", "1q") else f)]
    for C in cats:
        assert check_model(T_CAT, C).ok
        assert check_model(T_GPH, reduct(GPH_TO_CAT, C)).ok
    for n in range(1, 5):
        G = monoid_model(range(n), lambda p, q: (p + q) % n, 0, inverse=lambda p: -p % n)
        assert check_model(T_MON, reduct(MON_TO_GRP, G)).ok


def _random_term(rng, depth):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([x1, x2])
    f = rng.choice(["src0", "tgt0", "id1", "comp"])
    if f == "comp":
        return a(f, _random_term(rng, depth - 1), _random_term(rng, depth - 1))
    return a(f, _random_term(rng, depth - 1))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_evaluation_is_strict(seed):
    """Untyped random terms over a partial model: undefined anywhere means undefined."""
    rng = random.Random(seed)
    C = eat.arrow_category()
    t = _random_term(rng, 4)
    ys = (rng.choice(C.carriers["c1"]), rng.choice(C.carriers["c1"]))

    def naive(u):
        if isinstance(u, Var):
            return ys[u.index - 1]
        vals = [naive(b) for b in u.args]
        if any(v is UNDEFINED for v in vals):
            return UNDEFINED
        return C.ops[u.symbol].get(tuple(vals), UNDEFINED)

    assert eval_term(C, ("c1", "c1"), t, ys) == naive(t)
    if not isinstance(t, Var) and any(naive(b) is UNDEFINED for b in t.args):
        assert eval_term(C, ("c1", "c1"), t, ys) is UNDEFINED
