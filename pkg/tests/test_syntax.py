import pytest
from hypothesis import given, settings, strategies as st

from polycat.errors import ParseError
from polycat.syntax import Comp, Gen, Id, comp, generators_of, parse_term, rename, show_term, valid_identifier

names = st.sampled_from(["a", "b", "mu", "eta", "f'", "x_1"])
terms = st.recursive(
    names.map(Gen),
    lambda sub: st.one_of(
        sub.map(Id),
        st.builds(Comp, st.integers(0, 3), sub, sub),
    ),
    max_leaves=12,
)


def test_precedence():
    assert parse_term("a *0 b *1 c") == Comp(0, Gen("a"), Comp(1, Gen("b"), Gen("c")))
    assert parse_term("a *1 b *0 c") == Comp(0, Comp(1, Gen("a"), Gen("b")), Gen("c"))
    assert parse_term("a *0 b *0 c") == Comp(0, Comp(0, Gen("a"), Gen("b")), Gen("c"))
    assert parse_term("a *2 b *1 c *2 d") == Comp(1, Comp(2, Gen("a"), Gen("b")), Comp(2, Gen("c"), Gen("d")))
    assert parse_term(" ( a ) ") == Gen("a")


def test_identities():
    assert parse_term("id(id(x))") == Id(Id(Gen("x")))
    assert parse_term("id(f *0 g) *1 a") == Comp(1, Id(Comp(0, Gen("f"), Gen("g"))), Gen("a"))


def test_printing_minimal_parentheses():
    assert show_term(parse_term("(a *0 b) *0 c")) == "a *0 b *0 c"
    assert show_term(parse_term("a *0 (b *0 c)")) == "a *0 (b *0 c)"
    assert show_term(parse_term("(a *0 b) *1 c")) == "(a *0 b) *1 c"
    assert show_term(parse_term("a *1 (b *0 c)")) == "a *1 (b *0 c)"
    assert show_term(comp(0, Gen("a"), Gen("b"), Gen("c"))) == "a *0 b *0 c"


@pytest.mark.parametrize("text,col", [
    ("a *1", 5), ("a b", 3), ("*0", 1), ("(a *0 b", 8), ("id(a", 5), ("", 1), ("a : b", 3),
])
def test_errors_carry_positions(text, col):
    with pytest.raises(ParseError) as e:
        parse_term(text)
    assert e.value.line == 1 and e.value.col == col


def test_position_offsets():
    with pytest.raises(ParseError) as e:
        parse_term("a b", line=4, col=10)
    assert (e.value.line, e.value.col) == (4, 12)


def test_helpers():
    t = parse_term("(a *0 id(b)) *1 a")
    assert generators_of(t) == ["a", "b"]
    assert rename(t, str.upper) == parse_term("(A *0 id(B)) *1 A")
    assert valid_identifier("mu'") and not valid_identifier("id") and not valid_identifier("a->b")


@settings(max_examples=300)
@given(terms)
def test_print_parse_round_trip(t):
    assert parse_term(show_term(t)) == t
