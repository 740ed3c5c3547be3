"""Cell terms and their concrete syntax.

Grammar::

    term  ::= term "*k" term | "id(" term ")" | "(" term ")" | identifier

``*j`` binds tighter than ``*i`` when j > i; operators of equal index
associate to the left.  ``*``, ``:``, ``(``, ``)`` and ``,`` are reserved, and
identifiers may not contain ``->``.

>>> parse_term("a *1 b *0 c")
Comp(0, Comp(1, Gen('a'), Gen('b')), Gen('c'))
>>> str(parse_term("(eta *0 id(one)) *1 mu"))
'(eta *0 id(one)) *1 mu'
"""

import re
from dataclasses import dataclass

from .errors import ParseError


class Term:
    __slots__ = ()

    def __str__(self):
        return show_term(self)


@dataclass(frozen=True, repr=False)
class Gen(Term):
    name: str

    def __repr__(self):
        return f"Gen({self.name!r})"


@dataclass(frozen=True, repr=False)
class Id(Term):
    arg: Term

    def __repr__(self):
        return f"Id({self.arg!r})"


@dataclass(frozen=True, repr=False)
class Comp(Term):
    i: int
    left: Term
    right: Term

    def __repr__(self):
        return f"Comp({self.i}, {self.left!r}, {self.right!r})"


def comp(i, *terms):
    """Left-nested composite of one or more terms along i."""
    t = terms[0]
    for u in terms[1:]:
        t = Comp(i, t, u)
    return t


def show_term(t):
    if isinstance(t, Gen):
        return t.name
    if isinstance(t, Id):
        return f"id({show_term(t.arg)})"
    left, right = show_term(t.left), show_term(t.right)
    if isinstance(t.left, Comp) and t.left.i < t.i:
        left = f"({left})"
    if isinstance(t.right, Comp) and t.right.i <= t.i:
        right = f"({right})"
    return f"{left} *{t.i} {right}"


def generators_of(t):
    """Generator names occurring in t, in order of first occurrence."""
    out = []

    def walk(u):
        if isinstance(u, Gen):
            if u.name not in out:
                out.append(u.name)
        elif isinstance(u, Id):
            walk(u.arg)
        else:
            walk(u.left)
            walk(u.right)

    walk(t)
    return out


def rename(t, f):
    """Apply f to every generator name."""
    if isinstance(t, Gen):
        return Gen(f(t.name))
    if isinstance(t, Id):
        return Id(rename(t.arg, f))
    return Comp(t.i, rename(t.left, f), rename(t.right, f))


RESERVED = "*:(),"
IDENT = re.compile(r"(?:(?!->)[^\s*:(),])+")
_TOKEN = re.compile(r"\s*(?:(?P<op>\*(?P<k>\d+))|(?P<lp>\()|(?P<rp>\))|(?P<ident>(?:(?!->)[^\s*:(),])+))")


def valid_identifier(name):
    return bool(IDENT.fullmatch(name)) and name != "id"


class _Lexer:
    def __init__(self, text, line=1, col=1):
        self.text, self.line, self.col0 = text, line, col
        self.toks = []
        pos = 0
        while True:
            m = re.compile(r"\s*").match(text, pos)
            pos = m.end()
            if pos >= len(text):
                break
            m = _TOKEN.match(text, pos)
            if not m or m.end() == pos:
                raise ParseError(f"unexpected character {text[pos]!r}", line, col + pos)
            start = m.start(m.lastgroup)
            if m.group("op"):
                self.toks.append(("op", int(m.group("k")), start))
            elif m.group("lp"):
                self.toks.append(("(", None, start))
            elif m.group("rp"):
                self.toks.append((")", None, start))
            else:
                self.toks.append(("ident", m.group("ident"), start))
            pos = m.end()
        self.i = 0
        self.end = len(text)

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None, self.end)

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def error(self, msg, pos=None):
        if pos is None:
            pos = self.peek()[2]
        return ParseError(msg, self.line, self.col0 + pos)


def _parse_atom(lx):
    kind, val, pos = lx.next()
    if kind == "(":
        t = _parse_expr(lx, 0)
        if lx.next()[0] != ")":
            raise lx.error("expected ')'", lx.toks[lx.i - 1][2] if lx.i <= len(lx.toks) else None)
        return t
    if kind == "ident":
        if val == "id" and lx.peek()[0] == "(":
            lx.next()
            arg = _parse_expr(lx, 0)
            if lx.next()[0] != ")":
                raise lx.error("expected ')' closing id(", lx.toks[lx.i - 1][2] if lx.i <= len(lx.toks) else None)
            return Id(arg)
        if val == "id":
            raise lx.error("'id' must be applied: id(term)", pos)
        return Gen(val)
    if kind is None:
        raise lx.error("unexpected end of term", pos)
    raise lx.error(f"unexpected {'*' + str(val) if kind == 'op' else kind!r}", pos)


def _parse_expr(lx, min_k):
    # precedence climbing: operator *k has precedence k, left associative
    left = _parse_atom(lx)
    while True:
        kind, k, _ = lx.peek()
        if kind != "op" or k < min_k:
            return left
        lx.next()
        right = _parse_expr(lx, k + 1)
        left = Comp(k, left, right)


def parse_term(text, line=1, col=1):
    lx = _Lexer(text, line, col)
    if not lx.toks:
        raise lx.error("empty term", 0)
    t = _parse_expr(lx, 0)
    if lx.peek()[0] is not None:
        raise lx.error("unexpected token after term")
    return t
