"""Command-line interface and the polygraph / theory / model file formats.

Exit codes: 0 ok or equal, 1 not equal (or model rejected), 2 type or
validation error, 3 parse error, 4 unsupported dimension.
"""

import argparse
import json
import re
import sys
from importlib import resources
from pathlib import Path

from . import eat, freecat
from .errors import (
    ParseError, PolycatError, StructuralError, TypingError, UnsupportedDimension,
)
from .freecat import NormalForm, Word
from .polygraph import Polygraph, validate_polygraph
from .render import render_svg
from .syntax import parse_term, show_term, valid_identifier

EXIT_OK, EXIT_NO, EXIT_TYPE, EXIT_PARSE, EXIT_DIM = 0, 1, 2, 3, 4


def fixture_path(name):
    return Path(str(resources.files("polycat") / "fixtures" / name))


# -- polygraph files

_HEADER = re.compile(r'polygraph\s+"([^"]*)"\s*$')
_SECTION = re.compile(r"dim\s+(\d+)\s*:\s*$")


def parse_polygraph_text(text, name="P"):
    """Parse the polygraph format; ParseError carries line and column."""
    sections = []
    header_seen = False
    for lineno, raw in enumerate(text.splitlines(), 1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        col = raw.index(stripped[0]) + 1
        m = _HEADER.match(stripped)
        if m:
            if header_seen or sections:
                raise ParseError("the header must come first and only once", lineno, col)
            header_seen = True
            name = m.group(1)
            continue
        m = _SECTION.match(stripped)
        if m:
            k = int(m.group(1))
            if k != len(sections):
                msg = "missing dim 0" if not sections else f"expected dim {len(sections)}, found dim {k}"
                raise ParseError(msg, lineno, col)
            sections.append([])
            continue
        if not sections:
            raise ParseError("missing dim 0", lineno, col)
        sections[-1].append((lineno, raw))
    if not sections:
        raise ParseError("missing dim 0", 1, 1)

    gens, src, tgt = [], [], []
    seen = set()
    for k, lines in enumerate(sections):
        names, s, t = [], {}, {}
        for lineno, raw in lines:
            if k == 0:
                g = raw.strip()
                col = raw.index(g) + 1
                if ":" in g:
                    raise ParseError("0-generators have no boundary", lineno, raw.index(":") + 1)
            else:
                if ":" not in raw:
                    raise ParseError("expected 'name : source -> target'", lineno, len(raw) - len(raw.lstrip()) + 1)
                head, rest = raw.split(":", 1)
                g = head.strip()
                col = raw.index(g) + 1 if g else 1
                if "->" not in rest:
                    raise ParseError("expected '->' between source and target", lineno, len(head) + 2)
                a, b = rest.split("->", 1)
                base = len(head) + 1
                s_col = base + 1 + (len(a) - len(a.lstrip()))
                t_col = base + len(a) + 3 + (len(b) - len(b.lstrip()))
                s[g] = parse_term(a.strip(), lineno, s_col)
                t[g] = parse_term(b.strip(), lineno, t_col)
            if not valid_identifier(g):
                raise ParseError(f"invalid generator name {g!r}", lineno, col)
            if g in seen:
                raise ParseError(f"generator {g!r} declared twice", lineno, col)
            seen.add(g)
            names.append(g)
        gens.append(tuple(names))
        src.append(s)
        tgt.append(t)
    return Polygraph(tuple(gens), tuple(src), tuple(tgt), name)


def parse_polygraph(path):
    path = Path(path)
    return parse_polygraph_text(path.read_text(encoding="utf-8"), name=path.stem)


def print_polygraph(P):
    lines = [f'polygraph "{P.name}"']
    for k, names in enumerate(P.gens):
        lines.append(f"dim {k}:")
        for g in names:
            if k == 0:
                lines.append(f"  {g}")
            else:
                lines.append(f"  {g} : {show_term(P.src[k][g])} -> {show_term(P.tgt[k][g])}")
    return "\n".join(lines) + "\n"


def load_polygraph(path):
    """Parse and validate; raises ParseError or a validation error."""
    P = parse_polygraph(path)
    rep = validate_polygraph(P)
    if not rep.ok:
        raise _Invalid(rep)
    return P


class _Invalid(PolycatError):
    def __init__(self, rep):
        self.report = rep
        super().__init__(str(rep))


# -- theory and model files

_EAT_TOKEN = re.compile(r"\s*([A-Za-z_][\w']*|\d+|[(),=])")


def parse_eat_term(text, lineno=1):
    toks = []
    pos = 0
    text = text.strip()
    while pos < len(text):
        m = _EAT_TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", lineno, pos + 1)
        toks.append(m.group(1))
        pos = m.end()
    i = 0

    def term():
        nonlocal i
        if i >= len(toks):
            raise ParseError("unexpected end of term", lineno, len(text) + 1)
        tok = toks[i]
        i += 1
        if re.fullmatch(r"x\d+", tok):
            return eat.Var(int(tok[1:]))
        if not re.fullmatch(r"[A-Za-z_][\w']*", tok):
            raise ParseError(f"unexpected {tok!r}", lineno, 1)
        args = []
        if i < len(toks) and toks[i] == "(":
            i += 1
            if toks[i:i + 1] == [")"]:
                i += 1
                return eat.App(tok, ())
            while True:
                args.append(term())
                if i < len(toks) and toks[i] == ",":
                    i += 1
                    continue
                if i < len(toks) and toks[i] == ")":
                    i += 1
                    break
                raise ParseError("expected ',' or ')'", lineno, 1)
        return eat.App(tok, tuple(args))

    t = term()
    if i != len(toks):
        raise ParseError(f"unexpected {toks[i]!r} after term", lineno, 1)
    return t


def parse_theory_text(text):
    """Line format::

        theory cat
        sorts c0 c1
        op src0 : c1 -> c0
        op comp : c1 c1 -> c1 partial
        def comp : tgt0(x1) = src0(x2)
        eq c1 c1 : src0(comp(x1, x2)) = src0(x1)
    """
    name, sorts, symbols, total, defs, eqs = "T", (), {}, set(), {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        word, _, rest = line.partition(" ")
        rest = rest.strip()
        if word == "theory":
            name = rest
        elif word == "sorts":
            sorts = tuple(rest.split())
        elif word == "op":
            m = re.fullmatch(r"(\S+)\s*:\s*(.*?)\s*->\s*(\S+)(\s+partial)?", rest)
            if not m:
                raise ParseError("expected 'op name : sorts -> sort [partial]'", lineno, 1)
            symbols[m.group(1)] = eat.Symbol(tuple(m.group(2).split()), m.group(3))
            if not m.group(4):
                total.add(m.group(1))
        elif word in ("def", "eq"):
            head, sep, body = rest.partition(":")
            lhs, eq_sep, rhs = body.partition("=")
            if not sep or not eq_sep:
                raise ParseError(f"expected '{word} ... : term = term'", lineno, 1)
            pair = (parse_eat_term(lhs, lineno), parse_eat_term(rhs, lineno))
            if word == "def":
                defs.setdefault(head.strip(), []).append(pair)
            else:
                eqs.append(eat.Equation(tuple(head.split()), *pair))
        else:
            raise ParseError(f"unknown directive {word!r}", lineno, 1)
    defs = {k: tuple(v) for k, v in defs.items()}
    for g in symbols:
        if g not in total and g not in defs:
            defs[g] = ()
    return eat.Theory(sorts, symbols, tuple(eqs), frozenset(total), defs, name)


def parse_model_text(text):
    """Line format::

        carrier s : 0 1
        e() = 0
        m(0, 1) = 1
    """
    carriers, ops = {}, {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line or line == "model":
            continue
        if line.startswith("carrier "):
            head, sep, vals = line[len("carrier "):].partition(":")
            if not sep:
                raise ParseError("expected 'carrier sort : values'", lineno, 1)
            carriers[head.strip()] = tuple(vals.split())
            continue
        m = re.fullmatch(r"([A-Za-z_][\w']*)\s*(?:\((.*)\))?\s*=\s*(\S+)", line)
        if not m:
            raise ParseError("expected 'symbol(args) = value'", lineno, 1)
        args = tuple(a.strip() for a in m.group(2).split(",")) if m.group(2) and m.group(2).strip() else ()
        ops.setdefault(m.group(1), {})[args] = m.group(3)
    return eat.FiniteModel(carriers, ops)


def load_theory(arg):
    p = Path(arg)
    if not p.exists() and arg in eat.THEORIES:
        return eat.THEORIES[arg]
    return parse_theory_text(p.read_text(encoding="utf-8"))


# -- JSON encodings


def enc(v):
    if v is None or isinstance(v, str):
        return v
    if isinstance(v, Word):
        return {"src": v.src, "tgt": v.tgt, "gens": list(v.gens)}
    if isinstance(v, NormalForm):
        return {
            "source": enc(v.source),
            "target": enc(v.target),
            "layers": [{"offset": w.offset, "gen": w.gen} for w in v.layers],
        }
    return repr(v)


def show(v):
    if v is freecat.STAR:
        return "*"
    return str(v)


# -- commands


def cmd_check(args, out):
    P = parse_polygraph(args.file)
    rep = validate_polygraph(P)
    if rep.ok:
        counts = "/".join(str(len(g)) for g in P.gens)
        out.emit("ok", text=f"ok: {P.name} ({counts} generators)")
        return EXIT_OK
    for v in rep.violations:
        print(v, file=sys.stderr)
    out.emit("invalid", text="invalid")
    return EXIT_TYPE


def cmd_type(args, out):
    P = load_polygraph(args.file)
    T = freecat.infer_type(P, parse_term(args.term))
    out.emit(
        "ok",
        boundaries=[enc(T.source), enc(T.target)],
        text=f"dim {T.dim}: {show(T.source)} -> {show(T.target)}",
        dim=T.dim,
    )
    return EXIT_OK


def cmd_normalize(args, out):
    P = load_polygraph(args.file)
    nf = freecat.normalize(P, parse_term(args.term))
    if isinstance(nf, NormalForm):
        text = "\n".join([f"source: {nf.source}"] + [f"{w.offset} {w.gen}" for w in nf.layers] + [f"target: {nf.target}"])
        out.emit("ok", normal_form=enc(nf), boundaries=[enc(nf.source), enc(nf.target)], text=text)
    else:
        out.emit("ok", normal_form=enc(nf), text=show(nf))
    return EXIT_OK


def cmd_equal(args, out):
    P = load_polygraph(args.file)
    t1, t2 = parse_term(args.term1), parse_term(args.term2)
    eq = freecat.decide_equal(P, t1, t2)
    n1 = freecat.normalize(P, t1)
    T = freecat.infer_type(P, t1)
    out.emit(
        "equal" if eq else "not equal",
        normal_form=enc(n1),
        boundaries=[enc(T.source), enc(T.target)],
        text="equal" if eq else "not equal",
    )
    return EXIT_OK if eq else EXIT_NO


def cmd_enumerate(args, out):
    P = load_polygraph(args.file)
    src = tgt = None
    if args.source:
        src = freecat.evaluate(P, parse_term(args.source))
    if args.target:
        tgt = freecat.evaluate(P, parse_term(args.target))
    cells = freecat.enumerate_cells(P, args.dim, args.max, source=src, target=tgt)
    out.emit("ok", cells=[enc(c) for c in cells], count=len(cells), text="\n".join(show(c) for c in cells))
    return EXIT_OK


def cmd_render(args, out):
    P = load_polygraph(args.file)
    t = parse_term(args.term)
    T = freecat.infer_type(P, t)
    if T.dim != 2:
        raise UnsupportedDimension(f"only 2-cells are rendered (got dimension {T.dim})")
    nf = freecat.normalize(P, t)
    svg = render_svg(nf, freecat.signature(P), title=args.term)
    if args.output and args.output != "-":
        Path(args.output).write_text(svg, encoding="utf-8")
        out.emit("ok", normal_form=enc(nf), text=f"wrote {args.output}")
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_eat_check(args, out):
    T = load_theory(args.theory)
    M = parse_model_text(Path(args.model).read_text(encoding="utf-8"))
    rep = eat.check_theory(T)
    if not rep.ok:
        for v in rep.violations:
            print(v, file=sys.stderr)
        out.emit("invalid theory", text="invalid theory")
        return EXIT_TYPE
    rep = eat.check_model(T, M)
    if rep.ok:
        out.emit("ok", text="ok")
        return EXIT_OK
    for v in rep.violations:
        print(v, file=sys.stderr)
    out.emit("not a model", violations=[str(v) for v in rep.violations], text="not a model")
    return EXIT_NO


class _Out:
    def __init__(self, as_json):
        self.as_json = as_json

    def emit(self, verdict, text="", **fields):
        if self.as_json:
            fields.setdefault("normal_form", None)
            fields.setdefault("boundaries", None)
            print(json.dumps({"verdict": verdict, **fields}, ensure_ascii=False, sort_keys=True))
        elif text:
            print(text)


def build_parser():
    ap = argparse.ArgumentParser(prog="polycat", description="Polygraphs and free strict categories.")
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("check", help="validate a polygraph file")
    p.add_argument("file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("type", help="dimension and boundaries of a term")
    p.add_argument("file")
    p.add_argument("term")
    p.set_defaults(func=cmd_type)

    p = sub.add_parser("normalize", help="normal form of a term")
    p.add_argument("file")
    p.add_argument("term")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("equal", help="decide equality of two terms")
    p.add_argument("file")
    p.add_argument("term1")
    p.add_argument("term2")
    p.set_defaults(func=cmd_equal)

    p = sub.add_parser("enumerate", help="list cells within a size bound")
    p.add_argument("file")
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--source", help="restrict to this source (a term)")
    p.add_argument("--target", help="restrict to this target (a term)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("render", help="draw a 2-cell as SVG")
    p.add_argument("file")
    p.add_argument("term")
    p.add_argument("-o", "--output", help="output file (default: standard output)")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("eat", help="essentially algebraic theories")
    esub = p.add_subparsers(dest="eat_cmd", required=True)
    q = esub.add_parser("check", help="check a finite model against a theory")
    q.add_argument("theory", help="theory file, or one of: " + ", ".join(eat.THEORIES))
    q.add_argument("model")
    q.set_defaults(func=cmd_eat_check)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    out = _Out(args.json)
    try:
        return args.func(args, out)
    except ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        out.emit("parse error")
        return EXIT_PARSE
    except UnsupportedDimension as e:
        print(f"unsupported dimension: {e}", file=sys.stderr)
        out.emit("unsupported dimension")
        return EXIT_DIM
    except _Invalid as e:
        for v in e.report.violations:
            print(v, file=sys.stderr)
        out.emit("invalid polygraph")
        return EXIT_TYPE
    except (TypingError, StructuralError) as e:
        print(f"error: {e}", file=sys.stderr)
        out.emit("type error")
        return EXIT_TYPE
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_TYPE


if __name__ == "__main__":
    sys.exit(main())
