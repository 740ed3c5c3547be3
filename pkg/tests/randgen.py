"""Random polygraphs and terms for property tests."""

from polycat.freecat import Word, _swaps, signature, whiskers_on, _apply
from polycat.polygraph import make_polygraph
from polycat.syntax import Comp, Gen, Id


def random_path(rng, ones, x, length):
    w = []
    for _ in range(length):
        out = [f for f, (a, b) in ones.items() if a == x]
        if not out:
            return None
        f = rng.choice(out)
        w.append(f)
        x = ones[f][1]
    return tuple(w), x


def word_term(w, x):
    if not w:
        return Id(Gen(x))
    t = Gen(w[0])
    for f in w[1:]:
        t = Comp(0, t, Gen(f))
    return t


def random_polygraph(rng, max_gens=3, max_len=3, points=None):
    n0 = points or rng.randint(1, 2)
    xs = [f"x{i}" for i in range(n0)]
    ones = {}
    for i in range(rng.randint(1, max_gens)):
        ones[f"a{i}"] = (rng.choice(xs), rng.choice(xs))
    twos = []
    tries = 0
    while len(twos) < rng.randint(1, max_gens) and tries < 200:
        tries += 1
        x = rng.choice(xs)
        p = random_path(rng, ones, x, rng.randint(0, max_len))
        if p is None:
            continue
        (sw, y) = p
        for _ in range(30):
            q = random_path(rng, ones, x, rng.randint(0, max_len))
            if q is not None and q[1] == y:
                break
        else:
            continue
        tw = q[0]
        twos.append((f"g{len(twos)}", word_term(sw, x), word_term(tw, x)))
    dims = [xs, [(f, Gen(a), Gen(b)) for f, (a, b) in ones.items()], twos]
    return make_polygraph(dims, name="rand")


def random_layers(rng, P, source, n):
    sig = signature(P)
    w = source
    layers = []
    for _ in range(n):
        opts = whiskers_on(P, w)
        if not opts:
            break
        a, g = rng.choice(opts)
        layers.append((a, g))
        w = _apply(sig, w, a, g)
    return tuple(layers)


def layer_term(P, w, a, g):
    sig = signature(P)
    s, _ = sig.c2[g]
    t = Gen(g)
    if a > 0:
        t = Comp(0, word_term(w.gens[:a], w.src), t)
    rest = w.gens[a + len(s):]
    if rest:
        t = Comp(0, t, word_term(rest, sig.c1[rest[0]][0]))
    return t


def layers_term(rng, P, source, layers):
    sig = signature(P)
    if not layers:
        return Id(word_term(source.gens, source.src))
    w = source
    parts = []
    for a, g in layers:
        parts.append(layer_term(P, w, a, g))
        w = _apply(sig, w, a, g)

    def bracket(ts):
        if len(ts) == 1:
            return ts[0]
        k = rng.randint(1, len(ts) - 1)
        return Comp(1, bracket(ts[:k]), bracket(ts[k:]))

    return bracket(parts)


def shuffle_layers(rng, P, layers, steps):
    sig = signature(P)
    L = tuple(layers)
    for _ in range(steps):
        opts = list(_swaps(L, sig.ar))
        if not opts:
            break
        L = rng.choice(opts)
    return L


def random_source(rng, P, max_len=3):
    sig = signature(P)
    x = rng.choice(P.gens[0])
    ones = {f: sig.c1[f] for f in P.gens[1]}
    p = random_path(rng, ones, x, rng.randint(0, max_len))
    if p is None:
        return Word(x, x, ())
    return Word(x, p[1], p[0])
