"""Deterministic random expressions and enumerations used by the checks."""
import random

from . import catlib
from .expr import Compose, Gen, Id, Tensor, eval_expr, typeof
from .surface import ObjectSig

MAX_CIRCLES = 4
MAX_INTERVALS = 4


def _signature(name):
    c = catlib.generator(name)
    return c.source, c.target


def _layer(gen_expr, src, gsrc, ci, ii):
    """``id (x) gen (x) id`` acting on circles ci.. and intervals ii.. of ``src``."""
    left = ObjectSig(ci, ii)
    right = ObjectSig(src.circles - ci - gsrc.circles, src.intervals - ii - gsrc.intervals)
    e = gen_expr
    if left != (0, 0):
        e = Tensor(Id(left), e)
    if right != (0, 0):
        e = Tensor(e, Id(right))
    return e


def _step(rng, obj, names, max_c, max_i):
    choices = []
    max_c = max(max_c, obj.circles)
    max_i = max(max_i, obj.intervals)
    for name in names:
        s, t = _signature(name)
        if s.circles <= obj.circles and s.intervals <= obj.intervals:
            nc = obj.circles - s.circles + t.circles
            ni = obj.intervals - s.intervals + t.intervals
            if nc <= max_c and ni <= max_i:
                choices.append((name, s, t))
    name, s, t = rng.choice(choices)
    ci = rng.randint(0, obj.circles - s.circles)
    ii = rng.randint(0, obj.intervals - s.intervals)
    target = ObjectSig(obj.circles - s.circles + t.circles, obj.intervals - s.intervals + t.intervals)
    return _layer(Gen(name), obj, s, ci, ii), target


def random_from(rng, source, size, names=catlib.GENERATOR_NAMES,
                max_c=MAX_CIRCLES, max_i=MAX_INTERVALS):
    """Random expression with ``size`` generators starting at ``source``."""
    source = ObjectSig(*source)
    e = Id(source)
    obj = source
    for i in range(size):
        layer, obj = _step(rng, obj, names, max_c, max_i)
        e = layer if i == 0 else Compose(layer, e)
    return e


def random_expression(rng, size, names=catlib.GENERATOR_NAMES, closed=False):
    """Random well-typed expression with exactly ``size`` generators."""
    if size >= 4 and rng.random() < 0.25:
        left = rng.randint(1, size - 1)
        return Tensor(random_expression(rng, left, names, closed),
                      random_expression(rng, size - left, names, closed))
    src = ObjectSig(rng.randint(0, 2), 0 if closed else rng.randint(0, 2))
    return random_from(rng, src, size, names)


def composable_pairs(seed, count, max_size, names=catlib.GENERATOR_NAMES, closed=False):
    """``count`` pairs ``(e1, e2)`` with target(e1) = source(e2)."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        e1 = random_expression(rng, rng.randint(1, max_size), names, closed)
        _, t = typeof(e1)
        e2 = random_from(rng, t, rng.randint(1, max_size), names)
        out.append((e1, e2))
    return out


def random_expressions(seed, count, max_size, names=catlib.GENERATOR_NAMES, closed=False):
    rng = random.Random(seed)
    return [random_expression(rng, rng.randint(1, max_size), names, closed) for _ in range(count)]


def generator_pairs(names=catlib.GENERATOR_NAMES, extra=()):
    """All composable ordered pairs ``g after f`` over the named generators plus extras."""
    atoms = [Gen(n) for n in names] + list(extra)
    sigs = {a: typeof(a) for a in atoms}
    return [Compose(g, f) for f in atoms for g in atoms if sigs[f][1] == sigs[g][0]]


def closed_layers(obj, names=catlib.CLOSED_GENERATORS, max_circles=2):
    """Letters applicable at ``obj`` circles: ``(layer_expr, new_obj)``."""
    for n in sorted(names):
        s, t = _signature(n)
        new = obj - s.circles + t.circles
        if s.circles > obj or new > max_circles:
            continue
        rest = obj - s.circles
        e = Gen(n) if not rest else Tensor(Gen(n), Id(ObjectSig(rest, 0)))
        yield e, new


def fold_closed_words(max_len, start, step, names=catlib.CLOSED_GENERATORS, max_circles=2):
    """Depth-first fold over :func:`closed_words`.

    ``start(layer)`` gives the state of a one-letter word, ``step(state, layer)``
    the state after appending a letter; yields ``(expr, state)``.
    """
    layers = {}

    def at(obj):
        if obj not in layers:
            layers[obj] = list(closed_layers(obj, names, max_circles))
        return layers[obj]

    def extend(e, obj, state, length):
        yield e, state
        if length < max_len:
            for layer, new in at(obj):
                yield from extend(Compose(layer, e), new, step(state, layer), length + 1)

    for obj in range(max_circles + 1):
        for layer, new in at(obj):
            yield from extend(layer, new, start(layer), 1)


def closed_words(max_len, names=catlib.CLOSED_GENERATORS, max_circles=2):
    """Every word ``g_k o ... o g_1`` (1 <= k <= max_len) of closed generators.

    Each letter acts on the leftmost circles and is padded with identities on
    the right; intermediate objects stay within ``max_circles`` circles.
    """
    for e, _ in fold_closed_words(max_len, lambda layer: None, lambda s, layer: None,
                                  names, max_circles):
        yield e


def evaluate_all(exprs):
    return [eval_expr(e) for e in exprs]
