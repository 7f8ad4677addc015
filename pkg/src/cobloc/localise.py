"""Zigzag words and their classes in the localisations of the subcategories.

Every category handled here has a localisation detected by an additive
invariant of cobordisms (a "payload"): theta for most of them, the pair
(theta - omega, omega) once windows are allowed, the vector of closed
component types for endomorphisms of the empty object, and so on.  Two
words are equal in the localisation exactly when their summed payloads and
endpoints agree.
"""
from collections import Counter
from typing import NamedTuple

from sympy import Matrix

from . import catlib
from .catlib import category_id, connect
from .errors import (EndpointMismatch, InternalInvariantError, NotALoop, NotComposable,
                     NotInCategory, NotStronglyConnected)
from .glue import compose_all
from .monoid import n0_class
from .surface import Cobordism, ObjectSig, omega, theta

FWD = "fwd"
INV = "inv"


class LocWord(NamedTuple):
    """Letters ``(cobordism, direction)`` traversed left to right.

    ``start`` fixes the endpoint of the empty word and is otherwise inferred.
    """
    letters: tuple
    start: ObjectSig = None

    @classmethod
    def of(cls, *letters, start=None):
        out = []
        for item in letters:
            if isinstance(item, Cobordism):
                item = (item, FWD)
            c, d = item
            if d not in (FWD, INV):
                raise ValueError(f"direction must be {FWD!r} or {INV!r}")
            out.append((c, d))
        return cls(tuple(out), ObjectSig(*start) if start is not None else None)

    def inverse(self):
        return LocWord(tuple((c, INV if d == FWD else FWD) for c, d in reversed(self.letters)),
                       self.end())

    def __add__(self, other):
        """Traverse ``self`` then ``other``."""
        return LocWord(self.letters + other.letters, self.begin())

    def begin(self):
        if self.letters:
            return _ends(*self.letters[0])[0]
        if self.start is None:
            raise ValueError("empty word without a start object")
        return self.start

    def end(self):
        if self.letters:
            return _ends(*self.letters[-1])[1]
        return self.begin()


def _ends(c, d):
    return (c.source, c.target) if d == FWD else (c.target, c.source)


# -- payloads ---------------------------------------------------------------------------

_KIND = {
    "K": "int", "N": "int", "O": "int", "S": "int", "S_and_O": "int", "N1": "int",
    "N1minus": "int", "Nb": "int", "S_and_N": "half", "barN": "pair", "N0": "vector",
    "barO": "int_vector", "N1plus": "int_z2",
}


def _vector(counter):
    return tuple(sorted((k, v) for k, v in counter.items() if v))


def _vadd(a, b, sign=1):
    c = Counter(dict(a))
    for k, v in b:
        c[k] += sign * v
    return _vector(c)


def payload_of(c, cat):
    cat = category_id(cat)
    kind = _KIND[cat]
    if kind == "int":
        return theta(c)
    if kind == "half":
        t = theta(c)
        if t % 2:
            raise InternalInvariantError(f"odd theta {t} on an oriented closed cobordism")
        return t // 2
    if kind == "pair":
        w = omega(c)
        return (theta(c) - w, w)
    if kind == "vector":
        return _vector(n0_class(c))
    if kind == "int_vector":
        closed = [comp for comp in c.components if not comp.cycles]
        rest = [comp for comp in c.components if comp.cycles]
        open_part = Cobordism(c.source, c.target, tuple(rest)) if closed else c
        counts = Counter((comp.genus, comp.crosscaps) for comp in closed)
        return (theta(open_part), _vector(counts))
    if kind == "int_z2":
        comp = c.components[0]
        twists = [cyc.twist for cyc in comp.cycles]
        return (theta(c) // 2, twists[0] ^ twists[1])
    raise AssertionError(kind)


def payload_zero(cat):
    kind = _KIND[category_id(cat)]
    return {"int": 0, "half": 0, "pair": (0, 0), "vector": (), "int_vector": (0, ()),
            "int_z2": (0, 0)}[kind]


def payload_add(cat, a, b, sign=1):
    kind = _KIND[category_id(cat)]
    if kind in ("int", "half"):
        return a + sign * b
    if kind == "pair":
        return (a[0] + sign * b[0], a[1] + sign * b[1])
    if kind == "vector":
        return _vadd(a, b, sign)
    if kind == "int_vector":
        return (a[0] + sign * b[0], _vadd(a[1], b[1], sign))
    if kind == "int_z2":
        return (a[0] + sign * b[0], (a[1] + b[1]) % 2)
    raise AssertionError(kind)


def payload_coordinates(cat, p):
    """Free coordinates of a payload (torsion dropped), keyed for lattice computations."""
    kind = _KIND[category_id(cat)]
    if kind in ("int", "half"):
        return {"z": p}
    if kind == "pair":
        return {"z1": p[0], "z2": p[1]}
    if kind == "vector":
        return dict(p)
    if kind == "int_vector":
        out = dict(p[1])
        out["z"] = p[0]
        return out
    if kind == "int_z2":
        return {"z": p[0]}
    raise AssertionError(kind)


def format_payload(cat, p):
    kind = _KIND[category_id(cat)]

    def vec(v):
        return "{" + ",".join(f"({g},{k}):{n}" for (g, k), n in v) + "}"

    if kind in ("int", "half"):
        return str(p)
    if kind in ("pair", "int_z2"):
        return f"({p[0]},{p[1]})"
    if kind == "vector":
        return vec(p)
    return f"({p[0]},{vec(p[1])})"


class LocClass(NamedTuple):
    cat: str
    source: ObjectSig
    target: ObjectSig
    payload: object

    def __str__(self):
        return f"{self.cat}: {format_payload(self.cat, self.payload)}"


def loc_class(c, cat):
    cat = category_id(cat)
    if not catlib.in_category(c, cat):
        raise NotInCategory(f"{c} is not a morphism of {cat}")
    return LocClass(cat, c.source, c.target, payload_of(c, cat))


def word_reduce(w, cat):
    cat = category_id(cat)
    if not isinstance(w, LocWord):
        w = LocWord.of(*w)
    total = payload_zero(cat)
    here = None
    for i, (c, d) in enumerate(w.letters):
        src, tgt = _ends(c, d)
        if here is not None and src != here:
            raise NotComposable(i, f"letter {i} starts at {src} but the word is at {here}")
        if not catlib.in_category(c, cat):
            raise NotInCategory(f"letter {i} is not a morphism of {cat}")
        total = payload_add(cat, total, payload_of(c, cat), 1 if d == FWD else -1)
        here = tgt
    return LocClass(cat, w.begin(), w.end(), total)


def verify_relation(lhs, rhs, cat):
    a = word_reduce(lhs, cat)
    b = word_reduce(rhs, cat)
    if (a.source, a.target) != (b.source, b.target):
        raise EndpointMismatch(f"{a.source}->{a.target} vs {b.source}->{b.target}")
    return a.payload == b.payload


def conjugate(alpha, beta):
    """The word ``alpha^-1 beta alpha`` for ``alpha: x -> y`` and a loop ``beta`` at y."""
    a = LocWord.of(alpha) if isinstance(alpha, Cobordism) else alpha
    return a + beta + a.inverse()


def to_endo_word(w, base, cat):
    """Rewrite a loop as a word of endomorphisms of ``base`` with the same class."""
    cat = category_id(cat)
    base = ObjectSig(*base)
    if cat not in catlib.STRONGLY_CONNECTED:
        raise NotStronglyConnected(f"{cat} is not strongly connected")
    if not isinstance(w, LocWord):
        w = LocWord.of(*w)
    if w.begin() != w.end():
        raise NotALoop(f"word runs {w.begin()} -> {w.end()}")
    if not catlib.objects_ok(base, cat):
        raise NotInCategory(f"base {base} is not an object of {cat}")
    cache = {}

    def hops(x):
        # (a: base -> x, b: x -> base, e = b o a), or None when x is the base
        if x == base:
            return None
        if x not in cache:
            a = connect(base, x, cat)
            b = connect(x, base, cat)
            cache[x] = (a, b, compose_all(a, b))
        return cache[x]

    def wrap(f, x, y):
        # b_y o f o a_x
        hx, hy = hops(x), hops(y)
        parts = ([hx[0]] if hx else []) + [f] + ([hy[1]] if hy else [])
        return compose_all(*parts)

    out = []
    for c, d in w.letters:
        if d == FWD:
            x, y = c.source, c.target
            out.append((wrap(c, x, y), FWD))
            if hops(y):
                out.append((hops(y)[2], INV))
        else:
            x, y = c.target, c.source       # traversal x -> y through c^-1: y -> x
            if hops(x):
                out.append((hops(x)[2], FWD))
            out.append((wrap(c, y, x), INV))
    return LocWord(tuple(out), base)


# -- fundamental group ranks --------------------------------------------------------------


def generating_morphisms(cat):
    """A generating set (under composition and disjoint union with identities) for ``cat``."""
    cat = category_id(cat)
    names = catlib.GENERATOR_NAMES
    if cat == "N0":
        return [catlib.closed_surface(g, 0) for g in range(3)] + [catlib.closed_surface(0, k) for k in (1, 2)]
    if cat in ("N1", "N1plus", "N1minus"):
        cands = [catlib.n1_cobordism(1, 0, 0), catlib.n1_cobordism(0, 1, 0), catlib.n1_cobordism(0, 0, 1)]
        return [c for c in cands if catlib.in_category(c, cat)]
    out = [catlib.generator(n) for n in names if catlib.in_category(catlib.generator(n), cat)]
    if cat in ("barN", "barO", "K"):
        out.append(catlib.free_disc())
    if cat == "barO":
        out += [catlib.sphere(), catlib.projective_plane(), catlib.closed_surface(1, 0)]
    if cat == "Nb":
        out.append(catlib.tau(2))
    return out


def endo_lattice(cat, base=(0, 0)):
    """Payload coordinates of endomorphisms of ``base`` that generate its automorphism group."""
    cat = category_id(cat)
    if cat in ("N1", "N1plus", "N1minus"):
        base = (1, 0)
    base = ObjectSig(*base)
    if not catlib.objects_ok(base, cat):
        base = ObjectSig(0, 0)
    rows = []
    seen = set()
    for f in generating_morphisms(cat):
        loop = LocWord.of(connect(base, f.source, cat), f, connect(f.target, base, cat))
        for c, d in to_endo_word(loop, base, cat).letters:
            if (c, d) not in seen:
                seen.add((c, d))
                rows.append(payload_coordinates(cat, payload_of(c, cat)))
        for x in (f.source, f.target):
            if x != base:
                e = compose_all(connect(base, x, cat), connect(x, base, cat))
                rows.append(payload_coordinates(cat, payload_of(e, cat)))
    return rows


def free_rank(cat, base=(0, 0)):
    rows = endo_lattice(cat, base)
    keys = sorted({k for r in rows for k in r}, key=repr)
    if not keys:
        return 0
    return Matrix([[r.get(k, 0) for k in keys] for r in rows]).rank()
