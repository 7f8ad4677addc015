"""Finitely presented commutative monoids and their group completions.

Text format for presentations (one relation per line, ``#`` starts a comment)::

    generators: h c t        optional; otherwise names are collected in order of use
    2t = 0
    h + c = 3c
    c + t = c

A side is ``0`` or a ``+``-separated sum of terms ``[INT]NAME``.
"""
import re
from collections import Counter
from itertools import count
from typing import NamedTuple

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from . import catlib
from .errors import BoundExceeded, FreeBoundaryError, InternalInvariantError, NotInCategory
from .surface import omega


class MonoidPresentation(NamedTuple):
    rank: int
    relations: tuple          # pairs (lhs, rhs) of exponent tuples
    names: tuple = ()

    @classmethod
    def make(cls, rank, relations=(), names=None):
        names = tuple(names) if names else tuple(f"e{i}" for i in range(rank))
        if len(names) != rank:
            raise ValueError("one name per generator required")
        rels = []
        for lhs, rhs in relations:
            lhs, rhs = tuple(lhs), tuple(rhs)
            if len(lhs) != rank or len(rhs) != rank:
                raise ValueError(f"relation {lhs} = {rhs} does not have length {rank}")
            if min(lhs + rhs, default=0) < 0:
                raise ValueError("exponents must be non-negative")
            rels.append((lhs, rhs))
        return cls(rank, tuple(rels), names)

    def to_text(self):
        lines = [f"generators: {' '.join(self.names)}"]
        for lhs, rhs in self.relations:
            lines.append(f"{_side_text(lhs, self.names)} = {_side_text(rhs, self.names)}")
        return "\n".join(lines) + "\n"


def _side_text(vec, names):
    terms = [(f"{e}" if e != 1 else "") + n for e, n in zip(vec, names) if e]
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^\s*(\d*)\s*([A-Za-z_][A-Za-z0-9_]*)\s*$")


def parse_presentation(text):
    names = []
    declared = False
    raw = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            names = line.split(":", 1)[1].replace(",", " ").split()
            declared = True
            continue
        if line.count("=") != 1:
            raise ValueError(f"line {lineno}: expected exactly one '='")
        sides = []
        for side in line.split("="):
            terms = Counter()
            if side.strip() != "0":
                for term in side.split("+"):
                    m = _TERM.match(term)
                    if not m:
                        raise ValueError(f"line {lineno}: bad term {term.strip()!r}")
                    coeff = int(m.group(1)) if m.group(1) else 1
                    name = m.group(2)
                    if name not in names:
                        if declared:
                            raise ValueError(f"line {lineno}: undeclared generator {name!r}")
                        names.append(name)
                    terms[name] += coeff
            sides.append(terms)
        raw.append(sides)
    rels = [(tuple(l[n] for n in names), tuple(r[n] for n in names)) for l, r in raw]
    return MonoidPresentation.make(len(names), rels, names)


class GroupCompletion(NamedTuple):
    invariant_factors: tuple   # d_1 | d_2 | ...; 0 marks a free factor; trivial factors dropped
    map: dict                  # generator name -> coordinates in the factors above
    names: tuple

    def coordinates(self, exponents):
        out = [0] * len(self.invariant_factors)
        for name, e in zip(self.names, exponents):
            for i, x in enumerate(self.map[name]):
                out[i] += e * x
        return self.reduce(out)

    def reduce(self, coords):
        return tuple(x % d if d else x for x, d in zip(coords, self.invariant_factors))

    @property
    def free_rank(self):
        return sum(1 for d in self.invariant_factors if d == 0)

    @property
    def torsion(self):
        return tuple(d for d in self.invariant_factors if d)

    def describe(self):
        parts = ["Z" if d == 0 else f"Z/{d}" for d in self.invariant_factors]
        return " x ".join(parts) if parts else "0"


def _is_unimodular(m):
    return m.is_square and abs(m.det()) == 1


def grothendieck(p):
    """Smith-normal-form description of Z^rank modulo the relation differences."""
    n = p.rank
    rows = [[a - b for a, b in zip(lhs, rhs)] for lhs, rhs in p.relations]
    rows = [r for r in rows if any(r)]
    if not rows or n == 0:
        diag = [0] * n
        V = Matrix.eye(n)
    else:
        M = Matrix(rows)
        D, U, V = smith_normal_decomp(M)
        if U * M * V != D or not _is_unimodular(U) or not _is_unimodular(V):
            raise InternalInvariantError("Smith normal form certificate failed")
        diag = [abs(int(D[i, i])) if i < D.rows else 0 for i in range(n)]
        for i in range(n - 1):
            if diag[i] == 0 and diag[i + 1] != 0:
                raise InternalInvariantError("Smith normal form out of order")
            if diag[i] and diag[i + 1] % diag[i]:
                raise InternalInvariantError("Smith normal form divisibility failed")
    keep = [i for i, d in enumerate(diag) if d != 1]
    factors = tuple(diag[i] for i in keep)
    mapping = {}
    for j, name in enumerate(p.names):
        coords = tuple(int(V[j, i]) for i in keep)
        mapping[name] = tuple(x % d if d else x for x, d in zip(coords, factors))
    return GroupCompletion(factors, mapping, p.names)


# -- fixtures -------------------------------------------------------------------------


def free_monoid(rank, names=None):
    return MonoidPresentation.make(rank, (), names)


def n1_presentation():
    """Handle h, crosscap c, type t."""
    return parse_presentation("generators: h c t\n2t = 0\nh + c = 3c\nc + t = c\n")


def n1plus_presentation():
    return parse_presentation("generators: h t\n2t = 0\n")


def n1minus_presentation():
    """Crosscap c and the type t of the cylinder; the type dies once a crosscap is present."""
    return parse_presentation("generators: c t\n2t = 0\nc + t = c\n")


def n0_types(r):
    """The first ``r`` closed surface types: (0,0), (1,0), (0,1), (2,0), (0,2), ..."""
    out = [(0, 0)]
    i = 1
    while len(out) < r:
        out.append((i, 0))
        if len(out) < r:
            out.append((0, i))
        i += 1
    return out[:r]


def n0_presentation(r):
    return free_monoid(r, [f"S{g}_{k}" for g, k in n0_types(r)])


# -- the monoid of connected endomorphisms of the circle --------------------------------


class N1Element(NamedTuple):
    g: int
    k: int
    eps: int

    @classmethod
    def make(cls, g, k, eps=0):
        if g < 0 or k < 0:
            raise ValueError("g and k must be non-negative")
        if k > 0:
            return cls(0, 2 * g + k, 0)
        return cls(g, 0, eps & 1)

    def __add__(self, other):
        return N1Element.make(self.g + other.g, self.k + other.k, self.eps ^ other.eps)

    def degree(self):
        return self.g + self.k + self.eps

    def cobordism(self):
        return catlib.n1_cobordism(self.g, self.k, self.eps)


N1_ZERO = N1Element(0, 0, 0)


def n1_elements(max_degree=None):
    """Normal forms in graded lexicographic order."""
    for d in (range(max_degree + 1) if max_degree is not None else count()):
        batch = []
        for g in range(d + 1):
            for k in range(d - g + 1):
                eps = d - g - k
                if eps > 1 or (k > 0 and (g or eps)):
                    continue
                batch.append(N1Element(g, k, eps))
        yield from sorted(batch)


def is_witness(x, y, x2, y2, w):
    """``x + y' + w = y + x' + w`` in normal form."""
    return x + y2 + w == y + x2 + w


def gc_witness(x, y, x2, y2, bound=50):
    """Least witness with degree at most ``bound``, or None if none was found.

    The monoid is infinite, so None means only "not found within the bound".
    """
    for w in n1_elements(bound):
        if is_witness(x, y, x2, y2, w):
            return w
    return None


def gc_witness_strict(x, y, x2, y2, bound=50):
    w = gc_witness(x, y, x2, y2, bound)
    if w is None:
        raise BoundExceeded(f"no witness of degree <= {bound}")
    return w


def gc_class_n1(e):
    return 2 * e.g + e.k


def n1_element_of(c):
    """Inverse of :meth:`N1Element.cobordism` on canonical connected endomorphisms of the circle."""
    if not catlib.in_category(c, "N1"):
        raise NotInCategory(f"{c} is not in N1")
    comp = c.components[0]
    if comp.crosscaps:
        return N1Element.make(0, comp.crosscaps)
    twists = [cyc.twist for cyc in comp.cycles]
    return N1Element.make(comp.genus, 0, twists[0] ^ twists[1])


def n0_class(c, truncation=None):
    """Counts of closed components per type ``(g,0)`` / ``(0,k)`` as a Counter.

    ``truncation`` is ``(gmax, kmax)``; a component beyond it raises BoundExceeded.
    """
    if c.source != (0, 0) or c.target != (0, 0):
        raise NotInCategory(f"{c} is not an endomorphism of the empty object")
    if omega(c):
        raise FreeBoundaryError(f"{c} has free boundary")
    counts = Counter()
    for comp in c.components:
        key = (comp.genus, comp.crosscaps)
        if truncation is not None and (key[0] > truncation[0] or key[1] > truncation[1]):
            raise BoundExceeded(f"component type {key} beyond truncation {truncation}")
        counts[key] += 1
    return counts
