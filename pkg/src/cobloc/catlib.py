"""Generators, parametric families and subcategory membership.

Generator basis (5 closed, 5 open, 3 symmetries, 2 whistles, and the
non-orientable / reflection extras)::

    disc_in  disc_out  pants_in  pants_out  cyl
    odisc_in odisc_out opants_in opants_out ocyl
    sym_cc   sym_ii    sym_ci
    whistle_co (S1 -> I)   whistle_oc (I -> S1)
    rp2_cyl  mobius  twist_circle  twist_interval

Objects list circles before intervals, so the circle/interval symmetry
``sym_ci`` is the identity of ``(1,1)``.
"""
from functools import lru_cache

from .errors import NotInCategory, NotStronglyConnected, UnknownGenerator, ValidationError
from .glue import compose, tensor
from .surface import (
    CIRCLE, INTERVAL, SOURCE, TARGET, ArcCycle, Cobordism, MarkedCircle,
    ObjectSig, Slot, WINDOW, identity,
)

CATEGORIES = ("K", "N", "O", "barN", "barO", "N0", "N1", "N1plus", "N1minus", "Nb",
              "S", "S_and_N", "S_and_O")

_ALIASES = {"S∩N": "S_and_N", "S∩O": "S_and_O", "SN": "S_and_N", "SO": "S_and_O",
            "N1+": "N1plus", "N1-": "N1minus", "Nbar": "barN", "Obar": "barO"}


def category_id(name):
    name = _ALIASES.get(name, name)
    if name not in CATEGORIES:
        raise ValueError(f"unknown category {name!r}; expected one of {', '.join(CATEGORIES)}")
    return name


def sc(i):
    return Slot(SOURCE, CIRCLE, i)


def tc(i):
    return Slot(TARGET, CIRCLE, i)


def si(i):
    return Slot(SOURCE, INTERVAL, i)


def ti(i):
    return Slot(TARGET, INTERVAL, i)


def _mc(slot, twist=0):
    return MarkedCircle(slot, twist)


def _arcs(*pairs):
    return ArcCycle(tuple(pairs))


_GENERATOR_DATA = {
    "disc_in": ((0, 0), (1, 0), [(0, 0, [_mc(tc(0))])]),
    "disc_out": ((1, 0), (0, 0), [(0, 0, [_mc(sc(0))])]),
    "pants_in": ((2, 0), (1, 0), [(0, 0, [_mc(sc(0)), _mc(sc(1)), _mc(tc(0))])]),
    "pants_out": ((1, 0), (2, 0), [(0, 0, [_mc(sc(0)), _mc(tc(0)), _mc(tc(1))])]),
    "cyl": ((1, 0), (1, 0), [(0, 0, [_mc(sc(0)), _mc(tc(0))])]),
    "odisc_in": ((0, 0), (0, 1), [(0, 0, [_arcs((ti(0), 0))])]),
    "odisc_out": ((0, 1), (0, 0), [(0, 0, [_arcs((si(0), 0))])]),
    "opants_in": ((0, 2), (0, 1), [(0, 0, [_arcs((si(0), 0), (si(1), 0), (ti(0), 0))])]),
    "opants_out": ((0, 1), (0, 2), [(0, 0, [_arcs((si(0), 0), (ti(1), 0), (ti(0), 0))])]),
    "ocyl": ((0, 1), (0, 1), [(0, 0, [_arcs((si(0), 0), (ti(0), 0))])]),
    "sym_cc": ((2, 0), (2, 0), [(0, 0, [_mc(sc(0)), _mc(tc(1))]),
                                (0, 0, [_mc(sc(1)), _mc(tc(0))])]),
    "sym_ii": ((0, 2), (0, 2), [(0, 0, [_arcs((si(0), 0), (ti(1), 0))]),
                                (0, 0, [_arcs((si(1), 0), (ti(0), 0))])]),
    "sym_ci": ((1, 1), (1, 1), [(0, 0, [_mc(sc(0)), _mc(tc(0))]),
                                (0, 0, [_arcs((si(0), 0), (ti(0), 0))])]),
    "whistle_co": ((1, 0), (0, 1), [(0, 0, [_mc(sc(0)), _arcs((ti(0), 0))])]),
    "whistle_oc": ((0, 1), (1, 0), [(0, 0, [_arcs((si(0), 0)), _mc(tc(0))])]),
    "rp2_cyl": ((1, 0), (1, 0), [(0, 1, [_mc(sc(0)), _mc(tc(0))])]),
    "mobius": ((0, 0), (1, 0), [(0, 1, [_mc(tc(0))])]),
    "twist_circle": ((1, 0), (1, 0), [(0, 0, [_mc(sc(0)), _mc(tc(0), 1)])]),
    "twist_interval": ((0, 1), (0, 1), [(0, 0, [_arcs((si(0), 0), (ti(0), 1))])]),
}

GENERATOR_NAMES = tuple(_GENERATOR_DATA)
CLOSED_GENERATORS = ("disc_in", "disc_out", "pants_in", "pants_out", "cyl", "sym_cc",
                     "twist_circle", "mobius", "rp2_cyl")
OPEN_GENERATORS = ("odisc_in", "odisc_out", "opants_in", "opants_out", "ocyl", "sym_ii",
                   "twist_interval")
ORIENTED_GENERATORS = ("disc_in", "disc_out", "pants_in", "pants_out", "cyl", "odisc_in",
                       "odisc_out", "opants_in", "opants_out", "ocyl", "sym_cc", "sym_ii",
                       "sym_ci", "whistle_co", "whistle_oc")


@lru_cache(maxsize=None)
def generator(name):
    try:
        src, tgt, comps = _GENERATOR_DATA[name]
    except KeyError:
        raise UnknownGenerator(f"unknown generator {name!r}") from None
    return Cobordism.build(src, tgt, comps)


def connecting(k):
    """``p_k``: k discs from the empty manifold to k circles."""
    if k < 1:
        raise ValidationError("connecting(k) needs k >= 1")
    return Cobordism.build((0, 0), (k, 0), [(0, 0, [_mc(tc(i))]) for i in range(k)])


def tau(n):
    """Connected surface with one crosscap, ``n`` source circles and one target circle."""
    if n < 0:
        raise ValidationError("tau(n) needs n >= 0")
    cycles = [_mc(sc(i)) for i in range(n)] + [_mc(tc(0))]
    return Cobordism.build((n, 0), (1, 0), [(0, 1, cycles)])


def connected(genus, crosscaps, windows, source, target, twists=None):
    """A connected cobordism ``source -> target``.

    Circle slots are marked circles.  All interval slots lie on one boundary
    circle: sources in increasing order, then targets in decreasing order, all
    with twist 0 (the pattern of a disc with strips attached).  ``twists``
    optionally maps circle slots to twist bits.
    """
    source = ObjectSig(*source)
    target = ObjectSig(*target)
    twists = twists or {}
    cycles = [_mc(sc(i), twists.get(sc(i), 0)) for i in range(source.circles)]
    cycles += [_mc(tc(i), twists.get(tc(i), 0)) for i in range(target.circles)]
    arcs = [(si(i), 0) for i in range(source.intervals)]
    arcs += [(ti(i), 0) for i in reversed(range(target.intervals))]
    if arcs:
        cycles.append(ArcCycle(tuple(arcs)))
    cycles += [WINDOW] * windows
    return Cobordism.build(source, target, [(genus, crosscaps, cycles)])


def n1_cobordism(genus, crosscaps, eps):
    """Connected endomorphism of the circle with the given handles, crosscaps and type."""
    return connected(genus, crosscaps, 0, (1, 0), (1, 0), twists={tc(0): eps})


def sigma_kw(k, w):
    """Connected endomorphism of the circle with k crosscaps and w windows."""
    return connected(0, k, w, (1, 0), (1, 0))


def cylinder_windows(w):
    return connected(0, 0, w, (1, 0), (1, 0))


def closed_surface(genus=0, crosscaps=0):
    return Cobordism.build((0, 0), (0, 0), [(genus, crosscaps, [])])


def free_disc():
    return Cobordism.build((0, 0), (0, 0), [(0, 0, [WINDOW])])


def sphere():
    return closed_surface(0, 0)


def projective_plane():
    return closed_surface(0, 1)


def interval_endo(genus, crosscaps, windows):
    """Connected endomorphism of I (one arc cycle) with extra windows."""
    return connected(genus, crosscaps, windows, (0, 1), (0, 1))


def interval_whistle(genus, crosscaps, windows):
    """Connected endomorphism of I with source and target on different boundary circles."""
    cycles = [_arcs((si(0), 0)), _arcs((ti(0), 0))] + [WINDOW] * windows
    return Cobordism.build((0, 1), (0, 1), [(genus, crosscaps, cycles)])


def interval_split(first, second):
    """Endomorphism of I as two discs: ``first = (g, k, w)`` holds the source, ``second`` the target."""
    (a, p, w), (b, q, v) = first, second
    return Cobordism.build((0, 1), (0, 1), [
        (a, p, [_arcs((si(0), 0))] + [WINDOW] * w),
        (b, q, [_arcs((ti(0), 0))] + [WINDOW] * v)])


def circle_split(first, second):
    """Endomorphism of the circle as two discs: ``first = (g, k)`` caps the source, ``second`` the target."""
    (a, p), (b, q) = first, second
    return Cobordism.build((1, 0), (1, 0), [(a, p, [_mc(sc(0))]), (b, q, [_mc(tc(0))])])


def closed_union(counts):
    """Disjoint union of closed surfaces, ``counts`` mapping ``(g, k)`` to a multiplicity."""
    comps = [(g, k, []) for (g, k), n in sorted(dict(counts).items()) for _ in range(n)]
    return Cobordism.build((0, 0), (0, 0), comps)


def free_discs(n, genus=0, crosscaps=0, windows=1):
    """``n`` components with only free boundary (``windows`` each)."""
    return Cobordism.build((0, 0), (0, 0), [(genus, crosscaps, [WINDOW] * windows)] * n)


def adjunction_surface(genus, crosscaps, c, n, m):
    """Surface ``n -> m`` with ``c`` components, total genus ``genus`` and ``crosscaps`` crosscaps.

    Circles are dealt round-robin to the components, so every component has
    a target circle when ``c <= m``.  The genus sits on the first component
    and the crosscaps on the last.
    """
    if not 1 <= c <= m:
        raise ValidationError("need 1 <= c <= m")
    comps = []
    for i in range(c):
        cycles = [_mc(sc(j)) for j in range(i, n, c)] + [_mc(tc(j)) for j in range(i, m, c)]
        comps.append([genus if i == 0 else 0, crosscaps if i == c - 1 else 0, cycles])
    return Cobordism.build((n, 0), (m, 0), comps)


def adjunction_sides(genus, crosscaps, c, n, m):
    """Both legs of the naturality square for ``tau``.

    Returns ``(tau(m) after sigma, i(j) after tau(n), j + 1)`` where ``sigma`` is
    :func:`adjunction_surface`, ``i(j)`` the connected endomorphism of the circle
    with ``j = 2g + k + 2m - 2c`` crosscaps (the identity when ``j = 0``).
    """
    sigma = adjunction_surface(genus, crosscaps, c, n, m)
    left = compose(sigma, tau(m))
    j = 2 * genus + crosscaps + 2 * m - 2 * c
    i_j = connected(0, j, 0, (1, 0), (1, 0)) if j > 0 else identity((1, 0))
    right = compose(tau(n), i_j)
    return left, right, j + 1


# -- membership ---------------------------------------------------------------

def _all_twists_zero(comp):
    for cyc in comp.cycles:
        if type(cyc) is MarkedCircle:
            if cyc.twist:
                return False
        else:
            for _, tw in cyc.arcs:
                if tw:
                    return False
    return True


def _has_target(comp):
    for cyc in comp.cycles:
        if type(cyc) is MarkedCircle:
            if cyc.slot.side == TARGET:
                return True
        else:
            for slot, _ in cyc.arcs:
                if slot.side == TARGET:
                    return True
    return False


def _is_closed_objects(c):
    return c.source.intervals == 0 and c.target.intervals == 0


def _is_open_objects(c):
    return c.source.circles == 0 and c.target.circles == 0


def _no_windows(c):
    return all(comp.windows == 0 for comp in c.components)


def _oriented(c):
    return all(comp.crosscaps == 0 and _all_twists_zero(comp) for comp in c.components)


def _n1(c):
    return (c.source == (1, 0) and c.target == (1, 0) and len(c.components) == 1
            and _no_windows(c))


def in_category(c, cat):
    """Membership of a canonical cobordism in a subcategory of K.

    ``S`` means orientable with all boundary parametrizations compatible with
    one orientation (every twist 0 in canonical form).
    """
    cat = category_id(cat)
    if cat == "K":
        return True
    if cat == "N":
        return _is_closed_objects(c) and _no_windows(c)
    if cat == "barN":
        return _is_closed_objects(c)
    if cat == "O":
        return _is_open_objects(c) and all(comp.cycles for comp in c.components)
    if cat == "barO":
        return _is_open_objects(c)
    if cat == "N0":
        return c.source == (0, 0) and c.target == (0, 0) and _no_windows(c)
    if cat == "N1":
        return _n1(c)
    if cat == "N1plus":
        return _n1(c) and c.components[0].crosscaps == 0
    if cat == "N1minus":
        comp = c.components[0] if c.components else None
        return _n1(c) and (comp.crosscaps > 0 or comp.genus == 0)
    if cat == "Nb":
        return in_category(c, "N") and all(_has_target(comp) for comp in c.components)
    if cat == "S":
        return _oriented(c)
    if cat == "S_and_N":
        return _oriented(c) and in_category(c, "N")
    if cat == "S_and_O":
        return _oriented(c) and in_category(c, "O")
    raise AssertionError(cat)


def require(c, cat):
    if not in_category(c, cat):
        raise NotInCategory(f"{c} is not a morphism of {cat}")


def objects_ok(obj, cat):
    obj = ObjectSig(*obj)
    cat = category_id(cat)
    if cat in ("N", "barN", "Nb", "S_and_N"):
        return obj.intervals == 0
    if cat in ("O", "barO", "S_and_O"):
        return obj.circles == 0
    if cat == "N0":
        return obj == (0, 0)
    if cat in ("N1", "N1plus", "N1minus"):
        return obj == (1, 0)
    return True


# -- connecting morphisms -------------------------------------------------------

STRONGLY_CONNECTED = ("K", "N", "O", "barN", "barO", "N0", "N1", "N1plus", "N1minus",
                      "S", "S_and_N", "S_and_O")


def connect(a, b, cat):
    """Deterministic morphism ``a -> b`` inside ``cat``.

    Matching slots are joined by identity cylinders / strips (the first
    ``min`` circles and intervals); surplus source circles are capped with
    ``disc_out``, surplus target circles opened with ``disc_in``, and the same
    for intervals with ``odisc_out`` / ``odisc_in``.
    """
    cat = category_id(cat)
    a = ObjectSig(*a)
    b = ObjectSig(*b)
    if cat not in STRONGLY_CONNECTED:
        raise NotStronglyConnected(f"{cat} is not strongly connected")
    if not (objects_ok(a, cat) and objects_ok(b, cat)):
        raise NotInCategory(f"objects {a}, {b} are not in {cat}")
    circles = _part(a.circles, b.circles, "cyl", "disc_out", "disc_in")
    intervals = _part(a.intervals, b.intervals, "ocyl", "odisc_out", "odisc_in")
    return _sort_kinds(circles, intervals)


def _part(m, n, cyl, cap, cup):
    base = min(m, n)
    pieces = [generator(cyl)] * base
    pieces += [generator(cap)] * (m - base)
    pieces += [generator(cup)] * (n - base)
    out = identity((0, 0))
    for p in pieces:
        out = tensor(out, p)
    return out


def _sort_kinds(circles, intervals):
    # circles carry no intervals and vice versa, so a plain tensor keeps circles first
    return tensor(circles, intervals)
