"""Independent surface classifier built on polygon edge words.

Every generator is a small polygonal complex given below as edge words.
Tokens in a word:

* ``S0`` / ``T0``: source / target circle slot 0 (a loop edge),
* ``s0`` / ``t0``: source / target interval slot 0 (edge direction = parameter),
* ``_``: a fresh free-boundary edge,
* any other name: an internal edge local to the generator,
* a leading ``~`` reverses the edge.

Composition relabels matching slot edges to one shared label, disjoint union
renumbers slots.  Classification counts V - E + F per connected piece,
propagates face orientations across shared edges and walks boundary edges
vertex to vertex.  Nothing here calls the gluing engine.
"""
import itertools
import re
from typing import NamedTuple

from . import catlib
from .errors import InternalInvariantError, TypeMismatch
from .expr import Compose, Gen, Id, Inv, Tensor
from .surface import (
    CIRCLE, INTERVAL, SOURCE, TARGET, ArcCycle, Cobordism, MarkedCircle, ObjectSig, Slot,
)

GENERATOR_WORDS = {
    "disc_in": ((0, 0), (1, 0), ["x ~T0 ~x"]),
    "disc_out": ((1, 0), (0, 0), ["x S0 ~x"]),
    "pants_in": ((2, 0), (1, 0), ["x S0 ~x y S1 ~y z ~T0 ~z"]),
    "pants_out": ((1, 0), (2, 0), ["x S0 ~x y ~T0 ~y z ~T1 ~z"]),
    "cyl": ((1, 0), (1, 0), ["S0 x ~T0 ~x"]),
    "odisc_in": ((0, 0), (0, 1), ["~t0 _"]),
    "odisc_out": ((0, 1), (0, 0), ["s0 _"]),
    "opants_in": ((0, 2), (0, 1), ["s0 _ s1 _ ~t0 _"]),
    "opants_out": ((0, 1), (0, 2), ["s0 _ ~t1 _ ~t0 _"]),
    "ocyl": ((0, 1), (0, 1), ["s0 _ ~t0 _"]),
    "sym_cc": ((2, 0), (2, 0), ["S0 x ~T1 ~x", "S1 y ~T0 ~y"]),
    "sym_ii": ((0, 2), (0, 2), ["s0 _ ~t1 _", "s1 _ ~t0 _"]),
    "sym_ci": ((1, 1), (1, 1), ["S0 x ~T0 ~x", "s0 _ ~t0 _"]),
    "whistle_co": ((1, 0), (0, 1), ["~t0 _ x S0 ~x"]),
    "whistle_oc": ((0, 1), (1, 0), ["s0 _ x ~T0 ~x"]),
    "rp2_cyl": ((1, 0), (1, 0), ["x S0 ~x y ~T0 ~y c c"]),
    "mobius": ((0, 0), (1, 0), ["x ~T0 ~x c c"]),
    "twist_circle": ((1, 0), (1, 0), ["S0 x T0 ~x"]),
    "twist_interval": ((0, 1), (0, 1), ["s0 _ t0 _"]),
}

_fresh = itertools.count(1)
_SLOT_TOKEN = re.compile(r"^([STst])(\d+)$")


class Complex:
    """Faces are lists of ``(label, sign)``; ``slots`` maps Slot -> label."""

    __slots__ = ("source", "target", "faces", "slots")

    def __init__(self, source, target, faces, slots):
        self.source = ObjectSig(*source)
        self.target = ObjectSig(*target)
        self.faces = faces
        self.slots = slots


def complex_from_words(source, target, words):
    slots = {}
    faces = []
    local = {}
    for word in words:
        face = []
        for tok in word.split():
            sign = 1
            if tok.startswith("~"):
                sign, tok = -1, tok[1:]
            if tok == "_":
                face.append((next(_fresh), sign))
                continue
            m = _SLOT_TOKEN.match(tok)
            if m:
                letter, idx = m.group(1), int(m.group(2))
                slot = Slot(SOURCE if letter in "Ss" else TARGET,
                            CIRCLE if letter.isupper() else INTERVAL, idx)
                if slot not in slots:
                    slots[slot] = next(_fresh)
                face.append((slots[slot], sign))
                continue
            if tok not in local:
                local[tok] = next(_fresh)
            face.append((local[tok], sign))
        faces.append(face)
    return Complex(source, target, faces, slots)


def realize(c):
    """Polygon model of a canonical cobordism, one face per component.

    Word per component: ``d B ~d`` for every boundary circle ``B`` written in
    walking order, then ``a b ~a ~b`` per handle and ``c c`` per crosscap.
    """
    words = []
    for comp in c.components:
        toks = []
        for cyc in comp.cycles:
            d = f"d{next(_fresh)}"
            if type(cyc) is MarkedCircle:
                body = [_slot_token(cyc.slot, cyc.twist ^ cyc.slot.side)]
            else:
                body = []
                for slot, tw in cyc.arcs:
                    body.append(_slot_token(slot, tw ^ slot.side))
                    body.append("_")
                if not body:
                    body = ["_"]
            toks += [d] + body + ["~" + d]
        for _ in range(comp.genus):
            a, b = f"a{next(_fresh)}", f"b{next(_fresh)}"
            toks += [a, b, "~" + a, "~" + b]
        for _ in range(comp.crosscaps):
            x = f"c{next(_fresh)}"
            toks += [x, x]
        if not toks:
            e = f"e{next(_fresh)}"
            toks = [e, "~" + e]
        words.append(" ".join(toks))
    return complex_from_words(c.source, c.target, words)


def _slot_token(slot, start_param):
    letter = ("S" if slot.side == SOURCE else "T") if slot.kind == CIRCLE else (
        "s" if slot.side == SOURCE else "t")
    return ("~" if start_param else "") + f"{letter}{slot.index}"


def generator_complex(name):
    try:
        src, tgt, words = GENERATOR_WORDS[name]
    except KeyError:
        return realize(catlib.generator(name))
    return complex_from_words(src, tgt, words)


def glue(a, b):
    """``b after a`` on complexes."""
    if a.target != b.source:
        raise TypeMismatch(a.target, b.source, "oracle composition")
    rename = {}
    for slot, label in b.slots.items():
        if slot.side == SOURCE:
            rename[label] = a.slots[Slot(TARGET, slot.kind, slot.index)]
    faces = [list(f) for f in a.faces]
    faces += [[(rename.get(l, l), s) for l, s in f] for f in b.faces]
    slots = {s: l for s, l in a.slots.items() if s.side == SOURCE}
    slots.update({s: l for s, l in b.slots.items() if s.side == TARGET})
    return Complex(a.source, b.target, faces, slots)


def disjoint(a, b):
    slots = dict(a.slots)
    for slot, label in b.slots.items():
        obj = a.source if slot.side == SOURCE else a.target
        shift = obj.circles if slot.kind == CIRCLE else obj.intervals
        slots[Slot(slot.side, slot.kind, slot.index + shift)] = label
    return Complex(a.source + b.source, a.target + b.target, a.faces + b.faces, slots)


def build(e):
    """Complex for an expression tree."""
    if isinstance(e, Gen):
        if e.name in GENERATOR_WORDS and not e.args:
            return generator_complex(e.name)
        from .expr import gen_value
        return realize(gen_value(e))
    if isinstance(e, Id):
        words = ["S%d x%d ~T%d ~x%d" % (i, i, i, i) for i in range(e.sig.circles)]
        words += ["s%d _ ~t%d _" % (i, i) for i in range(e.sig.intervals)]
        return complex_from_words(e.sig, e.sig, words)
    if isinstance(e, Tensor):
        return disjoint(build(e.left), build(e.right))
    if isinstance(e, Compose):
        return glue(build(e.before), build(e.after))
    if isinstance(e, Inv):
        raise TypeMismatch("inv(...)", "cobordism", "oracle")
    raise TypeError(f"not an expression: {e!r}")


# -- classification ---------------------------------------------------------------

class _UF:
    def __init__(self, n):
        self.p = list(range(n))

    def find(self, i):
        p = self.p
        while p[i] != i:
            p[i] = p[p[i]]
            i = p[i]
        return i

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[rb] = ra


class OracleComponent(NamedTuple):
    orientable: bool
    genus_or_crosscaps: int
    boundary_cycles: int
    marked_slots: tuple
    cycles: tuple


def classify_complex(cx):
    faces = cx.faces
    offsets = []
    total = 0
    for f in faces:
        offsets.append(total)
        total += len(f)
    occ = {}  # label -> list of (face, position, sign)
    for fi, f in enumerate(faces):
        for pos, (label, sign) in enumerate(f):
            occ.setdefault(label, []).append((fi, pos, sign))

    def tail_head(fi, pos, sign):
        n = len(faces[fi])
        a = offsets[fi] + pos
        b = offsets[fi] + (pos + 1) % n
        return (a, b) if sign > 0 else (b, a)

    corners = _UF(total)
    face_uf = _UF(len(faces))
    # orientation parity over faces
    par_parent = list(range(len(faces)))
    par = [0] * len(faces)
    nonorientable_roots = set()

    def pfind(i):
        p = 0
        while par_parent[i] != i:
            p ^= par[i]
            i = par_parent[i]
        return i, p

    for label, uses in occ.items():
        if len(uses) > 2:
            raise InternalInvariantError(f"edge {label} used {len(uses)} times")
        if len(uses) == 2:
            (f1, p1, s1), (f2, p2, s2) = uses
            t1, h1 = tail_head(f1, p1, s1)
            t2, h2 = tail_head(f2, p2, s2)
            corners.union(t1, t2)
            corners.union(h1, h2)
            face_uf.union(f1, f2)
            want = 1 if s1 == s2 else 0
            r1, q1 = pfind(f1)
            r2, q2 = pfind(f2)
            if r1 == r2:
                if q1 ^ q2 != want:
                    nonorientable_roots.add(r1)
            else:
                par_parent[r2] = r1
                par[r2] = q1 ^ q2 ^ want
                if r2 in nonorientable_roots:
                    nonorientable_roots.add(r1)

    slot_of = {label: slot for slot, label in cx.slots.items()}
    corner_face = []
    for fi, f in enumerate(faces):
        corner_face += [fi] * len(f)

    comp_of_face = [face_uf.find(i) for i in range(len(faces))]
    stats = {}
    for fi in range(len(faces)):
        st = stats.setdefault(comp_of_face[fi], {"V": set(), "E": set(), "F": 0})
        st["F"] += 1
        for label, _ in faces[fi]:
            st["E"].add(label)
    for c in range(total):
        v = corners.find(c)
        comp = comp_of_face[corner_face[c]]
        stats[comp]["V"].add(v)
    owner = {}
    for comp, st in stats.items():
        for v in st["V"]:
            if owner.setdefault(v, comp) != comp:
                raise InternalInvariantError("vertex shared by two components")

    # boundary edges
    ends = {}
    boundary = []
    for label, uses in occ.items():
        if len(uses) == 1:
            fi, pos, sign = uses[0]
            t, h = tail_head(fi, pos, sign)
            tv, hv = corners.find(t), corners.find(h)
            ends.setdefault(tv, []).append((label, 0))
            ends.setdefault(hv, []).append((label, 1))
            boundary.append((label, fi, sign, tv, hv))
    for v, lst in ends.items():
        if len(lst) != 2:
            raise InternalInvariantError(f"boundary vertex of degree {len(lst)}")
    info = {label: (fi, sign, tv, hv) for label, fi, sign, tv, hv in boundary}

    def face_parity(fi):
        return pfind(fi)[1]

    def orientable(comp):
        return pfind(comp)[0] not in nonorientable_roots

    seen = set()
    cycles_by_comp = {}
    for label, fi, sign, tv, hv in boundary:
        if label in seen:
            continue
        comp = comp_of_face[fi]
        ori = orientable(comp)
        along = 1
        if ori:
            along = (1 if sign > 0 else 0) ^ face_parity(fi)
        walk = []
        cur, cur_along = label, along
        while True:
            seen.add(cur)
            cfi, csign, ctv, chv = info[cur]
            if ori:
                want = (1 if csign > 0 else 0) ^ face_parity(cfi)
                if want != cur_along:
                    raise InternalInvariantError("boundary walk left the induced orientation")
            walk.append((cur, cur_along))
            arrive_v, arrive_end = (chv, 1) if cur_along else (ctv, 0)
            a, b = ends[arrive_v]
            nxt = b if a == (cur, arrive_end) else a
            cur, cur_along = nxt[0], 1 if nxt[1] == 0 else 0
            if cur == label and cur_along == along:
                break
            if cur in seen:
                raise InternalInvariantError("boundary walk did not close up")
        cycles_by_comp.setdefault(comp, []).append(_cycle_from_walk(walk, slot_of))

    out = []
    for comp, st in sorted(stats.items()):
        chi = len(st["V"]) - len(st["E"]) + st["F"]
        cycles = tuple(cycles_by_comp.get(comp, ()))
        b = len(cycles)
        e = 2 - chi - b
        ori = orientable(comp)
        if ori:
            if e < 0 or e % 2:
                raise InternalInvariantError(f"orientable piece with 2g = {e}")
            gk = e // 2
        else:
            if e < 1:
                raise InternalInvariantError(f"non-orientable piece with k = {e}")
            gk = e
        marked = []
        for cyc in cycles:
            if type(cyc) is MarkedCircle:
                marked.append(cyc.slot)
            else:
                marked += [s for s, _ in cyc.arcs]
        out.append(OracleComponent(ori, gk, b, tuple(sorted(marked)), cycles))
    return out


def _cycle_from_walk(walk, slot_of):
    arcs = []
    circle = None
    for label, along in walk:
        slot = slot_of.get(label)
        if slot is None:
            continue
        start = 0 if along else 1
        if slot.kind == CIRCLE:
            if len(walk) != 1:
                raise InternalInvariantError("circle slot shares a boundary circle")
            circle = MarkedCircle(slot, start ^ slot.side)
        else:
            arcs.append((slot, start ^ slot.side))
    if circle is not None:
        return circle
    return ArcCycle(tuple(arcs))


def oracle_components(e):
    return classify_complex(build(e))


def oracle_classify(e):
    """Sorted per-component invariants ``(orientable, g_or_k, b, marked_slots)``."""
    return sorted((int(c.orientable), c.genus_or_crosscaps, c.boundary_cycles, c.marked_slots)
                  for c in oracle_components(e))


def oracle_cobordism(e):
    """Full boundary data from the oracle, canonicalized for comparison."""
    cx = build(e)
    comps = []
    for c in classify_complex(cx):
        g, k = (c.genus_or_crosscaps, 0) if c.orientable else (0, c.genus_or_crosscaps)
        comps.append((g, k, list(c.cycles)))
    return Cobordism.build(cx.source, cx.target, comps)


def invariants(c):
    """Invariants of a cobordism in the format of :func:`oracle_classify`."""
    out = []
    for comp in c.components:
        gk = comp.genus if comp.crosscaps == 0 else comp.crosscaps
        out.append((int(comp.crosscaps == 0), gk, len(comp.cycles), tuple(sorted(comp.slots()))))
    return sorted(out)
