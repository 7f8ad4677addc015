"""Canonical values for morphisms of the open-closed cobordism category.

A morphism ``(m, n) -> (p, q)`` is stored as a list of connected components.
Each component records its genus or crosscap count and its boundary circles.
A boundary circle is either a whole marked circle (one circle slot of the
source or target object) or an *arc cycle*: the cyclic sequence of interval
slots met while walking around that circle, with free boundary implicit
between consecutive arcs.  An arc cycle with no arcs is a window.

Twist convention.  On an orientable component fix an orientation and walk
each boundary circle in the induced direction.  A source slot has twist 0
when its parametrization runs along the walk; a target slot has twist 0
when it runs against it.  With this convention every identity morphism
has all twists 0, and reversing the orientation of a component flips all
of its twists and reverses every arc cycle.  On a non-orientable component
each boundary circle may be reversed on its own (crosscap slide), so the
canonical form keeps only what survives that: arc order and relative arc
directions up to reversal of the circle.
"""
import json
from typing import NamedTuple

from .errors import ValidationError

SOURCE, TARGET = 0, 1
CIRCLE, INTERVAL = 0, 1

_SIDE_NAMES = ("source", "target")
_KIND_NAMES = ("circle", "interval")


class ObjectSig(NamedTuple):
    circles: int
    intervals: int

    def __str__(self):
        return f"({self.circles},{self.intervals})"

    def __add__(self, other):
        return ObjectSig(self.circles + other.circles, self.intervals + other.intervals)

    @property
    def closed(self):
        return self.intervals == 0


EMPTY = ObjectSig(0, 0)


class Slot(NamedTuple):
    side: int
    kind: int
    index: int

    def __str__(self):
        return "st"[self.side] + "ci"[self.kind] + str(self.index)


class MarkedCircle(NamedTuple):
    slot: Slot
    twist: int


class ArcCycle(NamedTuple):
    arcs: tuple  # of (Slot, twist) pairs, in walking order


WINDOW = ArcCycle(())


class Component(NamedTuple):
    genus: int
    crosscaps: int
    cycles: tuple

    @property
    def orientable(self):
        return self.crosscaps == 0

    @property
    def euler_char(self):
        return 2 - 2 * self.genus - self.crosscaps - len(self.cycles)

    @property
    def windows(self):
        return sum(1 for c in self.cycles if c == WINDOW)

    def slots(self):
        for cyc in self.cycles:
            if type(cyc) is MarkedCircle:
                yield cyc.slot
            else:
                for slot, _ in cyc.arcs:
                    yield slot


def cycle_key(cyc):
    if type(cyc) is MarkedCircle:
        return (0, cyc.slot, cyc.twist)
    return (1, cyc.arcs)


def _min_rotation(arcs):
    if len(arcs) < 2:
        return arcs
    return min(arcs[i:] + arcs[:i] for i in range(len(arcs)))


def reverse_arcs(arcs):
    return tuple((slot, tw ^ 1) for slot, tw in reversed(arcs))


def flip_cycle(cyc):
    """Walk a boundary circle the other way round."""
    if type(cyc) is MarkedCircle:
        return MarkedCircle(cyc.slot, cyc.twist ^ 1)
    return ArcCycle(reverse_arcs(cyc.arcs))


def _sorted_cycles(cycles):
    return tuple(sorted(cycles, key=cycle_key))


def canonical_component(comp):
    genus, crosscaps = comp.genus, comp.crosscaps
    if crosscaps > 0:
        genus, crosscaps = 0, 2 * genus + crosscaps
        cycles = []
        for cyc in comp.cycles:
            if type(cyc) is MarkedCircle:
                cycles.append(MarkedCircle(cyc.slot, 0))
            else:
                cycles.append(ArcCycle(min(_min_rotation(cyc.arcs),
                                           _min_rotation(reverse_arcs(cyc.arcs)))))
        return Component(0, crosscaps, _sorted_cycles(cycles))
    as_is = _sorted_cycles(
        cyc if type(cyc) is MarkedCircle else ArcCycle(_min_rotation(cyc.arcs))
        for cyc in comp.cycles)
    flipped = []
    for cyc in comp.cycles:
        f = flip_cycle(cyc)
        flipped.append(f if type(f) is MarkedCircle else ArcCycle(_min_rotation(f.arcs)))
    flipped = _sorted_cycles(flipped)
    if [cycle_key(c) for c in flipped] < [cycle_key(c) for c in as_is]:
        as_is = flipped
    return Component(genus, 0, as_is)


def component_key(comp):
    return (comp.genus, comp.crosscaps, tuple(cycle_key(c) for c in comp.cycles))


class Cobordism:
    """An immutable, canonical morphism ``source -> target``.

    Build values through :meth:`build` (validates and canonicalizes) or the
    generator library; the plain constructor trusts its input.
    """

    __slots__ = ("source", "target", "components", "_hash")

    def __init__(self, source, target, components):
        self.source = source
        self.target = target
        self.components = components
        self._hash = None

    @classmethod
    def build(cls, source, target, components):
        source = ObjectSig(*source)
        target = ObjectSig(*target)
        comps = [_coerce_component(c) for c in components]
        validate(source, target, comps)
        return canonicalize(cls(source, target, tuple(comps)))

    def __eq__(self, other):
        if not isinstance(other, Cobordism):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.components == other.components)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.source, self.target, self.components))
        return self._hash

    def __repr__(self):
        return f"Cobordism({self.source}->{self.target}: {describe_components(self.components)})"

    __str__ = __repr__

    @property
    def connected(self):
        return len(self.components) == 1

    @property
    def orientable(self):
        return all(c.crosscaps == 0 for c in self.components)


def _coerce_component(comp):
    if isinstance(comp, Component):
        cycles = comp.cycles
        genus, crosscaps = comp.genus, comp.crosscaps
    else:
        genus, crosscaps, cycles = comp
    out = []
    for cyc in cycles:
        if isinstance(cyc, MarkedCircle):
            out.append(MarkedCircle(Slot(*cyc.slot), int(cyc.twist)))
        elif isinstance(cyc, ArcCycle):
            out.append(ArcCycle(tuple((Slot(*s), int(t)) for s, t in cyc.arcs)))
        else:
            raise ValidationError(f"not a boundary cycle: {cyc!r}")
    return Component(int(genus), int(crosscaps), tuple(out))


def validate(source, target, components):
    seen = set()
    for comp in components:
        if comp.genus < 0 or comp.crosscaps < 0:
            raise ValidationError(f"negative genus/crosscaps in {comp}")
        for cyc in comp.cycles:
            if type(cyc) is MarkedCircle:
                pieces = [(cyc.slot, cyc.twist)]
                if cyc.slot.kind != CIRCLE:
                    raise ValidationError(f"marked circle on interval slot {cyc.slot}")
            else:
                pieces = cyc.arcs
                for slot, _ in pieces:
                    if slot.kind != INTERVAL:
                        raise ValidationError(f"arc on circle slot {slot}")
            for slot, twist in pieces:
                if twist not in (0, 1):
                    raise ValidationError(f"twist must be 0 or 1, got {twist}")
                obj = source if slot.side == SOURCE else target
                bound = obj.circles if slot.kind == CIRCLE else obj.intervals
                if slot.side not in (SOURCE, TARGET) or not 0 <= slot.index < bound:
                    raise ValidationError(f"slot {slot} out of range for {obj}")
                if slot in seen:
                    raise ValidationError(f"slot {slot} appears twice")
                seen.add(slot)
    expected = (source.circles + source.intervals + target.circles + target.intervals)
    if len(seen) != expected:
        missing = [str(s) for s in all_slots(source, target) if s not in seen]
        raise ValidationError("missing slots: " + ", ".join(missing))


def all_slots(source, target):
    for side, obj in ((SOURCE, source), (TARGET, target)):
        for i in range(obj.circles):
            yield Slot(side, CIRCLE, i)
        for i in range(obj.intervals):
            yield Slot(side, INTERVAL, i)


def canonicalize(c):
    comps = sorted((canonical_component(comp) for comp in c.components), key=component_key)
    return Cobordism(c.source, c.target, tuple(comps))


def canonical_key(c):
    """Hashable key; equal keys iff homeomorphic rel boundary under the library's moves."""
    validate(c.source, c.target, c.components)
    c = canonicalize(c)
    return (c.source, c.target, tuple(component_key(comp) for comp in c.components))


def euler_char(c):
    return sum(comp.euler_char for comp in c.components)


def theta(c):
    return c.target.circles + c.target.intervals - c.source.circles - euler_char(c)


def omega(c):
    return sum(comp.windows for comp in c.components)


def identity(obj):
    obj = ObjectSig(*obj)
    comps = []
    for i in range(obj.circles):
        comps.append(Component(0, 0, (MarkedCircle(Slot(SOURCE, CIRCLE, i), 0),
                                      MarkedCircle(Slot(TARGET, CIRCLE, i), 0))))
    for i in range(obj.intervals):
        comps.append(Component(0, 0, (ArcCycle(((Slot(SOURCE, INTERVAL, i), 0),
                                                (Slot(TARGET, INTERVAL, i), 0))),)))
    return canonicalize(Cobordism(obj, obj, tuple(comps)))


def describe_cycle(cyc):
    if type(cyc) is MarkedCircle:
        return f"{cyc.slot}^{cyc.twist}"
    return "[" + " ".join(f"{s}^{t}" for s, t in cyc.arcs) + "]"


def describe_components(components):
    parts = []
    for comp in components:
        head = f"g={comp.genus}" if comp.crosscaps == 0 else f"k={comp.crosscaps}"
        parts.append("{" + head + (" " if comp.cycles else "")
                     + " ".join(describe_cycle(c) for c in comp.cycles) + "}")
    return " ".join(parts) if parts else "{}"


# -- JSON -------------------------------------------------------------------

def _slot_doc(slot):
    return {"side": _SIDE_NAMES[slot.side], "kind": _KIND_NAMES[slot.kind], "index": slot.index}


def to_document(c):
    comps = []
    for comp in c.components:
        cycles = []
        for cyc in comp.cycles:
            if type(cyc) is MarkedCircle:
                cycles.append({"type": "circle", "slot": _slot_doc(cyc.slot), "twist": cyc.twist})
            else:
                cycles.append({"type": "arcs",
                               "arcs": [{"slot": _slot_doc(s), "twist": t} for s, t in cyc.arcs]})
        comps.append({"genus": comp.genus, "crosscaps": comp.crosscaps, "cycles": cycles})
    return {
        "source": {"circles": c.source.circles, "intervals": c.source.intervals},
        "target": {"circles": c.target.circles, "intervals": c.target.intervals},
        "components": comps,
    }


def to_json(c):
    return json.dumps(to_document(c), ensure_ascii=False, indent=2) + "\n"


def _slot_from_doc(d):
    try:
        return Slot(_SIDE_NAMES.index(d["side"]), _KIND_NAMES.index(d["kind"]), int(d["index"]))
    except (KeyError, ValueError, TypeError) as exc:
        raise ValidationError(f"bad slot document {d!r}") from exc


def from_document(doc):
    try:
        source = ObjectSig(int(doc["source"]["circles"]), int(doc["source"]["intervals"]))
        target = ObjectSig(int(doc["target"]["circles"]), int(doc["target"]["intervals"]))
        comps = []
        for cd in doc["components"]:
            cycles = []
            for cy in cd["cycles"]:
                if cy["type"] == "circle":
                    cycles.append(MarkedCircle(_slot_from_doc(cy["slot"]), int(cy["twist"])))
                elif cy["type"] == "arcs":
                    cycles.append(ArcCycle(tuple((_slot_from_doc(a["slot"]), int(a["twist"]))
                                                 for a in cy["arcs"])))
                else:
                    raise ValidationError(f"unknown cycle type {cy['type']!r}")
            comps.append(Component(int(cd["genus"]), int(cd["crosscaps"]), tuple(cycles)))
    except (KeyError, TypeError) as exc:
        raise ValidationError(f"malformed cobordism document: {exc}") from exc
    return Cobordism.build(source, target, comps)


def from_json(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return from_document(json.loads(text))
