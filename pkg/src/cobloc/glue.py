"""Composition and disjoint union of cobordisms.

``compose(f, g)`` is *g after f*: the target of ``f`` is glued to the source
of ``g``.  Components of ``f`` and ``g`` that meet no middle slot are copied
through unchanged; the others are merged by a parity union-find (one Z/2
orientation variable per piece) and their boundary is re-traced through the
arc endpoints.
"""
from typing import NamedTuple

from . import kernels
from .errors import InternalInvariantError, SignatureMismatch
from .surface import (
    CIRCLE, SOURCE, TARGET, ArcCycle, Cobordism, Component, MarkedCircle,
    Slot, WINDOW, canonical_component, component_key, reverse_arcs,
)


class GlueTrace(NamedTuple):
    pieces: tuple        # (origin, component index) per touched piece, origin in "fg"
    merges: tuple        # root piece per touched piece
    parity_constraints: tuple  # (piece_a, piece_b, bit) per middle slot
    traced_cycles: tuple  # boundary cycles of the merged pieces


def _middle_slots(comp, side):
    for cyc in comp.cycles:
        if type(cyc) is MarkedCircle:
            if cyc.slot.side == side:
                return True
        else:
            for slot, _ in cyc.arcs:
                if slot.side == side:
                    return True
    return False


def compose(f, g):
    """Glue ``f: A -> B`` and ``g: B -> C`` into ``g after f: A -> C``."""
    return _compose(f, g, False)[0]


def compose_traced(f, g):
    """Like :func:`compose` but also return the :class:`GlueTrace`."""
    return _compose(f, g, True)


def _compose(f, g, want_trace):
    if f.target != g.source:
        raise SignatureMismatch(f.target, g.source,
                                f"cannot compose: target {f.target} != source {g.source}")
    kept = []
    pieces = []  # (origin, comp)
    for comp in f.components:
        if _middle_slots(comp, TARGET):
            pieces.append((0, comp))
        else:
            kept.append(comp)
    for comp in g.components:
        if _middle_slots(comp, SOURCE):
            pieces.append((1, comp))
        else:
            kept.append(comp)

    circ = {}      # middle circle index -> [(piece, twist) from f, from g]
    ivl = {}       # middle interval index -> [occurrence from f, from g]
    occ_slot = []
    occ_twist = []
    occ_piece = []
    free = []
    fwd = []
    carried = []   # (piece, cycle) for marked circles and windows that pass through
    for pi, (origin, comp) in enumerate(pieces):
        mid_side = TARGET if origin == 0 else SOURCE
        for cyc in comp.cycles:
            if type(cyc) is MarkedCircle:
                if cyc.slot.side == mid_side:
                    circ.setdefault(cyc.slot.index, [None, None])[origin] = (pi, cyc.twist)
                else:
                    carried.append((pi, cyc))
                continue
            arcs = cyc.arcs
            if not arcs:
                carried.append((pi, cyc))
                continue
            base = len(occ_slot)
            r = len(arcs)
            free.extend((0, 0) * r)
            fwd.extend((0, 0) * r)
            for i, (slot, tw) in enumerate(arcs):
                o = base + i
                occ_slot.append(slot)
                occ_twist.append(tw)
                occ_piece.append(pi)
                if slot.side == mid_side:
                    ivl.setdefault(slot.index, [None, None])[origin] = o
                s = tw ^ slot.side
                nxt_slot, nxt_tw = arcs[(i + 1) % r]
                nxt = base + (i + 1) % r
                exit_node = 2 * o + (1 - s)
                entry_node = 2 * nxt + (nxt_tw ^ nxt_slot.side)
                free[exit_node] = entry_node
                free[entry_node] = exit_node
                fwd[exit_node] = 1

    edges = []
    constraints = []
    for j, (a, b) in sorted(circ.items()):
        edges += (a[0], b[0], a[1] ^ b[1])
        constraints.append((a[0], b[0], a[1] ^ b[1]))
    n_nodes = 2 * len(occ_slot)
    glued = [-1] * n_nodes
    glue_count = [0] * len(pieces)
    for j, (of, og) in sorted(ivl.items()):
        for p in (0, 1):
            glued[2 * of + p] = 2 * og + p
            glued[2 * og + p] = 2 * of + p
        bit = occ_twist[of] ^ occ_twist[og]
        edges += (occ_piece[of], occ_piece[og], bit)
        constraints.append((occ_piece[of], occ_piece[og], bit))
        glue_count[occ_piece[of]] += 1

    root, parity, bad = kernels.parity_union(len(pieces), edges)
    node_piece = [occ_piece[v >> 1] for v in range(n_nodes)]
    traced = kernels.trace_cycles(free, fwd, glued, node_piece, parity)

    groups = {}
    for pi, (_, comp) in enumerate(pieces):
        grp = groups.setdefault(root[pi], {"chi": 0, "nonor": False, "cycles": []})
        grp["chi"] += comp.euler_char - glue_count[pi]
        grp["nonor"] = grp["nonor"] or comp.crosscaps > 0 or bad[pi] == 1
    for pi, cyc in carried:
        grp = groups[root[pi]]
        if type(cyc) is MarkedCircle and not grp["nonor"]:
            cyc = MarkedCircle(cyc.slot, cyc.twist ^ parity[pi])
        grp["cycles"].append(cyc)
    traced_out = []
    for nodes, agree, consistent, anchor in traced:
        pi = node_piece[anchor]
        grp = groups[root[pi]]
        if not nodes:
            grp["cycles"].append(WINDOW)
            traced_out.append(WINDOW)
            continue
        arcs = []
        for v in nodes:
            slot = occ_slot[v >> 1]
            arcs.append((slot, (v & 1) ^ slot.side))
        arcs = tuple(arcs)
        if not grp["nonor"]:
            if not consistent:
                raise InternalInvariantError("boundary walk disagrees with orientation")
            if not agree:
                arcs = reverse_arcs(arcs)
        cyc = ArcCycle(arcs)
        grp["cycles"].append(cyc)
        traced_out.append(cyc)

    new = []
    for grp in groups.values():
        b = len(grp["cycles"])
        e = 2 - grp["chi"] - b
        if grp["nonor"]:
            if e < 1:
                raise InternalInvariantError(f"non-orientable piece with crosscap count {e}")
            comp = Component(0, e, tuple(grp["cycles"]))
        else:
            if e < 0 or e % 2:
                raise InternalInvariantError(f"orientable piece with 2g = {e}")
            comp = Component(e // 2, 0, tuple(grp["cycles"]))
        new.append(canonical_component(comp))

    comps = tuple(sorted(kept + new, key=component_key))
    result = Cobordism(f.source, g.target, comps)
    if not want_trace:
        return result, None
    trace = GlueTrace(
        pieces=tuple(("fg"[o], _index_of(f if o == 0 else g, c)) for o, c in pieces),
        merges=tuple(root),
        parity_constraints=tuple(constraints),
        traced_cycles=tuple(traced_out),
    )
    return result, trace


def _index_of(c, comp):
    for i, other in enumerate(c.components):
        if other is comp:
            return i
    return -1


def _shift_slot(slot, src, tgt):
    obj = src if slot.side == SOURCE else tgt
    return Slot(slot.side, slot.kind, slot.index + (obj.circles if slot.kind == CIRCLE else obj.intervals))


def _shift_component(comp, src, tgt):
    cycles = []
    for cyc in comp.cycles:
        if type(cyc) is MarkedCircle:
            cycles.append(MarkedCircle(_shift_slot(cyc.slot, src, tgt), cyc.twist))
        else:
            cycles.append(ArcCycle(tuple((_shift_slot(s, src, tgt), t) for s, t in cyc.arcs)))
    return Component(comp.genus, comp.crosscaps, tuple(cycles))


def tensor(f, g):
    """Disjoint union ``f (x) g``; slots of ``g`` are numbered after those of ``f``."""
    if not g.components and g.source == (0, 0) and g.target == (0, 0):
        return f
    # shifting every index on one side by a constant preserves canonical order
    shifted = [_shift_component(c, f.source, f.target) for c in g.components]
    comps = tuple(sorted(list(f.components) + shifted, key=component_key))
    return Cobordism(f.source + g.source, f.target + g.target, comps)


def compose_all(*cobs):
    """Compose left to right: ``compose_all(a, b, c)`` is ``c after b after a``."""
    out = cobs[0]
    for c in cobs[1:]:
        out = compose(out, c)
    return out


def tensor_all(*cobs):
    out = cobs[0]
    for c in cobs[1:]:
        out = tensor(out, c)
    return out
