"""Verification suites: each returns a deterministic list of :class:`Case` results."""
import random
from itertools import product
from typing import NamedTuple

from . import catlib, corpus, frobenius, localise, monoid, oracle, tft
from .catlib import (circle_split, closed_union, connected, free_disc, free_discs, generator,
                     interval_endo, interval_whistle, n1_cobordism, sigma_kw,
                     cylinder_windows)
from .expr import Gen, eval_expr, pretty
from .glue import compose, compose_all, tensor
from .localise import FWD, INV, LocWord, loc_class, verify_relation, word_reduce
from .scalars import ONE, Scalar, mu
from .surface import canonical_key, euler_char, identity, omega, theta


class Case(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _case(name, lhs, rhs, extra=""):
    ok = lhs == rhs
    detail = f"lhs={lhs} rhs={rhs}" + (f" ({extra})" if extra else "")
    return Case(name, ok, detail)


def _check(name, ok, detail=""):
    return Case(name, bool(ok), detail)


def _theta_sum(word):
    return sum(theta(c) if d == FWD else -theta(c) for c, d in word.letters)


def _relation(name, lhs, rhs, cat):
    """Class equality plus the independent theta/omega bookkeeping of both sides."""
    a, b = word_reduce(lhs, cat), word_reduce(rhs, cat)
    ta, tb = _theta_sum(lhs), _theta_sum(rhs)
    ok = verify_relation(lhs, rhs, cat) and ta == tb
    return Case(name, ok, f"{a} vs {b}; theta {ta} vs {tb}")


def _w(*letters, start=None):
    return LocWord.of(*letters, start=start)


def _endo_word(c, sign):
    """A connected cobordism as a one-letter word, inverted for negative signs."""
    return _w((c, FWD if sign > 0 else INV))


def _crosscap_word(x):
    """The word for ``((0, x); 0, ...)``: crosscaps on a connected endomorphism of the circle."""
    if x == 0:
        return _w(start=(1, 0))
    return _endo_word(n1_cobordism(0, abs(x), 0), 1 if x > 0 else -1)


# -- monoid identifications and reflections ----------------------------------------------------


def suite_monoid_identification():
    out = []
    for g in range(11):
        for k in range(11):
            a = canonical_key(n1_cobordism(g, k, 0))
            b = canonical_key(n1_cobordism(0, 2 * g + k, 1))
            out.append(_check(f"(g,k,0)~(0,2g+k,1) g={g} k={k}", (a == b) == (k != 0),
                              f"equal={a == b}"))
    for k in range(11):
        same = n1_cobordism(0, k, 0) == n1_cobordism(0, k, 1)
        out.append(_check(f"type collapse k={k}", same == (k >= 1), f"equal={same}"))
    E = monoid.N1Element.make
    for g1, k1, e1, g2, k2, e2 in product(range(3), range(3), range(2), range(3), range(3), range(2)):
        x, y = E(g1, k1, e1), E(g2, k2, e2)
        out.append(_case(f"composition is monoid addition {tuple(x)}+{tuple(y)}",
                         compose(x.cobordism(), y.cobordism()), (x + y).cobordism()))
    # crosscap slide and reflections
    mob0 = connected(0, 1, 0, (1, 0), (1, 0), twists={catlib.tc(0): 0})
    mob1 = connected(0, 1, 0, (1, 0), (1, 0), twists={catlib.tc(0): 1})
    out.append(_case("crosscap slide: Moebius type 0 = type 1", mob0, mob1))
    tw = generator("twist_circle")
    out.append(_case("twist_circle o twist_circle = id", compose(tw, tw), identity((1, 0))))
    ti = generator("twist_interval")
    out.append(_case("twist_interval o twist_interval = id", compose(ti, ti), identity((0, 1))))
    out.append(_check("twist_circle != id", tw != identity((1, 0))))
    out.append(_check("twist_interval != id", ti != identity((0, 1))))
    t0 = n1_cobordism(1, 0, 0)
    t1 = n1_cobordism(1, 0, 1)
    out.append(_check("torus types 0 and 1 differ", canonical_key(t0) != canonical_key(t1)))
    return out


# -- crosscap adjunction -----------------------------------------------------------------------


def suite_adjunction():
    out = []
    for g, k, n, m in product(range(4), range(4), range(1, 4), range(1, 4)):
        for c in range(1, min(n, m, 3) + 1):
            left, right, caps = catlib.adjunction_sides(g, k, c, n, m)
            comp = left.components[0] if left.connected else None
            ok = (left == right and comp is not None and comp.crosscaps == caps
                  and caps == 2 * g + k + 2 * m - 2 * c + 1)
            sigma = catlib.adjunction_surface(g, k, c, n, m)
            ok = ok and catlib.in_category(sigma, "Nb") and theta(left) == theta(sigma) + 1
            out.append(_check(f"naturality square g={g} k={k} c={c} n={n} m={m}", ok,
                              f"left={left} right={right} crosscaps={caps}"))
    for n in range(6):
        t = catlib.tau(n)
        out.append(_case(f"theta(tau({n})) = 1", theta(t), 1))
        out.append(_check(f"tau({n}) in Nb", catlib.in_category(t, "Nb")))
    out.append(_case("tau(0) = mobius", catlib.tau(0), generator("mobius")))
    out.append(_case("tau(1) = rp2_cyl", catlib.tau(1), generator("rp2_cyl")))
    for j in range(6):
        i_j = connected(0, j, 0, (1, 0), (1, 0)) if j else identity((1, 0))
        out.append(_case(f"theta o i = id at {j}", theta(i_j), j))
    rng = random.Random(26)
    for idx in range(200):
        e = corpus.random_expression(rng, rng.randint(1, 10), catlib.CLOSED_GENERATORS, closed=True)
        c = eval_expr(e)
        if catlib.in_category(c, "Nb"):
            out.append(_check(f"theta >= 0 on Nb sample {idx}", theta(c) >= 0, pretty(e)))
    return out


# -- group completions -------------------------------------------------------------------------


def suite_n1_completion():
    out = []
    gc = monoid.grothendieck(monoid.n1_presentation())
    out.append(_case("G(N1) invariant factors", gc.invariant_factors, (0,)))
    E = monoid.N1Element.make
    wit = E(0, 1, 0)
    for a, c, eta in product(range(1, 4), range(4), range(2)):
        x, y = E(a, 0, 0), E(c, 0, eta)
        found = monoid.gc_witness(x, y, E(a, 0, 1), y)
        out.append(_case(f"type-change least witness a={a} c={c} eta={eta}", found, wit))
        found = monoid.gc_witness(x, E(c, 0, 0), E(0, 2 * a, 0), E(c, 0, 0))
        out.append(_case(f"handle-to-crosscaps least witness a={a} c={c}", found, wit))
    for a, b, c, d, eta in product(range(3), range(3), range(3), range(3), range(2)):
        ok_i = monoid.is_witness(E(a, b, 0), E(c, d, eta), E(a, b, 1), E(c, d, eta), wit)
        ok_ii = monoid.is_witness(E(a, b, 0), E(c, d, 0), E(0, 2 * a + b, 0), E(c, d, 0), wit)
        out.append(_check(f"(0,1,0) witnesses type change and handle swap at {(a, b, c, d, eta)}", ok_i and ok_ii))
    for b, d, b2, d2 in product(range(3), repeat=4):
        x, y, x2, y2 = E(0, b, 0), E(0, d, 0), E(0, b2, 0), E(0, d2, 0)
        w = monoid.gc_witness(x, y, x2, y2, bound=50 if b + d2 != d + b2 else 5)
        expect_none = b + d2 != d + b2
        out.append(_check(f"cancellation ({b},{d}) vs ({b2},{d2})", (w is None) == expect_none, f"witness={w}"))
    elems = [E(g, k, e) for g in range(7) for k in range(7) for e in range(2)]
    elems = sorted(set(elems))
    hom = all(monoid.gc_class_n1(x + y) == monoid.gc_class_n1(x) + monoid.gc_class_n1(y)
              for x in elems for y in elems)
    out.append(_check("gc_class_n1 is additive (g,k <= 6)", hom))
    for x in elems:
        c = x.cobordism()
        coords = gc.coordinates((x.g, x.k, x.eps))
        out.append(_check(f"class of {tuple(x)}: theta, completion and localisation agree",
                          monoid.gc_class_n1(x) == theta(c) == coords[0] == loc_class(c, "N1").payload,
                          f"gc={monoid.gc_class_n1(x)} theta={theta(c)} coords={coords}"))
    out.append(_relation("C_r ~ identity in N1", _w(generator("twist_circle")), _w(start=(1, 0)), "N1"))
    out.append(_relation("torus-2-discs ~ Klein-2-discs in N1",
                         _w(n1_cobordism(1, 0, 0)), _w(n1_cobordism(0, 2, 0)), "N1"))
    return out


def suite_n1_signed():
    out = []
    plus = monoid.grothendieck(monoid.n1plus_presentation())
    minus = monoid.grothendieck(monoid.n1minus_presentation())
    out.append(_case("G(N1+) invariant factors", plus.invariant_factors, (2, 0)))
    out.append(_case("G(N1-) invariant factors", minus.invariant_factors, (0,)))
    for g, eps in product(range(5), range(2)):
        c = n1_cobordism(g, 0, eps)
        coords = plus.coordinates((g, eps))
        pay = loc_class(c, "N1plus").payload
        out.append(_check(f"N1+ class of (g={g}, eps={eps})", (coords[1], coords[0]) == pay,
                          f"completion={coords} localisation={pay}"))
    for k, eps in product(range(5), range(2)):
        c = n1_cobordism(0, k, eps)
        coords = minus.coordinates((k, eps))
        pay = loc_class(c, "N1minus").payload
        out.append(_check(f"N1- class of (k={k}, eps={eps})", coords == (pay,),
                          f"completion={coords} localisation={pay}"))
    out.append(_case("N1- generated by rp2_cyl", loc_class(generator("rp2_cyl"), "N1minus").payload, 1))
    out.append(_case("N1+ torus generator", loc_class(n1_cobordism(1, 0, 0), "N1plus").payload, (1, 0)))
    out.append(_case("N1+ C_r generator", loc_class(generator("twist_circle"), "N1plus").payload, (0, 1)))
    return out


def suite_n0_completion():
    out = []
    for r in range(1, 7):
        gc = monoid.grothendieck(monoid.n0_presentation(r))
        out.append(_case(f"G(N0) truncated at {r} types", gc.invariant_factors, (0,) * r))
    for r in range(6):
        out.append(_case(f"free monoid rank {r}", monoid.grothendieck(monoid.free_monoid(r)).invariant_factors,
                         (0,) * r))
    out.append(_case("sphere", dict(monoid.n0_class(catlib.sphere())), {(0, 0): 1}))
    out.append(_case("torus + torus", dict(monoid.n0_class(closed_union({(1, 0): 2}))), {(1, 0): 2}))
    out.append(_case("Klein bottle", dict(monoid.n0_class(catlib.closed_surface(0, 2))), {(0, 2): 1}))
    out.append(_case("torus # P2 = 3 crosscaps", dict(monoid.n0_class(catlib.closed_surface(1, 1))), {(0, 3): 1}))
    rng = random.Random(35)
    types = monoid.n0_types(6)
    for i in range(100):
        a = {t: rng.randint(0, 2) for t in types}
        b = {t: rng.randint(0, 2) for t in types}
        ca, cb = closed_union(a), closed_union(b)
        lhs = loc_class(compose(ca, cb), "N0").payload
        rhs = localise.payload_add("N0", loc_class(ca, "N0").payload, loc_class(cb, "N0").payload)
        out.append(_case(f"N0 class additive {i}", lhs, rhs))
    return out


# -- closed localisations ----------------------------------------------------------------------


def _closed_types(limit=3):
    return [(i, 0) for i in range(limit + 1)] + [(0, j) for j in range(1, limit + 1)]


def _count_vectors(types, total):
    def rec(i, left):
        if i == len(types):
            yield {}
            return
        for n in range(left + 1):
            for rest in rec(i + 1, left - n):
                d = dict(rest)
                if n:
                    d[types[i]] = n
                yield d
    yield from rec(0, total)


def _closed_shift(counts):
    """``2 sum (i-1) n_i0 + sum (j-2) n_0j``."""
    return sum(2 * (g - 1) * n if k == 0 else (k - 2) * n for (g, k), n in counts.items())


def suite_closed_localisation(full=True):
    out = []
    cyl = identity((1, 0))
    sphere = catlib.sphere()
    klein2 = n1_cobordism(0, 2, 0)
    torus2 = n1_cobordism(1, 0, 0)
    out.append(_relation("inverse Klein-2-discs = cylinder + sphere",
                         _w((klein2, INV)), _w(tensor(cyl, sphere)), "N"))
    out.append(_relation("inverse torus-2-discs = cylinder + sphere",
                         _w((torus2, INV)), _w(tensor(cyl, sphere)), "N"))
    out.append(_relation("twice punctured torus + sphere = identity",
                         _w(tensor(torus2, sphere)), _w(start=(1, 0)), "N"))
    out.append(_relation("C_r = identity", _w(generator("twist_circle")), _w(start=(1, 0)), "N"))
    for k in range(1, 7):
        out.append(_relation(f"((0,-{k});0) = ((0,{k});{k})", _crosscap_word(-k),
                             _w(tensor(n1_cobordism(0, k, 0), closed_union({(0, 0): k}))), "N"))
        for n00 in range(0, 5):
            lhs = _w(tensor(n1_cobordism(0, k, 0), closed_union({(0, 0): n00})))
            out.append(_relation(f"((0,{k});{n00}) = ((0,{k - 2 * n00});0)", lhs,
                                 _crosscap_word(k - 2 * n00), "N"))
    # conjugation by the disc 0 -> 1: images in N0
    disc_in, disc_out = generator("disc_in"), generator("disc_out")
    for (g, k), counts in product([(0, 0), (1, 0), (0, 1), (2, 1), (0, 3)],
                                  [{}, {(0, 0): 1}, {(1, 0): 1, (0, 2): 1}]):
        beta = tensor(connected(g, k, 0, (1, 0), (1, 0)), closed_union(counts))
        image = monoid.n0_class(compose_all(disc_in, beta, disc_out))
        expect = dict(counts)
        main = (0, 2 * g + k) if k else (g, 0)
        expect[main] = expect.get(main, 0) + 1
        out.append(_case(f"c_alpha image of (({g},{k});{counts})", dict(image), expect))
        conj = localise.conjugate(disc_in, _w(beta))
        out.append(_case(f"conjugation preserves class (({g},{k});{counts})",
                         word_reduce(conj, "N").payload, word_reduce(_w(beta), "N").payload))
    out.append(_relation("disc_out + inverse sphere is a left inverse of the disc",
                         _w(disc_in, disc_out, (sphere, INV)), _w(start=(0, 0)), "N"))
    out.append(_relation("disc_out + inverse sphere is a right inverse of the disc",
                         _w(disc_out, (sphere, INV), disc_in), _w(start=(1, 0)), "N"))
    # connected and split endomorphisms of the circle next to closed components
    types = _closed_types(3)
    totals = 4 if full else 2
    for counts in _count_vectors(types, totals):
        shift = _closed_shift(counts)
        closed = closed_union(counts)
        for g, k in product(range(4), range(4)):
            lhs_c = tensor(connected(g, k, 0, (1, 0), (1, 0)), closed)
            target = _crosscap_word(2 * g + k + shift)
            for sign in (1, -1):
                lhs = _endo_word(lhs_c, sign)
                rhs = target if sign > 0 else target.inverse()
                out.append(_relation(f"connected plus closed sign={sign} g={g} k={k} n={counts}", lhs, rhs, "N"))
    for counts in _count_vectors(types, 1 if full else 0):
        shift = _closed_shift(counts)
        closed = closed_union(counts)
        for a, p, b, q in product(range(4), repeat=4):
            lhs_c = tensor(circle_split((a, p), (b, q)), closed)
            target = _crosscap_word(2 * (a + b - 1) + p + q + shift)
            for sign in (1, -1):
                lhs = _endo_word(lhs_c, sign)
                rhs = target if sign > 0 else target.inverse()
                out.append(_relation(f"split plus closed sign={sign} a={a} p={p} b={b} q={q} n={counts}", lhs, rhs, "N"))
    for counts in _count_vectors(types, 4 if full else 2):
        if sum(counts.values()) < 2:
            continue
        shift = _closed_shift(counts)
        closed = closed_union(counts)
        for a, p, b, q in product(range(2), repeat=4):
            lhs_c = tensor(circle_split((a, p), (b, q)), closed)
            target = _crosscap_word(2 * (a + b - 1) + p + q + shift)
            out.append(_relation(f"split plus closed a={a} p={p} b={b} q={q} n={counts}", _endo_word(lhs_c, 1), target, "N"))
    for k in range(1, 8):
        out.append(_case(f"Theta((0,{k})) = {k}", loc_class(n1_cobordism(0, k, 0), "N").payload, k))
        out.append(_case(f"Theta((0,-{k})) = -{k}", word_reduce(_crosscap_word(-k), "N").payload, -k))
    return out


def suite_oriented_closed():
    out = []
    torus2 = n1_cobordism(1, 0, 0)
    out.append(_case("torus-2-discs in S and N", loc_class(torus2, "S_and_N").payload, 1))
    out.append(_case("torus-2-discs in N", loc_class(torus2, "N").payload, 2))
    out.append(_case("Klein-2-discs in N", loc_class(n1_cobordism(0, 2, 0), "N").payload, 2))
    out.append(_check("Klein-2-discs not in S", not catlib.in_category(n1_cobordism(0, 2, 0), "S_and_N")))
    rng = random.Random(37)
    oriented = [n for n in catlib.CLOSED_GENERATORS if n in catlib.ORIENTED_GENERATORS]
    for i in range(300):
        e = corpus.random_expression(rng, rng.randint(1, 12), oriented, closed=True)
        c = eval_expr(e)
        t = theta(c)
        ok = t % 2 == 0 and catlib.in_category(c, "S_and_N") and loc_class(c, "N").payload == 2 * loc_class(c, "S_and_N").payload
        out.append(_check(f"theta even and doubled on oriented sample {i}", ok, f"{pretty(e)} theta={t}"))
    for g in range(5):
        out.append(_case(f"genus {g} endo in S and N", loc_class(n1_cobordism(g, 0, 0), "S_and_N").payload, g))
    return out


# -- open localisations ------------------------------------------------------------------------


def suite_open_localisation():
    out = []
    idI = _w(start=(0, 1))
    fd = free_disc()
    annulus = interval_endo(0, 0, 1)
    mob = interval_endo(0, 1, 0)
    out.append(_relation("annulus + free disc = identity", _w(tensor(annulus, fd)), idI, "O"))
    out.append(_relation("((0,0,-1);0) = ((0,0,0);1)", _w((annulus, INV)), _w(tensor(identity((0, 1)), fd)), "O"))
    out.append(_relation("Moebius + free disc = identity", _w(tensor(mob, fd)), idI, "O"))
    out.append(_relation("((0,-1,0);0) = ((0,0,0);1)", _w((mob, INV)), _w(tensor(identity((0, 1)), fd)), "O"))
    out.append(_relation("C_r^I = identity", _w(generator("twist_interval")), idI, "O"))
    out.append(_case("Theta(Moebius endo of I) = 1", theta(mob), 1))
    out.append(_case("Theta(whistle endo of I) = 1", theta(interval_whistle(0, 0, 0)), 1))
    out.append(_case("Theta(annulus endo of I) = 1", theta(annulus), 1))
    # conjugation by two discs 1 -> 2 is independent of the chosen inverse
    ocyl, odisc_in, odisc_out = generator("ocyl"), generator("odisc_in"), generator("odisc_out")
    alpha = tensor(ocyl, odisc_in)
    beta1 = generator("opants_in")
    beta1_twisted = compose(tensor(generator("twist_interval"), ocyl), beta1)
    beta2 = tensor(ocyl, odisc_out)
    gammas = [identity((0, 2)), generator("sym_ii"), compose(beta1, generator("opants_out")),
              tensor(generator("twist_interval"), ocyl), tensor(annulus, mob)]
    for i, gamma in enumerate(gammas):
        for name, b1 in (("pants", beta1), ("twisted pants", beta1_twisted)):
            lhs = _w(alpha, gamma, b1)
            rhs = _w(alpha, gamma, beta2, (tensor(identity((0, 1)), fd), INV))
            out.append(_relation(f"conjugation inverse independence gamma={i} beta1={name}", lhs, rhs, "O"))
    gamma = tensor(ocyl, ocyl)
    out.append(_case("beta1 o gamma o alpha is the identity", compose_all(alpha, gamma, beta1), identity((0, 1))))
    # crosscaps absorb handles
    for g, k, w in product(range(3), range(1, 4), range(3)):
        out.append(_case(f"((g,k,w)) = ((0,2g+k,w)) g={g} k={k} w={w}",
                         interval_endo(g, k, w), interval_endo(0, 2 * g + k, w)))
    # product decomposition of barO
    for g, k, w in product(range(2), range(2), range(3)):
        x = interval_endo(g, k, w)
        c = tensor(x, closed_union({(0, 0): 1, (1, 0): w}))
        pay = loc_class(c, "barO").payload
        out.append(_case(f"barO splits as O x N0 at {(g, k, w)}", pay,
                         (loc_class(x, "O").payload, localise._vector({(0, 0): 1, (1, 0): w}))))
    return out


def suite_oriented_open():
    out = []
    idI = _w(start=(0, 1))
    fd = free_disc()
    cat = "S_and_O"
    out.append(_relation("((0,1);1) = identity", _w(tensor(interval_endo(0, 0, 1), fd)), idI, cat))
    for w in range(6):
        out.append(_relation(f"([0,0];0) = ([0,{w}];{w})", _w(interval_whistle(0, 0, 0)),
                             _w(tensor(interval_whistle(0, 0, w), free_discs(w))), cat))
    out.append(_relation("([0,2];2) = ([0,1];1)", _w(tensor(interval_whistle(0, 0, 2), free_discs(2))),
                         _w(tensor(interval_whistle(0, 0, 1), free_discs(1))), cat))
    lhs = tensor(interval_whistle(1, 0, 3), free_discs(3))
    out.append(_relation("([1,3];3) = ([0,3];1)", _w(lhs), _w(tensor(interval_whistle(0, 0, 3), free_discs(1))), cat))
    composite = compose(tensor(interval_endo(1, 0, 0), free_discs(2)),
                        tensor(interval_whistle(0, 0, 3), free_discs(1)))
    out.append(_case("([1,3];3) = ([0,3];1) o ((1,0);2) as cobordisms", composite, lhs))
    out.append(_relation("((1,0);2) = identity", _w(tensor(interval_endo(1, 0, 0), free_discs(2))), idI, cat))
    out.append(_relation("genus one = two windows", _w(interval_endo(1, 0, 0)), _w(interval_endo(0, 0, 2)), cat))
    out.append(_case("Theta(genus one) = 2", theta(interval_endo(1, 0, 0)), 2))
    out.append(_case("Theta(two windows) = 2", theta(interval_endo(0, 0, 2)), 2))
    out.append(_check("((1,2);0) is not the identity (theta 4)",
                      not verify_relation(_w(interval_endo(1, 0, 2)), idI, cat),
                      f"theta={theta(interval_endo(1, 0, 2))}"))
    for g, w in product(range(4), range(4)):
        out.append(_case(f"class of ((g,w)) g={g} w={w}", loc_class(interval_endo(g, 0, w), cat).payload, 2 * g + w))
    return out


# -- windows, the full category and S ----------------------------------------------------------


def suite_windows():
    out = []
    for k, w in product(range(6), range(6)):
        out.append(_case(f"Sigma_{{{k},{w}}} -> (k,w)", loc_class(sigma_kw(k, w), "barN").payload, (k, w)))
    rng = random.Random(310)
    names = catlib.CLOSED_GENERATORS
    for i in range(200):
        a = corpus.random_expression(rng, rng.randint(1, 8), names, closed=True)
        f = eval_expr(a)
        f = tensor(f, free_discs(rng.randint(0, 2)))
        _, t = f.source, f.target
        g = eval_expr(corpus.random_from(rng, t, rng.randint(1, 8), names))
        g = tensor(g, free_discs(rng.randint(0, 2)))
        h = compose(f, g)
        ok = (omega(h) == omega(f) + omega(g)
              and loc_class(h, "barN").payload == localise.payload_add("barN", loc_class(f, "barN").payload,
                                                                        loc_class(g, "barN").payload))
        out.append(_check(f"omega and (theta-omega, omega) additive {i}", ok))
    out.append(_check("Sigma_{0,1} and Sigma_{1,0} differ in barN",
                      not verify_relation(_w(sigma_kw(0, 1)), _w(sigma_kw(1, 0)), "barN")))
    out.append(_check("Sigma_{0,1} and Sigma_{1,0} agree in N-theta", theta(sigma_kw(0, 1)) == theta(sigma_kw(1, 0))))
    return out


def suite_full():
    out = []
    woc, wco = generator("whistle_oc"), generator("whistle_co")
    inv_woc = tensor(wco, free_disc())
    out.append(_relation("inverse of whistle_oc is whistle_co + free disc",
                         _w(woc, inv_woc), _w(start=(0, 1)), "K"))
    for k in range(6):
        out.append(_relation(f"Sigma_{k} = C_{k} in K", _w(sigma_kw(k, 0)), _w(cylinder_windows(k)), "K"))
        conj_s = _w(woc, sigma_kw(k, 0), inv_woc)
        conj_c = _w(woc, cylinder_windows(k), inv_woc)
        out.append(_relation(f"Sigma_{k} = C_{k} conjugated to I", conj_s, conj_c, "K"))
        out.append(_case(f"conjugate of Sigma_{k} matches O class", word_reduce(conj_s, "K").payload,
                         loc_class(interval_endo(0, k, 0), "O").payload))
    rng = random.Random(311)
    for i in range(100):
        e = corpus.random_expression(rng, rng.randint(1, 10))
        c = eval_expr(e)
        out.append(_case(f"K class is theta {i}", loc_class(c, "K").payload, theta(c)))
    return out


def suite_oriented():
    out = []
    s1 = n1_cobordism(1, 0, 0)
    c1, c2 = cylinder_windows(1), cylinder_windows(2)
    out.append(_case("Theta(Sigma_1) = 2", theta(s1), 2))
    out.append(_case("Theta(C_2) = 2", theta(c2), 2))
    out.append(_relation("Sigma_1 = C_2 in S", _w(s1), _w(c2), "S"))
    out.append(_relation("Sigma_1 = C_1 C_1 in S", _w(s1), _w(c1, c1), "S"))
    woc, wco = generator("whistle_oc"), generator("whistle_co")
    for name, c in (("Sigma_1", s1), ("C_1", c1), ("C_2", c2)):
        endo_i = compose_all(woc, c, wco)
        out.append(_check(f"{name} moves to an endomorphism of I in S and O", catlib.in_category(endo_i, "S_and_O")))
        out.append(_case(f"{name} class after moving to I", loc_class(endo_i, "S_and_O").payload,
                         theta(c) + theta(woc) + theta(wco)))
    out.append(_case("barN keeps Sigma_1 and C_2 apart", loc_class(s1, "barN").payload != loc_class(c2, "barN").payload, True))
    out.append(_case("C_1 generates: class 1", loc_class(c1, "S").payload, 1))
    return out


# -- field theories ----------------------------------------------------------------------------


def suite_integer_functors():
    out = []
    seqs = [tft.BSequence.linear(5, 3), tft.BSequence.linear(-2, 0),
            tft.BSequence([5, 1, 3, 3, 4, 5, 6, 7, 8]), tft.BSequence({0: 1}, default=lambda k: k * k)]
    for idx, b in enumerate(seqs):
        out.append(_case(f"F(P2) = b0 [{idx}]", tft.functor_Z(b, catlib.projective_plane()), b[0]))
        for k in range(1, 9):
            out.append(_case(f"F(p_{k}) = b_{k} [{idx}]", tft.functor_Z(b, catlib.connecting(k)), b[k]))
        out.append(_case(f"F(id) = 0 [{idx}]", tft.functor_Z(b, identity((3, 0))), 0))
        strict = tft.is_strict_monoidal_b(b, 8)
        out.append(_case(f"strict iff additive on discs [{idx}]", strict, tft.is_additive_on_discs(b, 8)))
    out.append(_case("b_k = 3k is strict", tft.is_strict_monoidal_b(seqs[0], 8), True))
    out.append(_case("b = (5,1,3,...) is not strict", tft.is_strict_monoidal_b(seqs[2], 8), False))
    out.append(_case("b_k = k^2 is not strict", tft.is_strict_monoidal_b(seqs[3], 8), False))
    b = tft.BSequence({0: 7, 1: 2, 2: -1, 3: 4, 4: 0}, default=lambda k: 3 - k)
    for i, (e1, e2) in enumerate(corpus.composable_pairs(41, 500, 8, catlib.CLOSED_GENERATORS, closed=True)):
        f, g = eval_expr(e1), eval_expr(e2)
        out.append(_case(f"F additive on pair {i}", tft.functor_Z(b, compose(f, g)),
                         tft.functor_Z(b, f) + tft.functor_Z(b, g)))
    return out


def suite_invertible_tfts(count=1000):
    out = []
    m = tft.MuSequence.symbolic()
    out.append(_case("F(P2) = mu0", tft.tft_eval(m, catlib.projective_plane()), mu(0)))
    for k in range(1, 7):
        out.append(_case(f"F(p_{k}) = mu_{k}^{k}", tft.tft_eval(m, catlib.connecting(k)), mu(k, k)))
        out.append(_case(f"F(id_{k}) = 1", tft.tft_eval(m, identity((k, 0))), ONE))
    for n in range(8):
        out.append(_case(f"F2({n},0) = 1", tft.f2(m, n, 0), ONE))
        out.append(_case(f"F2(0,{n}) = 1", tft.f2(m, 0, n), ONE))
    out.append(_case("F2(1,1)", tft.f2(m, 1, 1), mu(1, -2) * mu(2, 2)))
    for a, b, c in product(range(4), repeat=3):
        lhs = tft.f2(m, a, b) * tft.f2(m, a + b, c)
        rhs = tft.f2(m, b, c) * tft.f2(m, a, b + c)
        out.append(_case(f"F2 associativity ({a},{b},{c})", lhs, rhs))
    for a, b in product(range(5), repeat=2):
        lhs, rhs = tft.symmetry_square(m, a, b)
        out.append(_case(f"symmetry square ({a},{b})", lhs, rhs))
    exprs = corpus.random_expressions(44, count, 15, catlib.CLOSED_GENERATORS, closed=True)
    for i, e in enumerate(exprs):
        out.append(_case(f"functoriality {i}", tft.tft_fold(m, e), tft.tft_eval(m, eval_expr(e)),
                         pretty(e)))
    samples = tft.default_samples(4)
    for i, (s1, s2) in enumerate(product(samples[:12], repeat=2)):
        lhs, rhs = tft.monoidal_square(m, s1, s2)
        out.append(_case(f"monoidal square {i}", lhs, rhs))
    for i, (e1, e2) in enumerate(corpus.composable_pairs(45, 200, 8, catlib.CLOSED_GENERATORS, closed=True)):
        f, g = eval_expr(e1), eval_expr(e2)
        out.append(_case(f"F(g o f) = F(g) F(f) pair {i}", tft.tft_eval(m, compose(f, g)),
                         tft.tft_eval(m, f) * tft.tft_eval(m, g)))
    same = tft.nat_trans(m, m)
    out.append(_check("nat_trans(mu, mu) is the identity", same is not None and all(t == ONE for t in same.components)
                      and same.monoidal_ok and same.natural_ok))
    other = tft.MuSequence({0: mu(0)}, default=lambda k: mu(k + 20))
    nt = tft.nat_trans(m, other)
    ok = (nt is not None and nt.monoidal_ok and nt.natural_ok
          and nt.components[1] == mu(21) / mu(1) and nt.components[2] == (mu(22) / mu(2)) ** 2)
    out.append(_check("nat_trans for equal mu0 exists and commutes", ok, str(nt)))
    out.append(_check("nat_trans is deterministic", nt == tft.nat_trans(m, other)))
    diff = tft.MuSequence({0: mu(9)}, default=lambda k: mu(k))
    out.append(_check("no nat_trans when mu0 differs", tft.nat_trans(m, diff) is None))
    numeric = tft.parse_mu("mu0=2,mu1=1/3,mu2=5")
    out.append(_case("numeric F(P2)", tft.tft_eval(numeric, catlib.projective_plane()), Scalar.const(2)))
    out.append(_case("numeric F2(1,1)", tft.f2(numeric, 1, 1), Scalar.const(225)))
    return out


def suite_frobenius(max_len=6, max_circles=2):
    out = []
    fd = frobenius.cor45_algebra(mu(0))
    for axiom, ok in frobenius.frobenius_validate(fd):
        out.append(_check(f"cor45 symbolic: {axiom}", ok))
    out.append(_case("alpha = mu0^-2", fd.alpha[0][0], mu(0, -2)))
    out.append(_case("U^2 = mu0^-2", fd.multiply(fd.U, fd.U)[0], mu(0, -2)))
    for value in (1, 2, -3):
        for axiom, ok in frobenius.frobenius_validate(frobenius.cor45_algebra(value)):
            out.append(_check(f"cor45 at mu0={value}: {axiom}", ok))
    bad = frobenius.FrobeniusData.make(1, [1], [[[1]]], [[mu(0, 2)]], [[1]], [mu(0, -2)])
    report = dict(frobenius.frobenius_validate(bad))
    out.append(_check("U^2 != mu0^-2 fails the U axiom", not report["U^2 = sum alpha_ij a_i a_j*"]))
    m45 = tft.MuSequence.cor45(mu(0))
    cache = {}

    def layer_value(layer):
        if layer not in cache:
            cache[layer] = (eval_expr(layer), frobenius.klein_eval(fd, layer))
        return cache[layer]

    def start(layer):
        return layer_value(layer)

    def step(state, layer):
        c, mat = layer_value(layer)
        return compose(state[0], c), frobenius.matmul(mat, state[1])

    total = 0
    failures = []
    for e, (c, mat) in corpus.fold_closed_words(max_len, start, step, max_circles=max_circles):
        total += 1
        expect = tft.tft_eval(m45, c)
        if mat != ((expect,),):
            failures.append((e, mat, expect))
    detail = f"{total} words"
    if failures:
        e, mat, expect = failures[0]
        detail += f"; first failure {pretty(e)}: klein={mat} tft={expect}"
    out.append(Case(f"klein_eval = tft_eval on closed words of length <= {max_len}", not failures, detail))
    return out


# -- fundamental groups ------------------------------------------------------------------------


PI1_RANKS = {"N": 1, "O": 1, "K": 1, "S_and_N": 1, "S_and_O": 1, "S": 1, "barN": 2}


def suite_fundamental_groups():
    out = []
    for cat, rank in PI1_RANKS.items():
        got = localise.free_rank(cat)
        out.append(_case(f"pi_1 free rank of {cat}", got, rank))
    torus2 = n1_cobordism(1, 0, 0)
    out.append(_case("S and N -> N multiplies the generator by 2",
                     (loc_class(torus2, "S_and_N").payload, loc_class(torus2, "N").payload), (1, 2)))
    for cat in ("N1", "N1plus", "N1minus"):
        out.append(_case(f"pi_1 free rank of {cat}", localise.free_rank(cat), 1))
    out.append(_case("N1+ completion", monoid.grothendieck(monoid.n1plus_presentation()).describe(), "Z/2 x Z"))
    return out


# -- oracle -------------------------------------------------------------------------------------------

ORACLE_EXTRAS = (Gen("p", (1,)), Gen("p", (2,)), Gen("tau", (0,)), Gen("tau", (1,)), Gen("tau", (2,)))


def suite_oracle(random_count=500, max_size=8):
    out = []
    pairs = corpus.generator_pairs(extra=ORACLE_EXTRAS)
    exprs = pairs + corpus.random_expressions(3, random_count, max_size)
    for i, e in enumerate(exprs):
        c = eval_expr(e)
        mine = oracle.invariants(c)
        theirs = oracle.oracle_classify(e)
        same_value = oracle.oracle_cobordism(e) == c
        kind = "pair" if i < len(pairs) else "random"
        out.append(_check(f"oracle {kind} {i}: {pretty(e)}", mine == theirs and same_value,
                          f"glue={mine} oracle={theirs}"))
    return out


def suite_theta_laws(count=1000, max_size=15):
    out = []
    for i, (e1, e2) in enumerate(corpus.composable_pairs(1, count, max_size)):
        f, g = eval_expr(e1), eval_expr(e2)
        h = compose(f, g)
        q = f.target.intervals
        ok = (theta(h) == theta(f) + theta(g)
              and euler_char(h) == euler_char(f) + euler_char(g) - q
              and theta(tensor(f, g)) == theta(f) + theta(g))
        out.append(_check(f"theta and chi laws {i}", ok, f"{pretty(e1)} ; {pretty(e2)}"))
    return out


SUITES = {
    "prop2.3": suite_monoid_identification,
    "thm2.6": suite_adjunction,
    "thm3.3": suite_n1_completion,
    "prop3.4": suite_n1_signed,
    "prop3.5": suite_n0_completion,
    "thm3.6": suite_closed_localisation,
    "thm3.7": suite_oriented_closed,
    "thm3.8": suite_open_localisation,
    "thm3.9": suite_oriented_open,
    "thm3.10": suite_windows,
    "thm3.11": suite_full,
    "thmS": suite_oriented,
    "prop4.1": suite_integer_functors,
    "thm4.4": suite_invertible_tfts,
    "cor4.5": suite_frobenius,
    "cor5.2": suite_fundamental_groups,
    "oracle": suite_oracle,
}


def run(name):
    """Run a suite by name (``all`` runs every suite in order); returns ``[(suite, cases)]``."""
    if name == "all":
        return [(n, fn()) for n, fn in SUITES.items()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(list(SUITES) + ['all'])}")
    return [(name, SUITES[name]())]
