import random
from collections import defaultdict

import pytest

from cobloc import catlib, corpus, frobenius, tft
from cobloc.errors import OpenSectorGenerator, SingularPairing, UnknownGenerator
from cobloc.expr import Gen, eval_expr, parse
from cobloc.frobenius import FrobeniusData, klein_eval, validation_passes
from cobloc.scalars import ONE, Scalar, mu

FD = frobenius.cor45_algebra(mu(0))


def test_cor45_axioms_symbolic_and_numeric():
    assert validation_passes(frobenius.frobenius_validate(FD))
    for v in (1, 2, -5, "1/3"):
        assert validation_passes(frobenius.frobenius_validate(frobenius.cor45_algebra(v)))
    trivial = frobenius.cor45_algebra(1)
    assert trivial.U == (ONE,) and trivial.pairing == ((ONE,),)


def test_u_axiom_detects_wrong_u():
    bad = FrobeniusData.make(1, [1], [[[1]]], [[mu(0, 2)]], [[1]], [mu(0, -2)])
    report = dict(frobenius.frobenius_validate(bad))
    assert not report["U^2 = sum alpha_ij a_i a_j*"]
    assert report["associative"]


def test_group_algebra_examples():
    good = frobenius.group_algebra_z2(scale=2)
    assert validation_passes(frobenius.frobenius_validate(good))
    report = dict(frobenius.frobenius_validate(frobenius.group_algebra_z2(scale=1, U=(1, 1))))
    assert not report["U^2 = sum alpha_ij a_i a_j*"]


def test_singular_pairing():
    bad = FrobeniusData.make(1, [1], [[[1]]], [[0]], [[1]], [1])
    with pytest.raises(SingularPairing):
        frobenius.frobenius_validate(bad)


def test_klein_eval_examples():
    assert klein_eval(FD, parse("disc_out o disc_in")) == ((mu(0, 2),),)
    assert klein_eval(FD, parse("rp2_cyl")) == ((mu(0, -1),),)
    z2 = frobenius.group_algebra_z2(scale=2, swap=True)
    assert klein_eval(z2, parse("twist_circle")) == z2.involution
    with pytest.raises(OpenSectorGenerator):
        klein_eval(FD, parse("ocyl"))
    with pytest.raises(UnknownGenerator):
        klein_eval(FD, Gen("conn", (0, 0, 0, (1, 0), (1, 0))))


def test_rp2_cyl_factorisation_is_consistent():
    z2 = frobenius.group_algebra_z2(scale=2)
    assert klein_eval(z2, parse("rp2_cyl")) == klein_eval(z2, parse("pants_in o (id(1,0) * mobius)"))


def test_klein_eval_matches_tft_on_short_words():
    m = tft.MuSequence.cor45(mu(0))
    for e in corpus.closed_words(3):
        c = eval_expr(e)
        assert klein_eval(FD, e) == ((tft.tft_eval(m, c),),)


def test_klein_eval_depends_only_on_the_cobordism():
    z2 = frobenius.group_algebra_z2(scale=2)
    values = defaultdict(set)
    exprs = defaultdict(set)
    rng = random.Random(45)
    for _ in range(400):
        e = corpus.random_expression(rng, rng.randint(1, 8), catlib.CLOSED_GENERATORS, closed=True)
        c = eval_expr(e)
        values[c].add(klein_eval(z2, e))
        exprs[c].add(e)
    assert sum(1 for v in exprs.values() if len(v) > 1) >= 10
    assert all(len(v) == 1 for v in values.values())


def test_numeric_specialisation():
    fd2 = frobenius.cor45_algebra(2)
    assert klein_eval(fd2, parse("disc_out o disc_in")) == ((Scalar.const(4),),)
