import pytest
from hypothesis import given

from cobloc import catlib
from cobloc.catlib import connected, generator, sc
from cobloc.errors import SignatureMismatch
from cobloc.glue import compose, compose_all, compose_traced, tensor, tensor_all
from cobloc.surface import euler_char, identity, omega, theta

from conftest import cobordisms, composable


def test_sphere_from_two_discs():
    s = compose(generator("disc_in"), generator("disc_out"))
    assert s == catlib.sphere()


def test_reflection_squares_to_identity():
    tw = generator("twist_circle")
    assert compose(tw, tw) == identity((1, 0))
    ti = generator("twist_interval")
    assert compose(ti, ti) == identity((0, 1))


def test_pants_copants_is_punctured_torus():
    c = compose(generator("pants_out"), generator("pants_in"))
    (comp,) = c.components
    assert (comp.genus, comp.crosscaps, len(comp.cycles)) == (1, 0, 2)
    assert all(cyc.twist == 0 for cyc in comp.cycles)


def test_annuli_glue_to_klein_bottle_or_torus():
    cup = connected(0, 0, 0, (0, 0), (2, 0))
    twisted_cap = connected(0, 0, 0, (2, 0), (0, 0), twists={sc(1): 1})
    assert compose(cup, twisted_cap) == catlib.closed_surface(0, 2)
    assert compose(cup, connected(0, 0, 0, (2, 0), (0, 0))) == catlib.closed_surface(1, 0)


def test_whistles_give_annulus():
    c = compose(generator("whistle_oc"), generator("whistle_co"))
    assert c == catlib.interval_whistle(0, 0, 0)


def test_unit_and_two_discs():
    f = generator("pants_in")
    assert tensor(f, identity((0, 0))) == f == tensor(identity((0, 0)), f)
    assert tensor(generator("disc_in"), generator("disc_in")) == catlib.connecting(2)


def test_open_gluing_can_create_windows():
    c = compose(generator("opants_out"), generator("opants_in"))
    assert omega(c) == 1 and theta(c) == 1


def test_signature_mismatch():
    with pytest.raises(SignatureMismatch):
        compose(generator("disc_in"), generator("ocyl"))


def test_compose_traced_reports_middle():
    c, trace = compose_traced(generator("pants_out"), generator("pants_in"))
    assert c == compose(generator("pants_out"), generator("pants_in"))
    assert trace is not None


def test_variadic_helpers():
    d = generator("disc_in")
    assert compose_all(d) == d
    assert compose_all(d, generator("disc_out")) == catlib.sphere()
    assert tensor_all(d, d, d) == catlib.connecting(3)


@given(composable(3))
def test_associativity(fs):
    f, g, h = fs
    assert compose(compose(f, g), h) == compose(f, compose(g, h))


@given(cobordisms())
def test_identity_laws(f):
    assert compose(identity(f.source), f) == f == compose(f, identity(f.target))


@given(composable(2), composable(2))
def test_interchange(p, q):
    f, g = p
    f2, g2 = q
    assert compose(tensor(f, f2), tensor(g, g2)) == tensor(compose(f, g), compose(f2, g2))


@given(composable(2))
def test_theta_and_chi_laws(p):
    f, g = p
    h = compose(f, g)
    assert theta(h) == theta(f) + theta(g)
    assert euler_char(h) == euler_char(f) + euler_char(g) - f.target.intervals
    assert theta(tensor(f, g)) == theta(f) + theta(g)


@given(composable(2, names=catlib.CLOSED_GENERATORS + ("disc_in",), closed=True))
def test_gluing_circles_adds_no_windows(p):
    f, g = p
    f = tensor(f, catlib.free_disc())
    assert omega(compose(f, g)) == omega(f) + omega(g)


@given(cobordisms(), cobordisms())
def test_tensor_is_associative(f, g):
    h = catlib.free_disc()
    assert tensor(tensor(f, g), h) == tensor(f, tensor(g, h))
