import pytest

from cobloc import catlib
from cobloc.catlib import connect, generator, in_category
from cobloc.errors import NotInCategory, NotStronglyConnected, UnknownGenerator, ValidationError
from cobloc.glue import compose, tensor
from cobloc.surface import ArcCycle, MarkedCircle, identity, theta


def test_generator_shapes():
    (mob,) = generator("mobius").components
    assert (mob.genus, mob.crosscaps) == (0, 1)
    assert [type(c) for c in mob.cycles] == [MarkedCircle]
    (bow,) = generator("twist_interval").components
    (cyc,) = bow.cycles
    assert [t for _, t in cyc.arcs] == [0, 1]
    (wh,) = generator("whistle_co").components
    assert sorted(type(c).__name__ for c in wh.cycles) == ["ArcCycle", "MarkedCircle"]
    assert any(isinstance(c, ArcCycle) and len(c.arcs) == 1 for c in wh.cycles)


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        generator("pretzel")


def test_connecting_morphisms():
    assert catlib.connecting(1) == generator("disc_in")
    assert catlib.connecting(2) == tensor(generator("disc_in"), generator("disc_in"))
    for k in range(1, 11):
        assert theta(catlib.connecting(k)) == 0
    with pytest.raises(ValidationError):
        catlib.connecting(0)


def test_tau_family():
    assert catlib.tau(0) == generator("mobius")
    assert catlib.tau(1) == generator("rp2_cyl")
    for n in range(5):
        assert theta(catlib.tau(n)) == 1


def test_adjunction_example():
    left, right, caps = catlib.adjunction_sides(1, 0, 1, 2, 1)
    assert left == right
    (comp,) = left.components
    assert comp.crosscaps == caps == 3


def test_adjunction_needs_components_with_targets():
    with pytest.raises(ValidationError):
        catlib.adjunction_surface(0, 0, 2, 2, 1)


@pytest.mark.parametrize("name, cat, expected", [
    ("mobius", "N", True),
    ("mobius", "S", False),
    ("whistle_co", "N", False),
    ("cyl", "S_and_N", True),
    ("twist_circle", "S", False),
    ("twist_circle", "N", True),
    ("ocyl", "O", True),
    ("ocyl", "S_and_O", True),
    ("sym_ci", "S", True),
    ("mobius", "Nb", True),
    ("disc_out", "Nb", False),
])
def test_generator_membership(name, cat, expected):
    assert in_category(generator(name), cat) is expected


def test_sphere_and_free_disc_membership():
    assert not in_category(catlib.sphere(), "O")
    assert in_category(catlib.sphere(), "barO")
    assert in_category(catlib.sphere(), "N0")
    assert not in_category(catlib.free_disc(), "N")
    assert in_category(catlib.free_disc(), "barN")


def test_n1_membership():
    assert in_category(catlib.n1_cobordism(2, 0, 1), "N1plus")
    assert not in_category(catlib.n1_cobordism(0, 1, 0), "N1plus")
    assert in_category(catlib.n1_cobordism(0, 1, 0), "N1minus")
    assert not in_category(catlib.n1_cobordism(1, 0, 0), "N1minus")
    assert not in_category(catlib.sigma_kw(0, 1), "N1")


def test_category_aliases():
    assert catlib.category_id("S∩N") == "S_and_N"
    with pytest.raises(ValueError):
        catlib.category_id("Z")


def test_connect_lands_in_category():
    for cat in ("N", "O", "K", "barN", "S_and_N", "S"):
        for a in ((0, 0), (1, 0), (2, 0), (0, 1), (0, 2), (1, 1)):
            for b in ((0, 0), (2, 0), (0, 2), (1, 1)):
                if catlib.objects_ok(a, cat) and catlib.objects_ok(b, cat):
                    c = connect(a, b, cat)
                    assert (c.source, c.target) == (a, b)
                    assert in_category(c, cat)
    assert connect((1, 0), (1, 0), "N") == identity((1, 0))


def test_connect_errors():
    with pytest.raises(NotStronglyConnected):
        connect((1, 0), (0, 0), "Nb")
    with pytest.raises(NotInCategory):
        connect((0, 1), (0, 0), "N")


def test_generator_pairs_compose_inside_their_category():
    for cat, names in (("N", catlib.CLOSED_GENERATORS), ("O", catlib.OPEN_GENERATORS),
                       ("S", catlib.ORIENTED_GENERATORS)):
        gens = [generator(n) for n in names]
        for f in gens:
            for g in gens:
                if f.target == g.source:
                    assert in_category(compose(f, g), cat)
