import pytest
from hypothesis import given, strategies as st
from sympy import Matrix

from cobloc import catlib, monoid
from cobloc.errors import BoundExceeded, FreeBoundaryError, NotInCategory
from cobloc.glue import compose
from cobloc.monoid import N1Element, grothendieck, parse_presentation
from cobloc.surface import theta

E = N1Element.make


def test_free_monoids():
    assert grothendieck(monoid.free_monoid(1)).invariant_factors == (0,)
    assert grothendieck(monoid.free_monoid(0)).invariant_factors == ()


def test_torsion_example():
    g = grothendieck(parse_presentation("generators: a b\n2b = 0\n"))
    assert sorted(g.invariant_factors) == [0, 2]
    assert g.free_rank == 1 and g.torsion == (2,)
    assert g.describe() == "Z/2 x Z"


def test_fixture_completions():
    n1 = grothendieck(monoid.n1_presentation())
    assert n1.invariant_factors == (0,)
    assert n1.map == {"h": (2,), "c": (1,), "t": (0,)}
    assert grothendieck(monoid.n1plus_presentation()).invariant_factors == (2, 0)
    assert grothendieck(monoid.n1minus_presentation()).invariant_factors == (0,)
    for r in range(1, 7):
        assert grothendieck(monoid.n0_presentation(r)).invariant_factors == (0,) * r


def test_coordinates_reduce_torsion():
    g = grothendieck(monoid.n1plus_presentation())
    assert g.coordinates((0, 2)) == g.coordinates((0, 0))
    assert g.coordinates((0, 1)) != g.coordinates((0, 0))


def test_presentation_text_round_trip():
    p = monoid.n1_presentation()
    assert parse_presentation(p.to_text()) == p
    q = parse_presentation("# comment\n2x + y = 3y  # trailing\n\nx = 0\n")
    assert q.names == ("x", "y") and q.relations == (((2, 1), (0, 3)), ((1, 0), (0, 0)))


@pytest.mark.parametrize("text", ["a + = b", "a = b = c", "generators: a\nb = a", "2 = a"])
def test_presentation_errors(text):
    with pytest.raises(ValueError):
        parse_presentation(text)


@st.composite
def presentations(draw):
    rank = draw(st.integers(1, 4))
    vec = st.lists(st.integers(0, 4), min_size=rank, max_size=rank)
    rels = draw(st.lists(st.tuples(vec, vec), max_size=4))
    return monoid.MonoidPresentation.make(rank, rels)


@given(presentations())
def test_completion_kills_relations(p):
    g = grothendieck(p)
    for lhs, rhs in p.relations:
        assert g.coordinates(lhs) == g.coordinates(rhs)
    rows = [[a - b for a, b in zip(l, r)] for l, r in p.relations]
    rank = Matrix(rows).rank() if rows else 0
    assert g.free_rank == p.rank - rank
    for a, b in zip(g.torsion, g.torsion[1:]):
        assert b % a == 0


def test_n1_normal_form():
    assert E(1, 2, 1) == N1Element(0, 4, 0)
    assert E(2, 0, 3) == N1Element(2, 0, 1)
    assert E(1, 0, 1) + E(0, 1, 0) == N1Element(0, 3, 0)
    with pytest.raises(ValueError):
        E(-1, 0, 0)


def test_n1_addition_is_composition():
    for x in monoid.n1_elements(3):
        for y in monoid.n1_elements(3):
            assert compose(x.cobordism(), y.cobordism()) == (x + y).cobordism()
            assert monoid.n1_element_of(x.cobordism()) == x


def test_n1_enumeration_is_graded():
    elems = list(monoid.n1_elements(4))
    assert elems[0] == monoid.N1_ZERO
    assert len(set(elems)) == len(elems)
    degrees = [e.degree() for e in elems]
    assert degrees == sorted(degrees)


def test_witnesses_for_the_two_relation_families():
    w = E(0, 1, 0)
    for a in range(1, 4):
        for c in range(4):
            for eta in range(2):
                assert monoid.gc_witness(E(a, 0, 0), E(c, 0, eta), E(a, 0, 1), E(c, 0, eta)) == w
            assert monoid.gc_witness(E(a, 0, 0), E(c, 0, 0), E(0, 2 * a, 0), E(c, 0, 0)) == w


def test_no_witness_when_classes_differ():
    assert monoid.gc_witness(E(0, 1, 0), E(0, 0, 0), E(0, 2, 0), E(0, 0, 0), bound=50) is None
    with pytest.raises(BoundExceeded):
        monoid.gc_witness_strict(E(0, 1, 0), E(0, 0, 0), E(0, 2, 0), E(0, 0, 0), bound=10)


def test_gc_class_matches_theta():
    for x in monoid.n1_elements(5):
        assert monoid.gc_class_n1(x) == theta(x.cobordism())
    assert monoid.gc_class_n1(E(1, 0, 0)) == 2
    assert monoid.gc_class_n1(E(0, 0, 1)) == 0
    assert monoid.gc_class_n1(E(0, 1, 0)) == 1


def test_n0_class():
    assert dict(monoid.n0_class(catlib.sphere())) == {(0, 0): 1}
    assert dict(monoid.n0_class(catlib.closed_union({(1, 0): 2}))) == {(1, 0): 2}
    assert dict(monoid.n0_class(catlib.closed_surface(0, 2))) == {(0, 2): 1}
    with pytest.raises(FreeBoundaryError):
        monoid.n0_class(catlib.free_disc())
    with pytest.raises(NotInCategory):
        monoid.n0_class(catlib.generator("disc_in"))
    with pytest.raises(BoundExceeded):
        monoid.n0_class(catlib.closed_surface(3, 0), truncation=(2, 2))
    with pytest.raises(NotInCategory):
        monoid.n1_element_of(catlib.sigma_kw(0, 1))
