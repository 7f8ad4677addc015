import pytest
from hypothesis import given

from cobloc import catlib, localise
from cobloc.catlib import generator, n1_cobordism
from cobloc.errors import (EndpointMismatch, NotALoop, NotComposable, NotInCategory,
                           NotStronglyConnected)
from cobloc.glue import compose, tensor
from cobloc.localise import INV, LocWord, loc_class, to_endo_word, verify_relation, word_reduce
from cobloc.surface import identity, theta

from conftest import cobordisms, composable


def w(*letters, start=None):
    return LocWord.of(*letters, start=start)


def test_class_values():
    assert loc_class(n1_cobordism(1, 0, 0), "N").payload == 2
    assert loc_class(n1_cobordism(0, 2, 0), "N").payload == 2
    assert loc_class(catlib.sigma_kw(2, 3), "barN").payload == (2, 3)
    assert loc_class(n1_cobordism(1, 0, 0), "S_and_N").payload == 1
    assert loc_class(generator("mobius"), "K").payload == 1
    assert loc_class(generator("twist_circle"), "N1").payload == 0
    assert loc_class(n1_cobordism(0, 1, 1), "N1").payload == 1
    assert loc_class(catlib.closed_surface(0, 2), "N0").payload == (((0, 2), 1),)
    assert str(loc_class(n1_cobordism(1, 0, 0), "N")) == "N: 2"


def test_not_in_category():
    with pytest.raises(NotInCategory):
        loc_class(generator("mobius"), "S")
    with pytest.raises(NotInCategory):
        word_reduce(w(generator("whistle_co")), "N")


def test_inverse_klein_discs_equals_cylinder_and_sphere():
    lhs = w((n1_cobordism(0, 2, 0), INV))
    rhs = w(tensor(identity((1, 0)), catlib.sphere()))
    assert word_reduce(lhs, "N").payload == -2 == word_reduce(rhs, "N").payload
    assert verify_relation(lhs, rhs, "N")


def test_crosscap_chain_identities():
    for k in range(1, 6):
        lhs = w((n1_cobordism(0, k, 0), INV))
        rhs = w(tensor(n1_cobordism(0, k, 0), catlib.closed_union({(0, 0): k})))
        assert verify_relation(lhs, rhs, "N")
        assert word_reduce(lhs, "N").payload == -k


def test_empty_word():
    c = word_reduce(w(start=(2, 0)), "N")
    assert c.payload == 0 and c.source == c.target == (2, 0)
    with pytest.raises(ValueError):
        w().begin()


def test_relations_from_the_classification():
    idI = w(start=(0, 1))
    fd = catlib.free_disc()
    assert verify_relation(w(tensor(n1_cobordism(1, 0, 0), catlib.sphere())), w(start=(1, 0)), "N")
    assert verify_relation(w(tensor(catlib.interval_endo(0, 0, 1), fd)), idI, "O")
    assert verify_relation(w(tensor(catlib.interval_endo(0, 1, 0), fd)), idI, "O")
    assert verify_relation(w(catlib.interval_endo(1, 0, 0)), w(catlib.interval_endo(0, 0, 2)), "S_and_O")
    assert not verify_relation(w(catlib.interval_endo(1, 0, 2)), idI, "S_and_O")


def test_word_errors():
    with pytest.raises(NotComposable):
        word_reduce(w(generator("disc_in"), generator("disc_in")), "N")
    with pytest.raises(EndpointMismatch):
        verify_relation(w(start=(1, 0)), w(start=(2, 0)), "N")
    with pytest.raises(ValueError):
        LocWord.of((generator("cyl"), "sideways"))


def test_conjugation_preserves_class():
    alpha = generator("disc_in")
    for beta in (n1_cobordism(1, 0, 0), n1_cobordism(0, 3, 0), tensor(identity((1, 0)), catlib.sphere())):
        conj = localise.conjugate(alpha, w(beta))
        assert conj.begin() == conj.end() == (0, 0)
        assert word_reduce(conj, "N").payload == loc_class(beta, "N").payload


def test_to_endo_word_examples():
    loop = w(generator("disc_in"), generator("disc_out"))
    endo = to_endo_word(loop, (0, 0), "N")
    assert all(c.source == c.target == (0, 0) for c, _ in endo.letters)
    assert word_reduce(endo, "N").payload == word_reduce(loop, "N").payload == -2
    loop = w(generator("pants_out"), (generator("pants_out"), INV))
    endo = to_endo_word(loop, (1, 0), "N")
    assert word_reduce(endo, "N") == word_reduce(loop, "N")


def test_to_endo_word_errors():
    with pytest.raises(NotStronglyConnected):
        to_endo_word(w(generator("mobius"), (generator("mobius"), INV)), (0, 0), "Nb")
    with pytest.raises(NotALoop):
        to_endo_word(w(generator("disc_in")), (0, 0), "N")
    with pytest.raises(NotInCategory):
        to_endo_word(w(start=(0, 0)), (0, 1), "N")


@given(composable(3, names=catlib.CLOSED_GENERATORS, closed=True, max_size=5))
def test_to_endo_word_preserves_class(fs):
    base = (1, 0)
    start = catlib.connect(base, fs[0].source, "N")
    back = catlib.connect(base, fs[-1].target, "N")
    word = LocWord.of(start, *fs, (back, INV))
    endo = to_endo_word(word, base, "N")
    assert endo.begin() == endo.end() == base
    assert all(c.source == c.target == base for c, _ in endo.letters)
    assert word_reduce(endo, "N").payload == word_reduce(word, "N").payload


@given(cobordisms(names=catlib.CLOSED_GENERATORS, closed=True))
def test_inverse_word_negates_class(c):
    a = word_reduce(w(c), "N")
    b = word_reduce(w(c).inverse(), "N")
    assert b.payload == -a.payload == -theta(c)
    assert (b.source, b.target) == (a.target, a.source)


@given(composable(2))
def test_composition_and_concatenation_agree(p):
    f, g = p
    assert word_reduce(w(f, g), "K").payload == loc_class(compose(f, g), "K").payload


@pytest.mark.parametrize("cat, rank", [("N", 1), ("O", 1), ("K", 1), ("S_and_N", 1), ("S_and_O", 1),
                                       ("S", 1), ("barN", 2), ("N1", 1), ("N1plus", 1), ("N1minus", 1)])
def test_free_ranks(cat, rank):
    assert localise.free_rank(cat) == rank
