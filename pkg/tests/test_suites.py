import pytest

from cobloc import suites

FAST = ["prop2.3", "thm2.6", "thm3.3", "prop3.4", "prop3.5", "thm3.7", "thm3.8", "thm3.9",
        "thm3.10", "thm3.11", "thmS", "prop4.1", "cor5.2"]


@pytest.mark.parametrize("name", FAST)
def test_suite_passes(name):
    ((got, cases),) = suites.run(name)
    assert got == name and cases
    failed = [c for c in cases if not c.ok]
    assert not failed, failed[:3]


def test_suite_names():
    assert set(FAST) < set(suites.SUITES)
    assert {"thm3.6", "thm4.4", "cor4.5", "oracle"} < set(suites.SUITES)
    with pytest.raises(KeyError):
        suites.run("thm9.9")


def test_closed_localisation_reduced():
    cases = suites.suite_closed_localisation(full=False)
    assert all(c.ok for c in cases)


def test_suites_are_deterministic():
    a = [tuple(c) for c in suites.suite_windows()]
    b = [tuple(c) for c in suites.suite_windows()]
    assert a == b
