"""Acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL`` line before asserting.
The lines are also collected in ``ACCEPTANCE_LINES`` and repeated in the
pytest terminal summary, so they show up without ``-s``.
"""
import subprocess
import sys
import time

import pytest

from cobloc import catlib, corpus, monoid, suites
from cobloc.catlib import connected, generator, n1_cobordism
from cobloc.expr import eval_expr
from cobloc.glue import compose, tensor
from cobloc.monoid import N1Element
from cobloc.surface import canonical_key, euler_char, identity, theta

ACCEPTANCE_LINES = []


def report(n, title, ok, detail="", elapsed=None, limit=None):
    timing = ""
    if elapsed is not None:
        timing = f" [{elapsed:.2f}s" + (f" < {limit}s" if limit else "") + "]"
        if limit is not None and elapsed >= limit:
            ok = False
    line = f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}{timing}" + (f"  ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)
    return ok


def outcome(cases):
    bad = [c for c in cases if not c.ok]
    detail = f"{len(cases) - len(bad)}/{len(cases)} cases"
    if bad:
        detail += f"; first failure: {bad[0].name}: {bad[0].detail}"
    return not bad, detail


@pytest.fixture(scope="module")
def theta_corpus():
    start = time.perf_counter()
    pairs = corpus.composable_pairs(1, 1000, 15)
    values = [(eval_expr(a), eval_expr(b)) for a, b in pairs]
    return values, time.perf_counter() - start


def test_criterion_01_theta_functoriality(theta_corpus):
    values, build = theta_corpus
    start = time.perf_counter()
    bad = 0
    for f, g in values:
        if theta(compose(f, g)) != theta(f) + theta(g) or theta(tensor(f, g)) != theta(f) + theta(g):
            bad += 1
    elapsed = build + time.perf_counter() - start
    ok = report(1, "theta additive under compose and tensor", bad == 0 and len(values) == 1000,
                f"{len(values) - bad}/{len(values)} pairs", elapsed, 5)
    assert ok


def test_criterion_02_euler_characteristic(theta_corpus):
    values, _ = theta_corpus
    bad = sum(1 for f, g in values
              if euler_char(compose(f, g)) != euler_char(f) + euler_char(g) - f.target.intervals)
    ok = report(2, "chi(g o f) = chi(f) + chi(g) - q", bad == 0, f"{len(values) - bad}/{len(values)} pairs")
    assert ok


def test_criterion_03_oracle_equivalence():
    start = time.perf_counter()
    cases = suites.suite_oracle(500, 8)
    elapsed = time.perf_counter() - start
    pairs = len(corpus.generator_pairs(extra=suites.ORACLE_EXTRAS))
    ok, detail = outcome(cases)
    ok = report(3, "gluing engine agrees with polygon oracle", ok and len(cases) == pairs + 500,
                f"{pairs} generator pairs + 500 random; {detail}", elapsed, 30)
    assert ok


def test_criterion_04_monoid_identification():
    bad = []
    for g in range(11):
        for k in range(11):
            same = canonical_key(n1_cobordism(g, k, 0)) == canonical_key(n1_cobordism(0, 2 * g + k, 1))
            if same != (k != 0):
                bad.append((g, k))
        collapse = n1_cobordism(0, g, 0) == n1_cobordism(0, g, 1)
        if collapse != (g >= 1):
            bad.append(("collapse", g))
    ok = report(4, "(g,k,0) ~ (0,2g+k,1) iff k != 0; type collapse iff k >= 1", not bad,
                f"121 + 11 checks, failures {bad[:3]}" if bad else "121 + 11 checks")
    assert ok


def test_criterion_05_crosscap_slide_and_reflections():
    mob0 = connected(0, 1, 0, (1, 0), (1, 0), twists={catlib.tc(0): 0})
    mob1 = connected(0, 1, 0, (1, 0), (1, 0), twists={catlib.tc(0): 1})
    tw, ti = generator("twist_circle"), generator("twist_interval")
    checks = {
        "moebius type 0 = type 1": mob0 == mob1,
        "twist_circle^2 = id": compose(tw, tw) == identity((1, 0)),
        "twist_interval^2 = id": compose(ti, ti) == identity((0, 1)),
    }
    failed = [k for k, v in checks.items() if not v]
    ok = report(5, "crosscap slide and reflections", not failed, "; ".join(failed) or "3 identities")
    assert ok


def test_criterion_06_adjunction():
    cases = suites.suite_adjunction()
    squares = [c for c in cases if c.name.startswith("naturality square")]
    ok, detail = outcome(cases)
    ok = report(6, "tau naturality squares and crosscap count 2g+k+2m-2c+1", ok and len(squares) > 0,
                f"{len(squares)} squares; {detail}")
    assert ok


def test_criterion_07_group_completions():
    E = N1Element.make
    got = {
        "N1": monoid.grothendieck(monoid.n1_presentation()).invariant_factors,
        "N1+": monoid.grothendieck(monoid.n1plus_presentation()).invariant_factors,
        "N1-": monoid.grothendieck(monoid.n1minus_presentation()).invariant_factors,
    }
    want = {"N1": (0,), "N1+": (2, 0), "N1-": (0,)}
    n0 = all(monoid.grothendieck(monoid.n0_presentation(r)).invariant_factors == (0,) * r for r in range(1, 7))
    wit = E(0, 1, 0)
    witnesses = all(
        monoid.gc_witness(E(a, b, 0), E(c, d, eta), E(a, b, 1), E(c, d, eta)) is not None
        and monoid.is_witness(E(a, b, 0), E(c, d, eta), E(a, b, 1), E(c, d, eta), wit)
        and monoid.is_witness(E(a, b, 0), E(c, d, 0), E(0, 2 * a + b, 0), E(c, d, 0), wit)
        for a in range(3) for b in range(3) for c in range(3) for d in range(3) for eta in range(2))
    least = all(monoid.gc_witness(E(a, 0, 0), E(c, 0, 0), E(a, 0, 1), E(c, 0, 0)) == wit
                and monoid.gc_witness(E(a, 0, 0), E(c, 0, 0), E(0, 2 * a, 0), E(c, 0, 0)) == wit
                for a in range(1, 4) for c in range(4))
    ok = report(7, "group completions and (0,1,0) witnesses", got == want and n0 and witnesses and least,
                f"factors {got}, N0 free up to 6 types: {n0}, witnesses: {witnesses and least}")
    assert ok


def test_criterion_08_closed_localisation():
    ok, detail = outcome(suites.suite_closed_localisation(full=True))
    ok = report(8, "closed localisation identities (class and theta)", ok, detail)
    assert ok


def test_criterion_09_open_window_full_localisations():
    results = {name: outcome(suites.run(name)[0][1]) for name in ("thm3.8", "thm3.9", "thm3.10", "thm3.11")}
    ok = all(r[0] for r in results.values())
    detail = ", ".join(f"{k}: {v[1]}" for k, v in results.items())
    ok = report(9, "open, oriented-open, windowed and full localisation identities", ok, detail)
    assert ok


def test_criterion_10_oriented_closed_and_ranks():
    a_ok, a_detail = outcome(suites.suite_oriented_closed())
    b_ok, b_detail = outcome(suites.suite_fundamental_groups())
    ok = report(10, "S and N doubling; fundamental group free ranks", a_ok and b_ok,
                f"oriented: {a_detail}; ranks: {b_detail}")
    assert ok


def test_criterion_11_integer_functors():
    ok, detail = outcome(suites.suite_integer_functors())
    ok = report(11, "integer functors additive; strict monoidal test (kmax 8)", ok, detail)
    assert ok


def test_criterion_12_invertible_tfts():
    ok, detail = outcome(suites.suite_invertible_tfts(1000))
    ok = report(12, "invertible TFTs: functoriality, F2 identities, transformations", ok, detail)
    assert ok


def test_criterion_13_frobenius():
    start = time.perf_counter()
    cases = suites.suite_frobenius(max_len=6)
    elapsed = time.perf_counter() - start
    ok, detail = outcome(cases)
    words = next(c.detail for c in cases if c.name.startswith("klein_eval"))
    ok = report(13, "Frobenius data axioms; Klein evaluation = TFT on closed words <= 6", ok,
                f"{detail}; {words.split(';')[0]}", elapsed, 60)
    assert ok


def test_criterion_14_verify_all():
    runs = []
    for _ in range(2):
        start = time.perf_counter()
        proc = subprocess.run([sys.executable, "-m", "cobloc.cli", "verify", "all"],
                              capture_output=True, text=True)
        runs.append((proc.returncode, proc.stdout, time.perf_counter() - start))
    slowest = max(r[2] for r in runs)
    same = runs[0][:2] == runs[1][:2]
    suites_seen = sum(1 for line in runs[0][1].splitlines() if line.split(":")[0] in suites.SUITES)
    ok = report(14, "verify all exits 0, deterministic", all(r[0] == 0 for r in runs) and same
                and suites_seen == len(suites.SUITES),
                f"{suites_seen} suites, identical output: {same}", slowest, 120)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
