import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from cobloc import _kernels_py, catlib, corpus, kernels
from cobloc.expr import eval_expr
from cobloc.glue import compose

try:
    from cobloc import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

needs_ext = pytest.mark.skipif(_kernels_c is None, reason="compiled kernels not built")


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")
    forced = os.environ.get("COBLOC_PURE", "") in ("1", "true", "yes")
    assert kernels.BACKEND == ("cython" if _kernels_c is not None and not forced else "python")


def test_pure_override_selects_python():
    out = subprocess.run([sys.executable, "-c", "import cobloc; print(cobloc.BACKEND)"],
                         env={**os.environ, "COBLOC_PURE": "1"}, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


def test_parity_union_small():
    root, parity, bad = _kernels_py.parity_union(4, [0, 1, 1, 1, 2, 0, 2, 0, 1])
    assert root[0] == root[1] == root[2] != root[3]
    assert parity[1] ^ parity[0] == 1
    assert bad[0] == 0 and bad[3] == 0
    root, parity, bad = _kernels_py.parity_union(3, [0, 1, 1, 1, 2, 1, 2, 0, 1])
    assert bad == [1, 1, 1]


@st.composite
def union_problems(draw):
    n = draw(st.integers(1, 40))
    m = draw(st.integers(0, 60))
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    edges = []
    for _ in range(m):
        edges += [rng.randrange(n), rng.randrange(n), rng.randrange(2)]
    return n, edges


@given(union_problems())
def test_parity_union_solution_is_consistent(problem):
    n, edges = problem
    root, parity, bad = _kernels_py.parity_union(n, edges)
    for i in range(0, len(edges), 3):
        a, b, p = edges[i:i + 3]
        assert root[a] == root[b]
        if not bad[a]:
            assert parity[a] ^ parity[b] == p


@needs_ext
@given(union_problems())
def test_parity_union_backends_agree(problem):
    assert _kernels_c.parity_union(*problem) == _kernels_py.parity_union(*problem)


@needs_ext
def test_trace_cycles_backends_agree_on_real_gluings():
    recorded = []
    original = kernels.trace_cycles

    def spy(*args):
        recorded.append(args)
        return original(*args)

    kernels.trace_cycles = spy
    try:
        for e1, e2 in corpus.composable_pairs(7, 150, 8, catlib.GENERATOR_NAMES):
            compose(eval_expr(e1), eval_expr(e2))
    finally:
        kernels.trace_cycles = original
    assert recorded
    for args in recorded:
        assert _kernels_c.trace_cycles(*args) == _kernels_py.trace_cycles(*args)


def test_both_backends_give_equal_compositions():
    pairs = [(eval_expr(a), eval_expr(b)) for a, b in corpus.composable_pairs(8, 100, 8)]
    native = [compose(f, g) for f, g in pairs]
    saved = kernels.parity_union, kernels.trace_cycles
    kernels.parity_union, kernels.trace_cycles = _kernels_py.parity_union, _kernels_py.trace_cycles
    try:
        pure = [compose(f, g) for f, g in pairs]
    finally:
        kernels.parity_union, kernels.trace_cycles = saved
    assert native == pure
