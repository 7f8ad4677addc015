import random
import sys

from hypothesis import settings, strategies as st

from cobloc import catlib, corpus
from cobloc.expr import eval_expr, typeof

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def expressions(draw, names=catlib.GENERATOR_NAMES, closed=False, max_size=10):
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    return corpus.random_expression(rng, draw(st.integers(1, max_size)), names, closed)


@st.composite
def cobordisms(draw, names=catlib.GENERATOR_NAMES, closed=False, max_size=10):
    return eval_expr(draw(expressions(names, closed, max_size)))


@st.composite
def composable(draw, length=2, names=catlib.GENERATOR_NAMES, closed=False, max_size=8):
    """``length`` cobordisms f1, f2, ... with target(f_i) = source(f_{i+1})."""
    rng = random.Random(draw(st.integers(0, 2**32 - 1)))
    e = corpus.random_expression(rng, draw(st.integers(1, max_size)), names, closed)
    out = [eval_expr(e)]
    for _ in range(length - 1):
        _, t = typeof(e) if len(out) == 1 else (None, out[-1].target)
        e = corpus.random_from(rng, t, draw(st.integers(1, max_size)), names)
        out.append(eval_expr(e))
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "ACCEPTANCE_LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
