"""Compare the compiled and pure-Python gluing kernels.

    python3 benchmarks/bench_kernels.py [--repeat N] [--width W]

Times the raw kernels on recorded inputs and end-to-end composition of wide
cobordisms with each backend swapped in.
"""
import argparse
import random
import timeit

from cobloc import _kernels_py, catlib, kernels
from cobloc.glue import compose, tensor_all

try:
    from cobloc import _kernels as _kernels_c
except ImportError:
    _kernels_c = None


def build_case(width):
    blocks_f = [catlib.generator("pants_out"), catlib.generator("opants_out")] * width
    blocks_g = [catlib.generator("pants_in"), catlib.generator("opants_in")] * width
    f = tensor_all(*blocks_f)
    g = tensor_all(*blocks_g)
    return f, g


def record_inputs(f, g):
    """Capture the kernel arguments used by one composition."""
    seen = {}
    pu, tc = kernels.parity_union, kernels.trace_cycles

    def rec_pu(*a):
        seen["pu"] = a
        return pu(*a)

    def rec_tc(*a):
        seen["tc"] = a
        return tc(*a)

    kernels.parity_union, kernels.trace_cycles = rec_pu, rec_tc
    try:
        compose(f, g)
    finally:
        kernels.parity_union, kernels.trace_cycles = pu, tc
    return seen["pu"], seen["tc"]


def random_union(n, m, seed=0):
    rng = random.Random(seed)
    edges = []
    for _ in range(m):
        edges += [rng.randrange(n), rng.randrange(n), rng.randrange(2)]
    return n, edges


def timed(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def with_backend(mod, fn):
    pu, tc = kernels.parity_union, kernels.trace_cycles
    kernels.parity_union, kernels.trace_cycles = mod.parity_union, mod.trace_cycles
    try:
        return fn()
    finally:
        kernels.parity_union, kernels.trace_cycles = pu, tc


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--width", type=int, default=200)
    args = ap.parse_args(argv)

    f, g = build_case(args.width)
    pu_args, tc_args = record_inputs(f, g)
    ru_args = random_union(20000, 30000)
    backends = [("python", _kernels_py)] + ([("cython", _kernels_c)] if _kernels_c else [])
    if _kernels_c is None:
        print("compiled kernels not built; timing the pure-Python backend only")

    rows = []
    for label, make in [
        ("parity_union (recorded)", lambda m: lambda: m.parity_union(*pu_args)),
        ("parity_union (random 20k)", lambda m: lambda: m.parity_union(*ru_args)),
        ("trace_cycles (recorded)", lambda m: lambda: m.trace_cycles(*tc_args)),
        (f"compose width={args.width}", lambda m: lambda: with_backend(m, lambda: compose(f, g))),
    ]:
        times = {name: timed(make(mod), args.repeat) for name, mod in backends}
        rows.append((label, times))

    for name, mod in backends[1:]:
        assert mod.parity_union(*ru_args) == _kernels_py.parity_union(*ru_args)
        assert mod.trace_cycles(*tc_args) == _kernels_py.trace_cycles(*tc_args)

    header = f"{'kernel':<28}" + "".join(f"{n:>12}" for n, _ in backends)
    if len(backends) > 1:
        header += f"{'speedup':>10}"
    print(header)
    for label, times in rows:
        line = f"{label:<28}" + "".join(f"{times[n] * 1e3:>10.2f}ms" for n, _ in backends)
        if len(backends) > 1:
            line += f"{times['python'] / times['cython']:>9.1f}x"
        print(line)


if __name__ == "__main__":
    main()
