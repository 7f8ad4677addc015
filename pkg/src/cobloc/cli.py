"""Command line interface ``surfc``."""
import argparse
import sys
import time

from . import monoid, suites, tft
from .errors import CobError
from .expr import eval_expr, parse
from .localise import loc_class
from .surface import euler_char, from_json, omega, theta, to_json


def _cobordism(text):
    return eval_expr(parse(text))


def cmd_compose(args):
    c = _cobordism(args.expr)
    print(c)
    print(f"chi={euler_char(c)} theta={theta(c)} omega={omega(c)}")
    return 0


def cmd_theta(args):
    print(theta(_cobordism(args.expr)))
    return 0


def cmd_loc(args):
    print(loc_class(_cobordism(args.expr), args.cat))
    return 0


def cmd_tft(args):
    print(tft.tft_eval(tft.parse_mu(args.mu), _cobordism(args.expr)))
    return 0


def cmd_gc(args):
    with open(args.file, encoding="utf-8") as fh:
        p = monoid.parse_presentation(fh.read())
    g = monoid.grothendieck(p)
    print(f"group: {g.describe()}")
    print(f"invariant factors: {list(g.invariant_factors)}")
    for name in p.names:
        print(f"  {name} -> {g.map[name]}")
    return 0


def cmd_serialize(args):
    sys.stdout.write(to_json(_cobordism(args.expr)))
    return 0


def cmd_deserialize(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    c = from_json(text)
    if args.canonical:
        sys.stdout.write(to_json(c))
    else:
        print(c)
    return 0


def cmd_verify(args):
    start = time.perf_counter()
    failed = 0
    first = None
    for name, cases in suites.run(args.suite):
        bad = [c for c in cases if not c.ok]
        failed += len(bad)
        print(f"{name}: {len(cases) - len(bad)}/{len(cases)} passed"
              + ("" if not bad else f", {len(bad)} FAILED"))
        if args.verbose:
            for c in cases:
                print(f"  [{'ok' if c.ok else 'FAIL'}] {c.name}")
        if bad and first is None:
            first = (name, bad[0])
    if first:
        name, case = first
        print(f"first failure in {name}: {case.name}")
        print(f"  {case.detail}")
    if args.timing:
        print(f"elapsed {time.perf_counter() - start:.1f}s")
    return 1 if failed else 0


def build_parser():
    p = argparse.ArgumentParser(prog="surfc", description="Cobordism engine, localisations and invertible TFTs.")
    sub = p.add_subparsers(dest="verb", required=True)

    s = sub.add_parser("compose", help="evaluate an expression to its canonical cobordism")
    s.add_argument("expr")
    s.set_defaults(func=cmd_compose)

    s = sub.add_parser("theta", help="print theta of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_theta)

    s = sub.add_parser("loc", help="class in the localisation of a subcategory")
    s.add_argument("--cat", required=True)
    s.add_argument("expr")
    s.set_defaults(func=cmd_loc)

    s = sub.add_parser("tft", help="evaluate the invertible TFT F^mu")
    s.add_argument("--mu", required=True, help="'symbolic' or 'mu0=2,mu1=1,...'")
    s.add_argument("expr")
    s.set_defaults(func=cmd_tft)

    s = sub.add_parser("gc", help="group completion of a monoid presentation file")
    s.add_argument("file")
    s.set_defaults(func=cmd_gc)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=list(suites.SUITES) + ["all"])
    s.add_argument("-v", "--verbose", action="store_true")
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("serialize", help="print the JSON document of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_serialize)

    s = sub.add_parser("deserialize", help="read a JSON document ('-' for stdin)")
    s.add_argument("file")
    s.add_argument("--canonical", action="store_true", help="re-emit canonical JSON")
    s.set_defaults(func=cmd_deserialize)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (CobError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
