"""Expression language for cobordisms.

Grammar (``o`` and ``*`` are ASCII spellings of ``∘`` and ``⊗``)::

    expr   := tensor { "∘" tensor }          right-associative, "g ∘ f" is g after f
    tensor := atom { "⊗" atom }              left-associative
    atom   := NAME
            | "id" "(" INT "," INT ")"
            | "inv" "(" expr ")"
            | "p" "(" INT ")" | "tau" "(" INT ")"
            | "conn" "(" INT "," INT "," INT ";" obj "->" obj ")"
            | "(" expr ")"
    obj    := INT | INT ":" INT             circles, or circles:intervals

Printing always produces ASCII and round-trips through :func:`parse`.
"""
import re
from dataclasses import dataclass
from functools import lru_cache

from . import catlib
from .errors import CobSyntaxError, TypeMismatch, UnknownGenerator
from .glue import compose, tensor
from .surface import ObjectSig, identity


@dataclass(frozen=True)
class Gen:
    name: str
    args: tuple = ()


@dataclass(frozen=True)
class Id:
    sig: ObjectSig


@dataclass(frozen=True)
class Compose:
    after: object
    before: object


@dataclass(frozen=True)
class Tensor:
    left: object
    right: object


@dataclass(frozen=True)
class Inv:
    expr: object


PARAMETRIC = ("conn", "p", "tau")

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r\n]+)
  | (?P<arrow>->)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op>[∘⊗*(),;:])
""", re.VERBOSE)


def _tokenize(text):
    tokens = []
    pos = 0
    line, line_start = 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise CobSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        value = m.group()
        col = pos - line_start + 1
        if kind == "ws":
            for i, ch in enumerate(value):
                if ch == "\n":
                    line += 1
                    line_start = pos + i + 1
        else:
            if kind == "name" and value == "o":
                kind, value = "op", "∘"
            elif kind == "op" and value == "*":
                value = "⊗"
            tokens.append((kind, value, line, col))
        pos = m.end()
    tokens.append(("end", "", line, pos - line_start + 1))
    return tokens


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise CobSyntaxError(f"expected {want!r}, got {got!r}", tok[2], tok[3])
        self.i += 1
        return tok

    def at(self, value):
        tok = self.tokens[self.i]
        return tok[0] in ("op", "arrow") and tok[1] == value

    def parse(self):
        e = self.expr()
        self.take("end")
        return e

    def expr(self):
        first = self.tensor()
        if self.at("∘"):
            self.take()
            return Compose(first, self.expr())
        return first

    def tensor(self):
        e = self.atom()
        while self.at("⊗"):
            self.take()
            e = Tensor(e, self.atom())
        return e

    def integer(self):
        return int(self.take("int")[1])

    def obj(self):
        m = self.integer()
        n = 0
        if self.at(":"):
            self.take()
            n = self.integer()
        return ObjectSig(m, n)

    def atom(self):
        tok = self.peek()
        if self.at("("):
            self.take()
            e = self.expr()
            self.take("op", ")")
            return e
        if tok[0] != "name":
            raise CobSyntaxError(f"expected a generator name, got {tok[1] or 'end of input'!r}",
                                 tok[2], tok[3])
        self.take()
        name = tok[1]
        if name == "id":
            self.take("op", "(")
            m = self.integer()
            self.take("op", ",")
            n = self.integer()
            self.take("op", ")")
            return Id(ObjectSig(m, n))
        if name == "inv":
            self.take("op", "(")
            e = self.expr()
            self.take("op", ")")
            return Inv(e)
        if name in ("p", "tau"):
            self.take("op", "(")
            k = self.integer()
            self.take("op", ")")
            return Gen(name, (k,))
        if name == "conn":
            self.take("op", "(")
            g = self.integer()
            self.take("op", ",")
            k = self.integer()
            self.take("op", ",")
            w = self.integer()
            self.take("op", ";")
            src = self.obj()
            self.take("arrow")
            tgt = self.obj()
            self.take("op", ")")
            return Gen("conn", (g, k, w, src, tgt))
        if name not in catlib.GENERATOR_NAMES:
            raise CobSyntaxError(f"unknown generator {name!r}", tok[2], tok[3])
        return Gen(name)


def parse(text):
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    return _Parser(text).parse()


def _obj_text(sig):
    return str(sig.circles) if sig.intervals == 0 else f"{sig.circles}:{sig.intervals}"


def pretty(e):
    if isinstance(e, Gen):
        if e.name == "conn":
            g, k, w, src, tgt = e.args
            return f"conn({g},{k},{w}; {_obj_text(src)}->{_obj_text(tgt)})"
        if e.args:
            return f"{e.name}({','.join(str(a) for a in e.args)})"
        return e.name
    if isinstance(e, Id):
        return f"id({e.sig.circles},{e.sig.intervals})"
    if isinstance(e, Inv):
        return f"inv({pretty(e.expr)})"
    if isinstance(e, Tensor):
        left = pretty(e.left)
        if isinstance(e.left, Compose):
            left = f"({left})"
        right = pretty(e.right)
        if isinstance(e.right, (Compose, Tensor)):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(e, Compose):
        after = pretty(e.after)
        if isinstance(e.after, Compose):
            after = f"({after})"
        return f"{after} o {pretty(e.before)}"
    raise TypeError(f"not an expression: {e!r}")


@lru_cache(maxsize=4096)
def gen_value(e):
    """Cobordism for a ``Gen`` node."""
    if e.name == "conn":
        g, k, w, src, tgt = e.args
        return catlib.connected(g, k, w, src, tgt)
    if e.name == "p":
        return catlib.connecting(e.args[0])
    if e.name == "tau":
        return catlib.tau(e.args[0])
    if e.args:
        raise UnknownGenerator(f"generator {e.name!r} takes no arguments")
    return catlib.generator(e.name)


def typeof(e):
    """``(source, target)`` of a well-typed expression; raises :class:`TypeMismatch`."""
    if isinstance(e, Gen):
        c = gen_value(e)
        return c.source, c.target
    if isinstance(e, Id):
        return e.sig, e.sig
    if isinstance(e, Inv):
        s, t = typeof(e.expr)
        return t, s
    if isinstance(e, Tensor):
        s1, t1 = typeof(e.left)
        s2, t2 = typeof(e.right)
        return s1 + s2, t1 + t2
    if isinstance(e, Compose):
        s1, t1 = typeof(e.before)
        s2, t2 = typeof(e.after)
        if t1 != s2:
            raise TypeMismatch(t1, s2, f"'{pretty(e)}'")
        return s1, t2
    raise TypeError(f"not an expression: {e!r}")


def eval_expr(e):
    """Fold an Inv-free expression into a canonical cobordism."""
    if isinstance(e, Gen):
        return gen_value(e)
    if isinstance(e, Id):
        return identity(e.sig)
    if isinstance(e, Tensor):
        return tensor(eval_expr(e.left), eval_expr(e.right))
    if isinstance(e, Compose):
        before = eval_expr(e.before)
        after = eval_expr(e.after)
        if before.target != after.source:
            raise TypeMismatch(before.target, after.source, f"'{pretty(e)}'")
        return compose(before, after)
    if isinstance(e, Inv):
        raise TypeMismatch("inv(...)", "cobordism", "evaluation (inverses live only in localisations)")
    raise TypeError(f"not an expression: {e!r}")


def generators_in(e):
    if isinstance(e, Gen):
        yield e
    elif isinstance(e, (Compose,)):
        yield from generators_in(e.before)
        yield from generators_in(e.after)
    elif isinstance(e, Tensor):
        yield from generators_in(e.left)
        yield from generators_in(e.right)
    elif isinstance(e, Inv):
        yield from generators_in(e.expr)


def size(e):
    return sum(1 for _ in generators_in(e))
