"""Exact Laurent polynomials in the symbols mu0, mu1, ... over the rationals.

A :class:`Scalar` is a finite sum of terms ``coeff * mu_i1^e1 * mu_i2^e2 ...``
with rational coefficients and integer exponents.  Monomials (single terms)
are units; sums can be added and multiplied but only monomials inverted.
"""
from fractions import Fraction


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted((i, e) for i, e in exps.items() if e))


class Scalar:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        # terms: dict monomial -> Fraction, monomial = sorted tuple of (index, exponent)
        self.terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @classmethod
    def const(cls, value):
        value = Fraction(value)
        return cls({(): value}) if value else cls()

    @classmethod
    def symbol(cls, index, exponent=1):
        if exponent == 0:
            return cls.const(1)
        return cls({((index, exponent),): Fraction(1)})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, Scalar):
            return x
        if isinstance(x, (int, Fraction)):
            return cls.const(x)
        if isinstance(x, str):
            return parse_scalar(x)
        raise TypeError(f"cannot make a scalar from {x!r}")

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def is_constant(self):
        return all(m == () for m in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.terms.get((), Fraction(0))

    def __add__(self, other):
        other = Scalar.coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self):
        return Scalar({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-Scalar.coerce(other))

    def __rsub__(self, other):
        return Scalar.coerce(other) - self

    def __mul__(self, other):
        other = Scalar.coerce(other)
        if len(self.terms) == 1 and len(other.terms) == 1:
            (m1, c1), = self.terms.items()
            (m2, c2), = other.terms.items()
            return Scalar({_mono_mul(m1, m2): c1 * c2})
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = _mono_mul(m1, m2)
                out[m] = out.get(m, 0) + c1 * c2
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self):
        if not self.is_monomial():
            raise ZeroDivisionError(f"{self} is not an invertible monomial")
        (m, c), = self.terms.items()
        return Scalar({tuple((i, -e) for i, e in m): 1 / c})

    def __truediv__(self, other):
        return self * Scalar.coerce(other).inverse()

    def __rtruediv__(self, other):
        return Scalar.coerce(other) * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        if self.is_monomial():
            (m, c), = self.terms.items()
            return Scalar({tuple((i, e * n) for i, e in m) if n else (): c ** n})
        out = Scalar.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, str)):
            other = Scalar.coerce(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def substitute(self, values):
        """Evaluate with ``values[i]`` (a Fraction) for ``mu_i``; missing symbols stay symbolic."""
        out = Scalar()
        for m, c in self.terms.items():
            term = Scalar.const(c)
            for i, e in m:
                if i in values:
                    term = term * Scalar.const(Fraction(values[i]) ** e)
                else:
                    term = term * Scalar.symbol(i, e)
            out = out + term
        return out

    def __repr__(self):
        return f"Scalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (len(m), m)):
            c = self.terms[m]
            mono = " ".join(f"mu{i}" if e == 1 else f"mu{i}^{e}" for i, e in m)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c} {mono}")
        text = " + ".join(parts)
        return text.replace("+ -", "- ")


ONE = Scalar.const(1)
ZERO = Scalar()


def mu(i, exponent=1):
    return Scalar.symbol(i, exponent)


def parse_scalar(text):
    """Parse a rational (``3``, ``-2/5``) or a monomial such as ``mu0^-2 mu2^2``."""
    text = text.strip()
    try:
        return Scalar.const(Fraction(text))
    except ValueError:
        pass
    out = Scalar.const(1)
    for tok in text.split():
        if tok.startswith("mu"):
            base, _, exp = tok[2:].partition("^")
            out = out * Scalar.symbol(int(base), int(exp) if exp else 1)
        else:
            out = out * Scalar.const(Fraction(tok))
    return out
