"""Integer-valued functors and invertible field theories on the closed category.

A functor to the integers is fixed by ``b0`` (value on the projective
plane) and ``b_k`` (value on ``p_k``, k discs); an invertible field theory
by non-zero scalars ``mu0, mu1, ...`` via

    F(Sigma: n -> m) = mu_m^m * mu_n^-n * mu0^-theta(Sigma).
"""
from typing import NamedTuple

from . import catlib
from .errors import NotInCategory
from .scalars import ONE, Scalar
from .surface import theta


class BSequence:
    """Integers ``b_0, b_1, ...``; ``default(k)`` supplies indices not listed."""

    def __init__(self, values, default=None):
        self.values = dict(enumerate(values)) if isinstance(values, (list, tuple)) else dict(values)
        self.default = default

    @classmethod
    def linear(cls, b0, b1):
        """``b_k = k * b1`` for k >= 1: the strict monoidal case."""
        return cls({0: b0}, default=lambda k: k * b1)

    def __getitem__(self, k):
        if k in self.values:
            return self.values[k]
        if self.default is None:
            raise KeyError(f"b_{k} not given")
        return self.default(k)


class MuSequence:
    """Non-zero scalars ``mu_0, mu_1, ...``."""

    def __init__(self, values=None, default=None):
        self.values = {}
        for k, v in (dict(enumerate(values)) if isinstance(values, (list, tuple))
                     else dict(values or {})).items():
            v = Scalar.coerce(v)
            if v.is_zero():
                raise ValueError(f"mu_{k} must be non-zero")
            self.values[k] = v
        self.default = default

    @classmethod
    def symbolic(cls):
        """``mu_k`` is the formal symbol ``mu<k>``."""
        return cls({}, default=lambda k: Scalar.symbol(k))

    @classmethod
    def cor45(cls, mu0):
        """``mu0`` as given and ``mu_k = 1`` for k >= 1."""
        return cls({0: mu0}, default=lambda k: ONE)

    def __getitem__(self, k):
        if k in self.values:
            return self.values[k]
        if self.default is None:
            raise KeyError(f"mu_{k} not given")
        return self.default(k)


def parse_mu(spec):
    """``symbolic`` or ``mu0=2,mu1=1/3,...``; unlisted indices default to 1."""
    spec = spec.strip()
    if spec == "symbolic":
        return MuSequence.symbolic()
    values = {}
    for part in filter(None, (p.strip() for p in spec.split(","))):
        key, _, val = part.partition("=")
        key = key.strip()
        if not key.startswith("mu") or not val:
            raise ValueError(f"bad mu entry {part!r}; expected muK=value")
        values[int(key[2:])] = Scalar.coerce(val.strip())
    return MuSequence(values, default=lambda k: ONE)


def _closed_ends(c):
    if not catlib.in_category(c, "N"):
        raise NotInCategory(f"{c} is not a morphism of N")
    return c.source.circles, c.target.circles


def functor_Z(b, c):
    """``b_{k'} - b_k - b_0 * theta`` for ``c: k -> k'``, dropping terms with index 0."""
    k, k2 = _closed_ends(c)
    value = -b[0] * theta(c)
    if k2:
        value += b[k2]
    if k:
        value -= b[k]
    return value


def is_strict_monoidal_b(b, kmax):
    if kmax < 2:
        raise ValueError("kmax must be at least 2")
    return all(b[k] == k * b[1] for k in range(1, kmax + 1))


def is_additive_on_discs(b, kmax):
    """``F(p_{k+k'}) = F(p_k) + F(p_k')`` for all k, k' >= 1 with k + k' <= kmax."""
    return all(
        functor_Z(b, catlib.connecting(k + k2)) == functor_Z(b, catlib.connecting(k)) + functor_Z(b, catlib.connecting(k2))
        for k in range(1, kmax) for k2 in range(1, kmax - k + 1))


def tft_eval(mu, c):
    n, m = _closed_ends(c)
    return mu[m] ** m * mu[n] ** (-n) * mu[0] ** (-theta(c))


def f2(mu, n, n2):
    """Monoidal structure scalar ``F_2(n, n')``."""
    return mu[n] ** (-n) * mu[n2] ** (-n2) * mu[n + n2] ** (n + n2)


def monoidal_square(mu, s1, s2):
    """Both sides of ``F2(m,m') F(s1) F(s2) = F(s1 (x) s2) F2(n,n')``."""
    from .glue import tensor
    lhs = f2(mu, s1.target.circles, s2.target.circles) * (tft_eval(mu, s1) * tft_eval(mu, s2))
    rhs = tft_eval(mu, tensor(s1, s2)) * f2(mu, s1.source.circles, s2.source.circles)
    return lhs, rhs


def symmetry_square(mu, a, b):
    """Both sides of ``F(gamma_{a,b}) F2(a,b) = F2(b,a)`` (target symmetry is the identity scalar)."""
    gamma = symmetry(a, b)
    return tft_eval(mu, gamma) * f2(mu, a, b), f2(mu, b, a)


def symmetry(a, b):
    """Block swap ``a + b -> b + a`` on circles."""
    from .surface import Cobordism, MarkedCircle
    comps = []
    for i in range(a):
        comps.append((0, 0, [MarkedCircle(catlib.sc(i), 0), MarkedCircle(catlib.tc(b + i), 0)]))
    for j in range(b):
        comps.append((0, 0, [MarkedCircle(catlib.sc(a + j), 0), MarkedCircle(catlib.tc(j), 0)]))
    return Cobordism.build((a + b, 0), (a + b, 0), comps)


class NatTrans(NamedTuple):
    components: tuple        # tau_0 .. tau_nmax
    monoidal_ok: bool        # tau_{n+n'} F2(n,n') = F2'(n,n') tau_n tau_n'
    natural_ok: bool         # tau_m F(S) = F'(S) tau_n on the sample morphisms


def nat_trans(mu, mu2, nmax=6, samples=None):
    """The based monoidal transformation ``F^mu -> F^mu2`` or None if mu0 differs."""
    if mu[0] != mu2[0]:
        return None
    taus = tuple(ONE if n == 0 else (mu2[n] / mu[n]) ** n for n in range(nmax + 1))
    monoidal = all(
        taus[n + n2] * f2(mu, n, n2) == f2(mu2, n, n2) * taus[n] * taus[n2]
        for n in range(nmax + 1) for n2 in range(nmax + 1 - n))
    if samples is None:
        samples = default_samples(nmax)
    natural = all(
        taus[s.target.circles] * tft_eval(mu, s) == tft_eval(mu2, s) * taus[s.source.circles]
        for s in samples)
    return NatTrans(taus, monoidal, natural)


def default_samples(nmax=4):
    out = [catlib.projective_plane(), catlib.sphere()]
    out += [catlib.connecting(k) for k in range(1, nmax + 1)]
    out += [catlib.generator(n) for n in catlib.CLOSED_GENERATORS]
    out += [catlib.tau(n) for n in range(nmax)]
    return out


def tft_fold(mu, e):
    """Evaluate an expression node by node: products along composition and
    the monoidal structure ``F2`` across disjoint unions."""
    from .expr import Compose, Gen, Id, Tensor, gen_value, typeof
    if isinstance(e, Gen):
        return tft_eval(mu, gen_value(e))
    if isinstance(e, Id):
        return ONE
    if isinstance(e, Compose):
        return tft_fold(mu, e.after) * tft_fold(mu, e.before)
    if isinstance(e, Tensor):
        (n1, m1), (n2, m2) = typeof(e.left), typeof(e.right)
        inner = tft_fold(mu, e.left) * tft_fold(mu, e.right)
        return f2(mu, m1.circles, m2.circles) * inner / f2(mu, n1.circles, n2.circles)
    raise TypeError(f"cannot evaluate {e!r}")
