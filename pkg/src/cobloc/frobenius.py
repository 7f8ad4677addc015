"""Commutative Frobenius algebras with involution and element U, and their
evaluation on closed-sector expressions.

Vectors are tuples of :class:`Scalar` in a basis ``a_0 .. a_{d-1}``.  A
morphism ``n -> m`` evaluates to a ``d^m x d^n`` matrix (tuple of rows);
tensor factors are ordered left to right, the leftmost most significant.
"""
from itertools import product
from typing import NamedTuple

from .errors import OpenSectorGenerator, SingularPairing, UnknownGenerator
from .expr import Compose, Gen, Id, Inv, Tensor
from . import catlib
from .scalars import ONE, ZERO, Scalar

# -- exact matrix helpers ---------------------------------------------------------


def mat(rows):
    return tuple(tuple(Scalar.coerce(x) for x in row) for row in rows)


def eye(n):
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def matmul(a, b):
    """``a @ b``; ``a`` is r x s, ``b`` is s x t."""
    if not a or not b:
        return tuple(() for _ in a) if a else ()
    cols = list(zip(*b))
    out = []
    for row in a:
        new = []
        for col in cols:
            acc = ZERO
            for x, y in zip(row, col):
                if x.terms and y.terms:
                    acc = acc + x * y
            new.append(acc)
        out.append(tuple(new))
    return tuple(out)


def kron(a, b):
    return tuple(
        tuple(x * y for x in ra for y in rb)
        for ra in a for rb in b)


def transpose(a):
    return tuple(zip(*a))


def apply(m, v):
    return tuple(sum((x * y for x, y in zip(row, v)), ZERO) for row in m)


def invert(m):
    """Gauss-Jordan inverse; pivots must be units (constants or monomials)."""
    n = len(m)
    work = [list(row) + list(e) for row, e in zip(m, eye(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col].is_monomial()), None)
        if pivot is None:
            if any(not work[r][col].is_zero() for r in range(col, n)):
                raise SingularPairing(f"column {col} has no invertible pivot")
            raise SingularPairing("pairing matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        inv = work[col][col].inverse()
        work[col] = [x * inv for x in work[col]]
        for r in range(n):
            if r != col and not work[r][col].is_zero():
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], work[col])]
    return tuple(tuple(row[n:]) for row in work)


# -- the algebra ------------------------------------------------------------------


class FrobeniusData(NamedTuple):
    dim: int
    unit: tuple           # vector
    mult: tuple           # mult[i][j] = vector of a_i a_j
    pairing: tuple        # pairing[i][j] = <a_i, a_j>
    involution: tuple     # matrix J, x* = J x
    U: tuple              # vector

    @classmethod
    def make(cls, dim, unit, mult, pairing, involution, U):
        vec = lambda v: tuple(Scalar.coerce(x) for x in v)
        return cls(dim, vec(unit),
                   tuple(tuple(vec(v) for v in row) for row in mult),
                   mat(pairing), mat(involution), vec(U))

    @property
    def alpha(self):
        """Copairing coefficients, the inverse of the pairing matrix."""
        return invert(self.pairing)

    def basis(self, i):
        return tuple(ONE if j == i else ZERO for j in range(self.dim))

    def multiply(self, x, y):
        out = [ZERO] * self.dim
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                c = xi * yj
                for k, v in enumerate(self.mult[i][j]):
                    if not v.is_zero():
                        out[k] = out[k] + c * v
        return tuple(out)

    def pair(self, x, y):
        return sum((xi * self.pairing[i][j] * yj
                    for i, xi in enumerate(x) for j, yj in enumerate(y)
                    if not xi.is_zero() and not yj.is_zero()), ZERO)

    def star(self, x):
        return apply(self.involution, x)


def cor45_algebra(mu0):
    """One-dimensional data: pairing ``mu0^2 xy``, trivial involution, ``U = mu0^-1``."""
    mu0 = Scalar.coerce(mu0)
    if mu0.is_zero():
        raise ValueError("mu0 must be non-zero")
    return FrobeniusData.make(1, [1], [[[1]]], [[mu0 * mu0]], [[1]], [mu0.inverse()])


def group_algebra_z2(scale=1, U=(1, 0), swap=False):
    """Group algebra of Z/2 with pairing ``scale * <coefficient of 1 in xy>``.

    ``swap`` selects the involution g -> g (False) or the sign change g -> -g.
    """
    scale = Scalar.coerce(scale)
    mult = [[[1, 0], [0, 1]], [[0, 1], [1, 0]]]
    pairing = [[scale, 0], [0, scale]]
    inv = [[1, 0], [0, -1]] if swap else [[1, 0], [0, 1]]
    return FrobeniusData.make(2, [1, 0], mult, pairing, inv, U)


def frobenius_validate(fd):
    """List of ``(axiom, passed)`` pairs; raises SingularPairing if alpha does not exist."""
    d = fd.dim
    alpha = fd.alpha
    B = [fd.basis(i) for i in range(d)]
    m = fd.multiply
    idx = range(d)
    report = [
        ("pairing non-degenerate", True),
        ("commutative", all(m(B[i], B[j]) == m(B[j], B[i]) for i in idx for j in idx)),
        ("associative", all(m(m(B[i], B[j]), B[k]) == m(B[i], m(B[j], B[k]))
                            for i in idx for j in idx for k in idx)),
        ("unital", all(m(fd.unit, B[i]) == B[i] for i in idx)),
        ("frobenius <xy,z> = <x,yz>", all(fd.pair(m(B[i], B[j]), B[k]) == fd.pair(B[i], m(B[j], B[k]))
                                          for i in idx for j in idx for k in idx)),
        ("involution squares to identity", matmul(fd.involution, fd.involution) == eye(d)),
        ("involution multiplicative", all(fd.star(m(B[i], B[j])) == m(fd.star(B[i]), fd.star(B[j]))
                                          for i in idx for j in idx)),
        ("involution preserves pairing", all(fd.pair(fd.star(B[i]), fd.star(B[j])) == fd.pair(B[i], B[j])
                                             for i in idx for j in idx)),
        ("(aU)* = aU", all(fd.star(m(B[i], fd.U)) == m(B[i], fd.U) for i in idx)),
    ]
    rhs = tuple([ZERO] * d)
    for i in idx:
        for j in idx:
            if not alpha[i][j].is_zero():
                rhs = tuple(x + alpha[i][j] * y for x, y in zip(rhs, m(B[i], fd.star(B[j]))))
    report.append(("U^2 = sum alpha_ij a_i a_j*", m(fd.U, fd.U) == rhs))
    return report


def validation_passes(report):
    return all(ok for _, ok in report)


# -- evaluation -------------------------------------------------------------------


def _swap(d):
    rows = []
    for i, j in product(range(d), repeat=2):
        rows.append(tuple(ONE if (k, l) == (j, i) else ZERO for k, l in product(range(d), repeat=2)))
    return tuple(rows)


def generator_matrix(fd, name):
    d = fd.dim
    B = [fd.basis(i) for i in range(d)]
    if name == "disc_in":
        return tuple((x,) for x in fd.unit)
    if name == "disc_out":
        return (tuple(fd.pair(B[j], fd.unit) for j in range(d)),)
    if name == "pants_in":
        return tuple(tuple(fd.mult[i][j][k] for i, j in product(range(d), repeat=2)) for k in range(d))
    if name == "pants_out":
        alpha = fd.alpha
        cols = []
        for k in range(d):
            col = [ZERO] * (d * d)
            for i in range(d):
                prod_ki = fd.multiply(B[k], B[i])
                for p in range(d):
                    if prod_ki[p].is_zero():
                        continue
                    for q in range(d):
                        col[p * d + q] = col[p * d + q] + alpha[i][q] * prod_ki[p]
            cols.append(col)
        return transpose(cols)
    if name == "cyl":
        return eye(d)
    if name == "sym_cc":
        return _swap(d)
    if name == "twist_circle":
        return fd.involution
    if name == "mobius":
        return tuple((x,) for x in fd.U)
    if name == "rp2_cyl":
        return transpose([fd.multiply(fd.U, B[j]) for j in range(d)])
    if name in catlib.GENERATOR_NAMES:
        raise OpenSectorGenerator(f"{name} is not a closed-sector generator")
    raise UnknownGenerator(name)


def _power(m, k):
    out = ((ONE,),)
    for _ in range(k):
        out = kron(out, m)
    return out


def klein_eval(fd, e, _cache=None):
    """Matrix of an expression built from closed-sector generators."""
    if _cache is None:
        _cache = {}
    if isinstance(e, Gen):
        if e.name == "p":
            return _power(generator_matrix(fd, "disc_in"), e.args[0])
        if e.name == "tau":
            n = e.args[0]
            if n == 0:
                return generator_matrix(fd, "mobius")
            m = eye(fd.dim)
            pants = generator_matrix(fd, "pants_in")
            for i in range(1, n):
                m = matmul(pants, kron(m, eye(fd.dim)))
            return matmul(generator_matrix(fd, "rp2_cyl"), m)
        if e.name == "conn":
            raise UnknownGenerator("conn(...) must be factored into generators before evaluation")
        if e.name not in _cache:
            _cache[e.name] = generator_matrix(fd, e.name)
        return _cache[e.name]
    if isinstance(e, Id):
        if e.sig.intervals:
            raise OpenSectorGenerator(f"id{tuple(e.sig)} involves intervals")
        return eye(fd.dim ** e.sig.circles)
    if isinstance(e, Tensor):
        return kron(klein_eval(fd, e.left, _cache), klein_eval(fd, e.right, _cache))
    if isinstance(e, Compose):
        return matmul(klein_eval(fd, e.after, _cache), klein_eval(fd, e.before, _cache))
    if isinstance(e, Inv):
        raise OpenSectorGenerator("inv(...) has no Frobenius evaluation")
    raise TypeError(f"not an expression: {e!r}")
