"""Exact arithmetic in real number fields generated by 2*cos(pi/m).

Geometric computations for reflection groups with bond labels other than
2 and 3 need the algebraic number c = 2*cos(pi/m).  Elements of Q(c) are
represented as polynomials in c of degree below deg(minpoly), with
Fraction coefficients, so every operation is exact.  No floating point
is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Coeffs = tuple[Fraction, ...]

_ZERO = Fraction(0)
_ONE = Fraction(1)


@lru_cache(maxsize=None)
def minimal_polynomial_2cos(m: int) -> Coeffs:
    """Monic minimal polynomial of 2*cos(pi/m) over Q.

    Returned as a coefficient tuple (c0, c1, ..., 1) in increasing degree.
    """
    if m < 2:
        raise ValueError(f"bond label must be at least 2, got {m}")
    import sympy

    x = sympy.Symbol("x")
    poly = sympy.minimal_polynomial(2 * sympy.cos(sympy.pi / m), x)
    p = sympy.Poly(poly, x).monic()
    coeffs = [Fraction(str(c)) for c in reversed(p.all_coeffs())]
    return tuple(coeffs)


def _trim(coeffs: Sequence[Fraction]) -> Coeffs:
    i = len(coeffs)
    while i > 0 and coeffs[i - 1] == 0:
        i -= 1
    return tuple(coeffs[:i])


def _poly_divmod(a: Coeffs, b: Coeffs) -> tuple[Coeffs, Coeffs]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quo = [_ZERO] * max(0, len(a) - len(b) + 1)
    inv_lead = 1 / b[-1]
    for i in range(len(a) - len(b), -1, -1):
        factor = rem[i + len(b) - 1] * inv_lead
        if factor == 0:
            continue
        quo[i] = factor
        for j, bj in enumerate(b):
            rem[i + j] -= factor * bj
    return _trim(quo), _trim(rem)


class NumberField:
    """The field Q(c) where c = 2*cos(pi/m), with exact elements.

    Elements are coefficient tuples of length deg(minpoly).  The field
    object supplies arithmetic; elements themselves stay plain tuples so
    they hash and compare structurally.
    """

    def __init__(self, m: int):
        self.m = m
        self.minpoly = minimal_polynomial_2cos(m)
        self.degree = len(self.minpoly) - 1
        if self.degree < 1:
            raise ValueError(f"degenerate minimal polynomial for m={m}")
        self.zero: Coeffs = (_ZERO,) * self.degree
        self.one: Coeffs = (_ONE,) + (_ZERO,) * (self.degree - 1)
        if self.degree == 1:
            self.generator = self.from_rational(-self.minpoly[0])
        else:
            self.generator = (_ZERO, _ONE) + (_ZERO,) * (self.degree - 2)
        # x^k mod minpoly for k up to 2*degree - 2, for fast reduction.
        self._powers: list[Coeffs] = []
        power = [_ONE]
        for _ in range(2 * self.degree - 1):
            self._powers.append(tuple(power) + (_ZERO,) * (self.degree - len(power)))
            power = [_ZERO] + power
            if len(power) > self.degree:
                lead = power.pop()
                power = [c - lead * mc for c, mc in zip(power, self.minpoly[:-1])]

    def from_rational(self, q) -> Coeffs:
        return (Fraction(q),) + (_ZERO,) * (self.degree - 1)

    def add(self, a: Coeffs, b: Coeffs) -> Coeffs:
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a: Coeffs, b: Coeffs) -> Coeffs:
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a: Coeffs) -> Coeffs:
        return tuple(-x for x in a)

    def mul(self, a: Coeffs, b: Coeffs) -> Coeffs:
        d = self.degree
        conv = [_ZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                if bj != 0:
                    conv[i + j] += ai * bj
        out = [_ZERO] * d
        for k, ck in enumerate(conv):
            if ck != 0:
                pk = self._powers[k]
                for t in range(d):
                    out[t] += ck * pk[t]
        return tuple(out)

    def scale(self, a: Coeffs, q: Fraction) -> Coeffs:
        return tuple(x * q for x in a)

    def inv(self, a: Coeffs) -> Coeffs:
        if all(x == 0 for x in a):
            raise ZeroDivisionError("inverse of zero field element")
        # Extended Euclid over Q[x]: find u with u*a = 1 mod minpoly.
        r0, r1 = self.minpoly, _trim(a)
        t0: Coeffs = ()
        t1: Coeffs = (_ONE,)
        while len(r1) > 1:
            q, r = _poly_divmod(r0, r1)
            t = list(t0) + [_ZERO] * max(0, len(q) + len(t1) - 1 - len(t0))
            for i, qi in enumerate(q):
                for j, tj in enumerate(t1):
                    t[i + j] -= qi * tj
            r0, r1 = r1, r
            t0, t1 = t1, _trim(t)
        lead = r1[0]
        result = [c / lead for c in t1]
        result += [_ZERO] * (self.degree - len(result))
        return tuple(result[: self.degree])

    def div(self, a: Coeffs, b: Coeffs) -> Coeffs:
        return self.mul(a, self.inv(b))

    def is_zero(self, a: Coeffs) -> bool:
        return all(x == 0 for x in a)

    def sign(self, a: Coeffs) -> int:
        """Sign of the element under the real embedding c = 2*cos(pi/m) > 0.

        Exact; supported for field degree at most 2, which covers every
        bond label needed here (2, 3, 4, 5, 6).
        """
        if self.degree == 1:
            v = a[0]
            return (v > 0) - (v < 0)
        if self.degree != 2:
            raise NotImplementedError(
                f"exact sign test not implemented for field degree {self.degree}"
            )
        # c is the largest root of x^2 + p*x + q: c = (-p + sqrt(D)) / 2.
        p_, q_ = self.minpoly[1], self.minpoly[0]
        disc = p_ * p_ - 4 * q_
        # a0 + a1*c = A + B*sqrt(D) with A = a0 - a1*p/2, B = a1/2.
        big_a = a[0] - a[1] * p_ / 2
        big_b = a[1] / 2
        if big_b == 0:
            return (big_a > 0) - (big_a < 0)
        if big_a == 0:
            return (big_b > 0) - (big_b < 0)
        if big_a > 0 and big_b > 0:
            return 1
        if big_a < 0 and big_b < 0:
            return -1
        # Opposite signs: compare A^2 with B^2 * D.
        lhs, rhs = big_a * big_a, big_b * big_b * disc
        if lhs == rhs:
            return 0
        if big_a > 0:
            return 1 if lhs > rhs else -1
        return -1 if lhs > rhs else 1


class RationalField:
    """Drop-in field interface over plain Fractions.

    Lets the generic linear algebra below run unchanged on crystallographic
    data where no irrational cosine is needed.
    """

    degree = 1
    m = None

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def from_rational(self, q):
        return Fraction(q)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, a, q):
        return a * q

    def inv(self, a):
        return 1 / a

    def div(self, a, b):
        return a / b

    def is_zero(self, a):
        return a == 0

    def sign(self, a):
        return (a > 0) - (a < 0)


def mat_mul(field, a, b):
    """Product of square matrices given as tuples of rows of field elements."""
    n = len(a)
    return tuple(
        tuple(
            _sum_field(field, [field.mul(a[i][k], b[k][j]) for k in range(n)])
            for j in range(n)
        )
        for i in range(n)
    )


def mat_vec(field, a, v):
    n = len(a)
    return tuple(
        _sum_field(field, [field.mul(a[i][k], v[k]) for k in range(n)]) for i in range(n)
    )


def identity_matrix(field, n):
    return tuple(
        tuple(field.one if i == j else field.zero for j in range(n)) for i in range(n)
    )


def _sum_field(field, items):
    total = field.zero
    for x in items:
        total = field.add(total, x)
    return total


def solve_linear(field, matrix, rhs):
    """Solve M x = v by Gaussian elimination over the field.

    matrix is a sequence of rows; returns the solution tuple, or None if
    the system is singular or inconsistent.
    """
    n = len(matrix)
    aug = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    cols = len(matrix[0]) if matrix else 0
    pivot_rows = []
    row = 0
    for col in range(cols):
        pivot = None
        for r in range(row, n):
            if not field.is_zero(aug[r][col]):
                pivot = r
                break
        if pivot is None:
            return None
        aug[row], aug[pivot] = aug[pivot], aug[row]
        inv = field.inv(aug[row][col])
        aug[row] = [field.mul(inv, x) for x in aug[row]]
        for r in range(n):
            if r != row and not field.is_zero(aug[r][col]):
                factor = aug[r][col]
                aug[r] = [
                    field.sub(x, field.mul(factor, y))
                    for x, y in zip(aug[r], aug[row])
                ]
        pivot_rows.append(col)
        row += 1
        if row == n:
            break
    # Consistency for any remaining rows.
    for r in range(row, n):
        if not field.is_zero(aug[r][cols]):
            return None
    if row < cols:
        return None
    return tuple(aug[r][cols] for r in range(cols))
