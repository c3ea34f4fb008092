"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first as `fractions.Fraction`
values with trailing zeros stripped; the zero polynomial has an empty
coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _coerce(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    return Fraction(c)


class Poly:
    """A univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_coerce(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def x_minus(cls, r) -> "Poly":
        return cls((-_coerce(r), 1))

    @property
    def degree(self) -> int:
        """Degree, with the convention that the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == Poly((other,))
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "Poly":
        other = self._as_poly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(
            (self[i] + other[i] for i in range(n))
        )

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs))

    def __sub__(self, other) -> "Poly":
        return self + (-self._as_poly(other))

    def __rsub__(self, other) -> "Poly":
        return self._as_poly(other) - self

    def __mul__(self, other) -> "Poly":
        other = self._as_poly(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __divmod__(self, other) -> tuple["Poly", "Poly"]:
        other = self._as_poly(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree
        lead = other.leading()
        if len(rem) <= d:
            return Poly(), Poly(rem)
        quot = [Fraction(0)] * (len(rem) - d)
        for i in range(len(rem) - d - 1, -1, -1):
            c = rem[i + d] / lead
            if c == 0:
                continue
            quot[i] = c
            for j, b in enumerate(other.coeffs):
                rem[i + j] -= c * b
        return Poly(quot), Poly(rem[:d])

    def __floordiv__(self, other) -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Poly":
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        if lead == 1:
            return self
        return Poly((c / lead for c in self.coeffs))

    def derivative(self) -> "Poly":
        return Poly((i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __call__(self, value):
        acc = Fraction(0) if isinstance(value, (int, Fraction)) else value * 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift_up(self, k: int) -> "Poly":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Poly((Fraction(0),) * k + self.coeffs)

    @staticmethod
    def _as_poly(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly((other,))
        raise TypeError(f"cannot coerce {type(other)!r} to Poly")

    def __repr__(self) -> str:
        if self.is_zero():
            return "Poly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(f"{c}*x" if c != 1 else "x")
            else:
                terms.append(f"{c}*x^{i}" if c != 1 else f"x^{i}")
        return "Poly(" + " + ".join(terms) + ")"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor; gcd(0, 0) = 0."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_ext_gcd(a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    u0, u1 = Poly((1,)), Poly()
    v0, v1 = Poly(), Poly((1,))
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        u0, u1 = u1, u0 - q * u1
        v0, v1 = v1, v0 - q * v1
    if r0.is_zero():
        return r0, u0, v0
    lead = r0.leading()
    inv = 1 / lead
    return r0.monic(), u0 * inv, v0 * inv


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm over the rationals.

    Returns monic, squarefree, pairwise coprime factors with strictly
    increasing exponents such that p equals its leading coefficient times
    the product of factor**exponent.
    """
    if p.is_zero():
        raise ValueError("squarefree decomposition of the zero polynomial")
    p = p.monic()
    if p.degree < 1:
        return []
    d = p.derivative()
    g = poly_gcd(p, d)
    if g.degree == 0:
        return [(p, 1)]
    out: list[tuple[Poly, int]] = []
    w = p.exact_div(g)
    y = d.exact_div(g)
    z = y - w.derivative()
    i = 1
    while w.degree > 0:
        gi = poly_gcd(w, z)
        if gi.degree > 0:
            out.append((gi, i))
            w = w.exact_div(gi)
            z = z.exact_div(gi)
        y = z
        z = y - w.derivative()
        i += 1
    return out


def root_multiplicity(p: Poly, r) -> tuple[int, Poly]:
    """Largest e with (x-r)**e dividing p, plus the cofactor p/(x-r)**e."""
    if p.is_zero():
        raise ValueError("root multiplicity in the zero polynomial")
    factor = Poly.x_minus(r)
    e = 0
    while True:
        q, rem = divmod(p, factor)
        if not rem.is_zero():
            return e, p
        p = q
        e += 1


def rational_roots(p: Poly) -> list[Fraction]:
    """All rational roots of p (each listed once), by the rational root test."""
    if p.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    # Strip powers of x, then scale to integer coefficients.
    low = 0
    while p.coeffs[low] == 0:
        low += 1
    roots = [Fraction(0)] if low > 0 else []
    coeffs = p.coeffs[low:]
    if len(coeffs) == 1:
        return roots
    den_lcm = 1
    for c in coeffs:
        den_lcm = den_lcm * c.denominator // _gcd(den_lcm, c.denominator)
    ints = [int(c * den_lcm) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if p(cand) == 0 and cand not in roots:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)
