"""Sparse polynomials in the three matrix parameters (beta, gamma, delta).

Terms map exponent triples to nonzero rational coefficients.  Used for
symbolic universal matrices and generic (parameter-independent) rank.
"""

from __future__ import annotations

from fractions import Fraction

Mono = tuple[int, int, int]


def _grlex_key(mono: Mono) -> tuple:
    return (sum(mono), mono)


class TriPoly:
    """Exact trivariate polynomial, sparse representation."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[Mono, Fraction] | None = None):
        self.terms: dict[Mono, Fraction] = {}
        if terms:
            for mono, c in terms.items():
                c = c if isinstance(c, Fraction) else Fraction(c)
                if c != 0:
                    self.terms[mono] = c

    @classmethod
    def constant(cls, c) -> "TriPoly":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def beta(cls) -> "TriPoly":
        return cls({(1, 0, 0): Fraction(1)})

    @classmethod
    def gamma(cls) -> "TriPoly":
        return cls({(0, 1, 0): Fraction(1)})

    @classmethod
    def delta(cls) -> "TriPoly":
        return cls({(0, 0, 1): Fraction(1)})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, TriPoly):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == TriPoly.constant(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def __add__(self, other) -> "TriPoly":
        other = self._as_tri(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, Fraction(0)) + c
            if s == 0:
                out.pop(mono, None)
            else:
                out[mono] = s
        return TriPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TriPoly":
        return TriPoly({m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "TriPoly":
        return self + (-self._as_tri(other))

    def __rsub__(self, other) -> "TriPoly":
        return self._as_tri(other) - self

    def __mul__(self, other) -> "TriPoly":
        other = self._as_tri(other)
        out: dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                s = out.get(mono, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(mono, None)
                else:
                    out[mono] = s
        return TriPoly(out)

    __rmul__ = __mul__

    def leading(self) -> tuple[Mono, Fraction]:
        mono = max(self.terms, key=_grlex_key)
        return mono, self.terms[mono]

    def exact_div(self, other: "TriPoly") -> "TriPoly":
        """Exact division; raises ArithmeticError if other does not divide self."""
        other = self._as_tri(other)
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        quot: dict[Mono, Fraction] = {}
        rem = self
        g_mono, g_coeff = other.leading()
        while not rem.is_zero():
            r_mono, r_coeff = rem.leading()
            q_mono = tuple(a - b for a, b in zip(r_mono, g_mono))
            if any(e < 0 for e in q_mono):
                raise ArithmeticError("inexact trivariate division")
            q_coeff = r_coeff / g_coeff
            quot[q_mono] = quot.get(q_mono, Fraction(0)) + q_coeff
            rem = rem - TriPoly({q_mono: q_coeff}) * other
        return TriPoly(quot)

    def evaluate(self, beta, gamma, delta) -> Fraction:
        beta, gamma, delta = Fraction(beta), Fraction(gamma), Fraction(delta)
        acc = Fraction(0)
        for (eb, eg, ed), c in self.terms.items():
            acc += c * beta**eb * gamma**eg * delta**ed
        return acc

    @staticmethod
    def _as_tri(other) -> "TriPoly":
        if isinstance(other, TriPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return TriPoly.constant(other)
        raise TypeError(f"cannot coerce {type(other)!r} to TriPoly")

    def __repr__(self) -> str:
        if not self.terms:
            return "TriPoly(0)"
        names = ("b", "g", "d")
        parts = []
        for mono in sorted(self.terms, key=_grlex_key, reverse=True):
            c = self.terms[mono]
            factors = [str(c)] if c != 1 or not any(mono) else []
            for name, e in zip(names, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return "TriPoly(" + " + ".join(parts) + ")"
