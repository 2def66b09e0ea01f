"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  Polynomials are immutable and keep
their coefficients lowest degree first.

The integer helpers at the bottom (``primitive_ints``, ``pseudo_rem``,
``sign_at``) work on primitive integer coefficient lists.  Scaling a
polynomial by a positive constant never changes a sign, so the root
machinery runs on those lists to keep coefficient growth in check.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]


class DegenerateInputError(ValueError):
    """Raised when an input polynomial is zero or of too low a degree."""


class ZeroPolynomialError(DegenerateInputError, ArithmeticError):
    """Raised when an operation is undefined on the zero polynomial."""


def to_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an int, Fraction or 'num/den' string")
    return Fraction(value)


def format_rational(r: Fraction) -> str:
    """Text form ``num/den``, with ``/den`` omitted when it is 1."""
    return str(r)


@total_ordering
class _MinusInfinity:
    """Degree of the zero polynomial.

    Compares below every integer but supports no arithmetic, so code that
    forgets the zero case fails loudly instead of computing with -1.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        if other is self:
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __hash__(self):
        return hash("-oo")

    def __repr__(self):
        return "-oo"


MINUS_INFINITY = _MinusInfinity()


@dataclass(frozen=True)
class Poly:
    """Dense polynomial over the rationals; ``coeffs[i]`` multiplies x**i."""

    coeffs: tuple[Fraction, ...] = ()

    def __init__(self, coeffs: Iterable = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    # constructors
    @classmethod
    def zero(cls) -> "Poly":
        return cls(())

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls((c,))

    @classmethod
    def x(cls) -> "Poly":
        return cls((0, 1))

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar], lead: Scalar = 1) -> "Poly":
        p = cls.constant(lead)
        for r in roots:
            p = p * cls((-to_rational(r), 1))
        return p

    @classmethod
    def parse(cls, text: str) -> "Poly":
        body = text.strip()
        if not (body.startswith("[") and body.endswith("]")):
            raise ValueError(f"not a coefficient list: {text!r}")
        inner = body[1:-1].strip()
        if not inner:
            return cls.zero()
        return cls(Fraction(tok.strip()) for tok in inner.split(","))

    # basic properties
    @property
    def degree(self):
        if not self.coeffs:
            return MINUS_INFINITY
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def is_standard(self) -> bool:
        """Zero, or positive leading coefficient."""
        return self.is_zero() or self.leading > 0

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __str__(self):
        return "[" + ", ".join(format_rational(c) for c in self.coeffs) + "]"

    def __repr__(self):
        return f"Poly({self})"

    # arithmetic
    def __neg__(self) -> "Poly":
        return Poly(-c for c in self.coeffs)

    def __add__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return Poly.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c: Scalar) -> "Poly":
        c = to_rational(c)
        return Poly(c * a for a in self.coeffs)

    def __call__(self, x: Scalar) -> Fraction:
        return evaluate(self, x)

    def derivative(self) -> "Poly":
        return derivative(self)

    def monic(self) -> "Poly":
        if self.is_zero():
            raise ZeroPolynomialError("zero polynomial has no monic normalization")
        return self.scale(1 / self.leading)

    def compose_shift(self, a: Scalar) -> "Poly":
        """Return f(x + a) via Horner in the shifted basis."""
        shift = Poly((a, 1))
        out = Poly.zero()
        for c in reversed(self.coeffs):
            out = out * shift + Poly.constant(c)
        return out


def _as_poly(value):
    if isinstance(value, Poly):
        return value
    if isinstance(value, (int, Fraction)):
        return Poly.constant(value)
    return NotImplemented


def poly_arith(op: str, f: Poly, g) -> Poly:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "scale":
        if not isinstance(g, (int, Fraction)):
            raise TypeError("scale takes a rational factor")
        return f.scale(g)
    raise ValueError(f"unknown operation {op!r}")


def derivative(f: Poly) -> Poly:
    return Poly(i * c for i, c in enumerate(f.coeffs) if i > 0)


def evaluate(f: Poly, x: Scalar) -> Fraction:
    x = to_rational(x)
    acc = Fraction(0)
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def divrem(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    lc = g.coeffs[-1]
    if len(r) - 1 < dg:
        return Poly.zero(), f
    q = [Fraction(0)] * (len(r) - dg)
    for k in range(len(r) - 1 - dg, -1, -1):
        c = r[k + dg] / lc
        q[k] = c
        if c:
            for i, b in enumerate(g.coeffs):
                r[k + i] -= c * b
    return Poly(q), Poly(r[:dg])


def gcd(f: Poly, g: Poly) -> Poly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise ZeroPolynomialError("gcd(0, 0) is undefined")
    if f.is_zero():
        return g.monic()
    if g.is_zero():
        return f.monic()
    a, b = primitive_ints(f), primitive_ints(g)
    if len(a) < len(b):
        a, b = b, a
    while b:
        a, b = b, primitive(pseudo_rem(a, b))
    return Poly(a).monic()


def squarefree_part(f: Poly) -> Poly:
    """Monic ``f / gcd(f, f')``: same distinct roots, all simple."""
    if f.is_zero():
        raise ZeroPolynomialError("squarefree part of the zero polynomial")
    if f.is_constant():
        return Poly.constant(1)
    q, r = divrem(f, gcd(f, derivative(f)))
    assert r.is_zero()
    return q.monic()


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


# integer coefficient helpers

def primitive(coeffs: Sequence[int]) -> list[int]:
    """Divide out the positive content; signs are untouched."""
    g = 0
    for c in coeffs:
        g = math.gcd(g, c)
        if g == 1:
            return list(coeffs)
    if g == 0:
        return []
    return [c // g for c in coeffs]


def primitive_ints(f: Poly) -> list[int]:
    """Positive integer multiple of ``f`` with content 1."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    return primitive([c.numerator * (den // c.denominator) for c in f.coeffs])


def pseudo_rem(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Remainder of ``m*f`` by ``g`` for some positive integer ``m``.

    Each elimination step multiplies by ``|lc(g)|`` so the result is a
    positive multiple of the true remainder.
    """
    r = list(f)
    dg = len(g) - 1
    lc = g[-1]
    s = 1 if lc > 0 else -1
    alc = abs(lc)
    while r and len(r) - 1 >= dg:
        a = r[-1]
        k = len(r) - 1 - dg
        r = [alc * c for c in r]
        sa = s * a
        for i, b in enumerate(g):
            r[k + i] -= sa * b
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def sign_at(coeffs: Sequence[int], x: Fraction) -> int:
    """Sign of the integer polynomial at a rational point."""
    if not coeffs:
        return 0
    a, b = x.numerator, x.denominator
    v = coeffs[-1]
    if b & (b - 1) == 0:
        # dyadic point: denominators become shifts
        k = b.bit_length() - 1
        shift = 0
        for c in reversed(coeffs[:-1]):
            shift += k
            v = v * a + (c << shift)
    else:
        bp = 1
        for c in reversed(coeffs[:-1]):
            bp *= b
            v = v * a + c * bp
    return (v > 0) - (v < 0)
