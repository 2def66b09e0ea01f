"""Sturm chains, exact real-root counting and isolation, and interlacing.

Everything here is decided with exact arithmetic.  Root counts and
isolation run on primitive integer multiples of the exact Sturm chain;
positive rescaling leaves every sign, and so every count, unchanged.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .poly import (
    DegenerateInputError,
    Poly,
    ZeroPolynomialError,
    derivative,
    divrem,
    gcd,
    primitive,
    primitive_ints,
    pseudo_rem,
    sign_at,
    squarefree_part,
    to_rational,
)


@dataclass(frozen=True)
class SturmChain:
    members: tuple[Poly, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


@dataclass(frozen=True)
class IsolatingInterval:
    """Either a single exact root (``lo == hi``) or an open interval with one root."""

    lo: Fraction
    hi: Fraction

    @property
    def kind(self) -> str:
        return "exact_point" if self.lo == self.hi else "open_interval"

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __str__(self):
        if self.is_point:
            return f"point {self.lo}"
        return f"({self.lo}, {self.hi})"


class InterlaceVerdict(enum.Enum):
    STRICT = "strict"
    NONSTRICT = "nonstrict"
    NONE = "none"


def _require_nonconstant(f: Poly, what: str) -> None:
    if f.is_zero():
        raise ZeroPolynomialError(f"{what} of the zero polynomial")
    if f.degree < 1:
        raise DegenerateInputError(f"{what} needs degree >= 1, got a constant")


def sturm_chain(f: Poly) -> SturmChain:
    """f, f', then negated remainders down to the last nonzero member."""
    _require_nonconstant(f, "Sturm chain")
    members = [f, derivative(f)]
    while True:
        _, r = divrem(members[-2], members[-1])
        if r.is_zero():
            break
        members.append(-r)
    return SturmChain(tuple(members))


@lru_cache(maxsize=512)
def _int_chain(coeffs: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    p = list(coeffs)
    dp = primitive([i * c for i, c in enumerate(p) if i > 0])
    chain = [p, dp]
    while len(chain[-1]) > 1:
        r = pseudo_rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(primitive([-c for c in r]))
    return tuple(tuple(m) for m in chain)


def _chain_of(f: Poly) -> tuple[tuple[int, ...], ...]:
    return _int_chain(tuple(primitive_ints(f)))


def _variations(signs) -> int:
    count = 0
    last = 0
    for s in signs:
        if s == 0:
            continue
        if last and s != last:
            count += 1
        last = s
    return count


def _var_at(chain, x: Fraction) -> int:
    return _variations(sign_at(m, x) for m in chain)


def _var_at_infinity(chain, positive: bool) -> int:
    signs = []
    for m in chain:
        s = 1 if m[-1] > 0 else -1
        if not positive and (len(m) - 1) % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def count_real_roots(f: Poly, interval: Optional[tuple] = None) -> int:
    """Distinct real roots on the whole line, or in the half-open ``(a, b]``."""
    _require_nonconstant(f, "root count")
    if interval is None:
        chain = _chain_of(f)
        return _var_at_infinity(chain, False) - _var_at_infinity(chain, True)
    a, b = (to_rational(v) for v in interval)
    if not a < b:
        raise ValueError("interval needs a < b")
    # a multiple root at an endpoint zeroes the whole chain of f; the
    # squarefree chain stays valid even when a or b is a root
    chain = _chain_of(squarefree_part(f))
    return _var_at(chain, a) - _var_at(chain, b)


def is_real_rooted(f: Poly) -> bool:
    """Membership in RZ.  Nonzero constants count as real-rooted."""
    if f.is_zero():
        raise ZeroPolynomialError("real-rootedness of the zero polynomial")
    if f.degree == 0:
        return True
    s = squarefree_part(f)
    if s.degree == 0:
        return True
    return count_real_roots(s) == s.degree


def cauchy_root_bound(f: Poly) -> Fraction:
    """1 + max |a_i / a_n|; every real root lies strictly inside."""
    _require_nonconstant(f, "Cauchy bound")
    lead = abs(f.leading)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lead


def isolate_real_roots(f: Poly) -> list[IsolatingInterval]:
    """Disjoint, ascending isolating regions for the distinct real roots of ``f``.

    Works on the squarefree part.  Open intervals never have a root at an
    endpoint, so the polynomial changes sign across each of them.
    """
    _require_nonconstant(f, "root isolation")
    return list(_isolate(squarefree_part(f)))


@lru_cache(maxsize=512)
def _isolate(s: Poly) -> tuple[IsolatingInterval, ...]:
    if s.degree == 1:
        root = -s.coeffs[0] / s.coeffs[1]
        return (IsolatingInterval(root, root),)
    p = primitive_ints(s)
    chain = _int_chain(tuple(p))
    signs: dict[Fraction, tuple[int, int]] = {}

    def probe(x):
        # (sign of p at x, sign variations of the chain at x)
        got = signs.get(x)
        if got is None:
            row = [sign_at(m, x) for m in chain]
            got = signs[x] = (row[0], _variations(row))
        return got

    # smallest power of two above the Cauchy bound keeps every midpoint dyadic
    cb = cauchy_root_bound(s)
    bound = Fraction(1 << (math.ceil(cb) - 1).bit_length())
    out = []
    stack = [(-bound, bound, probe(-bound)[1] - probe(bound)[1])]
    while stack:
        lo, hi, cnt = stack.pop()
        if cnt == 0:
            continue
        if cnt == 1 and probe(lo)[0] and probe(hi)[0]:
            out.append(IsolatingInterval(lo, hi))
            continue
        mid = (lo + hi) / 2
        s_mid, v_mid = probe(mid)
        # (lo, mid] count; V at a root equals V just to its right
        left = probe(lo)[1] - v_mid
        if s_mid == 0:
            out.append(IsolatingInterval(mid, mid))
            left -= 1
            stack.append((lo, mid, left))
            stack.append((mid, hi, cnt - left - 1))
        else:
            stack.append((lo, mid, left))
            stack.append((mid, hi, cnt - left))
    out.sort(key=lambda iv: iv.lo)
    return tuple(out)


def _refine(iv: IsolatingInterval, p: list[int]) -> IsolatingInterval:
    """Halve an open isolating interval using the sign change of ``p``."""
    if iv.is_point:
        return iv
    mid = (iv.lo + iv.hi) / 2
    s = sign_at(p, mid)
    if s == 0:
        return IsolatingInterval(mid, mid)
    if s == sign_at(p, iv.lo):
        return IsolatingInterval(mid, iv.hi)
    return IsolatingInterval(iv.lo, mid)


def _before(a: IsolatingInterval, b: IsolatingInterval) -> bool:
    """True when every point of ``a`` lies strictly left of every point of ``b``."""
    if a.hi < b.lo:
        return True
    return a.hi == b.lo and not (a.is_point and b.is_point)


def _alternate(g: Poly, f: Poly) -> bool:
    """Strict alternation f, g, f, ..., f of the roots of coprime f and g."""
    fi = [(iv, "f") for iv in isolate_real_roots(f)]
    gi = [(iv, "g") for iv in isolate_real_roots(g)]
    if len(fi) != f.degree or len(gi) != g.degree:
        # repeated roots cannot alternate with a coprime partner
        return False
    polys = {"f": primitive_ints(squarefree_part(f)), "g": primitive_ints(squarefree_part(g))}
    items = fi + gi
    while True:
        items.sort(key=lambda t: (t[0].lo, t[0].hi))
        clash = None
        for k in range(len(items) - 1):
            if not _before(items[k][0], items[k + 1][0]):
                clash = k
                break
        if clash is None:
            break
        (a, ta), (b, tb) = items[clash], items[clash + 1]
        if a.is_point and b.is_point:
            # equal exact roots; excluded by coprimality
            return False
        items[clash] = (_refine(a, polys[ta]), ta)
        items[clash + 1] = (_refine(b, polys[tb]), tb)
    labels = [tag for _, tag in items]
    return labels == ["f", "g"] * g.degree + ["f"]


def interlaces(g: Poly, f: Poly) -> InterlaceVerdict:
    """Does ``g`` interlace ``f``?  Needs deg f = deg g + 1 and both in RZ.

    A constant ``g`` strictly interlaces any linear ``f`` by convention, and
    that includes ``g = 0``.  Any other zero input is rejected.
    """
    if g.is_zero() and not f.is_zero() and f.degree == 1:
        return InterlaceVerdict.STRICT
    if f.is_zero() or g.is_zero():
        raise DegenerateInputError("interlacing is not decided for the zero polynomial")
    if f.degree != g.degree + 1:
        return InterlaceVerdict.NONE
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return InterlaceVerdict.NONE
    if g.degree == 0:
        return InterlaceVerdict.STRICT
    h = gcd(f, g)
    if h.degree >= 1:
        f1, r1 = divrem(f, h)
        g1, r2 = divrem(g, h)
        assert r1.is_zero() and r2.is_zero()
        if g1.degree == 0 or _alternate(g1, f1):
            return InterlaceVerdict.NONSTRICT
        return InterlaceVerdict.NONE
    return InterlaceVerdict.STRICT if _alternate(g, f) else InterlaceVerdict.NONE
