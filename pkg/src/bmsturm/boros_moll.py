"""Boros-Moll coefficient rows and the companion polynomials Q_n, R_n.

A row ``d_0(n), ..., d_n(n)`` holds the coefficients of

    P_n(x) = 2^(-2n) * sum_j 2^j C(2n-2j, n-j) C(n+j, j) (x+1)^j.

Rows can be produced four ways (closed form, double sum, the first-order
recurrence in n, the second-order recurrence in n) and the routes are
expected to agree exactly.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import factorial
from typing import Callable, Optional

from .poly import Poly, binomial


class Family(str, Enum):
    Q = "q"
    R = "r"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, Family):
            return value
        return cls(str(value).lower())


@dataclass(frozen=True)
class BMRow:
    n: int
    d: tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("row index must be nonnegative")
        if len(self.d) != self.n + 1:
            raise ValueError(f"row {self.n} needs {self.n + 1} entries, got {len(self.d)}")

    def invariant_violations(self) -> list[str]:
        """Empty when the row is positive, 2-adic and has the right top entry."""
        out = []
        for i, v in enumerate(self.d):
            if v <= 0:
                out.append(f"d_{i}({self.n}) = {v} is not positive")
            if (1 << (2 * self.n)) % v.denominator:
                out.append(f"denominator of d_{i}({self.n}) does not divide 4^{self.n}")
        if self.d[-1] != top_coefficient(self.n):
            out.append(f"d_{self.n}({self.n}) != 2^-n C(2n, n)")
        return out

    def to_record(self) -> dict:
        return {"n": self.n, "d": [str(v) for v in self.d]}

    @classmethod
    def from_record(cls, rec: dict) -> "BMRow":
        return cls(int(rec["n"]), tuple(Fraction(v) for v in rec["d"]))

    def __str__(self):
        return "[" + ", ".join(str(v) for v in self.d) + "]"


def top_coefficient(n: int) -> Fraction:
    return Fraction(binomial(2 * n, n), 1 << n)


def bm_row_closed(n: int) -> BMRow:
    if n < 0:
        raise ValueError("n must be nonnegative")
    # integer row of 4^n P_n, expanding (x+1)^j binomially
    acc = [0] * (n + 1)
    for j in range(n + 1):
        w = (1 << j) * binomial(2 * n - 2 * j, n - j) * binomial(n + j, j)
        for i in range(j + 1):
            acc[i] += w * binomial(j, i)
    scale = 1 << (2 * n)
    return BMRow(n, tuple(Fraction(a, scale) for a in acc))


def bm_row_double_sum(n: int) -> BMRow:
    """Expand the double sum over (j, k) term by term; slow, used as an oracle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    # integer numerators over the common denominator 8^n
    xp1 = [[binomial(j, i) for i in range(j + 1)] for j in range(n + 1)]
    xm1 = [[binomial(k, i) * (-1) ** (k - i) for i in range(k + 1)] for k in range(n + 1)]
    total = [0] * (n + 1)
    for j in range(n + 1):
        cj = binomial(2 * n + 1, 2 * j)
        for k in range(n - j + 1):
            w = (cj * binomial(n - j, k) * binomial(2 * k + 2 * j, k + j)) << (3 * (n - k - j))
            for a, u in enumerate(xp1[j]):
                wu = w * u
                for b, v in enumerate(xm1[k]):
                    total[a + b] += wu * v
    den = 1 << (3 * n)
    return BMRow(n, tuple(Fraction(t, den) for t in total))


def bm_row_rec1(prev: BMRow) -> BMRow:
    """Row n+1 from row n."""
    n = prev.n
    d = prev.d
    out = []
    for i in range(n + 2):
        lower = d[i - 1] if i >= 1 else 0
        here = d[i] if i <= n else 0
        out.append(Fraction(n + i, n + 1) * lower
                   + Fraction(4 * n + 2 * i + 3, 2 * (n + 1)) * here)
    return BMRow(n + 1, tuple(out))


def bm_row_rec2(prev2: BMRow, prev1: BMRow) -> BMRow:
    """Row n+2 from rows n and n+1; the top entry comes from its closed form."""
    if prev1.n != prev2.n + 1:
        raise ValueError(f"rec2 needs consecutive rows, got n={prev2.n} and n={prev1.n}")
    n = prev2.n
    out = []
    for i in range(n + 2):
        di_n = prev2.d[i] if i <= n else 0
        c1 = Fraction(8 * n * n + 24 * n + 19 - 4 * i * i, 2 * (n + 2 - i) * (n + 2))
        c0 = Fraction((n + i + 1) * (4 * n + 3) * (4 * n + 5),
                      4 * (n + 2 - i) * (n + 1) * (n + 2))
        out.append(c1 * prev1.d[i] - c0 * di_n)
    out.append(top_coefficient(n + 2))
    return BMRow(n + 2, tuple(out))


def rows_by_rec1(n_max: int) -> list[BMRow]:
    rows = [BMRow(0, (Fraction(1),))]
    while rows[-1].n < n_max:
        rows.append(bm_row_rec1(rows[-1]))
    return rows


def rows_by_rec2(n_max: int) -> list[BMRow]:
    rows = [BMRow(0, (Fraction(1),)), BMRow(1, (Fraction(3, 2), Fraction(1)))]
    while rows[-1].n < n_max:
        rows.append(bm_row_rec2(rows[-2], rows[-1]))
    return rows[: n_max + 1]


ROUTES: dict[str, Callable[[int], BMRow]] = {
    "closed": bm_row_closed,
    "double-sum": bm_row_double_sum,
    "rec1": lambda n: rows_by_rec1(n)[n],
    "rec2": lambda n: rows_by_rec2(n)[n],
}


class RowCache:
    """Rows keyed by n.  Reads are lock-free; insertion takes the lock.

    If ``store`` is given it is notified of every newly computed row, which
    is how the on-disk cache gets appended to.
    """

    def __init__(self, store=None):
        self._rows: dict[int, BMRow] = {}
        self._lock = threading.Lock()
        self._store = store
        if store is not None:
            for row in store.load():
                self._rows[row.n] = row

    def get(self, n: int) -> BMRow:
        row = self._rows.get(n)
        if row is not None:
            return row
        row = bm_row_closed(n)
        with self._lock:
            if n not in self._rows:
                self._rows[n] = row
                if self._store is not None:
                    self._store.append(row)
            return self._rows[n]

    def __contains__(self, n: int) -> bool:
        return n in self._rows

    def __len__(self):
        return len(self._rows)


_default_cache = RowCache()


def set_default_cache(cache: RowCache) -> None:
    global _default_cache
    _default_cache = cache


def bm_row(n: int) -> BMRow:
    """Cached closed-form row."""
    return _default_cache.get(n)


def p_polynomial(n: int) -> Poly:
    return Poly(bm_row(n).d)


def q_polynomial(n: int) -> Poly:
    return Poly(v / factorial(i) for i, v in enumerate(bm_row(n).d))


def r_polynomial(n: int) -> Poly:
    return Poly(v / factorial(i + 2) for i, v in enumerate(bm_row(n).d))


def family_polynomial(family, n: int) -> Poly:
    family = Family.parse(family)
    return q_polynomial(n) if family is Family.Q else r_polynomial(n)


@dataclass(frozen=True)
class RecurrenceCoeffs:
    """``F_{n+1} = a F_n + b F_n' + c F_{n-1}`` for one family and one n >= 1."""

    a: Poly
    b: Poly
    c: Poly
    family: Family
    n: int


def recurrence_coeffs(family, n: int) -> RecurrenceCoeffs:
    family = Family.parse(family)
    if n < 1:
        raise ValueError("the three-term recurrences start at n = 1")
    m = n + 1
    if family is Family.Q:
        den = m * m
        a = Poly((Fraction(8 * n * n + 8 * n + 3, 2 * den), Fraction(2 * n + 1, den)))
        b = Poly((0, Fraction(1, den)))
        c = Poly.constant(Fraction(-(4 * n - 1) * (4 * n + 1), 4 * den))
    else:
        den = m * (n + 3)
        a = Poly((Fraction(8 * n * n + 8 * n + 7, 2 * den), Fraction(2 * n + 1, den)))
        b = Poly((0, Fraction(5, den)))
        c = Poly.constant(Fraction(-(4 * n - 1) * (4 * n + 1) * (n - 2), 4 * n * den))
    return RecurrenceCoeffs(a, b, c, family, n)


def _by_recurrence(family: Family, n: int, seeds: tuple[Poly, Poly]) -> Poly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    prev, cur = seeds
    if n == 0:
        return prev
    for k in range(1, n):
        rc = recurrence_coeffs(family, k)
        prev, cur = cur, rc.a * cur + rc.b * cur.derivative() + rc.c * prev
    return cur


def q_polynomial_rec(n: int) -> Poly:
    return _by_recurrence(Family.Q, n, (q_polynomial(0), q_polynomial(1)))


def r_polynomial_rec(n: int) -> Poly:
    return _by_recurrence(Family.R, n, (r_polynomial(0), r_polynomial(1)))


def family_polynomial_rec(family, n: int) -> Poly:
    family = Family.parse(family)
    return q_polynomial_rec(n) if family is Family.Q else r_polynomial_rec(n)


def shifted_p_coefficients(n: int) -> tuple[Fraction, ...]:
    """Coefficients of P_n(x - 1); nonnegative and nondecreasing."""
    return p_polynomial(n).compose_shift(-1).coeffs


def check_routes(n: int, routes: Optional[list[str]] = None) -> dict[str, BMRow]:
    """Row n from each requested route (all four by default)."""
    routes = routes or list(ROUTES)
    return {name: ROUTES[name](n) for name in routes}
