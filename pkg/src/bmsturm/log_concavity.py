"""The L-operator, k-fold log-concavity and unimodality of finite sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import Poly, ZeroPolynomialError, to_rational


@dataclass(frozen=True)
class LogConcavityVerdict:
    holds: bool
    # (level j >= 1, index i) of the first negative entry, lexicographic
    first_failure: Optional[tuple[int, int]] = None

    def __post_init__(self):
        if self.holds != (self.first_failure is None):
            raise ValueError("first_failure must be set exactly when the verdict fails")

    def __bool__(self):
        return self.holds


def l_operator(a: Sequence) -> tuple[Fraction, ...]:
    """b_i = a_i^2 - a_{i-1} a_{i+1}, padding with zeros at both ends."""
    a = [to_rational(v) for v in a]
    if not a:
        raise ValueError("empty sequence")
    n = len(a)
    out = []
    for i, v in enumerate(a):
        left = a[i - 1] if i > 0 else 0
        right = a[i + 1] if i + 1 < n else 0
        out.append(v * v - left * right)
    return tuple(out)


def k_log_concave(a: Sequence, k: int) -> LogConcavityVerdict:
    if k < 1:
        raise ValueError("k must be at least 1")
    seq = tuple(to_rational(v) for v in a)
    for level in range(1, k + 1):
        seq = l_operator(seq)
        for i, v in enumerate(seq):
            if v < 0:
                return LogConcavityVerdict(False, (level, i))
    return LogConcavityVerdict(True)


def is_log_concave(a: Sequence) -> bool:
    return k_log_concave(a, 1).holds


def is_unimodal(a: Sequence) -> bool:
    a = [to_rational(v) for v in a]
    i = 1
    while i < len(a) and a[i - 1] <= a[i]:
        i += 1
    while i < len(a) and a[i - 1] >= a[i]:
        i += 1
    return i >= len(a)


def l_transform_poly(f: Poly) -> Poly:
    """Apply the L-operator to the coefficient sequence; degree is kept."""
    if f.is_zero():
        raise ZeroPolynomialError("L-transform of the zero polynomial")
    return Poly(l_operator(f.coeffs))
