"""Claim-level drivers that check the Q/R results over a range of n.

Each driver returns a :class:`VerificationReport`.  Drivers are
independent of each other, so one broken claim cannot hide another, and
every report is deterministic given its parameters (timings aside).
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from .boros_moll import (
    BMRow,
    Family,
    RecurrenceCoeffs,
    bm_row,
    family_polynomial,
    recurrence_coeffs,
)
from .log_concavity import k_log_concave, l_transform_poly
from .poly import Poly
from .real_roots import InterlaceVerdict, interlaces, is_real_rooted


class ClaimId(str, Enum):
    COEFF_IDENTITIES = "coeff_identities"
    POLY_RECURRENCES = "poly_recurrences"
    LIU_WANG_SIDES = "liu_wang_sides"
    STURM_SEQUENCE_Q = "sturm_sequence_q"
    STURM_SEQUENCE_R = "sturm_sequence_r"
    KLOGCONCAVE = "klogconcave"
    BRANDEN_TRANSFORM = "branden_transform"


class ShapeError(ValueError):
    """Recurrence coefficients outside the degree shapes the checker handles."""


@dataclass
class Failure:
    n: int
    detail: str
    values: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"n": self.n, "detail": self.detail,
                "values": {k: str(v) for k, v in self.values.items()}}


@dataclass
class VerificationReport:
    claim: ClaimId
    n_range: tuple[int, int]
    failures: list[Failure] = field(default_factory=list)
    timing_ms: dict[int, float] = field(default_factory=dict)
    expected_failures: list[Failure] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    params: dict = field(default_factory=dict)
    checks: int = 0

    @property
    def status(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "claim": self.claim.value,
            "n_range": list(self.n_range),
            "status": self.status,
            "checks": self.checks,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "failures": [f.to_dict() for f in self.failures],
            "expected_failures": [f.to_dict() for f in self.expected_failures],
            "notes": list(self.notes),
        }
        if timing:
            out["timing_ms"] = {str(n): round(ms, 3) for n, ms in sorted(self.timing_ms.items())}
        return out


class _Clock:
    def __init__(self):
        self.t0 = time.perf_counter()

    def ms(self) -> float:
        return (time.perf_counter() - self.t0) * 1000.0


def _pmap(fn: Callable, items: Sequence, jobs: int) -> list:
    """Order-preserving map, in worker processes when ``jobs > 1``."""
    if jobs <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items))


# Liu-Wang side conditions

def check_liu_wang_side_conditions(coeffs: RecurrenceCoeffs) -> bool:
    """b and c nonpositive on x <= 0, and never both zero there.

    Only linear ``b`` and constant ``c`` are handled.
    """
    b, c = coeffs.b, coeffs.c
    if not b.is_zero() and b.degree > 1:
        raise ShapeError(f"b_n has degree {b.degree}, expected at most 1")
    if not c.is_zero() and c.degree > 0:
        raise ShapeError(f"c_n has degree {c.degree}, expected a constant")
    slope, offset, cval = b[1], b[0], c[0]
    # beta*x + gamma <= 0 for every x <= 0 iff beta >= 0 and gamma <= 0
    b_nonpositive = slope >= 0 and offset <= 0
    c_nonpositive = cval <= 0
    # with c == 0, b must stay away from zero on the whole half-line
    some_nonzero = cval != 0 or offset < 0
    return b_nonpositive and c_nonpositive and some_nonzero


def liu_wang_start(family) -> int:
    """First n from which the side conditions are claimed to hold."""
    return 1 if Family.parse(family) is Family.Q else 3


def verify_liu_wang(n_max: int, families: Iterable = (Family.Q, Family.R)) -> VerificationReport:
    families = [Family.parse(f) for f in families]
    rep = VerificationReport(ClaimId.LIU_WANG_SIDES, (0, n_max),
                             params={"families": [f.value for f in families]})
    rep.notes.append("side conditions are checked at every n in range, which is stronger "
                     "than the criterion's 'for some n >= 1' hypothesis")
    for n in range(1, n_max + 1):
        clock = _Clock()
        for fam in families:
            rc = recurrence_coeffs(fam, n)
            holds = check_liu_wang_side_conditions(rc)
            expected = n >= liu_wang_start(fam)
            rep.checks += 1
            values = {"family": fam.value, "b": rc.b, "c": rc.c[0]}
            if holds != expected:
                rep.failures.append(Failure(
                    n, f"{fam.value}: side conditions {'hold' if holds else 'fail'}, "
                       f"expected {'hold' if expected else 'fail'}", values))
            elif not holds:
                rep.expected_failures.append(Failure(
                    n, f"{fam.value}: side conditions fail (base case, verified directly)", values))
        rep.timing_ms[n] = clock.ms()
    return rep


# coefficient identities

def _d(rows: dict[int, BMRow], i: int, n: int) -> Fraction:
    if n < 0 or i < 0 or i > n:
        return Fraction(0)
    return rows[n].d[i]


def coefficient_identity_residuals(rows: dict[int, BMRow], n: int):
    """Yield (name, i, lhs, rhs) for every identity instance at this n.

    Needs rows n-1 .. n+2.
    """
    def d(i, m):
        return _d(rows, i, m)

    for i in range(n + 2):
        lhs = d(i, n + 1)
        rhs = Fraction(n + i, n + 1) * d(i - 1, n) + Fraction(4 * n + 2 * i + 3, 2 * (n + 1)) * d(i, n)
        yield "rec1", i, lhs, rhs
    for i in range(n + 2):
        lhs = d(i, n + 2)
        rhs = (Fraction(8 * n * n + 24 * n + 19 - 4 * i * i, 2 * (n + 2 - i) * (n + 2)) * d(i, n + 1)
               - Fraction((n + i + 1) * (4 * n + 3) * (4 * n + 5), 4 * (n + 2 - i) * (n + 1) * (n + 2))
               * d(i, n))
        yield "rec2", i, lhs, rhs
    for i in range(n + 2):
        if n + i == 0:
            continue
        lhs = d(i - 1, n)
        rhs = Fraction(n + 1, n + i) * d(i, n + 1) - Fraction(4 * n + 2 * i + 3, 2 * (n + i)) * d(i, n)
        yield "eq-new", i, lhs, rhs
    if n < 1:
        return
    for i in range(n + 2):
        lhs = 4 * (n + 1) ** 2 * d(i, n + 1)
        rhs = (2 * (8 * n * n + 8 * n + 3 + 2 * i) * d(i, n) + 4 * i * (2 * n + 1) * d(i - 1, n)
               - (16 * n * n - 1) * d(i, n - 1))
        yield "eq-inter-q", i, lhs, rhs
    for i in range(n + 1):
        c1 = Fraction(8 * n * n + 8 * n + 3 - 4 * i * i, 2 * (n + 1 - i) * (n + 1))
        c0 = Fraction((n + i) * (4 * n - 1) * (4 * n + 1), 4 * n * (n + 1) * (n + 1 - i))
        yield "eq-inter", i, d(i, n + 1), c1 * d(i, n) - c0 * d(i, n - 1)
        # same relation as rec2 with n shifted down by one
        m = n - 1
        r1 = Fraction(8 * m * m + 24 * m + 19 - 4 * i * i, 2 * (m + 2 - i) * (m + 2))
        r0 = Fraction((m + i + 1) * (4 * m + 3) * (4 * m + 5), 4 * (m + 2 - i) * (m + 1) * (m + 2))
        yield "eq-inter=rec2(n-1):first", i, c1, r1
        yield "eq-inter=rec2(n-1):second", i, c0, r0


def verify_coefficient_identities(n_max: int) -> VerificationReport:
    rep = VerificationReport(ClaimId.COEFF_IDENTITIES, (0, n_max))
    rep.notes.append("rec2 at i = n+2 lies outside its stated range 0 <= i <= n+1 and is skipped")
    rep.notes.append("eq-inter is checked for 0 <= i <= n (its denominator vanishes at i = n+1)")
    rows = {m: bm_row(m) for m in range(n_max + 3)}
    for n in range(n_max + 1):
        clock = _Clock()
        for name, i, lhs, rhs in coefficient_identity_residuals(rows, n):
            rep.checks += 1
            if lhs != rhs:
                rep.failures.append(Failure(n, f"{name} at i={i}", {"lhs": lhs, "rhs": rhs}))
        rep.timing_ms[n] = clock.ms()
    return rep


# polynomial recurrences

def verify_polynomial_recurrences(n_max: int) -> VerificationReport:
    rep = VerificationReport(ClaimId.POLY_RECURRENCES, (0, n_max))
    state = {fam: (family_polynomial(fam, 0), family_polynomial(fam, 1)) for fam in Family}
    for n in range(n_max + 1):
        clock = _Clock()
        for fam in Family:
            prev, cur = state[fam]
            if n <= 1:
                got = prev if n == 0 else cur
            else:
                rc = recurrence_coeffs(fam, n - 1)
                got = rc.a * cur + rc.b * cur.derivative() + rc.c * prev
                state[fam] = (cur, got)
            want = family_polynomial(fam, n)
            rep.checks += 1
            if got != want:
                rep.failures.append(Failure(n, f"{fam.value}: recurrence disagrees with direct construction",
                                            {"recurrence": got, "direct": want}))
        rep.timing_ms[n] = clock.ms()
    if n_max <= 1:
        rep.notes.append("range covers only the seeds; vacuous")
    return rep


# Sturm sequences

@dataclass(frozen=True)
class _SturmStep:
    n: int
    degree_ok: bool
    positive: bool
    real_rooted: bool
    interlace: Optional[str]
    ms: float


def _sturm_step(args) -> _SturmStep:
    family, n = args
    clock = _Clock()
    f = family_polynomial(family, n)
    verdict = None
    if n >= 1:
        verdict = interlaces(family_polynomial(family, n - 1), f).value
    return _SturmStep(
        n=n,
        degree_ok=f.degree == n,
        positive=all(c > 0 for c in f.coeffs),
        real_rooted=is_real_rooted(f),
        interlace=verdict,
        ms=clock.ms(),
    )


def verify_sturm_sequence(family, n_max: int, jobs: int = 1) -> VerificationReport:
    """deg F_n = n, positive coefficients, F_n in RZ and F_{n-1} strictly interlacing F_n."""
    family = Family.parse(family)
    claim = ClaimId.STURM_SEQUENCE_Q if family is Family.Q else ClaimId.STURM_SEQUENCE_R
    rep = VerificationReport(claim, (0, n_max))
    start = liu_wang_start(family)
    if family is Family.R:
        rep.notes.append("R_0..R_3 and R_0 < R_1 < R_2 < R_3 are base cases checked directly")
    rep.notes.append("F_0 < F_1 holds by the convention that constants interlace linear polynomials")
    steps = _pmap(_sturm_step, [(family.value, n) for n in range(n_max + 1)], jobs)

    for st in steps:
        n = st.n
        rep.timing_ms[n] = st.ms
        rep.checks += 3 + (st.interlace is not None)
        if not st.degree_ok:
            rep.failures.append(Failure(n, "degree differs from n"))
        if not st.positive:
            rep.failures.append(Failure(n, "coefficients not all positive"))
        if not st.real_rooted:
            rep.failures.append(Failure(n, "not real-rooted"))
        if st.interlace is not None and st.interlace != InterlaceVerdict.STRICT.value:
            rep.failures.append(Failure(n, f"F_{n - 1} does not strictly interlace F_{n}",
                                        {"verdict": st.interlace}))

    # the inductive step: side conditions at n plus F_{n-1} < F_n must give F_n < F_{n+1}
    sides = []
    for n in range(start, n_max):
        holds = check_liu_wang_side_conditions(recurrence_coeffs(family, n))
        sides.append(f"{n}:{'ok' if holds else 'no'}")
        before, after = steps[n], steps[n + 1]
        if holds and before.interlace == "strict" and before.real_rooted:
            rep.checks += 1
            if not (after.real_rooted and after.interlace == "strict"):
                rep.failures.append(Failure(n + 1, f"inductive step from n={n} violated"))
    if sides:
        rep.notes.append("side conditions at inductive steps: " + " ".join(sides))
    return rep


# log-concavity

def verify_k_logconcavity(n_max: int, k: int) -> VerificationReport:
    if k < 1:
        raise ValueError("k must be at least 1")
    rep = VerificationReport(ClaimId.KLOGCONCAVE, (0, n_max), params={"k": k})
    for n in range(n_max + 1):
        clock = _Clock()
        verdict = k_log_concave(bm_row(n).d, k)
        rep.checks += 1
        if not verdict.holds:
            level, i = verdict.first_failure
            rep.failures.append(Failure(n, f"L^{level} entry {i} negative", {"level": level, "index": i}))
        rep.timing_ms[n] = clock.ms()
    return rep


def random_real_rooted(rng: random.Random, max_deg: int) -> Poly:
    """prod (x + r_i) with small nonnegative rational r_i and degree >= 1."""
    deg = rng.randint(1, max_deg)
    roots = [Fraction(rng.randint(0, 24), rng.randint(1, 8)) for _ in range(deg)]
    return Poly.from_roots([-r for r in roots])


def branden_random_property(trials: int, max_deg: int, seed: int) -> VerificationReport:
    if trials < 1 or max_deg < 1:
        raise ValueError("need trials >= 1 and max_deg >= 1")
    rep = VerificationReport(ClaimId.BRANDEN_TRANSFORM, (1, trials),
                             params={"trials": trials, "max_deg": max_deg, "seed": seed})
    rep.notes.append("n indexes the sampled trial")
    rng = random.Random(seed)
    for t in range(1, trials + 1):
        clock = _Clock()
        f = random_real_rooted(rng, max_deg)
        g = l_transform_poly(f)
        rep.checks += 1
        if not is_real_rooted(g):
            rep.failures.append(Failure(t, "L-transform not real-rooted", {"f": f, "Lf": g}))
        rep.timing_ms[t] = clock.ms()
    return rep


def run_all(n_max: int, k: int = 3, seed: int = 42, trials: int = 200, max_deg: int = 12,
            jobs: int = 1) -> list[VerificationReport]:
    """Every claim, in the fixed ClaimId order."""
    return [
        verify_coefficient_identities(n_max),
        verify_polynomial_recurrences(n_max),
        verify_liu_wang(n_max),
        verify_sturm_sequence(Family.Q, n_max, jobs=jobs),
        verify_sturm_sequence(Family.R, n_max, jobs=jobs),
        verify_k_logconcavity(n_max, k),
        branden_random_property(trials, max_deg, seed),
    ]
