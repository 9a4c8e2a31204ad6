"""Solve the two endpoint-curvature equations for the positive pair (alpha, beta).

With a = -2 cross(T0, T1), b = 3 cross(T0, P1 - P0), d = -3 cross(T1, P1 - P0)
the signed end curvatures of a segment built from (alpha, beta) are

    kappa(0) = alpha^2 (a + b beta) / (2 beta)
    kappa(1) = beta^2 (a + d alpha) / (2 alpha)

Given targets k0, k1 this is a polynomial system. In the general case
(a != 0, k0 != 0, k1 != 0) eliminating beta = a alpha^2 / (2 k0 - b alpha^2)
reduces it to a quartic in alpha. Elimination is invalid when a, k0 or k1
vanishes; those branches decouple and are solved in closed form. Every
candidate, whatever its branch, is verified against both original equations
before being returned, which also discards spurious roots introduced by
clearing denominators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import (
    DegenerateBranch,
    EmptyCandidates,
    NoFeasiblePair,
    ZeroPolynomial,
)
from .segment import G2EndData, SegmentParams, kappa_end, kappa_start
from .geom import cross2

# A quartic root is rejected when the elimination denominator 2*k0 - b*alpha^2
# is this small relative to 2*k0 (the solution would need a = 0).
DENOM_TOL = 1e-12
# Roots closer than this (relative) are one root reported once. Double roots
# of a degree-4 polynomial are only resolvable to about sqrt(eps) in doubles,
# so the merge radius must sit above that.
ROOT_MERGE_TOL = 1e-7


@dataclass(frozen=True)
class SegmentCoefficients:
    """The three scalars that determine the (alpha, beta) system for a segment."""

    a: float
    b: float
    d: float


@dataclass(frozen=True)
class Quartic:
    """Coefficients, highest degree first: c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0."""

    c4: float
    c3: float
    c2: float
    c1: float
    c0: float

    def coeffs(self) -> tuple[float, float, float, float, float]:
        return (self.c4, self.c3, self.c2, self.c1, self.c0)

    def __call__(self, x: float) -> float:
        return (((self.c4 * x + self.c3) * x + self.c2) * x + self.c1) * x + self.c0

    def deriv(self, x: float) -> float:
        return ((4.0 * self.c4 * x + 3.0 * self.c3) * x + 2.0 * self.c2) * x + self.c1


@dataclass(frozen=True)
class CandidatePair:
    """One feasible (alpha, beta) with the absolute residuals of both equations."""

    alpha: float
    beta: float
    residual0: float
    residual1: float
    underdetermined: bool = False


@dataclass(frozen=True)
class SolverConfig:
    alpha_max: float = 1e6
    residual_tol: float = 1e-9
    root_tol: float = 1e-12

    def __post_init__(self):
        if not (self.alpha_max > 0 and self.residual_tol > 0 and self.root_tol > 0):
            raise ValueError("SolverConfig fields must all be positive")


DEFAULT_CONFIG = SolverConfig()


def coefficients(data: G2EndData) -> SegmentCoefficients:
    dp = data.end - data.start
    t0 = data.t_start.as_vec()
    t1 = data.t_end.as_vec()
    return SegmentCoefficients(
        a=-2.0 * cross2(t0, t1),
        b=3.0 * cross2(t0, dp),
        d=-3.0 * cross2(t1, dp),
    )


def build_quartic(co: SegmentCoefficients, k0: float, k1: float) -> Quartic:
    """Quartic in alpha from eliminating beta; requires the general branch."""
    if co.a == 0.0 or k0 == 0.0:
        raise DegenerateBranch(
            f"elimination needs a != 0 and k0 != 0 (a={co.a}, k0={k0})"
        )
    a, b, d = co.a, co.b, co.d
    return Quartic(
        2.0 * k1 * b * b - a * a * d,
        -(a**3),
        -8.0 * k0 * k1 * b,
        0.0,
        8.0 * k0 * k0 * k1,
    )


def real_roots(q: Quartic, tol: float = DEFAULT_CONFIG.root_tol) -> list[float]:
    """All real roots of the (possibly degenerate) polynomial, ascending.

    Every returned x satisfies |q(x)| <= tol * max|c| * max(1, |x|^4).
    Multiple roots are reported once.
    """
    coeffs = list(q.coeffs())
    if all(c == 0.0 for c in coeffs):
        raise ZeroPolynomial("all five coefficients are zero")
    while coeffs and coeffs[0] == 0.0:
        coeffs.pop(0)
    if len(coeffs) == 1:
        return []  # nonzero constant
    scale = max(abs(c) for c in coeffs)
    raw = np.roots([c / scale for c in coeffs])

    max_c = max(abs(c) for c in q.coeffs())
    accepted: list[float] = []
    for z in raw:
        x = float(z.real)
        # Newton polish; genuinely complex roots fail the residual bound below.
        for _ in range(60):
            fp = q.deriv(x)
            if fp == 0.0 or not math.isfinite(fp):
                break
            step = q(x) / fp
            x -= step
            if abs(step) <= 1e-16 * max(1.0, abs(x)):
                break
        if not math.isfinite(x):
            continue
        if abs(q(x)) <= tol * max_c * max(1.0, abs(x)) ** 4:
            accepted.append(x)

    accepted.sort()
    merged: list[float] = []
    for x in accepted:
        if merged and abs(x - merged[-1]) <= ROOT_MERGE_TOL * max(1.0, abs(x)):
            continue
        merged.append(x)
    return merged


def residuals(data: G2EndData, alpha: float, beta: float) -> tuple[float, float]:
    """Absolute errors of both curvature equations at (alpha, beta)."""
    params = SegmentParams(alpha, beta)  # raises InvalidParams for nonpositive input
    r0 = abs(kappa_start(data, params) - data.kappa_start)
    r1 = abs(kappa_end(data, params) - data.kappa_end)
    return (r0, r1)


def _half_square_root(coef: float, target: float) -> float | str | None:
    """Solve x^2 * coef / 2 = target for x > 0.

    Returns the root, "free" when every positive x works, or None when no
    positive x works.
    """
    if coef == 0.0:
        return "free" if target == 0.0 else None
    ratio = 2.0 * target / coef
    if ratio <= 0.0:
        return None
    return math.sqrt(ratio)


def solve_pairs(data: G2EndData, config: SolverConfig = DEFAULT_CONFIG) -> list[CandidatePair]:
    """All feasible positive (alpha, beta) pairs for the segment's G2 data.

    Raises NoFeasiblePair when the targets cannot be met by one Ball cubic;
    the designer must then adjust tangents/curvatures or split the span.
    """
    co = coefficients(data)
    a, b, d = co.a, co.b, co.d
    k0, k1 = data.kappa_start, data.kappa_end
    chord = data.chord()

    raw_pairs: list[tuple[float, float, bool]] = []

    if a == 0.0:
        # Parallel end tangents: the equations decouple into
        # alpha^2 b / 2 = k0 and beta^2 d / 2 = k1.
        al = _half_square_root(b, k0)
        be = _half_square_root(d, k1)
        if al is not None and be is not None:
            free = al == "free" or be == "free"
            al_v = 2.0 / chord if al == "free" else al
            be_v = 2.0 / chord if be == "free" else be
            raw_pairs.append((al_v, be_v, free))
    elif k0 == 0.0:
        # First equation forces a + b*beta = 0.
        if b != 0.0:
            be = -a / b
            if be > 0.0:
                den = 2.0 * k1 - be * be * d
                if den != 0.0:
                    al = be * be * a / den
                    if al > 0.0:
                        raw_pairs.append((al, be, False))
    elif k1 == 0.0:
        # Second equation forces a + d*alpha = 0.
        if d != 0.0:
            al = -a / d
            if al > 0.0:
                den = 2.0 * k0 - b * al * al
                if den != 0.0 and abs(den) > DENOM_TOL * abs(2.0 * k0):
                    be = a * al * al / den
                    if be > 0.0:
                        raw_pairs.append((al, be, False))
    else:
        quartic = build_quartic(co, k0, k1)
        for al in real_roots(quartic, config.root_tol):
            if al <= 0.0:
                continue
            den = 2.0 * k0 - b * al * al
            if abs(den) <= DENOM_TOL * abs(2.0 * k0):
                continue
            be = a * al * al / den
            if be > 0.0:
                raw_pairs.append((al, be, False))

    candidates: list[CandidatePair] = []
    for al, be, free in raw_pairs:
        if not (0.0 < al <= config.alpha_max and 0.0 < be <= config.alpha_max):
            continue
        r0, r1 = residuals(data, al, be)
        if r0 <= config.residual_tol * (1.0 + abs(k0)) and r1 <= config.residual_tol * (1.0 + abs(k1)):
            candidates.append(CandidatePair(al, be, r0, r1, underdetermined=free))

    candidates.sort(key=lambda c: (c.alpha, c.beta))
    deduped: list[CandidatePair] = []
    for c in candidates:
        if deduped and (
            abs(c.alpha - deduped[-1].alpha) <= ROOT_MERGE_TOL * max(1.0, abs(c.alpha))
            and abs(c.beta - deduped[-1].beta) <= ROOT_MERGE_TOL * max(1.0, abs(c.beta))
        ):
            continue
        deduped.append(c)

    if not deduped:
        raise NoFeasiblePair(
            "no positive (alpha, beta) satisfies both curvature equations "
            f"(a={a:.6g}, b={b:.6g}, d={d:.6g}, k0={k0:.6g}, k1={k1:.6g}, chord={chord:.6g})"
        )
    return deduped


def select_default(candidates: Sequence[CandidatePair], chord: float) -> CandidatePair:
    """Prefer end speeds 2/alpha, 2/beta near the chord length; ties take smaller alpha."""
    if not candidates:
        raise EmptyCandidates("no candidates to select from")
    if chord <= 0.0:
        raise ValueError("chord must be positive")

    def score(c: CandidatePair) -> float:
        return (c.alpha * chord / 2.0 - 1.0) ** 2 + (c.beta * chord / 2.0 - 1.0) ** 2

    best = min(candidates, key=lambda c: (score(c), c.alpha))
    return best
