"""Compliance-optimal and accuracy-optimal thresholds, and their coincidence.

The compliance-optimal threshold of a normalized admissible pair is 0 in
closed form (the signal gap cdf0 - cdf1 peaks where the densities cross,
and the cost CDF is increasing); ``compliance_optimal`` returns it and
runs a numeric guardrail over the search grid that fails loudly if any
grid point beats it, which would indicate a broken normalization upstream.

The accuracy payoff carries no concavity guarantee, so
``accuracy_optimal`` does a dense grid scan over the search window plus
the two infinite endpoints, refines the best finite candidate by
golden-section, and then pins the stationary point by bisecting the
closed-form payoff slope inside a small bracket.  The polish step matters:
near a smooth maximum the payoff is flat to machine precision within
~1e-8 of the optimum, so value comparisons alone cannot localize the
argmax tighter than that, while the slope crosses zero transversally and
bisects to ~1e-12.

Coincidence of the two optima is judged by threshold proximity
(|accuracy threshold| < tol with a finite accuracy optimum); the payoff
slope at zero is reported as a diagnostic because its vanishing is only a
necessary condition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .equilibrium import ModelConfig, deu_pos, eu_pos, foc_at_zero, prevalence_pos
from .errors import VerificationFailedError

__all__ = [
    "SEARCH_LO",
    "SEARCH_HI",
    "SEARCH_N",
    "GUARDRAIL_SLACK",
    "OptResult",
    "EquivalenceVerdict",
    "compliance_optimal",
    "accuracy_optimal",
    "equivalence_test",
]

# search window: beyond +-10 every catalog distribution sits within 1e-15
# of its tail limit, so the infinite endpoints stand in for the tails
SEARCH_LO = -10.0
SEARCH_HI = 10.0
SEARCH_N = 401

GUARDRAIL_SLACK = 1e-9
_GOLDEN_TOL = 1e-10
_POLISH_HALF_WIDTH = 1e-6
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class OptResult:
    """An optimum with provenance: how it was found and how tightly."""

    threshold: float
    value: float
    method: str  # closed_form | grid_refine | boundary
    iterations: int
    bracket_width: float


@dataclass(frozen=True)
class EquivalenceVerdict:
    """Do the compliance and accuracy optima coincide at this tolerance?"""

    compliance_t: float
    accuracy_t: float
    distance: float
    foc_gap: float
    equivalent: bool
    tolerance: float


def _grid(lo: float, hi: float, n: int) -> np.ndarray:
    return np.linspace(lo, hi, n)


def compliance_optimal(m: ModelConfig, lo: float = SEARCH_LO, hi: float = SEARCH_HI, n: int = SEARCH_N) -> OptResult:
    """Threshold 0 by closed form, cross-checked on the grid.

    Requires r > 0 (for negative rewards the roles of the rules flip and
    the closed form does not apply).  Raises VerificationFailedError if
    any grid point or infinite endpoint beats prevalence at 0 by more
    than GUARDRAIL_SLACK.
    """
    if m.reward <= 0.0:
        raise ValueError("compliance_optimal requires reward > 0")
    at_zero = prevalence_pos(m, 0.0)
    candidates = prevalence_pos(m, _grid(lo, hi, n))
    endpoints = prevalence_pos(m, np.array([-math.inf, math.inf]))
    best = float(max(np.max(candidates), np.max(endpoints)))
    if best > at_zero + GUARDRAIL_SLACK:
        raise VerificationFailedError(
            f"prevalence {best!r} on the grid exceeds prevalence {at_zero!r} at 0; "
            "the pair normalization looks broken"
        )
    return OptResult(threshold=0.0, value=at_zero, method="closed_form", iterations=0, bracket_width=0.0)


def _golden_max(f, a: float, b: float, tol: float = _GOLDEN_TOL):
    """Golden-section maximization of a unimodal bracket; returns
    (x, f(x), iterations, final bracket width)."""
    x1 = b - _INV_PHI * (b - a)
    x2 = a + _INV_PHI * (b - a)
    f1, f2 = f(x1), f(x2)
    iters = 0
    while b - a > tol and iters < 200:
        if f1 < f2:
            a, x1, f1 = x1, x2, f2
            x2 = a + _INV_PHI * (b - a)
            f2 = f(x2)
        else:
            b, x2, f2 = x2, x1, f1
            x1 = b - _INV_PHI * (b - a)
            f1 = f(x1)
        iters += 1
    x = x1 if f1 >= f2 else x2
    return x, f(x), iters, b - a


def _polish_stationary(m: ModelConfig, x: float, half_width: float = _POLISH_HALF_WIDTH):
    """Bisect deu_pos to pin the stationary point near x; None if no sign change."""
    a, b = x - half_width, x + half_width
    fa, fb = deu_pos(m, a), deu_pos(m, b)
    if fa == 0.0:
        return a, 0.0
    if fb == 0.0:
        return b, 0.0
    if (fa > 0.0) == (fb > 0.0):
        return None
    while b - a > 1e-12:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        fm = deu_pos(m, mid)
        if fm == 0.0:
            return mid, 0.0
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    return 0.5 * (a + b), b - a


def accuracy_optimal(m: ModelConfig, lo: float = SEARCH_LO, hi: float = SEARCH_HI, n: int = SEARCH_N) -> OptResult:
    """Global maximizer of the accuracy payoff over the extended reals.

    Dense grid scan plus both infinite endpoints; the best finite
    candidate is refined by golden-section and slope bisection.  Ties are
    broken toward the finite candidate, then toward the smaller threshold
    (an infinite threshold is a null policy; prefer an informative one).
    """
    grid = _grid(lo, hi, n)
    values = eu_pos(m, grid)
    i = int(np.argmax(values))
    a = grid[max(i - 1, 0)]
    b = grid[min(i + 1, n - 1)]
    x, fx, iters, width = _golden_max(lambda t: eu_pos(m, t), a, b)
    method = "grid_refine"
    polished = _polish_stationary(m, x)
    if polished is not None:
        px, pwidth = polished
        pv = eu_pos(m, px)
        if pv >= fx:
            x, fx, width = px, pv, pwidth
    if fx < values[i]:
        # refinement never genuinely loses to its own bracket; if float
        # noise says otherwise, keep the grid point
        x, fx, width = float(grid[i]), float(values[i]), width

    eu_neg_inf = eu_pos(m, -math.inf)
    eu_pos_inf = eu_pos(m, math.inf)
    candidates = [
        (fx, x, method, iters, width),
        (eu_neg_inf, -math.inf, "boundary", 0, 0.0),
        (eu_pos_inf, math.inf, "boundary", 0, 0.0),
    ]
    best = candidates[0]
    for cand in candidates[1:]:
        if cand[0] > best[0]:
            best = cand
    value, threshold, method, iters, width = best
    return OptResult(
        threshold=float(threshold),
        value=float(value),
        method=method,
        iterations=int(iters),
        bracket_width=float(width),
    )


def equivalence_test(m: ModelConfig, tol: float) -> EquivalenceVerdict:
    """Coincidence verdict: is the accuracy optimum at the compliance optimum?

    Equivalent iff the accuracy-optimal threshold is finite and within tol
    of 0.  The payoff slope at 0 (a necessary condition for interior
    coincidence) is reported as the diagnostic ``foc_gap``.
    """
    if tol <= 0.0:
        raise ValueError("tolerance must be > 0")
    if m.reward == 0.0:
        raise ValueError("equivalence is ill-posed at reward 0 (prevalence never moves)")
    compliance = compliance_optimal(m)
    accuracy = accuracy_optimal(m)
    distance = abs(accuracy.threshold - compliance.threshold)
    equivalent = bool(math.isfinite(accuracy.threshold) and distance < tol)
    return EquivalenceVerdict(
        compliance_t=float(compliance.threshold),
        accuracy_t=float(accuracy.threshold),
        distance=float(distance),
        foc_gap=float(foc_at_zero(m)),
        equivalent=equivalent,
        tolerance=float(tol),
    )
