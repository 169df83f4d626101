"""Admissible signal pairs: likelihood-ratio checks and crossing normalization.

A pair of full-support signal distributions ``(g0, g1)`` drives the whole
model: ``g0`` is the signal law under non-compliance, ``g1`` under
compliance.  The pair is *admissible* when the likelihood ratio
``pdf1/pdf0`` is strictly increasing (checked numerically on a fixed scan
grid) and the two densities cross exactly once.  Admissible pairs are
normalized by translating both distributions so the density crossing sits
at ``t = 0``; downstream formulas assume this.

The monotone-ratio check runs on ``log_pdf`` differences: analytic
log-densities stay finite deep in the tails where the densities themselves
underflow, so the strictness test is not poisoned by the 1e-300 pdf floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import ScalarDistribution, derivative_consistency, CDF_PDF_TOL, PDF_PRIME_TOL
from .errors import AdmissibilityError, NoCrossingError

__all__ = [
    "MLRP_GRID_LO",
    "MLRP_GRID_HI",
    "MLRP_GRID_N",
    "MLRP_STRICT_TOL",
    "CROSSING_MATCH_TOL",
    "NORMALIZED_DENSITY_TOL",
    "AdmissibilityReport",
    "SignalPair",
    "check_mlrp",
    "find_crossing",
    "normalize_pair",
    "check_admissible",
]

# scan grid: wide enough to exercise both tails of every catalog member,
# fine enough (step 0.012) to localize density crossings for bisection
MLRP_GRID_LO = -12.0
MLRP_GRID_HI = 12.0
MLRP_GRID_N = 2001

#: consecutive log-ratio increments must exceed this to count as strictly
#: increasing; separates genuine violations from floating-point ties
MLRP_STRICT_TOL = 1e-12
#: |pdf0 - pdf1| at the refined crossing
CROSSING_MATCH_TOL = 1e-10
#: density agreement at 0 required of a normalized pair
NORMALIZED_DENSITY_TOL = 1e-9

_BISECT_WIDTH = 1e-12


def _scan_grid() -> np.ndarray:
    return np.linspace(MLRP_GRID_LO, MLRP_GRID_HI, MLRP_GRID_N)


@dataclass(frozen=True)
class AdmissibilityReport:
    """Verdict and evidence from the numeric admissibility scan.

    ``smooth_ok``/``support_ok`` are populated by ``check_admissible``
    (the composite gate) and are None when only the ratio scan ran.
    """

    mlrp_ok: bool
    crossing_count: int
    crossing_location: float | None
    min_ratio_slope: float
    grid: tuple[float, float, int]
    smooth_ok: bool | None = None
    support_ok: bool | None = None

    @property
    def admissible(self) -> bool:
        return (
            self.mlrp_ok
            and self.crossing_count == 1
            and bool(self.smooth_ok)
            and bool(self.support_ok)
        )


@dataclass(frozen=True)
class SignalPair:
    """A normalized admissible pair; build via ``normalize_pair``.

    ``shift`` records the translation applied so the density crossing
    moved to 0 (the original crossing location).
    """

    g0: ScalarDistribution
    g1: ScalarDistribution
    shift: float = 0.0
    normalized: bool = True

    def __post_init__(self):
        if self.normalized:
            gap = abs(self.g0.pdf(0.0) - self.g1.pdf(0.0))
            if gap > NORMALIZED_DENSITY_TOL:
                raise AdmissibilityError(
                    f"pair marked normalized but |pdf0(0) - pdf1(0)| = {gap:.3e} "
                    f"> {NORMALIZED_DENSITY_TOL}"
                )

    def gap(self, t):
        """Signal gap cdf0(t) - cdf1(t), >= 0 for admissible normalized pairs.

        Computed from the lower tail for t <= 0 and from survival functions
        for t > 0 so the difference keeps full precision in both tails;
        exactly 0.0 at the infinite endpoints.
        """
        arr = np.asarray(t, dtype=float)
        lower = self.g0.cdf(arr) - self.g1.cdf(arr)
        upper = self.g1.sf(arr) - self.g0.sf(arr)
        out = np.where(arr <= 0.0, lower, upper)
        out = np.where(np.isinf(arr), 0.0, out)
        out = np.maximum(out, 0.0)
        return float(out) if arr.ndim == 0 else out


def _crossing_brackets(diff: np.ndarray, grid: np.ndarray):
    """Sign changes of ``diff`` on the grid, exact zeros included.

    Returns a list of items: a float (grid point where diff == 0 between
    opposite signs) or an ``(a, b)`` bracket with a strict sign flip.
    """
    sign = np.sign(diff)
    nonzero = np.nonzero(sign)[0]
    found = []
    for i in np.nonzero(sign == 0)[0]:
        left = sign[:i][sign[:i] != 0]
        right = sign[i + 1 :][sign[i + 1 :] != 0]
        if left.size and right.size and left[-1] != right[0]:
            found.append(float(grid[i]))
    for j in range(nonzero.size - 1):
        a, b = nonzero[j], nonzero[j + 1]
        if sign[a] != sign[b] and b == a + 1:
            found.append((float(grid[a]), float(grid[b])))
    return found


def _bisect(f, a: float, b: float, width: float = _BISECT_WIDTH) -> float:
    fa, fb = f(a), f(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if (fa > 0.0) == (fb > 0.0):
        raise NoCrossingError(f"no sign change on [{a}, {b}]")
    while b - a > width:
        m = 0.5 * (a + b)
        if m <= a or m >= b:
            break
        fm = f(m)
        if fm == 0.0:
            return m
        if (fm > 0.0) == (fa > 0.0):
            a, fa = m, fm
        else:
            b, fb = m, fm
    return 0.5 * (a + b)


def check_mlrp(g0: ScalarDistribution, g1: ScalarDistribution) -> AdmissibilityReport:
    """Scan the log likelihood ratio for strict monotonicity.

    The ratio is strictly increasing iff every consecutive increment of
    ``log_pdf1 - log_pdf0`` on the grid exceeds MLRP_STRICT_TOL.  The
    report also carries the density-crossing count and, when unique, the
    bisection-refined crossing location.
    """
    grid = _scan_grid()
    log_ratio = g1.log_pdf(grid) - g0.log_pdf(grid)
    increments = np.diff(log_ratio)
    step = grid[1] - grid[0]
    mlrp_ok = bool(np.all(increments > MLRP_STRICT_TOL))
    min_slope = float(np.min(increments) / step)

    diff = g0.pdf(grid) - g1.pdf(grid)
    brackets = _crossing_brackets(diff, grid)
    location = None
    if len(brackets) == 1:
        item = brackets[0]
        if isinstance(item, tuple):
            location = _bisect(lambda t: g0.pdf(t) - g1.pdf(t), *item)
        else:
            location = item
    return AdmissibilityReport(
        mlrp_ok=mlrp_ok,
        crossing_count=len(brackets),
        crossing_location=location,
        min_ratio_slope=min_slope,
        grid=(MLRP_GRID_LO, MLRP_GRID_HI, MLRP_GRID_N),
    )


def find_crossing(g0: ScalarDistribution, g1: ScalarDistribution) -> float:
    """Locate t* with pdf0(t*) == pdf1(t*) by grid bracketing + bisection.

    Raises NoCrossingError when the density difference never changes sign
    on the scan grid (non-admissible pair, or a crossing beyond the grid),
    and AdmissibilityError when it changes sign more than once.
    """
    grid = _scan_grid()
    diff = g0.pdf(grid) - g1.pdf(grid)
    brackets = _crossing_brackets(diff, grid)
    if not brackets:
        raise NoCrossingError(
            "density difference has no sign change on "
            f"[{MLRP_GRID_LO}, {MLRP_GRID_HI}]"
        )
    if len(brackets) > 1:
        raise AdmissibilityError(
            f"density difference changes sign {len(brackets)} times; "
            "normalization needs a unique crossing"
        )
    item = brackets[0]
    if isinstance(item, tuple):
        t_star = _bisect(lambda t: g0.pdf(t) - g1.pdf(t), *item)
    else:
        t_star = item
    mismatch = abs(g0.pdf(t_star) - g1.pdf(t_star))
    if mismatch > CROSSING_MATCH_TOL:
        raise AdmissibilityError(
            f"crossing refinement stalled: |pdf0 - pdf1| = {mismatch:.3e} at t* = {t_star}"
        )
    return t_star


def normalize_pair(g0: ScalarDistribution, g1: ScalarDistribution) -> SignalPair:
    """Translate both distributions so the density crossing sits at 0.

    Requires the monotone-ratio check to pass; the check is re-run on the
    translated pair (translation invariance, cheap insurance against a
    broken transform).  Idempotent: normalizing a normalized pair records
    shift 0.
    """
    report = check_mlrp(g0, g1)
    if not report.mlrp_ok:
        raise AdmissibilityError(
            "likelihood ratio is not strictly increasing "
            f"(min slope {report.min_ratio_slope:.3e}); cannot normalize"
        )
    t_star = find_crossing(g0, g1)
    g0n, g1n = g0.shifted(-t_star), g1.shifted(-t_star)
    recheck = check_mlrp(g0n, g1n)
    if not recheck.mlrp_ok:
        raise AdmissibilityError("monotone ratio lost under translation; numeric fault")
    return SignalPair(g0=g0n, g1=g1n, shift=t_star, normalized=True)


def check_admissible(g0: ScalarDistribution, g1: ScalarDistribution) -> AdmissibilityReport:
    """Composite gate: smoothness + full support + monotone ratio + unique crossing.

    Smoothness is the finite-difference self-consistency of each
    distribution at fixed probe points; support is strict pdf positivity
    across the scan range (guaranteed by the pdf floor, probed anyway).
    """
    probes = np.linspace(-8.0, 8.0, 17)
    smooth_ok = True
    for d in (g0, g1):
        cdf_err, pdf_err = derivative_consistency(d, probes)
        smooth_ok = smooth_ok and cdf_err < CDF_PDF_TOL and pdf_err < PDF_PRIME_TOL
    wide = np.array([MLRP_GRID_LO, -40.0, 0.0, 40.0, MLRP_GRID_HI])
    support_ok = bool(np.all(g0.pdf(wide) > 0.0) and np.all(g1.pdf(wide) > 0.0))
    scan = check_mlrp(g0, g1)
    return AdmissibilityReport(
        mlrp_ok=scan.mlrp_ok,
        crossing_count=scan.crossing_count,
        crossing_location=scan.crossing_location,
        min_ratio_slope=scan.min_ratio_slope,
        grid=scan.grid,
        smooth_ok=smooth_ok,
        support_ok=support_ok,
    )
