"""Monte Carlo measurement of the coincidence set inside a parameter box.

The question: for how much of a cost family's parameter box do the
compliance-optimal and accuracy-optimal thresholds coincide?  The
coincidence set is where the payoff slope at the compliance optimum
vanishes, i.e. F(r * gap(0) | x) = 1/2 -- one scalar equation in k
parameters, hence (for responsive families) a measure-zero set.  The
sweep estimates its Lebesgue measure by uniform sampling: the fraction of
samples whose coincidence metric falls below a tolerance ladder should
shrink linearly with the tolerance (slope ~1 on log-log axes) and vanish
in the limit.  A non-responsive family parked on the coincidence set is
the control: its fraction pins at 1 at every tolerance.

Two metrics are available:

* ``foc_gap`` (default) -- |payoff slope at 0|, one closed-form
  evaluation per sample;
* ``threshold_distance`` -- |accuracy-optimal threshold|, a full
  optimization per sample (orders of magnitude slower; meant for spot
  validation on small sample counts).

Reproducibility: all draws derive from the spec seed; per-sample work is
deterministic given its parameter vector, so results are bit-identical
regardless of how many worker threads run the sweep (capped by the
THRESHOLD_LAB_THREADS environment variable).
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .equilibrium import ModelConfig, foc_at_zero
from .errors import CertificateMissingError
from .families import CostFamily, FamilyCertificate
from .optimize import accuracy_optimal
from .signals import SignalPair

__all__ = [
    "SweepSpec",
    "SweepResult",
    "ScalingReport",
    "sample_parameters",
    "coincidence_fraction",
    "fit_loglog_slope",
    "scaling_report",
    "VERDICT_CONSISTENT",
    "VERDICT_INCONSISTENT",
    "SLOPE_VERDICT_MIN",
    "SMALLEST_FRACTION_MAX",
]

MODES = ("foc_gap", "threshold_distance")

# verdict rule: a codimension-one zero set scales linearly in the
# tolerance (slope 1); 0.8 allows sampling noise.  The smallest-rung
# fraction must also actually be small.
SLOPE_VERDICT_MIN = 0.8
SMALLEST_FRACTION_MAX = 0.01
VERDICT_CONSISTENT = "consistent with measure zero"
VERDICT_INCONSISTENT = "not consistent with measure zero"

_BOOTSTRAP_SALT = 48879


@dataclass(frozen=True)
class SweepSpec:
    """Everything a sweep needs; immutable and fully seeded."""

    family: CostFamily
    pair: SignalPair
    reward: float
    n_samples: int
    tolerances: tuple[float, ...]
    seed: int
    mode: str = "foc_gap"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.n_samples < 1:
            raise ValueError("n_samples must be >= 1")
        if self.reward == 0.0:
            raise ValueError("sweep requires a nonzero reward")
        tols = tuple(float(t) for t in self.tolerances)
        if not tols or any(t <= 0.0 for t in tols):
            raise ValueError("tolerances must be positive")
        if any(nxt >= prev for prev, nxt in zip(tols, tols[1:])):
            raise ValueError(f"tolerances must be strictly descending, got {tols}")


@dataclass(frozen=True, eq=False)
class SweepResult:
    """Per-tolerance coincidence fractions plus the per-sample records."""

    tolerances: tuple[float, ...]
    fractions: tuple[float, ...]
    scaling_slope: float
    degenerate_fit: bool
    n_samples: int
    seed: int
    mode: str
    samples: np.ndarray  # (n, k)
    foc_gaps: np.ndarray  # (n,)
    accuracy_thresholds: np.ndarray  # (n,), nan in foc_gap mode
    metrics: np.ndarray  # (n,), the coincidence metric per sample
    certificate: FamilyCertificate
    samples_csv_path: str | None = None

    def with_csv_path(self, path: str) -> "SweepResult":
        return replace(self, samples_csv_path=path)


@dataclass(frozen=True)
class ScalingReport:
    """Slope, bootstrap band, and the measure-zero verdict."""

    scaling_slope: float
    slope_lo: float
    slope_hi: float
    smallest_fraction: float
    consistent: bool
    verdict: str
    n_resamples: int


def sample_parameters(spec: SweepSpec) -> np.ndarray:
    """n_samples i.i.d. uniform draws over the box, reproducible from seed."""
    rng = np.random.default_rng(spec.seed)
    return spec.family.box.sample(rng, spec.n_samples)


def fit_loglog_slope(tolerances, fractions):
    """Least-squares slope of log(fraction) against log(tolerance).

    Only strictly positive fractions enter the fit (a zero count carries
    no scale information).  Returns ``(slope, degenerate)``; the fit is
    degenerate (slope nan) with fewer than two usable points.
    """
    ts, fs = [], []
    for t, f in zip(tolerances, fractions):
        if f > 0.0:
            ts.append(math.log(t))
            fs.append(math.log(f))
    if len(ts) < 2:
        return math.nan, True
    x = np.asarray(ts)
    y = np.asarray(fs)
    design = np.vstack([np.ones_like(x), x]).T
    coef, *_ = np.linalg.lstsq(design, y, rcond=None)
    return float(coef[1]), False


def _thread_count() -> int:
    raw = os.environ.get("THRESHOLD_LAB_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, min(n, os.cpu_count() or 1))


def _evaluate_block(spec: SweepSpec, xs: np.ndarray, focs: np.ndarray, accs: np.ndarray, start: int) -> None:
    for offset, x in enumerate(xs):
        cost = spec.family.instantiate(x)
        model = ModelConfig(pair=spec.pair, cost=cost, reward=spec.reward)
        focs[start + offset] = foc_at_zero(model)
        if spec.mode == "threshold_distance":
            accs[start + offset] = accuracy_optimal(model).threshold


def coincidence_fraction(spec: SweepSpec, certificate: FamilyCertificate) -> SweepResult:
    """Run the sweep and estimate the measure of the coincidence set.

    The certificate is required evidence that the structural checks were
    run; the sweep itself proceeds whatever the flags say (running a
    non-responsive family is exactly how the control experiment shows the
    responsiveness hypothesis is load-bearing) and the flags travel with
    the result.
    """
    if certificate is None:
        raise CertificateMissingError(
            "coincidence_fraction needs the family's certificate; run certify(family) first"
        )
    samples = sample_parameters(spec)
    n = spec.n_samples
    focs = np.empty(n)
    accs = np.full(n, math.nan)

    threads = _thread_count()
    if threads == 1 or n < 64:
        _evaluate_block(spec, samples, focs, accs, 0)
    else:
        # disjoint index blocks; the reduction is a plain indexed write, so
        # scheduling order cannot change the result
        edges = np.linspace(0, n, threads + 1, dtype=int)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(_evaluate_block, spec, samples[a:b], focs, accs, int(a))
                for a, b in zip(edges[:-1], edges[1:])
                if b > a
            ]
            for fut in futures:
                fut.result()

    metrics = np.abs(focs) if spec.mode == "foc_gap" else np.abs(accs)
    fractions = tuple(float(np.mean(metrics < tol)) for tol in spec.tolerances)
    slope, degenerate = fit_loglog_slope(spec.tolerances, fractions)
    return SweepResult(
        tolerances=spec.tolerances,
        fractions=fractions,
        scaling_slope=slope,
        degenerate_fit=degenerate,
        n_samples=n,
        seed=spec.seed,
        mode=spec.mode,
        samples=samples,
        foc_gaps=focs,
        accuracy_thresholds=accs,
        metrics=metrics,
        certificate=certificate,
    )


def scaling_report(result: SweepResult, n_resamples: int = 200) -> ScalingReport:
    """Bootstrap the slope and issue the measure-zero verdict.

    Consistent iff the fitted slope reaches SLOPE_VERDICT_MIN and the
    smallest-tolerance fraction is below SMALLEST_FRACTION_MAX.  The
    bootstrap resamples the per-sample metrics (seeded from the sweep
    seed, so reruns are bit-identical) and reports the 2.5/97.5 percentile
    band of the refitted slope.
    """
    rng = np.random.default_rng((result.seed, _BOOTSTRAP_SALT))
    slopes = []
    n = result.n_samples
    for _ in range(n_resamples):
        take = result.metrics[rng.integers(0, n, n)]
        fracs = tuple(float(np.mean(take < tol)) for tol in result.tolerances)
        slope, degenerate = fit_loglog_slope(result.tolerances, fracs)
        if not degenerate:
            slopes.append(slope)
    if slopes:
        lo, hi = np.percentile(slopes, [2.5, 97.5])
    else:
        lo = hi = math.nan
    smallest = result.fractions[-1]
    consistent = (
        not result.degenerate_fit
        and result.scaling_slope >= SLOPE_VERDICT_MIN
        and smallest < SMALLEST_FRACTION_MAX
    )
    return ScalingReport(
        scaling_slope=result.scaling_slope,
        slope_lo=float(lo),
        slope_hi=float(hi),
        smallest_fraction=smallest,
        consistent=consistent,
        verdict=VERDICT_CONSISTENT if consistent else VERDICT_INCONSISTENT,
        n_resamples=n_resamples,
    )
