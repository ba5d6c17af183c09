"""Score normalization, component weighting, and composite risk.

The three component scores live on incompatible scales, so each is min-max
normalized over the population before the weighted combination. Component
weights come either from named presets or from a pairwise-comparison matrix
resolved through its principal eigenvector.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .model import UserId, WeightVector

#: Value assigned to every score when the population has no spread.
DEGENERATE_NORMALIZED = 0.5

#: Random-consistency index for a 3x3 pairwise comparison matrix.
RANDOM_INDEX_3 = 0.58

#: Named component weightings. The balanced preset uses 0.33 per component
#: (not 1/3) so reported composites match the published rounding.
SCENARIO_PRESETS: dict[str, WeightVector] = {
    "equal": WeightVector(0.33, 0.33, 0.33),
    "content-focused": WeightVector(0.20, 0.30, 0.50),
    "graph-focused": WeightVector(0.10, 0.60, 0.30),
}

DEFAULT_SCENARIO = "equal"


def normalize_population(
    scores: Mapping[UserId, float], method: str = "minmax"
) -> dict[UserId, float]:
    """Rescale a population of raw scores into [0, 1].

    ``minmax`` maps the observed range linearly; ``rank`` maps each score to
    its average fractional rank (ties share a rank). A constant population
    maps to 0.5 everywhere under either method.
    """
    if not scores:
        return {}
    if method == "minmax":
        lo = min(scores.values())
        hi = max(scores.values())
        if hi - lo <= 0.0:
            return {u: DEGENERATE_NORMALIZED for u in scores}
        return {u: (v - lo) / (hi - lo) for u, v in scores.items()}
    if method == "rank":
        if len(scores) == 1:
            return {u: DEGENERATE_NORMALIZED for u in scores}
        ordered = sorted(scores.values())
        if ordered[0] == ordered[-1]:
            return {u: DEGENERATE_NORMALIZED for u in scores}
        # average rank for ties, scaled to [0, 1]
        first: dict[float, int] = {}
        count: dict[float, int] = {}
        for i, v in enumerate(ordered):
            first.setdefault(v, i)
            count[v] = count.get(v, 0) + 1
        n = len(ordered)
        return {
            u: (first[v] + (count[v] - 1) / 2.0) / (n - 1) for u, v in scores.items()
        }
    raise ValueError(f"unknown normalization method: {method!r}")


def cprs(
    aprs_n: Mapping[UserId, float],
    sgprs_n: Mapping[UserId, float],
    cbprs_n: Mapping[UserId, float],
    weights: WeightVector,
) -> dict[UserId, float]:
    """Composite score per user from normalized components.

    All three mappings must cover the same user set.
    """
    users = set(aprs_n)
    if set(sgprs_n) != users or set(cbprs_n) != users:
        missing = (users ^ set(sgprs_n)) | (users ^ set(cbprs_n))
        raise ValueError(f"component score user sets differ: {sorted(missing)[:5]}")
    return {
        u: weights.w_aprs * aprs_n[u]
        + weights.w_sgprs * sgprs_n[u]
        + weights.w_cbprs * cbprs_n[u]
        for u in users
    }


def resolve_weights(scenario: str | WeightVector) -> WeightVector:
    """Look up a preset by name, or pass an explicit vector through."""
    if isinstance(scenario, WeightVector):
        return scenario
    try:
        return SCENARIO_PRESETS[scenario]
    except KeyError:
        raise ValueError(
            f"unknown weight scenario {scenario!r}; "
            f"expected one of {sorted(SCENARIO_PRESETS)}"
        ) from None


@dataclass(frozen=True)
class AhpResult:
    weights: WeightVector
    lambda_max: float
    consistency_ratio: float


def ahp_weights(matrix: Sequence[Sequence[float]], tolerance: float = 1e-12) -> AhpResult:
    """Derive component weights from a 3x3 pairwise comparison matrix.

    The weight vector is the normalized principal eigenvector, found by
    power iteration. The consistency ratio is (lambda_max - n)/(n - 1)
    divided by the random index for n = 3; callers should reject matrices
    with a ratio above 0.1.
    """
    a = np.asarray(matrix, dtype=float)
    if a.shape != (3, 3):
        raise ValueError(f"expected a 3x3 matrix, got shape {a.shape}")
    if np.any(a <= 0.0):
        raise ValueError("pairwise comparison entries must be positive")
    for i in range(3):
        if abs(a[i, i] - 1.0) > 1e-9:
            raise ValueError("diagonal entries must be 1")
        for j in range(i + 1, 3):
            if abs(a[i, j] * a[j, i] - 1.0) > 1e-6:
                raise ValueError(
                    f"matrix is not reciprocal at ({i}, {j}): "
                    f"{a[i, j]} * {a[j, i]} != 1"
                )
    v = np.full(3, 1.0 / 3.0)
    lam = 0.0
    for _ in range(500):
        w = a @ v
        lam_new = float(w.sum())
        w = w / lam_new
        if np.max(np.abs(w - v)) < tolerance and abs(lam_new - lam) < tolerance:
            v = w
            lam = lam_new
            break
        v = w
        lam = lam_new
    # Rayleigh estimate of the principal eigenvalue at the converged vector
    lam = float(np.mean((a @ v) / v))
    cr = ((lam - 3.0) / 2.0) / RANDOM_INDEX_3
    return AhpResult(
        weights=WeightVector(float(v[0]), float(v[1]), float(v[2])),
        lambda_max=lam,
        consistency_ratio=cr,
    )


@dataclass(frozen=True)
class ComponentSummary:
    minimum: float
    mean: float
    maximum: float

    @classmethod
    def of(cls, values: Iterable[float]) -> "ComponentSummary":
        xs = list(values)
        if not xs:
            raise ValueError("cannot summarize an empty population")
        return cls(minimum=min(xs), mean=sum(xs) / len(xs), maximum=max(xs))


def summarize(scores: Mapping[UserId, float]) -> ComponentSummary:
    return ComponentSummary.of(scores.values())


def scenario_table(
    aprs_n: Mapping[UserId, float],
    sgprs_n: Mapping[UserId, float],
    cbprs_n: Mapping[UserId, float],
    scenarios: Mapping[str, WeightVector] | None = None,
) -> dict[str, dict[str, float]]:
    """Mean composite score under each weighting scenario.

    Reported per scenario: the weights and the population mean composite.
    The mean of a weighted sum equals the weighted sum of the means, so the
    table can be read directly against per-component means.
    """
    chosen = dict(scenarios) if scenarios is not None else dict(SCENARIO_PRESETS)
    out: dict[str, dict[str, float]] = {}
    for name, weights in chosen.items():
        composite = cprs(aprs_n, sgprs_n, cbprs_n, weights)
        out[name] = {
            "w_aprs": weights.w_aprs,
            "w_sgprs": weights.w_sgprs,
            "w_cbprs": weights.w_cbprs,
            "mean_cprs": sum(composite.values()) / len(composite) if composite else math.nan,
        }
    return out
