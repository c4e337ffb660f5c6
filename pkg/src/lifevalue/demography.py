"""Age-structured population summaries.

Works on single-year age distributions: mean age of the living, crude
mortality, empirical age CDF, per-capita disposable income and potential
years of life lost. A count recorded at age x covers the interval
[x, x+1), so interval midpoints x + 0.5 are used wherever an exact age
is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ValidationError

__all__ = [
    "AgeDistribution",
    "EmpiricalAgeCdf",
    "EconomicInputs",
    "mean_population",
    "crude_mortality",
    "mean_age",
    "empirical_cdf",
    "disposable_income",
    "pyll",
]


@dataclass(frozen=True)
class AgeDistribution:
    """Population counts by completed age, contiguous from age 0.

    counts[x] is the (possibly fractional) number of people aged x,
    i.e. who have lived at least x but less than x+1 years. When
    ``open_ended`` is set the final bin means "max_age and older".
    """

    counts: tuple[float, ...]
    open_ended: bool = False

    def __post_init__(self) -> None:
        if len(self.counts) == 0:
            raise ValidationError("age distribution is empty")
        object.__setattr__(self, "counts", tuple(float(c) for c in self.counts))
        for x, c in enumerate(self.counts):
            if not math.isfinite(c) or c < 0:
                raise ValidationError(f"count at age {x} must be finite and >= 0, got {c}")
        if sum(self.counts) <= 0:
            raise ValidationError("total population must be > 0")

    @property
    def max_age(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> float:
        return float(sum(self.counts))


@dataclass(frozen=True)
class EmpiricalAgeCdf:
    """Cumulative population share below each age boundary.

    points are (boundary, share) pairs with strictly increasing
    boundaries, non-decreasing shares in [0, 1], and a final share of
    exactly 1 (within 1e-12).
    """

    points: tuple[tuple[float, float], ...]

    def __post_init__(self) -> None:
        if not self.points:
            raise ValidationError("empirical CDF has no points")
        pts = tuple((float(x), float(f)) for x, f in self.points)
        object.__setattr__(self, "points", pts)
        prev_x, prev_f = None, 0.0
        for x, f in pts:
            if prev_x is not None and x <= prev_x:
                raise ValidationError(f"boundaries must strictly increase at x={x}")
            if f < -1e-12 or f > 1 + 1e-12 or f < prev_f - 1e-12:
                raise ValidationError(f"cumulative share out of order at x={x}")
            prev_x, prev_f = x, f
        if abs(pts[-1][1] - 1.0) > 1e-12:
            raise ValidationError(f"final cumulative share must be 1, got {pts[-1][1]}")

    @property
    def boundaries(self) -> np.ndarray:
        return np.array([x for x, _ in self.points])

    @property
    def values(self) -> np.ndarray:
        return np.array([f for _, f in self.points])


@dataclass(frozen=True)
class EconomicInputs:
    """Regional income, mortality and rate inputs for one scenario year.

    Mandatory payments may be given either as a regional total (divided
    by mean population) or directly per capita. Mean population may be
    given directly or as start/end-of-year counts.
    """

    gross_income_per_capita: float
    deaths_annual: float
    deposit_rate_i: float
    mandatory_payments_total: float | None = None
    mandatory_payments_per_capita: float | None = None
    population_start: float | None = None
    population_end: float | None = None
    population_mean: float | None = None
    grp_per_capita: float | None = None
    region: str = field(default="", compare=False)

    def __post_init__(self) -> None:
        if self.gross_income_per_capita <= 0:
            raise ValidationError("gross_income_per_capita must be > 0")
        if self.deaths_annual < 0:
            raise ValidationError("deaths_annual must be >= 0")
        if not 0 <= self.deposit_rate_i < 1:
            raise ValidationError("deposit_rate_i must lie in [0, 1)")
        if (self.mandatory_payments_total is None) == (self.mandatory_payments_per_capita is None):
            raise ValidationError(
                "provide exactly one of mandatory_payments_total / mandatory_payments_per_capita")
        payments = (self.mandatory_payments_total if self.mandatory_payments_total is not None
                    else self.mandatory_payments_per_capita)
        if payments < 0:
            raise ValidationError("mandatory payments must be >= 0")
        if self.population_mean is None and (self.population_start is None or self.population_end is None):
            raise ValidationError("provide population_mean or both population_start/population_end")
        if self.grp_per_capita is not None and self.grp_per_capita <= 0:
            raise ValidationError("grp_per_capita must be > 0")
        self.resolved_population_mean()  # fail fast on non-positive populations

    def resolved_population_mean(self) -> float:
        if self.population_mean is not None:
            if self.population_mean <= 0:
                raise ValidationError("population_mean must be > 0")
            return float(self.population_mean)
        return mean_population(self.population_start, self.population_end)

    def resolved_payments_per_capita(self) -> float:
        if self.mandatory_payments_per_capita is not None:
            return float(self.mandatory_payments_per_capita)
        return self.mandatory_payments_total / self.resolved_population_mean()


def mean_population(population_start: float, population_end: float) -> float:
    """Mid-year population as the mean of start- and end-of-year counts."""
    if population_start <= 0 or population_end <= 0:
        raise ValidationError("population counts must be > 0")
    return (population_start + population_end) / 2.0


def crude_mortality(deaths_annual: float, population_mean: float) -> float:
    """All-cause deaths per person-year; the background risk of death."""
    if population_mean <= 0:
        raise ValidationError("population_mean must be > 0")
    if deaths_annual < 0:
        raise ValidationError("deaths_annual must be >= 0")
    return deaths_annual / population_mean


def mean_age(dist: AgeDistribution) -> float:
    """Population mean age using interval midpoints x + 0.5.

    An open-ended terminal bin is treated as the point age max_age + 0.5.
    """
    counts = np.asarray(dist.counts)
    midpoints = np.arange(len(counts)) + 0.5
    return float(np.dot(counts, midpoints) / counts.sum())


def empirical_cdf(dist: AgeDistribution) -> EmpiricalAgeCdf:
    """Cumulative share of the population younger than each age boundary.

    A person counted at age x has lived at least x full years, so the
    share strictly below boundary x+1 includes everyone aged <= x.
    The leading point (0, 0) is always present.
    """
    counts = np.asarray(dist.counts)
    shares = np.cumsum(counts) / counts.sum()
    points = [(0.0, 0.0)]
    points.extend((float(x + 1), float(shares[x])) for x in range(len(counts)))
    # guard against cumsum round-off at the top
    points[-1] = (points[-1][0], 1.0)
    return EmpiricalAgeCdf(tuple(points))


def disposable_income(inputs: EconomicInputs) -> float:
    """Per-capita income net of mandatory payments (taxes, duties)."""
    net = inputs.gross_income_per_capita - inputs.resolved_payments_per_capita()
    if net < 0:
        raise ValidationError(
            "mandatory payments exceed gross income; check units of the inputs")
    return net


def pyll(deaths_by_age: AgeDistribution, normative_age: float = 65.0) -> float:
    """Potential years of life lost before ``normative_age``.

    Each death at age x contributes normative_age - (x + 0.5) person-years,
    floored at zero; deaths at or above the normative age contribute nothing.
    """
    if normative_age <= 0:
        raise ValidationError("normative_age must be > 0")
    counts = np.asarray(deaths_by_age.counts)
    lost = normative_age - (np.arange(len(counts)) + 0.5)
    return float(np.dot(counts, np.clip(lost, 0.0, None)))
