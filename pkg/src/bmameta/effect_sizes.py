"""Effect sizes and standard errors for 2x2 binary outcome tables.

Implements the standard Wald-type formulas: log odds ratio with
se = sqrt(1/a + 1/b + 1/c + 1/d), log risk ratio with
se = sqrt(1/a - 1/n1 + 1/c - 1/n2), and risk difference with
se = sqrt(ab/n1^3 + cd/n2^3). Zero cells in the ratio measures require an
explicit continuity-correction policy; the correction is applied to all four
cells of the affected table only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum

from .errors import (
    DegenerateVarianceError,
    InvalidEstimateError,
    ZeroCellError,
)

__all__ = [
    "Measure",
    "ContingencyTable",
    "ZeroCellMode",
    "ZeroCellPolicy",
    "EffectEstimate",
    "log_odds_ratio",
    "log_risk_ratio",
    "risk_difference",
    "validate_estimate",
]

DOUBLE_ZERO_WARNING = "double-zero table: no comparative information under ratio measures"


class Measure(str, Enum):
    LOG_OR = "logOR"
    LOG_RR = "logRR"
    RD = "RD"
    LOG_HR = "logHR"

    @classmethod
    def parse(cls, text: str) -> "Measure":
        key = text.replace("-", "").replace("_", "").lower()
        for m in cls:
            if m.value.lower() == key:
                return m
        raise ValueError(f"unknown measure {text!r}; expected one of "
                         f"{', '.join(m.value for m in cls)}")


@dataclass(frozen=True)
class ContingencyTable:
    """Counts for one study: events/non-events in group 1 (a, b) and group 2 (c, d)."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not isinstance(v, (int,)) or isinstance(v, bool) or v < 0:
                raise InvalidEstimateError(
                    f"cell {name} must be a nonnegative integer, got {v!r}"
                )
        if self.n1 < 1 or self.n2 < 1:
            raise InvalidEstimateError(
                f"each group needs at least one observation, got n1={self.n1}, n2={self.n2}"
            )

    @property
    def n1(self) -> int:
        return self.a + self.b

    @property
    def n2(self) -> int:
        return self.c + self.d

    @property
    def has_zero_cell(self) -> bool:
        return 0 in (self.a, self.b, self.c, self.d)

    @property
    def is_double_zero(self) -> bool:
        return self.a == 0 and self.c == 0

    def swapped(self) -> "ContingencyTable":
        """Groups exchanged (a<->c, b<->d)."""
        return ContingencyTable(self.c, self.d, self.a, self.b)


class ZeroCellMode(str, Enum):
    NONE = "none"
    CONSTANT_ADD = "constant-add"


@dataclass(frozen=True)
class ZeroCellPolicy:
    """What to do with zero cells: nothing, or add a constant to all four cells."""

    mode: ZeroCellMode = ZeroCellMode.NONE
    increment: float = 0.5

    def __post_init__(self):
        if self.mode is ZeroCellMode.CONSTANT_ADD and not self.increment > 0:
            raise InvalidEstimateError(
                f"continuity-correction increment must be > 0, got {self.increment}"
            )

    @classmethod
    def none(cls) -> "ZeroCellPolicy":
        return cls(ZeroCellMode.NONE)

    @classmethod
    def constant_add(cls, increment: float = 0.5) -> "ZeroCellPolicy":
        return cls(ZeroCellMode.CONSTANT_ADD, increment)


@dataclass(frozen=True)
class EffectEstimate:
    """One study's effect value and standard error on the analysis scale."""

    y: float
    se: float
    measure: Measure
    study_label: str = ""
    warnings: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if not math.isfinite(self.y):
            raise InvalidEstimateError(f"effect value must be finite, got {self.y}")
        if not (math.isfinite(self.se) and self.se > 0):
            raise InvalidEstimateError(f"standard error must be > 0, got {self.se}")
        if self.measure is Measure.RD and not -1.0 <= self.y <= 1.0:
            raise InvalidEstimateError(
                f"risk difference must lie in [-1, 1], got {self.y}"
            )


def _corrected(table: ContingencyTable, policy: ZeroCellPolicy, trigger: bool,
               what: str) -> tuple[float, float, float, float, tuple[str, ...]]:
    """Resolve the working cell counts and warnings for a ratio measure."""
    warnings: tuple[str, ...] = ()
    if table.is_double_zero:
        warnings = (DOUBLE_ZERO_WARNING,)
    if trigger:
        if policy.mode is not ZeroCellMode.CONSTANT_ADD:
            raise ZeroCellError(
                f"table ({table.a}, {table.b}, {table.c}, {table.d}) has {what} "
                "and needs ZeroCellPolicy.constant_add(...)"
            )
        k = policy.increment
        return table.a + k, table.b + k, table.c + k, table.d + k, warnings
    return float(table.a), float(table.b), float(table.c), float(table.d), warnings


def log_odds_ratio(table: ContingencyTable,
                   policy: ZeroCellPolicy = ZeroCellPolicy.none(),
                   study_label: str = "") -> EffectEstimate:
    """log((a/b)/(c/d)) with se = sqrt(1/a + 1/b + 1/c + 1/d).

    Any zero cell makes the estimate undefined, so a ConstantAdd policy is
    required; the increment is then added to all four cells of this table.
    """
    a, b, c, d, warns = _corrected(table, policy, table.has_zero_cell, "a zero cell")
    y = math.log((a / b) / (c / d))
    se = math.sqrt(1.0 / a + 1.0 / b + 1.0 / c + 1.0 / d)
    return EffectEstimate(y, se, Measure.LOG_OR, study_label, warns)


def log_risk_ratio(table: ContingencyTable,
                   policy: ZeroCellPolicy = ZeroCellPolicy.none(),
                   study_label: str = "") -> EffectEstimate:
    """log((a/n1)/(c/n2)) with se = sqrt(1/a - 1/n1 + 1/c - 1/n2).

    Zero events in either group (a = 0 or c = 0) require a ConstantAdd policy.
    """
    a, b, c, d, warns = _corrected(table, policy, table.a == 0 or table.c == 0,
                                   "zero events in a group")
    n1, n2 = a + b, c + d
    y = math.log((a / n1) / (c / n2))
    var = 1.0 / a - 1.0 / n1 + 1.0 / c - 1.0 / n2
    if var <= 0.0:
        raise DegenerateVarianceError(
            f"log RR variance is {var:g} for table "
            f"({table.a}, {table.b}, {table.c}, {table.d})"
        )
    return EffectEstimate(y, math.sqrt(var), Measure.LOG_RR, study_label, warns)


def risk_difference(table: ContingencyTable, study_label: str = "") -> EffectEstimate:
    """a/n1 - c/n2 with se = sqrt(ab/n1^3 + cd/n2^3); defined for zero cells."""
    a, b, c, d = float(table.a), float(table.b), float(table.c), float(table.d)
    n1, n2 = a + b, c + d
    y = a / n1 - c / n2
    var = a * b / n1 ** 3 + c * d / n2 ** 3
    if var == 0.0:
        raise DegenerateVarianceError(
            f"risk-difference variance is 0 for table "
            f"({table.a}, {table.b}, {table.c}, {table.d}): both arms are "
            "all-events or all-non-events"
        )
    warns = (DOUBLE_ZERO_WARNING,) if table.is_double_zero else ()
    return EffectEstimate(y, math.sqrt(var), Measure.RD, study_label, warns)


def validate_estimate(y: float, se: float, measure: Measure,
                      study_label: str = "") -> EffectEstimate:
    """Validate an externally supplied (estimate, standard error) pair.

    This is the entry point for measures computed outside the package,
    e.g. log hazard ratios from time-to-event analyses.
    """
    return EffectEstimate(float(y), float(se), measure, study_label)
