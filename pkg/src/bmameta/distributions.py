"""Parametric prior families: density, CDF, quantile, sampling, and text serialization.

Families cover everything the prior registry and the four-model space need:
point masses for null hypotheses, zero-centered Normal / Student-t for mean
effects, and positive-support Half-Normal / Gamma / Inverse-Gamma (plus
Uniform) for heterogeneity. Gamma-type families use the shape-scale
parameterization throughout.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy import stats

from .errors import DomainError, InvalidPriorError, UndefinedMomentError

__all__ = [
    "PriorFamily",
    "PriorSpec",
    "log_density",
    "density",
    "cdf",
    "quantile",
    "sample",
    "prior_mean",
    "parse_prior",
    "format_prior",
]


class PriorFamily(str, Enum):
    POINT_MASS = "point-mass"
    NORMAL = "normal"
    STUDENT_T = "student-t"
    HALF_NORMAL = "half-normal"
    GAMMA = "gamma"
    INV_GAMMA = "inv-gamma"
    UNIFORM = "uniform"


# number of parameters per family
_ARITY = {
    PriorFamily.POINT_MASS: 1,
    PriorFamily.NORMAL: 2,
    PriorFamily.STUDENT_T: 3,
    PriorFamily.HALF_NORMAL: 1,
    PriorFamily.GAMMA: 2,
    PriorFamily.INV_GAMMA: 2,
    PriorFamily.UNIFORM: 2,
}


@dataclass(frozen=True)
class PriorSpec:
    """One parametric prior: a family tag plus its parameter tuple.

    Parameters follow the registry conventions: PointMass(location),
    Normal(mean, sd), StudentT(location, scale, df), HalfNormal(sd),
    Gamma(shape, scale), InvGamma(shape, scale), Uniform(lower, upper).

    Construction does not validate, so registry rows can be stored verbatim
    even when printed with rounded-to-zero parameters; every analysis
    operation calls :meth:`validate` first.
    """

    family: PriorFamily
    params: tuple[float, ...]

    def __post_init__(self):
        if len(self.params) != _ARITY[self.family]:
            raise InvalidPriorError(
                f"{self.family.value} takes {_ARITY[self.family]} parameters, "
                f"got {len(self.params)}"
            )
        object.__setattr__(self, "params", tuple(float(p) for p in self.params))

    # -- constructors ------------------------------------------------------
    @classmethod
    def point_mass(cls, location: float) -> "PriorSpec":
        return cls(PriorFamily.POINT_MASS, (location,))

    @classmethod
    def normal(cls, mean: float, sd: float) -> "PriorSpec":
        return cls(PriorFamily.NORMAL, (mean, sd))

    @classmethod
    def student_t(cls, location: float, scale: float, df: float) -> "PriorSpec":
        return cls(PriorFamily.STUDENT_T, (location, scale, df))

    @classmethod
    def half_normal(cls, sd: float) -> "PriorSpec":
        return cls(PriorFamily.HALF_NORMAL, (sd,))

    @classmethod
    def gamma(cls, shape: float, scale: float) -> "PriorSpec":
        return cls(PriorFamily.GAMMA, (shape, scale))

    @classmethod
    def inv_gamma(cls, shape: float, scale: float) -> "PriorSpec":
        return cls(PriorFamily.INV_GAMMA, (shape, scale))

    @classmethod
    def uniform(cls, lower: float, upper: float) -> "PriorSpec":
        return cls(PriorFamily.UNIFORM, (lower, upper))

    # -- introspection -----------------------------------------------------
    @property
    def location(self) -> float:
        """Center of the family (point-mass location, mean, or t location)."""
        if self.family in (PriorFamily.POINT_MASS, PriorFamily.NORMAL,
                           PriorFamily.STUDENT_T):
            return self.params[0]
        if self.family is PriorFamily.HALF_NORMAL:
            return 0.0
        if self.family is PriorFamily.UNIFORM:
            return 0.5 * (self.params[0] + self.params[1])
        raise InvalidPriorError(f"{self.family.value} has no location parameter")

    @property
    def is_point_mass(self) -> bool:
        return self.family is PriorFamily.POINT_MASS

    def validate(self) -> "PriorSpec":
        """Raise InvalidPriorError unless the parameters admit analysis."""
        f, p = self.family, self.params
        if any(not math.isfinite(v) for v in p):
            raise InvalidPriorError(f"non-finite parameter in {format_prior(self)}")
        if f is PriorFamily.NORMAL and p[1] <= 0:
            raise InvalidPriorError(f"Normal sd must be > 0, got {p[1]}")
        if f is PriorFamily.STUDENT_T:
            if p[1] <= 0:
                raise InvalidPriorError(
                    f"Student-t scale must be > 0, got {p[1]}; registry rows "
                    "printed with scale 0 are rounded values and cannot be "
                    "analyzed directly - supply a positive scale"
                )
            if p[2] <= 0:
                raise InvalidPriorError(
                    f"Student-t df must be > 0, got {p[2]}; registry rows "
                    "printed with df 0 denote rounding of df < 0.5 and cannot "
                    "be analyzed directly - supply a positive df"
                )
        if f is PriorFamily.HALF_NORMAL and p[0] <= 0:
            raise InvalidPriorError(f"Half-Normal sd must be > 0, got {p[0]}")
        if f in (PriorFamily.GAMMA, PriorFamily.INV_GAMMA) and (p[0] <= 0 or p[1] <= 0):
            raise InvalidPriorError(
                f"{f.value} shape and scale must be > 0, got {p}"
            )
        if f is PriorFamily.UNIFORM and not p[0] < p[1]:
            raise InvalidPriorError(f"Uniform needs lower < upper, got {p}")
        return self

    @property
    def is_valid(self) -> bool:
        try:
            self.validate()
        except InvalidPriorError:
            return False
        return True

    def support(self) -> tuple[float, float]:
        f, p = self.family, self.params
        if f is PriorFamily.POINT_MASS:
            return (p[0], p[0])
        if f in (PriorFamily.NORMAL, PriorFamily.STUDENT_T):
            return (-math.inf, math.inf)
        if f in (PriorFamily.HALF_NORMAL, PriorFamily.GAMMA, PriorFamily.INV_GAMMA):
            return (0.0, math.inf)
        return (p[0], p[1])

    # convenience method forms of the module-level operations
    def log_density(self, x):
        return log_density(self, x)

    def quantile(self, p):
        return quantile(self, p)

    def sample(self, n, seed):
        return sample(self, n, seed)

    def __str__(self) -> str:
        return format_prior(self)


@lru_cache(maxsize=512)
def _frozen(family: PriorFamily, params: tuple):
    """scipy frozen distribution backing a non-point-mass family."""
    if family is PriorFamily.NORMAL:
        return stats.norm(loc=params[0], scale=params[1])
    if family is PriorFamily.STUDENT_T:
        return stats.t(df=params[2], loc=params[0], scale=params[1])
    if family is PriorFamily.HALF_NORMAL:
        return stats.halfnorm(scale=params[0])
    if family is PriorFamily.GAMMA:
        return stats.gamma(a=params[0], scale=params[1])
    if family is PriorFamily.INV_GAMMA:
        return stats.invgamma(a=params[0], scale=params[1])
    if family is PriorFamily.UNIFORM:
        return stats.uniform(loc=params[0], scale=params[1] - params[0])
    raise InvalidPriorError(f"no continuous backing for {family}")


def _maybe_scalar(arr, scalar_input):
    return float(arr) if scalar_input else arr


def log_density(spec: PriorSpec, x) -> float | np.ndarray:
    """log f(x); -inf outside the support.

    A point mass returns 0.0 at its location and -inf elsewhere: the fixed
    parameter contributes a neutral multiplicative factor to marginal
    likelihoods.
    """
    spec.validate()
    scalar = np.isscalar(x)
    xa = np.asarray(x, dtype=float)
    if spec.is_point_mass:
        out = np.where(xa == spec.params[0], 0.0, -np.inf)
        return _maybe_scalar(out, scalar)
    out = _frozen(spec.family, spec.params).logpdf(xa)
    # scipy returns nan at some support edges; the limit is -inf off-support
    out = np.where(np.isnan(out), -np.inf, out)
    return _maybe_scalar(out, scalar)


def density(spec: PriorSpec, x) -> float | np.ndarray:
    out = np.exp(log_density(spec, x))
    return float(out) if np.isscalar(x) else out


def cdf(spec: PriorSpec, x) -> float | np.ndarray:
    spec.validate()
    scalar = np.isscalar(x)
    xa = np.asarray(x, dtype=float)
    if spec.is_point_mass:
        out = np.where(xa >= spec.params[0], 1.0, 0.0)
        return _maybe_scalar(out, scalar)
    return _maybe_scalar(_frozen(spec.family, spec.params).cdf(xa), scalar)


def quantile(spec: PriorSpec, p: float) -> float:
    """Inverse CDF; requires 0 < p < 1."""
    spec.validate()
    pa = np.asarray(p, dtype=float)
    if np.any(pa <= 0.0) or np.any(pa >= 1.0):
        raise DomainError(f"quantile probability must lie in (0, 1), got {p}")
    if spec.is_point_mass:
        out = np.full_like(pa, spec.params[0])
        return _maybe_scalar(out, np.isscalar(p))
    out = _frozen(spec.family, spec.params).ppf(pa)
    return _maybe_scalar(out, np.isscalar(p))


def sample(spec: PriorSpec, n: int, seed: int) -> np.ndarray:
    """n draws, deterministic for a given seed."""
    spec.validate()
    if n < 1:
        raise DomainError(f"sample size must be >= 1, got {n}")
    if spec.is_point_mass:
        return np.full(n, spec.params[0])
    rng = np.random.default_rng(seed)
    return np.asarray(_frozen(spec.family, spec.params).rvs(size=n, random_state=rng))


def prior_mean(spec: PriorSpec) -> float:
    """Mean of the family; refuses families whose mean does not exist."""
    spec.validate()
    f, p = spec.family, spec.params
    if f is PriorFamily.POINT_MASS:
        return p[0]
    if f is PriorFamily.NORMAL:
        return p[0]
    if f is PriorFamily.STUDENT_T:
        if p[2] <= 1.0:
            raise UndefinedMomentError(
                f"Student-t with df = {p[2]} <= 1 has no mean"
            )
        return p[0]
    if f is PriorFamily.HALF_NORMAL:
        return p[0] * math.sqrt(2.0 / math.pi)
    if f is PriorFamily.GAMMA:
        return p[0] * p[1]
    if f is PriorFamily.INV_GAMMA:
        if p[0] <= 1.0:
            raise UndefinedMomentError(
                f"Inverse-Gamma with shape = {p[0]} <= 1 has no mean"
            )
        return p[1] / (p[0] - 1.0)
    return 0.5 * (p[0] + p[1])


# -- text serialization ----------------------------------------------------
# canonical names match the registry table notation
_CANONICAL_NAME = {
    PriorFamily.POINT_MASS: "PointMass",
    PriorFamily.NORMAL: "Normal",
    PriorFamily.STUDENT_T: "Student-t",
    PriorFamily.HALF_NORMAL: "Normal+",
    PriorFamily.GAMMA: "Gamma",
    PriorFamily.INV_GAMMA: "Inv-Gamma",
    PriorFamily.UNIFORM: "Uniform",
}

_ALIASES = {
    "pointmass": PriorFamily.POINT_MASS,
    "spike": PriorFamily.POINT_MASS,
    "normal": PriorFamily.NORMAL,
    "n": PriorFamily.NORMAL,
    "norm": PriorFamily.NORMAL,
    "studentt": PriorFamily.STUDENT_T,
    "student": PriorFamily.STUDENT_T,
    "t": PriorFamily.STUDENT_T,
    "halfnormal": PriorFamily.HALF_NORMAL,
    "normal+": PriorFamily.HALF_NORMAL,
    "n+": PriorFamily.HALF_NORMAL,
    "gamma": PriorFamily.GAMMA,
    "invgamma": PriorFamily.INV_GAMMA,
    "inversegamma": PriorFamily.INV_GAMMA,
    "uniform": PriorFamily.UNIFORM,
    "u": PriorFamily.UNIFORM,
}

_PRIOR_RE = re.compile(r"^\s*([A-Za-z_+\- ]+?)\s*\(\s*([^)]*)\s*\)\s*$")


def _fmt(v: float) -> str:
    return format(v, "g")


def format_prior(spec: PriorSpec) -> str:
    """Canonical text form, e.g. ``Student-t(0, 0.48, 3)`` or ``Normal+(0, 0.1)``."""
    name = _CANONICAL_NAME[spec.family]
    if spec.family is PriorFamily.HALF_NORMAL:
        return f"{name}(0, {_fmt(spec.params[0])})"
    return f"{name}({', '.join(_fmt(p) for p in spec.params)})"


def parse_prior(text: str) -> PriorSpec:
    """Parse the table notation back into a PriorSpec.

    Accepts the canonical names plus common aliases (``T``, ``N``,
    ``Normal_+``, ``InvGamma``); case and internal whitespace/hyphens are
    ignored. Round-trips with :func:`format_prior` at the value level.
    """
    m = _PRIOR_RE.match(text)
    if m is None:
        raise InvalidPriorError(f"cannot parse prior specification: {text!r}")
    raw_name, raw_args = m.groups()
    key = re.sub(r"[\s_\-]", "", raw_name).lower()
    family = _ALIASES.get(key)
    if family is None:
        raise InvalidPriorError(f"unknown prior family {raw_name!r} in {text!r}")
    try:
        args = [float(tok) for tok in raw_args.split(",") if tok.strip() != ""]
    except ValueError as exc:
        raise InvalidPriorError(f"bad numeric parameter in {text!r}") from exc
    if family is PriorFamily.HALF_NORMAL:
        # table notation carries an explicit zero mean: Normal+(0, sd)
        if len(args) == 2:
            if args[0] != 0.0:
                raise InvalidPriorError(
                    f"half-normal location must be 0, got {args[0]} in {text!r}"
                )
            args = args[1:]
    if len(args) != _ARITY[family]:
        raise InvalidPriorError(
            f"{_CANONICAL_NAME[family]} takes {_ARITY[family]} parameters, "
            f"got {len(args)} in {text!r}"
        )
    return PriorSpec(family, tuple(args))
