"""Maximum-likelihood fitting of prior families to collections of estimates.

Zero-centered Normal and Half-Normal have the closed-form MLE
sigma = sqrt(mean(x^2)); Student-t, Gamma, and Inverse-Gamma are fitted by
Nelder-Mead on log parameters with five deterministic starts. Student-t
degrees of freedom are bounded to [0.5, 100]; at 100 the fit is in the
Normal-equivalent regime and is reported at the bound.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import optimize

from .distributions import PriorFamily, PriorSpec, log_density
from .errors import DomainError, InsufficientDataError

__all__ = [
    "FitTarget",
    "FitInput",
    "FitResult",
    "filter_tau_estimates",
    "fit_family",
]

_MIN_VALUES = 10
_DF_LO, _DF_HI = 0.5, 100.0

_ADMISSIBLE = {
    # effect-size estimates: zero-centered symmetric families
    "mu": (PriorFamily.NORMAL, PriorFamily.STUDENT_T),
    # heterogeneity estimates: positive-support families
    "tau": (PriorFamily.HALF_NORMAL, PriorFamily.GAMMA, PriorFamily.INV_GAMMA),
}


class FitTarget(str, Enum):
    EFFECT = "mu"
    HETEROGENEITY = "tau"


@dataclass(frozen=True)
class FitInput:
    values: tuple[float, ...]
    target: FitTarget
    tau_floor: float = 0.01
    n_dropped: int = 0


@dataclass(frozen=True)
class FitResult:
    spec: PriorSpec
    log_likelihood: float
    n_used: int
    converged: bool


def filter_tau_estimates(values, floor: float = 0.01) -> FitInput:
    """Drop heterogeneity estimates <= floor; they stand in for fixed-effect fits."""
    if floor < 0:
        raise DomainError(f"tau floor must be >= 0, got {floor}")
    vals = [float(v) for v in values]
    kept = tuple(v for v in vals if v > floor)
    return FitInput(values=kept, target=FitTarget.HETEROGENEITY,
                    tau_floor=floor, n_dropped=len(vals) - len(kept))


def _loglik(spec: PriorSpec, x: np.ndarray) -> float:
    return float(np.sum(log_density(spec, x)))


def _nelder_mead(nll, starts):
    best = None
    ok = False
    for s in starts:
        res = optimize.minimize(nll, np.asarray(s, dtype=float),
                                method="Nelder-Mead",
                                options={"xatol": 1e-7, "fatol": 1e-10,
                                         "maxiter": 4000})
        if best is None or res.fun < best.fun:
            best = res
            ok = bool(res.success)
        elif res.success and abs(res.fun - best.fun) < 1e-8:
            ok = True
    return best.x, -best.fun, ok


def _starts(base, rng, spread=0.7, n_extra=4):
    out = [tuple(base)]
    for _ in range(n_extra):
        out.append(tuple(b + spread * rng.standard_normal() for b in base))
    return out


def fit_family(fit_input: FitInput, family: PriorFamily) -> FitResult:
    """MLE of one family; closed form where available, simplex otherwise."""
    if family not in _ADMISSIBLE[fit_input.target.value]:
        names = ", ".join(f.value for f in _ADMISSIBLE[fit_input.target.value])
        raise DomainError(
            f"{family.value} is not an admissible {fit_input.target.value} "
            f"family; choose one of {names}"
        )
    x = np.asarray(fit_input.values, dtype=float)
    if x.size < _MIN_VALUES:
        raise InsufficientDataError(
            f"need at least {_MIN_VALUES} values to fit, got {x.size}"
        )
    if fit_input.target is FitTarget.HETEROGENEITY and np.any(x <= 0):
        raise DomainError("heterogeneity estimates must be positive after filtering")
    rng = np.random.default_rng(1234)

    if family in (PriorFamily.NORMAL, PriorFamily.HALF_NORMAL):
        sd = math.sqrt(float(np.mean(x ** 2)))
        spec = (PriorSpec.normal(0.0, sd) if family is PriorFamily.NORMAL
                else PriorSpec.half_normal(sd))
        return FitResult(spec, _loglik(spec, x), x.size, True)

    if family is PriorFamily.STUDENT_T:
        def make(params):
            log_s, log_df = params
            df = min(max(math.exp(log_df), _DF_LO), _DF_HI)
            return PriorSpec.student_t(0.0, math.exp(log_s), df)

        def nll(params):
            if not np.all(np.isfinite(params)) or abs(params[0]) > 30:
                return 1e308
            return -_loglik(make(params), x)

        s0 = math.log(max(float(np.std(x)), 1e-8))
        starts = _starts((s0, math.log(5.0)), rng)
        params, ll, ok = _nelder_mead(nll, starts)
        return FitResult(make(params), ll, x.size, ok)

    # Gamma / Inverse-Gamma: moment-matched starting point on log parameters
    mean = float(np.mean(x))
    var = max(float(np.var(x)), 1e-12)
    if family is PriorFamily.GAMMA:
        shape0 = max(mean ** 2 / var, 1e-3)
        scale0 = max(var / mean, 1e-8)
        maker = PriorSpec.gamma
    else:
        shape0 = max(mean ** 2 / var + 2.0, 1.2)
        scale0 = max(mean * (shape0 - 1.0), 1e-8)
        maker = PriorSpec.inv_gamma

    def make(params):
        return maker(math.exp(params[0]), math.exp(params[1]))

    def nll(params):
        if not np.all(np.isfinite(params)) or np.any(np.abs(params) > 30):
            return 1e308
        return -_loglik(make(params), x)

    starts = _starts((math.log(shape0), math.log(scale0)), rng)
    params, ll, ok = _nelder_mead(nll, starts)
    return FitResult(make(params), ll, x.size, ok)
