"""The four-hypothesis model space and the two data-model likelihoods.

Normal-normal: marginally y_i ~ Normal(mu, sqrt(se_i^2 + tau^2)).

Binomial-normal (for log OR): per study,
    a ~ Binomial(sigmoid(beta + gamma/2), n1),
    c ~ Binomial(sigmoid(beta - gamma/2), n2),
    gamma ~ Normal(mu, tau),
with the study base rate sigmoid(beta) given a uniform prior on the
probability scale, truncated so beta lies in [-bound, bound]. The truncation
constant is common to all four hypotheses and cancels from every Bayes
factor. The per-study likelihood integrates beta out with an adaptive
Gauss-Legendre rule centered at the conditional mode and gamma out with an
adaptive Gauss-Hermite rule centered at the mode of the gamma integrand,
both found by short Newton searches.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import gammaln, logsumexp

from .distributions import PriorFamily, PriorSpec
from .effect_sizes import ContingencyTable, EffectEstimate, Measure
from .errors import DomainError, InvalidPriorError, QuadratureError

__all__ = [
    "DataModel",
    "HypothesisId",
    "Hypothesis",
    "ModelSpace",
    "Dataset",
    "build_space",
    "loglik_normal_normal",
    "loglik_binomial_normal_study",
    "StudyLikelihood",
]

_LOG2PI = math.log(2.0 * math.pi)

# tau priors must put their mass on (0, inf)
_POSITIVE_FAMILIES = (PriorFamily.HALF_NORMAL, PriorFamily.GAMMA, PriorFamily.INV_GAMMA)


class DataModel(str, Enum):
    NORMAL_NORMAL = "normal-normal"
    BINOMIAL_NORMAL = "binomial-normal"


class HypothesisId(str, Enum):
    H0F = "H0f"
    H1F = "H1f"
    H0R = "H0r"
    H1R = "H1r"


@dataclass(frozen=True)
class Hypothesis:
    id: HypothesisId
    prior_mu: PriorSpec
    prior_tau: PriorSpec
    prior_prob: float

    @property
    def has_free_mu(self) -> bool:
        return not self.prior_mu.is_point_mass

    @property
    def has_free_tau(self) -> bool:
        return not self.prior_tau.is_point_mass


@dataclass(frozen=True)
class ModelSpace:
    """The four hypotheses in fixed order H0f, H1f, H0r, H1r."""

    hypotheses: tuple[Hypothesis, Hypothesis, Hypothesis, Hypothesis]
    data_model: DataModel
    baseline_bound: float = 10.0

    def __getitem__(self, hid: HypothesisId) -> Hypothesis:
        for h in self.hypotheses:
            if h.id is hid:
                return h
        raise KeyError(hid)

    @property
    def prior_probs(self) -> np.ndarray:
        return np.array([h.prior_prob for h in self.hypotheses])


@dataclass(frozen=True)
class Dataset:
    """Per-study inputs: estimate pairs (normal-normal) or 2x2 tables (binomial-normal)."""

    measure: Measure
    studies: tuple
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.studies) < 1:
            raise DomainError("a dataset needs at least one study")
        if len(self.labels) != len(self.studies):
            raise DomainError("labels and studies must have equal length")
        kinds = {type(s) for s in self.studies}
        if not (kinds <= {ContingencyTable} or kinds <= {EffectEstimate}):
            raise DomainError("studies must be all tables or all estimate pairs")
        if kinds <= {EffectEstimate}:
            wrong = [e.measure for e in self.studies if e.measure is not self.measure]
            if wrong:
                raise DomainError(
                    f"estimate measures {set(m.value for m in wrong)} do not match "
                    f"dataset measure {self.measure.value}"
                )

    @classmethod
    def from_tables(cls, measure: Measure, tables, labels=None) -> "Dataset":
        tables = tuple(tables)
        if labels is None:
            labels = tuple(f"study {i + 1}" for i in range(len(tables)))
        return cls(measure, tables, tuple(labels))

    @classmethod
    def from_estimates(cls, measure: Measure, estimates) -> "Dataset":
        estimates = tuple(estimates)
        labels = tuple(e.study_label or f"study {i + 1}" for i, e in enumerate(estimates))
        return cls(measure, estimates, labels)

    @property
    def is_tables(self) -> bool:
        return isinstance(self.studies[0], ContingencyTable)

    def __len__(self) -> int:
        return len(self.studies)


def build_space(measure: Measure,
                prior_mu: PriorSpec,
                prior_tau: PriorSpec,
                data_model: DataModel,
                prior_probs=None,
                baseline_bound: float = 10.0) -> ModelSpace:
    """Assemble the four-model space from one effect prior and one heterogeneity prior."""
    prior_mu.validate()
    prior_tau.validate()
    if prior_mu.family not in (PriorFamily.NORMAL, PriorFamily.STUDENT_T,
                               PriorFamily.UNIFORM):
        raise InvalidPriorError(
            f"effect prior must be a continuous zero-centered family, got {prior_mu}"
        )
    if prior_mu.location != 0.0:
        raise InvalidPriorError(f"effect prior must be centered at 0, got {prior_mu}")
    if prior_tau.family not in _POSITIVE_FAMILIES:
        raise InvalidPriorError(
            f"heterogeneity prior must have support (0, inf), got {prior_tau}"
        )
    if data_model is DataModel.BINOMIAL_NORMAL and measure is not Measure.LOG_OR:
        raise DomainError(
            f"the binomial-normal model applies to log OR only, got {measure.value}"
        )
    if prior_probs is None:
        prior_probs = (0.25, 0.25, 0.25, 0.25)
    probs = tuple(float(p) for p in prior_probs)
    if len(probs) != 4:
        raise InvalidPriorError(f"need 4 prior model probabilities, got {len(probs)}")
    if any(not 0.0 < p < 1.0 for p in probs):
        raise InvalidPriorError(f"prior model probabilities must lie in (0, 1): {probs}")
    if abs(sum(probs) - 1.0) > 1e-9:
        raise InvalidPriorError(f"prior model probabilities must sum to 1: {probs}")
    if not baseline_bound > 0:
        raise InvalidPriorError(f"baseline bound must be > 0, got {baseline_bound}")
    zero = PriorSpec.point_mass(0.0)
    hyps = (
        Hypothesis(HypothesisId.H0F, zero, zero, probs[0]),
        Hypothesis(HypothesisId.H1F, prior_mu, zero, probs[1]),
        Hypothesis(HypothesisId.H0R, zero, prior_tau, probs[2]),
        Hypothesis(HypothesisId.H1R, prior_mu, prior_tau, probs[3]),
    )
    return ModelSpace(hyps, data_model, float(baseline_bound))


# -- normal-normal likelihood ------------------------------------------------

def _nn_loglik_arrays(y: np.ndarray, se: np.ndarray, mu, tau) -> np.ndarray:
    """Sum over studies of log Normal(y_i; mu, sqrt(se_i^2 + tau^2)).

    mu and tau broadcast against each other; the study axis is appended
    internally and summed out.
    """
    mu = np.asarray(mu, dtype=float)
    tau = np.asarray(tau, dtype=float)
    var = se ** 2 + tau[..., None] ** 2
    z2 = (y - mu[..., None]) ** 2 / var
    return -0.5 * np.sum(_LOG2PI + np.log(var) + z2, axis=-1)


def loglik_normal_normal(dataset: Dataset, mu: float, tau: float) -> float:
    """Marginal log likelihood of estimate pairs at (mu, tau); tau >= 0."""
    if dataset.is_tables:
        raise DomainError("normal-normal likelihood needs estimate pairs, not tables")
    if tau < 0:
        raise DomainError(f"tau is a standard deviation and must be >= 0, got {tau}")
    y = np.array([e.y for e in dataset.studies])
    se = np.array([e.se for e in dataset.studies])
    return float(_nn_loglik_arrays(y, se, float(mu), float(tau)))


# -- binomial-normal likelihood ----------------------------------------------

def _softplus(x):
    return np.logaddexp(0.0, x)


def _sigmoid(x):
    out = np.empty_like(np.asarray(x, dtype=float))
    x = np.asarray(x, dtype=float)
    pos = x >= 0
    out[pos] = 1.0 / (1.0 + np.exp(-x[pos]))
    ex = np.exp(x[~pos])
    out[~pos] = ex / (1.0 + ex)
    return out


@lru_cache(maxsize=8)
def _leggauss(n: int):
    return np.polynomial.legendre.leggauss(n)


@lru_cache(maxsize=8)
def _hermgauss(n: int):
    x, w = np.polynomial.hermite.hermgauss(n)
    return x, np.log(w) + x ** 2


class StudyLikelihood:
    """Adaptive-quadrature likelihood for one 2x2 table under the binomial-normal model.

    The baseline integral g(gamma) = log int pmf * pmf * p(beta) dbeta is
    tabulated once on a dense gamma grid and interpolated by a cubic spline
    (linear continuation outside, which matches the integrand's asymptotes).
    Each (mu, tau) evaluation then costs one Newton search for the mode of
    g(gamma) + log Normal(gamma; mu, tau) plus a Gauss-Hermite sum.
    """

    def __init__(self, table: ContingencyTable, bound: float = 10.0,
                 n_gl: int = 41, n_gh: int = 25,
                 grid_halfwidth: float = 60.0, grid_points: int = 2401):
        if not bound > 0:
            raise DomainError(f"baseline bound must be > 0, got {bound}")
        self.table = table
        self.bound = float(bound)
        self.n_gl = int(n_gl)
        self.n_gh = int(n_gh)
        self._a, self._c = float(table.a), float(table.c)
        self._n1, self._n2 = float(table.n1), float(table.n2)
        self._logc = float(
            gammaln(self._n1 + 1) - gammaln(self._a + 1) - gammaln(self._n1 - self._a + 1)
            + gammaln(self._n2 + 1) - gammaln(self._c + 1) - gammaln(self._n2 - self._c + 1)
        )
        # baseline prior: uniform on the probability scale, i.e. standard
        # logistic on beta, truncated to [-bound, bound]
        self._log_trunc = float(np.log1p(-2.0 * _sigmoid(np.array([-self.bound]))[0]))
        gam = np.linspace(-grid_halfwidth, grid_halfwidth, grid_points)
        logg = self._beta_integral(gam)
        self._gam_lo, self._gam_hi = gam[0], gam[-1]
        self._spline = CubicSpline(gam, logg, bc_type="natural")
        self._d1 = self._spline.derivative(1)
        self._d2 = self._spline.derivative(2)
        self._edge_vals = (logg[0], logg[-1])
        self._edge_slopes = (float(self._d1(gam[0])), float(self._d1(gam[-1])))

    # log joint of the two binomial terms plus the baseline prior, as a
    # function of beta for fixed gamma (vectorized over both)
    def _beta_logpost(self, beta, gamma):
        e1 = beta + 0.5 * gamma
        e2 = beta - 0.5 * gamma
        ll = (self._a * e1 - self._n1 * _softplus(e1)
              + self._c * e2 - self._n2 * _softplus(e2))
        return ll + beta - 2.0 * _softplus(beta) - self._log_trunc + self._logc

    def _beta_integral(self, gammas: np.ndarray) -> np.ndarray:
        """log int_{-B}^{B} exp(beta_logpost) dbeta for each gamma, adaptive GL."""
        B = self.bound
        g = np.asarray(gammas, dtype=float)
        beta = np.zeros_like(g)
        # damped Newton for the beta mode; the objective is strictly concave
        for _ in range(80):
            s1 = _sigmoid(beta + 0.5 * g)
            s2 = _sigmoid(beta - 0.5 * g)
            sb = _sigmoid(beta)
            grad = (self._a - self._n1 * s1) + (self._c - self._n2 * s2) + 1.0 - 2.0 * sb
            hess = -(self._n1 * s1 * (1 - s1) + self._n2 * s2 * (1 - s2)
                     + 2.0 * sb * (1 - sb))
            step = np.clip(grad / -hess, -4.0, 4.0)
            beta = np.clip(beta + step, -B, B)
            if np.max(np.abs(grad)) < 1e-11:
                break
        s1 = _sigmoid(beta + 0.5 * g)
        s2 = _sigmoid(beta - 0.5 * g)
        sb = _sigmoid(beta)
        info = (self._n1 * s1 * (1 - s1) + self._n2 * s2 * (1 - s2)
                + 2.0 * sb * (1 - sb))
        sd = 1.0 / np.sqrt(info)
        lo = np.maximum(-B, beta - 12.0 * sd)
        hi = np.minimum(B, beta + 12.0 * sd)
        x, w = _leggauss(self.n_gl)
        half = 0.5 * (hi - lo)
        nodes = lo[:, None] + half[:, None] * (x[None, :] + 1.0)
        vals = self._beta_logpost(nodes, g[:, None])
        return logsumexp(vals + np.log(w)[None, :], axis=1) + np.log(half)

    def log_g(self, gamma):
        """Interpolated log of the beta-integrated likelihood at gamma."""
        g = np.asarray(gamma, dtype=float)
        out = self._spline(np.clip(g, self._gam_lo, self._gam_hi))
        below = g < self._gam_lo
        above = g > self._gam_hi
        if np.any(below):
            out = np.where(below, self._edge_vals[0]
                           + self._edge_slopes[0] * (g - self._gam_lo), out)
        if np.any(above):
            out = np.where(above, self._edge_vals[1]
                           + self._edge_slopes[1] * (g - self._gam_hi), out)
        return out

    def _log_g_d12(self, gamma):
        g = np.clip(gamma, self._gam_lo, self._gam_hi)
        d1 = self._d1(g)
        d2 = self._d2(g)
        below = gamma < self._gam_lo
        above = gamma > self._gam_hi
        d1 = np.where(below, self._edge_slopes[0], np.where(above, self._edge_slopes[1], d1))
        d2 = np.where(below | above, 0.0, d2)
        return d1, d2

    def loglik(self, mu, tau) -> np.ndarray:
        """log int g(gamma) Normal(gamma; mu, tau) dgamma, elementwise over inputs.

        tau = 0 collapses the integral to log g(mu).
        """
        mu = np.atleast_1d(np.asarray(mu, dtype=float))
        tau = np.atleast_1d(np.asarray(tau, dtype=float))
        mu, tau = np.broadcast_arrays(mu, tau)
        if np.any(tau < 0):
            raise DomainError("tau is a standard deviation and must be >= 0")
        out = np.empty(mu.shape)
        zero = tau == 0.0
        if np.any(zero):
            out[zero] = self.log_g(mu[zero])
        free = ~zero
        if np.any(free):
            out[free] = self._loglik_random(mu[free].ravel(), tau[free].ravel()
                                            ).reshape(mu[free].shape)
        if not np.all(np.isfinite(out)):
            raise QuadratureError(
                "study likelihood is non-finite (underflow beyond rescaling)"
            )
        return out

    def _loglik_random(self, mu: np.ndarray, tau: np.ndarray) -> np.ndarray:
        itau2 = 1.0 / tau ** 2
        gam = mu.copy()
        # Newton for the mode of q(gamma) = log g + log Normal(gamma; mu, tau)
        for _ in range(100):
            d1, d2 = self._log_g_d12(gam)
            q1 = d1 - (gam - mu) * itau2
            q2 = np.minimum(d2, 0.0) - itau2
            step = np.clip(q1 / -q2, -(10.0 + tau), 10.0 + tau)
            gam = gam + step
            if np.max(np.abs(step)) < 1e-10:
                break
        _, d2 = self._log_g_d12(gam)
        sd = 1.0 / np.sqrt(itau2 - np.minimum(d2, 0.0))
        x, logw = _hermgauss(self.n_gh)
        nodes = gam[:, None] + math.sqrt(2.0) * sd[:, None] * x[None, :]
        vals = (self.log_g(nodes)
                - 0.5 * (_LOG2PI + 2.0 * np.log(tau)[:, None]
                         + ((nodes - mu[:, None]) / tau[:, None]) ** 2))
        return (logsumexp(vals + logw[None, :], axis=1)
                + 0.5 * math.log(2.0) + np.log(sd))


def loglik_binomial_normal_study(table: ContingencyTable, mu: float, tau: float,
                                 bound: float = 10.0) -> float:
    """Per-study binomial-normal log likelihood at (mu, tau).

    Zero cells need no correction: the binomial pmf is defined at zero
    counts. Builds a fresh quadrature engine; batch callers should reuse a
    StudyLikelihood instance instead.
    """
    if tau < 0:
        raise DomainError(f"tau is a standard deviation and must be >= 0, got {tau}")
    return float(StudyLikelihood(table, bound=bound).loglik(mu, tau)[0])
