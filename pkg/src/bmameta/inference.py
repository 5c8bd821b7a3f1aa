"""Log marginal likelihoods by deterministic quadrature, plus posterior grids.

Each hypothesis integrates the likelihood against its priors on uniform
trapezoid grids: linear in mu, logarithmic in tau (Jacobian included), with
windows set by prior quantiles (mu additionally intersected with a pooled
estimate +- 10 pooled standard errors). A nested midpoint refinement always
runs once as a convergence check; if the log marginal moves by more than the
threshold one further pass is allowed before NotConvergedError. All
accumulation is in log space with max-shift rescaling.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline
from scipy.special import logsumexp

from .distributions import PriorSpec, log_density, quantile
from .effect_sizes import ZeroCellPolicy, log_odds_ratio
from .errors import DomainError, NotConvergedError, ParameterFixedError, QuadratureError
from .model_space import (
    DataModel,
    Dataset,
    HypothesisId,
    ModelSpace,
    StudyLikelihood,
    _nn_loglik_arrays,
)

__all__ = [
    "QuadratureConfig",
    "PosteriorGrid",
    "ModelEvidence",
    "EvidenceEngine",
    "evidence",
    "posterior_mu_grid",
    "posterior_tau_grid",
]

# dense export-axis sizes; quadrature sizes live in QuadratureConfig
_EXPORT_MU = 2049
_EXPORT_TAU = 8193
_PAIR_CHUNK = 300_000


@dataclass(frozen=True)
class QuadratureConfig:
    """Grid sizes and tolerances for the evidence quadrature."""

    outer_points_mu: int = 81
    outer_points_tau: int = 81
    prior_mass_cut: float = 1e-6
    refine_threshold: float = 1e-4

    def __post_init__(self):
        for name in ("outer_points_mu", "outer_points_tau"):
            n = getattr(self, name)
            if n < 11 or n % 2 == 0:
                raise DomainError(f"{name} must be an odd count >= 11, got {n}")
        if not 0.0 < self.prior_mass_cut < 0.01:
            raise DomainError(
                f"prior_mass_cut must lie in (0, 0.01), got {self.prior_mass_cut}"
            )
        if not self.refine_threshold > 0:
            raise DomainError("refine_threshold must be > 0")


@dataclass(frozen=True, eq=False)
class PosteriorGrid:
    """Normalized posterior density of one parameter on a dense axis.

    ``log_weights`` holds log(prior x likelihood) at the axis nodes,
    pre-normalization; ``normalized_density`` trapezoid-integrates to 1 over
    the axis by construction.
    """

    axis: np.ndarray
    log_weights: np.ndarray
    normalized_density: np.ndarray
    log_marginal: float

    def _cdf(self) -> np.ndarray:
        f, x = self.normalized_density, self.axis
        inc = 0.5 * (f[1:] + f[:-1]) * np.diff(x)
        c = np.concatenate([[0.0], np.cumsum(inc)])
        return c / c[-1]

    def mean(self) -> float:
        return self.mean_of(self.axis)

    def mean_of(self, values) -> float:
        f, x = self.normalized_density, self.axis
        num = np.trapezoid(values * f, x)
        return float(num / np.trapezoid(f, x))

    def sd(self) -> float:
        m = self.mean()
        return math.sqrt(max(self.mean_of((self.axis - m) ** 2), 0.0))

    def quantile(self, q: float) -> float:
        if not 0.0 < q < 1.0:
            raise DomainError(f"quantile probability must lie in (0, 1), got {q}")
        return float(np.interp(q, self._cdf(), self.axis))

    def cdf_at(self, x) -> np.ndarray:
        return np.interp(x, self.axis, self._cdf(), left=0.0, right=1.0)

    def to_text(self) -> str:
        """Two-column plain numeric text (axis, density)."""
        lines = [f"{float(a)!r}\t{float(d)!r}"
                 for a, d in zip(self.axis, self.normalized_density)]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class ModelEvidence:
    """Evidence and posterior grids for one hypothesis."""

    hypothesis_id: HypothesisId
    log_marginal: float
    mu_grid: PosteriorGrid | None
    tau_grid: PosteriorGrid | None


def posterior_mu_grid(ev: ModelEvidence) -> PosteriorGrid:
    if ev.mu_grid is None:
        raise ParameterFixedError(
            f"{ev.hypothesis_id.value} fixes the mean effect at 0; no posterior grid"
        )
    return ev.mu_grid


def posterior_tau_grid(ev: ModelEvidence) -> PosteriorGrid:
    if ev.tau_grid is None:
        raise ParameterFixedError(
            f"{ev.hypothesis_id.value} fixes the heterogeneity at 0; no posterior grid"
        )
    return ev.tau_grid


# -- log-space trapezoid helpers ----------------------------------------------

def _trapz_logweights(x: np.ndarray) -> np.ndarray:
    dx = np.diff(x)
    w = np.zeros(len(x))
    w[:-1] += 0.5 * dx
    w[1:] += 0.5 * dx
    return np.log(w)


def _log_trapz(logf: np.ndarray, x: np.ndarray) -> float:
    return float(logsumexp(logf + _trapz_logweights(x)))


def _log_trapz_2d(logf: np.ndarray, x0: np.ndarray, x1: np.ndarray) -> float:
    lw = _trapz_logweights(x0)[:, None] + _trapz_logweights(x1)[None, :]
    return float(logsumexp(logf + lw))


def _check_finite(logf: np.ndarray) -> np.ndarray:
    if np.isnan(logf).any() or np.isposinf(logf).any():
        raise QuadratureError("non-finite log integrand in evidence quadrature")
    return logf


# -- likelihood evaluators -----------------------------------------------------

class _NormalNormalLik:
    def __init__(self, dataset: Dataset):
        self.y = np.array([e.y for e in dataset.studies])
        self.se = np.array([e.se for e in dataset.studies])

    def pairs(self, mu: np.ndarray, tau: np.ndarray) -> np.ndarray:
        out = np.empty(mu.shape)
        for s in range(0, mu.size, _PAIR_CHUNK):
            sl = slice(s, s + _PAIR_CHUNK)
            out[sl] = _nn_loglik_arrays(self.y, self.se, mu[sl], tau[sl])
        return out

    def pooled(self) -> tuple[float, float]:
        w = 1.0 / self.se ** 2
        return float(np.sum(w * self.y) / np.sum(w)), float(1.0 / math.sqrt(np.sum(w)))


class _BinomialNormalLik:
    def __init__(self, dataset: Dataset, bound: float):
        self.studies = [StudyLikelihood(t, bound=bound) for t in dataset.studies]
        self._tables = dataset.studies

    def pairs(self, mu: np.ndarray, tau: np.ndarray) -> np.ndarray:
        out = np.zeros(mu.shape)
        for s in self.studies:
            out += s.loglik(mu, tau)
        return out

    def pooled(self) -> tuple[float, float]:
        # corrected log OR pairs, used only to place the mu window
        ys, ses = [], []
        for t in self._tables:
            policy = (ZeroCellPolicy.constant_add(0.5) if t.has_zero_cell
                      else ZeroCellPolicy.none())
            est = log_odds_ratio(t, policy)
            ys.append(est.y)
            ses.append(est.se)
        y, se = np.array(ys), np.array(ses)
        w = 1.0 / se ** 2
        return float(np.sum(w * y) / np.sum(w)), float(1.0 / math.sqrt(np.sum(w)))


# -- the engine -----------------------------------------------------------------

class EvidenceEngine:
    """Evidence quadrature for one dataset under one data model.

    Reusable across models/priors: the per-study likelihood machinery is
    built once. Instances hold no mutable state after construction and may
    be used from multiple threads.
    """

    def __init__(self, dataset: Dataset, data_model: DataModel,
                 baseline_bound: float = 10.0,
                 config: QuadratureConfig = QuadratureConfig()):
        self.config = config
        self.data_model = data_model
        if data_model is DataModel.BINOMIAL_NORMAL:
            if not dataset.is_tables:
                raise DomainError("binomial-normal model needs 2x2 tables")
            self.lik = _BinomialNormalLik(dataset, baseline_bound)
        else:
            if dataset.is_tables:
                raise DomainError("normal-normal model needs estimate pairs")
            self.lik = _NormalNormalLik(dataset)
        self._pooled_est, self._pooled_se = self.lik.pooled()

    # windows ---------------------------------------------------------------
    def _mu_window(self, prior_mu: PriorSpec) -> tuple[float, float]:
        cut = self.config.prior_mass_cut
        plo, phi = quantile(prior_mu, cut), quantile(prior_mu, 1.0 - cut)
        llo = self._pooled_est - 10.0 * self._pooled_se
        lhi = self._pooled_est + 10.0 * self._pooled_se
        lo, hi = max(plo, llo), min(phi, lhi)
        if not lo < hi:  # disjoint prior and likelihood windows: use the hull
            lo, hi = min(plo, llo), max(phi, lhi)
        return lo, hi

    def _tau_window(self, prior_tau: PriorSpec) -> tuple[float, float]:
        cut = self.config.prior_mass_cut
        tlo = max(quantile(prior_tau, cut), 1e-300)
        thi = quantile(prior_tau, 1.0 - cut)
        return math.log(tlo), math.log(thi)

    # 1D integrals with nested midpoint refinement ---------------------------
    def _integrate_1d(self, logf, lo: float, hi: float, n0: int):
        """Returns (nodes, logf(nodes), logZ) refined to the stable level."""
        thr = self.config.refine_threshold
        x = np.linspace(lo, hi, n0)
        fx = _check_finite(logf(x))
        z = _log_trapz(fx, x)
        for attempt in range(2):
            mids = 0.5 * (x[:-1] + x[1:])
            fm = _check_finite(logf(mids))
            x2 = np.empty(len(x) + len(mids))
            f2 = np.empty_like(x2)
            x2[0::2], x2[1::2] = x, mids
            f2[0::2], f2[1::2] = fx, fm
            z2 = _log_trapz(f2, x2)
            moved = abs(z2 - z)
            x, fx, z = x2, f2, z2
            if moved <= thr:
                return x, fx, z
        raise NotConvergedError(
            f"log marginal moved {moved:.3e} > {thr:g} after grid refinement"
        )

    def _integrate_2d(self, lik_pairs, mu_lo, mu_hi, t_lo, t_hi, nm0, nt0,
                      add_priors):
        """Tensor-grid integral over (log tau, mu) with joint refinement.

        ``lik_pairs`` is the bare likelihood; ``add_priors(ts, mus, L)``
        attaches the separable prior and Jacobian terms. Returns the bare
        likelihood tensor so marginal grids can reuse it.
        """
        thr = self.config.refine_threshold

        def tensor(ts, mus):
            T, M = np.meshgrid(ts, mus, indexing="ij")
            return _check_finite(lik_pairs(M.ravel(), T.ravel()).reshape(T.shape))

        ts = np.linspace(t_lo, t_hi, nt0)
        mus = np.linspace(mu_lo, mu_hi, nm0)
        L = tensor(ts, mus)
        z = _log_trapz_2d(add_priors(ts, mus, L), ts, mus)
        for attempt in range(2):
            ts2 = np.linspace(t_lo, t_hi, 2 * len(ts) - 1)
            mus2 = np.linspace(mu_lo, mu_hi, 2 * len(mus) - 1)
            L2 = np.empty((len(ts2), len(mus2)))
            L2[0::2, 0::2] = L
            # evaluate only the new lattice points
            L2[1::2, :] = tensor(ts2[1::2], mus2)
            L2[0::2, 1::2] = tensor(ts2[0::2], mus2[1::2])
            z2 = _log_trapz_2d(add_priors(ts2, mus2, L2), ts2, mus2)
            moved = abs(z2 - z)
            ts, mus, L, z = ts2, mus2, L2, z2
            if moved <= thr:
                return ts, mus, L, z
        raise NotConvergedError(
            f"log marginal moved {moved:.3e} > {thr:g} after grid refinement"
        )

    # grid exports ------------------------------------------------------------
    def _export_grid(self, axis, log_weights, log_marginal) -> PosteriorGrid:
        f = np.exp(log_weights - np.max(log_weights))
        total = np.trapezoid(f, axis)
        return PosteriorGrid(axis=axis, log_weights=log_weights,
                             normalized_density=f / total,
                             log_marginal=log_marginal)

    def _mu_grid_direct(self, prior_mu, lo, hi, logz, loglik_mu):
        axis = np.linspace(lo, hi, _EXPORT_MU)
        lw = log_density(prior_mu, axis) + loglik_mu(axis)
        return self._export_grid(axis, lw, logz)

    def _tau_grid_direct(self, prior_tau, t_lo, t_hi, logz, loglik_tau):
        axis = np.exp(np.linspace(t_lo, t_hi, _EXPORT_TAU))
        lw = log_density(prior_tau, axis) + loglik_tau(axis)
        return self._export_grid(axis, lw, logz)

    # per-model evidence --------------------------------------------------------
    def model_log_marginal(self, prior_mu: PriorSpec, prior_tau: PriorSpec,
                           want_grids: bool = True):
        """(log marginal, mu grid or None, tau grid or None) for one prior pair.

        Point-mass priors pin their parameter; free priors are integrated.
        """
        cfg = self.config
        mu_free = not prior_mu.is_point_mass
        tau_free = not prior_tau.is_point_mass
        if not mu_free and not tau_free:
            mu0, tau0 = prior_mu.params[0], prior_tau.params[0]
            z = float(self.lik.pairs(np.array([mu0]), np.array([tau0]))[0])
            return z, None, None

        if mu_free and not tau_free:
            tau0 = prior_tau.params[0]

            def loglik_mu(m):
                return self.lik.pairs(m, np.full_like(m, tau0))

            def logf(m):
                return log_density(prior_mu, m) + loglik_mu(m)

            lo, hi = self._mu_window(prior_mu)
            _, _, z = self._integrate_1d(logf, lo, hi, cfg.outer_points_mu)
            grid = self._mu_grid_direct(prior_mu, lo, hi, z, loglik_mu) if want_grids else None
            return z, grid, None

        if tau_free and not mu_free:
            mu0 = prior_mu.params[0]

            def loglik_tau(tau):
                return self.lik.pairs(np.full_like(tau, mu0), tau)

            def logf_t(t):
                tau = np.exp(t)
                return log_density(prior_tau, tau) + t + loglik_tau(tau)

            t_lo, t_hi = self._tau_window(prior_tau)
            _, _, z = self._integrate_1d(logf_t, t_lo, t_hi, cfg.outer_points_tau)
            grid = self._tau_grid_direct(prior_tau, t_lo, t_hi, z, loglik_tau) if want_grids else None
            return z, None, grid

        # both free: tensor over (log tau, mu); priors enter as separable terms
        def lik_pairs(m, t):
            return self.lik.pairs(m, np.exp(t))

        mu_lo, mu_hi = self._mu_window(prior_mu)
        t_lo, t_hi = self._tau_window(prior_tau)

        def add_priors(ts, mus, L):
            lp_t = log_density(prior_tau, np.exp(ts)) + ts
            return L + lp_t[:, None] + log_density(prior_mu, mus)[None, :]

        ts, mus, L, z = self._integrate_2d(lik_pairs, mu_lo, mu_hi, t_lo, t_hi,
                                           cfg.outer_points_mu, cfg.outer_points_tau,
                                           add_priors)
        if not want_grids:
            return z, None, None
        lp_t = log_density(prior_tau, np.exp(ts)) + ts
        # marginal over tau -> mu grid (spline the log marginal likelihood)
        wt = _trapz_logweights(ts)
        log_m_mu = logsumexp(L + (lp_t + wt)[:, None], axis=0)
        mu_axis = np.linspace(mu_lo, mu_hi, _EXPORT_MU)
        lw_mu = log_density(prior_mu, mu_axis) + CubicSpline(mus, log_m_mu)(mu_axis)
        mu_grid = self._export_grid(mu_axis, lw_mu, z)
        # marginal over mu -> tau grid
        wm = _trapz_logweights(mus) + log_density(prior_mu, mus)
        log_m_tau = logsumexp(L + wm[None, :], axis=1)
        t_axis = np.linspace(t_lo, t_hi, _EXPORT_TAU)
        tau_axis = np.exp(t_axis)
        lw_tau = log_density(prior_tau, tau_axis) + CubicSpline(ts, log_m_tau)(t_axis)
        tau_grid = self._export_grid(tau_axis, lw_tau, z)
        return z, mu_grid, tau_grid


def evidence(dataset: Dataset, space: ModelSpace,
             config: QuadratureConfig = QuadratureConfig(),
             max_workers: int | None = None) -> list[ModelEvidence]:
    """One ModelEvidence per hypothesis, in space order (H0f, H1f, H0r, H1r)."""
    engine = EvidenceEngine(dataset, space.data_model, space.baseline_bound, config)

    def one(h):
        z, mu_grid, tau_grid = engine.model_log_marginal(h.prior_mu, h.prior_tau)
        return ModelEvidence(h.id, z, mu_grid, tau_grid)

    if max_workers is not None and max_workers > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            return list(pool.map(one, space.hypotheses))
    return [one(h) for h in space.hypotheses]
