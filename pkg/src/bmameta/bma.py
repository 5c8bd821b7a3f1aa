"""Model averaging: posterior model probabilities, inclusion Bayes factors,
mixture posteriors with point-mass components, and the prior-ranking procedure.

Model-averaged summaries treat the null models as an atom at zero in the
mixed distribution; means, medians, and interval endpoints come from the
mixed CDF, so e.g. the model-averaged heterogeneity interval can have a
lower bound of exactly 0. Ratio-scale summaries exponentiate medians and
interval endpoints and recompute means as the grid integral of exp(x); the
atom contributes exp(0) = 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np
from scipy.special import logsumexp

from .distributions import PriorSpec
from .effect_sizes import Measure
from .errors import (
    DegenerateOddsError,
    DomainError,
    ParameterFixedError,
    ScaleError,
)
from .inference import (
    EvidenceEngine,
    ModelEvidence,
    PosteriorGrid,
    QuadratureConfig,
)
from .model_space import DataModel, Dataset, HypothesisId, ModelSpace

__all__ = [
    "OutputScale",
    "SummaryStats",
    "MixedPosterior",
    "BmaResult",
    "posterior_model_probs",
    "inclusion_bf_effect",
    "inclusion_bf_heterogeneity",
    "averaged_posterior_mu",
    "averaged_posterior_tau",
    "to_ratio_scale",
    "combine",
    "rank_priors_over_corpus",
    "RankingReport",
    "CandidateRanking",
]

_BF_CAP_LOG = 700.0

_ORDER = (HypothesisId.H0F, HypothesisId.H1F, HypothesisId.H0R, HypothesisId.H1R)


class OutputScale(str, Enum):
    LOG = "log"
    RATIO = "ratio"


@dataclass(frozen=True)
class SummaryStats:
    mean: float
    median: float
    ci_lower: float
    ci_upper: float
    ci_level: float = 0.95


def _as_probs(vec, name) -> np.ndarray:
    p = np.asarray(vec, dtype=float)
    if p.shape != (4,):
        raise DomainError(f"{name} must have 4 entries, got shape {p.shape}")
    if np.any(p < 0) or abs(p.sum() - 1.0) > 1e-8:
        raise DomainError(f"{name} must be nonnegative and sum to 1, got {p}")
    return p


def posterior_model_probs(evidence: list[ModelEvidence], prior_probs) -> np.ndarray:
    """Posterior model probabilities in order H0f, H1f, H0r, H1r."""
    if len(evidence) != 4:
        raise DomainError(f"need 4 model evidences, got {len(evidence)}")
    by_id = {ev.hypothesis_id: ev for ev in evidence}
    prior = _as_probs(prior_probs, "prior_probs")
    lp = np.array([math.log(prior[i]) + by_id[h].log_marginal
                   for i, h in enumerate(_ORDER)])
    p = np.exp(lp - logsumexp(lp))
    return p / p.sum()


def _inclusion_bf(probs, prior_probs, num_idx, den_idx) -> tuple[float, str | None]:
    p = _as_probs(probs, "probs")
    q = _as_probs(prior_probs, "prior_probs")
    prior_num, prior_den = q[list(num_idx)].sum(), q[list(den_idx)].sum()
    if prior_num == 0.0 or prior_den == 0.0:
        raise DegenerateOddsError(
            "prior inclusion odds are degenerate: one side has probability 0"
        )
    post_num, post_den = p[list(num_idx)].sum(), p[list(den_idx)].sum()
    prior_odds = prior_num / prior_den
    if post_den == 0.0:
        return math.exp(_BF_CAP_LOG), "capped-infinite"
    if post_num == 0.0:
        return math.exp(-_BF_CAP_LOG), "capped-zero"
    log_bf = math.log(post_num) - math.log(post_den) - math.log(prior_odds)
    if log_bf > _BF_CAP_LOG:
        return math.exp(_BF_CAP_LOG), "capped-infinite"
    if log_bf < -_BF_CAP_LOG:
        return math.exp(-_BF_CAP_LOG), "capped-zero"
    return math.exp(log_bf), None


def inclusion_bf_effect(probs, prior_probs) -> float:
    """Change from prior to posterior inclusion odds for the effect.

    Degenerate posterior odds return a sentinel capped at exp(+-700).
    """
    return _inclusion_bf(probs, prior_probs, (1, 3), (0, 2))[0]


def inclusion_bf_heterogeneity(probs, prior_probs) -> float:
    """Change from prior to posterior inclusion odds for the heterogeneity."""
    return _inclusion_bf(probs, prior_probs, (2, 3), (0, 1))[0]


# -- mixtures with point-mass components ---------------------------------------

@dataclass(frozen=True, eq=False)
class MixedPosterior:
    """Weighted mixture of grid posteriors plus an optional atom.

    ``grid`` holds the continuous part renormalized to integrate to 1;
    ``continuous_weight`` + ``atom_weight`` = 1.
    """

    grid: PosteriorGrid
    continuous_weight: float
    atom_weight: float
    atom_location: float = 0.0

    def mean(self, transform=None) -> float:
        if transform is None:
            cont = self.grid.mean()
            atom = self.atom_location
        else:
            cont = self.grid.mean_of(transform(self.grid.axis))
            atom = float(transform(np.array([self.atom_location]))[0])
        return self.continuous_weight * cont + self.atom_weight * atom

    def quantile(self, q: float) -> float:
        if not 0.0 < q < 1.0:
            raise DomainError(f"quantile probability must lie in (0, 1), got {q}")
        wc, wa, loc = self.continuous_weight, self.atom_weight, self.atom_location
        if wa == 0.0:
            return self.grid.quantile(q)
        c_at_loc = float(self.grid.cdf_at(loc))
        below = wc * c_at_loc  # P(X < loc)
        if below < q <= below + wa:
            return loc
        if q <= below:
            return self.grid.quantile(q / wc)
        return self.grid.quantile((q - wa) / wc)

    def stats(self, ci_level: float = 0.95, transform=None,
              transform_endpoints=None) -> SummaryStats:
        alpha = 0.5 * (1.0 - ci_level)
        median, lo, hi = (self.quantile(0.5), self.quantile(alpha),
                          self.quantile(1.0 - alpha))
        if transform_endpoints is not None:
            median, lo, hi = (transform_endpoints(median),
                              transform_endpoints(lo), transform_endpoints(hi))
        return SummaryStats(self.mean(transform), median, lo, hi, ci_level)


def _mix_grids(parts: list[tuple[float, PosteriorGrid]]) -> PosteriorGrid:
    """Weighted density mixture renormalized to 1; weights must sum to ~1."""
    axis = parts[0][1].axis
    if not all(np.array_equal(axis, g.axis) for _, g in parts[1:]):
        raise DomainError("mixture components must share a grid axis")
    dens = np.zeros_like(axis)
    lw = np.full_like(axis, -np.inf)
    for w, g in parts:
        dens += w * g.normalized_density
        lw = np.logaddexp(lw, math.log(max(w, 1e-300)) + g.log_weights
                          - np.max(g.log_weights))
    total = np.trapezoid(dens, axis)
    z = logsumexp([math.log(max(w, 1e-300)) + g.log_marginal for w, g in parts])
    return PosteriorGrid(axis=axis, log_weights=lw, normalized_density=dens / total,
                         log_marginal=float(z))


def _h1_mixture(evidence, probs, grid_attr, comp_ids, atom_ids) -> MixedPosterior:
    by_id = {ev.hypothesis_id: ev for ev in evidence}
    parts = []
    total = 0.0
    for hid in comp_ids:
        ev = by_id.get(hid)
        grid = getattr(ev, grid_attr, None) if ev is not None else None
        w = probs[_ORDER.index(hid)]
        if grid is None:
            if w > 1e-12:
                raise ParameterFixedError(
                    f"{hid.value} evidence lacks the posterior grid needed for mixing"
                )
            continue
        parts.append((w, grid))
        total += w
    if not parts or total <= 0.0:
        raise ParameterFixedError(
            "no free-parameter component has posterior mass; nothing to mix"
        )
    rel = [(w / total, g) for w, g in parts]
    atom_w = float(sum(probs[_ORDER.index(h)] for h in atom_ids))
    return MixedPosterior(grid=_mix_grids(rel),
                          continuous_weight=max(1.0 - atom_w, 0.0),
                          atom_weight=atom_w)


def averaged_posterior_mu(evidence: list[ModelEvidence], probs) -> MixedPosterior:
    """Effect posterior mixed over the two alternative hypotheses.

    The grid is the conditional-on-effect mixture (integrates to 1); the
    atom records the null-model mass at 0 for model-averaged summaries.
    """
    probs = _as_probs(probs, "probs")
    return _h1_mixture(evidence, probs, "mu_grid",
                       (HypothesisId.H1F, HypothesisId.H1R),
                       (HypothesisId.H0F, HypothesisId.H0R))


def averaged_posterior_tau(evidence: list[ModelEvidence], probs) -> MixedPosterior:
    """Heterogeneity posterior mixed over the two random-effects hypotheses."""
    probs = _as_probs(probs, "probs")
    return _h1_mixture(evidence, probs, "tau_grid",
                       (HypothesisId.H0R, HypothesisId.H1R),
                       (HypothesisId.H0F, HypothesisId.H1F))


_RATIO_MEASURES = (Measure.LOG_OR, Measure.LOG_RR, Measure.LOG_HR)


def to_ratio_scale(obj, measure: Measure, ci_level: float = 0.95,
                   include_atom: bool = True):
    """Transform a log-scale posterior to the ratio scale.

    A MixedPosterior yields SummaryStats: medians and interval endpoints are
    exponentiated (monotone-exact) and the mean is recomputed as the grid
    integral of exp(x), with any point mass at 0 contributing exp(0) = 1.
    ``include_atom=False`` summarizes the continuous (conditional) part only.
    A bare PosteriorGrid yields the exp-transformed grid (density adjusted by
    the change-of-variables Jacobian).
    """
    if measure not in _RATIO_MEASURES:
        raise ScaleError(
            f"{measure.value} is analyzed on its natural scale; "
            "ratio-scale transformation applies to log-ratio measures only"
        )
    if isinstance(obj, PosteriorGrid):
        axis = np.exp(obj.axis)
        return PosteriorGrid(
            axis=axis,
            log_weights=obj.log_weights - obj.axis,
            normalized_density=obj.normalized_density / axis,
            log_marginal=obj.log_marginal,
        )
    target = obj if include_atom else replace(
        obj, continuous_weight=1.0, atom_weight=0.0)
    return target.stats(ci_level, transform=np.exp, transform_endpoints=math.exp)


@dataclass(frozen=True, eq=False)
class BmaResult:
    """Everything the reporting layer needs from one analysis."""

    measure: Measure
    data_model: DataModel
    prior_model_probs: tuple[float, float, float, float]
    posterior_model_probs: tuple[float, float, float, float]
    bf_effect: float
    bf_effect_flag: str | None
    bf_heterogeneity: float
    bf_heterogeneity_flag: str | None
    averaged_mu: SummaryStats
    averaged_tau: SummaryStats
    conditional_mu: SummaryStats
    conditional_tau: SummaryStats
    output_scale: OutputScale
    ci_level: float
    log_marginals: tuple[float, float, float, float]
    mu_posterior: MixedPosterior
    tau_posterior: MixedPosterior


def combine(evidence: list[ModelEvidence], space: ModelSpace,
            ci_level: float = 0.95,
            output_scale: OutputScale = OutputScale.LOG,
            measure: Measure = Measure.LOG_OR) -> BmaResult:
    """Aggregate per-hypothesis evidence into the full BMA result."""
    if not 0.0 < ci_level < 1.0:
        raise DomainError(f"ci_level must lie in (0, 1), got {ci_level}")
    prior = space.prior_probs
    probs = posterior_model_probs(evidence, prior)
    bf_e, flag_e = _inclusion_bf(probs, prior, (1, 3), (0, 2))
    bf_h, flag_h = _inclusion_bf(probs, prior, (2, 3), (0, 1))
    mu_mix = averaged_posterior_mu(evidence, probs)
    tau_mix = averaged_posterior_tau(evidence, probs)

    cond_mu_only = replace(mu_mix, continuous_weight=1.0, atom_weight=0.0)
    if output_scale is OutputScale.RATIO:
        averaged_mu = to_ratio_scale(mu_mix, measure, ci_level, include_atom=True)
        conditional_mu = to_ratio_scale(mu_mix, measure, ci_level, include_atom=False)
    else:
        averaged_mu = mu_mix.stats(ci_level)
        conditional_mu = cond_mu_only.stats(ci_level)
    # heterogeneity is never transformed to the ratio scale
    averaged_tau = tau_mix.stats(ci_level)
    conditional_tau = replace(tau_mix, continuous_weight=1.0, atom_weight=0.0).stats(ci_level)

    by_id = {ev.hypothesis_id: ev for ev in evidence}
    return BmaResult(
        measure=measure,
        data_model=space.data_model,
        prior_model_probs=tuple(float(p) for p in prior),
        posterior_model_probs=tuple(float(p) for p in probs),
        bf_effect=bf_e,
        bf_effect_flag=flag_e,
        bf_heterogeneity=bf_h,
        bf_heterogeneity_flag=flag_h,
        averaged_mu=averaged_mu,
        averaged_tau=averaged_tau,
        conditional_mu=conditional_mu,
        conditional_tau=conditional_tau,
        output_scale=output_scale,
        ci_level=ci_level,
        log_marginals=tuple(by_id[h].log_marginal for h in _ORDER),
        mu_posterior=mu_mix,
        tau_posterior=tau_mix,
    )


# -- prior ranking over a corpus -------------------------------------------------

@dataclass(frozen=True)
class CandidateRanking:
    spec: PriorSpec
    prior_prob: float
    rank_counts: tuple[int, ...]
    avg_posterior_prob: float


@dataclass(frozen=True)
class RankingReport:
    mu: tuple[CandidateRanking, ...]
    tau: tuple[CandidateRanking, ...]
    n_datasets: int
    n_failed: int
    failures: tuple[str, ...]


def _rank_with_ties(values: np.ndarray) -> np.ndarray:
    """Rank 1 = best (highest value); ties broken by input order."""
    order = np.lexsort((np.arange(len(values)), -values))
    ranks = np.empty(len(values), dtype=int)
    ranks[order] = np.arange(1, len(values) + 1)
    return ranks


def rank_priors_over_corpus(datasets: list[Dataset],
                            mu_candidates: list[PriorSpec],
                            tau_candidates: list[PriorSpec],
                            data_model: DataModel = DataModel.NORMAL_NORMAL,
                            config: QuadratureConfig = QuadratureConfig(),
                            baseline_bound: float = 10.0) -> RankingReport:
    """Rank candidate priors by model-averaged posterior probability.

    For every dataset the full cross of models is built: (null + each mu
    candidate) x (null + each tau candidate) with equal prior model
    probabilities. A candidate's posterior probability is the total mass of
    the models carrying it, normalized among models where its parameter is
    present; ranks are assigned per dataset (ties broken by input order) and
    aggregated, alongside the average posterior probability.
    """
    if len(datasets) < 1:
        raise DomainError("need at least one dataset")
    if len(mu_candidates) < 2 and len(tau_candidates) < 2:
        raise DomainError("need at least two candidates for one of the parameters")
    m, t = len(mu_candidates), len(tau_candidates)
    mu_specs = [PriorSpec.point_mass(0.0)] + list(mu_candidates)
    tau_specs = [PriorSpec.point_mass(0.0)] + list(tau_candidates)

    mu_rank_counts = np.zeros((m, m), dtype=int)
    tau_rank_counts = np.zeros((t, t), dtype=int)
    mu_prob_sum = np.zeros(m)
    tau_prob_sum = np.zeros(t)
    failures: list[str] = []
    n_ok = 0

    for idx, ds in enumerate(datasets):
        try:
            engine = EvidenceEngine(ds, data_model, baseline_bound, config)
            logz = np.empty((m + 1, t + 1))
            for i, pm in enumerate(mu_specs):
                for j, pt in enumerate(tau_specs):
                    logz[i, j], _, _ = engine.model_log_marginal(pm, pt,
                                                                 want_grids=False)
        except Exception as exc:  # per-dataset failures are reported, not fatal
            failures.append(f"dataset {idx}: {type(exc).__name__}: {exc}")
            continue
        n_ok += 1
        post = np.exp(logz - logsumexp(logz))  # equal prior model probabilities
        post /= post.sum()
        if m >= 1:
            with_mu = post[1:, :].sum()
            p_mu = post[1:, :].sum(axis=1) / with_mu
            mu_prob_sum += p_mu
            ranks = _rank_with_ties(p_mu)
            for k, r in enumerate(ranks):
                mu_rank_counts[k, r - 1] += 1
        if t >= 1:
            with_tau = post[:, 1:].sum()
            p_tau = post[:, 1:].sum(axis=0) / with_tau
            tau_prob_sum += p_tau
            ranks = _rank_with_ties(p_tau)
            for k, r in enumerate(ranks):
                tau_rank_counts[k, r - 1] += 1

    if n_ok == 0:
        raise DomainError("every dataset failed; see RankingReport.failures")

    def pack(specs, counts, probsum, n_c):
        return tuple(
            CandidateRanking(spec=specs[k], prior_prob=1.0 / n_c,
                             rank_counts=tuple(int(v) for v in counts[k]),
                             avg_posterior_prob=float(probsum[k] / n_ok))
            for k in range(n_c)
        )

    return RankingReport(
        mu=pack(mu_candidates, mu_rank_counts, mu_prob_sum, m),
        tau=pack(tau_candidates, tau_rank_counts, tau_prob_sum, t),
        n_datasets=len(datasets),
        n_failed=len(failures),
        failures=tuple(failures),
    )
