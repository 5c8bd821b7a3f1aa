"""Bayesian model-averaged meta-analysis for binary and time-to-event outcomes.

Four-hypothesis model averaging (fixed/random effects x null/alternative)
over normal-normal and binomial-normal data models, inclusion Bayes factors,
model-averaged and conditional posterior summaries, and an embedded registry
of empirical prior distributions keyed by outcome measure and medical topic.
"""

__version__ = "0.1.0"

from .bma import (
    BmaResult,
    MixedPosterior,
    OutputScale,
    RankingReport,
    SummaryStats,
    averaged_posterior_mu,
    averaged_posterior_tau,
    combine,
    inclusion_bf_effect,
    inclusion_bf_heterogeneity,
    posterior_model_probs,
    rank_priors_over_corpus,
    to_ratio_scale,
)
from .distributions import (
    PriorFamily,
    PriorSpec,
    format_prior,
    parse_prior,
)
from .effect_sizes import (
    ContingencyTable,
    EffectEstimate,
    Measure,
    ZeroCellPolicy,
    log_odds_ratio,
    log_risk_ratio,
    risk_difference,
    validate_estimate,
)
from .fitting import FitInput, FitResult, FitTarget, filter_tau_estimates, fit_family
from .inference import (
    EvidenceEngine,
    ModelEvidence,
    PosteriorGrid,
    QuadratureConfig,
    evidence,
    posterior_mu_grid,
    posterior_tau_grid,
)
from .model_space import (
    DataModel,
    Dataset,
    Hypothesis,
    HypothesisId,
    ModelSpace,
    StudyLikelihood,
    build_space,
    loglik_binomial_normal_study,
    loglik_normal_normal,
)
from .prior_registry import (
    CandidateSet,
    RegistryEntry,
    candidate_priors,
    list_topics,
    lookup,
    registry_checksum,
    verify_registry,
)

__all__ = [
    "__version__",
    "BmaResult", "MixedPosterior", "OutputScale", "RankingReport", "SummaryStats",
    "averaged_posterior_mu", "averaged_posterior_tau", "combine",
    "inclusion_bf_effect", "inclusion_bf_heterogeneity", "posterior_model_probs",
    "rank_priors_over_corpus", "to_ratio_scale",
    "PriorFamily", "PriorSpec", "format_prior", "parse_prior",
    "ContingencyTable", "EffectEstimate", "Measure", "ZeroCellPolicy",
    "log_odds_ratio", "log_risk_ratio", "risk_difference", "validate_estimate",
    "FitInput", "FitResult", "FitTarget", "filter_tau_estimates", "fit_family",
    "EvidenceEngine", "ModelEvidence", "PosteriorGrid", "QuadratureConfig",
    "evidence", "posterior_mu_grid", "posterior_tau_grid",
    "DataModel", "Dataset", "Hypothesis", "HypothesisId", "ModelSpace",
    "StudyLikelihood", "build_space", "loglik_binomial_normal_study",
    "loglik_normal_normal",
    "CandidateSet", "RegistryEntry", "candidate_priors", "list_topics",
    "lookup", "registry_checksum", "verify_registry",
]
