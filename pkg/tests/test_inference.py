"""Evidence quadrature: closed forms, Monte Carlo oracles, grid contracts."""
import math

import numpy as np
import pytest
from scipy.special import logsumexp

from bmameta.distributions import PriorSpec, log_density, sample
from bmameta.effect_sizes import Measure, validate_estimate
from bmameta.errors import DomainError, NotConvergedError, ParameterFixedError
from bmameta.inference import (
    EvidenceEngine,
    QuadratureConfig,
    evidence,
    posterior_mu_grid,
    posterior_tau_grid,
)
from bmameta.model_space import DataModel, Dataset, HypothesisId, build_space


def _nn_dataset(pairs, measure=Measure.LOG_OR):
    ests = [validate_estimate(y, se, measure, f"s{i}")
            for i, (y, se) in enumerate(pairs)]
    return Dataset.from_estimates(measure, ests)


def conjugate_log_evidence(pairs, sd0):
    """Closed-form fixed-effect evidence for a Normal(0, sd0) effect prior."""
    y = np.array([p[0] for p in pairs])
    se = np.array([p[1] for p in pairs])
    w = 1.0 / se ** 2
    vn = 1.0 / (1.0 / sd0 ** 2 + w.sum())
    mn = vn * (w * y).sum()
    # log m(y) = log N(y; 0, Sigma) with Sigma = diag(se^2) + sd0^2 J
    ll = (-0.5 * len(y) * math.log(2 * math.pi)
          - 0.5 * np.log(se ** 2).sum()
          - 0.5 * (w * y ** 2).sum()
          + 0.5 * math.log(vn / sd0 ** 2)
          + 0.5 * mn ** 2 / vn)
    return float(ll)


def mc_log_evidence(dataset, prior_mu, prior_tau, n=10 ** 6, seed=0):
    """Simple Monte Carlo estimate: draw from the priors, average the likelihood."""
    y = np.array([e.y for e in dataset.studies])
    se = np.array([e.se for e in dataset.studies])
    mu = sample(prior_mu, n, seed=seed)
    tau = sample(prior_tau, n, seed=seed + 1)
    var = se[None, :] ** 2 + tau[:, None] ** 2
    ll = -0.5 * np.sum(np.log(2 * np.pi * var)
                       + (y[None, :] - mu[:, None]) ** 2 / var, axis=1)
    logz = float(logsumexp(ll) - math.log(n))
    # delta-method standard error of the log mean
    w = np.exp(ll - ll.max())
    se_log = float(w.std() / (w.mean() * math.sqrt(n)))
    return logz, se_log


class TestDirectEvaluations:
    def test_h0f_single_study(self):
        ds = _nn_dataset([(0.0, 1.0)])
        space = build_space(Measure.LOG_OR, PriorSpec.normal(0, 1),
                            PriorSpec.half_normal(0.5), DataModel.NORMAL_NORMAL)
        evs = evidence(ds, space)
        assert evs[0].hypothesis_id is HypothesisId.H0F
        assert evs[0].log_marginal == pytest.approx(-0.918938533204673, abs=1e-10)
        assert evs[0].mu_grid is None and evs[0].tau_grid is None

    def test_grids_present_exactly_when_free(self):
        ds = _nn_dataset([(0.3, 0.4), (0.1, 0.5)])
        space = build_space(Measure.LOG_OR, PriorSpec.normal(0, 1),
                            PriorSpec.half_normal(0.5), DataModel.NORMAL_NORMAL)
        evs = {e.hypothesis_id: e for e in evidence(ds, space)}
        assert evs[HypothesisId.H1F].mu_grid is not None
        assert evs[HypothesisId.H1F].tau_grid is None
        assert evs[HypothesisId.H0R].tau_grid is not None
        assert evs[HypothesisId.H0R].mu_grid is None
        assert evs[HypothesisId.H1R].mu_grid is not None
        assert evs[HypothesisId.H1R].tau_grid is not None
        with pytest.raises(ParameterFixedError):
            posterior_mu_grid(evs[HypothesisId.H0F])
        with pytest.raises(ParameterFixedError):
            posterior_tau_grid(evs[HypothesisId.H1F])


class TestConjugateClosedForm:
    # tight tolerance needs a deep prior-mass cut so the deliberate window
    # truncation does not mask quadrature error
    CFG = QuadratureConfig(prior_mass_cut=1e-10)

    @pytest.mark.parametrize("pairs,sd0", [
        ([(0.5, 0.5)], 1.0),
        ([(0.3, 0.4), (-0.2, 0.7), (0.6, 0.3)], 0.81),
        ([(0.05, 0.2), (0.02, 0.25), (0.1, 0.3), (-0.04, 0.5)], 0.35),
    ])
    def test_evidence_matches_closed_form(self, pairs, sd0):
        ds = _nn_dataset(pairs)
        space = build_space(Measure.LOG_OR, PriorSpec.normal(0, sd0),
                            PriorSpec.half_normal(0.5), DataModel.NORMAL_NORMAL)
        evs = {e.hypothesis_id: e for e in evidence(ds, space, self.CFG)}
        want = conjugate_log_evidence(pairs, sd0)
        assert evs[HypothesisId.H1F].log_marginal == pytest.approx(want, abs=1e-8)

    def test_grid_mean_sd_match_conjugate_posterior(self):
        # posterior: Normal(0.5/(1+0.25) = 0.4, sqrt(0.25/1.25))
        ds = _nn_dataset([(0.5, 0.5)])
        space = build_space(Measure.LOG_OR, PriorSpec.normal(0, 1),
                            PriorSpec.half_normal(0.5), DataModel.NORMAL_NORMAL)
        evs = {e.hypothesis_id: e for e in evidence(ds, space, self.CFG)}
        grid = posterior_mu_grid(evs[HypothesisId.H1F])
        assert grid.mean() == pytest.approx(0.4, abs=1e-4)
        assert grid.sd() == pytest.approx(math.sqrt(0.25 / 1.25), abs=1e-4)


class TestMonteCarloOracle:
    @pytest.mark.parametrize("seed", [1, 2, 3])
    def test_nn_marginals_match_prior_sampling(self, seed):
        rng = np.random.default_rng(seed)
        k = int(rng.integers(3, 11))
        se = rng.uniform(0.25, 0.7, size=k)
        y = rng.normal(0.0, 0.5, size=k) * 0.8
        ds = _nn_dataset(list(zip(y, se)))
        prior_mu = PriorSpec.normal(0, 0.6)
        prior_tau = PriorSpec.half_normal(0.3)
        space = build_space(Measure.LOG_OR, prior_mu, prior_tau,
                            DataModel.NORMAL_NORMAL)
        evs = {e.hypothesis_id: e for e in evidence(ds, space)}
        zero = PriorSpec.point_mass(0.0)
        cases = {
            HypothesisId.H1F: (prior_mu, zero),
            HypothesisId.H0R: (zero, prior_tau),
            HypothesisId.H1R: (prior_mu, prior_tau),
        }
        for hid, (pm, pt) in cases.items():
            want, se_mc = mc_log_evidence(ds, pm, pt, seed=seed * 100)
            got = evs[hid].log_marginal
            assert abs(got - want) < max(0.01, 3 * se_mc), (hid, got, want, se_mc)


class TestGridContracts:
    def _h0r_setup(self, points=81, se=0.4, y=0.3,
                   prior_tau=PriorSpec.inv_gamma(1.67, 0.45)):
        ds = _nn_dataset([(y, se)])
        space = build_space(Measure.LOG_OR, PriorSpec.student_t(0, 0.48, 3),
                            prior_tau, DataModel.NORMAL_NORMAL)
        cfg = QuadratureConfig(outer_points_mu=81, outer_points_tau=points)
        evs = {e.hypothesis_id: e for e in evidence(ds, space, cfg)}
        return evs[HypothesisId.H0R]

    @pytest.mark.parametrize("prior_tau", [
        PriorSpec.inv_gamma(1.67, 0.45),
        PriorSpec.half_normal(0.10),
        PriorSpec.gamma(1.99, 0.25),
    ], ids=str)
    def test_h0r_grid_matches_10x_reference(self, prior_tau):
        coarse = self._h0r_setup(81, prior_tau=prior_tau)
        fine = self._h0r_setup(811, prior_tau=prior_tau)
        g, r = posterior_tau_grid(coarse), posterior_tau_grid(fine)
        assert np.array_equal(g.axis, r.axis)
        sup = np.max(np.abs(g.normalized_density - r.normalized_density))
        assert sup < 1e-5

    def test_grids_normalized_and_supported(self, honey_evidence):
        for ev in honey_evidence:
            for grid in (ev.mu_grid, ev.tau_grid):
                if grid is None:
                    continue
                total = np.trapezoid(grid.normalized_density, grid.axis)
                assert total == pytest.approx(1.0, abs=1e-6)
                assert np.all(np.diff(grid.axis) > 0)
            if ev.tau_grid is not None:
                assert np.all(ev.tau_grid.axis > 0)

    def test_log_weights_are_prior_times_likelihood(self):
        ev = self._h0r_setup(81)
        grid = posterior_tau_grid(ev)
        prior_tau = PriorSpec.inv_gamma(1.67, 0.45)
        k = len(grid.axis) // 2
        tau = grid.axis[k]
        want = (log_density(prior_tau, tau)
                - 0.5 * (math.log(2 * math.pi * (0.16 + tau ** 2))
                         + 0.09 / (0.16 + tau ** 2)))
        assert grid.log_weights[k] == pytest.approx(want, abs=1e-9)

    def test_heterogeneity_data_shifts_posterior_mode_up(self):
        # spread >> se: posterior tau mode should exceed the prior mode
        rng = np.random.default_rng(5)
        y = rng.normal(0, 1.5, size=12)
        ds = _nn_dataset([(v, 0.1) for v in y])
        space = build_space(Measure.LOG_OR, PriorSpec.student_t(0, 0.48, 3),
                            PriorSpec.inv_gamma(1.67, 0.45),
                            DataModel.NORMAL_NORMAL)
        evs = {e.hypothesis_id: e for e in evidence(ds, space)}
        grid = posterior_tau_grid(evs[HypothesisId.H0R])
        prior_mode = 0.45 / (1.67 + 1.0)  # inverse-gamma mode b/(a+1)
        post_mode = grid.axis[np.argmax(grid.normalized_density)]
        assert post_mode > prior_mode

    def test_permutation_invariance(self):
        pairs = [(0.2, 0.5), (-0.1, 0.8), (0.4, 0.3), (0.0, 0.6)]
        space = build_space(Measure.LOG_OR, PriorSpec.normal(0, 0.81),
                            PriorSpec.inv_gamma(1.53, 0.40),
                            DataModel.NORMAL_NORMAL)
        a = evidence(_nn_dataset(pairs), space)
        b = evidence(_nn_dataset(pairs[::-1]), space)
        for ea, eb in zip(a, b):
            assert ea.log_marginal == pytest.approx(eb.log_marginal, abs=1e-10)

    def test_doubling_outer_points_is_stable(self, honey_dataset, honey_space):
        base = QuadratureConfig()
        dense = QuadratureConfig(outer_points_mu=161, outer_points_tau=161)
        za = [e.log_marginal for e in evidence(honey_dataset, honey_space, base)]
        zb = [e.log_marginal for e in evidence(honey_dataset, honey_space, dense)]
        for a, b in zip(za, zb):
            assert abs(a - b) < base.refine_threshold

    def test_not_converged_raises(self, honey_dataset, honey_space):
        cfg = QuadratureConfig(outer_points_mu=11, outer_points_tau=11,
                               refine_threshold=1e-13)
        with pytest.raises(NotConvergedError):
            evidence(honey_dataset, honey_space, cfg)

    def test_threaded_matches_serial(self, honey_dataset, honey_space):
        serial = evidence(honey_dataset, honey_space)
        threaded = evidence(honey_dataset, honey_space, max_workers=4)
        for a, b in zip(serial, threaded):
            assert a.log_marginal == b.log_marginal


class TestConfigValidation:
    def test_points_must_be_odd_and_large_enough(self):
        with pytest.raises(DomainError):
            QuadratureConfig(outer_points_mu=80)
        with pytest.raises(DomainError):
            QuadratureConfig(outer_points_tau=9)

    def test_cut_range(self):
        with pytest.raises(DomainError):
            QuadratureConfig(prior_mass_cut=0.5)
        with pytest.raises(DomainError):
            QuadratureConfig(prior_mass_cut=0.0)

    def test_data_model_mismatch(self):
        ds = _nn_dataset([(0.1, 0.5)])
        with pytest.raises(DomainError):
            EvidenceEngine(ds, DataModel.BINOMIAL_NORMAL)
