"""Shared fixtures and independent oracles for the test suite."""
import numpy as np
import pytest
from scipy.special import gammaln, logsumexp

from bmameta.distributions import PriorSpec
from bmameta.effect_sizes import ContingencyTable, Measure
from bmameta.model_space import DataModel, Dataset, build_space


def riemann_study_loglik(table, mu, tau, bound=10.0, nb=2000, ng=2000):
    """Brute-force 2D Riemann sum for the per-study binomial-normal likelihood.

    Independent of the production path: plain dense grids over beta in
    [-bound, bound] and gamma in mu +- 10 tau, no mode search, no
    interpolation, no Gaussian rules.
    """
    a, c = float(table.a), float(table.c)
    n1, n2 = float(table.n1), float(table.n2)
    lc = (gammaln(n1 + 1) - gammaln(a + 1) - gammaln(n1 - a + 1)
          + gammaln(n2 + 1) - gammaln(c + 1) - gammaln(n2 - c + 1))
    beta = np.linspace(-bound, bound, nb)
    db = beta[1] - beta[0]
    log_trunc = np.log1p(-2.0 / (1.0 + np.exp(bound)))
    if tau == 0.0:
        gam = np.array([mu])
        lw_g = np.array([0.0])
    else:
        gam = np.linspace(mu - 10 * tau, mu + 10 * tau, ng)
        dg = gam[1] - gam[0]
        lw_g = (-0.5 * np.log(2 * np.pi) - np.log(tau)
                - 0.5 * ((gam - mu) / tau) ** 2 + np.log(dg))
    e1 = beta[None, :] + gam[:, None] / 2.0
    e2 = beta[None, :] - gam[:, None] / 2.0
    ll = (a * e1 - n1 * np.logaddexp(0.0, e1)
          + c * e2 - n2 * np.logaddexp(0.0, e2)
          + beta[None, :] - 2.0 * np.logaddexp(0.0, beta[None, :]) - log_trunc)
    inner = logsumexp(ll, axis=1) + np.log(db)
    return float(logsumexp(inner + lw_g)) + lc


HONEY_TABLES = (ContingencyTable(5, 30, 0, 39), ContingencyTable(2, 38, 0, 40))
HONEY_LABELS = ("Paul 2007", "Shadkam 2010")


@pytest.fixture(scope="session")
def honey_dataset():
    return Dataset.from_tables(Measure.LOG_OR, HONEY_TABLES, HONEY_LABELS)


@pytest.fixture(scope="session")
def ari_priors():
    return PriorSpec.student_t(0, 0.48, 3), PriorSpec.inv_gamma(1.67, 0.45)


@pytest.fixture(scope="session")
def honey_space(ari_priors):
    mu, tau = ari_priors
    return build_space(Measure.LOG_OR, mu, tau, DataModel.BINOMIAL_NORMAL)


@pytest.fixture(scope="session")
def honey_evidence(honey_dataset, honey_space):
    from bmameta.inference import evidence
    return evidence(honey_dataset, honey_space)
