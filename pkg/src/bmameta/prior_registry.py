"""Lookup layer over the embedded empirical-prior tables.

Entries are keyed by (measure, topic) with case-insensitive,
whitespace-normalized topic matching; "Pooled" is accepted for the pooled
row. The tables are read-only; a checksum guards the embedded data.
"""
from __future__ import annotations

import difflib
import hashlib
import json
from dataclasses import dataclass

from . import registry_data
from .distributions import PriorSpec, format_prior, parse_prior
from .effect_sizes import Measure
from .errors import MissingTauPriorError, UnknownTopicError

__all__ = [
    "RegistryEntry",
    "CandidateSet",
    "lookup",
    "list_topics",
    "candidate_priors",
    "registry_checksum",
    "verify_registry",
]

_ROW_ATTRS = {
    Measure.LOG_OR: "LOG_OR_ROWS",
    Measure.LOG_RR: "LOG_RR_ROWS",
    Measure.RD: "RD_ROWS",
    Measure.LOG_HR: "LOG_HR_ROWS",
}


def _rows_for(measure: Measure):
    return getattr(registry_data, _ROW_ATTRS[measure])


@dataclass(frozen=True)
class RegistryEntry:
    """One published prior row: topic, priors, and documentation counts."""

    measure: Measure
    topic: str
    prior_mu: PriorSpec
    prior_tau: PriorSpec | None
    n_comparisons_mu: int
    n_estimates_mu: int
    n_comparisons_tau: int | None
    n_estimates_tau: int | None

    def to_json_dict(self) -> dict:
        return {
            "measure": self.measure.value,
            "topic": self.topic,
            "prior_mu": format_prior(self.prior_mu),
            "prior_tau": None if self.prior_tau is None else format_prior(self.prior_tau),
            "n_comparisons_mu": self.n_comparisons_mu,
            "n_estimates_mu": self.n_estimates_mu,
            "n_comparisons_tau": self.n_comparisons_tau,
            "n_estimates_tau": self.n_estimates_tau,
        }


@dataclass(frozen=True)
class CandidateSet:
    """Training-set candidate prior families for one measure."""

    measure: Measure
    mu: tuple[PriorSpec, ...]
    tau: tuple[PriorSpec, ...]


def _entry_from_row(measure: Measure, row) -> RegistryEntry:
    topic, cmu, emu, ctau, etau, mu_text, tau_text = row
    return RegistryEntry(
        measure=measure,
        topic=topic,
        prior_mu=parse_prior(mu_text),
        prior_tau=None if tau_text is None else parse_prior(tau_text),
        n_comparisons_mu=cmu,
        n_estimates_mu=emu,
        n_comparisons_tau=ctau,
        n_estimates_tau=etau,
    )


def _normalize_topic(topic: str) -> str:
    return " ".join(topic.split()).casefold()


def list_topics(measure: Measure) -> tuple[RegistryEntry, ...]:
    """All rows for the measure, in published order (pooled row last)."""
    return tuple(_entry_from_row(measure, row) for row in _rows_for(measure))


def lookup(measure: Measure, topic: str, require_tau: bool = False) -> RegistryEntry:
    """Exact-match topic lookup (case-insensitive, whitespace-normalized).

    ``require_tau=True`` states that the caller will build random-effects
    models; rows without a heterogeneity prior then raise
    MissingTauPriorError instead of returning.
    """
    wanted = _normalize_topic(topic)
    if wanted == "pooled":
        wanted = "pooled estimate"
    entries = list_topics(measure)
    by_key = {_normalize_topic(e.topic): e for e in entries}
    entry = by_key.get(wanted)
    if entry is None:
        near = difflib.get_close_matches(wanted, list(by_key), n=3, cutoff=0.4)
        suggestions = ", ".join(repr(by_key[k].topic) for k in near)
        raise UnknownTopicError(
            f"no {measure.value} prior for topic {topic!r}"
            + (f"; nearest matches: {suggestions}" if suggestions else "")
        )
    if require_tau and entry.prior_tau is None:
        raise MissingTauPriorError(
            f"topic {entry.topic!r} has no heterogeneity prior for "
            f"{measure.value}; random-effects models cannot be built"
        )
    return entry


def candidate_priors(measure: Measure) -> CandidateSet:
    """Training-set candidate families for the measure."""
    mu_texts, tau_texts = registry_data.CANDIDATES[measure.value]
    return CandidateSet(
        measure=measure,
        mu=tuple(parse_prior(t) for t in mu_texts),
        tau=tuple(parse_prior(t) for t in tau_texts),
    )


def registry_checksum() -> str:
    """SHA-256 over a canonical serialization of every embedded table."""
    payload = {
        "rows": {m.value: list(_rows_for(m)) for m in Measure},
        "candidates": registry_data.CANDIDATES,
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode("utf-8")).hexdigest()


def verify_registry() -> None:
    """Raise if the embedded tables were edited without updating the checksum."""
    got = registry_checksum()
    if got != registry_data.REGISTRY_SHA256:
        raise RuntimeError(
            "embedded prior tables fail their integrity check "
            f"(sha256 {got}, expected {registry_data.REGISTRY_SHA256})"
        )
