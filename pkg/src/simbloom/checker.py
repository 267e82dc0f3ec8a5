"""Candidate-password verdicts against a stored filter history.

Shared by the CLI and the HTTP service so both always agree. The filter
coefficient is a similarity (1 = identical), so the warning fires when
the best match is at or above the threshold.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bloomfilter import BloomFilter
from .similarity import distance, qinsert
from .storage import FilterStore

DEFAULT_THRESHOLD = 0.6


@dataclass(frozen=True)
class CheckDecision:
    """Per-label similarities plus the accept/warn verdict."""

    deltas: dict[str, float]
    max_delta: float
    threshold: float
    verdict: str  # "accept" or "warn"

    def as_dict(self) -> dict:
        return {
            "deltas": self.deltas,
            "max_delta": self.max_delta,
            "threshold": self.threshold,
            "verdict": self.verdict,
        }


def candidate_filter(store: FilterStore, candidate: str) -> BloomFilter:
    """Build a throwaway filter for the candidate using the store's config."""
    config = store.config()
    first = store.entries()
    if not first:
        raise ValueError("store has no filters to compare against")
    reference = store.load(first[0].label)
    f = BloomFilter(reference.family, reference.kappa, reference.nu)
    qinsert(f, candidate, reference.nu or int(config.get("nu", 2)))
    return f


def check_candidate(
    store: FilterStore, candidate: str, threshold: float = DEFAULT_THRESHOLD
) -> CheckDecision:
    """Compare a candidate against every stored filter."""
    deltas: dict[str, float] = {}
    entries = store.entries()
    if entries:
        cf = candidate_filter(store, candidate)
        for entry in entries:
            deltas[entry.label] = distance(cf, store.load(entry.label)).delta
    max_delta = max(deltas.values(), default=0.0)
    verdict = "warn" if deltas and max_delta >= threshold else "accept"
    return CheckDecision(
        deltas=deltas, max_delta=max_delta, threshold=threshold, verdict=verdict
    )
