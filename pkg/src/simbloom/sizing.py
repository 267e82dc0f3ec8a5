"""Analytic filter calibration: false-positive probability and sizing.

fpp(m, k, n) = (1 - (1 - 1/m)**(k*n))**k for a bucket of m slots, k hash
functions and n inserted elements. Inverting it gives the optimal bucket
size and hash count for a target rate. The same formulas, fed a high
target rate, produce deliberately under-sized buckets that drown the
filter content in collisions.

The bucket size ``m`` here is the same quantity as a filter's ``kappa``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ParameterError


@dataclass(frozen=True)
class SizingParams:
    """One consistent (m, k, n, fpp) working point."""

    m: int
    k: int
    n: int
    fpp: float

    def __post_init__(self) -> None:
        if self.m < 1 or self.k < 1 or self.n < 0:
            raise ParameterError("m, k must be >= 1 and n >= 0")
        if not 0.0 < self.fpp < 1.0:
            raise ParameterError("fpp must lie in (0, 1)")


def false_positive_probability(m: int, k: int, n: int) -> float:
    """Probability that a never-inserted item checks positive."""
    if m < 1:
        raise ParameterError("m must be >= 1")
    if k < 1:
        raise ParameterError("k must be >= 1")
    if n < 0:
        raise ParameterError("n must be >= 0")
    if n == 0:
        return 0.0
    return (1.0 - (1.0 - 1.0 / m) ** (k * n)) ** k


def optimal_m(n: int, fpp: float) -> int:
    """Smallest bucket size achieving ``fpp`` for ``n`` elements.

    ceil(-n * ln(fpp) / ln(2)^2), clamped to at least 1.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    if not 0.0 < fpp < 1.0:
        raise ParameterError("fpp must lie in (0, 1)")
    return max(1, math.ceil(-n * math.log(fpp) / math.log(2) ** 2))


def optimal_k(m_opt: int, n: int) -> int:
    """Hash-function count matching a bucket of ``m_opt`` slots.

    ceil((m_opt / n) * ln 2), clamped to at least 1.
    """
    if m_opt < 1:
        raise ParameterError("m_opt must be >= 1")
    if n < 1:
        raise ParameterError("n must be >= 1")
    return max(1, math.ceil(m_opt / n * math.log(2)))


def obfuscating_params(n: int, target_fpp: float) -> SizingParams:
    """Sizing for a target collision rate, with the achieved rate recomputed.

    Intended for high targets (>= 0.1) where the collisions hide the
    filter content; works for any target in (0, 1).
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    m = optimal_m(n, target_fpp)
    k = optimal_k(m, n)
    achieved = false_positive_probability(m, k, n)
    # Degenerate targets can push achieved to the open interval's edges.
    achieved = min(max(achieved, 1e-300), 1.0 - 1e-16)
    return SizingParams(m=m, k=k, n=n, fpp=achieved)
