"""n-gram decomposition, gram-wise insertion and the overlap coefficient.

Strings are cut into consecutive non-overlapping chunks of ``nu``
characters (the trailing shorter chunk is kept). Two filters filled this
way are compared through the Dice-form coefficient over their true bits:
2 * common / (popcount1 + popcount2), 1 meaning identical content.

A clear-text Levenshtein distance is included as the baseline the
obfuscated measure is judged against.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bloomfilter import BloomFilter
from .errors import ConfigurationError, IncompatibleFiltersError, ParameterError


@dataclass(frozen=True)
class DistanceReport:
    """Outcome of comparing two filters.

    gamma: common true bits; k1, k2: each filter's popcount;
    delta: 2 * gamma / (k1 + k2), defined as 1.0 for two empty filters.
    """

    gamma: int
    k1: int
    k2: int
    delta: float


def ngrams(s: str, nu: int) -> list[bytes]:
    """Non-overlapping ``nu``-character chunks of ``s``, UTF-8 encoded.

    A final chunk shorter than ``nu`` is included as-is; dropping it
    would make strings differing only in the tail indistinguishable.
    """
    if nu < 1:
        raise ParameterError("nu must be >= 1")
    return [s[i : i + nu].encode("utf-8") for i in range(0, len(s), nu)]


def qinsert(f: BloomFilter, s: str, nu: int) -> None:
    """Insert every ``nu``-gram of ``s`` into the filter.

    An empty filter adopts ``nu``; a non-empty filter built with a
    different grade is rejected rather than silently mixed.
    """
    if nu < 1:
        raise ParameterError("nu must be >= 1")
    if f.inserted_count == 0:
        f.nu = nu
    elif f.nu != nu:
        raise ConfigurationError(
            f"filter was filled with {f.nu}-grams, cannot qinsert {nu}-grams"
        )
    for gram in ngrams(s, nu):
        f.insert(gram)


def distance(f1: BloomFilter, f2: BloomFilter) -> DistanceReport:
    """Overlap coefficient between two compatible filters.

    Raises IncompatibleFiltersError when bucket size, family or gram
    grade differ: an incomparable pair is an error, not a zero distance.
    """
    if not f1.compatible_with(f2):
        raise IncompatibleFiltersError(
            "filters differ in kappa, hash family or n-gram grade"
        )
    b1, b2 = f1.bits, f2.bits
    gamma = sum((x & y).bit_count() for x, y in zip(b1, b2))
    k1 = f1.true_bit_count()
    k2 = f2.true_bit_count()
    delta = 1.0 if k1 + k2 == 0 else 2 * gamma / (k1 + k2)
    return DistanceReport(gamma=gamma, k1=k1, k2=k2, delta=delta)


def edit_distance(a: str, b: str) -> int:
    """Levenshtein distance with unit-cost insert/delete/substitute."""
    if len(a) < len(b):
        a, b = b, a
    prev = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        cur = [i]
        for j, cb in enumerate(b, 1):
            cur.append(
                min(prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (ca != cb))
            )
        prev = cur
    return prev[-1]
