"""Anagram attack: rebuild filter content from its bits and salts.

With the salts stored next to the bits, anyone can enumerate every
n-gram over an alphabet, test each against the filter, and compose the
survivors into candidate passwords. The combinatorial counters quantify
the composition search space exactly, in big-integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator

from .bloomfilter import BloomFilter
from .errors import ParameterError, ResourceLimitError
from .similarity import ngrams

# Printable ASCII, codes 32..126: 95 characters, 9025 bigrams.
PRINTABLE_ASCII = "".join(chr(c) for c in range(32, 127))

# Caps gram enumeration at seconds of work; nu=4 over full ASCII would
# need 95**4 ~ 8.1e7 checks and anything beyond that is refused.
ENUMERATION_LIMIT = 10**8


@dataclass(frozen=True)
class AttackConfig:
    """Attack parameters: alphabet, gram grade, length bounds, dictionary."""

    alphabet: str = PRINTABLE_ASCII
    nu: int = 2
    min_len: int = 8
    max_len: int = 14
    dictionary: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if not self.alphabet:
            raise ParameterError("alphabet must not be empty")
        if self.nu < 1:
            raise ParameterError("nu must be >= 1")
        if self.min_len > self.max_len:
            raise ParameterError("min_len must be <= max_len")


@dataclass
class AttackReport:
    """Attack outcome: recovered grams, search-space size, emitted candidates."""

    candidate_grams: list[str]
    combination_count: int
    candidates: list[str] = field(default_factory=list)
    truncated: bool = False

    @property
    def candidates_emitted(self) -> int:
        return len(self.candidates)


def enumerate_grams(alphabet: str, nu: int) -> list[str]:
    """All |alphabet|**nu grams of length ``nu`` in lexicographic order."""
    if nu < 1:
        raise ParameterError("nu must be >= 1")
    chars = sorted(set(alphabet))
    total = len(chars) ** nu
    if total > ENUMERATION_LIMIT:
        raise ResourceLimitError(
            f"{len(chars)}^{nu} = {total} grams exceeds the "
            f"{ENUMERATION_LIMIT} enumeration limit"
        )
    return ["".join(p) for p in itertools.product(chars, repeat=nu)]


def recover_grams(f: BloomFilter, config: AttackConfig) -> set[str]:
    """Every alphabet gram the filter answers positive for.

    A superset of the truly inserted grams (no false negatives); the
    surplus is the filter's false positives at its sizing.
    """
    return {
        g for g in enumerate_grams(config.alphabet, config.nu)
        if f.check(g.encode("utf-8"))
    }


def count_combinations(
    gram_count: int, length: int, nu: int, with_repetition: bool
) -> int:
    """Ways to pick length/nu grams out of ``gram_count``, exact integer.

    C(g, length/nu) without repetition, C(g + length/nu - 1, length/nu)
    with repetition (multisets).
    """
    if nu < 1:
        raise ParameterError("nu must be >= 1")
    if gram_count < 1:
        raise ParameterError("gram_count must be >= 1")
    if length % nu != 0:
        raise ParameterError("nu must divide length")
    slots = length // nu
    if with_repetition:
        return math.comb(gram_count + slots - 1, slots)
    return math.comb(gram_count, slots)


def count_combinations_range(
    gram_count: int, min_len: int, max_len: int, nu: int
) -> int:
    """Multiset combination count summed over lengths in [min_len, max_len].

    Lengths not divisible by ``nu`` are skipped; an empty range after
    that filtering yields 0.
    """
    if min_len > max_len:
        raise ParameterError("min_len must be <= max_len")
    return sum(
        count_combinations(gram_count, length, nu, with_repetition=True)
        for length in range(min_len, max_len + 1)
        if length % nu == 0
    )


def _passes(word: str, recovered: set[str], nu: int) -> bool:
    return all(g.decode("utf-8") in recovered for g in ngrams(word, nu))


def _candidate_stream(recovered: set[str], config: AttackConfig) -> Iterator[str]:
    ordered = sorted(recovered)
    if config.dictionary is not None:
        for word in sorted(config.dictionary, key=lambda w: (len(w), w)):
            if config.min_len <= len(word) <= config.max_len and _passes(
                word, recovered, config.nu
            ):
                yield word
        return
    for length in range(config.min_len, config.max_len + 1):
        if length % config.nu != 0:
            continue
        for combo in itertools.product(ordered, repeat=length // config.nu):
            yield "".join(combo)


def reconstruct(
    f: BloomFilter, config: AttackConfig, limit: int
) -> tuple[list[str], bool]:
    """Compose recovered grams into candidate passwords.

    Emits strings whose every non-overlapping gram lies in the recovered
    set, shortest first then lexicographic; with a dictionary only its
    surviving words are emitted. Returns (candidates, truncated) where
    truncated means the limit cut the stream short.
    """
    if limit < 0:
        raise ParameterError("limit must be >= 0")
    recovered = recover_grams(f, config)
    out: list[str] = []
    stream = _candidate_stream(recovered, config)
    for candidate in stream:
        if len(out) >= limit:
            return out, True
        out.append(candidate)
    return out, limit == 0


def run_attack(f: BloomFilter, config: AttackConfig, limit: int = 1000) -> AttackReport:
    """Full attack: recover grams, count the space, emit candidates."""
    recovered = recover_grams(f, config)
    count = count_combinations_range(
        len(recovered), config.min_len, config.max_len, config.nu
    ) if recovered else 0
    candidates, truncated = reconstruct(f, config, limit)
    return AttackReport(
        candidate_grams=sorted(recovered),
        combination_count=count,
        candidates=candidates,
        truncated=truncated,
    )
