"""Desk-scale evaluation harness.

Covers the scripted insert/check and qinsert/distance query sequences,
the salt-length creation-time benchmark, and a filter-versus-edit-
distance comparison over a synthetic mutation corpus (stand-in for the
leaked-credential dataset, which is not distributed).
"""

from __future__ import annotations

import random
import string
import time
from dataclasses import dataclass, field

from scipy import stats

from .bloomfilter import BloomFilter
from .errors import ParameterError
from .hashing import generate_random_family
from .similarity import distance, edit_distance, qinsert
from .sizing import SizingParams, false_positive_probability

DEFAULT_KAPPA = 2**16
DEFAULT_K = 2


@dataclass
class ScriptStep:
    op: str
    arg: str
    result: object
    seconds: float


def _timed(steps: list[ScriptStep], op: str, arg: str, fn) -> object:
    t0 = time.perf_counter()
    result = fn()
    steps.append(ScriptStep(op, arg, result, time.perf_counter() - t0))
    return result


def run_insert_check_script(
    kappa: int = DEFAULT_KAPPA, k: int = DEFAULT_K, salt_len: int = 10
) -> list[ScriptStep]:
    """Create; Insert AAAA, BBBB; Check AAAA, CCCC, BBBB."""
    steps: list[ScriptStep] = []
    family = generate_random_family(k, salt_len)
    f = _timed(steps, "Create", f"kappa={kappa}", lambda: BloomFilter(family, kappa))
    for item in ("AAAA", "BBBB"):
        _timed(steps, "Insert", item, lambda it=item: f.insert(it.encode()))
    for item in ("AAAA", "CCCC", "BBBB"):
        _timed(steps, "Check", item, lambda it=item: f.check(it.encode()))
    return steps


def run_distance_script(
    kappa: int = DEFAULT_KAPPA, k: int = DEFAULT_K, salt_len: int = 10, nu: int = 2
) -> list[ScriptStep]:
    """QInsert three password variants into fresh filters and compare them."""
    steps: list[ScriptStep] = []
    family = generate_random_family(k, salt_len)
    passwords = ["thisismypassword", "thisismyp4ssword", "thisismypassw0rd"]
    filters = []
    for i, pw in enumerate(passwords, 1):
        f = _timed(
            steps, "Create", f"beta{i}", lambda: BloomFilter(family, kappa, nu)
        )
        _timed(steps, "QInsert", pw, lambda f=f, pw=pw: qinsert(f, pw, nu))
        filters.append(f)
    for i in (1, 2):
        _timed(
            steps,
            "Distance",
            f"beta1,beta{i + 1}",
            lambda i=i: distance(filters[0], filters[i]).delta,
        )
    return steps


def bench_salt_length(
    lengths: list[int],
    repetitions: int = 5,
    k: int = DEFAULT_K,
    kappa: int = DEFAULT_KAPPA,
) -> list[tuple[int, float]]:
    """Mean filter creation time per salt length, averaged over runs.

    Creation cost is dominated by drawing the salt octets, so the trend
    is linear in the salt length.
    """
    if repetitions < 1:
        raise ParameterError("repetitions must be >= 1")
    rows = []
    for length in lengths:
        BloomFilter(generate_random_family(k, length), kappa)  # warm-up
        total = 0.0
        for _ in range(repetitions):
            t0 = time.perf_counter()
            BloomFilter(generate_random_family(k, length), kappa)
            total += time.perf_counter() - t0
        rows.append((length, total / repetitions))
    return rows


# --- synthetic mutation corpus -------------------------------------------

MUTATION_KINDS = (
    "substitute-leet",
    "increment-suffix",
    "append-symbol",
    "swap-adjacent",
    "random-unrelated",
)

_LEET = {"a": "4", "e": "3", "i": "1", "o": "0", "s": "5", "t": "7"}

_BASE_WORDS = [
    "password", "sunshine", "dragon", "football", "welcome", "monkey",
    "charlie", "princess", "shadow", "superman", "computer", "whatever",
    "butterfly", "basketball", "chocolate", "liverpool",
]


@dataclass(frozen=True)
class MutationSpec:
    """Which variant kind to generate and how many per base."""

    kind: str
    count: int = 1

    def __post_init__(self) -> None:
        if self.kind not in MUTATION_KINDS:
            raise ParameterError(f"unknown mutation kind {self.kind!r}")
        if self.count < 1:
            raise ParameterError("count must be >= 1")


@dataclass
class EvalRecord:
    base: str
    variant: str
    kind: str
    edit_dist: int
    delta: float
    params: SizingParams


@dataclass
class EvalSummary:
    spearman: float
    threshold: float
    precision: float
    recall: float
    measured_fpp: dict[str, float] = field(default_factory=dict)


def default_bases(count: int, rng: random.Random) -> list[str]:
    """Plausible password bases: word plus year or digits."""
    bases = []
    for _ in range(count):
        word = rng.choice(_BASE_WORDS)
        suffix = rng.choice(
            [str(rng.randrange(1990, 2030)), str(rng.randrange(10, 9999)), "!"]
        )
        bases.append(word + suffix)
    return bases


def mutate(base: str, kind: str, rng: random.Random) -> str:
    """One variant of ``base`` under the given mutation kind."""
    if kind == "substitute-leet":
        positions = [i for i, c in enumerate(base) if c.lower() in _LEET]
        if not positions:
            return base + "1"
        i = rng.choice(positions)
        return base[:i] + _LEET[base[i].lower()] + base[i + 1 :]
    if kind == "increment-suffix":
        digits = len(base) - len(base.rstrip(string.digits))
        if digits == 0:
            return base + "1"
        head, tail = base[:-digits], base[-digits:]
        return head + str(int(tail) + 1).zfill(digits)[-digits:]
    if kind == "append-symbol":
        return base + rng.choice("!@#$%&*?")
    if kind == "swap-adjacent":
        if len(base) < 2:
            return base[::-1]
        i = rng.randrange(len(base) - 1)
        return base[:i] + base[i + 1] + base[i] + base[i + 2 :]
    if kind == "random-unrelated":
        alphabet = string.ascii_letters + string.digits + "!@#$%&*?"
        return "".join(rng.choice(alphabet) for _ in range(len(base)))
    raise ParameterError(f"unknown mutation kind {kind!r}")


def evaluate_corpus(
    bases: list[str],
    specs: list[MutationSpec],
    params: SizingParams,
    nu: int = 2,
    threshold: float = 0.6,
    rng: random.Random | None = None,
    salt_len: int = 10,
) -> tuple[list[EvalRecord], EvalSummary]:
    """Filter similarity versus edit distance over (base, variant) pairs.

    The summary reports the Spearman rank correlation between the two
    measures and precision/recall of a "similar when delta >= threshold"
    classifier, with random-unrelated pairs as the negative class.
    """
    rng = rng or random.Random()
    family = generate_random_family(params.k, salt_len)
    records: list[EvalRecord] = []
    for base in bases:
        base_filter = BloomFilter(family, params.m, nu)
        qinsert(base_filter, base, nu)
        for spec in specs:
            for _ in range(spec.count):
                variant = mutate(base, spec.kind, rng)
                vf = BloomFilter(family, params.m, nu)
                qinsert(vf, variant, nu)
                records.append(
                    EvalRecord(
                        base=base,
                        variant=variant,
                        kind=spec.kind,
                        edit_dist=edit_distance(base, variant),
                        delta=distance(base_filter, vf).delta,
                        params=params,
                    )
                )
    edit_dists = [r.edit_dist for r in records]
    deltas = [r.delta for r in records]
    if len(set(edit_dists)) < 2 or len(set(deltas)) < 2:
        rho = 0.0  # correlation undefined on a constant input
    else:
        rho = stats.spearmanr(edit_dists, deltas).statistic
    tp = sum(
        1 for r in records if r.kind != "random-unrelated" and r.delta >= threshold
    )
    fp = sum(
        1 for r in records if r.kind == "random-unrelated" and r.delta >= threshold
    )
    fn = sum(
        1 for r in records if r.kind != "random-unrelated" and r.delta < threshold
    )
    precision = tp / (tp + fp) if tp + fp else 1.0
    recall = tp / (tp + fn) if tp + fn else 1.0
    return records, EvalSummary(
        spearman=float(rho), threshold=threshold, precision=precision, recall=recall
    )


def measure_fpp(
    m: int, k: int, n: int, probes: int = 10**5, rng: random.Random | None = None,
    salt_len: int = 10,
) -> tuple[float, float]:
    """(measured, predicted) false-positive rate over random probes."""
    rng = rng or random.Random()
    family = generate_random_family(k, salt_len)
    f = BloomFilter(family, m)
    inserted = set()
    while len(inserted) < n:
        inserted.add(rng.getrandbits(64).to_bytes(8, "big"))
    for item in inserted:
        f.insert(item)
    hits = 0
    for _ in range(probes):
        probe = b"p" + rng.getrandbits(64).to_bytes(8, "big")
        if f.check(probe):
            hits += 1
    return hits / probes, false_positive_probability(m, k, n)
