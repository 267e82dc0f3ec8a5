"""Acceptance suite: one test per release criterion.

Run with `pytest tests/test_acceptance.py -v -s` to get one pass/fail
line per criterion.
"""

import math
import random
import subprocess
import sys
from pathlib import Path

import pytest

from simbloom import (
    AttackConfig,
    BloomFilter,
    IncompatibleFiltersError,
    PRINTABLE_ASCII,
    count_combinations,
    count_combinations_range,
    distance,
    enumerate_grams,
    generate_random_family,
    parse,
    qinsert,
    reconstruct,
    recover_grams,
    serialize,
)
from simbloom.harness import (
    MUTATION_KINDS,
    MutationSpec,
    bench_salt_length,
    default_bases,
    evaluate_corpus,
    measure_fpp,
    run_distance_script,
)
from simbloom.reporting import linear_fit
from simbloom.sizing import optimal_k, optimal_m
from simbloom.storage import FilterStore

DATA = Path(__file__).parent / "data"


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    print(f"[{status}] {name}" + (f" ({detail})" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_combinatorics_single_length():
    got = count_combinations(9025, 8, 2, with_repetition=False)
    oracle = math.comb(9025, 4)
    sig3 = float(f"{got:.2e}")
    report(
        "combinatorics: C(9025,4) matches 2.76e14 to 3 significant figures",
        got == oracle and sig3 == 2.76e14,
        f"got {got} = {got:.3e}",
    )


def test_combinatorics_range_bound():
    got = count_combinations_range(9025, 8, 14, 2)
    gap = abs(got - 9.96e23) / 9.96e23
    report(
        "range bound: sum over even lengths 8..14 within 5% of 9.96e23",
        gap < 0.05,
        f"got {got:.3e}, gap {gap:.1%}",
    )


def test_bigram_alphabet_size():
    count = len(enumerate_grams(PRINTABLE_ASCII, 2))
    report("bigram alphabet: printable ASCII yields 9025 bigrams",
           count == 9025, f"got {count}")


def test_no_false_negatives_bulk():
    rng = random.Random(20)
    failures = 0
    trials = 0
    while trials < 10**5:
        family = generate_random_family(
            rng.randrange(1, 6), rng.randrange(1, 16), entropy=rng
        )
        f = BloomFilter(family, rng.randrange(1, 4096))
        items = [
            rng.getrandbits(48).to_bytes(6, "big")
            for _ in range(rng.randrange(1, 400))
        ]
        for item in items:
            f.insert(item)
        for item in items:
            trials += 1
            if not f.check(item):
                failures += 1
    report("no false negatives: 1e5 insert/check trials",
           failures == 0, f"{failures} failures in {trials} trials")


def test_fpp_calibration():
    m = optimal_m(1000, 0.01)
    k = optimal_k(m, 1000)
    # the spec sheet quotes m'=9585, but ceil(9585.058) per the defining
    # formula is 9586; k' is 7 either way (see decisions ledger)
    sizing_ok = m == 9586 and k == 7
    measured, _ = measure_fpp(m, k, 1000, probes=10**5, rng=random.Random(21))
    rate_ok = 0.005 <= measured <= 0.02
    report(
        "fpp calibration: (n=1000, fpp=0.01) sizing and measured rate",
        sizing_ok and rate_ok,
        f"m'={m} k'={k} measured={measured:.4f}",
    )


def test_anagram_attack_recovery():
    family = generate_random_family(2, 10, entropy=random.Random(22))
    f = BloomFilter(family, 2**16, 2)
    qinsert(f, "password!!", 2)
    recovered = recover_grams(f, AttackConfig())
    expected = {"pa", "ss", "wo", "rd", "!!"}
    false_positives = len(recovered - expected)
    candidates, _ = reconstruct(
        f,
        AttackConfig(nu=2, min_len=8, max_len=14,
                     dictionary=("password!!", "hunter2xx")),
        limit=100,
    )
    report(
        "anagram attack: grams recovered with <=20 false positives, "
        "dictionary reconstruct exact",
        expected <= recovered
        and false_positives <= 20
        and candidates == ["password!!"],
        f"{len(recovered)} grams recovered, candidates={candidates}",
    )


def test_distance_script_oracle():
    steps = run_distance_script(kappa=2**16, k=2)
    deltas = {s.arg: s.result for s in steps if s.op == "Distance"}
    oracle = 6 / 7  # set-Dice over the two 7-bigram sets
    ok = (
        abs(deltas["beta1,beta2"] - oracle) <= 0.05
        and abs(deltas["beta1,beta3"] - oracle) <= 0.05
    )
    report(
        "distance script: deltas match the set-Dice oracle within 0.05",
        ok,
        f"d12={deltas['beta1,beta2']:.4f} d13={deltas['beta1,beta3']:.4f} "
        f"oracle={oracle:.4f}",
    )


def test_salt_length_trend():
    # Wall-clock measurement on a shared machine: re-measure a couple of
    # times so a scheduler hiccup cannot fail an otherwise linear trend.
    for _ in range(3):
        rows = bench_salt_length([1, 10, 100, 1000], repetitions=5)
        slope, _, r2 = linear_fit([r[0] for r in rows], [r[1] for r in rows])
        if slope > 0 and r2 >= 0.9:
            break
    report(
        "creation-time trend: positive slope with R^2 >= 0.9 over salt lengths",
        slope > 0 and r2 >= 0.9,
        f"slope={slope:.3g} s/octet, R^2={r2:.3f}",
    )


def test_corpus_shape():
    from simbloom.sizing import SizingParams

    rng = random.Random(23)
    params = SizingParams(m=2**16, k=2, n=16, fpp=0.5)
    bases = default_bases(110, rng)
    specs = [MutationSpec(kind) for kind in MUTATION_KINDS]
    records, summary = evaluate_corpus(
        bases, specs, params, threshold=0.6, rng=rng
    )
    ok = (
        len(records) >= 500
        and summary.spearman <= -0.5
        and summary.precision >= 0.9
        and summary.recall >= 0.8
    )
    report(
        "corpus shape: Spearman <= -0.5, precision >= 0.9, recall >= 0.8 "
        "at threshold 0.6",
        ok,
        f"pairs={len(records)} spearman={summary.spearman:.3f} "
        f"precision={summary.precision:.3f} recall={summary.recall:.3f}",
    )


def test_persistence_round_trip_and_golden():
    rng = random.Random(24)
    ok = True
    for _ in range(1000):
        family = generate_random_family(
            rng.randrange(1, 5), rng.randrange(1, 20), entropy=rng
        )
        f = BloomFilter(family, rng.randrange(1, 500), rng.randrange(0, 5))
        for _ in range(rng.randrange(0, 30)):
            f.insert(rng.getrandbits(32).to_bytes(4, "big"))
        g = parse(serialize(f))
        ok = ok and g.same_content(f) and serialize(g) == serialize(f)
    golden = parse((DATA / "golden.sbf").read_bytes())
    golden_ok = (
        all(golden.check(g) for g in (b"pa", b"ss", b"wo", b"rd", b"12", b"34"))
        and not golden.check(b"zz")
        and golden.true_bit_count() == 12
    )
    sibling = BloomFilter(golden.family, golden.kappa, 2)
    qinsert(sibling, "password123!", 2)
    golden_ok = golden_ok and abs(distance(golden, sibling).delta - 10 / 12) < 1e-12
    report(
        "persistence: 1000 round-trips plus golden-file checks",
        ok and golden_ok,
    )


def test_keyed_family_reproducible_across_processes(tmp_path):
    key = "000102030405060708090a0b0c0d0e0f"
    script = (
        "import sys\n"
        "from simbloom import BloomFilter, generate_keyed_family, qinsert, serialize\n"
        "import os\n"
        "key = bytes.fromhex(os.environ['SIMBLOOM_KEY'])\n"
        "f = BloomFilter(generate_keyed_family(key, 2), 2**16, 2)\n"
        "qinsert(f, 'P4ssword123!', 2)\n"
        "sys.stdout.buffer.write(serialize(f))\n"
    )
    outputs = []
    for _ in range(2):
        proc = subprocess.run(
            [sys.executable, "-c", script],
            capture_output=True,
            env={"SIMBLOOM_KEY": key, "PATH": "/usr/bin:/bin"},
            check=True,
        )
        outputs.append(proc.stdout)
    identical = outputs[0] == outputs[1]
    from simbloom import generate_keyed_family

    f1 = BloomFilter(generate_keyed_family(bytes.fromhex(key), 2), 2**16, 2)
    other_key = bytes.fromhex("ff" * 16)
    f2 = BloomFilter(generate_keyed_family(other_key, 2), 2**16, 2)
    try:
        distance(f1, f2)
        flagged = False
    except IncompatibleFiltersError:
        flagged = True
    report(
        "keyed family: byte-identical across processes, differing keys "
        "incomparable",
        identical and flagged,
    )
