"""simbloom command line: store management, similarity checks, audits.

Exit codes: 0 success/accept, 2 similarity warning, 64 usage error,
65 incompatible filter parameters, 74 I/O failure.
"""

from __future__ import annotations

import argparse
import getpass
import json
import os
import random
import sys
from pathlib import Path

from . import __version__
from .attack import PRINTABLE_ASCII, AttackConfig, run_attack
from .bloomfilter import BloomFilter
from .checker import DEFAULT_THRESHOLD, check_candidate
from .errors import (
    IncompatibleFiltersError,
    ParameterError,
    SimbloomError,
    StoreError,
)
from .harness import (
    MutationSpec,
    MUTATION_KINDS,
    bench_salt_length,
    default_bases,
    evaluate_corpus,
)
from .hashing import generate_keyed_family, generate_random_family
from .similarity import distance, qinsert
from .sizing import SizingParams, obfuscating_params, optimal_k, optimal_m
from .storage import FilterStore, parse

EX_OK = 0
EX_WARN = 2
EX_USAGE = 64
EX_DATAERR = 65
EX_IOERR = 74

KEY_ENV = "SIMBLOOM_KEY"


class _UsageExit(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        print(f"{self.prog}: {message}", file=sys.stderr)
        self.print_usage(sys.stderr)
        raise _UsageExit()


def _read_password(prompt: str) -> str:
    if sys.stdin.isatty():
        return getpass.getpass(prompt)
    return sys.stdin.readline().rstrip("\n")


def _open_store(args: argparse.Namespace) -> FilterStore:
    store = FilterStore(args.store)
    if not store.exists():
        raise StoreError(f"no store at {store.root}; run `simbloom init` first")
    return store


def _family_from_config(config: dict):
    from .hashing import HashFamily

    return HashFamily(
        salts=tuple(bytes.fromhex(s) for s in config["salts"]),
        digest=config["digest"],
        origin=config.get("origin", "fixed"),
    )


def cmd_init(args: argparse.Namespace) -> int:
    if args.keyed:
        key_hex = os.environ.get(KEY_ENV)
        if not key_hex:
            print(f"init: --keyed requires the {KEY_ENV} environment variable "
                  "(32 hex digits)", file=sys.stderr)
            return EX_USAGE
        try:
            key = bytes.fromhex(key_hex)
        except ValueError:
            print(f"init: {KEY_ENV} is not valid hex", file=sys.stderr)
            return EX_USAGE
        family = generate_keyed_family(key, args.k)
    else:
        family = generate_random_family(args.k, args.salt_len)
    store = FilterStore(args.store)
    store.initialize(
        {
            "kappa": args.kappa,
            "k": args.k,
            "nu": args.nu,
            "digest": family.digest,
            "origin": family.origin,
            "salts": [s.hex() for s in family.salts],
        }
    )
    print(f"initialized store at {store.root} "
          f"(kappa={args.kappa}, k={args.k}, nu={args.nu}, origin={family.origin})")
    return EX_OK


def cmd_add(args: argparse.Namespace) -> int:
    store = _open_store(args)
    config = store.config()
    password = _read_password(f"password for {args.label!r}: ")
    f = BloomFilter(_family_from_config(config), config["kappa"], config["nu"])
    qinsert(f, password, config["nu"])
    store.add(args.label, f)
    print(f"added filter {args.label!r}")
    return EX_OK


def cmd_check(args: argparse.Namespace) -> int:
    store = _open_store(args)
    candidate = _read_password("candidate password: ")
    decision = check_candidate(store, candidate, args.threshold)
    for label, delta in sorted(decision.deltas.items(), key=lambda kv: -kv[1]):
        print(f"  {label}: {delta:.3f}")
    print(f"max_delta={decision.max_delta:.3f} threshold={decision.threshold} "
          f"verdict={decision.verdict}")
    return EX_WARN if decision.verdict == "warn" else EX_OK


def cmd_distance(args: argparse.Namespace) -> int:
    store = _open_store(args)
    report = distance(store.load(args.label1), store.load(args.label2))
    print(f"gamma={report.gamma} k1={report.k1} k2={report.k2} "
          f"delta={report.delta:.6f}")
    return EX_OK


def cmd_size(args: argparse.Namespace) -> int:
    m = optimal_m(args.n, args.fpp)
    k = optimal_k(m, args.n)
    params = obfuscating_params(args.n, args.fpp)
    print(f"m'={m} k'={k} recomputed_fpp={params.fpp:.6g}")
    return EX_OK


def cmd_attack(args: argparse.Namespace) -> int:
    f = parse(Path(args.filter_file).read_bytes())
    alphabet = PRINTABLE_ASCII if args.alphabet == "ascii" else args.alphabet
    dictionary = None
    if args.dictionary:
        dictionary = tuple(
            w for w in Path(args.dictionary).read_text().splitlines() if w
        )
    config = AttackConfig(
        alphabet=alphabet,
        nu=f.nu or args.nu,
        min_len=args.min_len,
        max_len=args.max_len,
        dictionary=dictionary,
    )
    report = run_attack(f, config, limit=args.limit)
    print(json.dumps(
        {
            "candidate_grams": report.candidate_grams,
            "gram_count": len(report.candidate_grams),
            "combination_count": str(report.combination_count),
            "candidates": report.candidates,
            "candidates_emitted": report.candidates_emitted,
            "truncated": report.truncated,
        },
        indent=2,
    ))
    return EX_OK


def cmd_bench(args: argparse.Namespace) -> int:
    from .reporting import linear_fit, render_bench_figure, write_bench_csv

    rows = bench_salt_length(args.lengths, args.repetitions)
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_bench_csv(rows, out / "bench.csv")
    render_bench_figure(rows, out / "bench.png")
    slope, _, r2 = linear_fit([r[0] for r in rows], [r[1] for r in rows])
    print(f"wrote {out / 'bench.csv'} and {out / 'bench.png'} "
          f"(slope={slope:.3g} s/octet, R²={r2:.3f})")
    return EX_OK


def cmd_eval(args: argparse.Namespace) -> int:
    from .reporting import render_eval_figure, write_eval_csv

    rng = random.Random(args.seed)
    params = SizingParams(m=args.kappa, k=2, n=16, fpp=0.5)
    bases = default_bases(args.pairs // len(MUTATION_KINDS) or 1, rng)
    specs = [MutationSpec(kind) for kind in MUTATION_KINDS]
    records, summary = evaluate_corpus(
        bases, specs, params, threshold=args.threshold, rng=rng
    )
    out = Path(args.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    write_eval_csv(records, out / "eval.csv")
    render_eval_figure(records, summary, out / "eval.png")
    (out / "summary.json").write_text(json.dumps(
        {
            "pairs": len(records),
            "spearman": summary.spearman,
            "threshold": summary.threshold,
            "precision": summary.precision,
            "recall": summary.recall,
        },
        indent=2,
    ) + "\n")
    print(f"wrote {out / 'eval.csv'}, {out / 'eval.png'}, {out / 'summary.json'} "
          f"(spearman={summary.spearman:.3f}, precision={summary.precision:.3f}, "
          f"recall={summary.recall:.3f})")
    return EX_OK


def cmd_serve(args: argparse.Namespace) -> int:
    from .service import serve

    store = _open_store(args)
    serve(store, args.port, args.threshold, args.host)
    return EX_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="simbloom", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_store(p: _Parser) -> None:
        p.add_argument("--store", default="simbloom-store",
                       help="store directory (default: ./simbloom-store)")

    p = sub.add_parser("init", help="create a filter store")
    with_store(p)
    p.add_argument("--kappa", type=int, default=2**16)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--nu", type=int, default=2)
    p.add_argument("--salt-len", type=int, default=10)
    p.add_argument("--keyed", action="store_true",
                   help=f"derive salts from the {KEY_ENV} environment variable")
    p.set_defaults(func=cmd_init)

    p = sub.add_parser("add", help="store a password's filter under a label")
    with_store(p)
    p.add_argument("label")
    p.set_defaults(func=cmd_add)

    p = sub.add_parser("check", help="compare a candidate against the history")
    with_store(p)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("distance", help="similarity between two stored filters")
    with_store(p)
    p.add_argument("label1")
    p.add_argument("label2")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("size", help="optimal filter sizing for a target fpp")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--fpp", type=float, required=True)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("attack", help="anagram-attack audit of a filter file")
    p.add_argument("filter_file")
    p.add_argument("--alphabet", default="ascii",
                   help='"ascii" or an explicit character set')
    p.add_argument("--nu", type=int, default=2)
    p.add_argument("--min-len", type=int, default=8)
    p.add_argument("--max-len", type=int, default=14)
    p.add_argument("--dictionary", help="word list file, one word per line")
    p.add_argument("--limit", type=int, default=100)
    p.set_defaults(func=cmd_attack)

    p = sub.add_parser("bench", help="salt-length creation-time benchmark")
    p.add_argument("--lengths", type=int, nargs="+", default=[1, 10, 100, 1000])
    p.add_argument("--repetitions", type=int, default=5)
    p.add_argument("--out-dir", default="simbloom-report")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("eval", help="similarity vs edit distance over a corpus")
    p.add_argument("--pairs", type=int, default=500)
    p.add_argument("--kappa", type=int, default=2**16)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out-dir", default="simbloom-report")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="run the loopback HTTP service")
    with_store(p)
    p.add_argument("--port", type=int, default=8470)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.set_defaults(func=cmd_serve)

    return parser


def cli_main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageExit:
        return EX_USAGE
    try:
        return args.func(args)
    except (IncompatibleFiltersError, ParameterError) as exc:
        print(f"simbloom: {exc}", file=sys.stderr)
        return EX_DATAERR
    except (OSError, StoreError) as exc:
        print(f"simbloom: {exc}", file=sys.stderr)
        return EX_IOERR
    except SimbloomError as exc:
        print(f"simbloom: {exc}", file=sys.stderr)
        return EX_DATAERR


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
