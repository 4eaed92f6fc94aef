"""Command-line front end: transform, simulate, verify, tabulate.

Machine-readable output (JSON lines, or CSV for tables) goes to stdout;
human-readable summaries go to stderr.  Exit status: 0 when everything
is consistent, 1 when a check or trial found a violation, 2 on usage
errors.

Randomness comes from Python's Mersenne Twister; each trial uses the
sub-seed ``seed * 1_000_003 + trial`` so reports are reproducible and
independent of scheduling.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import random
import sys
from fractions import Fraction

from . import balls, bounds, code, core, oracle, reconstruct
from .kernels import rho_geq_histogram

TRIAL_SEED_STRIDE = 1_000_003


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _emit(record: dict) -> None:
    print(json.dumps(record, sort_keys=True))


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _read_words(args) -> list[core.Word]:
    words = [core.parse_word(w) for w in args.words]
    if args.input:
        with open(args.input) as fh:
            for lineno, line in enumerate(fh, start=1):
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                try:
                    words.append(core.parse_word(line))
                except ValueError as exc:
                    raise SystemExit(f"{args.input}:{lineno}: {exc}")
    return words


def cmd_transform(args) -> int:
    for x in _read_words(args):
        print(core.format_levels(core.read_vector(x, args.l), args.l))
    return 0


def cmd_enumerate(args) -> int:
    residue = args.a
    if residue is None:
        residue, _ = code.best_residue(args.n, args.l)
        _note(f"using best residue a={residue}")
    params = code.CodeParams(n=args.n, window=args.l, residue=residue)
    for x in code.enumerate_code(params):
        print(core.format_word(x))
    return 0


def _trial_rng(seed: int, trial: int) -> random.Random:
    return random.Random(seed * TRIAL_SEED_STRIDE + trial)


def cmd_roundtrip(args) -> int:
    residue = args.a
    if residue is None:
        residue, _ = code.best_residue(args.n, args.l)
    params = code.CodeParams(n=args.n, window=args.l, residue=residue)
    codewords = code.enumerate_code(params)
    if not codewords:
        raise SystemExit("empty code; choose another residue")
    mode = "iid-deletion" if args.p is not None else "exactly-one-deletion"

    successes = failures = out_of_model = 0
    paths: dict[str, int] = {}
    for trial in range(args.trials):
        rng = _trial_rng(args.seed, trial)
        x = codewords[rng.randrange(len(codewords))]
        rv = code.read_vector(x, args.l)
        if mode == "exactly-one-deletion":
            pos = rng.randrange(len(rv))
            received = rv[:pos] + rv[pos + 1 :]
        else:
            received = tuple(s for s in rv if rng.random() >= args.p)
        if len(received) < len(rv) - 1:
            out_of_model += 1
            continue
        try:
            outcome = code.decode(received, params)
        except (code.DecodeFailure, code.MalformedInputError, ValueError):
            failures += 1
            continue
        if outcome.word == x:
            successes += 1
            paths[outcome.path] = paths.get(outcome.path, 0) + 1
        else:
            failures += 1

    record = {
        "command": "roundtrip",
        "n": args.n,
        "l": args.l,
        "a": residue,
        "mode": mode,
        "p": args.p,
        "trials": args.trials,
        "seed": args.seed,
        "successes": successes,
        "failures": failures,
        "out_of_model": out_of_model,
        "paths": paths,
    }
    _emit(record)
    _note(
        f"roundtrip: {successes}/{args.trials} ok, {failures} failed, "
        f"{out_of_model} out of model"
    )
    if mode == "exactly-one-deletion" and failures:
        return 1
    return 0


def cmd_reconstruct(args) -> int:
    if args.l < 2:
        raise SystemExit("reconstruction requires --l >= 2")
    successes = failures = skipped = 0
    for trial in range(args.trials):
        rng = _trial_rng(args.seed, trial)
        x = tuple(rng.randrange(2) for _ in range(args.n))
        rv = code.read_vector(x, args.l)
        ball = sorted(balls.deletion_ball(rv))
        if len(ball) < 2:
            skipped += 1
            continue
        i, j = rng.sample(range(len(ball)), 2)
        try:
            got = reconstruct.reconstruct_two(ball[i], ball[j], args.l, args.n)
        except (reconstruct.InconsistentReadsError, reconstruct.BothCandidatesValidError):
            failures += 1
            continue
        if got == rv:
            successes += 1
        else:
            failures += 1

    record = {
        "command": "reconstruct",
        "n": args.n,
        "l": args.l,
        "trials": args.trials,
        "seed": args.seed,
        "successes": successes,
        "failures": failures,
        "skipped_singletons": skipped,
    }
    _emit(record)
    _note(
        f"reconstruct: {successes} ok, {failures} failed, {skipped} singleton skips"
    )
    return 1 if failures else 0


def _check_expected_runs(ns: list[int]) -> list[dict]:
    records = []
    for n in ns:
        for a in range(1, n + 1):
            hist = rho_geq_histogram(n, a)
            avg = Fraction(sum(r * int(hist[r]) for r in range(len(hist))), 1 << n)
            want = bounds.expected_runs(n, a)
            records.append(
                {
                    "check": "expected-runs",
                    "n": n,
                    "a": a,
                    "status": "pass" if avg == want else "fail",
                    "average": str(avg),
                    "formula": str(want),
                }
            )
    return records


def _check_tail_bound(ns: list[int], a_values: list[int]) -> list[dict]:
    records = []
    for n in ns:
        for a in a_values:
            if a > n:  # expectation formula needs a <= n
                continue
            count = bounds.tail_count(n, a)
            rhs = (1 << n) * math.exp(-n / 2 ** (2 * a + 1))
            records.append(
                {
                    "check": "tail-bound",
                    "n": n,
                    "a": a,
                    "status": "pass" if count <= rhs + 1e-9 else "fail",
                    "count": count,
                    "bound": rhs,
                }
            )
    return records


def _check_sticky_size(ns: list[int]) -> list[dict]:
    records = []
    for n in ns:
        bad = None
        for x in oracle.all_words(n):
            for r in range(1, n + 1):
                if len(balls.sticky_ball(x, r)) != balls.rho_geq(x, r):
                    bad = {"word": x, "r": r}
                    break
            if bad:
                break
        records.append(
            {
                "check": "sticky-size",
                "n": n,
                "status": "pass" if bad is None else "fail",
                "counterexample": bad,
            }
        )
    return records


def _check_sphere_packing(ns: list[int], ls: list[int], exact_only: bool) -> list[dict]:
    records = []
    for n in ns:
        for l in ls:
            res = oracle.exact_max_sticky_code(n, l)
            if exact_only and not res.exact:
                continue
            ws = bounds.weighted_sum(n, l)
            ok = Fraction(res.packing_size) <= ws if res.exact else True
            records.append(
                {
                    "check": "sphere-packing",
                    "n": n,
                    "l": l,
                    "status": "pass" if ok else "fail",
                    "packing_size": res.packing_size,
                    "free_words": res.free_words,
                    "total_size": res.total_size,
                    "exact": res.exact,
                    "weighted_sum": str(ws),
                }
            )
    return records


def _result_record(check: str, n: int, l: int, res: oracle.CheckResult) -> dict:
    rec = {
        "check": check,
        "n": n,
        "l": l,
        "status": "pass" if res.ok else "fail",
        "checked": res.checked,
    }
    rec.update({k: str(v) for k, v in res.detail.items()})
    if res.counterexample is not None:
        rec["counterexample"] = str(res.counterexample)
    return rec


def cmd_verify(args) -> int:
    ns = _parse_range(args.n)
    ls = _parse_range(args.l) if args.l else [2]
    records: list[dict] = []

    if args.check == "ball-equivalence":
        for n in ns:
            for l in ls:
                records.append(
                    _result_record(args.check, n, l, oracle.verify_ball_equivalence(n, l))
                )
    elif args.check == "intersection":
        for n in ns:
            for l in ls:
                records.append(
                    _result_record(
                        args.check, n, l, oracle.verify_intersection_bound(n, l)
                    )
                )
    elif args.check == "reconstruction":
        for n in ns:
            for l in ls:
                records.append(
                    _result_record(args.check, n, l, oracle.verify_reconstruction(n, l))
                )
    elif args.check == "decoder":
        for n in ns:
            for l in ls:
                if n < l:
                    continue
                records.append(
                    _result_record(args.check, n, l, oracle.verify_decoder(n, l))
                )
    elif args.check == "code-property":
        for n in ns:
            for l in ls:
                if n < l:
                    continue
                for a in range(n + 1):
                    params = code.CodeParams(n=n, window=l, residue=a)
                    res = oracle.verify_code_property(params)
                    rec = _result_record(args.check, n, l, res)
                    rec["a"] = a
                    records.append(rec)
    elif args.check == "validity-image":
        for n in ns:
            for l in ls:
                records.append(
                    _result_record(args.check, n, l, oracle.verify_validity_image(n, l))
                )
    elif args.check == "expected-runs":
        records = _check_expected_runs(ns)
    elif args.check == "tail-bound":
        records = _check_tail_bound(ns, _parse_range(args.l) if args.l else [1, 2, 3])
    elif args.check == "sticky-size":
        records = _check_sticky_size(ns)
    elif args.check == "sphere-packing":
        records = _check_sphere_packing(ns, ls, args.exact_only)
    else:
        raise SystemExit(2)

    failed = 0
    for rec in records:
        _emit(rec)
        if rec["status"] != "pass":
            failed += 1
    _note(f"verify {args.check}: {len(records) - failed}/{len(records)} passed")
    return 1 if failed else 0


def cmd_bounds(args) -> int:
    ns = _parse_range(args.n)
    ls = _parse_range(args.l)
    rows = []
    for n in ns:
        for l in ls:
            row = bounds.bound_report(n, l).to_dict()
            if l <= n <= 16:
                residue, size = code.best_residue(n, l)
                row["best_residue"] = residue
                row["best_size"] = size
                row["best_redundancy_bits"] = n - math.log2(size)
            else:
                row["best_residue"] = None
                row["best_size"] = None
                row["best_redundancy_bits"] = None
            rows.append(row)

    if args.format == "csv":
        writer = csv.DictWriter(sys.stdout, fieldnames=list(rows[0].keys()))
        writer.writeheader()
        for row in rows:
            writer.writerow({k: ("" if v is None else v) for k, v in row.items()})
    else:
        for row in rows:
            _emit(row)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nanoread",
        description="Sliding-window read channel: transform, code, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="window-weight transform of words")
    p.add_argument("words", nargs="*", help="binary words, e.g. 101100")
    p.add_argument("--l", type=int, required=True, help="window length")
    p.add_argument("--input", help="file of words, one per line, # comments")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("enumerate", help="list codewords")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", type=int, default=None, help="residue (default: best)")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("roundtrip", help="encode, corrupt, decode trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None, help="iid deletion probability")
    p.set_defaults(func=cmd_roundtrip)

    p = sub.add_parser("reconstruct", help="two-read reconstruction trials")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("verify", help="run an exhaustive check")
    p.add_argument(
        "check",
        choices=[
            "ball-equivalence",
            "intersection",
            "reconstruction",
            "decoder",
            "code-property",
            "validity-image",
            "expected-runs",
            "tail-bound",
            "sticky-size",
            "sphere-packing",
        ],
    )
    p.add_argument("--n", required=True, help="n or range lo..hi")
    p.add_argument("--l", default=None, help="window or range lo..hi")
    p.add_argument("--exact-only", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="tabulate bound reports")
    p.add_argument("--n", required=True, help="n or range lo..hi")
    p.add_argument("--l", required=True, help="window or range lo..hi")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit:
        raise
    except (ValueError, RuntimeError) as exc:
        _note(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
