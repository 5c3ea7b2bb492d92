"""Command-line interface: transform, verify, design, compare.

Exit codes: 0 success, 1 verification failure or empty search, 2 usage or
input error.
"""
from __future__ import annotations

import argparse
import sys
from typing import Sequence

import numpy as np

from .complexity import DataKind, count_dense, count_fast
from .design import fidelity_report, search
from .exceptions import ApproxDFTError, EmptySearchError, ParameterError
from .numeric import QuantizedMatrix
from .signal_io import digest, dump_report, format_signal, parse_signal, write_signal
from .transform import (N, StageMatrix, TransformMethod, apply_dense, apply_exact, apply_fast,
                        build_f32hat, build_stages, verify_factorization)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

TABLE1_DENSE = (0, 1282)
TABLE1_FAST = (0, 144)
TABLE2 = (30, 30, 14, 14, 30, 14, 12, 0)


class UsageError(ApproxDFTError):
    pass


def _load(path) -> tuple[bytes, tuple[np.ndarray, np.ndarray]]:
    try:
        data = open(path, "rb").read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise UsageError(f"{path} is not valid UTF-8") from None
    return data, parse_signal(text)


def cmd_transform(method: TransformMethod, input_path, output_path=None,
                  with_tally: bool = False) -> tuple[int, dict]:
    data, (re, im) = _load(input_path)
    if method is not TransformMethod.EXACT and re.size != N:
        raise UsageError(f"{method.value} transform needs {N} samples, got {re.size}")
    if method is TransformMethod.EXACT:
        y = apply_exact((re, im))
    elif method is TransformMethod.DENSE:
        y = apply_dense(build_f32hat(), (re, im), lanes=True)
    else:
        y = apply_fast((re, im), lanes=True)
    if output_path is not None:
        write_signal(output_path, y)
    if isinstance(y, tuple):
        out = [[a, b] for a, b in zip(*y)]
    else:
        out = [[z.real, z.imag] for z in y]
    report = {"command": "transform", "method": method.value,
              "input_digest": digest(data), "length": int(re.size), "output": out}
    if with_tally and method is not TransformMethod.EXACT:
        kind = DataKind.PURELY_REAL if not np.any(im) else DataKind.COMPLEX
        tally = (count_fast(build_stages(), kind) if method is TransformMethod.FAST
                 else count_dense(build_f32hat(), kind))
        report["tally"] = {"data_kind": kind.value, **tally.as_dict()}
    return EXIT_OK, report


def cmd_verify(f32hat: QuantizedMatrix | None = None,
               stages: Sequence[StageMatrix] | None = None) -> tuple[int, dict]:
    """Run the factorization and operation-count checks.

    ``f32hat`` and ``stages`` default to the built-in fixtures; passing
    modified copies lets tests confirm that corruption is caught.
    """
    f32hat = build_f32hat() if f32hat is None else f32hat
    stages = build_stages() if stages is None else stages
    checks = {}

    fact = verify_factorization(stages, f32hat)
    checks["factorization"] = {"pass": fact.ok}
    if not fact.ok:
        k, c, want, got = fact.mismatch
        checks["factorization"]["first_mismatch"] = {
            "row": k, "col": c, "expected": want, "got": got}

    dense = count_dense(f32hat)
    checks["table1_dense"] = {
        "pass": (dense.real_multiplications, dense.real_additions) == TABLE1_DENSE,
        **dense.as_dict()}

    fast = count_fast(stages)
    checks["table1_fast"] = {
        "pass": (fast.real_multiplications, fast.real_additions) == TABLE1_FAST,
        **fast.as_dict()}
    checks["table2"] = {"pass": fast.per_stage == TABLE2,
                        "per_stage": list(fast.per_stage), "expected": list(TABLE2)}

    failed = [name for name, chk in checks.items() if not chk["pass"]]
    report = {"command": "verify", "checks": checks, "failed": failed, "pass": not failed}
    return (EXIT_FAIL if failed else EXIT_OK), report


def cmd_design(alpha_min: float, alpha_max: float, steps: int) -> tuple[int, dict]:
    try:
        result = search(alpha_min, alpha_max, steps)
    except ParameterError as exc:
        raise UsageError(str(exc)) from None
    except EmptySearchError:
        return EXIT_FAIL, {"command": "design", "alpha_min": alpha_min, "alpha_max": alpha_max,
                           "steps": steps, "error": "no admissible candidate"}
    best = result.best
    report = {
        "command": "design",
        "alpha_min": alpha_min, "alpha_max": alpha_max, "steps": steps,
        "best_alpha": best.alpha,
        "score": best.score,
        "matches_fixture": best.matrix == build_f32hat(),
        "curve": result.summary(),
    }
    return EXIT_OK, report


def cmd_compare(input_path) -> tuple[int, dict]:
    data, (re, im) = _load(input_path)
    if re.size != N:
        raise UsageError(f"compare needs {N} samples, got {re.size}")
    fid = fidelity_report((re, im))
    report = {"command": "compare", "input_digest": digest(data), **fid.as_dict()}
    return EXIT_OK, report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="approxdft", description="32-point multiplierless approximate DFT toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("transform", help="transform a signal file")
    p.add_argument("--method", choices=[m.value for m in TransformMethod], default="fast")
    p.add_argument("--input", required=True)
    p.add_argument("--output", help="spectrum file (default: stdout unless --json)")
    p.add_argument("--tally", action="store_true", help="include operation counts in the report")
    p.add_argument("--json", action="store_true", help="emit the report to stdout")

    p = sub.add_parser("verify", help="check the factorization and operation counts")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("design", help="run the expansion-factor search")
    p.add_argument("--alpha-min", type=float, default=0.8)
    p.add_argument("--alpha-max", type=float, default=1.3)
    p.add_argument("--steps", type=int, default=501)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("compare", help="approximate vs exact spectrum errors")
    p.add_argument("--input", required=True)
    p.add_argument("--json", action="store_true")
    return parser


def _print_summary(report: dict) -> None:
    cmd = report["command"]
    if cmd == "verify":
        for name, chk in report["checks"].items():
            print(f"{name}: {'pass' if chk['pass'] else 'FAIL'}")
    elif cmd == "design":
        if "error" in report:
            return
        print(f"best alpha: {report['best_alpha']:.6g}")
        print(f"score: {report['score']:.12g}")
        print(f"matches fixture: {report['matches_fixture']}")
    elif cmd == "compare":
        print(f"mse: {report['mse']:.12g}")
        print(f"relative error: {report['relative_error']:.12g}")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "transform":
            code, report = cmd_transform(TransformMethod(args.method), args.input, args.output,
                                         args.tally)
            if args.output is None and not args.json:
                sys.stdout.write(format_signal(
                    [complex(a, b) for a, b in report["output"]]))
        elif args.command == "verify":
            code, report = cmd_verify()
        elif args.command == "design":
            code, report = cmd_design(args.alpha_min, args.alpha_max, args.steps)
        else:
            code, report = cmd_compare(args.input)
    except ApproxDFTError as exc:
        print(f"approxdft {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE

    if args.json:
        sys.stdout.write(dump_report(report))
    else:
        _print_summary(report)
    if code == EXIT_FAIL:
        if report["command"] == "verify":
            msg = "failed checks: " + ", ".join(report["failed"])
        else:
            msg = report.get("error", "failed")
        print(f"approxdft {args.command}: {msg}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
