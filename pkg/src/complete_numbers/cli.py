"""Command line front end: eval, repl, batch, laws, table."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebra import Mode, Void
from .errors import CompleteNumberError, SyntaxProblem
from .evaluate import evaluate, format_value
from .index import DOWN, UP, index_abs, index_div, index_mul
from .laws import LAW_IDS, PRNG_NAME, TrialConfig, reports_to_json, run_suite, suite_passed
from .syntax import parse_text

EXIT_OK = 0
EXIT_LAWS_FAILED = 1
EXIT_SYNTAX = 2
EXIT_EVAL = 3


def evaluate_line(source: str, mode: Mode) -> dict:
    """Evaluate one expression into the JSON result record (never raises)."""
    record = {"input": source, "status": "ok", "value": None, "error": None}
    try:
        value = evaluate(parse_text(source), mode)
    except CompleteNumberError as exc:
        record["status"] = "error"
        record["error"] = {
            "kind": exc.kind,
            "position": exc.position if isinstance(exc, SyntaxProblem) else None,
            "message": str(exc),
        }
        return record
    if isinstance(value, Void):
        record["status"] = "void"
    record["value"] = format_value(value)
    return record


def _exit_code(record: dict) -> int:
    if record["status"] != "error":
        return EXIT_OK
    return EXIT_SYNTAX if record["error"]["position"] is not None else EXIT_EVAL


def _error_text(record: dict) -> str:
    err = record["error"]
    return f"{err['kind']}: {err['message']}"


def cmd_eval(args) -> int:
    record = evaluate_line(args.expression, Mode(args.mode))
    if args.json:
        print(json.dumps(record))
    elif record["status"] == "error":
        print(_error_text(record), file=sys.stderr)
        pos = record["error"]["position"]
        if pos is not None:
            # Caret under the offending byte; fine for the ASCII inputs it is meant for.
            prefix = args.expression.encode("utf-8")[:pos].decode("utf-8", "replace")
            print(f"  {args.expression}\n  {' ' * len(prefix)}^", file=sys.stderr)
    else:
        print(record["value"])
    return _exit_code(record)


def cmd_repl(args) -> int:
    mode = Mode(args.mode)
    interactive = sys.stdin.isatty()
    while True:
        if interactive:
            print(f"[{mode}] > ", end="", flush=True)
        line = sys.stdin.readline()
        if not line:
            break
        line = line.strip()
        if not line:
            continue
        if line == ":quit":
            break
        if line == ":mode":
            mode = Mode.LENIENT if mode is Mode.STRICT else Mode.STRICT
            print(f"mode: {mode}")
            continue
        record = evaluate_line(line, mode)
        if record["status"] == "error":
            print(_error_text(record))
        else:
            print(record["value"])
    return EXIT_OK


def cmd_batch(args) -> int:
    mode = Mode(args.mode)
    text = Path(args.file).read_text(encoding="utf-8")
    worst = EXIT_OK
    records = []
    # Every input line yields exactly one stdout line so output stays aligned.
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            print()
            continue
        record = evaluate_line(line, mode)
        records.append(record)
        if record["status"] == "error":
            print()
            print(f"line {lineno}: {_error_text(record)}", file=sys.stderr)
            code = _exit_code(record)
            if worst == EXIT_OK or code == EXIT_SYNTAX:
                worst = code
        else:
            print(record["value"])
    return worst


def cmd_laws(args) -> int:
    config = TrialConfig(seed=args.seed, trials=args.trials, magnitude_bound=args.bound, mode=args.mode)
    reports = run_suite(config)
    if args.json or args.out:
        document = reports_to_json(reports)
        if args.out:
            Path(args.out).write_text(document, encoding="utf-8")
        if args.json:
            sys.stdout.write(document)
    if not args.json:
        print(f"prng: {PRNG_NAME}")
        print(f"seed={config.seed} trials={config.trials} bound={config.magnitude_bound} mode={config.mode}")
        for r in reports:
            extra = f" skipped={r.skipped}" if r.skipped else ""
            print(f"{r.law_id:<24} {r.status:<14} trials={r.trials_run}{extra}")
            if r.counterexample:
                print(f"    {r.counterexample}")
    return EXIT_OK if suite_passed(reports) else EXIT_LAWS_FAILED


_MUL_NOTES = {(UP, UP): "property 1", (UP, DOWN): "eqn (2)", (DOWN, UP): "eqn (3)", (DOWN, DOWN): "property 5"}
_DIV_NOTES = {UP: "property 2", DOWN: "property 6"}
_ABS_NOTES = {UP: "property 3", DOWN: "property 7"}


def cmd_table(args) -> int:
    print("multiplication")
    for (a, b), note in _MUL_NOTES.items():
        print(f"  {a.arrow} x {b.arrow} = {index_mul(a, b).arrow}    ({note})")
    print("division")
    for a, note in _DIV_NOTES.items():
        print(f"  {a.arrow} / {a.arrow} = {index_div(a, a).arrow}    ({note})")
    print(f"  {UP.arrow} / {DOWN.arrow}, {DOWN.arrow} / {UP.arrow}: undefined for bare indices")
    print("absolute value")
    for a, note in _ABS_NOTES.items():
        print(f"  |{a.arrow}| = {index_abs(a).arrow}    ({note})")
    print("division by zero")
    print("  up(1) / up(0) = down(1)    (property 4)")
    print("  down(0) / down(1) = up(1)    (property 8)")
    print("  down(z) / down(0) = void")
    print("  up(0) / up(z) = void (strict) | up(0) (lenient)")
    return EXIT_OK


def _seed(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 unsigned bits")
    return value


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _non_negative(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="complete-numbers", description="Exact complete-number calculator.")
    sub = parser.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    p = sub.add_parser("eval", help="evaluate one expression")
    p.add_argument("expression")
    p.add_argument("--mode", choices=modes, default="strict")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("repl", help="interactive read-eval-print loop (:mode, :quit)")
    p.add_argument("--mode", choices=modes, default="strict")
    p.set_defaults(func=cmd_repl)

    p = sub.add_parser("batch", help="evaluate one expression per line of FILE")
    p.add_argument("file")
    p.add_argument("--mode", choices=modes, default="strict")
    p.set_defaults(func=cmd_batch)

    p = sub.add_parser("laws", help=f"run the law suite ({len(LAW_IDS)} laws)")
    p.add_argument("--trials", type=_non_negative, default=10_000)
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--bound", type=_positive, default=10)
    p.add_argument("--mode", choices=modes, default="strict")
    p.add_argument("--json", action="store_true")
    p.add_argument("--out", metavar="FILE")
    p.set_defaults(func=cmd_laws)

    p = sub.add_parser("table", help="print the index tables")
    p.set_defaults(func=cmd_table)
    return parser


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


def main():
    sys.exit(run())
