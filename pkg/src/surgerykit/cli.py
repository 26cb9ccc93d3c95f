"""Command-line front end: run surgery programs, check the bundled corpus."""

from __future__ import annotations

import argparse
import os
import sys
from importlib import resources
from pathlib import Path

from .errors import ScriptError
from .program import parse_program, run_program

DEFAULT_MAX_COSETS = 100_000
ENV_MAX_COSETS = "SURGERY_MAX_COSETS"


def _max_cosets(args) -> int:
    if args.max_cosets is not None:
        return args.max_cosets
    env = os.environ.get(ENV_MAX_COSETS)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            print(f"warning: ignoring non-integer {ENV_MAX_COSETS}={env!r}", file=sys.stderr)
    return DEFAULT_MAX_COSETS


def _cmd_run(args) -> int:
    path = Path(args.file)
    try:
        text = path.read_text()
    except OSError as exc:
        print(f"error: cannot read {path}: {exc}", file=sys.stderr)
        return 1
    try:
        program = parse_program(text)
    except ScriptError as exc:
        print(f"{path.name}:{exc}", file=sys.stderr)
        return 1
    report = run_program(
        program,
        script_name=path.name,
        out_root=args.out_root,
        max_cosets=_max_cosets(args),
    )
    payload = report.to_json_bytes()
    if args.out:
        out_path = Path(args.out)
        out_path.parent.mkdir(parents=True, exist_ok=True)
        out_path.write_bytes(payload)
        for idx, entry in report.results.items():
            print(f"[{idx}] {entry['query']} = {entry['value']}")
        for err in report.errors:
            print(f"error at {err['line']}:{err['col']}: {err['message']}", file=sys.stderr)
    else:
        sys.stdout.write(payload.decode())
    return 0 if report.ok else 1


def corpus_scripts() -> list[str]:
    root = resources.files("surgerykit.corpus")
    return sorted(p.name for p in root.iterdir() if p.name.endswith(".srg"))


def _cmd_check(args) -> int:
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    root = resources.files("surgerykit.corpus")
    failures = 0
    for name in corpus_scripts():
        stem = name[: -len(".srg")]
        text = (root / name).read_text()
        program = parse_program(text)
        report = run_program(
            program,
            script_name=name,
            out_root=out_dir / stem,
            max_cosets=_max_cosets(args),
        )
        payload = report.to_json_bytes()
        (out_dir / f"{stem}.report.json").write_bytes(payload)
        expected_res = root / "expected" / f"{stem}.report.json"
        try:
            expected = expected_res.read_bytes()
        except FileNotFoundError:
            expected = None
        if not report.ok:
            failures += 1
            print(f"FAIL {name}: {report.errors[0]['message']}")
        elif expected is not None and payload != expected:
            failures += 1
            print(f"FAIL {name}: report differs from the expected bytes")
        else:
            print(f"PASS {name}")
    return 0 if failures == 0 else 1


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="surgery", description="run surgery programs and inspect the results"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a surgery program")
    run_p.add_argument("file")
    run_p.add_argument("--out", help="write the JSON report here instead of stdout")
    run_p.add_argument("--out-root", default=".", help="directory for emitted mesh files")
    run_p.add_argument("--max-cosets", type=int, default=None, help="default enumeration bound")
    run_p.add_argument("--seed", type=int, default=0, help="reserved for randomized extensions")
    run_p.set_defaults(func=_cmd_run)

    check_p = sub.add_parser("check", help="run the bundled scenario corpus against its reports")
    check_p.add_argument("--out", default="surgery-check", help="output directory")
    check_p.add_argument("--max-cosets", type=int, default=None)
    check_p.add_argument("--seed", type=int, default=0, help="reserved for randomized extensions")
    check_p.set_defaults(func=_cmd_check)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
