"""Command-line entry point: ``gorenstein <command> [flags] FILE...``."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from gorenstein.cli import io, report
from gorenstein.errors import InputError, TheoremViolation

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_THEOREM = 2
EXIT_CONJECTURE = 3

POLYTOPE_COMMANDS = {
    "info": report.info_record,
    "hstar": report.hstar_record,
    "dual": report.dual_record,
    "faces": report.faces_record,
    "stringy": report.stringy_record,
    "joins": report.joins_record,
    "irreducible": report.irreducible_record,
}
NEF_COMMANDS = {
    "nef-build": report.nef_build_record,
    "nef-irreducible": report.nef_irreducible_record,
    "nef-split": report.nef_split_record,
}
COMMANDS = [*POLYTOPE_COMMANDS, *NEF_COMMANDS, "verify"]


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(sorted({int(x) for x in text.split(",") if x.strip()}))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad part list {text!r}") from None
    if not parts or any(p not in (2, 3, 4, 5) for p in parts):
        raise argparse.ArgumentTypeError("parts must be drawn from 2,3,4,5")
    return parts


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gorenstein",
                                 description="Invariants of Gorenstein lattice polytopes.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("files", nargs="+", help="polytope files (.poly) or nef files (.nef)")
    ap.add_argument("--format", choices=("json", "text"), default="json")
    ap.add_argument("--parts", type=_parse_parts, default=(2, 3, 4, 5),
                    help="conjecture parts checked by verify, e.g. 2,3,4,5")
    ap.add_argument("--max-dim", type=int, default=None,
                    help="reject polytopes of larger dimension")
    ap.add_argument("--jobs", type=int, default=1, help="worker processes")
    ap.add_argument("--reproducer-dir", default=".",
                    help="where verify writes reproducers for conjecture failures")
    return ap


def _write_reproducer(path: str, P, rec: dict, outdir: str) -> str:
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    stem = Path(path).stem
    target = out / f"{stem}.reproducer.json"
    body = json.loads(io.serialize_polytope_file(io.from_polytope(P)))
    failing = sorted(k for k, ok in rec["conjecture"].items() if not ok)
    payload = {"polytope": body, "failed_parts": failing, "residuals": rec["residuals"],
               "e_st": rec["e_st"], "cy_dim": rec["cy_dim"]}
    target.write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    return str(target)


def process(command: str, path: str, opts: dict) -> tuple[dict, int]:
    """Run one command on one input file; never raises."""
    rec: dict = {"schema_version": report.SCHEMA_VERSION, "command": command, "input": path}
    stage = "parse"
    try:
        if command in NEF_COMMANDS:
            N = io.read_nef(path)
            rec["name"] = N.host.name
            stage = command
            rec.update(NEF_COMMANDS[command](N))
            rec["status"] = "ok"
            return rec, EXIT_OK
        P = io.read_polytope(path)
        rec["name"] = P.name
        max_dim = opts.get("max_dim")
        if max_dim is not None and P.dim > max_dim:
            raise InputError(f"dimension {P.dim} exceeds --max-dim {max_dim}")
        stage = command
        if command == "verify":
            body, ok = report.verify_record(P, opts.get("parts", (2, 3, 4, 5)))
            rec.update(body)
            if not ok:
                rec["status"] = "conjecture_failure"
                rec["reproducer"] = _write_reproducer(path, P, rec, opts.get("reproducer_dir", "."))
                return rec, EXIT_CONJECTURE
        else:
            rec.update(POLYTOPE_COMMANDS[command](P))
        rec["status"] = "ok"
        return rec, EXIT_OK
    except TheoremViolation as exc:
        rec.update(status="theorem_violation", stage=stage, module=exc.module, error=str(exc))
        return rec, EXIT_THEOREM
    except InputError as exc:
        rec.update(status="input_error", stage=stage, error=f"{type(exc).__name__}: {exc}")
        return rec, EXIT_INPUT


def _combine(codes: list[int]) -> int:
    for c in (EXIT_THEOREM, EXIT_CONJECTURE, EXIT_INPUT):
        if c in codes:
            return c
    return EXIT_OK


def run(argv: list[str] | None = None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    opts = {"parts": args.parts, "max_dim": args.max_dim, "reproducer_dir": args.reproducer_dir}
    jobs = max(1, args.jobs)
    n = len(args.files)
    if jobs > 1 and n > 1:
        with ProcessPoolExecutor(max_workers=min(jobs, n)) as pool:
            results = list(pool.map(process, [args.command] * n, args.files, [opts] * n))
    else:
        results = [process(args.command, f, opts) for f in args.files]
    render = report.render_json if args.format == "json" else report.render_text
    for rec, _ in results:
        out.write(render(rec))
        out.write("\n")
    codes = [c for _, c in results]
    if args.command == "verify":
        failed = sum(c != EXIT_OK for c in codes)
        summary = f"verify: {n - failed}/{n} inputs passed"
        print(summary, file=sys.stderr)
    return _combine(codes)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
