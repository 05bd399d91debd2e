"""Regenerate corpus/*.poly, corpus/*.nef and the golden reports."""

from __future__ import annotations

import io as _io
import json
from pathlib import Path

from gorenstein import catalog as cat
from gorenstein.cli import io
from gorenstein.cli.main import run

ROOT = Path(__file__).resolve().parent.parent / "corpus"
GOLDEN_COMMANDS = ("info", "stringy", "joins", "verify")
NEF_COMMANDS = ("nef-build", "nef-irreducible", "nef-split")


def _raw(rows):
    return [[x if isinstance(x, (int, str)) else int(x) for x in r] for r in rows]


def polytope_files() -> dict[str, dict]:
    out = {
        "segment_length2": {"ambient_dim": 1, "vertices": [[0], [2]]},
        "reflexive_square": {"ambient_dim": 2, "vertices": [[-1, -1], [-1, 1], [1, -1], [1, 1]]},
        "cayley_segments_index2": {
            "ambient_dim": 3, "vertices": _raw(cat._cayley_raw(cat.SEG_F, cat.SEG_G))},
        "cayley_segments_nongorenstein": {
            "ambient_dim": 3,
            "vertices": _raw(cat._cayley_raw(cat.SEG_F, [(0, 0), (-1, 3)]))},
        "cayley_segment_parallelogram": {
            "ambient_dim": 4, "vertices": _raw(cat._cayley_raw(cat.PAR_F, cat.PAR_G))},
        "parallelogram": {"ambient_dim": 3, "vertices": _raw(cat.PAR_G)},
        "diamond_pair_halflattice": {
            "ambient_dim": 5, "lattice_generators": cat.half_lattice(5, {0, 1, 2, 3}),
            "vertices": _raw(cat._cayley_raw(cat.DIAMOND_F, cat.DIAMOND_G))},
        "cayley_tetra_pair_7d": {
            "ambient_dim": 7, "lattice_generators": cat.half_lattice(7, {2, 5}),
            "vertices": _raw([tuple(v) + (1,) for v in cat.TETRA_A]
                             + [tuple(v) + (0,) for v in cat.TETRA_B])},
    }
    for name, obj in out.items():
        obj["name"] = name
    return out


def nef_files() -> dict[str, dict]:
    out = {}
    for name, N in cat.corpus_nef_partitions().items():
        host = io.from_polytope(N.host)
        parts = [io.from_polytope(p).vertices for p in N.parts]
        nf = io.NefFile(io.PolytopeFile(host.ambient_dim, host.vertices,
                                        host.lattice_generators, name),
                        tuple(parts), name)
        out[name] = json.loads(io.serialize_nef_file(nf))
    return out


def main() -> None:
    ROOT.mkdir(exist_ok=True)
    golden = ROOT / "golden"
    golden.mkdir(exist_ok=True)
    for name, obj in polytope_files().items():
        path = ROOT / f"{name}.poly"
        path.write_text(json.dumps(obj, indent=1) + "\n")
    for name, obj in nef_files().items():
        (ROOT / f"{name}.nef").write_text(json.dumps(obj, indent=1, sort_keys=True) + "\n")
    for path in sorted(ROOT.glob("*.poly")):
        for cmd in GOLDEN_COMMANDS:
            buf = _io.StringIO()
            run([cmd, str(path.relative_to(ROOT.parent))], out=buf)
            (golden / f"{path.stem}.{cmd}.jsonl").write_text(buf.getvalue())
    for path in sorted(ROOT.glob("*.nef")):
        for cmd in NEF_COMMANDS:
            buf = _io.StringIO()
            run([cmd, str(path.relative_to(ROOT.parent))], out=buf)
            (golden / f"{path.stem}.{cmd}.jsonl").write_text(buf.getvalue())


if __name__ == "__main__":
    main()
