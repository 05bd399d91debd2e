import io as _io
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gorenstein import catalog
from gorenstein.cli import io, report
from gorenstein.cli.main import run
from gorenstein.core.iso import lattice_isomorphic
from gorenstein.errors import NonLatticeVertex, ParseError, ValidationError
from gorenstein.stringy import ConjectureReport

ROOT = Path(__file__).resolve().parent.parent
CORPUS = ROOT / "corpus"
GOLDEN = sorted((CORPUS / "golden").glob("*.jsonl"))


def call(argv):
    buf = _io.StringIO()
    code = run(argv, out=buf)
    return code, [json.loads(line) for line in buf.getvalue().splitlines() if line.startswith("{")], buf.getvalue()


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(obj if isinstance(obj, str) else json.dumps(obj))
    return str(p)


# --- file format --------------------------------------------------------------------


def test_round_trip_standard_lattice():
    text = '{"ambient_dim": 2, "vertices": [[0, 0], [2, 0], [0, 2]], "name": "tri"}'
    pf = io.parse_polytope_file(text)
    again = io.parse_polytope_file(io.serialize_polytope_file(pf))
    assert again == pf
    assert io.to_polytope(pf).vertices == ((0, 0), (0, 2), (2, 0))


@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)),
                min_size=1, max_size=6))
def test_round_trip_through_polytope(points):
    from gorenstein.core.polytope import Polytope
    P = Polytope.from_points(points)
    Q = io.to_polytope(io.parse_polytope_file(io.serialize_polytope_file(io.from_polytope(P))))
    assert Q.vertices == P.vertices


def test_round_trip_half_lattice(diamond_pair):
    P = diamond_pair[0]
    text = io.serialize_polytope_file(io.from_polytope(P))
    assert "1/2" in text
    Q = io.to_polytope(io.parse_polytope_file(text))
    assert lattice_isomorphic(P, Q)[0]


def test_rational_literals():
    pf = io.parse_polytope_file('{"ambient_dim": 1, "vertices": [["3/2"], [0]],'
                                ' "lattice_generators": [["1/2"]]}')
    assert pf.vertices[0] == (Fraction(3, 2),)
    assert io.to_polytope(pf).dim == 1


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        io.parse_polytope_file('{\n  "ambient_dim": 2,\n  "vertices": [[0, 0],, [1, 0]]\n}')
    assert exc.value.line == 3 and exc.value.column is not None


@pytest.mark.parametrize("text", [
    '[]',
    '{"vertices": [[0]]}',
    '{"ambient_dim": 2, "vertices": [[0]]}',
    '{"ambient_dim": 1, "vertices": [[true]]}',
    '{"ambient_dim": 1, "vertices": [["x"]]}',
    '{"ambient_dim": 1, "vertices": [[0]], "colour": 1}',
])
def test_validation_errors(text):
    with pytest.raises(ValidationError):
        io.parse_polytope_file(text)


def test_non_lattice_vertex():
    pf = io.parse_polytope_file('{"ambient_dim": 2, "vertices": [["1/3", 0], [0, 0]]}')
    with pytest.raises(NonLatticeVertex):
        io.to_polytope(pf)


def test_nef_file_with_host_reference():
    N = io.read_nef(CORPUS / "square_segments.nef")
    assert N.r == 2 and N.host.vertices == catalog.reflexive_square().vertices


# --- command behaviour ----------------------------------------------------------------


@pytest.mark.parametrize("path", GOLDEN, ids=lambda p: p.name)
def test_golden_reports(path, monkeypatch):
    monkeypatch.chdir(ROOT)
    stem, cmd = path.name.split(".")[:2]
    ext = ".nef" if cmd.startswith("nef") else ".poly"
    buf = _io.StringIO()
    code = run([cmd, f"corpus/{stem}{ext}"], out=buf)
    expected = path.read_text()
    statuses = {json.loads(line)["status"] for line in expected.splitlines()}
    assert code == (0 if statuses == {"ok"} else 1)
    assert buf.getvalue() == expected


def test_missing_file_is_input_error(tmp_path):
    code, recs, _ = call(["info", str(tmp_path / "nope.poly")])
    assert code == 1 and recs[0]["status"] == "input_error" and recs[0]["stage"] == "parse"


def test_parse_error_reported(tmp_path):
    p = write(tmp_path, "bad.poly", '{"ambient_dim": 1,\n "vertices": [[0],]}')
    code, recs, _ = call(["hstar", p])
    assert code == 1 and "ParseError" in recs[0]["error"] and "line 2" in recs[0]["error"]


def test_non_gorenstein_dual_is_input_error():
    code, recs, _ = call(["dual", str(CORPUS / "parallelogram.poly")])
    assert code == 1 and "NotGorenstein" in recs[0]["error"]


def test_max_dim_guard():
    code, recs, _ = call(["info", "--max-dim", "2", str(CORPUS / "cayley_segments_index2.poly")])
    assert code == 1 and "max-dim" in recs[0]["error"]
    code, _, _ = call(["info", "--max-dim", "3", str(CORPUS / "cayley_segments_index2.poly")])
    assert code == 0


def test_bad_parts_flag():
    with pytest.raises(SystemExit) as exc:
        run(["verify", "--parts", "1,2", str(CORPUS / "reflexive_square.poly")])
    assert exc.value.code == 2


def test_verify_parts_subset():
    code, recs, _ = call(["verify", "--parts", "2,4", str(CORPUS / "reflexive_square.poly")])
    assert code == 0 and set(recs[0]["conjecture"]) == {"2", "4"}


def test_verify_non_gorenstein_has_no_conjecture():
    code, recs, _ = call(["verify", str(CORPUS / "parallelogram.poly")])
    assert code == 0 and recs[0]["conjecture"] is None


def test_text_format():
    code, _, text = call(["hstar", "--format", "text", str(CORPUS / "segment_length2.poly")])
    assert code == 0
    rows = dict(line.split(None, 1) for line in text.strip().splitlines())
    assert rows["hstar"] == "[1, 1]" and rows["hstar_text"] == "1 + t"


def test_mixed_inputs_keep_order_and_worst_code(tmp_path):
    bad = write(tmp_path, "bad.poly", "{")
    files = [str(CORPUS / "reflexive_square.poly"), bad, str(CORPUS / "segment_length2.poly")]
    code, recs, _ = call(["info", *files])
    assert code == 1
    assert [r["input"] for r in recs] == files
    assert [r["status"] for r in recs] == ["ok", "input_error", "ok"]


def test_parallel_jobs_match_serial():
    files = [str(p) for p in sorted(CORPUS.glob("*.poly")) if "7d" not in p.name]
    _, _, serial = call(["info", *files])
    _, _, parallel = call(["info", "--jobs", "3", *files])
    assert serial == parallel


def test_output_is_deterministic():
    f = str(CORPUS / "diamond_pair_halflattice.poly")
    assert call(["stringy", f])[2] == call(["stringy", f])[2]


def test_conjecture_failure_exit_code_and_reproducer(tmp_path, monkeypatch):
    def failing(pair, rep=None, parts=(2, 3, 4, 5)):
        return ConjectureReport({k: k != 4 for k in parts},
                                {k: (Fraction(1, 2) if k == 4 else 0) for k in parts})
    monkeypatch.setattr(report, "conjecture_report", failing)
    out = tmp_path / "repro"
    code, recs, _ = call(["verify", "--reproducer-dir", str(out),
                          str(CORPUS / "reflexive_square.poly")])
    assert code == 3 and recs[0]["status"] == "conjecture_failure"
    repro = json.loads((out / "reflexive_square.reproducer.json").read_text())
    assert repro["failed_parts"] == ["4"] and repro["residuals"]["4"] == "1/2"
    P = io.to_polytope(io.parse_polytope_file(json.dumps(repro["polytope"])))
    assert P.vertices == catalog.reflexive_square().vertices


def test_theorem_violation_exit_code(monkeypatch):
    monkeypatch.setattr(report, "hstar_decomposition_check", lambda P: False)
    code, recs, _ = call(["verify", str(CORPUS / "reflexive_square.poly")])
    assert code == 2 and recs[0]["status"] == "theorem_violation"
    assert recs[0]["module"] == "stringy"


def test_theorem_violation_outranks_conjecture_failure(tmp_path, monkeypatch):
    real = report.hstar_decomposition_check
    monkeypatch.setattr(report, "hstar_decomposition_check",
                        lambda P: P.dim != 1 and real(P))
    monkeypatch.setattr(report, "conjecture_report",
                        lambda pair, rep=None, parts=(2,): ConjectureReport({2: False}, {2: 1}))
    code, _, _ = call(["verify", "--reproducer-dir", str(tmp_path),
                       str(CORPUS / "reflexive_square.poly"), str(CORPUS / "segment_length2.poly")])
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gorenstein", "irreducible",
                           str(CORPUS / "reflexive_square.poly")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["irreducible"] is True
