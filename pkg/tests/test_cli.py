import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from conftest import TREFOIL
from helpers import add_kink
from knotlevel.cli import main
from knotlevel.diagram import parse_pd, serialize_pd

GOLDEN = Path(__file__).parent / "golden"


def run(monkeypatch, capsys, argv, stdin=""):
    monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(argv)
    out = capsys.readouterr().out
    return code, [json.loads(line) for line in out.splitlines()]


def test_trefoil_golden_record(monkeypatch, capsys):
    code, recs = run(monkeypatch, capsys, ["verify"], TREFOIL + "\n")
    assert code == 0
    assert recs == [json.loads((GOLDEN / "trefoil.json").read_text())]


def test_corpus_timings_present(monkeypatch, capsys, tmp_path):
    f = tmp_path / "in.pd"
    f.write_text(TREFOIL + "\n")
    code, recs = run(monkeypatch, capsys, ["corpus", "--in", str(f)])
    assert code == 0
    assert set(recs[0]["timings_ms"]) == {"level", "rectilinear", "braid", "arc", "delta"}


def test_empty_input(monkeypatch, capsys):
    assert run(monkeypatch, capsys, ["verify"], "\n# only a comment\n") == (0, [])


def test_single_step_commands(monkeypatch, capsys):
    code, [rec] = run(monkeypatch, capsys, ["braid"], TREFOIL)
    assert code == 0 and rec["strings"] == 2 and rec["text"] == "braid s=2 word=1,1,1"
    code, [rec] = run(monkeypatch, capsys, ["arc"], TREFOIL)
    assert code == 0 and len(rec["arcs"]) == 5
    assert sorted(rec["grid"]["x"]) == [1, 2, 3, 4, 5]
    code, [rec] = run(monkeypatch, capsys, ["delta"], TREFOIL)
    assert code == 0 and rec["crossings"] == 11 and rec["bound"] == 11
    code, [rec] = run(monkeypatch, capsys, ["level"], TREFOIL)
    assert code == 0 and rec["widths"] == [0, 4, 4, 0]


def test_json_input_line(monkeypatch, capsys):
    d = parse_pd(TREFOIL, name="3_1")
    code, [rec] = run(monkeypatch, capsys, ["validate"], json.dumps(d.to_json()))
    assert code == 0 and rec["eligible"] and rec["name"] == "3_1"


def test_kinked_diagram_fails(monkeypatch, capsys):
    kinked = serialize_pd(add_kink(parse_pd(TREFOIL)))
    code, [rec] = run(monkeypatch, capsys, ["verify"], kinked)
    assert code == 1
    assert not rec["ok"] and "eligible" in rec["error"]
    # validate reports eligibility without failing
    code, [rec] = run(monkeypatch, capsys, ["validate"], kinked)
    assert code == 0 and not rec["eligible"]
    code, [rec] = run(monkeypatch, capsys, ["verify", "--reduce"], kinked)
    assert code == 0 and rec["reduced_n"] == 3 and rec["source_f_poly_kept"]


def test_bad_line_and_strict(monkeypatch, capsys):
    text = "X[1,2,3]\n" + TREFOIL + "\n"
    code, recs = run(monkeypatch, capsys, ["verify"], text)
    assert code == 1 and len(recs) == 2
    assert recs[0]["line"] == 1 and not recs[0]["ok"] and recs[1]["ok"]
    code, recs = run(monkeypatch, capsys, ["verify", "--strict"], text)
    assert code == 1 and len(recs) == 1


def test_svg_output(monkeypatch, capsys, tmp_path):
    code, _ = run(monkeypatch, capsys, ["verify", "--svg", str(tmp_path)], TREFOIL)
    assert code == 0
    names = sorted(p.name for p in tmp_path.iterdir())
    assert names == ["diagram-arc.svg", "diagram-delta.svg", "diagram-leveling.svg", "diagram-rect.svg"]


def test_usage_errors(monkeypatch, capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert main(["verify", "--in", "/nonexistent/file.pd"]) == 2


def test_module_entry_runs_shipped_corpus():
    proc = subprocess.run([sys.executable, "-m", "knotlevel", "corpus"], capture_output=True, text=True,
                          timeout=120)
    assert proc.returncode == 0, proc.stdout[-2000:]
    recs = [json.loads(line) for line in proc.stdout.splitlines()]
    assert len(recs) >= 84 and all(r["ok"] for r in recs)
