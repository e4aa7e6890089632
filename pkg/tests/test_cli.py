import json
from pathlib import Path

import pytest

from octo.cli import cmd_draw, cmd_table, main

DATA = Path(__file__).parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_sources_identical():
    for fmt in ("text", "csv", "json"):
        outputs = {cmd_table(src, fmt) for src in ("fano", "lattice", "index")}
        assert len(outputs) == 1


def test_table_formats(capsys):
    code, out, _ = run(capsys, "table", "--format", "json")
    assert code == 0
    table = json.loads(out)
    rows = table["table"] if isinstance(table, dict) else table
    labels = ["1"] + [f"e{i}" for i in range(7)]
    # e1 e2 = e4 on the line (1, 2, 4)
    assert rows[labels.index("e1")][labels.index("e2")] == "e4"
    assert rows[labels.index("e2")][labels.index("e1")] == "-e4"
    code, out, _ = run(capsys, "table")
    body = [line.split() for line in out.splitlines()][-8:]
    assert all(body[i][i + 1] == ("1" if i == 0 else "-1") for i in range(8))
    code, out, _ = run(capsys, "table", "--format", "csv", "--source", "index")
    assert len(out.strip().splitlines()) >= 8 and "," in out


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as e:
        main(["table", "--source", "nowhere"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["frobnicate"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify-algebra", "--trials", "0"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["search-orientations", "--threads", "0"])
    assert e.value.code == 2
    with pytest.raises(SystemExit) as e:
        main(["verify-algebra", "--mutate-line", "7"])
    assert e.value.code == 2
    capsys.readouterr()


def test_verify_algebra(capsys):
    code, out, _ = run(capsys, "verify-algebra", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    assert rep["passed"] and {c["name"] for c in rep["checks"]} >= {"alternative", "norm_multiplicative"}
    assert rep["counters"]["alternative_checked"] == 343


def test_verify_algebra_single_trial(capsys):
    code, _, _ = run(capsys, "verify-algebra", "--trials", "1")
    assert code == 0


def test_mutated_line_fails_with_counterexample(capsys):
    code, out, _ = run(capsys, "verify-algebra", "--mutate-line", "0", "--format", "json")
    assert code == 1
    rep = json.loads(out)
    alt = next(c for c in rep["checks"] if c["name"] == "alternative")
    assert not alt["passed"] and alt["detail"]


def test_search_json_schema(capsys):
    code, out, _ = run(capsys, "search-orientations", "--format", "json", "--oracle")
    assert code == 0
    rep = json.loads(out)
    data = rep["data"]
    assert set(data) >= {"total", "survivors", "classes", "paley_mask"}
    assert data["total"] == 2097152
    assert data["classes"] == [{"representative": 85298, "size": 240}]
    assert data["oracle"]["agree"]


def test_enumerate_and_dual(capsys):
    code, out, _ = run(capsys, "enumerate-triangulations", "--format", "json")
    assert code == 0
    rep = json.loads(out)
    tris = rep["data"]["triangulations"]
    assert len(tris) == 120 and all(len(t) == 14 for t in tris)
    assert tris[0] == sorted(tris[0])
    code, out, _ = run(capsys, "dual")
    assert code == 0 and "PASS girth_6" in out


@pytest.mark.parametrize("mirror, golden", [(False, "hexmap.svg"), (True, "hexmap_mirror.svg")])
def test_draw_golden(mirror, golden):
    rep, svg = cmd_draw("-", mirror)
    assert rep.passed
    assert svg == (DATA / golden).read_text(encoding="utf-8")
    assert svg.count('class="cell"') == 7
    assert svg.count('class="circled"') == 7


def test_draw_is_byte_stable(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    assert main(["draw", "-o", str(a)]) == 0
    assert main(["draw", "-o", str(b)]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes() == (DATA / "hexmap.svg").read_bytes()


def test_draw_options(capsys):
    code, out, err = run(capsys, "draw", "-o", "-", "--no-translates", "--edges")
    assert code == 0
    assert 'class="translate"' not in out and 'class="edge"' in out
    assert "PASS seven_cells" in err
    _, mirror, _ = run(capsys, "draw", "-o", "-", "--mirror")
    assert mirror != out and "mirror" in mirror


def test_draw_unwritable(tmp_path, capsys):
    code, _, err = run(capsys, "draw", "-o", str(tmp_path / "missing" / "x.svg"))
    assert code == 1 and "cannot write" in err
