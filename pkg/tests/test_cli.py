"""Command-line interface: golden outputs, exit codes, configuration."""

from __future__ import annotations

import json
import subprocess

from braidboard.cli import main
from braidboard.cm import cm_check
from braidboard.delta import DeltaComplex, cell_poset, simplicial_delta
from braidboard.graphs import chessboard_complex, chessboard_vertex
from braidboard.morse import HeightFunction


def run(capsys, argv: list[str]) -> tuple[int, str, str]:
    rc = main(argv)
    captured = capsys.readouterr()
    return rc, captured.out, captured.err


def test_chessboard_nu_golden_bytes(capsys):
    rc, out, _ = run(capsys, ["chessboard", "nu", "4", "5"])
    assert rc == 0
    assert out == '{"nu":3,"cm_condition":false}\n'


def test_braid_eq_prints_a_bare_boolean(capsys):
    rc, out, _ = run(capsys, ["braid", "eq", "--strands", "3", "s1 s2 s1", "s2 s1 s2"])
    assert (rc, out) == (0, "true\n")
    rc, out, _ = run(capsys, ["braid", "eq", "--strands", "3", "s1", "s2"])
    assert (rc, out) == (0, "false\n")


def test_braid_nf_golden_bytes(capsys):
    rc, out, _ = run(capsys, ["braid", "nf", "--strands", "3", "s1 s2'"])
    assert rc == 0
    assert out == (
        '{"strands":3,"infimum":-1,"canonical_length":2,'
        '"factors":[[1,3,2],[3,1,2]],"printed":"D^-1 | 1,3,2 | 3,1,2"}\n'
    )


def test_braid_delete_strand(capsys):
    rc, out, _ = run(
        capsys,
        ["braid", "delete-strand", "--strands", "3", "--strand", "2", "s1 s2 s1"],
    )
    assert rc == 0
    assert json.loads(out) == {"strands": 2, "word": "s1"}


def test_forest_homology_pipe_golden_bytes():
    build = subprocess.run(
        ["braidboard", "complex", "build", "--family", "forests", "--ground", "K3"],
        capture_output=True,
        text=True,
        check=True,
    )
    hom = subprocess.run(
        ["braidboard", "complex", "homology", "-"],
        input=build.stdout,
        capture_output=True,
        text=True,
    )
    assert hom.returncode == 0
    assert hom.stdout == (
        '{"dim":1,"f_vector":[3,3],"betti":{"-1":0,"0":0,"1":1},'
        '"torsion":{"-1":[],"0":[],"1":[]}}\n'
    )


def test_homology_csv_golden_bytes(tmp_path, capsys):
    rc, out, _ = run(
        capsys, ["complex", "build", "--family", "forests", "--ground", "K3"]
    )
    assert rc == 0
    path = tmp_path / "forests.json"
    path.write_text(out)
    rc, out, _ = run(capsys, ["--format", "csv", "complex", "homology", str(path)])
    assert rc == 0
    assert out == "degree,betti,torsion\n-1,0,\n0,0,\n1,1,\n"


def test_cm_check_exit_reflects_the_verdict(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(chessboard_complex(2, 2).to_json())
    rc, out, _ = run(capsys, ["complex", "cm-check", str(bad)])
    assert rc == 1
    assert json.loads(out)["verdict"] == "fail"
    good = tmp_path / "good.json"
    good.write_text(chessboard_complex(2, 4).to_json())
    rc, out, _ = run(capsys, ["complex", "cm-check", str(good)])
    assert rc == 0
    assert json.loads(out)["verdict"] == "pass"


def test_skeleton_flag_truncates_the_build(capsys):
    rc, out, _ = run(
        capsys,
        ["complex", "build", "--family", "subgraphs", "--ground", "K3", "--skeleton", "0"],
    )
    assert rc == 0
    assert DeltaComplex.from_json(out).f_vector() == (3,)


def test_invalid_inputs_exit_two(tmp_path, capsys):
    rc, _, err = run(capsys, ["complex", "homology", str(tmp_path / "missing.json")])
    assert rc == 2 and err
    rc, _, err = run(capsys, ["braid", "nf", "--strands", "3", "x9"])
    assert rc == 2 and "x9" in err
    rc, _, err = run(
        capsys, ["braided", "fiber", "--board", "wide", "--tau", "[[1,1]]"]
    )
    assert rc == 2 and "board" in err
    cfg = tmp_path / "bad.toml"
    cfg.write_text("mystery = 3\n")
    rc, _, err = run(capsys, ["--config", str(cfg), "chessboard", "nu", "2", "2"])
    assert rc == 2 and "mystery" in err


def test_budget_exhaustion_exits_three(capsys):
    rc, _, err = run(
        capsys,
        ["--budget", "2", "braided", "fiber", "--board", "2x2",
         "--tau", "[[1,1],[2,2]]", "--L", "2"],
    )
    assert rc == 3 and "budget" in err


def test_truncation_bound_precedence(tmp_path, capsys):
    cfg = tmp_path / "cfg.toml"
    cfg.write_text("L = 0\n")
    fiber = ["braided", "fiber", "--board", "2x2", "--tau", "[[1,2],[2,1]]"]
    rc, out, _ = run(capsys, ["--config", str(cfg)] + fiber)
    assert rc == 0 and json.loads(out)["L"] == 0
    rc, out, _ = run(capsys, ["--config", str(cfg), "--L", "1"] + fiber)
    assert rc == 0 and json.loads(out)["L"] == 1
    rc, out, _ = run(capsys, ["--config", str(cfg), "--L", "1"] + fiber + ["--L", "3"])
    assert rc == 0 and json.loads(out)["L"] == 3


def test_braided_closure_from_seed_file(tmp_path, capsys):
    seeds = [
        {"m": 2, "n": 2, "S": [1, 2], "T": [1, 2], "beta": "", "frozen": []},
        {"m": 2, "n": 2, "S": [1, 2], "T": [1, 2], "beta": "s1 s1", "frozen": []},
    ]
    path = tmp_path / "seeds.json"
    path.write_text(json.dumps(seeds))
    rc, out, _ = run(capsys, ["braided", "closure", "--seeds", str(path)])
    assert rc == 0
    assert DeltaComplex.from_json(out).f_vector() == (2, 2)


def test_poset_cm_check_passes_on_a_cell_poset(tmp_path, capsys):
    path = tmp_path / "poset.json"
    path.write_text(cell_poset(simplicial_delta([("a", "b")])).to_json())
    rc, out, _ = run(capsys, ["poset", "cm-check", str(path)])
    assert rc == 0
    assert json.loads(out)["verdict"] == "pass"


def test_quillen_cli_reports_fiber_failures(tmp_path, capsys):
    Q = cell_poset(simplicial_delta([("a",), ("b",)]))
    P = Q.induced({"a"})
    doc = {
        "domain": json.loads(P.to_json()),
        "codomain": json.loads(Q.to_json()),
        "map": {"a": "a"},
    }
    path = tmp_path / "map.json"
    path.write_text(json.dumps(doc))
    rc, out, _ = run(capsys, ["quillen", "check", "--map", str(path)])
    assert rc == 1
    assert json.loads(out)["witness"]["kind"] == "fiber"


def test_morse_verify_inconclusive_exits_zero(tmp_path, capsys):
    X = chessboard_complex(2, 3)
    h = HeightFunction.build(
        {chessboard_vertex(i, j): j for i in (1, 2) for j in (1, 2, 3)}
    )
    cpath, hpath = tmp_path / "c.json", tmp_path / "h.json"
    cpath.write_text(X.to_json())
    hpath.write_text(h.to_json())
    args = ["morse", "verify", "--complex", str(cpath), "--heights", str(hpath)]
    rc, out, _ = run(capsys, args + ["--t", "2", "--d", "0"])
    assert rc == 0
    assert json.loads(out)["verdict"] == "inconclusive"
    rc, out, _ = run(capsys, args + ["--t", "2", "--d", "-1"])
    assert rc == 0
    assert json.loads(out)["verdict"] == "pass"


def test_suite_text_lines(capsys):
    rc, out, _ = run(capsys, ["--format", "csv", "suite", "acceptance", "--only", "3"])
    assert rc == 0
    assert out.startswith("criterion 3: pass")


def test_suite_json_report(capsys):
    rc, out, _ = run(capsys, ["suite", "acceptance", "--only", "11"])
    assert rc == 0
    doc = json.loads(out)
    assert doc["passed"] is True
    assert [c["number"] for c in doc["criteria"]] == [11]
    assert doc["criteria"][0]["passed"] is True


def test_cm_check_is_jobs_invariant(tmp_path, capsys):
    path = tmp_path / "c.json"
    path.write_text(chessboard_complex(2, 4).to_json())
    rc, out1, _ = run(capsys, ["complex", "cm-check", str(path)])
    rc2, out2, _ = run(capsys, ["--jobs", "4", "complex", "cm-check", str(path)])
    assert (rc, rc2) == (0, 0) and out1 == out2
    assert cm_check(chessboard_complex(2, 4), jobs=4).passed
