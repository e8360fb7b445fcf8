import json

import pytest

from mgreg.cli import ProblemError, bundled_problem, main, parse_box, parse_problem
from mgreg.degrees import Box
from mgreg.modules import piece_dim


def run_cli(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def s11(tmp_path):
    p = tmp_path / "s11.mgr"
    p.write_text("ring: blocks=[2,2]\n")
    return str(p)


@pytest.fixture
def s12(tmp_path):
    p = tmp_path / "s12.mgr"
    p.write_text("ring: blocks=[2,3]\n")
    return str(p)


def test_minimal_file_is_polynomial_ring():
    prob = parse_problem("ring: blocks=[2,2]\n")
    assert prob.module.relations == ()
    assert piece_dim(prob.module, (1, 1)) == 4


def test_inhomogeneous_relation_error():
    with pytest.raises(ProblemError, match="inhomogeneous") as e:
        parse_problem('ring: blocks=[2,2]\nmodule: relations=["x1*y1 + x1"]\n')
    assert e.value.line == 2


def test_syntax_error_position():
    with pytest.raises(ProblemError) as e:
        parse_problem('ring: blocks=[2,2]\nmodule: relations=["x1*y1 + *x1"]\n')
    assert (e.value.line, e.value.column) == (2, 29)
    with pytest.raises(ProblemError) as e:
        parse_problem("ring: blocks=[2,2\n")
    assert e.value.line == 1


@pytest.mark.parametrize("text", [
    "ring: blocks=[2,2]\ncolour: x=1\n",
    "ring: blocks=[2,2] q=3\n",
    "ring: blocks=[2,2]\nring: blocks=[2,2]\n",
    "module: shifts=[[0,0]]\n",
    'ring: blocks=[2,2]\nmodule: shifts=[[0,0,0]]\n',
    'ring: blocks=[2,2]\nmodule: relations=["z1"]\n',
    'ring: blocks=[2,2]\ntasks: commands=["fly"]\n',
])
def test_rejected_files(text):
    with pytest.raises(ProblemError):
        parse_problem(text)


def test_bundled_example_file():
    prob = parse_problem(bundled_problem("resnotinreg.mgr"))
    assert prob.ring.block_sizes == (2, 2)
    assert len(prob.module.relations) == 2
    assert prob.box == Box((0, 0), (3, 3))
    assert prob.commands == ["betti", "resreg", "grid"]


def test_rank_two_and_continuation_lines():
    prob = parse_problem('ring: blocks=[2,2]  # P1 x P1\n'
                         'module: shifts=[[0,0],[1,0]]\n'
                         '        relations=[["x1", "-1"]]\n')
    assert prob.module.target.rank == 2
    assert piece_dim(prob.module, (1, 0)) == 2


def test_parse_box():
    assert parse_box("-2,2", 2) == Box((-2, -2), (2, 2))
    assert parse_box("-1,0:2,3", 2) == Box((-1, 0), (2, 3))
    assert parse_box("0:1", 3) == Box((0, 0, 0), (1, 1, 1))
    with pytest.raises(ValueError):
        parse_box("1,2,3:4", 2)


def test_resreg_on_bundled_file(tmp_path, capsys):
    p = tmp_path / "f.mgr"
    p.write_text(bundled_problem("resnotinreg.mgr"))
    code, out, _ = run_cli(["resreg", str(p), "--json"], capsys)
    assert code == 0
    rep = json.loads(out)
    assert rep["result"]["res_reg"] == [0, 0]
    assert rep["prime"] == 32003


def test_avector(s12, capsys):
    code, out, _ = run_cli(["avector", s12, "--json"], capsys)
    assert json.loads(out)["result"]["a_star"] == [-2, -3]


def test_grid_text(tmp_path, capsys):
    p = tmp_path / "s.mgr"
    p.write_text("ring: blocks=[2,2]\n")
    code, out, _ = run_cli(["grid", str(p), "--box=-2,2"], capsys)
    assert code == 0
    rows = [l for l in out.splitlines() if l[:4].strip().lstrip("-").isdigit()]
    assert rows[0].split()[1:] == [".", ".", "#", "#", "#"]


def test_coh_reports_t_used(tmp_path, capsys):
    p = tmp_path / "k.mgr"
    p.write_text(bundled_problem("resnotinreg.mgr"))
    code, out, _ = run_cli(["coh", str(p), "--box=0,0:0,0", "--json"], capsys)
    rows = json.loads(out)["result"]["nonzero"]
    assert rows == [{"dim": 1, "i": 1, "ideal": "B", "n": [0, 0], "t_used": rows[0]["t_used"]}]
    assert rows[0]["t_used"] >= 1


def test_exit_codes(tmp_path, capsys):
    bad = tmp_path / "bad.mgr"
    bad.write_text("ring: blocks=[2,2]\nnonsense\n")
    code, _, err = run_cli(["betti", str(bad)], capsys)
    assert code == 1 and "line 2" in err
    s = tmp_path / "s.mgr"
    s.write_text("ring: blocks=[2,2]\n")
    code, _, _ = run_cli(["verify", str(s), "--theorem=global-gen", "--box=0,1"], capsys)
    assert code == 0
    k = tmp_path / "k.mgr"
    k.write_text(bundled_problem("resnotinreg.mgr"))
    code, _, _ = run_cli(["verify", str(k), "--theorem=2regbound", "--box=0,3"], capsys)
    assert code == 1


def test_strict_unverified_exit(s11, capsys):
    # (-1,-1) needs H^2 at (-2,-1), outside the box and every guarantee
    code, out, _ = run_cli(["grid", s11, "--box=-1,-1:-1,-1", "--strict"], capsys)
    assert code == 2 and "?" in out
    code, _, _ = run_cli(["grid", s11, "--box=-1,-1:-1,-1"], capsys)
    assert code == 0


def test_run_task_list_and_out_file(tmp_path, capsys):
    k = tmp_path / "k.mgr"
    k.write_text(bundled_problem("resnotinreg.mgr"))
    out = tmp_path / "report.json"
    code, stdout, _ = run_cli(["run", str(k), "--json", "--out=%s" % out], capsys)
    assert code == 0 and stdout == ""
    reps = json.loads(out.read_text())
    assert [r["command"] for r in reps] == ["betti", "resreg", "grid"]


def test_examples_deterministic(capsys):
    code1, out1, _ = run_cli(["examples"], capsys)
    code2, out2, _ = run_cli(["examples"], capsys)
    assert code1 == code2 == 0
    assert out1 == out2
    assert "FAIL" not in out1
