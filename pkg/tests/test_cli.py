import pytest

from simrel.cli import main

from conftest import FIX1_TEXT, FIX2_TEXT, FIX3_TEXT, FIX4_TEXT


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in (("fix1", FIX1_TEXT), ("fix2", FIX2_TEXT),
                       ("fix3", FIX3_TEXT), ("fix4", FIX4_TEXT),
                       ("fix2_nofair", FIX2_TEXT + "fair\n")):
        p = tmp_path / f"{name}.sys"
        p.write_text(text, encoding="utf-8")
        paths[name] = str(p)
    paths["tmp"] = tmp_path
    return paths


def test_compute_algos_agree_bytewise(files, capsys):
    out_a = files["tmp"] / "a.rel"
    out_b = files["tmp"] / "b.rel"
    assert main(["compute", "altsim", files["fix1"], files["fix1"],
                 "--algo", "iterative", "--out", str(out_a)]) == 0
    assert main(["compute", "altsim", files["fix1"], files["fix1"],
                 "--algo", "basic", "--out", str(out_b)]) == 0
    assert out_a.read_bytes() == out_b.read_bytes()
    summary = capsys.readouterr().out.strip().splitlines()[-1]
    assert summary == "pairs=2 left=2 right=2"


def test_compute_fairsim_vacuous(files, capsys):
    assert main(["compute", "fairsim", files["fix2_nofair"], files["fix3"]]) == 0
    out = capsys.readouterr().out
    assert "pairs=1 left=2 right=1" in out
    assert "# pairs=1\n0\t0\n" in out


def test_compute_sim_identity(files, capsys):
    assert main(["compute", "sim", files["fix3"], files["fix3"]]) == 0
    assert "pairs=1 left=1 right=1" in capsys.readouterr().out


def test_check_exit_codes(files, tmp_path, capsys):
    assert main(["check", "sim", files["fix3"], files["fix3"]]) == 0
    assert "related" in capsys.readouterr().out
    assert main(["check", "sim", files["fix2"], files["fix3"]]) == 1
    assert "not-related" in capsys.readouterr().out
    bad = tmp_path / "bad.sys"
    bad.write_text("nonsense\n", encoding="utf-8")
    assert main(["check", "sim", str(bad), files["fix3"]]) == 2


def test_unsupported_algo_kind_combination(files):
    assert main(["compute", "fairsim", files["fix4"], files["fix4"],
                 "--algo", "basic"]) == 2
    assert main(["compute", "altsim", files["fix2"], files["fix2"]]) == 2  # ts file


def test_export_dot(files, capsys):
    out = files["tmp"] / "g.dot"
    assert main(["export-dot", "sim", files["fix3"], files["fix3"],
                 "--out", str(out)]) == 0
    dot = out.read_text(encoding="utf-8")
    boxes = [l for l in dot.splitlines() if "shape=box" in l and "⟨0,0⟩" in l]
    assert len(boxes) == 1
    assert main(["export-dot", "sim", files["fix3"], files["fix3"],
                 "--out", str(out)]) == 0
    assert out.read_text(encoding="utf-8") == dot  # deterministic re-export

    fair_out = files["tmp"] / "fair.dot"
    assert main(["export-dot", "fairaltsim", files["fix1"], files["fix1"],
                 "--out", str(fair_out)]) == 0
    assert "FROWN" in fair_out.read_text(encoding="utf-8")


def test_gen_random_determinism(files, capsys):
    args = ["gen-random", "--states", "4", "--actions1", "2", "--actions2", "2",
            "--obs", "2", "--seed", "99"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert "fair" not in first  # fair_density defaults to 0


def test_gen_random_singleton_agent2(capsys):
    assert main(["gen-random", "--states", "3", "--actions1", "2", "--actions2",
                 "1", "--obs", "2", "--seed", "5"]) == 0
    text = capsys.readouterr().out
    for line in text.splitlines():
        if line.startswith("act2 "):
            assert len(line.split()) == 3  # directive, state, single action


def test_gen_random_fair_density_one(capsys):
    assert main(["gen-random", "--states", "3", "--actions1", "1", "--actions2",
                 "1", "--obs", "1", "--fair-density", "1.0", "--seed", "3"]) == 0
    text = capsys.readouterr().out
    fair_lines = [l for l in text.splitlines() if l.startswith("fair")]
    assert fair_lines == ["fair s0 s1 s2"]


def test_dump_succ(files, capsys):
    assert main(["compute", "altsim", files["fix1"], files["fix1"],
                 "--dump-succ"]) == 0
    out = capsys.readouterr().out
    assert "succ-left:" in out and "0: {1}" in out


def test_bench_smoke(capsys):
    assert main(["bench", "--sizes", "1,3", "--trials", "3", "--seed", "1"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("n\tseed")
    assert len(lines) == 1 + 2 * 3
    assert all(line.endswith("yes") for line in lines[1:])
