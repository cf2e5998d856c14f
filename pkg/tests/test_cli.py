import json

import pytest

from softhybrid.cli import fmt_count, fmt_measure, run
from softhybrid.dataset import parse_workspace
from softhybrid.measures import entropy, similarity


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_card_example(capsys):
    code, out, _ = call(capsys, "card", "-d", "paper.json", "--set", "F_A_s")
    assert code == 0
    assert "(3, 5)" in out


def test_rank_example(capsys):
    code, out, _ = call(capsys, "rank", "-d", "depth.json", "--sets", "F_A,G_B,H_C,K_D")
    assert code == 0
    assert "ranking: G_B(9.85), F_A(9.90), K_D(10.10), H_C(10.25)" in out


def test_entropy_example(capsys, paper):
    code, out, _ = call(capsys, "entropy", "-d", "paper.json", "--set", "G_B_fpfs", "--domain", "support")
    assert code == 0 and "(0.50, 0.48)" in out
    code, out, _ = call(capsys, "entropy", "-d", "paper.json", "--set", "G_B_fpfs", "--format", "json")
    rec = json.loads(out)["results"][0]
    assert rec["raw"] == list(entropy(paper["G_B_fpfs"]))
    assert rec["raw"][1] == pytest.approx(1.3 / 2.7, abs=1e-12)
    assert rec["display"] == ["0.50", "0.48"]


def test_json_values_equal_library(capsys, paper):
    _, out, _ = call(capsys, "sim", "-d", "paper.json", "--sets", "F_A_fs,G_B_fs", "--format", "json")
    assert json.loads(out)["results"][0]["raw"] == list(similarity(paper["F_A_fs"], paper["G_B_fs"]))


def test_sub_and_set_flag_repeat(capsys):
    code, out, _ = call(capsys, "sub", "-d", "paper.json", "--set", "F_A_fps", "--set", "G_B_fps")
    assert code == 0 and "(0.44, 0.30)" in out


def test_depth(capsys):
    _, out, _ = call(capsys, "depth", "-d", "depth.json", "--set", "F_A")
    assert "(3.3, 16.5)  norm 9.90" in out


def test_validate(capsys, tmp_path):
    code, out, _ = call(capsys, "validate", "-d", "paper.json")
    assert code == 0 and "8 set(s)" in out
    bad = tmp_path / "bad.json"
    bad.write_text('{"universe": ["x1"], "parameters": ["e1"], "sets": [{"name": "S", "params": {"e1": 2}, "values": {}}]}')
    code, _, err = call(capsys, "validate", "-d", str(bad))
    assert code == 2 and "GradeOutOfRange" in err


def test_missing_file_and_unknown_set(capsys, tmp_path):
    assert call(capsys, "card", "-d", str(tmp_path / "none.json"))[0] == 2
    code, _, err = call(capsys, "card", "-d", "paper.json", "--set", "nope")
    assert code == 2 and "nope" in err


def test_usage_errors(capsys):
    code, _, err = call(capsys, "sim", "-d", "paper.json", "--set", "F_A_s")
    assert code == 2 and "--set" in err
    code, _, err = call(capsys, "entropy", "-d", "paper.json", "--domain", "everywhere")
    assert code == 2 and "--domain" in err
    assert call(capsys, "frobnicate")[0] == 2


def test_algebra_emits_workspace(capsys, paper, tmp_path):
    code, out, _ = call(capsys, "algebra", "union", "-d", "paper.json", "--sets", "F_A_fs,G_B_fps", "--name", "U")
    assert code == 0
    ws = parse_workspace(out)
    assert list(ws.sets) == ["U"] and ws["U"].variant.value == "fpfs"


def test_algebra_complement_round_trip(capsys, tmp_path):
    _, out, _ = call(capsys, "algebra", "complement", "-d", "paper.json", "--set", "F_A_s")
    path = tmp_path / "c.json"
    path.write_text(out)
    assert call(capsys, "validate", "-d", str(path))[0] == 2
    assert call(capsys, "validate", "-d", str(path), "--no-support-check")[0] == 0


def test_algebra_product_space(capsys):
    _, out, _ = call(capsys, "algebra", "and", "-d", "paper.json", "--sets", "F_A_s,G_B_fps")
    ws = parse_workspace(out)
    assert len(ws.pspace) == 9 and ws.universe.items == ("x1", "x2", "x3", "x4", "x5")


def test_check_all_paper(capsys):
    code, out, _ = call(capsys, "check", "--all", "-d", "paper.json", "--cases", "50")
    assert code == 0
    assert "INFO entropy-ratio-modularity" in out
    assert "FAIL" not in out


def test_check_strict_paper_claims(capsys):
    argv = ["check", "--identity", "entropy-ratio-modularity", "-d", "paper.json", "--cases", "50"]
    assert call(capsys, *argv)[0] == 0
    assert call(capsys, *argv, "--strict")[0] == 0
    assert call(capsys, *argv, "--strict-paper-claims")[0] == 1


def test_check_json_and_unknown(capsys):
    code, out, _ = call(capsys, "check", "--identity", "involution", "--cases", "20", "--format", "json", "--domain", "grid")
    rec = json.loads(out)["results"][0]
    assert code == 0 and rec["verdict"] == "holds" and rec["sweep"]["cases"] == 20
    assert call(capsys, "check", "--identity", "nope")[0] == 2


def test_check_list(capsys):
    code, out, _ = call(capsys, "check", "--list")
    assert code == 0 and "known-false claim" in out


@pytest.mark.parametrize(
    "x, down, half_up",
    [(0.9 / 2.1, "0.42", "0.43"), (2 / 3, "0.66", "0.67"), (0.6000000000000001, "0.60", "0.60"), (0.5999999999999999, "0.60", "0.60"), (1.0, "1.00", "1.00")],
)
def test_fmt_measure(x, down, half_up):
    assert fmt_measure(x) == down
    assert fmt_measure(x, "half-up") == half_up


def test_rounding_flag(capsys):
    _, out, _ = call(capsys, "sim", "-d", "paper.json", "--sets", "F_A_fs,G_B_fs", "--rounding", "half-up")
    assert "(0.67, 0.15)" in out


def test_fmt_count():
    assert fmt_count(3.0) == "3"
    assert fmt_count(1.9) == "1.9"
    assert fmt_count(0.6000000000000001) == "0.6"
