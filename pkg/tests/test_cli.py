import json
import subprocess
import sys

import pytest

from mcheck import format_matrix, parse_matrix
from mcheck.cli import run
from mcheck.matrix import ari, cube, edge, maj, mal, perm, simple


@pytest.fixture
def mats(tmp_path):
    files = {
        "mal": mal(), "maj": maj(), "ari": ari(), "perm3": perm(3),
        "edge3": edge(3), "cube3": cube(3), "cube2": cube(2),
        "trivial": simple([[1, 1, 2]]),
    }
    paths = {}
    for name, M in files.items():
        path = tmp_path / f"{name}.mat"
        path.write_text(format_matrix(M))
        paths[name] = str(path)
    return paths


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_implies_edge3_cube3(capsys, mats):
    code, out, _ = call(capsys, "implies", mats["edge3"], mats["cube3"], "--context", "lex")
    assert code == 0 and out.startswith("holds\n")


def test_implies_fails_exit_1(capsys, mats):
    code, out, _ = call(capsys, "implies", mats["cube3"], mats["edge3"])
    assert code == 1 and out.startswith("fails\n")


def test_cube_maj_2_reports_cover(capsys, mats):
    code, out, _ = call(capsys, "cube", mats["maj"], "-n", "2", "--json")
    assert code == 1
    report = json.loads(out)
    assert report["verdict"] == "fails" and report["method"] == "row-cover"
    assert len(report["witness"]["cover"]) == 9
    assert report["witness"]["algebra"]["ops"][0]["table"] == [0, 0, 0, 1, 0, 1, 1, 1]
    assert report["counters"]["comparisons"] <= report["counters"]["bound"]


def test_cube_mal_text_output(capsys, mats):
    code, out, _ = call(capsys, "cube", mats["mal"], "-n", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "holds"
    assert lines[-1].startswith("witness: ")
    assert json.loads(lines[-1][len("witness: "):])["rows"] == [1, 2]


def test_cube_general_defaults_to_reg(capsys, mats):
    code, out, _ = call(capsys, "cube", mats["perm3"], "-n", "2", "--json")
    report = json.loads(out)
    assert code == 1 and report["context"] == "reg"
    assert report["method"] == "two-element-algebra"
    assert [op["symbol"] for op in report["witness"]["algebra"]["ops"]] == ["p1", "p2", "q1"]


def test_cube_general_lex_is_usage_error(capsys, mats):
    code, _, err = call(capsys, "cube", mats["perm3"], "-n", "2", "--context", "lex")
    assert code == 2 and "simple" in err


def test_cube_node_cap_undecided(capsys, mats):
    code, out, _ = call(capsys, "cube", mats["perm3"], "-n", "2", "--node-cap", "1")
    assert code == 3 and out.startswith("undecided at cap")


def test_cube_n_too_small(capsys, mats):
    assert call(capsys, "cube", mats["mal"], "-n", "1")[0] == 2


def test_trivial(capsys, mats):
    assert call(capsys, "trivial", mats["mal"])[0] == 0
    code, out, _ = call(capsys, "trivial", mats["trivial"], "--json")
    assert code == 1 and json.loads(out)["verdict"] == "trivial"


def test_implies_reg_reroutes_to_cube_test(capsys, mats):
    code, out, _ = call(capsys, "implies", mats["maj"], mats["cube3"], "--context", "reg", "--json")
    report = json.loads(out)
    assert code == 0 and report["verb"] == "cube" and report["n_prime"] == 3


def test_implies_alg_with_mal_target(capsys, mats):
    code, out, _ = call(capsys, "implies", mats["perm3"], mats["mal"], "--context", "alg", "--json")
    assert code == 1 and json.loads(out)["n_prime"] == 2


def test_implies_reg_rejected_for_other_targets(capsys, mats):
    code, _, err = call(capsys, "implies", mats["mal"], mats["maj"], "--context", "reg")
    assert code == 2 and "no general algorithm" in err


def test_implies_lex_rejects_general(capsys, mats):
    assert call(capsys, "implies", mats["perm3"], mats["mal"])[0] == 2


def test_parse_error_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.mat"
    bad.write_text("x1 x2 | x1\nx1 | x2\n")
    code, out, err = call(capsys, "trivial", str(bad))
    assert code == 2 and out == ""
    assert f"{bad}:2" in err


def test_missing_file_exit_2(capsys, tmp_path):
    assert call(capsys, "trivial", str(tmp_path / "nope.mat"))[0] == 2


def test_usage_errors(capsys):
    assert call(capsys)[0] == 2
    assert call(capsys, "cube")[0] == 2
    assert call(capsys, "family", "perm")[0] == 2
    assert call(capsys, "--help")[0] == 0


@pytest.mark.parametrize(
    "argv,expected",
    [(["mal"], mal()), (["perm", "--r", "3"], perm(3)), (["cube", "--n", "3", "--k", "3"], cube(3, 3)),
     (["edge", "--n", "4"], edge(4)), (["maj"], maj()), (["ari"], ari())],
)
def test_family_round_trip(capsys, tmp_path, argv, expected):
    out_path = tmp_path / "f.mat"
    assert call(capsys, "family", *argv, "-o", str(out_path))[0] == 0
    assert parse_matrix(out_path) == expected
    code, printed, _ = call(capsys, "family", *argv)
    assert code == 0 and printed == out_path.read_text() == format_matrix(expected)
    # re-emitting what was parsed is byte-identical
    again = tmp_path / "g.mat"
    again.write_text(format_matrix(parse_matrix(out_path)))
    assert again.read_bytes() == out_path.read_bytes()


def test_intersect(capsys, mats, tmp_path):
    out_path = tmp_path / "i.mat"
    assert call(capsys, "intersect", mats["mal"], mats["maj"], "-o", str(out_path))[0] == 0
    assert parse_matrix(out_path).params == {"n": 5, "m": 9, "m'": 1, "l": 2, "k": 2}


def test_presentation(capsys, mats):
    code, out, _ = call(capsys, "presentation", mats["perm3"])
    assert code == 0
    assert out.splitlines()[0] == "operations: p1/3, p2/3, q1/2"
    assert "p2(x1,x1,x2) = x2" in out


def test_json_is_deterministic_without_timing(capsys, mats):
    first = call(capsys, "implies", mats["ari"], mats["cube3"], "--json")[1]
    second = call(capsys, "implies", mats["ari"], mats["cube3"], "--json")[1]
    assert first == second and "elapsed_s" not in first
    timed = json.loads(call(capsys, "implies", mats["ari"], mats["cube3"], "--json", "--timing")[1])
    assert timed["elapsed_s"] >= 0


def test_corpus_zero_count(capsys):
    code, out, _ = call(capsys, "corpus", "--seed", "3", "--count", "0")
    assert code == 0 and out.splitlines()[-1] == "summary instances=0 disagreements=0"


def test_corpus_same_seed_same_bytes(capsys):
    a = call(capsys, "corpus", "--seed", "7", "--count", "15")
    b = call(capsys, "corpus", "--seed", "7", "--count", "15")
    assert a == b and a[0] == 0
    assert call(capsys, "corpus", "--seed", "8", "--count", "15")[1] != a[1]


def test_corpus_safety_limit(capsys):
    code, _, err = call(capsys, "corpus", "--seed", "1", "--count", "1", "--nmax", "9")
    assert code == 2 and "--force" in err
    assert call(capsys, "corpus", "--seed", "1", "--count", "-1")[0] == 2


def test_console_script_entry_point(mats):
    proc = subprocess.run(
        [sys.executable, "-m", "mcheck.cli", "cube", mats["ari"], "-n", "2"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.startswith("holds")
