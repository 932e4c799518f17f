import json

import pytest

from bundlesig.cli import main
from bundlesig.relations import data_dir


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.fixture
def pants_doc(tmp_path):
    data = {
        "format_version": "1",
        "genus": 1,
        "curves": {"a": {"homology": [1, 0]}, "b": {"homology": [0, 1]}},
        "mappings": {"T": {"matrix": [[1, 1], [0, 1]]}},
        "words": {"ab": [{"curve": "a"}, {"curve": "b"}], "bad": [{"curve": "a"}]},
        "factorizations": {
            "pants": {
                "kind": "bundle",
                "handles": [],
                "boundary": [[{"curve": "a"}], [{"curve": "b"}], [{"op": "inv", "args": [[{"word": "ab"}]]}]],
            },
            "broken": {"kind": "bundle", "handles": [], "boundary": ["bad"]},
        },
        "relators": ["bad"],
    }
    p = tmp_path / "m.json"
    p.write_text(json.dumps(data))
    return str(p)


def test_tau_command(capsys, pants_doc):
    assert run(capsys, "tau", "--file", pants_doc, "--a", "T", "--b", "T") == (0, "-1\n", "")


def test_eval_word(capsys, pants_doc):
    code, out, _ = run(capsys, "eval-word", "--file", pants_doc, "--word", "a")
    assert code == 0
    assert out.splitlines() == ["[ 1 -1]", "[ 0  1]"]


def test_verify_relation_fails_with_code_2(capsys, pants_doc):
    code, out, _ = run(capsys, "verify-relation", "--file", pants_doc)
    assert code == 2
    assert "NOT trivial" in out


def test_sig_bundle_explain(capsys, pants_doc):
    code, out, _ = run(capsys, "sig-bundle", "--file", pants_doc, "--factorization", "pants", "--explain")
    assert code == 0
    assert out.splitlines()[-1] == "sigma = 0"
    assert "-tau(1, g1)" in out


def test_sig_bundle_identity_failure(capsys, pants_doc):
    code, _, err = run(capsys, "sig-bundle", "--file", pants_doc, "--factorization", "broken")
    assert code == 2
    assert "check failed" in err


def test_malformed_input_exit_1(capsys, tmp_path, pants_doc):
    p = tmp_path / "x.json"
    p.write_text("[]")
    assert run(capsys, "tau", "--file", str(p), "--a", "x", "--b", "y")[0] == 1
    assert run(capsys, "tau", "--file", pants_doc, "--a", "nope", "--b", "T")[0] == 1
    assert run(capsys, "bounds", "--fiber", "2", "--n", "1")[0] == 1
    assert run(capsys, "no-such-command")[0] == 1


def test_sig_lf(capsys):
    path = str(data_dir() / "P31a.json")
    code, out, _ = run(capsys, "sig-lf", "--file", path, "--factorization", "Y1")
    assert code == 0
    assert "sigma(complement) = -1" in out
    assert "sigma = -2" in out
    assert "euler characteristic = 10" in out


def test_subtract_command(capsys):
    d = data_dir()
    code, out, _ = run(
        capsys, "subtract", "--file", str(d / "P36.json"), "--factorization", "Z",
        "--piece", "1", str(d / "P33.json"), "Y3", "glue",
    )
    assert code == 0
    assert "fiber genus 5, base genus 7" in out
    assert "sigma = 2 + 2 = 4" in out
    code, _, err = run(
        capsys, "subtract", "--file", str(d / "P36.json"), "--factorization", "Z",
        "--piece", "1", str(d / "P33.json"), "Y3",
    )
    assert code == 2


def test_cover_and_bounds(capsys):
    assert run(capsys, "cover", "--sigma", "4", "--base", "8", "--degree", "3") == (0, "signature 12, base genus 22\n", "")
    code, out, _ = run(capsys, "bounds", "--fiber", "3", "--n", "1")
    assert out.splitlines() == ["5/2 ≤ b(3,1) ≤ 8", "G_3 ≤ 7"]


def test_reproduce_uses_data_env(capsys, monkeypatch, tmp_path):
    monkeypatch.setenv("BUNDLESIG_DATA", str(tmp_path))
    code, _, err = run(capsys, "reproduce", "thm1.2a")
    assert code == 1
    assert "no data file" in err


def test_reproduce_b(capsys):
    code, out, _ = run(capsys, "reproduce", "thm1.2b")
    assert code == 0
    assert "relator route: -c(R_Z * R_Y3^g) = 4" in out


def test_homology_only_notice(capsys):
    path = str(data_dir() / "P31b.json")
    code, _, err = run(capsys, "sig-lf", "--file", path, "--factorization", "Y2")
    assert code == 0
    assert "Torelli" in err
