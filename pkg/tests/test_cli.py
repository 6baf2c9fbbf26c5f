import json

import pytest

from hypermat import Hyperfield, hmatroid_from_circuits, hvector
from hypermat.cli import run
from hypermat.jsonio import dumps, hmatroid_to_json

G3 = ("1", "2", "3")


@pytest.fixture
def u23_sign_file(tmp_path, u23_sign):
    path = tmp_path / "u23-sign.json"
    path.write_text(dumps(hmatroid_to_json(u23_sign)))
    return str(path)


@pytest.fixture
def trop_u23_file(tmp_path, trop_u23):
    path = tmp_path / "trop-u23.json"
    path.write_text(dumps(hmatroid_to_json(trop_u23)))
    return str(path)


def run_json(capsys, argv):
    code = run(argv)
    out = capsys.readouterr().out
    return code, json.loads(out)


def test_check_hyperfield_sign(tmp_path, capsys):
    path = tmp_path / "sign.json"
    path.write_text('{"kind": "sign"}\n')
    code, doc = run_json(capsys, ["check-hyperfield", str(path)])
    assert code == 0
    assert doc["checks"][0]["status"] == "pass"
    assert doc["result"]["stringent"] is True


def test_quotient_verb(capsys):
    code, doc = run_json(capsys, ["quotient", "--p", "7", "--subgroup", "1,2,4"])
    assert code == 0
    assert doc["result"]["stringent"] is False
    assert doc["result"]["elements"] == [0, 1, 3]
    assert doc["result"]["stringent_witness"] == [{"r": 1}, {"r": 1}]
    assert all(c["status"] == "pass" for c in doc["checks"])


def test_matroid_check_passes(capsys, u23_sign_file):
    code, doc = run_json(capsys, ["matroid", "check", u23_sign_file])
    assert code == 0
    names = [c["check"] for c in doc["checks"]]
    assert "cocircuit synthesis (Theorem 2)" in names


def test_matroid_check_fails_on_bad_signature(tmp_path, capsys):
    bad = {
        "hyperfield": {"kind": "sign"},
        "ground": ["1", "2", "3", "4"],
        "side": "left",
        "circuits": [
            [{"r": "+"}, {"r": "+"}, {"r": "+"}, "0"],
            [{"r": "+"}, {"r": "+"}, "0", {"r": "+"}],
            [{"r": "+"}, "0", {"r": "+"}, {"r": "+"}],
            ["0", {"r": "+"}, {"r": "+"}, {"r": "+"}],
        ],
    }
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(bad))
    code, doc = run_json(capsys, ["matroid", "check", str(path)])
    assert code == 1
    status = {c["check"]: c["status"] for c in doc["checks"]}
    assert status["cocircuit synthesis (Theorem 2)"] == "fail"
    assert status["modular elimination (C3)"] == "fail"


def test_matroid_dual_round_trip(capsys, u23_sign_file, u23_sign):
    from hypermat.jsonio import hmatroid_from_json

    code, doc = run_json(capsys, ["matroid", "dual", u23_sign_file])
    assert code == 0
    assert hmatroid_from_json(doc["result"]) == u23_sign.dual()


def test_matroid_minor_contract(capsys, u23_sign_file):
    code, doc = run_json(capsys, ["matroid", "minor", "--contract", "1", u23_sign_file])
    assert code == 0
    assert doc["result"]["circuits"] == [[{"r": "+"}, {"r": "+"}]]
    assert doc["result"]["cocircuits"] == [[{"r": "+"}, {"r": "-"}]]


def test_matroid_vectors_enumerate(capsys, u23_sign_file):
    code, doc = run_json(capsys, ["matroid", "vectors", "--enumerate", u23_sign_file])
    assert code == 0
    assert doc["result"]["count"] == 3


def test_matroid_vectors_generate_matches(capsys, trop_u23_file):
    code, doc = run_json(capsys, ["matroid", "vectors", "--generate", trop_u23_file,
                                  "--window", "3"])
    code2, doc2 = run_json(capsys, ["matroid", "vectors", "--enumerate", trop_u23_file,
                                    "--window", "3"])
    assert code == code2 == 0
    assert doc["result"] == doc2["result"]


def test_matroid_residue(capsys, trop_u23_file):
    code, doc = run_json(capsys, ["matroid", "residue", trop_u23_file])
    assert code == 0
    assert doc["result"]["hyperfield"] == {"kind": "krasner"}
    assert doc["result"]["circuits"] == [[{}, {}, "0"]]
    assert doc["result"]["circuit_supports"] == [["1", "2"]]
    assert sorted(doc["result"]["cocircuit_supports"]) == [["1", "2"], ["3"]]


def test_matroid_vector_axioms(capsys, u23_sign_file):
    code, doc = run_json(capsys, ["matroid", "vector-axioms", u23_sign_file])
    assert code == 0
    assert doc["checks"][0]["status"] == "pass"


def test_matroid_perfect(capsys, u23_sign_file):
    code, doc = run_json(capsys, ["matroid", "perfect", u23_sign_file, "--window", "3"])
    assert code == 0


def test_matroid_farkas(capsys, u23_sign_file):
    code, doc = run_json(
        capsys, ["matroid", "farkas", "--partition", '{"G": ["1", "2", "3"]}', u23_sign_file]
    )
    assert code == 0
    assert doc["result"]["kind"] == "vector"


def test_matroid_pushforward(capsys, trop_u23_file):
    code, doc = run_json(capsys, ["matroid", "pushforward", "--hom", "valuation", trop_u23_file])
    assert code == 0
    assert doc["result"]["hyperfield"] == {"kind": "tropical", "rank": 1}


def test_exit_code_2_on_malformed_input(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code = run(["matroid", "dual", str(path)])
    err = capsys.readouterr().err
    assert code == 2
    assert "broken.json:1" in err


def test_exit_code_2_on_missing_flag(capsys, u23_sign_file):
    code = run(["matroid", "minor", u23_sign_file])
    assert code == 2


def test_suite_criteria_validation(capsys):
    assert run(["suite", "--criteria", "x"]) == 2
    assert run(["suite", "--criteria", "99"]) == 2
    code, doc = run_json(capsys, ["suite", "--criteria", "2"])
    assert code == 0
    assert len(doc["checks"]) == 1


def test_rescale_rejects_zero_entries(capsys, u23_sign_file):
    code = run(["matroid", "rescale", "--rho", '{"1": "0", "2": {"r": "+"}, "3": {"r": "+"}}',
                u23_sign_file])
    assert code in (1, 2)
    code = run(["matroid", "rescale", "--rho", "{broken", u23_sign_file])
    assert code == 2


def test_budget_refusal(tmp_path, capsys):
    H = Hyperfield.sign()
    ground = tuple(str(i) for i in range(9))
    one = H.one()
    M = hmatroid_from_circuits(H, ground, [hvector(H, ground, {e: one for e in ground})])
    path = tmp_path / "big.json"
    path.write_text(dumps(hmatroid_to_json(M)))
    code = run(["matroid", "vectors", "--enumerate", str(path)])
    assert code == 2
    assert "max-ground" in capsys.readouterr().err


def test_window_env_override(capsys, u23_sign_file, monkeypatch):
    monkeypatch.setenv("HYPERMAT_WINDOW", "2")
    code, doc = run_json(capsys, ["matroid", "perfect", u23_sign_file])
    assert doc["window"] == 2


def _strip_elapsed(doc):
    for c in doc["checks"]:
        c.pop("elapsed_ms", None)
    return doc


def test_reports_are_deterministic(capsys, trop_u23_file):
    code1, doc1 = run_json(capsys, ["matroid", "vectors", "--enumerate", trop_u23_file])
    code2, doc2 = run_json(capsys, ["matroid", "vectors", "--enumerate", trop_u23_file])
    assert _strip_elapsed(doc1) == _strip_elapsed(doc2)


def test_out_flag_writes_file(tmp_path, capsys, u23_sign_file):
    out = tmp_path / "report.json"
    code = run(["matroid", "dual", u23_sign_file, "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["command"] == "matroid dual"
