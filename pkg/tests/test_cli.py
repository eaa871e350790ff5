import json
import subprocess
import sys
from fractions import Fraction as Fr

import pytest

from scgt import fixtures, io
from scgt.attribution import synthetic_journeys
from scgt.cli import main
from scgt.errors import InputError
from scgt.games import make_worth
from scgt.values import QuasiValue


@pytest.fixture
def files(tmp_path, proto):
    cx = tmp_path / "proto.json"
    cx.write_text(io.complex_to_json(proto))
    game = tmp_path / "game.json"
    game.write_text(json.dumps({
        "complex": "proto.json",
        "worth": [{"face": list(f), "value": len(f)} for f in proto.faces() if f],
    }))
    coeffs = tmp_path / "coeffs.json"
    coeffs.write_text(json.dumps({"values": [
        {"player": "TV", "coefficients": [{"face": [], "p": "1/4"}, {"face": ["FB", "E"], "p": "1/2"}]},
        {"player": 1, "coefficients": [{"face": [2, 3], "p": 1}]},
    ]}))
    return {"complex": cx, "game": game, "coeffs": coeffs, "dir": tmp_path}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


# -- io --------------------------------------------------------------------------


def test_load_complex_roundtrip(files, proto):
    assert io.load_complex(files["complex"]) == proto
    assert io.load_complex({"n": 3, "facets": [["1", 2]]}).facets == [(1, 2)]


def test_load_complex_errors(tmp_path):
    with pytest.raises(InputError):
        io.load_complex({"facets": [[1]]})
    with pytest.raises(InputError):
        io.load_complex(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(InputError):
        io.load_complex(bad)
    with pytest.raises(InputError):
        io.load_complex({"n": 3, "facets": [["Z"]]})


def test_load_game_relative_complex(files):
    v = io.load_game(files["game"])
    assert v((3, 4, 5)) == 3
    doc = io.game_to_dict(v)
    assert io.load_game(doc)((3, 4, 5)) == 3
    w = make_worth(v.complex, {(1,): Fr(1, 3)})
    assert io.load_game(io.game_to_dict(w, exact=True)) == w


def test_load_coefficients_labels_and_fractions(files, proto):
    qs = io.load_coefficients(files["coeffs"], proto)
    assert qs[4].as_faces() == {(): Fr(1, 4), (3, 5): Fr(1, 2)}
    assert qs[4].lam == Fr(3, 4)
    back = io.load_coefficients(io.quasi_to_dict(qs[4], exact=True), proto)[4]
    assert back.coefficients == qs[4].coefficients and back.lam == Fr(3, 4)


def test_distribution_roundtrip(proto):
    doc = {"weights": [{"facet": ["F", "S", "FB"], "P": "1/3"}, {"facet": [4, 5, 6], "P": "2/3"}]}
    P = io.load_distribution(doc, proto)
    assert P[(1, 2, 3)] == Fr(1, 3) and P[(3, 4, 5)] == 0
    assert io.load_distribution(io.distribution_to_dict(P, exact=True), proto).weights == P.weights
    approx = io.load_distribution(io.distribution_to_dict(P), proto)
    assert approx[(4, 5, 6)] == pytest.approx(2 / 3)


def test_not_a_number(proto):
    with pytest.raises(InputError):
        io.load_distribution({"weights": [{"facet": [1, 2, 3], "P": "abc"}]}, proto)


# -- cli -------------------------------------------------------------------------


def test_complex_info(capsys, files):
    code, out, _ = run(capsys, "complex", "info", files["complex"])
    doc = json.loads(out)
    assert code == 0
    assert doc["face_count"] == 21 and doc["pure"] and not doc["matroid"]
    assert doc["link_sizes"] == {"1": 4, "2": 4, "3": 10, "4": 7, "5": 7, "6": 7}


def test_values_quasi(capsys, files):
    code, out, _ = run(capsys, "values", "quasi", "--complex", files["complex"], "--game", files["game"], "--coeffs", files["coeffs"])
    vals = {e["player"]: e["value"] for e in json.loads(out)["values"]}
    assert code == 0 and vals == {1: 1, 4: 0.75}


def test_values_reduce(capsys, files):
    code, out, _ = run(capsys, "values", "reduce", "--complex", files["complex"], "--game", files["game"])
    doc = json.loads(out)
    assert code == 0 and doc["efficiency"]["holds"]
    assert doc["efficiency"]["total"] == pytest.approx(3)


def test_values_decompose(capsys, files):
    code, out, _ = run(capsys, "values", "decompose", "--complex", files["complex"], "--coeffs", files["coeffs"])
    dec = {d["player"]: d for d in json.loads(out)["decompositions"]}
    assert code == 0
    assert sum(w["P"] for w in dec[4]["weights"]) == pytest.approx(0.75)


def test_polytope_member(capsys, files):
    code, out, _ = run(capsys, "polytope", "member", "--complex", files["complex"], "--point", "1/5,1/5,4/5,3/5,3/5,3/5")
    assert code == 0 and json.loads(out)["member"]
    code, out, _ = run(capsys, "polytope", "member", "--complex", files["complex"], "--point", "1,1,1,1,1,1")
    assert code == 0 and not json.loads(out)["member"]


def test_polytope_member_bad_point(capsys, files):
    code, _, err = run(capsys, "polytope", "member", "--complex", files["complex"], "--point", "a,b")
    assert code == 2 and "scgt:" in err


def test_attribution_run(capsys, files, proto):
    d = files["dir"]
    journeys = synthetic_journeys(d / "j.csv", proto, 200, seed=3)
    out = d / "report.json"
    code, _, _ = run(capsys, "attribution", "run", "--journeys", journeys, "--trackable", files["complex"], "--out", out)
    doc = json.loads(out.read_text())
    assert code == 0 and doc["method"] == "shapley-reduce"
    assert doc["diagnostics"]["residual"] <= 1e-9


def test_attribution_variant_exit_codes(capsys, tmp_path, variant):
    cx = tmp_path / "variant.json"
    cx.write_text(io.complex_to_json(variant))
    journeys = synthetic_journeys(tmp_path / "j.csv", variant, 50, seed=1)
    code, _, err = run(capsys, "attribution", "run", "--journeys", journeys, "--trackable", cx)
    assert code == 3 and "pure" in err
    code, _, _ = run(capsys, "attribution", "run", "--journeys", journeys, "--trackable", cx, "--method", "quasi")
    assert code == 2
    coeffs = tmp_path / "c.json"
    coeffs.write_text(json.dumps([{"player": x, "coefficients": [{"face": [], "p": 1}]} for x in range(1, 7)]))
    code, out, _ = run(capsys, "attribution", "run", "--journeys", journeys, "--trackable", cx, "--method", "quasi", "--coeffs", coeffs)
    assert code == 0 and json.loads(out)["method"] == "quasi"


def test_infeasible_game_exit_code(capsys, tmp_path, files):
    g = tmp_path / "g.json"
    g.write_text(json.dumps({"complex": str(files["complex"]), "worth": [{"face": [1, 4], "value": 1}]}))
    code, _, err = run(capsys, "values", "reduce", "--complex", files["complex"], "--game", g)
    assert code == 3


def test_verify_fixture(capsys):
    code, out, _ = run(capsys, "verify", "--fixture", "u23", "--seed", "1", "--rounds", "5")
    assert code == 0 and "[FAIL]" not in out and "[PASS] edmonds equality" in out


def test_console_script_entry():
    out = subprocess.run([sys.executable, "-m", "scgt.cli", "verify", "--fixture", "path4", "--rounds", "3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "suites passed or skipped" in out.stdout
