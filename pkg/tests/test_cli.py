import csv
import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from xlag.cli import poly_from_json, run
from xlag.construct import SeedSpec, g_mixed
from xlag.eop import eop_construct
from xlag.sweep import worker_count


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_construct_g_json():
    code, text = call("construct-g", "--alpha", "7/2", "--type1", "1,2")
    assert code == 0
    doc = json.loads(text)
    assert doc["spec"] == {"alpha": "7/2", "omega": "1", "type1": [1, 2], "type2": []}
    assert doc["g"] == {"coeffs": ["35/8", "5/2", "1/2"], "mu": 2, "leading": "1/2",
                        "nodeless": True}
    assert "eop" not in doc and "spectrum" not in doc


def test_construct_eop_round_trip():
    code, text = call("construct-eop", "--alpha", "9/2", "--type1", "1", "--type2", "2",
                      "--omega", "1/3", "--nu", "2")
    assert code == 0
    doc = json.loads(text)
    spec = SeedSpec(F(9, 2), (1,), (2,), F(1, 3))
    assert poly_from_json(doc["g"]["coeffs"]) == g_mixed(spec).g
    assert poly_from_json(doc["eop"]["coeffs"]) == eop_construct(spec, 2).y
    assert doc["eop"]["nu"] == 2 and doc["eop"]["n"] == doc["g"]["mu"] + 2


def test_pretty_output():
    code, text = call("construct-eop", "--alpha", "5/2", "--type1", "1", "--nu", "0",
                      "--output", "pretty")
    assert code == 0 and "n=1 nu=0" in text


def test_spectrum_csv():
    code, text = call("spectrum", "--alpha", "5/2", "--type1", "1", "--count", "3",
                      "--output", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(text)))
    assert list(rows[0]) == ["nu", "energy", "predicted", "abs_error", "richardson_error"]
    for r in rows:
        assert abs(float(r["energy"]) - float(r["predicted"])) < 1e-4


def test_spectrum_json_and_conventional():
    code, text = call("spectrum", "--alpha", "5/2", "--count", "2", "--conventional")
    assert code == 0
    doc = json.loads(text)
    assert len(doc["spectrum"]["energies"]) == len(doc["spectrum"]["errors"]) == 2


@pytest.mark.parametrize("argv", [
    ["construct-g", "--alpha", "7/2", "--type1", "2,1"],
    ["construct-g", "--alpha", "-1/2"],
    ["construct-g", "--alpha", "abc"],
    ["construct-g", "--alpha", "7/2", "--type2", "x"],
    ["construct-g", "--alpha", "7/2", "--omega", "0"],
    ["construct-eop", "--alpha", "7/2", "--nu", "-1"],
    ["spectrum", "--alpha", "5/2", "--type2", "4"],
    ["spectrum", "--alpha", "5/2", "--count", "0"],
    ["frobnicate"],
])
def test_invalid_input_exits_2(argv, capsys):
    code, text = call(*argv)
    assert code == 2
    assert text == ""
    assert capsys.readouterr().err


def test_grid_too_small_is_a_failed_check(capsys):
    code, _ = call("spectrum", "--alpha", "5/2", "--type1", "1", "--count", "5",
                   "--x-max", "4", "--points", "800")
    assert code == 1
    assert "tail amplitude" in capsys.readouterr().err


def test_verify_reports_failures(capsys):
    code, text = call("verify", "--suite", "negative", "--kmax", "2", "--mmax", "2")
    assert code == 1
    assert text.startswith("FAIL negative")
    assert "proportional-columns obstruction FAILED" in capsys.readouterr().err


def test_verify_pass():
    code, text = call("verify", "--suite", "degree", "--kmax", "2", "--mmax", "3")
    assert code == 0 and text.startswith("PASS degree")


def test_sweep_is_sorted_and_deterministic(monkeypatch):
    monkeypatch.setenv("XLAG_THREADS", "2")
    args = ("sweep", "--kmax", "2", "--mmax", "2", "--alphas", "7/2,5/2")
    code, first = call(*args)
    assert code == 0
    monkeypatch.setenv("XLAG_THREADS", "1")
    assert call(*args)[1] == first
    docs = json.loads(first)
    keys = [(F(d["spec"]["alpha"]), d["spec"]["type1"], d["spec"]["type2"]) for d in docs]
    assert keys == sorted(keys)


def test_worker_count(monkeypatch):
    monkeypatch.setenv("XLAG_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("XLAG_THREADS", "zero")
    with pytest.raises(ValueError):
        worker_count()
    code, _ = call("sweep", "--kmax", "1", "--mmax", "1")
    assert code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xlag", "construct-g", "--alpha", "7/2",
                           "--type2", "1"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["g"]["coeffs"] == ["-7/2", "-1"]
