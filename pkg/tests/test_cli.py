import io
import json
import subprocess
import sys

import pytest

from scf import classification, cubic_field
from scf.cli import run
from scf.exact_arith import RatPolynomial, format_rational, parse_rational


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def call_json(*argv):
    code, out, _ = call(*argv, "--json")
    assert code == 0
    return json.loads(out)


def assert_canonical(text):
    assert format_rational(parse_rational(text)) == text


def test_transform():
    assert call("transform", "2", "3", "3")[:2] == (0, "-51/73\n")
    assert call("transform", "1", "1", "3")[1] == "-3\n"
    doc = call_json("transform", "1", "2", "3")
    assert doc == {"k": "3", "witness": "1:2", "k_prime": "3/19"}


def test_equiv_json():
    doc = call_json("equiv", "3", "3/19")
    assert doc["equivalent"] is True
    assert doc["witnesses"][0] == "1:2" and doc["reverse_witnesses"][0] == "-1:3"
    assert len(doc["witnesses"]) == len(doc["reverse_witnesses"]) == 3


def test_equiv_negative_arguments():
    bare = call("equiv", "3", "-51/73", "--json")
    sep = call("equiv", "--json", "--", "3", "-51/73")
    assert bare[0] == sep[0] == 0
    assert json.loads(bare[1]) == json.loads(sep[1])
    assert "2:3" in json.loads(bare[1])["witnesses"]


def test_not_equivalent_is_success():
    code, out, _ = call("equiv", "0", "1")
    assert code == 0 and out.strip() == "not equivalent"
    assert call_json("equiv", "0", "1") == {"equivalent": False, "witnesses": [], "reverse_witnesses": []}


def test_classify():
    assert call_json("classify", "3/2") == {"class": "degenerate", "roots": ["-1", "1/2", "2"]}
    assert call_json("classify", "3") == {"class": "generating", "discriminant": "81", "sqrt_discriminant": "9"}
    assert call("classify", "6/4")[1].startswith("degenerate")


def test_orbit_lines():
    code, out, _ = call("orbit", "3", "--height", "3", "--json")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines()]
    assert {"k": "-51/73", "witness": "2:3", "verified": True} in rows
    assert {"k": "3/19", "witness": "1:2", "verified": True} in rows
    assert all(r["verified"] for r in rows)
    for r in rows:
        assert_canonical(r["k"])


def test_orbit_parallel_output_identical():
    assert call("orbit", "-1/2", "--height", "5")[1] == call("orbit", "-1/2", "--height", "5", "--parallel")[1]


def test_orbit_height_cap(monkeypatch):
    monkeypatch.setenv("SCF_MAX_HEIGHT", "4")
    assert call("orbit", "3", "--height", "5")[0] == 2
    assert call("orbit", "3", "--height", "4")[0] == 0


def test_minpoly_and_basis():
    doc = call_json("minpoly", "5", "-2", "2", "3", "3")
    assert doc["coefficients"] == ["1", "-270/73", "51/73", "1"]
    assert call("minpoly", "3", "-1", "1", "2", "3")[1] == "x^3 - 3/19*x^2 - 54/19*x + 1\n"
    doc = call_json("basis", "5", "-2", "2", "3", "3")
    assert (doc["a1"], doc["b1"], doc["c1"], doc["d1"]) == ("38", "-171", "74", "-73")
    assert doc["element"] == "-74/73 + 171/73*A - 38/73*A^2"


def test_minpoly_mismatch_exits_4(monkeypatch):
    real = cubic_field.minpoly_closed_form
    monkeypatch.setattr(cubic_field, "minpoly_closed_form", lambda m: real(m) + RatPolynomial([1]))
    code, _, err = call("minpoly", "5", "-2", "2", "3", "3")
    assert code == 4
    assert "closed form" in err and "oracle" in err


def test_roots():
    doc = call_json("roots", "3", "--digits", "15")
    assert doc["exact"] is False and doc["digits"] == 15
    assert doc["roots"][0].startswith("2.8793852415718")
    assert call_json("roots", "3/2") == {"exact": True, "roots": ["2", "1/2", "-1"]}


def test_degenerate():
    assert call("degenerate", "3", "1")[1] == "19/6\n"
    assert call_json("degenerate", "1", "-1")["k"] == "3/2"


@pytest.mark.parametrize(
    "argv",
    [
        ("degenerate", "2", "2"),
        ("transform", "0", "0", "3"),
        ("minpoly", "2", "4", "1", "2", "3"),
        ("basis", "1", "0", "0", "1", "3/2"),
        ("orbit", "3/2"),
    ],
)
def test_domain_errors_exit_3(argv):
    code, _, err = call(*argv)
    assert code == 3 and "domain error" in err


@pytest.mark.parametrize(
    "argv",
    [(), ("bogus",), ("classify",), ("classify", "x"), ("transform", "1.5", "2", "3"), ("orbit", "3", "--height", "0")],
)
def test_usage_errors_exit_2(argv):
    assert call(*argv)[0] == 2


def test_selftest_passes():
    code, out, _ = call("selftest", "--samples", "10")
    assert code == 0
    assert out.count("PASS") == 7
    doc = call_json("selftest", "--samples", "20")
    assert doc["passed"] and doc["basis_reading"] == "a1*A^2 + b1*A + c1"


def test_selftest_catches_seeded_corruption(monkeypatch):
    real = classification.transform_param

    monkeypatch.setattr(classification, "transform_param", lambda w, k: real(w, k) + 1)
    code, out, _ = call("selftest", "--samples", "20")
    assert code == 4 and "FAIL" in out


def test_selftest_catches_basis_corruption(monkeypatch):
    real = cubic_field.basis_coefficients
    monkeypatch.setattr(cubic_field, "basis_coefficients", lambda m: (lambda t: (t[0] + 1,) + t[1:])(real(m)))
    assert call("selftest", "--samples", "20")[0] == 4


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "scf", "transform", "2", "3", "3"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "-51/73\n"
