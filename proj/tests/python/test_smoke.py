import json

import pytest

import rankin


def test_code_and_lattice():
    code = rankin.parity_check(4, 2)
    assert code.cardinality == 8
    lattice = code.lattice()
    assert lattice.n == 4
    assert lattice.det == 4
    assert lattice.is_even()
    assert lattice.contains([1, 1, 0, 0])
    assert not lattice.contains([1, 0, 0, 0])
    assert code.dual().cardinality * code.cardinality == 2**4


def test_hermite_and_rankin_values():
    assert rankin.gamma(rankin.parity_check(5, 2), 1) == rankin.Radical(8, 1, 5)
    rm = rankin.reed_muller(1, 3)
    assert rm.is_self_dual()
    assert rankin.gamma(rm, 2) == rankin.Radical(3)
    value = rankin.gamma(rankin.parity_check(4, 2), 2)
    assert (value.num, value.den, value.root) == (3, 2, 1)
    assert float(value) == 1.5


def test_gamma_prime():
    result = rankin.gamma_prime(rankin.parity_check(3, 2), 1)
    assert result["value"] == rankin.Radical(3, 2, 2)
    assert not result["self_dual"]
    assert rankin.gamma_prime(rankin.reed_muller(1, 3), 2)["value"] == rankin.Radical(3)


def test_certificate_dict():
    cert = rankin.d_l(rankin.parity_check(4, 2), 2)
    assert cert["value"] == "3"
    assert cert["confirmed_by_escalation"]
    assert len(cert["witness"]["rows"]) == 2
    json.dumps(cert)


def test_bounds_and_asymptotic():
    table = rankin.bounds(7, {3, 7})
    cell = next(c for c in table["cells"] if c["label"] == "gamma(5,2)")
    assert (cell["lower"]["num"], cell["lower"]["den"], cell["lower"]["root"]) == ("243", "16", 5)
    assert cell["upper"]["exact"] == "2"
    iv = rankin.asymptotic(2, 10)
    assert iv["lower"]["decimal"] == "0.1666666666"


def test_spec_parsing(tmp_path):
    path = tmp_path / "spec.json"
    path.write_text('{"family": "reed_muller", "r": 1, "m": 3}')
    code = rankin.load_spec(str(path))
    assert code.n == 8
    assert code.spec()["family"] == "reed_muller"
    lattice = rankin.parse_spec('{"rows": [[2, 1], [1, 2]], "n": 2}')
    assert lattice.det == 9


def test_errors():
    with pytest.raises(rankin.InvalidArgument):
        rankin.gamma(rankin.parity_check(4, 2), 5)
    with pytest.raises(rankin.ParseError):
        rankin.parse_spec("{")
    with pytest.raises(rankin.RankDeficient):
        rankin.Lattice.from_rows([[1, 2], [2, 4]])
    with pytest.raises(rankin.RankinError):
        rankin.Radical(-1)


def test_verify_subset():
    results = rankin.verify("g.")
    assert results["checks"]
    assert all(r["status"] == "PASS" for r in results["checks"])
