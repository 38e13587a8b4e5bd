import json
import math

import pytest

import renyi_cf


def test_expand_one_third():
    assert renyi_cf.expand("1/3", 5, 2) == [3, 2, 2, 2, 2]


def test_contraction_ratio_matches_closed_form():
    for N in (2, 3, 10):
        k = 2.0 / (2 * N - 1 + 2 * math.sqrt(N * (N - 1)))
        assert renyi_cf.contraction_ratio(N) == pytest.approx(1.0 / N + k, rel=1e-14)


def test_weights_agree():
    for t in (0.0, 0.4, 1.0):
        a = renyi_cf.cylinder_weight([3, 2, 5], t, 2)
        b = renyi_cf.cylinder_weight_qpoly([3, 2, 5], t, 2)
        assert a == pytest.approx(b, rel=1e-13)


def test_limit_cdf_marginal():
    assert renyi_cf.limit_cdf(1.0, 0.5, 2) == pytest.approx(math.log2(1.5), rel=1e-14)
    assert renyi_cf.rho_cdf(0.5, 2) == pytest.approx(math.log2(1.5), rel=1e-14)


def test_sup_error_one_step():
    r = renyi_cf.sup_error(2, 1.0, 1, resolution=65, cutoff=200)
    assert r["sup_error"] == pytest.approx(math.log2(4.0 / 3.0), rel=1e-12)
    assert r["lower_bound"] - r["tolerance"] <= r["sup_error"] <= r["upper_bound"] + r["tolerance"]


def test_errors():
    with pytest.raises(ValueError):
        renyi_cf.contraction_ratio(1)
    with pytest.raises(renyi_cf.RenyiError):
        renyi_cf.sup_error(2, 1.0, 4, cutoff=1000)


def test_cli_roundtrip():
    status, out, err = renyi_cf.run_cli(["table", "--N", "2,3", "--format", "json"])
    assert status == 0
    rows = json.loads(out)["results"]["bounds"]
    assert [r["N"] for r in rows] == [2, 3]
