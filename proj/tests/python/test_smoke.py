import math

import pytest

import gns


def test_kernels():
    assert gns.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)
    assert gns.bessel_k(0.5, 1.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-13)
    assert gns.hyp2f1_neg(1, 1, 2, 1.0) == pytest.approx(math.log(2), rel=1e-13)


def test_sharp_row():
    s = gns.sharp_linf(1, 2, 1)
    assert s["theta"] == 0.75
    assert s["S"] == pytest.approx(2 ** -0.75, rel=1e-12)


def test_profile_and_spec():
    assert gns.f_linf(0, 1, 1, 2.0) == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-2), rel=1e-9)
    assert gns.g_spec(1, 2, 1, 2) == "1/2 G(1/2; 0, 1/2, 1/2; 1/4, 3/4 | (rho/4)^4)"
    g = gns.meijer_g([], [], [0.0, 0.5], [], 0.25) / math.sqrt(2)
    assert g == pytest.approx(math.sqrt(math.pi / 2) * math.exp(-1), rel=1e-9)


def test_bounds_row():
    r = gns.best_bounds(1, "0", "1", "1/3", lo=0.5, hi=1.5, step=0.1)
    assert r["regime"]["kind"] == "general"
    assert r["regime"]["r"] == pytest.approx(6.0)
    assert r["g_plus"] == pytest.approx(1.2034220576, abs=1e-9)
    assert r["g_minusminus"] == pytest.approx(0.8326831777, abs=1e-9)
    assert r["best_lower_g"] <= r["best_upper_g"]


def test_errors():
    with pytest.raises(ValueError):
        gns.classify(2, "0", "1", "1")
    with pytest.raises(ValueError):
        gns.classify(1, "0", "1", "0.3")
    assert gns.classify(1, "0", "1", "0.3", inexact=True)["kind"] == "general"
