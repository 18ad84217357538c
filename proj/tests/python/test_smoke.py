import math

import numpy as np
import pytest

import idtrade

SQRT3 = math.sqrt(3.0)
I_MAX = (3 + SQRT3) / 6


def special_seed():
    a = np.zeros((4, 4), dtype=complex)
    a[0, 1] = math.sqrt(2 + SQRT3)
    a[0, 2] = math.sqrt(2 - SQRT3)
    return a


def test_bound_endpoints():
    assert idtrade.information_max() == pytest.approx(I_MAX, abs=1e-15)
    assert idtrade.d_min(2 / 3) == pytest.approx(0.0, abs=1e-12)
    assert idtrade.d_min(I_MAX) == pytest.approx((3 - SQRT3) / 6, abs=1e-12)
    assert idtrade.f_max(2 * SQRT3) == pytest.approx(2 * SQRT3, abs=1e-12)
    with pytest.raises(ValueError):
        idtrade.d_min(0.5)


def test_special_seed():
    assert idtrade.validate_seed(special_seed())["validated"]
    info, dist = idtrade.evaluate(special_seed())
    assert info == pytest.approx(I_MAX, abs=1e-9)
    assert dist == pytest.approx((3 - SQRT3) / 6, abs=1e-9)


def test_invalid_seed_rejected():
    assert not idtrade.validate_seed(np.zeros((4, 4)))["validated"]
    with pytest.raises(ValueError):
        idtrade.evaluate(np.zeros((4, 4)))
    with pytest.raises(ValueError):
        idtrade.evaluate(np.eye(2))


def test_optimal_family_saturates():
    for theta in np.linspace(0.0, idtrade.theta_max(), 7):
        info, dist = idtrade.evaluate(idtrade.mdm_seed(theta))
        assert idtrade.bound_distance(info, dist) < 1e-9
        f, g = idtrade.fg(idtrade.mdm_seed(theta))
        assert info == pytest.approx(0.5 + g / 12, abs=1e-12)


def test_moments_shape_and_trace():
    m = idtrade.moments("antiparallel")
    assert m.shape == (2, 2, 4, 4)
    assert np.trace(m[0, 0]).real == pytest.approx(0.5, abs=1e-12)
    assert np.allclose(m[1, 0], m[0, 1].conj().T, atol=1e-14)
    with pytest.raises(ValueError):
        idtrade.moments("sideways")


def test_optimizer_matches_bound():
    r = idtrade.optimize(0.75, restarts=5, seed=1)
    assert r["converged"]
    assert r["disturbance"] == pytest.approx(idtrade.d_min(0.75), abs=1e-6)
    assert r["seed"].shape == (4, 4)


def test_bound_curve_and_compare():
    curve = idtrade.bound_curve("antiparallel", 5)
    assert curve.shape == (5, 2)
    assert np.all(np.diff(curve[:, 0]) > 0)
    rows = idtrade.compare(4)
    assert all(r["parallel"] >= r["antiparallel"] - 1e-9 for r in rows)


def test_discrete_povm_monte_carlo():
    kraus, guesses = idtrade.build_discrete(idtrade.mdm_seed(0.0))
    assert kraus.shape == (4, 4, 4)
    total = sum(k.conj().T @ k for k in kraus)
    assert np.allclose(total, np.eye(4), atol=1e-8)
    assert np.allclose(np.linalg.norm(guesses, axis=1), 1.0)

    mc = idtrade.monte_carlo(idtrade.mdm_seed(0.0), seed=3, samples=200000)
    assert abs(mc["information"] - I_MAX) <= 3 * mc["information_stderr"]
    mc2 = idtrade.monte_carlo(idtrade.mdm_seed(0.0), seed=3, samples=200000)
    assert mc == mc2
