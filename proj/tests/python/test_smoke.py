import math

import numpy as np
import pytest

import capdisc


def test_polar_sizes():
    assert capdisc.generate("polar", 2).shape == (5, 3)
    assert capdisc.generate("polar", 15).shape == (250, 3)
    assert capdisc.generate("twisted", 20).shape == (441, 3)


def test_random_is_seeded():
    a = capdisc.generate("random", 50, seed=4)
    b = capdisc.generate("random", 50, seed=4)
    assert np.array_equal(a, b)
    assert np.allclose(np.linalg.norm(a, axis=1), 1.0)


def test_north_pole_matches_generic():
    pts = capdisc.generate("polar", 15)
    r = capdisc.directed_discrepancy(pts, 0.0, math.pi / 2)
    assert r["value"] == pytest.approx(capdisc.north_pole_directed(15), abs=1e-12)


def test_antipodal_pair():
    pts = np.array([[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]])
    assert capdisc.directed_discrepancy(pts, 0.0, math.pi / 2)["value"] == pytest.approx(0.5)
    assert capdisc.naive_discrepancy(pts)["value"] == pytest.approx(0.5)
    radius, k = capdisc.confidence_radius(pts, 0.0, math.pi / 2, 1.0)
    assert radius == 2.0


def test_non_unit_rejected():
    with pytest.raises(ValueError):
        capdisc.directed_discrepancy(np.array([[0.0, 0.0, 2.0]]), 0.0, 0.0)


def test_size_limit():
    pts = capdisc.generate("random", 30, seed=1)
    with pytest.raises(capdisc.SizeLimitExceeded):
        capdisc.naive_discrepancy(pts, limit=10)


def test_cover_counterexample_for_tiny_bound():
    pts = capdisc.generate("polar", 10)
    out = capdisc.cover_region(pts, 1e-9)
    assert out["status"] == "counterexample"
    assert out["counterexample"] is not None


def test_conjecture_n15():
    out = capdisc.conjecture_check(15)
    assert out["status"] == "covered"
    assert out["t"] == 250
    assert out["d"] == pytest.approx(capdisc.north_pole_directed(15))
    assert out["n_cc"] <= out["n_dd"]
