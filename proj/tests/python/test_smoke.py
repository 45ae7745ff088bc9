"""Smoke tests for the python bindings."""

import math

import numpy as np
import pytest

try:
    import spectre as sp
except ImportError:
    import _spectre as sp


def test_sign_table():
    assert sp.sign_table("0+") == {"eps": 1, "eps_prime": 1, "eps_double_prime": 1}
    assert sp.sign_table("2-") == {"eps": 1, "eps_prime": -1, "eps_double_prime": -1}
    col5 = sp.sign_table("5")
    assert col5["eps"] == -1 and col5["eps_prime"] == -1
    assert "eps_double_prime" not in col5
    assert len(sp.all_labels()) == 12


def test_one_point_verifies():
    for label in sp.all_labels():
        t = sp.one_point(label)
        report = sp.verify(t)
        assert report["pass"], (label, report)
        assert sp.infer_ko(t) == [label]


def test_two_point():
    t = sp.two_point()
    assert t.hilbert_dim == 4
    assert t.ko == "0+"
    assert sp.verify(t)["pass"]
    eigs = sp.eigenvalues(t)
    assert eigs[0] == pytest.approx(-1) and eigs[-1] == pytest.approx(1)
    assert np.allclose(t.grading, np.diag([1, -1, -1, 1]))


def test_product_ko_additivity():
    p = sp.product(sp.one_point("1"), sp.one_point("1"), variant="plus")
    assert p.ko == "2+"
    assert sp.verify(p)["pass"]
    q = sp.product(sp.one_point("3"), sp.one_point("6-"))
    assert q.ko in ("1",)
    assert sp.verify(q)["pass"]


def test_toggle_involution():
    t = sp.one_point("4+")
    flipped = sp.toggle(t)
    assert flipped.ko == "4-"
    back = sp.toggle(flipped)
    assert back.ko == "4+"
    assert np.allclose(back.real_structure_unitary, t.real_structure_unitary)


def test_fluctuation_round_trip():
    t = sp.two_point()
    pairs = [(np.array([0.4 + 0.3j, 0.0]), np.array([1.0 + 0j, -0.5 + 0j]))]
    one = sp.symmetrized(t, sp.one_form(t, pairs))
    assert one.hermitian()
    fluct = sp.fluctuate(t, one)
    assert sp.verify(fluct)["pass"]
    back = sp.fluctuate(fluct, one.negated())
    assert np.max(np.abs(back.dirac - t.dirac)) < 1e-12


def test_split():
    t = sp.one_point("5")
    rng = np.random.default_rng(0)
    x = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    d = (x + x.conj().T) / 2
    d0, m = sp.j_compatible_split(d, t.real_structure_unitary, "5")
    assert np.max(np.abs(d0 + m - d)) < 1e-14
    d00, m0 = sp.j_compatible_split(d0, t.real_structure_unitary, "5")
    assert np.max(np.abs(m0)) < 1e-12


def test_spectral_action():
    t = sp.one_point("0+")  # D = sigma_1
    assert sp.spectral_action(t, 2.0, [(1, 1.0)]) == pytest.approx(0.5)
    assert sp.spectral_action(t, 0.5, [(0, 1.0)]) == pytest.approx(0.0)


def test_wedderburn_dimension():
    assert sp.diagonal_center_dimension([(1, "complex"), (2, "complex")], "complex") == 1
    assert sp.diagonal_center_dimension([(1, "quaternion"), (1, "complex")], "real") == 1


def test_j_fixed_dimensions():
    t = sp.two_point()
    assert len(sp.j_fixed_subalgebra(t, star=True)) == 2
    assert len(sp.j_fixed_subalgebra(t, star=False)) == 1


def test_file_round_trip(tmp_path):
    path = str(tmp_path / "triple.json")
    t = sp.one_point("6-")
    sp.save_triple(t, path)
    loaded = sp.load_triple(path)
    assert loaded.ko == "6-"
    assert np.allclose(loaded.dirac, t.dirac)


def test_search_real_structure():
    t = sp.one_point("5")
    found = sp.search_real_structure(t, "5", budget=8)
    assert len(found) >= 1
    u = found[0]
    assert np.max(np.abs(u.conj().T @ u - np.eye(2))) < 1e-9
