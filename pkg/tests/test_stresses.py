"""Stress-measure conversions."""

import itertools

import numpy as np
import pytest

from logstrain.constitutive import (becker_biot, becker_cauchy,
                                    becker_kirchhoff, becker_pk1,
                                    becker_pk2, hencky_kirchhoff)
from logstrain.errors import NonInvertible
from logstrain.kinematics import polar_decompose, pure_shear_F
from logstrain.moduli import Moduli
from logstrain.stresses import MEASURES, StressState, stress_convert
from logstrain.verify import random_rotation, random_spd

from conftest import rel_err

M = Moduli.from_g_lam(1.0, 0.5)


def test_biot_shear_to_cauchy():
    # pure shear load diag(s, -s, 0) at F = diag(alpha, 1/alpha, 1)
    alpha, s = 2.0, 0.7
    f = pure_shear_F(alpha)
    state = StressState(np.diag([s, -s, 0.0]), "biot", f)
    sigma = stress_convert(state, "cauchy").tensor
    np.testing.assert_allclose(sigma,
                               np.diag([alpha * s, -s / alpha, 0.0]),
                               atol=1e-14)


def test_identity_deformation_all_measures_agree(rng):
    t = random_spd(rng)
    state = StressState(t, "biot", np.eye(3))
    for target in MEASURES:
        out = stress_convert(state, target).tensor
        assert rel_err(out, t) < 1e-13


def test_round_trips_all_pairs(rng):
    for _ in range(30):
        f = random_rotation(rng) @ random_spd(rng, 0.3, 3.0)
        t = random_spd(rng)
        for src, dst in itertools.product(MEASURES, MEASURES):
            state = StressState(t, src, f)
            back = stress_convert(stress_convert(state, dst), src).tensor
            assert rel_err(back, t) < 1e-11


def test_measure_relations(rng):
    # kirchhoff = J sigma, pk1 = J sigma F^-T, pk2 = J F^-1 sigma F^-T,
    # biot = U pk2 = R.T pk1
    f = random_rotation(rng) @ random_spd(rng, 0.5, 2.0)
    j = np.linalg.det(f)
    sigma = random_spd(rng)
    state = StressState(sigma, "cauchy", f)
    tau = stress_convert(state, "kirchhoff").tensor
    pk1 = stress_convert(state, "pk1").tensor
    pk2 = stress_convert(state, "pk2").tensor
    biot = stress_convert(state, "biot").tensor
    fi = np.linalg.inv(f)
    assert rel_err(tau, j * sigma) < 1e-12
    assert rel_err(pk1, j * sigma @ fi.T) < 1e-12
    assert rel_err(pk2, j * fi @ sigma @ fi.T) < 1e-12
    pf = polar_decompose(f)
    assert rel_err(biot, pf.u @ pk2) < 1e-12
    assert rel_err(biot, pf.r.T @ pk1) < 1e-12


def test_rejects_noninvertible_deformation():
    state = StressState(np.eye(3), "cauchy", np.diag([1.0, 1.0, 0.0]))
    with pytest.raises(NonInvertible):
        stress_convert(state, "biot")


def test_rejects_unknown_measure():
    with pytest.raises(ValueError):
        StressState(np.eye(3), "nominal", np.eye(3))


# ---------------------------------------------------------------------------
# consistency of the law-specific measure formulas with generic conversion

def test_becker_measures_mutually_consistent(rng):
    for _ in range(50):
        q = random_rotation(rng)
        u = random_spd(rng, 0.3, 3.0)
        f = q @ u
        pf = polar_decompose(f)
        t_biot = becker_biot(pf.u, M)
        state = StressState(t_biot, "biot", f)
        assert rel_err(stress_convert(state, "kirchhoff").tensor,
                       becker_kirchhoff(pf.v, M)) < 1e-11
        assert rel_err(stress_convert(state, "cauchy").tensor,
                       becker_cauchy(pf.v, M)) < 1e-11
        assert rel_err(stress_convert(state, "pk2").tensor,
                       becker_pk2(pf.u, M)) < 1e-11
        assert rel_err(stress_convert(state, "pk1").tensor,
                       becker_pk1(f, M)) < 1e-11


def test_becker_kirchhoff_is_v_times_hencky(rng):
    # tau_B = V tau_H, and |tau_B - tau_H| <= |V - I| |tau_H|
    for _ in range(200):
        v = random_spd(rng)
        tau_h = hencky_kirchhoff(v, M)
        tau_b = becker_kirchhoff(v, M)
        assert rel_err(tau_b, v @ tau_h) < 1e-10
        lhs = np.linalg.norm(tau_b - tau_h)
        rhs = np.linalg.norm(v - np.eye(3)) * np.linalg.norm(tau_h)
        assert lhs <= rhs * (1.0 + 1e-12) + 1e-14
