"""Coherent states, the stereographic metric coefficient, and its oracles."""

import math

import numpy as np
import pytest

from fuzzydist.coherent import (
    coherent_distance_fd,
    coherent_distance_numeric,
    coherent_drho,
    coherent_metric_coefficient,
    coherent_route_report,
    coherent_state,
    ladder_commutator_norm,
    large_n_scaling_deviation,
    resolution_of_identity_residual,
    richardson_distance_coefficient,
)
from fuzzydist.halfint import HalfInteger
from fuzzydist.sphere import SphereDomainError, build_space

H = HalfInteger


def test_z_zero_is_top_basis_state():
    s = build_space(H(3), 1.0)
    st = coherent_state(s, 0j)
    e0 = np.zeros(s.dim)
    e0[0] = 1.0
    assert np.array_equal(st.amplitudes, e0)


def test_overlap_law():
    """|<n,n|z>|^2 = (1+|z|^2)^(-2n) on a grid of z for several n."""
    for t in (1, 2, 3, 4):
        s = build_space(H(t), 1.0)
        for re in np.linspace(-1, 1, 5):
            for im in np.linspace(-1, 1, 5):
                z = complex(re, im)
                got = coherent_state(s, z).overlap_with_top()
                assert got == pytest.approx((1 + abs(z) ** 2) ** (-t), abs=1e-10)


def test_overlap_worked_values():
    s = build_space(H(1), 1.0)
    assert coherent_state(s, 1.0 + 0j).overlap_with_top() == pytest.approx(0.5, abs=1e-12)
    s = build_space(H(2), 1.0)
    assert coherent_state(s, 0.5 + 0j).overlap_with_top() == pytest.approx(0.64, abs=1e-12)


def test_drho_structure():
    s = build_space(H(2), 1.0)
    dz = 1e-3
    d = coherent_drho(s, dz)
    m = d.matrix
    assert np.trace(m) == pytest.approx(0.0)
    assert np.allclose(m, m.conj().T)
    # tr(drho^2) = 4n |dz|^2
    assert np.trace(m @ m).real == pytest.approx(4.0e-6, rel=1e-12)
    with pytest.raises(SphereDomainError):
        coherent_drho(s, 0)


def test_metric_coefficient_values():
    assert coherent_metric_coefficient(H(2), 1.0, 0j) == pytest.approx(2.0)
    assert coherent_metric_coefficient(H(1), 1.0, 0j) == pytest.approx(math.sqrt(3.0))
    assert coherent_metric_coefficient(H(2), 1.0, 1.0 + 0j) == pytest.approx(1.0)
    # lam scales linearly
    assert coherent_metric_coefficient(H(2), 2.5, 0j) == pytest.approx(5.0)


def test_ladder_commutator_norm_law():
    # |[x_plus/lam, drho]| = sqrt(4n(3n-1)) |dz|, all n, either phase of dz
    for t in (1, 2, 3, 4, 6):
        s = build_space(H(t), 1.0)
        nf = t / 2.0
        for dz in (1e-4, 1e-4j, (0.6 + 0.8j) * 1e-4):
            d = coherent_drho(s, dz)
            got = ladder_commutator_norm(s, d)
            assert got == pytest.approx(math.sqrt(4 * nf * (3 * nf - 1)) * abs(dz), rel=1e-10)


@pytest.mark.parametrize("twice_n", [1, 2, 4])
@pytest.mark.parametrize("z", [0j, 0.5 + 0j, 0.3 + 0.4j])
def test_numeric_route_matches_coefficient(twice_n, z):
    got = coherent_distance_numeric(H(twice_n), 1.0, 1e-4, z)
    want = coherent_metric_coefficient(H(twice_n), 1.0, z) * 1e-4
    assert got == pytest.approx(want, rel=1e-12)


def test_numeric_route_worked_example():
    # (n=1, lam=1, dz=1e-4) -> 2.0e-4 within 1e-8
    assert abs(coherent_distance_numeric(H(2), 1.0, 1e-4) - 2.0e-4) <= 1e-8


def test_numeric_route_phase_independent():
    a = coherent_distance_numeric(H(4), 1.0, 1e-4)
    b = coherent_distance_numeric(H(4), 1.0, 1e-4j)
    assert a == b


def test_numeric_route_rejects_bad_dz():
    with pytest.raises(SphereDomainError):
        coherent_distance_numeric(H(2), 1.0, 0)
    with pytest.raises(SphereDomainError):
        coherent_distance_numeric(H(2), 1.0, 2e-3)


def test_fd_bias_orders():
    """Projector differences carry a linear bias at n = 1/2, quadratic above."""
    c_half = coherent_metric_coefficient(H(1), 1.0, 0j)
    b1 = coherent_distance_fd(H(1), 1.0, 1e-3) / 1e-3 / c_half - 1.0
    b2 = coherent_distance_fd(H(1), 1.0, 1e-4) / 1e-4 / c_half - 1.0
    assert b1 < 0 and b2 < 0
    assert b1 / b2 == pytest.approx(10.0, rel=5e-3)  # one power of dz

    c_one = coherent_metric_coefficient(H(2), 1.0, 0j)
    b1 = coherent_distance_fd(H(2), 1.0, 1e-3) / 1e-3 / c_one - 1.0
    b2 = coherent_distance_fd(H(2), 1.0, 1e-4) / 1e-4 / c_one - 1.0
    assert b1 / b2 == pytest.approx(100.0, rel=5e-3)  # two powers


def test_fd_within_criterion_tolerance():
    for t in (1, 2, 4):
        fd = coherent_distance_fd(H(t), 1.0, 1e-4) / 1e-4
        c = coherent_metric_coefficient(H(t), 1.0, 0j)
        assert abs(fd - c) / c <= 1e-4


def test_richardson_removes_bias():
    for t in (1, 2, 4):
        rich = richardson_distance_coefficient(H(t), 1.0)
        c = coherent_metric_coefficient(H(t), 1.0, 0j)
        assert rich == pytest.approx(c, rel=1e-6)


def test_route_report_sup_ratios():
    """The supremum oracle and the closed-form route are distinct functionals.

    Measured relationship: the constrained supremum is half the closed form
    at n = 1/2, equal at n = 1, and strictly larger from n = 3/2 on. The
    ladder-block norm matches sqrt(4n(3n-1))|dz| while the full Dirac
    seminorm of the same displacement is larger; both are reported.
    """
    rep = coherent_route_report(H(1), 1.0, 1e-4, seed=42)
    assert rep["sup_to_closed_ratio"] == pytest.approx(0.5, abs=1e-5)
    assert rep["ladder_norm_per_dz"] == pytest.approx(rep["ladder_norm_closed"], rel=1e-10)
    assert rep["dirac_seminorm_per_dz"] > rep["ladder_norm_per_dz"]

    rep = coherent_route_report(H(2), 1.0, 1e-4, seed=42)
    assert rep["sup_to_closed_ratio"] == pytest.approx(1.0, abs=1e-5)
    assert rep["pipeline"] == pytest.approx(rep["closed_form"], rel=1e-12)

    rep = coherent_route_report(H(3), 1.0, 1e-4, seed=42)
    assert 1.10 < rep["sup_to_closed_ratio"] < 1.20


def test_large_n_deviation_law():
    # 2/(3n) + O(1/n^2): 1.33% at n = 50, below 1% first at n = 67
    assert large_n_scaling_deviation(H(100)) == pytest.approx(0.013333922053284653, rel=1e-9)
    assert large_n_scaling_deviation(H(134)) < 1e-2
    assert large_n_scaling_deviation(H(132)) > 1e-2
    for t in (100, 200, 400):
        nf = t / 2.0
        assert large_n_scaling_deviation(H(t)) * 3 * nf / 2 == pytest.approx(1.0, abs=0.02)


def test_resolution_of_identity_small_grid():
    # coarse completeness check; the validation registry runs the fine grid
    res = resolution_of_identity_residual(H(2), grid=60)
    assert res <= 1e-2
