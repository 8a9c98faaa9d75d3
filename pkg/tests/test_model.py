"""State constructions, the three spectrum routes, and the PPT boundary."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from werner.errors import DimensionMismatch, PhysicalRangeError, WernerError
from werner.linalg import partial_transpose_b
from werner.model import (
    WernerParams,
    extract_f,
    flip_operator,
    invariance_residual,
    ppt_check,
    pt_spectrum_closed_form,
    random_unitary,
    spectrum_closed_form,
    spectrum_via_transform,
    spinor_coefficients,
    werner_dense,
    werner_pt,
    werner_spinor,
)
from werner.pauli import all_strings, kron, pauli_matrix

fs = st.floats(-1.0, 1.0, allow_nan=False)
ps = st.integers(1, 2)


def test_params_validation():
    with pytest.raises(ValueError):
        WernerParams(0, 0.5)
    with pytest.raises(ValueError):
        WernerParams(1.5, 0.5)
    with pytest.raises(ValueError):
        WernerParams(1, float("nan"))
    params = WernerParams(3, 0.25)
    assert params.d == 8
    assert params.require_physical() is params
    with pytest.raises(PhysicalRangeError):
        WernerParams(1, 1.0000001).require_physical()
    with pytest.raises(PhysicalRangeError):
        werner_dense(WernerParams(1, -1.1))


def test_flip_operator_frozen():
    p2 = flip_operator(2)
    expect = np.zeros((4, 4))
    expect[0, 0] = expect[3, 3] = expect[1, 2] = expect[2, 1] = 1.0
    assert np.array_equal(p2, expect)
    with pytest.raises(DimensionMismatch):
        flip_operator(3)


@pytest.mark.parametrize("d", [2, 4, 8])
def test_flip_operator_algebra(d):
    p = flip_operator(d)
    assert np.array_equal(p @ p, np.eye(d * d))
    assert np.trace(p).real == d
    # swap acts as advertised on computational kets
    for i, j in [(0, 1), (1, 0), (d - 1, 0)]:
        ket = np.zeros(d * d)
        ket[i * d + j] = 1.0
        out = p @ ket
        assert out[j * d + i] == 1.0


def test_flip_equals_string_sum():
    # P = (1/d) sum_s sigma_s (x) sigma_s
    for p in (1, 2):
        d = 2**p
        acc = sum(np.kron(pauli_matrix(s), pauli_matrix(s)) for s in all_strings(p))
        assert np.allclose(acc / d, flip_operator(d), atol=1e-12)


@settings(deadline=None, max_examples=30)
@given(ps, fs)
def test_dense_and_spinor_agree(p, f):
    params = WernerParams(p, f)
    assert np.allclose(werner_dense(params), werner_spinor(params), atol=1e-14)


@settings(deadline=None, max_examples=30)
@given(ps, fs)
def test_state_is_valid_density_matrix(p, f):
    rho = werner_dense(WernerParams(p, f))
    assert np.trace(rho).real == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(rho, rho.conj().T, atol=1e-14)
    assert np.linalg.eigvalsh(rho).min() >= -1e-12


@settings(deadline=None, max_examples=30)
@given(ps, fs)
def test_extract_f_roundtrip(p, f):
    params = WernerParams(p, f)
    assert extract_f(werner_dense(params), p) == pytest.approx(f, abs=1e-12)


def test_extract_f_shape_check():
    with pytest.raises(DimensionMismatch):
        extract_f(np.eye(4) / 4, 2)


def test_spinor_coefficients_frozen():
    # p=1, f=0: (1/4, -1/12, -1/12, -1/12)
    a = spinor_coefficients(WernerParams(1, 0.0))
    assert np.allclose(a, [0.25, -1 / 12, -1 / 12, -1 / 12], atol=1e-15)
    # coefficient times string (x) string sums back to the state
    rho = sum(
        a[r] * np.kron(pauli_matrix(s), pauli_matrix(s))
        for r, s in enumerate(all_strings(1))
    )
    assert np.allclose(rho, werner_dense(WernerParams(1, 0.0)), atol=1e-14)


def test_spectrum_closed_form_frozen():
    # p=1: (1-f)/2 once, (1+f)/6 three times; ascending at f=0.2
    spec = spectrum_closed_form(WernerParams(1, 0.2))
    assert spec.multiplicities == (3, 1)
    assert spec.values[0] == pytest.approx(0.2, abs=1e-15)
    assert spec.values[1] == pytest.approx(0.4, abs=1e-15)


def test_singlet_spectrum():
    spec = spectrum_closed_form(WernerParams(1, -1.0))
    assert spec.pairs == ((0.0, 3), (1.0, 1))


def test_p2_f1_spectrum():
    spec = spectrum_closed_form(WernerParams(2, 1.0))
    assert spec.multiplicities == (6, 10)
    assert spec.values[0] == 0.0
    assert spec.values[1] == pytest.approx(0.1, abs=1e-15)


def test_degenerate_point_merges():
    # at f = 1/d both branches coincide at 1/d^2
    spec = spectrum_closed_form(WernerParams(2, 0.25))
    assert spec.pairs == ((0.0625, 16),)


@settings(deadline=None, max_examples=40)
@given(st.integers(1, 3), fs)
def test_transform_route_matches_closed_form(p, f):
    params = WernerParams(p, f)
    assert spectrum_via_transform(params).isclose(spectrum_closed_form(params), 1e-12)


@settings(deadline=None, max_examples=20)
@given(ps, fs)
def test_closed_form_matches_lapack(p, f):
    params = WernerParams(p, f)
    vals = np.linalg.eigvalsh(werner_dense(params))
    assert np.allclose(sorted(spectrum_closed_form(params).flatten()), vals, atol=1e-10)


@settings(deadline=None, max_examples=30)
@given(ps, fs)
def test_unit_trace_audit(p, f):
    params = WernerParams(p, f)
    for spec in (spectrum_closed_form(params), spectrum_via_transform(params)):
        assert abs(spec.weighted_sum() - 1.0) < 1e-10


@settings(deadline=None, max_examples=30)
@given(ps, fs)
def test_pt_routes_agree(p, f):
    params = WernerParams(p, f)
    d = params.d
    direct = partial_transpose_b(werner_dense(params), d, d)
    assert np.allclose(werner_pt(params), direct, atol=1e-13)


def test_pt_spectrum_frozen_p2_f1():
    spec = pt_spectrum_closed_form(WernerParams(2, 1.0))
    assert spec.pairs[0][0] == pytest.approx(0.05, abs=1e-15)
    assert spec.pairs[0][1] == 15
    assert spec.pairs[1] == (0.25, 1)


@settings(deadline=None, max_examples=30)
@given(ps, fs)
def test_pt_spectrum_matches_lapack(p, f):
    params = WernerParams(p, f)
    vals = np.linalg.eigvalsh(werner_pt(params))
    closed = sorted(pt_spectrum_closed_form(params).flatten())
    assert np.allclose(closed, vals, atol=1e-10)


def test_ppt_boundary():
    for p in (1, 2, 3):
        assert not ppt_check(WernerParams(p, -0.01))
        assert ppt_check(WernerParams(p, 0.0))
        assert ppt_check(WernerParams(p, 0.01))
    with pytest.raises(PhysicalRangeError):
        ppt_check(WernerParams(1, 2.0))


def test_random_unitary_properties():
    u = random_unitary(4, 42)
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-12)
    assert np.array_equal(u, random_unitary(4, 42))
    assert not np.allclose(u, random_unitary(4, 43))


@pytest.mark.parametrize("p", [1, 2])
@pytest.mark.parametrize("seed", [0, 7])
def test_invariance_under_uxu(p, seed):
    params = WernerParams(p, 0.37)
    rho = werner_dense(params)
    assert invariance_residual(rho, random_unitary(params.d, seed)) < 1e-12


def test_invariance_residual_detects_noninvariant_state():
    rho = np.diag([0.7, 0.1, 0.1, 0.1]).astype(complex)
    assert invariance_residual(rho, random_unitary(2, 5)) > 1e-3


def test_invariance_rejects_non_unitary():
    rho = werner_dense(WernerParams(1, 0.0))
    with pytest.raises(WernerError):
        invariance_residual(rho, np.ones((2, 2)))
    with pytest.raises(DimensionMismatch):
        invariance_residual(rho, np.eye(3))


def test_kron_convention_consistency():
    # flip conjugation symmetry: P rho P = rho, using the same kron order
    params = WernerParams(2, 0.3)
    rho = werner_dense(params)
    p = flip_operator(4)
    assert np.allclose(p @ rho @ p, rho, atol=1e-14)
    u = random_unitary(4, 11)
    w = kron(u, u)
    assert np.allclose(w @ rho @ w.conj().T, rho, atol=1e-12)
