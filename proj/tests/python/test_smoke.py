"""Smoke tests for the Python bindings.

These exercise the binding layer end to end on small problems; the heavy
numerical validation lives in the C++ test suites.
"""

import math

import numpy as np
import pytest

import sinespec as ss

PI = math.pi


def test_map_round_trip():
    assert ss.to_computational(0.0) == pytest.approx(PI / 2, abs=1e-15)
    assert ss.to_physical(3 * PI / 4) == pytest.approx(1.0, abs=1e-14)
    for x in np.linspace(-50, 50, 101):
        assert ss.to_physical(ss.to_computational(x)) == pytest.approx(x, rel=1e-12, abs=1e-12)
    with pytest.raises(ValueError):
        ss.to_physical(0.0)


def test_metric_terms():
    t = ss.metric_terms(PI / 4)
    assert t.inv_jac == pytest.approx(0.5, abs=1e-15)
    assert t.inv_jac_deriv == pytest.approx(1.0, abs=1e-15)


def test_quadrature_and_projection():
    rule = ss.build_quadrature(64)
    assert len(rule) == 64
    assert rule.weights.sum() == pytest.approx(PI, abs=1e-12)

    moments = ss.project_1d(lambda y: math.sin(3 * y), rule, 5)
    expected = np.array([0, 0, PI / 2, 0, 0])
    np.testing.assert_allclose(moments, expected, atol=1e-12)

    coeffs = ss.moments_to_coefficients(moments)
    np.testing.assert_allclose(coeffs, [0, 0, 1, 0, 0], atol=1e-12)


def test_parity_restrict():
    kept = ss.parity_restrict(np.ones(4), ss.Symmetry.SYMMETRIC_ABOUT_CENTER)
    np.testing.assert_array_equal(kept, [1.0, 0.0, 1.0, 0.0])


def test_solve_1d_finite_expansion():
    n = 16

    def forcing(x):
        q = 1.0 + x * x
        return 7.0 * q ** -4.5 - 63.0 * x * x * q ** -5.5 + 2.0 * q ** -3.5

    m = ss.assemble_helmholtz_1d(n, 2.0)
    f = ss.project_1d_physical(forcing, ss.build_quadrature(256), n)
    c = ss.solve_1d(m, f)
    expected = np.zeros(n)
    expected[[0, 2, 4, 6]] = [35 / 64, -21 / 64, 7 / 64, -1 / 64]
    np.testing.assert_allclose(c, expected, atol=1e-12)
    assert ss.eval_expansion_physical(c, 0.0) == pytest.approx(1.0, abs=1e-12)


def test_assemblies_agree():
    n = 8
    analytic = ss.assemble_poisson_1d(n).to_dense()
    general = ss.assemble_general_1d(
        lambda y: 1.0, lambda y: 0.0, lambda y: 0.0, 0.0, n, ss.build_quadrature(128)
    ).to_dense()
    np.testing.assert_allclose(analytic, general, atol=1e-10)


def test_kronecker_and_solve_3d():
    n = 3
    m = ss.assemble_helmholtz_1d(n, 2.0)
    rng = np.random.default_rng(5)
    f = rng.standard_normal((n, n, n))

    dense = m.to_dense()
    eye = np.eye(n)
    a3 = (
        np.kron(np.kron(dense, eye), eye)
        + np.kron(np.kron(eye, dense), eye)
        + np.kron(np.kron(eye, eye), dense)
    )
    applied = ss.kronecker_apply(m, f)
    np.testing.assert_allclose(applied.ravel(), a3 @ f.ravel(), atol=1e-12)

    c, report = ss.solve_3d(m, f, tol=1e-13, max_iter=500)
    assert report.converged
    np.testing.assert_allclose(c.ravel(), np.linalg.solve(a3, f.ravel()), atol=1e-8)


def test_hartree_energy_against_dense_kron():
    n = 2
    rng = np.random.default_rng(7)
    c = rng.standard_normal((n, n, n))
    f = rng.standard_normal((n, n, n))
    e = ss.build_overlap_matrix(n).to_dense()
    e3 = np.kron(np.kron(e, e), e)
    expected = c.ravel() @ e3 @ f.ravel()
    assert ss.hartree_energy(c, f, 1.0) == pytest.approx(expected, abs=1e-12)


def test_table_row_matches_reference_value():
    rows = ss.run_table_3d(0.0, [15], tol=1e-12, max_iter=2000)
    assert rows[0]["report"].converged
    assert rows[0]["hartree_energy"] == pytest.approx(1.3169389525, abs=1e-6)


def test_convergence_records():
    records = ss.run_convergence_1d("alg", k=2.0, h=3.5, gamma=2.0, n_list=[16], samples=500)
    assert records[0]["N"] == 16
    assert records[0]["max_norm_error"] <= 1e-13
