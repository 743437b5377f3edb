import numpy as np
import pytest
from hypothesis import given, strategies as st

from biquat.alg_core import Biquat, rep_matrix
from biquat.eigen import (
    SpectralCase,
    beta_decay_distribution,
    classify,
    eigenspace_basis,
    eigenvalues_biquat,
    eigenvalues_em,
    negative_eigenvector,
    principal_eigenvector,
    spin_probability,
)
from biquat.errors import DegenerateScalar, NotAnEigenvalue, NotUnitSpatial, SpeedNotSubluminal
from biquat.mink import EMField, boost_observer, field_matrices, minkowski_inner
from biquat.modsq import energy_momentum
from conftest import rvec3
from oracles import char_poly_roots, field_tensor

U = np.array([1.0, 0, 0, 0])


def test_eigenvalue_examples():
    ev = eigenvalues_em(EMField((1, 0, 0), (0, 0, 0)))
    assert (ev.lambda_T, ev.lambda_F, ev.lambda_Fstar) == (0.5, 1.0, 0.0)
    F = field_tensor((1, 0, 0), (0, 0, 0))
    assert sorted(np.round(char_poly_roots(F).real, 12)) == [-1, 0, 0, 1]
    ev = eigenvalues_em(EMField((0, 0, 0), (0, 0, 0)))
    assert (ev.lambda_T, ev.lambda_F, ev.lambda_Fstar, ev.degenerate) == (0, 0, 0, True)
    ev = eigenvalues_em(EMField((1, 0, 0), (0, 1, 0)))
    assert (ev.lambda_T, ev.lambda_F, ev.lambda_Fstar) == (0, 0, 0)
    N = field_tensor((1, 0, 0), (0, 1, 0))
    assert not np.any(np.linalg.matrix_power(N, 4))


@given(rvec3, rvec3)
def test_eigenvalues_against_char_poly(E, B):
    f = EMField(E, B)
    ev = eigenvalues_em(f)
    scale = max(1.0, float(f.E @ f.E + f.B @ f.B))
    roots = char_poly_roots(field_tensor(E, B))
    # F has eigenvalues +-lambda_F and +-i lambda_Fstar
    expected = [ev.lambda_F, -ev.lambda_F, 1j * ev.lambda_Fstar, -1j * ev.lambda_Fstar]
    for r in expected:
        assert np.abs(roots - r).min() <= 1e-5 * np.sqrt(scale)
    assert abs(ev.lambda_F * ev.lambda_Fstar + float(f.E @ f.B)) <= 1e-9 * scale
    assert ev.lambda_cF ** 2 == pytest.approx(complex(f.A @ f.A), abs=1e-9 * scale)


def test_principal_eigenvector_examples():
    assert np.array_equal(principal_eigenvector(EMField((1, 0, 0), (0, 0, 0)), U), [2, 2, 0, 0])
    s = principal_eigenvector(EMField((1, 0, 0), (0, 1, 0)), U)
    assert np.array_equal(s, [2, 0, 0, 2])
    assert not np.any(field_tensor((1, 0, 0), (0, 1, 0)) @ s)
    assert not np.any(principal_eigenvector(EMField((0, 0, 0), (0, 0, 0))))


def test_negative_eigenvector_examples():
    s = negative_eigenvector(EMField((1, 0, 0), (0, 0, 0)), U)
    assert np.array_equal(s, [2, -2, 0, 0])
    assert np.array_equal(field_tensor((1, 0, 0), (0, 0, 0)) @ s, -s)
    f = EMField((1, 0, 0), (0, 1, 0))
    assert np.array_equal(negative_eigenvector(f), principal_eigenvector(f))
    assert not np.any(negative_eigenvector(EMField((0, 0, 0), (0, 0, 0))))


def _random_observer(rng):
    v = rng.normal(size=3)
    v *= 0.9 * rng.random() / np.linalg.norm(v)
    return boost_observer(U, v)


def test_joint_eigenvector_random(rng):
    for _ in range(500):
        f = EMField(rng.normal(size=3), rng.normal(size=3))
        u = _random_observer(rng)
        F, Fs, _, _ = field_matrices(f)
        T = energy_momentum(f)
        ev = eigenvalues_em(f)
        for sign, s in ((1, principal_eigenvector(f, u)), (-1, negative_eigenvector(f, u))):
            n = np.linalg.norm(s)
            assert np.linalg.norm(F @ s - sign * ev.lambda_F * s) <= 1e-9 * n * max(1, ev.lambda_F)
            assert np.linalg.norm(Fs @ s - sign * ev.lambda_Fstar * s) <= 1e-9 * n * max(1, abs(ev.lambda_Fstar))
            assert np.linalg.norm(T @ s - ev.lambda_T * s) <= 1e-9 * n * max(1, ev.lambda_T)


def test_negative_eigenvector_time_component(rng):
    for _ in range(200):
        f = EMField(rng.normal(size=3), rng.normal(size=3))
        ev = eigenvalues_em(f)
        lhs = minkowski_inner(U, negative_eigenvector(f, U))
        rhs = -2 * (ev.lambda_T + float(f.E @ f.E + f.B @ f.B) / 2)
        assert lhs == pytest.approx(rhs, rel=1e-10)


def test_null_field_eigenvector_is_null(rng):
    for _ in range(100):
        E = rng.normal(size=3)
        B = np.cross(E, rng.normal(size=3))
        B *= np.linalg.norm(E) / np.linalg.norm(B)
        s = principal_eigenvector(EMField(E, B), _random_observer(rng))
        assert abs(minkowski_inner(s, s)) <= 1e-9 * float(s @ s)


def test_classify_examples():
    assert classify(Biquat(3 + 1j, (0, 0, 0))) is SpectralCase.ScalarOnly
    assert classify(Biquat(0, (1, 1j, 0))) is SpectralCase.NullDegenerate
    q = Biquat(0.5, (1, 0, 0))
    assert classify(q) is SpectralCase.TwoEigenvaluesGeneric
    assert sorted(np.linalg.eigvals(rep_matrix(q)).real.round(12)) == [-0.5, -0.5, 1.5, 1.5]
    assert sorted(np.real(eigenvalues_biquat(q))) == [-0.5, 1.5]


def test_classify_against_brute_force(rng):
    for k in range(1000):
        A = rng.normal(size=3) + 1j * rng.normal(size=3)
        if k % 3 == 0:
            A = np.array([1, 1j, 0]) * (rng.normal() + 1j * rng.normal())  # null direction
        q = Biquat(rng.normal() + 1j * rng.normal(), tuple(A))
        M = rep_matrix(q)
        vals = np.linalg.eigvals(M)
        distinct = len({complex(np.round(v, 6)) for v in vals})
        case = classify(q, tol=1e-12)
        if case is SpectralCase.TwoEigenvaluesGeneric:
            assert distinct == 2
        else:
            # one eigenvalue; a null F is not diagonalizable so use the rank of M - a0 I
            assert np.allclose(vals, q.a0, atol=1e-6)
            rank = np.linalg.matrix_rank(M - q.a0 * np.eye(4), tol=1e-9)
            assert rank == (0 if case is SpectralCase.ScalarOnly else 2)


def test_eigenspace_basis_null_case():
    q = Biquat(0, (1, 1j, 0))
    V = eigenspace_basis(q, 0)
    target = np.column_stack([[0, 1, 1j, 0], [1, 0, 0, 1]])
    # both target vectors lie in span(V)
    coef, *_ = np.linalg.lstsq(V, target, rcond=None)
    assert np.abs(V @ coef - target).max() < 1e-12
    assert np.linalg.matrix_rank(V) == 2


def test_eigenspace_basis_generic(rng):
    for _ in range(100):
        q = Biquat(rng.normal(), tuple(rng.normal(size=3) + 1j * rng.normal(size=3)))
        M = rep_matrix(q)
        for lam in eigenvalues_biquat(q):
            V = eigenspace_basis(q, lam)
            assert np.abs(M @ V - lam * V).max() <= 1e-9 * max(1, np.abs(V).max())
            assert np.linalg.matrix_rank(V, tol=1e-9) == 2


def test_eigenspace_basis_errors():
    with pytest.raises(DegenerateScalar) as exc:
        eigenspace_basis(Biquat(2, (0, 0, 0)), 2)
    assert exc.value.basis.shape == (4, 2)
    with pytest.raises(NotAnEigenvalue):
        eigenspace_basis(Biquat(0, (1, 0, 0)), 3)


def test_spin_probability_examples():
    v = np.array([0, 0, 1.0])
    assert spin_probability(U, v, v) == 0
    assert spin_probability(U, v, -v) == 1
    assert spin_probability(U, v, [1, 0, 0]) == 0.5
    with pytest.raises(NotUnitSpatial):
        spin_probability(U, [0, 0, 2], v)


@given(st.floats(0, np.pi), st.floats(0, np.pi), st.floats(0, 2 * np.pi))
def test_spin_probability_symmetry(t1, t2, phi):
    v = np.array([np.sin(t1), 0, np.cos(t1)])
    w = np.array([np.sin(t2) * np.cos(phi), np.sin(t2) * np.sin(phi), np.cos(t2)])
    p = spin_probability(U, v, w)
    assert p == pytest.approx(spin_probability(U, w, v), abs=1e-14)
    c, s = np.cos(0.7), np.sin(0.7)
    R = np.array([[c, -s, 0], [s, c, 0], [0, 0, 1]]) @ np.array([[1, 0, 0], [0, c, -s], [0, s, c]])
    assert p == pytest.approx(spin_probability(U, R @ v, R @ w), abs=1e-12)


def test_beta_decay_examples():
    b = np.array([0, 0, 1.0])
    assert beta_decay_distribution(U, [0, 0, 0], b) == pytest.approx(1, abs=1e-15)
    assert beta_decay_distribution(U, [0, 0, 0.5], b) == pytest.approx(0.5, abs=1e-15)
    assert beta_decay_distribution(U, [0.5, 0, 0], b) == pytest.approx(1, abs=1e-15)
    with pytest.raises(SpeedNotSubluminal):
        beta_decay_distribution(U, [0, 0, 1.5], b)
