"""Closed-form spectra of so(3,1) elements and of biquaternions.

Branch convention for the field eigenvalues: ``lambda_F >= 0`` and the sign
of ``lambda_Fstar`` is chosen so that ``lambda_F * lambda_Fstar = -E.B``.
With ``cF = F - i Fstar`` this makes ``lambda_cF**2 = A.A`` for
``A = E + iB``, and the real vector of :func:`principal_eigenvector` is then
a joint eigenvector of ``F``, ``Fstar`` and the energy-momentum tensor.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from .alg_core import Biquat, rep_matrix
from .errors import (
    DegenerateScalar,
    NotAnEigenvalue,
    NotUnitSpatial,
    SpeedNotSubluminal,
)
from .mink import (
    DEFAULT_OBSERVER,
    EMField,
    boost_observer,
    check_observer,
    field_matrices,
    minkowski_inner,
    rest_cross,
    spatial,
)

RADICAND_CLAMP = 1e-12


@dataclass(frozen=True)
class EigenData:
    lambda_T: float
    lambda_F: float
    lambda_Fstar: float
    degenerate: bool = False

    @property
    def lambda_cF(self) -> complex:
        return complex(self.lambda_F, -self.lambda_Fstar)


class SpectralCase(str, enum.Enum):
    TwoEigenvaluesGeneric = "TwoEigenvaluesGeneric"
    NullDegenerate = "NullDegenerate"
    ScalarOnly = "ScalarOnly"


def _clamped_sqrt(x: float, scale: float) -> float:
    if x < 0:
        if x < -RADICAND_CLAMP * max(1.0, scale):
            raise ArithmeticError(f"negative radicand {x!r}")
        return 0.0
    return math.sqrt(x)


def _invariants(E2, B2, EB):
    half = (E2 - B2) / 2
    scale = (E2 + B2) / 2
    lam_T = math.hypot(half, EB)
    # the smaller root would cancel; recover it from |lam_F lam_Fstar| = |E.B|
    big = _clamped_sqrt(lam_T + abs(half), scale)
    small = abs(EB) / big if big > 0 else 0.0
    lam_F, lam_Fs = (big, small) if half >= 0 else (small, big)
    if EB > 0:
        lam_Fs = -lam_Fs
    degenerate = E2 == 0 and B2 == 0
    return EigenData(lam_T, lam_F, lam_Fs, degenerate)


def eigenvalues_em(f: EMField) -> EigenData:
    E, B = f.E, f.B
    return _invariants(float(E @ E), float(B @ B), float(E @ B))


def _frame_fields(f: EMField, u):
    """Electric and magnetic 4-vectors seen by the observer ``u``."""
    F, Fstar, _, _ = field_matrices(f)
    return F @ u, -(Fstar @ u)


def _eigvec(f: EMField, u, sign: int) -> np.ndarray:
    u = check_observer(u)
    E, B = _frame_fields(f, u)
    # the invariants are frame independent; taking them from the coordinate
    # components keeps near-null rounding identical for every observer
    ev = eigenvalues_em(f)
    if ev.degenerate:
        return np.zeros(4)
    energy = float(minkowski_inner(E, E) + minkowski_inner(B, B)) / 2
    s = (ev.lambda_T + energy) * u + rest_cross(u, E, B)
    s = s + sign * (ev.lambda_F * E - ev.lambda_Fstar * B)
    return 2 * s


def principal_eigenvector(f: EMField, u=DEFAULT_OBSERVER) -> np.ndarray:
    """Real joint eigenvector with ``F s = lambda_F s``.

    ``s = 2((lambda_T + (E^2 + B^2)/2) u + E x B + lambda_F E - lambda_Fstar B)``
    with ``E`` and ``B`` measured by ``u``.  Zero for the zero field.
    """
    return _eigvec(f, u, +1)


def negative_eigenvector(f: EMField, u=DEFAULT_OBSERVER) -> np.ndarray:
    """As :func:`principal_eigenvector` with both branch signs flipped."""
    return _eigvec(f, u, -1)


def classify(q: Biquat, tol: float = 1e-12) -> SpectralCase:
    """Spectral case of ``aI + F``, keyed on ``A.A``.

    ``ScalarOnly`` when ``A = 0``; ``NullDegenerate`` when ``A.A = 0`` with
    ``A != 0`` (single eigenvalue ``a0``, 2-dim eigenspace); otherwise two
    eigenvalues ``a0 +- sqrt(A.A)``, each with a 2-dim eigenspace.
    """
    A = q.vector
    n2 = float(np.vdot(A, A).real)
    if math.sqrt(n2) <= tol:
        return SpectralCase.ScalarOnly
    if abs(q.dot(q)) <= tol * n2:
        return SpectralCase.NullDegenerate
    return SpectralCase.TwoEigenvaluesGeneric


def eigenvalues_biquat(q: Biquat) -> tuple:
    mu = cmath.sqrt(q.dot(q))
    return q.a0 + mu, q.a0 - mu


def eigenspace_basis(q: Biquat, lam: complex, tol: float = 1e-9) -> np.ndarray:
    """Two independent eigenvectors of ``rep_matrix(q)`` for ``lam``.

    The eigenspace for ``a0 + mu`` is the column space of ``mu I + F``.
    Returns a 4x2 array whose columns are picked from that matrix by
    greedy pivoting.
    """
    if classify(q) is SpectralCase.ScalarOnly:
        raise DegenerateScalar(
            "every vector is an eigenvector of a scalar element",
            basis=np.eye(4, 2, dtype=complex),
        )
    mu = complex(lam) - q.a0
    AA = q.dot(q)
    scale = max(1.0, abs(AA), abs(mu) ** 2)
    if abs(mu * mu - AA) > tol * scale:
        raise NotAnEigenvalue(f"{lam!r} is not an eigenvalue (mu^2 - A.A = {mu * mu - AA!r})")
    F = rep_matrix(Biquat.pure(q.A, q.chirality))
    P = mu * np.eye(4) + F
    cols = []
    residual = P.copy()
    for _ in range(2):
        k = int(np.argmax(np.linalg.norm(residual, axis=0)))
        cols.append(P[:, k])
        v = residual[:, k] / np.linalg.norm(residual[:, k])
        residual = residual - np.outer(v, v.conj() @ residual)
    return np.column_stack(cols)


def _unit(v, name):
    if abs(float(minkowski_inner(v, v)) - 1) > 1e-9:
        raise NotUnitSpatial(f"{name} is not a unit spatial vector")
    return v


def spin_probability(u, v, w) -> float:
    """``-<u + v, u + w> / 2``, the probability ``sin^2(theta/2)``."""
    u = check_observer(u)
    v = _unit(spatial(u, v), "v")
    w = _unit(spatial(u, w), "w")
    return float(-0.5 * minkowski_inner(u + v, u + w))


def beta_decay_distribution(u, v, b_dir) -> float:
    """``-<sqrt(1 - v^2) u', u + b>`` with ``u'`` the boosted observer.

    Equals ``1 - v cos(theta)``.
    """
    u = check_observer(u)
    v4 = spatial(u, v)
    b = _unit(spatial(u, b_dir), "b_dir")
    v2 = float(minkowski_inner(v4, v4))
    if v2 >= 1:
        raise SpeedNotSubluminal(f"|v| = {math.sqrt(v2)!r} >= 1")
    u_prime = boost_observer(u, v4)
    return float(-minkowski_inner(math.sqrt(1 - v2) * u_prime, u + b))
