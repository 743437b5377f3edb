"""The modulus-squared map ``q -> conj(q) q`` from I+S to real 4x4 matrices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .alg_core import BASIS_NAMES, Biquat, Chirality, decompose, rep_matrix
from .errors import LiftFailed, NotNullquat, NotProperLorentz
from .mink import EMField, LorentzClass, complexified, is_proper_lorentz

RANK_TOL = 1e-9
LIFT_TOL = 1e-9


def _require_s(q: Biquat):
    if q.chirality is not Chirality.S:
        raise ValueError("modulus_squared is defined on I+S")


def modulus_squared_complex(q: Biquat) -> np.ndarray:
    """``conj(rep(q)) @ rep(q)`` before dropping the (vanishing) imaginary part."""
    _require_s(q)
    M = rep_matrix(q)
    return M.conj() @ M


def modulus_squared(q: Biquat) -> np.ndarray:
    return modulus_squared_complex(q).real


def energy_momentum(f: EMField) -> np.ndarray:
    """``T_F = conj(cF) cF / 2``."""
    return modulus_squared(complexified(f)) / 2


_ROW = {n: i for i, n in enumerate(BASIS_NAMES)}


def _coefficient_block(L) -> np.ndarray:
    """Hermitian 4x4 block ``v v^H`` with ``v = (a, b1, b2, b3)``.

    For ``L = conj(q) q`` with ``q = aI + b.(x, y, z)`` the basis coefficients
    are ``|a|^2`` on I, ``conj(a) b_i`` on x_i, ``a conj(b_j)`` on X_j and
    ``b_i conj(b_j)`` on x_i X_j.
    """
    c = decompose(L).coeffs
    low, up = "xyz", "XYZ"
    Q = np.empty((4, 4), dtype=complex)
    Q[0, 0] = c[_ROW["I"]]
    for i in range(3):
        Q[i + 1, 0] = c[_ROW[low[i]]]
        Q[0, i + 1] = c[_ROW[up[i]]]
        for j in range(3):
            Q[i + 1, j + 1] = c[_ROW[low[i] + up[j]]]
    return Q


def lift_lorentz(L) -> Biquat:
    """A preimage of a proper Lorentz matrix in the biquaternion Lorentz group.

    The preimage is unique up to a unit-modulus factor; the gauge used here
    normalizes ``a0**2 - A.A = 1`` and then picks the sign with
    ``Re a0 > 0`` (ties broken on ``Im a0``, then on the first nonzero
    component of ``A``).
    """
    L = np.asarray(L, dtype=float)
    if is_proper_lorentz(L) is not LorentzClass.PROPER_ORTHOCHRONOUS:
        raise NotProperLorentz("input is not a proper orthochronous Lorentz matrix")
    Q = _coefficient_block(L)
    k = int(np.argmax(Q.diagonal().real))
    pivot = Q[k, k].real
    if pivot <= 0:
        raise LiftFailed("coefficient block has no positive diagonal entry")
    v = Q[:, k] / np.sqrt(pivot)
    n = v[0] * v[0] - v[1:] @ v[1:]
    if n == 0:
        raise LiftFailed("lifted element is singular")
    v = v * np.sqrt(abs(n) / n)
    v = v * _sign_gauge(v)
    q = Biquat(v[0], tuple(v[1:]), Chirality.S)
    resid = np.linalg.norm(modulus_squared(q) - L)
    if resid > LIFT_TOL * np.linalg.norm(L):
        raise LiftFailed(f"lift residual {resid:.3e} exceeds tolerance", residual=float(resid))
    return q


def _sign_gauge(v) -> int:
    eps = 1e-12 * np.abs(v).max()
    for z in v:
        if abs(z.real) > eps:
            return 1 if z.real > 0 else -1
        if abs(z.imag) > eps:
            return 1 if z.imag > 0 else -1
    return 1


@dataclass(frozen=True)
class NullquatImage:
    matrix: np.ndarray
    rank: int
    direction: np.ndarray

    @property
    def degenerate(self) -> bool:
        return self.rank == 0


def numerical_rank(M, rtol=RANK_TOL) -> int:
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0:
        return 0
    return int(np.sum(s > rtol * s[0]))


def nullquat_image(q: Biquat, tol: float = 1e-10) -> NullquatImage:
    """Image of a nullquat ``aI + F`` (``a^2 = A.A``) under the modulus map.

    The result has rank 1 (rank 0 for ``q = 0``); its column space is a real
    null line of eigenvectors of ``F`` with eigenvalue ``a``.
    """
    _require_s(q)
    scale = max(1.0, abs(q.a0) ** 2, float(np.vdot(q.vector, q.vector).real))
    if abs(q.norm) > tol * scale:
        raise NotNullquat(f"a0^2 - A.A = {q.norm!r} is not zero")
    M = modulus_squared(q)
    rank = numerical_rank(M)
    if rank == 0:
        return NullquatImage(M, 0, np.zeros(4))
    U, s, _ = np.linalg.svd(M)
    d = U[:, 0]
    d = d * np.sign(d[0]) if d[0] != 0 else d
    return NullquatImage(M, rank, d)
