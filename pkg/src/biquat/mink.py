"""Minkowski space with signature (-,+,+,+), observers and field matrices."""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .alg_core import Biquat, Chirality, cross_matrix
from .errors import NotAnObserver, NotSkew, SpeedNotSubluminal

ETA = np.diag([-1.0, 1.0, 1.0, 1.0])
ETA.setflags(write=False)

DEFAULT_OBSERVER = np.array([1.0, 0.0, 0.0, 0.0])
DEFAULT_OBSERVER.setflags(write=False)

OBSERVER_TOL = 1e-9


def _frozen(v, n=3) -> np.ndarray:
    a = np.array(v, dtype=float).reshape(n)
    if not np.all(np.isfinite(a)):
        raise ValueError("non-finite vector component")
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class EMField:
    E: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "E", _frozen(self.E))
        object.__setattr__(self, "B", _frozen(self.B))

    def __eq__(self, other):
        return (isinstance(other, EMField) and np.array_equal(self.E, other.E)
                and np.array_equal(self.B, other.B))

    @property
    def A(self) -> np.ndarray:
        """``E + iB``, the vector part of the complexified field."""
        return self.E + 1j * self.B

    @property
    def is_zero(self) -> bool:
        return not (np.any(self.E) or np.any(self.B))


def minkowski_inner(a, b):
    """Complex-bilinear (not sesquilinear) form of signature (-,+,+,+)."""
    a = np.asarray(a)
    b = np.asarray(b)
    return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]


def field_matrices(f: EMField):
    """Return ``(F, Fstar, cF, cbarF)`` for the field ``f``.

    ``F`` is built from ``(E, B)``, its dual ``Fstar`` from ``(-B, E)``,
    and ``cF = F - i Fstar``, ``cbarF = F + i Fstar``.
    """
    F = skew_from_vectors(f.E, f.B)
    Fstar = skew_from_vectors(-f.B, f.E)
    cF = F - 1j * Fstar
    cbarF = F + 1j * Fstar
    return F, Fstar, cF, cbarF


def skew_from_vectors(E, B) -> np.ndarray:
    """The Minkowski-skew matrix ``(0 E^T; E  v -> v x B)``."""
    E = np.asarray(E)
    dtype = np.result_type(E.dtype, np.asarray(B).dtype, float)
    F = np.zeros((4, 4), dtype=dtype)
    F[0, 1:] = E
    F[1:, 0] = E
    F[1:, 1:] = cross_matrix(B)
    return F


def is_minkowski_skew(F, tol=1e-10) -> bool:
    F = np.asarray(F)
    scale = max(1.0, np.linalg.norm(F))
    return np.linalg.norm(F.T + ETA @ F @ ETA) <= tol * scale


def field_from_matrix(F, tol=1e-10) -> EMField:
    """Inverse of the ``F`` part of :func:`field_matrices`."""
    F = np.asarray(F)
    if np.iscomplexobj(F):
        if np.abs(F.imag).max(initial=0.0) > tol * max(1.0, np.abs(F).max()):
            raise NotSkew("matrix is not real")
        F = F.real
    if F.shape != (4, 4) or not is_minkowski_skew(F, tol):
        raise NotSkew("matrix is not Minkowski-skew (F^T != -eta F eta)")
    E = F[1:, 0]
    B = np.array([F[2, 3], F[3, 1], F[1, 2]])
    return EMField(E, B)


def complexified(f: EMField) -> Biquat:
    """``cF`` as an element of S."""
    return Biquat.pure(f.A, Chirality.S)


class LorentzClass(str, enum.Enum):
    PROPER_ORTHOCHRONOUS = "proper-orthochronous"
    OTHER_COMPONENT = "other-component"
    NOT_LORENTZ = "not-lorentz"


def is_proper_lorentz(L, tol=1e-9) -> LorentzClass:
    if tol <= 0:
        raise ValueError("tol must be positive")
    L = np.asarray(L)
    if L.shape != (4, 4) or np.iscomplexobj(L) and np.abs(L.imag).max() > tol:
        return LorentzClass.NOT_LORENTZ
    L = np.real(L)
    scale = max(1.0, np.linalg.norm(L) ** 2)
    if np.linalg.norm(L.T @ ETA @ L - ETA) > tol * scale:
        return LorentzClass.NOT_LORENTZ
    if np.linalg.det(L) > 0 and L[0, 0] >= 1 - tol:
        return LorentzClass.PROPER_ORTHOCHRONOUS
    return LorentzClass.OTHER_COMPONENT


def check_observer(u, tol=OBSERVER_TOL) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    if u.shape != (4,):
        raise NotAnObserver("observer must be a 4-vector")
    norm = minkowski_inner(u, u)
    if abs(norm + 1) > tol or u[0] <= 0:
        raise NotAnObserver(f"<u,u> = {norm!r}, expected -1 with u[0] > 0")
    return u


def spatial(u, w, tol=OBSERVER_TOL) -> np.ndarray:
    """Embed ``w`` in the rest space of ``u``.

    A 3-vector is read in the coordinate frame (time component 0); a
    4-vector is taken as given.  Either way it must be orthogonal to ``u``.
    """
    w = np.asarray(w, dtype=float)
    if w.shape == (3,):
        w = np.concatenate([[0.0], w])
    elif w.shape != (4,):
        raise ValueError("spatial vector must have 3 or 4 components")
    if abs(minkowski_inner(u, w)) > tol * max(1.0, np.linalg.norm(w)):
        raise ValueError("vector is not orthogonal to the observer")
    return w


def boost_observer(u, w) -> np.ndarray:
    """``u' = (u + w) / sqrt(1 - w^2)``."""
    u = check_observer(u)
    w = spatial(u, w)
    w2 = minkowski_inner(w, w)
    if w2 >= 1:
        raise SpeedNotSubluminal(f"|w| = {np.sqrt(w2)!r} >= 1")
    return (u + w) / np.sqrt(1 - w2)


_LEVI_CIVITA = np.zeros((4, 4, 4, 4))
for _p in itertools.permutations(range(4)):
    _LEVI_CIVITA[_p] = np.linalg.det(np.eye(4)[list(_p)])


def rest_cross(u, a, b) -> np.ndarray:
    """Cross product of two vectors in the rest space of ``u``.

    Reduces to the ordinary ``a x b`` for ``u = (1, 0, 0, 0)``.
    """
    low = -np.einsum("abcd,b,c,d->a", _LEVI_CIVITA, u, a, b)
    return ETA @ low
