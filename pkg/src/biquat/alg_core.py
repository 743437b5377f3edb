"""4x4 complex matrix representation of the biquaternions.

An element ``aI + F`` is stored by its canonical coordinates: the scalar
part ``a0`` and the complex 3-vector ``A`` with ``F u = A`` for the rest
observer ``u = (1, 0, 0, 0)``.  The chirality flag selects which of the two
commuting copies of the pure part is meant:

    S     lower-right block  v -> v x (-iA)
    SBar  lower-right block  v -> v x (+iA)

The sixteen products of ``{I, x, y, z}`` with ``{I, X, Y, Z}`` span M4(C).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import ChiralityMismatch, NotInRepresentation

REP_TOL = 1e-10
NULL_RTOL = 8 * np.finfo(float).eps

BASIS_NAMES = (
    "x", "X", "y", "Y", "z", "Z",
    "xY", "yX", "yZ", "zY", "zX", "xZ",
    "xX", "yY", "zZ", "I",
)


class Chirality(str, enum.Enum):
    S = "S"
    SBar = "SBar"

    @property
    def flipped(self) -> "Chirality":
        return Chirality.SBar if self is Chirality.S else Chirality.S

    @property
    def sign(self) -> int:
        # sign of i in the cross-product block
        return -1 if self is Chirality.S else 1


def _as_complex(value) -> complex:
    c = complex(value)
    if not (np.isfinite(c.real) and np.isfinite(c.imag)):
        raise ValueError(f"non-finite component {value!r}")
    return c


@dataclass(frozen=True)
class Biquat:
    a0: complex
    A: tuple
    chirality: Chirality = Chirality.S

    def __post_init__(self):
        A = tuple(_as_complex(v) for v in self.A)
        if len(A) != 3:
            raise ValueError("vector part must have three components")
        object.__setattr__(self, "a0", _as_complex(self.a0))
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "chirality", Chirality(self.chirality))

    @classmethod
    def pure(cls, A, chirality=Chirality.S) -> "Biquat":
        return cls(0, tuple(A), chirality)

    @classmethod
    def scalar(cls, a0, chirality=Chirality.S) -> "Biquat":
        return cls(a0, (0, 0, 0), chirality)

    @property
    def vector(self) -> np.ndarray:
        return np.array(self.A, dtype=complex)

    @property
    def is_pure(self) -> bool:
        return self.a0 == 0

    def dot(self, other: "Biquat") -> complex:
        """Complex-bilinear dot product of the vector parts."""
        return complex(np.dot(self.vector, other.vector))

    def square(self) -> complex:
        """``A.A``, set to exactly 0 when it is within rounding of 0.

        The sum of squares of a null vector carries an error of a few ulps
        of ``|A|^2``; square roots of it would turn that into ``sqrt(eps)``.
        """
        AA = self.dot(self)
        if abs(AA) <= NULL_RTOL * float(np.vdot(self.vector, self.vector).real):
            return 0j
        return AA

    @property
    def norm(self) -> complex:
        """``a0**2 - A.A``; ``(aI + F)(aI - F) = norm * I``."""
        return self.a0 * self.a0 - self.dot(self)

    def matrix(self) -> np.ndarray:
        return rep_matrix(self)

    def __add__(self, other: "Biquat") -> "Biquat":
        _check_same(self, other)
        return Biquat(self.a0 + other.a0, tuple(self.vector + other.vector), self.chirality)

    def __sub__(self, other: "Biquat") -> "Biquat":
        return self + (-other)

    def __neg__(self) -> "Biquat":
        return Biquat(-self.a0, tuple(-self.vector), self.chirality)

    def __mul__(self, other):
        if isinstance(other, Biquat):
            return biquat_mul(self, other)
        c = complex(other)
        return Biquat(c * self.a0, tuple(c * self.vector), self.chirality)

    def __rmul__(self, other):
        return self * other


def cross_matrix(c) -> np.ndarray:
    """Matrix of ``v -> v x c``."""
    c1, c2, c3 = c
    dtype = np.result_type(np.asarray(c).dtype, float)
    return np.array([[0, c3, -c2], [-c3, 0, c1], [c2, -c1, 0]], dtype=dtype)


def rep_matrix(q: Biquat) -> np.ndarray:
    A = q.vector
    M = np.zeros((4, 4), dtype=complex)
    M[0, 1:] = A
    M[1:, 0] = A
    M[1:, 1:] = cross_matrix(q.chirality.sign * 1j * A)
    M += q.a0 * np.eye(4)
    return M


def from_matrix(M, chirality=Chirality.S, tol=REP_TOL) -> Biquat:
    M = np.asarray(M, dtype=complex)
    q = Biquat(M[0, 0], tuple(M[1:, 0]), Chirality(chirality))
    scale = np.linalg.norm(M)
    resid = np.linalg.norm(rep_matrix(q) - M)
    if resid > tol * scale:
        raise NotInRepresentation(
            f"matrix is not in I+{q.chirality.value}: residual {resid:.3e}",
            residual=float(resid),
        )
    return q


def _check_same(p: Biquat, q: Biquat):
    if p.chirality is not q.chirality:
        raise ChiralityMismatch(
            f"cannot combine {p.chirality.value} with {q.chirality.value} inside I+S; "
            "use dense matrix arithmetic"
        )


def biquat_mul(p: Biquat, q: Biquat) -> Biquat:
    """Product inside ``I + S`` (or ``I + SBar``).

    With ``FG = (A.B) I + [F, G]/2`` and ``[F, G] u = -2 s i A x B`` where
    ``s`` is the chirality sign of the cross block.
    """
    _check_same(p, q)
    A, B = p.vector, q.vector
    a0 = p.a0 * q.a0 + complex(np.dot(A, B))
    vec = p.a0 * B + q.a0 * A - p.chirality.sign * 1j * np.cross(A, B)
    return Biquat(a0, tuple(vec), p.chirality)


def inner(p: Biquat, q: Biquat) -> complex:
    """``<F, G> = trace(FG + GF) / 8`` for the pure parts."""
    F = rep_matrix(Biquat.pure(p.A, p.chirality))
    G = rep_matrix(Biquat.pure(q.A, q.chirality))
    return complex(np.trace(F @ G + G @ F)) / 8


def conjugate(q: Biquat) -> Biquat:
    """Entrywise complex conjugate; lands in the other chirality."""
    return Biquat(q.a0.conjugate(), tuple(np.conj(q.vector)), q.chirality.flipped)


def transpose(q: Biquat) -> Biquat:
    return Biquat(q.a0, q.A, q.chirality.flipped)


def eta_conjugate(q: Biquat) -> Biquat:
    """``eta M eta`` with ``eta = diag(-1, 1, 1, 1)``."""
    return Biquat(q.a0, tuple(-q.vector), q.chirality.flipped)


@lru_cache(maxsize=None)
def _named_basis() -> dict:
    e = np.eye(3)
    mats = {}
    for name, axis in zip("xyz", e):
        mats[name] = rep_matrix(Biquat.pure(axis, Chirality.S))
        mats[name.upper()] = rep_matrix(Biquat.pure(axis, Chirality.SBar))
    out = {}
    for name in BASIS_NAMES:
        if name == "I":
            out[name] = np.eye(4, dtype=complex)
        elif len(name) == 1:
            out[name] = mats[name]
        else:
            out[name] = mats[name[0]] @ mats[name[1]]
    for m in out.values():
        m.setflags(write=False)
    return out


def basis_16() -> list:
    named = _named_basis()
    return [named[n].copy() for n in BASIS_NAMES]


@lru_cache(maxsize=None)
def _total() -> np.ndarray:
    named = _named_basis()
    T = np.column_stack([named[n].flatten(order="F") for n in BASIS_NAMES])
    T.setflags(write=False)
    return T


@dataclass(frozen=True)
class BasisDecomp:
    coeffs: tuple

    def __getitem__(self, name: str) -> complex:
        return self.coeffs[BASIS_NAMES.index(name)]

    def as_dict(self) -> dict:
        return dict(zip(BASIS_NAMES, self.coeffs))

    def recompose(self) -> np.ndarray:
        return recompose(self.coeffs)


def decompose(M) -> BasisDecomp:
    M = np.asarray(M, dtype=complex)
    if M.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    c = np.linalg.solve(_total(), M.flatten(order="F"))
    return BasisDecomp(tuple(complex(v) for v in c))


def recompose(coeffs) -> np.ndarray:
    v = _total() @ np.asarray(coeffs, dtype=complex)
    return v.reshape((4, 4), order="F")

