"""Exponential and logarithm on I+S and on so(3,1).

For a pure element ``F`` of S with ``F^2 = lam^2 I``::

    exp(F) = cosh(lam) I + sinh(lam)/lam F

and a real generator splits as ``F = cF/2 + conj(cF)/2`` with the two halves
commuting, so ``exp(F) = conj(E) E`` for ``E = exp(cF/2)``.
"""

from __future__ import annotations

import cmath

import numpy as np

from .alg_core import Biquat
from .errors import NotBiquatLorentz, NotExponentialInS, NotPure, NotSkew
from .mink import complexified, field_from_matrix, is_minkowski_skew, skew_from_vectors
from .modsq import lift_lorentz, modulus_squared_complex

SERIES_CUTOFF = 1e-3
LORENTZ_TOL = 1e-9


def sinhc(lam: complex) -> complex:
    """``sinh(lam)/lam`` with the removable singularity filled in."""
    if abs(lam) < SERIES_CUTOFF:
        l2 = lam * lam
        return 1 + l2 / 6 + l2 * l2 / 120
    return cmath.sinh(lam) / lam


def exp_S(q: Biquat) -> Biquat:
    if q.a0 != 0:
        raise NotPure("exp_S takes a pure element; split aI + F as e^a exp_S(F) yourself")
    lam = cmath.sqrt(q.square())
    return Biquat(cmath.cosh(lam), tuple(sinhc(lam) * q.vector), q.chirality)


def exp_so31(F) -> np.ndarray:
    F = np.asarray(F)
    if F.shape != (4, 4) or not is_minkowski_skew(F):
        raise NotSkew("generator is not Minkowski-skew")
    half = exp_S(complexified(field_from_matrix(F)) * 0.5)
    return modulus_squared_complex(half).real


def log_biquat_lorentz(l: Biquat, tol: float = LORENTZ_TOL) -> Biquat:
    """A pure ``D`` with ``exp_S(D) = l`` for ``l = aI + H``, ``a^2 - H.H = 1``.

    Solves ``e^lam = a + sqrt(a^2 - 1)`` on principal branches, then
    ``D = lam/sinh(lam) H``.  ``-I + N`` with ``N`` null and nonzero has no
    logarithm in S.
    """
    a = l.a0
    H = l.vector
    scale = max(1.0, abs(a) ** 2)
    if abs(l.norm - 1) > tol * scale:
        raise NotBiquatLorentz(f"a^2 - H.H = {l.norm!r}, expected 1")
    r = cmath.sqrt(a * a - 1)  # = sinh(lam)
    plus, minus = a + r, a - r
    # (a + r)(a - r) = 1; avoid cancellation in the small root
    e_lam = plus if abs(plus) >= abs(minus) else 1 / minus
    lam = cmath.log(e_lam)
    h_scale = float(np.linalg.norm(H))
    if abs(r) > 1e-7 * max(1.0, abs(a)):
        return Biquat(0, tuple((lam / r) * H), l.chirality)
    # a = +-1 and H (numerically) null
    if a.real > 0:
        return Biquat(0, tuple(H), l.chirality)
    if h_scale <= tol:
        # -I = exp of any pure element with eigenvalue i*pi
        return Biquat(0, (1j * np.pi, 0, 0), l.chirality)
    raise NotExponentialInS("-I + N with N null and nonzero is not an exponential in S")


def log_so31(L) -> np.ndarray:
    """A real Minkowski-skew ``F`` with ``exp_so31(F) = L``.

    Lifts ``L`` to the biquaternion Lorentz group and takes ``F = cD + conj(cD)``
    for a complex logarithm ``cD`` of the lift.  When the lift is ``-I + N``
    the opposite point ``I - N`` of the same fiber is used instead; both have
    modulus square ``L``.
    """
    ell = lift_lorentz(L)
    try:
        D = log_biquat_lorentz(ell)
    except NotExponentialInS:
        D = log_biquat_lorentz(-ell)
    return 2 * skew_from_vectors(np.real(D.vector), np.imag(D.vector))
