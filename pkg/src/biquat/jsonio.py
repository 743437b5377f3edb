"""JSON encodings shared by the CLI.

Complex numbers are ``[re, im]``, complex matrices are row-major arrays of
such pairs, real matrices and 4-vectors are plain float arrays.  Floats are
written with Python's shortest round-trip repr, so identical values always
serialize to identical bytes.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .alg_core import BASIS_NAMES, Biquat, Chirality
from .bundle import DegeneracyEvent, HolonomyResult, ParamPath, TraceResult
from .mink import EMField


def _f(x) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"non-finite value {x!r}")
    return x + 0.0  # drop negative zero


def cnum(z) -> list:
    z = complex(z)
    return [_f(z.real), _f(z.imag)]


def parse_cnum(v) -> complex:
    if isinstance(v, (int, float)):
        return complex(v)
    if isinstance(v, str):
        return complex(v.replace(" ", ""))
    if isinstance(v, (list, tuple)) and len(v) == 2:
        return complex(float(v[0]), float(v[1]))
    raise ValueError(f"cannot read {v!r} as a complex number")


def rvec(v) -> list:
    return [_f(x) for x in np.asarray(v).real.ravel()]


def cmat(M) -> list:
    M = np.asarray(M)
    return [[cnum(z) for z in row] for row in M]


def rmat(M) -> list:
    M = np.asarray(M)
    return [[_f(x) for x in row] for row in M.real]


def parse_matrix(v) -> np.ndarray:
    """Rows of plain numbers or of ``[re, im]`` pairs."""
    rows = [[parse_cnum(z) for z in row] for row in v]
    M = np.array(rows, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("matrix must be square")
    return M.real.copy() if not np.any(M.imag) else M


def biquat(q: Biquat) -> dict:
    return {"a0": cnum(q.a0), "A": [cnum(z) for z in q.A], "chirality": q.chirality.value}


def parse_biquat(v) -> Biquat:
    if not isinstance(v, dict) or "A" not in v:
        raise ValueError("biquaternion needs an object with 'A' (and optional 'a0', 'chirality')")
    A = tuple(parse_cnum(z) for z in v["A"])
    if len(A) != 3:
        raise ValueError("'A' must have three components")
    return Biquat(parse_cnum(v.get("a0", 0)), A, Chirality(v.get("chirality", "S")))


def emfield(f: EMField) -> dict:
    return {"E": rvec(f.E), "B": rvec(f.B)}


def parse_emfield(v) -> EMField:
    if not isinstance(v, dict) or "E" not in v or "B" not in v:
        raise ValueError("field needs an object with 'E' and 'B'")
    return EMField([float(x) for x in v["E"]], [float(x) for x in v["B"]])


def decomposition(coeffs) -> dict:
    return {name: cnum(c) for name, c in zip(BASIS_NAMES, coeffs)}


def point(p) -> list:
    return [cnum(c) if isinstance(c, complex) else _f(c) for c in p]


def parse_path(v) -> ParamPath:
    if not isinstance(v, dict) or "points" not in v:
        raise ValueError("path needs an object with 'points'")
    pts = []
    for p in v["points"]:
        p = p if isinstance(p, list) else [p]
        vals = [parse_cnum(c) for c in p]
        pts.append(tuple(vals) if any(z.imag for z in vals) else tuple(z.real for z in vals))
    return ParamPath(tuple(pts), closed=bool(v.get("closed", False)))


def path(p: ParamPath) -> dict:
    return {"points": [point(q) for q in p.points], "closed": p.closed}


def event(e: DegeneracyEvent) -> dict:
    return {
        "location": _f(e.location),
        "bracket": [_f(e.bracket[0]), _f(e.bracket[1])],
        "point": point(e.point),
        "branches": list(e.branches),
        "eigenspace_dim": e.eigenspace_dim,
        "kind": e.kind,
    }


def trace(t: TraceResult) -> dict:
    return {
        "params": rvec(t.params),
        "branches": [[cnum(z) for z in row] for row in t.values],
        "slot_branch": list(t.slot_branch),
        "multiplicities": list(t.multiplicities),
        "monodromy": list(t.monodromy),
        "refinement_count": t.refinement_count,
        "closed": t.closed,
        "deg_tol": _f(t.deg_tol),
        "degeneracies": [event(e) for e in t.degeneracies],
    }


def holonomy(h: HolonomyResult, real: bool) -> dict:
    out = {"branch": h.branch, "value": cnum(h.value), "phase": _f(h.phase),
           "samples_used": h.samples_used, "dim": h.dim}
    if real:
        out = {"sign": h.sign, **out}
    return out


def dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"), allow_nan=False)
