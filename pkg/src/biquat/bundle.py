"""Matrix fields over parameter paths: eigenvalue tracking and obstructions.

A path is piecewise linear in its points and is addressed by a continuous
parameter ``s`` in ``[0, len(points) - 1]``.  Eigenvalues are tracked as
``n`` root slots matched sample to sample by minimal total displacement;
coincident roots (within the degeneracy tolerance) are grouped into
branches, and all reported labels, permutations and holonomies refer to
those branches as they appear at the first sample.
"""

from __future__ import annotations

import enum
import math
from collections import Counter
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import linear_sum_assignment, minimize_scalar

from .alg_core import Biquat, Chirality, rep_matrix
from .eigen import eigenvalues_em
from .errors import (
    BranchDegenerate,
    OutOfDomain,
    RefinementExhausted,
    SpeedNotSubluminal,
    ZeroField,
)
from .mink import (
    DEFAULT_OBSERVER,
    EMField,
    check_observer,
    field_matrices,
    minkowski_inner,
    rest_cross,
    spatial,
)


class FieldKind(str, enum.Enum):
    Example1 = "example1"
    Example2 = "example2"
    Example3 = "example3"
    Example4 = "example4"
    Example5 = "example5"
    ExplicitSamples = "explicit"


class Scalars(str, enum.Enum):
    RealField = "real"
    ComplexField = "complex"


_PARAM_DIM = {
    FieldKind.Example1: 1,
    FieldKind.Example2: 1,
    FieldKind.Example3: 3,
    FieldKind.Example4: 3,
    FieldKind.Example5: 4,
    FieldKind.ExplicitSamples: 1,
}

_DESCRIPTIONS = {
    FieldKind.Example1: "Phi(t) = [[1, t], [0, 1]] on R",
    FieldKind.Example2: "Phi(t) = [[1, f(t)], [f(-t), 1]], f(t) = max(t - width, 0), on R",
    FieldKind.Example3: "Phi(u, v, w) = [[u, v], [v, w]] on R^3",
    FieldKind.Example4: "Phi(A) = F in S, A in C^3",
    FieldKind.Example5: "Phi(A0, A) = A0 I + F in I+S, (A0, A) in C^4",
}


@dataclass(frozen=True)
class MatrixField:
    kind: FieldKind
    params: dict = field(default_factory=dict)
    samples: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", FieldKind(self.kind))
        if self.kind is FieldKind.ExplicitSamples:
            if len(self.samples) < 2:
                raise ValueError("explicit fields need at least two samples")
            pts = sorted(((float(t), np.asarray(m)) for t, m in self.samples), key=lambda p: p[0])
            object.__setattr__(self, "samples", tuple(pts))

    @property
    def dim(self) -> int:
        if self.kind in (FieldKind.Example4, FieldKind.Example5):
            return 4
        if self.kind is FieldKind.ExplicitSamples:
            return self.samples[0][1].shape[0]
        return 2

    @property
    def scalars(self) -> Scalars:
        if self.kind in (FieldKind.Example4, FieldKind.Example5):
            return Scalars.ComplexField
        if self.kind is FieldKind.ExplicitSamples:
            if any(np.iscomplexobj(m) and np.any(m.imag) for _, m in self.samples):
                return Scalars.ComplexField
        return Scalars.RealField

    @property
    def param_dim(self) -> int:
        return _PARAM_DIM[self.kind]


def eval_field(fld: MatrixField, point) -> np.ndarray:
    p = np.atleast_1d(np.asarray(point))
    if p.shape != (fld.param_dim,):
        raise OutOfDomain(f"{fld.kind.value} takes {fld.param_dim} parameters, got {p.shape}")
    complex_params = fld.kind in (FieldKind.Example4, FieldKind.Example5)
    if not complex_params:
        if np.iscomplexobj(p) and np.any(p.imag):
            raise OutOfDomain(f"{fld.kind.value} is parameterized by real numbers")
        p = p.real.astype(float)
    if not np.all(np.isfinite(p)):
        raise OutOfDomain("non-finite parameter")

    k = fld.kind
    if k is FieldKind.Example1:
        return np.array([[1.0, p[0]], [0.0, 1.0]])
    if k is FieldKind.Example2:
        width = float(fld.params.get("width", 0.0))
        t = p[0]
        return np.array([[1.0, max(t - width, 0.0)], [max(-t - width, 0.0), 1.0]])
    if k is FieldKind.Example3:
        u, v, w = p
        return np.array([[u, v], [v, w]])
    if k is FieldKind.Example4:
        return rep_matrix(Biquat.pure(p, Chirality.S))
    if k is FieldKind.Example5:
        return rep_matrix(Biquat(p[0], tuple(p[1:]), Chirality.S))
    t = p[0]
    ts = [s[0] for s in fld.samples]
    if t < ts[0] or t > ts[-1]:
        raise OutOfDomain(f"t = {t!r} outside [{ts[0]!r}, {ts[-1]!r}]")
    j = min(int(np.searchsorted(ts, t, side="right")), len(ts) - 1)
    (t0, m0), (t1, m1) = fld.samples[j - 1], fld.samples[j]
    a = (t - t0) / (t1 - t0)
    return (1 - a) * m0 + a * m1


@dataclass(frozen=True)
class ParamPath:
    points: tuple
    closed: bool = False

    def __post_init__(self):
        pts = tuple(tuple(complex(c) if np.iscomplexobj(np.asarray(c)) else float(c)
                          for c in np.atleast_1d(p)) for p in self.points)
        if len(pts) < 2:
            raise ValueError("a path needs at least two points")
        if self.closed and not np.allclose(pts[0], pts[-1], rtol=0, atol=1e-12):
            raise ValueError("closed path must end at its first point")
        object.__setattr__(self, "points", pts)

    @property
    def length(self) -> int:
        return len(self.points) - 1

    def at(self, s: float) -> np.ndarray:
        pts = np.asarray(self.points)
        if s <= 0:
            return pts[0]
        if s >= self.length:
            return pts[-1]
        i = int(math.floor(s))
        a = s - i
        if a == 0:
            return pts[i]
        return (1 - a) * pts[i] + a * pts[i + 1]


@dataclass(frozen=True)
class TrackOptions:
    max_depth: int = 20
    gap_factor: float = 3.0
    deg_tol: float | None = None


@dataclass(frozen=True)
class DegeneracyEvent:
    location: float
    bracket: tuple
    point: tuple
    branches: tuple
    eigenspace_dim: int
    kind: str


@dataclass(frozen=True)
class TraceResult:
    params: np.ndarray
    values: np.ndarray
    slot_branch: tuple
    multiplicities: tuple
    monodromy: tuple
    refinement_count: int
    closed: bool
    deg_tol: float
    degeneracies: tuple = ()

    @property
    def n_branches(self) -> int:
        return len(self.multiplicities)

    @property
    def branch_values(self) -> np.ndarray:
        """Per-sample mean value of each branch's root slots."""
        out = np.empty((len(self.params), self.n_branches), dtype=complex)
        slots = np.asarray(self.slot_branch)
        for b in range(self.n_branches):
            out[:, b] = self.values[:, slots == b].mean(axis=1)
        return out


def eigenvalues(M) -> np.ndarray:
    return np.linalg.eigvals(np.asarray(M))


def field_spectrum(fld: MatrixField, point) -> np.ndarray:
    """Eigenvalues of the field at ``point`` with algebraic multiplicity.

    Elements of I+S have the exact spectrum ``a0 +- sqrt(A.A)``, each twice;
    a numerical eigensolver only resolves the defective (null) case to
    about ``sqrt(eps)``.
    """
    if fld.kind in (FieldKind.Example4, FieldKind.Example5):
        eval_field(fld, point)  # domain checks
        p = np.atleast_1d(np.asarray(point, dtype=complex))
        a0, A = (0j, p) if fld.kind is FieldKind.Example4 else (p[0], p[1:])
        mu = np.sqrt(Biquat.pure(A).square())
        return np.array([a0 + mu, a0 + mu, a0 - mu, a0 - mu])
    return eigenvalues(eval_field(fld, point))


def _clusters(vals, tol) -> list:
    """Single-linkage groups of indices whose values lie within ``tol``."""
    n = len(vals)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(vals[i] - vals[j]) <= tol:
                parent[find(i)] = find(j)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _matching_gap(cur, new, tol) -> float:
    """Smallest separation of slot pairs that are distinct at both samples.

    Pairs that are merged at either end land in one cluster, so swapping
    them cannot change any branch assignment.
    """
    dc = np.abs(cur[:, None] - cur[None, :])
    dn = np.abs(new[:, None] - new[None, :])
    keep = (dc > tol) & (dn > tol)
    if not keep.any():
        return math.inf
    return float(np.minimum(dc, dn)[keep].min())


def _match(prev, new):
    """Reorder ``new`` to follow ``prev`` with minimal total displacement."""
    cost = np.abs(prev[:, None] - new[None, :])
    rows, cols = linear_sum_assignment(cost)
    best = cost[rows, cols].sum()
    ident = np.trace(cost)
    if ident <= best + 1e-15 * max(1.0, np.abs(new).max()):
        return new.copy()
    out = np.empty_like(new)
    out[rows] = new[cols]
    return out


def _order_start(vals, tol):
    groups = _clusters(vals, tol)
    groups.sort(key=lambda g: (round(float(np.mean(vals[g].real)), 12),
                               round(float(np.mean(vals[g].imag)), 12)))
    order = [i for g in groups for i in g]
    slot_branch = tuple(b for b, g in enumerate(groups) for _ in g)
    return vals[order], slot_branch, tuple(len(g) for g in groups)


def _scale_tol(fld, path, opts) -> float:
    if opts.deg_tol is not None:
        return float(opts.deg_tol)
    top = 1.0
    for s in range(path.length + 1):
        top = max(top, float(np.abs(field_spectrum(fld, path.at(s))).max()))
    return 1e-8 * top


def track_eigenvalues(fld: MatrixField, path: ParamPath, opts: TrackOptions = TrackOptions()) -> TraceResult:
    tol = _scale_tol(fld, path, opts)
    start, slot_branch, mult = _order_start(field_spectrum(fld, path.at(0)), tol)

    params = [0.0]
    values = [start]
    refinements = 0
    cur_s, cur = 0.0, start
    stack = [(float(s), 0) for s in range(path.length, 0, -1)]
    while stack:
        s_next, depth = stack.pop()
        new = _match(cur, field_spectrum(fld, path.at(s_next)))
        move = float(np.abs(new - cur).max())
        gap = _matching_gap(cur, new, tol)
        if move > 0 and gap < opts.gap_factor * move:
            if depth >= opts.max_depth:
                raise RefinementExhausted(
                    f"branch matching still ambiguous on s in [{cur_s!r}, {s_next!r}] "
                    f"(gap {gap:.3e}, movement {move:.3e})",
                    interval=(cur_s, s_next),
                )
            refinements += 1
            stack.append((s_next, depth + 1))
            stack.append(((cur_s + s_next) / 2, depth + 1))
            continue
        params.append(s_next)
        values.append(new)
        cur_s, cur = s_next, new

    values = np.array(values)
    monodromy = tuple(range(len(mult)))
    if path.closed:
        monodromy = _closure_permutation(start, values[-1], slot_branch, len(mult))
    return TraceResult(
        params=np.array(params),
        values=values,
        slot_branch=slot_branch,
        multiplicities=mult,
        monodromy=monodromy,
        refinement_count=refinements,
        closed=path.closed,
        deg_tol=tol,
    )


def _closure_permutation(start, end, slot_branch, n_branches) -> tuple:
    cost = np.abs(end[:, None] - start[None, :])
    rows, cols = linear_sum_assignment(cost)
    dest = {}
    for r, c in zip(rows, cols):
        dest.setdefault(slot_branch[r], Counter())[slot_branch[c]] += 1
    return tuple(dest[b].most_common(1)[0][0] for b in range(n_branches))


def _sorted_pair_gap(vals, n_inside) -> float:
    d = np.abs(vals[:, None] - vals[None, :])[np.triu_indices(len(vals), 1)]
    d.sort()
    return float(d[n_inside]) if n_inside < d.size else math.inf


def _eigenspace(M, lam, dim=None, tol=1e-8):
    """Orthonormal basis (columns) of ker(M - lam I); ``dim`` forces its size."""
    A = M - lam * np.eye(len(M))
    if np.isrealobj(M) and abs(np.imag(lam)) == 0:
        A = A.real
    _, s, vh = np.linalg.svd(A)
    if dim is None:
        dim = int(np.sum(s <= tol))
    return vh[len(s) - dim:].conj().T, dim


def _geom_dim(M, lam, tol) -> int:
    return _eigenspace(M, lam, tol=tol)[1]


def _generic_dims(fld, path, trace):
    """Most common geometric dimension of each branch where it is isolated."""
    tol = trace.deg_tol
    counts = [Counter() for _ in range(trace.n_branches)]
    bv = trace.branch_values
    for k, s in enumerate(trace.params):
        M = eval_field(fld, path.at(s))
        for b in range(trace.n_branches):
            others = np.delete(bv[k], b)
            if others.size and np.abs(others - bv[k, b]).min() <= tol:
                continue
            counts[b][_geom_dim(M, bv[k, b], tol)] += 1
    return [c.most_common(1)[0][0] if c else 1 for c in counts]


def _projector_distance(P, Q) -> float:
    return float(np.linalg.norm(P @ P.conj().T - Q @ Q.conj().T, 2))


def detect_degeneracies(fld: MatrixField, path: ParamPath, tol: float | None = None,
                        opts: TrackOptions = TrackOptions(), trace: TraceResult | None = None) -> list:
    """Locations where a branch's eigenspace grows past its generic dimension.

    Three probes are combined: merged clusters at samples, closing gaps
    between samples (refined by bounded minimization), and discontinuous
    eigenspaces between samples (refined by bisection).
    """
    if trace is None:
        trace = track_eigenvalues(fld, path, TrackOptions(opts.max_depth, opts.gap_factor,
                                                          tol if tol is not None else opts.deg_tol))
    tol = trace.deg_tol
    generic = _generic_dims(fld, path, trace)
    params = trace.params
    bv = trace.branch_values
    events = []

    def bracket(k):
        return (float(params[max(k - 1, 0)]), float(params[min(k + 1, len(params) - 1)]))

    def add(loc, br, branches, dim, kind):
        events.append(DegeneracyEvent(float(loc), br, _point(path.at(loc)), tuple(branches), dim, kind))

    # merged clusters at samples
    for k, s in enumerate(params):
        M = eval_field(fld, path.at(s))
        for g in _clusters(bv[k], tol):
            lam = bv[k, g].mean()
            alg = sum(trace.multiplicities[b] for b in g)
            if alg < 2:
                continue
            d = _geom_dim(M, lam, tol)
            if d > max(generic[b] for b in g):
                add(s, bracket(k), g, d, "sample")

    # closing gaps between samples
    inside = sum(m * (m - 1) // 2 for m in trace.multiplicities)

    def gap_at(s):
        return _sorted_pair_gap(field_spectrum(fld, path.at(s)), inside)

    gaps = np.array([_sorted_pair_gap(v, inside) for v in trace.values])
    for k in range(1, len(params) - 1):
        g = gaps[k]
        if not (tol < g < math.inf and g <= gaps[k - 1] and g <= gaps[k + 1]):
            continue
        # only minima deep enough, relative to how fast the gap changes, to close in between
        if g >= opts.gap_factor * max(gaps[k - 1] - g, gaps[k + 1] - g):
            continue
        lo, hi = float(params[k - 1]), float(params[k + 1])
        res = minimize_scalar(gap_at, bounds=(lo, hi), method="bounded",
                              options={"xatol": 1e-14 * max(1.0, hi)})
        if res.fun > tol:
            continue
        s = float(res.x)
        vals = field_spectrum(fld, path.at(s))
        M = eval_field(fld, path.at(s))
        d_vec = np.abs(bv[k][:, None] - bv[k][None, :]) + np.diag(np.full(trace.n_branches, np.inf))
        b1, b2 = np.unravel_index(np.argmin(d_vec), d_vec.shape)
        lam = vals[np.argsort(np.abs(vals - (bv[k, b1] + bv[k, b2]) / 2))[0]]
        d = _geom_dim(M, lam, tol)
        if d > max(generic[b1], generic[b2]):
            add(s, (lo, hi), sorted((int(b1), int(b2))), d, "gap")

    # eigenspace discontinuities between samples
    for b in range(trace.n_branches):
        for k in range(len(params) - 1):
            sa, sb = float(params[k]), float(params[k + 1])
            if _isolated(bv[k], b, tol) and _isolated(bv[k + 1], b, tol):
                Ma = eval_field(fld, path.at(sa))
                Mb = eval_field(fld, path.at(sb))
                if _geom_dim(Ma, bv[k, b], tol) != generic[b] or _geom_dim(Mb, bv[k + 1, b], tol) != generic[b]:
                    continue
                hit = _bisect_jump(fld, path, sa, sb, bv[k, b], bv[k + 1, b], generic[b], tol)
                if hit is not None:
                    s, d = hit
                    add(s, (sa, sb), [b], d, "jump")

    return _dedupe(events, params)


def _isolated(vals, b, tol) -> bool:
    others = np.delete(vals, b)
    return not (others.size and np.abs(others - vals[b]).min() <= tol)


def _branch_value_near(fld, point, guess):
    vals = field_spectrum(fld, point)
    return vals[np.argmin(np.abs(vals - guess))]


JUMP_THRESHOLD = 0.5


def _bisect_jump(fld, path, sa, sb, la, lb, dim, tol, iters=60):
    Ma, Mb = eval_field(fld, path.at(sa)), eval_field(fld, path.at(sb))
    Pa = _eigenspace(Ma, la, dim)[0]
    Pb = _eigenspace(Mb, lb, dim)[0]
    if _projector_distance(Pa, Pb) < JUMP_THRESHOLD:
        return None
    for _ in range(iters):
        sm = (sa + sb) / 2
        if sm in (sa, sb):
            break
        Mm = eval_field(fld, path.at(sm))
        lm = _branch_value_near(fld, path.at(sm), (la + lb) / 2)
        dm = _geom_dim(Mm, lm, tol)
        if dm > dim:
            return sm, dm
        Pm = _eigenspace(Mm, lm, dim)[0]
        left, right = _projector_distance(Pa, Pm), _projector_distance(Pm, Pb)
        if max(left, right) < JUMP_THRESHOLD / 2:
            return None
        if left >= right:
            sb, lb, Pb = sm, lm, Pm
        else:
            sa, la, Pa = sm, lm, Pm
    sm = (sa + sb) / 2
    Mm = eval_field(fld, path.at(sm))
    lm = _branch_value_near(fld, path.at(sm), (la + lb) / 2)
    dm = _geom_dim(Mm, lm, tol)
    return (sm, dm) if dm > dim else None


def _dedupe(events, params):
    """Merge events closer than a typical sample spacing, sample hits first."""
    spacing = float(np.median(np.diff(params))) if len(params) > 1 else 0.0
    out = []
    for ev in sorted(events, key=lambda e: (e.location, e.branches)):
        if out and abs(ev.location - out[-1].location) <= spacing:
            prev = out[-1]
            keep = ev if prev.kind != "sample" and ev.kind == "sample" else prev
            out[-1] = DegeneracyEvent(
                keep.location, keep.bracket, keep.point,
                tuple(sorted(set(prev.branches) | set(ev.branches))),
                max(prev.eigenspace_dim, ev.eigenspace_dim), keep.kind,
            )
            continue
        out.append(ev)
    return out


def _point(p) -> tuple:
    return tuple(complex(c) if np.iscomplexobj(p) else float(c) for c in np.atleast_1d(p))


@dataclass(frozen=True)
class HolonomyResult:
    branch: int
    value: complex
    samples_used: int
    dim: int = 1

    @property
    def sign(self) -> int:
        return 1 if self.value.real >= 0 else -1

    @property
    def phase(self) -> float:
        return math.atan2(self.value.imag, self.value.real)


def line_holonomy(fld: MatrixField, loop: ParamPath, branch: int,
                  opts: TrackOptions = TrackOptions(), min_overlap: float = 0.9) -> HolonomyResult:
    """Discrete parallel transport of a branch's eigenspace around a loop.

    Each step aligns the new orthonormal eigenbasis with the previous one by
    the unitary polar factor of their overlap (for a line, the phase that
    maximizes the real part of the overlap).  The closure overlap's
    determinant, normalized to unit modulus, is returned: a sign for real
    symmetric fields, the discrete Berry phase factor otherwise.
    """
    if not loop.closed:
        raise ValueError("holonomy needs a closed loop")
    trace = track_eigenvalues(fld, loop, opts)
    if not 0 <= branch < trace.n_branches:
        raise ValueError(f"no branch {branch}; the trace has {trace.n_branches}")
    events = detect_degeneracies(fld, loop, opts=opts, trace=trace)
    bad = [e for e in events if branch in e.branches]
    if bad:
        raise BranchDegenerate(f"branch {branch} is degenerate near s = {bad[0].location!r}")
    tol = trace.deg_tol
    bv = trace.branch_values
    for k in range(len(trace.params)):
        if not _isolated(bv[k], branch, tol):
            raise BranchDegenerate(f"branch {branch} meets another branch at s = {trace.params[k]!r}")
    if trace.monodromy[branch] != branch:
        raise BranchDegenerate(f"branch {branch} does not close up (monodromy {trace.monodromy})")

    dim = _generic_dims(fld, loop, trace)[branch]
    real = fld.scalars is Scalars.RealField and np.all(np.abs(bv[:, branch].imag) <= tol)

    def basis(s, guess):
        M = eval_field(fld, loop.at(s))
        lam = _branch_value_near(fld, loop.at(s), guess)
        if real:
            lam = lam.real
        return _eigenspace(M, lam, dim)[0], lam

    V0, lam = basis(trace.params[0], bv[0, branch])
    V = V0
    steps = 1
    for k in range(1, len(trace.params)):
        V, steps = _transport(basis, V, float(trace.params[k - 1]), float(trace.params[k]),
                              bv[k - 1, branch], bv[k, branch], opts.max_depth, min_overlap, steps)
    W = V0.conj().T @ V
    det = complex(np.linalg.det(W))
    return HolonomyResult(branch, det / abs(det), steps, dim)


def _align(V_prev, V):
    U = V_prev.conj().T @ V
    w, s, zh = np.linalg.svd(U)
    return V @ (w @ zh).conj().T, float(s.min())


def _transport(basis, V_prev, sa, sb, la, lb, depth_left, min_overlap, steps):
    V, _ = basis(sb, lb)
    V_new, overlap = _align(V_prev, V)
    if overlap >= min_overlap:
        return V_new, steps + 1
    if depth_left <= 0:
        raise RefinementExhausted(f"eigenspace transport unresolved on s in [{sa!r}, {sb!r}]",
                                  interval=(sa, sb))
    sm = (sa + sb) / 2
    lm = (la + lb) / 2
    V_mid, steps = _transport(basis, V_prev, sa, sm, la, lm, depth_left - 1, min_overlap, steps)
    return _transport(basis, V_mid, sm, sb, lm, lb, depth_left - 1, min_overlap, steps)


@dataclass(frozen=True)
class S1Verdict:
    obstructed: bool
    permutation: tuple

    def __str__(self):
        if self.obstructed:
            return f"s1 obstructed on this loop: branches permuted {self.permutation}"
        return "s1 not obstructed on this loop"


def s1_report(trace: TraceResult) -> S1Verdict:
    if not trace.closed:
        raise ValueError("s1 report needs a trace over a closed loop")
    perm = tuple(trace.monodromy)
    return S1Verdict(perm != tuple(range(len(perm))), perm)


def doppler_factor(f: EMField, u=DEFAULT_OBSERVER, w=(0.0, 0.0, 0.0)) -> float:
    """Ratio of the principal eigenvectors seen by ``u`` and by ``u`` boosted by ``w``."""
    if f.is_zero:
        raise ZeroField("the zero field has no principal eigenvector")
    u = check_observer(u)
    w = spatial(u, w)
    w2 = float(minkowski_inner(w, w))
    if w2 >= 1:
        raise SpeedNotSubluminal(f"|w| = {math.sqrt(w2)!r} >= 1")
    F, Fstar, _, _ = field_matrices(f)
    E, B = F @ u, -(Fstar @ u)
    ev = eigenvalues_em(f)
    denom = ev.lambda_T + float(minkowski_inner(E, E) + minkowski_inner(B, B)) / 2
    numer = (-float(minkowski_inner(rest_cross(u, E, B), w))
             + ev.lambda_F * float(minkowski_inner(E, w))
             - ev.lambda_Fstar * float(minkowski_inner(B, w)))
    return (1 + numer / denom) / math.sqrt(1 - w2)


def _loop(fn, samples):
    ts = np.linspace(0.0, 2 * np.pi, samples + 1)
    pts = [fn(t) for t in ts[:-1]]
    pts.append(pts[0])
    return ParamPath(tuple(pts), closed=True)


def _line(a, b, samples):
    a, b = np.asarray(a), np.asarray(b)
    return ParamPath(tuple(a + (b - a) * t for t in np.linspace(0.0, 1.0, samples + 1)))


BUILTIN_PATHS = {
    "builtin-linking": (
        FieldKind.Example3,
        "loop (cos t, sin t, -cos t) linking the degenerate line {(u, 0, u)}",
        lambda n: _loop(lambda t: (math.cos(t), math.sin(t), -math.cos(t)), n),
    ),
    "builtin-winding": (
        FieldKind.Example4,
        "loop A(t) = (1, i(1 - exp(it)/2), 0); A.A winds once around 0",
        lambda n: _loop(lambda t: (1.0, 1j * (1 - 0.5 * np.exp(1j * t)), 0.0), n),
    ),
    "builtin-b2": (
        FieldKind.Example4,
        "loop in the null region A.A = 0: A(t) = (1 + cos(t)/2) exp(i sin t) (1, i, 0)",
        lambda n: _loop(lambda t: tuple((1 + 0.5 * math.cos(t)) * np.exp(1j * math.sin(t))
                                        * np.array([1.0, 1j, 0.0])), n),
    ),
    "builtin-b2-example5": (
        FieldKind.Example5,
        "loop with <A, A> = 0: (A0, A) = exp(it) (1, 1, 0, 0)",
        lambda n: _loop(lambda t: tuple(np.exp(1j * t) * np.array([1.0, 1.0, 0.0, 0.0])), n),
    ),
    "builtin-example2": (
        FieldKind.Example2,
        "segment t in [-1, 1]",
        lambda n: _line([-1.0], [1.0], n),
    ),
    "builtin-example3-crossing": (
        FieldKind.Example3,
        "segment (0.5, -1, 1.2) -> (1.5, 1, 0.8) through the degenerate line",
        lambda n: _line([0.5, -1.0, 1.2], [1.5, 1.0, 0.8], n),
    ),
}


def builtin_path(name: str, samples: int = 256):
    """``(MatrixField, ParamPath)`` for a named built-in path."""
    if name not in BUILTIN_PATHS:
        raise KeyError(f"unknown built-in path {name!r}; choose from {sorted(BUILTIN_PATHS)}")
    kind, _, make = BUILTIN_PATHS[name]
    return MatrixField(kind), make(samples)


def describe_fields() -> dict:
    return {k.value: _DESCRIPTIONS[k] for k in _DESCRIPTIONS}
