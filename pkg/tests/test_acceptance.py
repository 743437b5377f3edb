"""The ten acceptance criteria at their stated tolerances.

A pass/fail line per criterion is printed at the end of the pytest run
(see ``conftest.pytest_terminal_summary``).
"""

import json
import subprocess
import sys

import numpy as np
import pytest

from biquat.alg_core import BASIS_NAMES, Biquat, Chirality, basis_16, biquat_mul, rep_matrix
from biquat.bundle import builtin_path, detect_degeneracies, doppler_factor, line_holonomy, track_eigenvalues
from biquat.eigen import (
    beta_decay_distribution,
    eigenvalues_em,
    negative_eigenvector,
    principal_eigenvector,
    spin_probability,
)
from biquat.expmap import exp_S, exp_so31, log_so31
from biquat.mink import EMField, LorentzClass, boost_observer, field_matrices, is_proper_lorentz, minkowski_inner
from biquat.modsq import energy_momentum, modulus_squared
from oracles import expm_taylor, null_rotation, phi_literal, random_lorentz, rotation_z

U = np.array([1.0, 0, 0, 0])
SEED = 7


def crit(n):
    return pytest.mark.criterion(n)


@crit(1)
def test_criterion_01_basis_algebra():
    b = dict(zip(BASIS_NAMES, basis_16()))
    # entries are in {0, +-1, +-i}; products of such matrices are exact in floating point
    for name, M in b.items():
        assert set(np.unique(M.real)) <= {-1, 0, 1} and set(np.unique(M.imag)) <= {-1, 0, 1}
        assert np.array_equal(M @ M, np.eye(4))
        assert np.array_equal(M, M.conj().T)
        assert np.trace(M) == (4 if name == "I" else 0)
    assert np.array_equal(b["x"] @ b["y"], 1j * b["z"])
    assert np.array_equal(b["x"] @ b["y"], -(b["y"] @ b["x"]))


@crit(2)
def test_criterion_02_commutation_split():
    rng = np.random.default_rng(SEED)
    worst_comm = worst_anti = worst_dense = 0.0
    for _ in range(10_000):
        A = rng.normal(size=3) + 1j * rng.normal(size=3)
        B = rng.normal(size=3) + 1j * rng.normal(size=3)
        F = rep_matrix(Biquat.pure(A, Chirality.S))
        G = rep_matrix(Biquat.pure(B, Chirality.SBar))
        worst_comm = max(worst_comm, np.abs(F @ G - G @ F).max())
        F2 = rep_matrix(Biquat.pure(B, Chirality.S))
        worst_anti = max(worst_anti, np.abs(F @ F2 + F2 @ F - 2 * (A @ B) * np.eye(4)).max())
        prod = rep_matrix(biquat_mul(Biquat.pure(A), Biquat.pure(B)))
        worst_dense = max(worst_dense, np.abs(prod - phi_literal(0, A) @ phi_literal(0, B)).max())
    assert worst_comm <= 1e-13
    assert worst_anti <= 1e-12
    assert worst_dense <= 1e-12


@crit(3)
def test_criterion_03_exponential_closed_form():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for k in range(1000):
        if k < 100:
            e1, e2 = np.linalg.qr(rng.normal(size=(3, 2)))[0].T
            A = rng.uniform(0.1, 4 / np.sqrt(2)) * np.exp(1j * rng.uniform(0, 2 * np.pi)) * (e1 + 1j * e2)
            q = Biquat.pure(A)
            assert np.array_equal(rep_matrix(exp_S(q)), np.eye(4) + rep_matrix(q))
            continue
        A = rng.normal(size=3) + 1j * rng.normal(size=3)
        A *= rng.uniform(0, 4) / np.linalg.norm(A)
        ref = expm_taylor(phi_literal(0, A))
        got = rep_matrix(exp_S(Biquat.pure(A)))
        worst = max(worst, np.linalg.norm(got - ref) / np.linalg.norm(ref))
    assert worst <= 1e-10


def _handcrafted_lorentz():
    out = []
    for a in (0.05, 0.8, 3.0, 10.0):
        out.append(rotation_z(np.pi) @ null_rotation(a))
        out.append(null_rotation(a) @ rotation_z(np.pi))
        out.append(rotation_z(2 * np.pi - 1e-6) @ null_rotation(a))
        out.append(rotation_z(np.pi + 1e-9) @ null_rotation(a))
        out.append(rotation_z(np.pi - 1e-7) @ null_rotation(-a))
    return out


@crit(4)
def test_criterion_04_surjectivity_round_trip():
    rng = np.random.default_rng(SEED)
    cases = [random_lorentz(rng) for _ in range(1000)] + _handcrafted_lorentz()
    assert len(cases) == 1020
    worst = max(np.abs(exp_so31(log_so31(L)) - L).max() for L in cases)
    assert worst <= 1e-8


@crit(5)
def test_criterion_05_modulus_squared_homomorphism():
    rng = np.random.default_rng(SEED)

    def rand_q():
        return Biquat(rng.normal() + 1j * rng.normal(), tuple(rng.normal(size=3) + 1j * rng.normal(size=3)))

    worst = 0.0
    for _ in range(10_000):
        p, q = rand_q(), rand_q()
        rhs = modulus_squared(p) @ modulus_squared(q)
        worst = max(worst, np.linalg.norm(modulus_squared(biquat_mul(p, q)) - rhs) / np.linalg.norm(rhs))
    assert worst <= 1e-11
    for _ in range(1000):
        ell = exp_S(Biquat.pure(rng.normal(size=3) + 1j * rng.normal(size=3)))
        assert is_proper_lorentz(modulus_squared(ell)) is LorentzClass.PROPER_ORTHOCHRONOUS
    for _ in range(100):
        q = rand_q()
        M = modulus_squared(q)
        for t in rng.uniform(0, 2 * np.pi, 100):
            assert np.abs(modulus_squared(np.exp(1j * t) * q) - M).max() <= 1e-12 * np.abs(M).max()


@crit(6)
def test_criterion_06_joint_eigenvector():
    rng = np.random.default_rng(SEED)
    worst = worst_inner = 0.0
    for _ in range(10_000):
        f = EMField(rng.normal(size=3), rng.normal(size=3))
        F, Fs, _, _ = field_matrices(f)
        T = energy_momentum(f)
        ev = eigenvalues_em(f)
        s = principal_eigenvector(f, U)
        n = np.linalg.norm(s)
        for M, lam in ((F, ev.lambda_F), (Fs, ev.lambda_Fstar), (T, ev.lambda_T)):
            worst = max(worst, np.linalg.norm(M @ s - lam * s) / (n * max(1.0, abs(lam))))
        sm = negative_eigenvector(f, U)
        rhs = -2 * (ev.lambda_T + float(f.E @ f.E + f.B @ f.B) / 2)
        worst_inner = max(worst_inner, abs(minkowski_inner(U, sm) - rhs) / max(1.0, abs(rhs)))
    assert worst <= 1e-9
    assert worst_inner <= 1e-10


@crit(7)
def test_criterion_07_doppler_factor():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for k in range(10_000):
        E = rng.normal(size=3)
        B = rng.normal(size=3)
        if k % 5 == 0:
            B = np.cross(E, rng.normal(size=3))
            B *= np.linalg.norm(E) / np.linalg.norm(B)
        f = EMField(E, B)
        w = rng.normal(size=3)
        w *= 0.95 * rng.random() / np.linalg.norm(w)
        s = principal_eigenvector(f, U)
        s2 = principal_eigenvector(f, boost_observer(U, w))
        worst = max(worst, np.linalg.norm(s2 - doppler_factor(f, U, w) * s) / np.linalg.norm(s2))
    assert worst <= 1e-9
    assert abs(doppler_factor(EMField((1, 0, 0), (0, 1, 0)), U, [0, 0, 0.6]) - 0.5) <= 1e-12


@crit(8)
def test_criterion_08_obstruction_regressions():
    fld, loop = builtin_path("builtin-linking", 256)
    assert line_holonomy(fld, loop, 0).value == -1
    assert line_holonomy(fld, loop, 1).value == -1
    fld, loop = builtin_path("builtin-winding", 256)
    assert track_eigenvalues(fld, loop).monodromy == (1, 0)
    fld, path = builtin_path("builtin-example2", 256)
    spacing = 2 / 256
    events = detect_degeneracies(fld, path)
    assert len(events) == 1 and abs(events[0].point[0]) <= spacing and events[0].eigenspace_dim == 2
    # Example 5 over the null region (A0 = 0, A.A = 0): both eigenvector fields are killed by cF
    fld, loop = builtin_path("builtin-b2", 256)
    assert len(loop.points) == 257
    worst = 0.0
    for p in loop.points:
        A = np.array(p)
        cF = rep_matrix(Biquat(0, tuple(A)))
        E, B = A.real, A.imag
        for v in (np.r_[0, A], np.r_[E @ E, np.cross(E, B)]):
            worst = max(worst, np.abs(cF @ v).max())
    assert worst <= 1e-10


@crit(9)
def test_criterion_09_probability_formulas():
    v = np.array([0, 0, 1.0])
    for th in np.linspace(0, np.pi, 181):
        w = np.array([np.sin(th), 0, np.cos(th)])
        assert abs(spin_probability(U, v, w) - np.sin(th / 2) ** 2) <= 1e-12
        for speed in (0.0, 0.3, 0.9):
            assert abs(beta_decay_distribution(U, speed * v, w) - (1 - speed * np.cos(th))) <= 1e-12


CLI_SUITE = [
    ["decompose", "--A", "1,0,0"],
    ["decompose", "--A", "0,0,1j"],
    ["mul", "--p", '{"a0":[0,0],"A":[[1,0],[0,0],[0,0]]}', "--q", '{"a0":[0,0],"A":[[0,0],[1,0],[0,0]]}'],
    ["mul", "--p", '{"A":[[0,1],[2,0],[0,0]],"chirality":"SBar"}', "--q", '{"A":[[1,0],[0,0],[3,1]],"chirality":"SBar"}'],
    ["exp", "--zero"],
    ["exp", "--A", "1,0,0"],
    ["exp", "--A", "2,2j,0"],
    ["exp", "--A", "0.5+1j,-1,2j"],
    ["exp", "--E", "0.3,-0.2,0.5", "--B", "1,2,-0.5"],
    ["log", "--json", json.dumps({"matrix": (rotation_z(np.pi) @ null_rotation(0.8)).tolist()})],
    ["log", "--json", json.dumps({"matrix": random_lorentz(np.random.default_rng(1)).tolist()})],
    ["lift", "--json", json.dumps({"matrix": random_lorentz(np.random.default_rng(2)).tolist()})],
    ["modsq", "--A", "0.1,0.2j,0.3", "--a0", "1+0.5j"],
    ["eig", "--E", "1,0,0", "--B", "0,0,0"],
    ["eig", "--E", "0.3,1.1,-0.4", "--B", "2,0.1,0.7"],
    ["eigvec", "--E", "0.3,1.1,-0.4", "--B", "2,0.1,0.7", "--u", "1.25,0.75,0,0"],
    ["eigvec", "--E", "1,0,0", "--B", "0,1,0"],
    ["classify", "--A", "1,1j,0"],
    ["doppler", "--E", "1,0,0", "--B", "0,1,0", "--w", "0,0,0.6"],
    ["doppler", "--E", "0.3,1.1,-0.4", "--B", "2,0.1,0.7", "--w", "0.1,-0.5,0.2"],
    ["holonomy", "--field", "example3", "--loop", "builtin-linking", "--samples", "256"],
    ["holonomy", "--loop", "builtin-b2", "--samples", "256"],
    ["track", "--loop", "builtin-winding", "--samples", "256"],
    ["track", "--loop", "builtin-b2-example5", "--samples", "64"],
    ["degeneracies", "--loop", "builtin-example2", "--samples", "256"],
    ["degeneracies", "--loop", "builtin-example3-crossing", "--samples", "63"],
    ["spin-prob", "--v", "0,0,1", "--w", "0.6,0,0.8"],
    ["beta-dist", "--v", "0,0,0.5", "--b", "0.6,0,0.8"],
    ["examples"],
]

_DRIVER = """
import io, json, sys, contextlib
from biquat.cli import run
for argv in json.loads(sys.stdin.read()):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = run(argv)
    sys.stdout.write(json.dumps(code) + "\\n" + buf.getvalue())
"""


def _cli_suite_bytes() -> bytes:
    proc = subprocess.run([sys.executable, "-c", _DRIVER], input=json.dumps(CLI_SUITE).encode(),
                          capture_output=True, check=True)
    return proc.stdout


@crit(10)
def test_criterion_10_cli_determinism():
    first = _cli_suite_bytes()
    second = _cli_suite_bytes()
    assert first == second
    lines = first.decode().splitlines()
    codes, docs = lines[0::2], [json.loads(x) for x in lines[1::2]]
    assert codes == ["0"] * len(CLI_SUITE)
    by_cmd = dict(zip(range(len(CLI_SUITE)), docs))
    assert by_cmd[20]["sign"] == -1
    assert by_cmd[22]["trace"]["monodromy"] == [1, 0]
    assert abs(by_cmd[18]["factor"] - 0.5) <= 1e-12
    # one real run through the console entry point as well
    a = subprocess.run([sys.executable, "-m", "biquat", *CLI_SUITE[13]], capture_output=True, check=True).stdout
    b = subprocess.run([sys.executable, "-m", "biquat", *CLI_SUITE[13]], capture_output=True, check=True).stdout
    assert a == b and a.startswith(b'{"lambda_T":0.5,"lambda_F":1.0,"lambda_Fstar":0.0,')
