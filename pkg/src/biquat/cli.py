"""Command-line front end; every subcommand prints one JSON document.

Inputs come from flags, from ``--json`` inline text, or from ``--input``
(a file, ``-`` for stdin).  Documents printed by one subcommand can be fed
back unchanged to another: values are looked up under the keys ``biquat``,
``matrix`` and ``field`` or read from the bare document.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from . import jsonio
from .alg_core import Biquat, Chirality, biquat_mul, decompose, rep_matrix
from .bundle import (
    BUILTIN_PATHS,
    FieldKind,
    MatrixField,
    Scalars,
    TrackOptions,
    builtin_path,
    describe_fields,
    detect_degeneracies,
    doppler_factor,
    line_holonomy,
    s1_report,
    track_eigenvalues,
)
from .eigen import (
    beta_decay_distribution,
    classify,
    eigenspace_basis,
    eigenvalues_biquat,
    eigenvalues_em,
    negative_eigenvector,
    principal_eigenvector,
    spin_probability,
)
from .errors import BiquatError
from .expmap import exp_S, exp_so31, log_biquat_lorentz, log_so31
from .mink import DEFAULT_OBSERVER, complexified, field_from_matrix, field_matrices
from .modsq import lift_lorentz, modulus_squared


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _floats(text):
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _complexes(text):
    try:
        return [complex(x.strip().replace(" ", "")) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated complex numbers, got {text!r}")


def _load_doc(args):
    if getattr(args, "json", None) is not None:
        return json.loads(args.json)
    if getattr(args, "input", None) is not None:
        if args.input == "-":
            return json.load(sys.stdin)
        with open(args.input) as fh:
            return json.load(fh)
    return {}


def _doc_biquat(args, doc):
    if getattr(args, "A", None) is not None:
        a0 = args.a0 if args.a0 is not None else 0
        return Biquat(a0, tuple(args.A), Chirality(args.chirality))
    if isinstance(doc, dict):
        if "biquat" in doc:
            return jsonio.parse_biquat(doc["biquat"])
        if "A" in doc:
            return jsonio.parse_biquat(doc)
    return None


def _doc_field(args, doc):
    if getattr(args, "E", None) is not None or getattr(args, "B", None) is not None:
        E = args.E if args.E is not None else [0.0, 0.0, 0.0]
        B = args.B if args.B is not None else [0.0, 0.0, 0.0]
        return jsonio.parse_emfield({"E": E, "B": B})
    if isinstance(doc, dict):
        if isinstance(doc.get("field"), dict) and "E" in doc["field"]:
            return jsonio.parse_emfield(doc["field"])
        if "E" in doc and "B" in doc:
            return jsonio.parse_emfield(doc)
    return None


def _doc_matrix(doc):
    if isinstance(doc, dict) and "matrix" in doc:
        return jsonio.parse_matrix(doc["matrix"])
    if isinstance(doc, list):
        return jsonio.parse_matrix(doc)
    return None


def _need(value, what):
    if value is None:
        raise ValueError(f"missing input: {what}")
    return value


def cmd_decompose(args, doc):
    q = _doc_biquat(args, doc)
    M = rep_matrix(q) if q is not None else _need(_doc_matrix(doc), "matrix or biquat")
    return {"coefficients": jsonio.decomposition(decompose(M).coeffs)}


def cmd_mul(args, doc):
    doc = doc if isinstance(doc, dict) else {}
    p = args.p if args.p is not None else doc.get("p")
    q = args.q if args.q is not None else doc.get("q")
    p = jsonio.parse_biquat(json.loads(p) if isinstance(p, str) else _need(p, "p"))
    q = jsonio.parse_biquat(json.loads(q) if isinstance(q, str) else _need(q, "q"))
    return {"biquat": jsonio.biquat(biquat_mul(p, q))}


def cmd_exp(args, doc):
    if args.zero:
        e = exp_S(Biquat.pure((0, 0, 0), Chirality(args.chirality)))
        return {"biquat": jsonio.biquat(e), "matrix": jsonio.cmat(rep_matrix(e))}
    q = _doc_biquat(args, doc)
    if q is not None:
        e = exp_S(q)
        return {"biquat": jsonio.biquat(e), "matrix": jsonio.cmat(rep_matrix(e))}
    f = _doc_field(args, doc)
    if f is not None:
        return {"matrix": jsonio.rmat(exp_so31(field_matrices(f)[0]))}
    F = _need(_doc_matrix(doc), "biquat, field or skew matrix")
    return {"matrix": jsonio.rmat(exp_so31(F))}


def cmd_log(args, doc):
    q = _doc_biquat(args, doc)
    if q is not None:
        return {"biquat": jsonio.biquat(log_biquat_lorentz(q))}
    L = _need(_doc_matrix(doc), "Lorentz matrix or biquat")
    F = log_so31(L)
    return {"matrix": jsonio.rmat(F), "field": jsonio.emfield(field_from_matrix(F))}


def cmd_modsq(args, doc):
    q = _need(_doc_biquat(args, doc), "biquat")
    return {"matrix": jsonio.rmat(modulus_squared(q))}


def cmd_lift(args, doc):
    L = _need(_doc_matrix(doc), "Lorentz matrix")
    return {"biquat": jsonio.biquat(lift_lorentz(L))}


def cmd_eig(args, doc):
    f = _doc_field(args, doc)
    if f is not None:
        ev = eigenvalues_em(f)
        return {"lambda_T": ev.lambda_T, "lambda_F": ev.lambda_F, "lambda_Fstar": ev.lambda_Fstar}
    q = _need(_doc_biquat(args, doc), "field or biquat")
    return {"eigenvalues": [jsonio.cnum(z) for z in eigenvalues_biquat(q)],
            "case": classify(q).value}


def cmd_eigvec(args, doc):
    f = _doc_field(args, doc)
    if f is not None:
        u = args.u if args.u is not None else DEFAULT_OBSERVER
        vec = (negative_eigenvector if args.negative else principal_eigenvector)(f, u)
        ev = eigenvalues_em(f)
        lam = -ev.lambda_F if args.negative else ev.lambda_F
        return {"vector": jsonio.rvec(vec), "eigenvalue": lam}
    q = _need(_doc_biquat(args, doc), "field or biquat")
    lam = args.lam if args.lam is not None else eigenvalues_biquat(q)[0]
    return {"eigenvalue": jsonio.cnum(lam), "basis": jsonio.cmat(eigenspace_basis(q, lam))}


def cmd_classify(args, doc):
    q = _doc_biquat(args, doc)
    if q is None:
        q = complexified(_need(_doc_field(args, doc), "biquat or field"))
    return {"case": classify(q).value}


def _field_and_path(args, doc):
    params = json.loads(args.params) if args.params else {}
    if args.loop is not None:
        fld, path = builtin_path(args.loop, args.samples)
        if args.field is not None and FieldKind(args.field) is not fld.kind:
            raise ValueError(f"{args.loop} belongs to {fld.kind.value}, not {args.field}")
        if params:
            fld = MatrixField(fld.kind, params)
        return fld, path
    field_doc = doc.get("field") if isinstance(doc, dict) else None
    if isinstance(field_doc, dict) and "kind" in field_doc:
        samples = tuple((s[0], jsonio.parse_matrix(s[1])) for s in field_doc.get("samples", ()))
        fld = MatrixField(FieldKind(field_doc["kind"]), {**field_doc.get("params", {}), **params}, samples)
    else:
        fld = MatrixField(FieldKind(_need(args.field, "--field")), params)
    path = jsonio.parse_path(_need(doc.get("path") if isinstance(doc, dict) else None,
                                   "--loop or a 'path' document"))
    return fld, path


def _track_opts(args):
    return TrackOptions(max_depth=args.max_depth, gap_factor=args.gap_factor, deg_tol=args.deg_tol)


def cmd_track(args, doc):
    fld, path = _field_and_path(args, doc)
    opts = _track_opts(args)
    trace = track_eigenvalues(fld, path, opts)
    if args.degeneracies:
        trace = replace(trace, degeneracies=tuple(detect_degeneracies(fld, path, opts=opts, trace=trace)))
    out = {"field": fld.kind.value, "path": jsonio.path(path), "trace": jsonio.trace(trace)}
    if path.closed:
        verdict = s1_report(trace)
        out["s1"] = {"obstructed": verdict.obstructed, "permutation": list(verdict.permutation),
                     "verdict": str(verdict)}
    return out


def cmd_degeneracies(args, doc):
    fld, path = _field_and_path(args, doc)
    events = detect_degeneracies(fld, path, tol=args.deg_tol, opts=_track_opts(args))
    return {"field": fld.kind.value, "degeneracies": [jsonio.event(e) for e in events]}


def cmd_holonomy(args, doc):
    fld, path = _field_and_path(args, doc)
    h = line_holonomy(fld, path, args.branch, _track_opts(args))
    return jsonio.holonomy(h, fld.scalars is Scalars.RealField)


def cmd_doppler(args, doc):
    f = _need(_doc_field(args, doc), "field")
    u = args.u if args.u is not None else DEFAULT_OBSERVER
    w = _need(args.w, "--w")
    return {"factor": doppler_factor(f, u, w)}


def cmd_spin_prob(args, doc):
    u = args.u if args.u is not None else DEFAULT_OBSERVER
    return {"probability": spin_probability(u, _need(args.v, "--v"), _need(args.w, "--w"))}


def cmd_beta_dist(args, doc):
    u = args.u if args.u is not None else DEFAULT_OBSERVER
    return {"distribution": beta_decay_distribution(u, _need(args.v, "--v"), _need(args.b, "--b"))}


def cmd_examples(args, doc):
    loops = {name: {"field": kind.value, "description": text}
             for name, (kind, text, _) in sorted(BUILTIN_PATHS.items())}
    return {"fields": describe_fields(), "loops": loops}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="biquat", description="Biquaternion and eigenbundle computations (JSON in, JSON out).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text, *groups):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--input", help="JSON input file, '-' for stdin")
        p.add_argument("--json", help="inline JSON input")
        p.add_argument("--output", help="write the result here instead of stdout")
        for g in groups:
            g(p)
        return p

    def biquat_flags(p):
        p.add_argument("--A", type=_complexes, help="vector part, e.g. 1,2j,0")
        p.add_argument("--a0", type=complex, help="scalar part")
        p.add_argument("--chirality", default="S", choices=[c.value for c in Chirality])

    def field_flags(p):
        p.add_argument("--E", type=_floats, help="electric field, e.g. 1,0,0")
        p.add_argument("--B", type=_floats, help="magnetic field")

    def observer_flag(p):
        p.add_argument("--u", type=_floats, help="observer 4-velocity t,x,y,z (default rest)")

    def path_flags(p):
        p.add_argument("--field", choices=[k.value for k in FieldKind])
        p.add_argument("--params", help="JSON object of field parameters")
        p.add_argument("--loop", choices=sorted(BUILTIN_PATHS), help="built-in path")
        p.add_argument("--samples", type=int, default=256)
        p.add_argument("--max-depth", type=int, default=TrackOptions.max_depth)
        p.add_argument("--gap-factor", type=float, default=TrackOptions.gap_factor)
        p.add_argument("--deg-tol", type=float, default=None)

    add("decompose", cmd_decompose, "coefficients in the 16-element basis", biquat_flags)
    p = add("mul", cmd_mul, "product of two biquaternions")
    p.add_argument("--p", help="inline JSON biquat")
    p.add_argument("--q", help="inline JSON biquat")
    p = add("exp", cmd_exp, "exponential of a pure biquat or of a field generator", biquat_flags, field_flags)
    p.add_argument("--zero", action="store_true", help="exponential of the zero element")
    add("log", cmd_log, "logarithm of a Lorentz matrix or Lorentz biquat", biquat_flags)
    add("modsq", cmd_modsq, "modulus-squared image of a biquat", biquat_flags)
    add("lift", cmd_lift, "biquat preimage of a proper Lorentz matrix")
    add("eig", cmd_eig, "field eigenvalues or biquat eigenvalues", biquat_flags, field_flags)
    p = add("eigvec", cmd_eigvec, "field eigenvector or biquat eigenspace basis",
            biquat_flags, field_flags, observer_flag)
    p.add_argument("--negative", action="store_true", help="eigenvector for -lambda_F")
    p.add_argument("--lam", type=complex, help="biquat eigenvalue to use")
    add("classify", cmd_classify, "spectral case of a biquat or field", biquat_flags, field_flags)
    p = add("track", cmd_track, "track eigenvalue branches along a path", path_flags)
    p.add_argument("--degeneracies", action="store_true", help="also report degeneracy events")
    add("degeneracies", cmd_degeneracies, "degeneracy events along a path", path_flags)
    p = add("holonomy", cmd_holonomy, "eigenline holonomy around a loop", path_flags)
    p.add_argument("--branch", type=int, default=0)
    p = add("doppler", cmd_doppler, "principal eigenvector ratio under a boost", field_flags, observer_flag)
    p.add_argument("--w", type=_floats, help="boost velocity")
    p = add("spin-prob", cmd_spin_prob, "spin transition probability", observer_flag)
    p.add_argument("--v", type=_floats, help="first unit spin direction")
    p.add_argument("--w", type=_floats, help="second unit spin direction")
    p = add("beta-dist", cmd_beta_dist, "beta-decay angular distribution", observer_flag)
    p.add_argument("--v", type=_floats, help="emitter velocity")
    p.add_argument("--b", type=_floats, help="unit emission direction")
    add("examples", cmd_examples, "list built-in fields and paths")
    return parser


def _option_value(v):
    if isinstance(v, complex):
        return jsonio.cnum(v)
    if isinstance(v, list):
        return [_option_value(x) for x in v]
    return v


def _options(args) -> dict:
    return {k: _option_value(v) for k, v in sorted(vars(args).items()) if k != "func"}


def _fail(code, detail, status, extra=None):
    doc = {"error": code, "detail": detail}
    for k, v in (extra or {}).items():
        doc[k] = list(v) if isinstance(v, tuple) else v
    sys.stderr.write(json.dumps(doc, default=str) + "\n")
    return status


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        return _fail("UsageError", str(exc), 2)
    try:
        doc = _load_doc(args)
        result = args.func(args, doc)
        result["options"] = _options(args)
        text = jsonio.dumps(result) + "\n"
    except BiquatError as exc:
        return _fail(exc.code, exc.detail, 1 if exc.internal else 2, exc.extra)
    except (ValueError, KeyError, TypeError, OSError) as exc:
        return _fail("InvalidInput", str(exc), 2)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run())
