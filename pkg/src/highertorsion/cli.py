"""Command line interface.

Subcommands::

    torsion --rep EXPR --max-deg D [--numeric --digits P] [--json]
    class   --n N --max-deg D     [--numeric --digits P] [--json]
    cpn     --n N [--report]      [--numeric --digits P] [--json]
    orbits  --rep EXPR            [--json]
    circle  --r R --max-deg D     [--numeric --digits P] [--json]
    zeta    --k K --digits P
    cocycle --n N --k K --elements FILE --order Q [--check-coboundary]
            [--fd-step H] [--json]

Exit status: 0 on success, 2 on input errors, 3 on solver or quadrature
failures.  Exact coefficients are printed symbolically (z3, z5, ...)
unless ``--numeric`` is given; ``--json`` switches to the structured
format of :mod:`highertorsion.serialize`.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import Decimal, localcontext

from . import serialize
from .chernweil import sphere_bundle_torsion_class
from .cpn import evaluate_torsion_class, nonvanishing_report
from .errors import (
    FixedPointError,
    GeometryInputError,
    InvalidModelError,
    NotSymmetricError,
    ParabolicConfigurationError,
    QuadratureError,
    RankMismatchError,
    RepParseError,
    SolverError,
    TruncationError,
)
from .repexpr import parse_rep
from .torsion import circle_torsion, equivariant_euler, torsion_series
from .zetapoly import zeta_fraction

INPUT_ERRORS = (RepParseError, FixedPointError, NotSymmetricError,
                RankMismatchError, TruncationError, InvalidModelError,
                GeometryInputError, ParabolicConfigurationError, ValueError)
SOLVER_ERRORS = (SolverError, QuadratureError)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="highertorsion",
        description="Torsion classes of sphere bundles, exactly; plus a "
                    "complex-hyperbolic cocycle harness.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output_flags(p, numeric=True):
        if numeric:
            p.add_argument("--numeric", action="store_true",
                           help="print decimal coefficients instead of "
                                "symbolic zeta values")
            p.add_argument("--digits", type=int, default=15,
                           help="significant digits for --numeric")
        p.add_argument("--json", action="store_true",
                       help="emit the structured machine format")

    p = sub.add_parser("torsion", help="torsion series of a representation")
    p.add_argument("--rep", required=True, help="representation expression")
    p.add_argument("--max-deg", type=int, default=16)
    add_output_flags(p)

    p = sub.add_parser("class", help="sphere-bundle torsion class in Chern classes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=8)
    add_output_flags(p)

    p = sub.add_parser("cpn", help="torsion class evaluated in H*(CP^n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=None)
    p.add_argument("--report", action="store_true",
                   help="print the degree-4j nonvanishing report")
    add_output_flags(p)

    p = sub.add_parser("orbits", help="orbit classes of the equivariant "
                                      "Euler characteristic")
    p.add_argument("--rep", required=True)
    add_output_flags(p, numeric=False)

    p = sub.add_parser("circle", help="torsion series of a circle acting "
                                      "with winding number r")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--max-deg", type=int, default=16)
    add_output_flags(p)

    p = sub.add_parser("zeta", help="zeta value at an odd integer")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--digits", type=int, required=True,
                   help="decimal places to print")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("cocycle", help="evaluate the geodesic-simplex group "
                                       "cocycle from an element file")
    p.add_argument("--n", type=int, required=True,
                   help="complex dimension of the hyperbolic ball")
    p.add_argument("--k", type=int, required=True,
                   help="power of the invariant form (simplex dim = 2k)")
    p.add_argument("--elements", required=True,
                   help="JSON file with the isometry matrices")
    p.add_argument("--order", type=int, required=True,
                   help="quadrature order (Gauss points per axis)")
    p.add_argument("--check-coboundary", action="store_true",
                   help="treat the file as j+2 elements and report the "
                        "coboundary residual")
    p.add_argument("--fd-step", type=float, default=1e-5)
    p.add_argument("--json", action="store_true")

    return parser


def _emit(args, payload_json, payload_text):
    if getattr(args, "json", False):
        print(json.dumps(payload_json, indent=2, sort_keys=True))
    else:
        print(payload_text)


def cmd_torsion(args):
    rep = parse_rep(args.rep).to_representation()
    series = torsion_series(rep, args.max_deg)
    digits = args.digits if args.numeric else None
    _emit(args, serialize.graded_poly_to_json(series, digits),
          serialize.render_graded_poly(series, digits))


def cmd_class(args):
    cls = sphere_bundle_torsion_class(args.n, args.max_deg)
    digits = args.digits if args.numeric else None
    _emit(args, serialize.char_class_to_json(cls, digits),
          serialize.render_char_class(cls, digits))


def cmd_cpn(args):
    if args.report:
        report = nonvanishing_report(args.n)
        text = "\n".join(f"T[{d}] nonzero: {'yes' if v else 'no'}"
                         for d, v in sorted(report.items()))
        _emit(args, {"kind": "nonvanishing_report", "n": args.n,
                     "report": {str(d): v for d, v in report.items()}}, text)
        return
    cls = evaluate_torsion_class(args.n, args.max_deg)
    digits = args.digits if args.numeric else None
    _emit(args, serialize.cpn_class_to_json(cls, digits),
          serialize.render_cpn_class(cls, digits))


def cmd_orbits(args):
    rep = parse_rep(args.rep).to_representation()
    orbits = equivariant_euler(rep)
    as_json = [{"weight": list(o.weight), "multiplicity": o.multiplicity,
                "quotient": o.quotient, "euler_number": o.euler_number,
                "stabilizer_corank": o.stabilizer_corank,
                "stabilizer_kernel": [list(v) for v in o.stabilizer_kernel]}
               for o in orbits]
    lines = [f"weight={o.weight} multiplicity={o.multiplicity} "
             f"quotient={o.quotient} euler={o.euler_number} "
             f"stabilizer_kernel={list(o.stabilizer_kernel)}"
             for o in orbits]
    _emit(args, {"kind": "orbits", "classes": as_json}, "\n".join(lines))


def cmd_circle(args):
    series = circle_torsion(args.r, args.max_deg)
    digits = args.digits if args.numeric else None
    _emit(args, serialize.graded_poly_to_json(series, digits),
          serialize.render_graded_poly(series, digits))


def cmd_zeta(args):
    if args.digits < 1:
        raise ValueError(f"digits must be positive, got {args.digits}")
    approx = zeta_fraction(args.k, args.digits + 8)
    with localcontext() as ctx:
        ctx.prec = args.digits + 8
        value = Decimal(approx.numerator) / Decimal(approx.denominator)
        quantum = Decimal(1).scaleb(-args.digits)
        text = str(value.quantize(quantum))
    if args.json:
        print(json.dumps({"kind": "zeta", "k": args.k,
                          "digits": args.digits, "value": text}))
    else:
        print(text)


def cmd_cocycle(args):
    from .hyperbolic import CHPoint, cocycle_eval, coboundary_residual
    from .hyperbolic.elements_io import load_elements
    import numpy as np

    elements = load_elements(args.elements, n=args.n)
    j = 2 * args.k
    base = CHPoint(np.zeros(args.n, dtype=complex))
    if args.check_coboundary:
        expected = j + 2
        if len(elements) != expected:
            raise ValueError(
                f"coboundary check for k={args.k} needs {expected} elements, "
                f"file has {len(elements)}")
        residual, faces = coboundary_residual(
            elements, base, args.k, args.order,
            fd_step=args.fd_step, return_faces=True)
        payload = {"kind": "coboundary", "j": j, "k": args.k,
                   "order": args.order, "residual": residual,
                   "faces": faces,
                   "max_face_abs": max(abs(f) for f in faces)}
        text = (f"coboundary residual = {residual:.12g}\n"
                + "\n".join(f"face[{i}] = {v:.12g}" for i, v in enumerate(faces)))
        _emit(args, payload, text)
    else:
        expected = j + 1
        if len(elements) != expected:
            raise ValueError(
                f"cocycle evaluation for k={args.k} needs {expected} "
                f"elements, file has {len(elements)}")
        value = cocycle_eval(elements, base, args.k, args.order,
                             fd_step=args.fd_step)
        payload = {"kind": "cocycle", "j": j, "k": args.k,
                   "order": args.order, "value": value}
        _emit(args, payload, f"{value:.12g}")


COMMANDS = {
    "torsion": cmd_torsion,
    "class": cmd_class,
    "cpn": cmd_cpn,
    "orbits": cmd_orbits,
    "circle": cmd_circle,
    "zeta": cmd_zeta,
    "cocycle": cmd_cocycle,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except SOLVER_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 3
    except INPUT_ERRORS as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
