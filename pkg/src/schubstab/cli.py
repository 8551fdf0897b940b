"""Command-line front end.

Every subcommand prints its result to stdout and progress notes to stderr,
so pipelines can parse the primary stream cleanly.  With --json the result
is a single JSON document rendered with sorted keys and fixed indentation;
identical invocations (including seeds) produce byte-identical output.

Exit codes: 0 when every emitted certificate has an empty violations list,
1 when some check found violations or a derivation was refused, 2 for
usage errors.  Rational arguments are "p/q" or integer strings; floats are
rejected to keep the exactness contract end to end.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from .bimodule import (
    graph_twist_table,
    verify_bimodule_closure,
    verify_filtration_identity,
    verify_triangular_injectivity,
    verify_unitriangular,
)
from .lattice import ChargeParams, verify_charge_transforms
from .perms import Permutation
from .poly import verify_demazure_relations
from .schubert import double_schubert, schubert_poly
from .stability import (
    SplitSheafP1,
    bayer_shadow_scan,
    derive_twist_chain,
    hn_factors_to_json,
    hn_split_p1,
)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def rational(text: str) -> Fraction:
    """Parse "p/q" or an integer string; floats are usage errors."""
    if not _RATIONAL_RE.match(text.strip()):
        raise argparse.ArgumentTypeError(
            f"{text!r} is not an exact rational (use p/q or an integer)"
        )
    try:
        return Fraction(text.strip())
    except ZeroDivisionError:
        raise argparse.ArgumentTypeError(f"{text!r} has a zero denominator")


def int_list(text: str) -> tuple[int, ...]:
    """Parse a comma-separated list of integers."""
    items = [piece.strip() for piece in text.split(",") if piece.strip()]
    try:
        return tuple(int(piece) for piece in items)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not a comma-separated integer list")


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def jsonable(obj):
    """Recursively convert library values into JSON-serializable ones."""
    if isinstance(obj, Fraction):
        return str(obj)
    if obj is None or isinstance(obj, (str, int, float, bool)):
        return obj
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(x) for x in obj)
    if hasattr(obj, "to_json"):
        return jsonable(obj.to_json())
    return str(obj)


def _progress(message: str) -> None:
    print(message, file=sys.stderr)


def _emit(args, payload, lines) -> None:
    if args.json:
        print(json.dumps(jsonable(payload), sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _cert_lines(cert: dict) -> list[str]:
    bad = cert.get("violations", [])
    status = "ok" if not bad else f"FAILED ({len(bad)} violations)"
    head = f"{cert.get('check', 'check')}: {status}"
    lines = [head]
    for violation in bad[:5]:
        lines.append("  violation: " + json.dumps(jsonable(violation), sort_keys=True))
    if len(bad) > 5:
        lines.append(f"  ... and {len(bad) - 5} more")
    return lines


def _exit_code(certs) -> int:
    return 0 if all(not c.get("violations") for c in certs) else 1


# ----------------------------------------------------------------- handlers


def _cmd_schubert(args) -> int:
    try:
        w = Permutation(args.w)
    except ValueError as exc:
        _progress(f"error: {exc}")
        return 2
    if w.n != args.n:
        _progress(f"error: --w has rank {w.n}, --n is {args.n}")
        return 2
    poly = double_schubert(w) if args.double else schubert_poly(w)
    payload = {"w": w.to_json(), "double": args.double, "poly": poly.to_json()}
    _emit(args, payload, [str(poly)])
    return 0


def _cmd_verify_demazure(args) -> int:
    _progress(f"checking divided-difference relations at n={args.n} ...")
    cert = verify_demazure_relations(args.n, args.trials, args.seed)
    _emit(args, cert, _cert_lines(cert))
    return _exit_code([cert])


def _cmd_verify_soergel(args) -> int:
    n = args.n
    certs = []
    _progress(f"checking filtration identity at n={n} ...")
    certs.append(verify_filtration_identity(n))
    _progress(f"checking change-of-basis unitriangularity at n={n} ...")
    certs.append(verify_unitriangular(n))
    if n <= 3:
        top = Permutation.longest(n).length()
        for j in range(top + 2):
            _progress(f"checking right multiplication closure at level {j} ...")
            certs.append(verify_bimodule_closure(n, j))
        _progress(f"checking triangular injectivity at n={n} ...")
        certs.append(verify_triangular_injectivity(n))
    else:
        _progress("closure and injectivity certificates are emitted for n <= 3 only")
    payload = {"certificates": certs}
    lines = [line for cert in certs for line in _cert_lines(cert)]
    _emit(args, payload, lines)
    return _exit_code(certs)


def _cmd_verify_charges(args) -> int:
    try:
        p = ChargeParams(args.a, args.b, args.n)
    except ValueError as exc:
        _progress(f"error: {exc}")
        return 2
    _progress(f"checking charge transformation laws at n={args.n}, m={args.m} ...")
    cert = verify_charge_transforms(p, args.m, args.trials, args.seed)
    _emit(args, cert, _cert_lines(cert))
    return _exit_code([cert])


def _cmd_scan_bayer(args) -> int:
    try:
        p = ChargeParams(args.a, args.b, args.n)
    except ValueError as exc:
        _progress(f"error: {exc}")
        return 2
    if args.n >= 2:
        cells = 2**args.n
        _progress(
            f"exploratory box scan: {2 * args.bound + 1}^{cells} vectors at n={args.n}"
        )
    _progress(f"scanning twist shadow up to bound {args.bound} ...")
    cert = bayer_shadow_scan(p, args.bound)
    _emit(args, cert, _cert_lines(cert))
    return _exit_code([cert])


def _cmd_hn_p1(args) -> int:
    try:
        sheaf = SplitSheafP1(args.degrees, args.torsion)
        if sheaf.is_zero:
            raise ValueError("give at least one bundle degree or torsion length")
        p = ChargeParams(args.a, args.b, 1)
        factors = hn_split_p1(sheaf, p)
    except ValueError as exc:
        _progress(f"error: {exc}")
        return 2
    payload = {"sheaf": sheaf.to_json(), "factors": hn_factors_to_json(factors)}
    lines = [
        f"{i}. {factor}   {point}"
        for i, (factor, point) in enumerate(factors, start=1)
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_derive_chain(args) -> int:
    try:
        certs = derive_twist_chain(args.adegrees, args.N)
    except ValueError as exc:
        _progress(f"error: {exc}")
        return 2
    payload = {"certificates": certs}
    lines = []
    for cert in certs:
        j = cert["params"]["j"]
        goal = cert["goal"]
        if cert["achievable"]:
            word = ",".join(cert["word"])
            lines.append(f"j={j}: derived twist {goal['twist']} at shift {j} via [{word}]")
        else:
            reason = cert["violations"][0]["reason"]
            lines.append(f"j={j}: REFUSED ({reason})")
    _emit(args, payload, lines)
    return _exit_code(certs)


def _cmd_table_graph_twists(args) -> int:
    entries = graph_twist_table(args.n)
    payload = {"n": args.n, "entries": entries}
    lines = []
    for entry in entries:
        pairs = " ".join(f"({i},{j})" for i, j in entry.inversion_set)
        degrees = ",".join(str(d) for d in entry.degrees)
        lines.append(
            f"w={entry.w}  inversions=[{pairs}]  delta={entry.delta}  degrees=({degrees})"
        )
    _emit(args, payload, lines)
    return 0


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json", action="store_true", help="emit a JSON document instead of text"
    )

    parser = argparse.ArgumentParser(
        prog="schubstab",
        description="Exact Schubert calculus, Soergel-type filtrations, and "
        "stability charge checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("schubert", parents=[common], help="print a Schubert polynomial")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--w", type=int_list, required=True, metavar="ONELINE")
    p.add_argument("--double", action="store_true", help="two-alphabet version")
    p.set_defaults(func=_cmd_schubert)

    verify = sub.add_parser("verify", help="run verification sweeps")
    vsub = verify.add_subparsers(dest="target", required=True)

    p = vsub.add_parser("demazure", parents=[common], help="divided-difference relations")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--trials", type=positive_int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_demazure)

    p = vsub.add_parser("soergel", parents=[common], help="filtration structure checks")
    p.add_argument("--n", type=positive_int, required=True)
    p.set_defaults(func=_cmd_verify_soergel)

    p = vsub.add_parser("charges", parents=[common], help="charge transformation laws")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--m", type=positive_int, default=2)
    p.add_argument("--a", type=rational, default=Fraction(1))
    p.add_argument("--b", type=rational, default=Fraction(0))
    p.add_argument("--trials", type=positive_int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify_charges)

    scan = sub.add_parser("scan", help="run shadow scans")
    ssub = scan.add_subparsers(dest="target", required=True)

    p = ssub.add_parser("bayer", parents=[common], help="twist shadow over a box")
    p.add_argument("--n", type=positive_int, required=True)
    p.add_argument("--a", type=rational, default=Fraction(1))
    p.add_argument("--b", type=rational, default=Fraction(0))
    p.add_argument("--bound", type=positive_int, default=25)
    p.set_defaults(func=_cmd_scan_bayer)

    hn = sub.add_parser("hn", help="Harder-Narasimhan filtrations")
    hsub = hn.add_subparsers(dest="target", required=True)

    p = hsub.add_parser("p1", parents=[common], help="split sheaves on the line")
    p.add_argument("--degrees", type=int_list, default=())
    p.add_argument("--torsion", type=int_list, default=())
    p.add_argument("--a", type=rational, default=Fraction(1))
    p.add_argument("--b", type=rational, default=Fraction(0))
    p.set_defaults(func=_cmd_hn_p1)

    derive = sub.add_parser("derive", help="certificate derivations")
    dsub = derive.add_subparsers(dest="target", required=True)

    p = dsub.add_parser("chain", parents=[common], help="twist-shift chain goals")
    p.add_argument("--adegrees", type=int_list, required=True)
    p.add_argument("--N", type=positive_int, required=True)
    p.set_defaults(func=_cmd_derive_chain)

    table = sub.add_parser("table", help="printable tables")
    tsub = table.add_subparsers(dest="target", required=True)

    p = tsub.add_parser("graph-twists", parents=[common], help="inversion data per permutation")
    p.add_argument("--n", type=positive_int, required=True)
    p.set_defaults(func=_cmd_table_graph_twists)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
