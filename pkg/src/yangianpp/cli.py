"""Command line surface.

Commands: enum, rep build, rep check, shuffle mul, shuffle check, shift.
Exit codes: 0 pass, 1 relation failure, 2 usage, 3 cap exceeded,
4 resonance, 5 kernel error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import partitions3d as p3
from . import pyramid as pyr
from .errors import CapExceeded, DenominatorNotCancelled, Resonance, YangianppError
from .exact import Params, parse_rational, random_params, rational_str
from .relations import full_suite
from .reps import Geometry, Representation, SparseOperator, detect_shift, dump_operators

EXIT_OK = 0
EXIT_RELATION = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_RESONANCE = 4
EXIT_KERNEL = 5


def _parse_geometry(s: str):
    if s == "c3":
        return "c3", 0
    if s.startswith("conifold:"):
        return "conifold", int(s.split(":", 1)[1])
    raise ValueError(f"geometry must be c3 or conifold:m, got {s!r}")


def _params_from_args(args) -> Params:
    mode = getattr(args, "mode", "rational")
    raw = getattr(args, "params", "random")
    if raw == "random":
        return random_params(getattr(args, "seed", 2024), mode=mode)
    h1, h2, chi = (parse_rational(x) for x in raw.split(","))
    return Params.make(h1, h2, chi, mode=mode)


def _emit(obj, args):
    text = json.dumps(obj, sort_keys=True, indent=1)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_enum(args) -> int:
    if args.what == "pp":
        if args.max_boxes < 0:
            print("enum pp: --max-boxes must be nonnegative", file=sys.stderr)
            return EXIT_USAGE
        levels = p3.enumerate_plane_partitions(args.max_boxes)
        out = {
            "counts": [len(L) for L in levels],
            "levels": [[lam.to_json() for lam in L] for L in levels],
        }
        _emit(out, args)
        return EXIT_OK
    # pyramid
    if args.length < 1 or args.max_stones < 0:
        print("enum pyramid: bad --length/--max-stones", file=sys.stderr)
        return EXIT_USAGE
    groups = pyr.enumerate_pyramids(args.length, args.max_stones, sector=args.sector)
    out = {
        "length": args.length,
        "groups": [
            {
                "blacks": b,
                "whites": w,
                "sector": b - w,
                "count": len(pis),
                "pyramids": [pi.to_json() for pi in pis],
            }
            for (b, w), pis in groups.items()
        ],
    }
    _emit(out, args)
    return EXIT_OK


def cmd_rep_build(args) -> int:
    kind, m = _parse_geometry(args.geometry)
    params = _params_from_args(args)
    geometry = Geometry(kind, params, args.level, m=m, sector=args.sector)
    rep = Representation(geometry)
    text = dump_operators(rep, args.imax)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK


def _verify_operator_file(path, args) -> int:
    """Recompute the operators for the stored config and compare entries."""
    with open(path) as fh:
        data = json.load(fh)
    g = data["geometry"]
    pj = data["params"]
    params = Params.make(
        parse_rational(pj["h1"]), parse_rational(pj["h2"]), parse_rational(pj["chi"]),
        mode=pj.get("mode", "rational"),
    )
    geometry = Geometry(
        g["kind"], params, g["N"], m=g.get("m", 0), sector=g.get("sector", 0)
    )
    rep = Representation(geometry)
    for fam, builder in (("e", rep.build_e), ("f", rep.build_f)):
        for key, opjson in data["operators"][fam].items():
            fresh = builder(int(key))
            stored = SparseOperator.from_json(opjson)
            if fresh.to_json() != stored.to_json():
                print(
                    f"operator file mismatch: {fam}_{key} disagrees with recomputation",
                    file=sys.stderr,
                )
                return EXIT_RELATION
    print("operator file verified")
    return EXIT_OK


def cmd_rep_check(args) -> int:
    if args.operators:
        return _verify_operator_file(args.operators, args)
    kind, m = _parse_geometry(args.geometry)
    which = tuple(args.relations.split(","))
    bundle = full_suite(
        kind,
        args.level,
        imax=args.imax,
        m=m,
        sector=args.sector,
        specializations=args.specializations,
        seed=args.seed,
        mode=args.mode,
        which=which,
    )
    _emit(bundle.to_json(), args)
    if not bundle.all_pass:
        failing = sorted(
            {r.relation for reps in bundle.reports for r in reps if r.status == "fail"}
        )
        print(f"FAILED: {', '.join(failing)}", file=sys.stderr)
        return EXIT_RELATION
    return EXIT_OK


def cmd_shift(args) -> int:
    kind, m = _parse_geometry(args.geometry)
    params = _params_from_args(args)
    geometry = Geometry(kind, params, args.level, m=m, sector=args.sector)
    rep = Representation(geometry)
    l, z1 = detect_shift(rep)
    _emit({"l": l, "z1": rational_str(z1)}, args)
    return EXIT_OK


def _parse_kernel(s: str, params):
    from .shuffle import Kernel

    if s == "a1":
        return Kernel.a1()
    if s == "c3":
        return Kernel.c3(params)
    if s.startswith("jordan:"):
        return Kernel.jordan(parse_rational(s.split(":", 1)[1]))
    raise ValueError(f"kernel must be a1, c3 or jordan:c, got {s!r}")


def _parse_sym(expr: str):
    from .shuffle import SymPoly

    expr = expr.strip()
    if expr == "1":
        return SymPoly.power(0)
    if expr == "x":
        return SymPoly.power(1)
    if expr.startswith("x^"):
        return SymPoly.power(int(expr[2:]))
    raise ValueError(f"cannot parse shuffle operand {expr!r} (use 1, x or x^k)")


def cmd_shuffle(args) -> int:
    from .shuffle import check_a1_anticomm, check_assoc, check_c3_ee, check_jordan_ee, shuffle_mul

    params = _params_from_args(args)
    kernel = _parse_kernel(args.kernel, params)
    if args.action == "mul":
        f = _parse_sym(args.left)
        g = _parse_sym(args.right)
        prod = shuffle_mul(f, g, kernel)
        out = {
            "variables": prod.v,
            "terms": {
                ",".join(map(str, e)): rational_str(c) for e, c in sorted(prod.poly.terms.items())
            },
        }
        _emit(out, args)
        return EXIT_OK
    # shuffle check
    reports = [check_assoc(kernel, trials=12)]
    if args.kernel == "a1":
        reports.append(check_a1_anticomm(5))
    elif args.kernel == "c3":
        reports.append(check_c3_ee(params, imax=2))
    elif args.kernel.startswith("jordan:"):
        reports.append(check_jordan_ee(parse_rational(args.kernel.split(":", 1)[1])))
    _emit({"relations": [r.to_json() for r in reports]}, args)
    return EXIT_OK if all(r.status == "pass" for r in reports) else EXIT_RELATION


def build_parser():
    ap = argparse.ArgumentParser(
        prog="yangianpp",
        description="Exact fixed-point representations of shifted affine Yangians "
        "on plane partitions and pyramid partitions, with relation verification.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enum", help="enumerate fixed-point bases")
    enum_sub = p_enum.add_subparsers(dest="what", required=True)
    pp = enum_sub.add_parser("pp", help="3D plane partitions by box count")
    pp.add_argument("--max-boxes", type=int, required=True)
    pp.add_argument("--out")
    pp.set_defaults(func=cmd_enum)
    py = enum_sub.add_parser("pyramid", help="pyramid partitions of a length-m room")
    py.add_argument("--length", type=int, required=True)
    py.add_argument("--max-stones", type=int, required=True)
    py.add_argument("--sector", type=int, default=None)
    py.add_argument("--out")
    py.set_defaults(func=cmd_enum)

    p_rep = sub.add_parser("rep", help="build or check a representation")
    rep_sub = p_rep.add_subparsers(dest="action", required=True)
    rb = rep_sub.add_parser("build", help="write basis and operator matrices")
    rb.add_argument("--geometry", required=True, help="c3 or conifold:m")
    rb.add_argument("--level", type=int, default=3)
    rb.add_argument("--imax", type=int, default=1)
    rb.add_argument("--sector", type=int, default=1)
    rb.add_argument("--params", default="random", help='"h1,h2,chi" as p/q strings or "random"')
    rb.add_argument("--seed", type=int, default=2024)
    rb.add_argument("--mode", choices=("rational", "prime-field"), default="rational")
    rb.add_argument("--out")
    rb.set_defaults(func=cmd_rep_build)
    rc = rep_sub.add_parser("check", help="run the relation suite")
    rc.add_argument("--geometry", default="c3")
    rc.add_argument("--level", type=int, default=5)
    rc.add_argument("--imax", type=int, default=2)
    rc.add_argument("--sector", type=int, default=1)
    rc.add_argument("--relations", default="all", help="all or comma list: ef,ee,serre,psi,poles,shift")
    rc.add_argument("--specializations", type=int, default=3)
    rc.add_argument("--seed", type=int, default=2024)
    rc.add_argument("--mode", choices=("rational", "prime-field"), default="rational")
    rc.add_argument("--operators", help="verify a stored operator file instead")
    rc.add_argument("--out")
    rc.set_defaults(func=cmd_rep_check)

    p_shuffle = sub.add_parser("shuffle", help="shuffle-algebra products and checks")
    sh_sub = p_shuffle.add_subparsers(dest="action", required=True)
    sm = sh_sub.add_parser("mul", help="multiply two one-variable monomials")
    sm.add_argument("left")
    sm.add_argument("right")
    sm.add_argument("--kernel", default="c3")
    sm.add_argument("--params", default="random")
    sm.add_argument("--seed", type=int, default=2024)
    sm.add_argument("--out")
    sm.set_defaults(func=cmd_shuffle)
    sc = sh_sub.add_parser("check", help="kernel relation checks")
    sc.add_argument("--kernel", default="c3")
    sc.add_argument("--params", default="random")
    sc.add_argument("--seed", type=int, default=2024)
    sc.add_argument("--out")
    sc.set_defaults(func=cmd_shuffle)

    p_shift = sub.add_parser("shift", help="detect the shift degree and point")
    p_shift.add_argument("--geometry", required=True)
    p_shift.add_argument("--level", type=int, default=3)
    p_shift.add_argument("--sector", type=int, default=1)
    p_shift.add_argument("--params", default="random")
    p_shift.add_argument("--seed", type=int, default=2024)
    p_shift.add_argument("--mode", choices=("rational", "prime-field"), default="rational")
    p_shift.add_argument("--out")
    p_shift.set_defaults(func=cmd_shift)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    workers = os.environ.get("YANGIANPP_THREADS")
    if workers is not None and (not workers.isdigit() or int(workers) < 1):
        print("YANGIANPP_THREADS must be a positive integer", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Resonance as exc:
        print(f"resonance: {exc}", file=sys.stderr)
        return EXIT_RESONANCE
    except DenominatorNotCancelled as exc:
        print(f"kernel error: {exc}", file=sys.stderr)
        return EXIT_KERNEL
    except (ValueError, YangianppError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
