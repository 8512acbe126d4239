"""Command-line surface: fan checking, evaluation maps, homomorphism and
morphism enumeration, witness construction, polynomial equality.

Exit codes: 0 success, 1 semantic negative (point in support, functions
unequal), 2 input error, 3 inexhaustive enumeration (cone records present
and no --expand bound given).  Enumerations stream JSON lines; rationals
are printed as exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .fan import Fan1D, GenMatrix, check_balancing, weighted_eval_map
from .homsearch import enumerate_homs, enumerate_morphisms
from .lattice import Lattice
from .tropoly import parse_poly, fn_eq_on_space, fn_eq_on_rays, separating_point
from .witness import PointInSupportError, separating_pair, verify_witness, witness_to_json

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_INEXHAUSTIVE = 3


class InputError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _load_fan(path: str) -> Fan1D:
    data = _load_json(path)
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a fan object with ambient_dim and rays")
    try:
        return Fan1D.from_json_dict(data)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def _load_genmatrix(path: str) -> GenMatrix:
    """A generator matrix from either a fan file or a JSON row list."""
    data = _load_json(path)
    try:
        if isinstance(data, dict):
            return weighted_eval_map(Fan1D.from_json_dict(data))
        return GenMatrix.from_matrix(data)
    except (ValueError, TypeError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def cmd_check(args) -> int:
    fan = _load_fan(args.fan)
    for i, ray in enumerate(fan.rays, start=1):
        print(f"ray {i}: direction {list(ray.direction)} weight {ray.weight}")
    print(f"balanced: {'true' if check_balancing(fan) else 'false'}")
    return EXIT_OK


def cmd_evalmap(args) -> int:
    fan = _load_fan(args.fan)
    gm = weighted_eval_map(fan)
    print(json.dumps([list(r.entries) for r in gm.rows]))
    return EXIT_OK


def _print_enumeration(enum, expand: int | None) -> int:
    if expand is None:
        for line in enum.to_json_lines():
            print(line)
        return EXIT_INEXHAUSTIVE if enum.inexhaustive else EXIT_OK
    print(json.dumps({"kind": "zero"}))
    matrices = set()
    for fam in enum.families:
        s = fam.modulus
        while s <= expand:
            matrices.add(fam.matrix_for(s))
            s += fam.modulus
    if enum.cone_records:
        matrices |= enum.expand_cones(expand)
    matrices.discard(enum.zero_matrix)
    for M in sorted(matrices):
        print(json.dumps({"kind": "matrix", "matrix": [list(r) for r in M]}))
    return EXIT_OK


def cmd_homs(args) -> int:
    source = _load_genmatrix(args.source)
    target = args.target
    if target.startswith("full:"):
        try:
            size = int(target.split(":", 1)[1])
        except ValueError as exc:
            raise InputError(f"bad target {target!r}: expected full:<size>") from exc
        lattice = None
    else:
        tg = _load_genmatrix(target)
        size = tg.n_labels
        lattice = Lattice.from_rows(tg.matrix())
    enum = enumerate_homs(source, size, lattice, jobs=args.jobs)
    return _print_enumeration(enum, args.expand)


def cmd_morphisms(args) -> int:
    from_fan = _load_fan(args.from_fan)
    to_fan = _load_fan(args.to_fan)
    enum = enumerate_morphisms(from_fan, to_fan, jobs=args.jobs)
    if args.expand is None:
        for line in enum.to_json_lines():
            print(line)
        return EXIT_INEXHAUSTIVE if enum.inexhaustive else EXIT_OK
    matrices = enum.expand_T(args.expand)
    zero = tuple((0,) * enum.target_gens.n for _ in range(enum.homs.n))
    matrices.discard(zero)
    print(json.dumps({"kind": "zero"}))
    for M in sorted(matrices):
        print(json.dumps({"kind": "matrix", "matrix": [list(r) for r in M]}))
    return EXIT_OK


def _parse_point(text: str) -> list[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad point {text!r}: {exc}") from exc


def cmd_witness(args) -> int:
    fan = _load_fan(args.fan)
    point = _parse_point(args.point)
    if len(point) != fan.ambient_dim:
        raise InputError(f"point has {len(point)} coordinates, fan lives in "
                         f"R^{fan.ambient_dim}")
    try:
        pair = separating_pair(fan.directions, point)
    except PointInSupportError:
        print("in-support")
        return EXIT_NEGATIVE
    if not verify_witness(pair, fan.directions):
        raise AssertionError("constructed witness failed verification")
    print(witness_to_json(pair))
    return EXIT_OK


def cmd_polyeq(args) -> int:
    if (args.on_fan is None) == (args.on_space is None):
        raise InputError("exactly one of --on-fan and --on-space is required")
    if args.on_fan is not None:
        fan = _load_fan(args.on_fan)
        dim = fan.ambient_dim
    else:
        dim = args.on_space
        if dim < 1:
            raise InputError("--on-space dimension must be positive")
    try:
        f = parse_poly(args.f, dim)
        g = parse_poly(args.g, dim)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    if args.on_fan is not None:
        if fn_eq_on_rays(f, g, fan.directions):
            print("equal")
            return EXIT_OK
        print("unequal")
        bad = next(d for d in fan.directions if f.eval(d) != g.eval(d))
        print(json.dumps([str(c) for c in bad]))
        return EXIT_NEGATIVE
    if fn_eq_on_space(f, g):
        print("equal")
        return EXIT_OK
    print("unequal")
    point = separating_point(f, g)
    print(json.dumps([str(c) for c in point]))
    return EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropfan",
        description="1-dimensional tropical fans: balancing, evaluation maps, "
                    "homomorphism/morphism enumeration, separating witnesses.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a fan file and report balancing")
    p.add_argument("fan")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("evalmap", help="print the weighted evaluation matrix of a fan")
    p.add_argument("fan")
    p.set_defaults(func=cmd_evalmap)

    p = sub.add_parser("homs", help="enumerate homomorphism matrix families")
    p.add_argument("source", help="generator matrix JSON or fan file")
    p.add_argument("target", help="'full:<size>', generator matrix JSON, or fan file")
    p.add_argument("--expand", type=int, metavar="S_MAX",
                   help="expand families into explicit matrices with parameter <= S_MAX")
    p.add_argument("--jobs", type=int, default=1, metavar="K",
                   help="parallel workers for the assignment scan")
    p.set_defaults(func=cmd_homs)

    p = sub.add_parser("morphisms", help="enumerate fan-morphism matrix families")
    p.add_argument("from_fan")
    p.add_argument("to_fan")
    p.add_argument("--expand", type=int, metavar="K_MAX",
                   help="expand families into explicit matrices with parameter <= K_MAX")
    p.add_argument("--jobs", type=int, default=1, metavar="K")
    p.set_defaults(func=cmd_morphisms)

    p = sub.add_parser("witness", help="separating witness for a point against a fan")
    p.add_argument("fan")
    p.add_argument("point", help="comma-separated rationals, e.g. '1/2,3,-2'")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("polyeq", help="decide equality of two polynomial functions")
    p.add_argument("--on-fan", metavar="FAN", help="compare on a fan's support")
    p.add_argument("--on-space", type=int, metavar="N", help="compare on all of R^N")
    p.add_argument("f")
    p.add_argument("g")
    p.set_defaults(func=cmd_polyeq)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
