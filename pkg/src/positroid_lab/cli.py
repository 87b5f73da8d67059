"""``positroid-lab`` command line.

Exit status: 0 success or smooth, 1 singular, 2 parse error, 3 invariant
breach, 4 size guard.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .chordclass import DecoratedPermutation, parse_decorated
from .emit import chord_svg, johnson_dot
from .errors import GuardError, InvariantError, ParseError
from .oracle import census_tsv, guard_limit, jacobian_rank_at
from .permcore import parse_perm, parse_subset
from .posbij import (
    BruhatInterval, GrassmannNecklace, Positroid, decorated_perm_from_interval,
    decorated_perm_from_necklace, grassmann_necklace, interval_from_decorated_perm,
    is_positroid, matroid_of_matrix, necklace_from_positroid, positroid_of,
)
from .smoothgeo import CRITERIA, ConsistencyError, smoothness_report, tangent_codim

FORMS = ("perm", "necklace", "interval", "bases", "matrix")

EXIT_SINGULAR, EXIT_PARSE, EXIT_INVARIANT, EXIT_GUARD = 1, 2, 3, 4


def _read(text: str) -> str:
    if text == "-":
        return sys.stdin.read()
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            return fh.read()
    return text


def _json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc


def _positroid_from_bases(n: int, bases) -> Positroid:
    bases = [tuple(sorted(b)) for b in bases]
    sizes = {len(b) for b in bases}
    if len(sizes) != 1:
        raise InvariantError("bases must be nonempty and of one size")
    if not is_positroid(bases, n):
        raise InvariantError("basis family is not a positroid")
    return Positroid(n, sizes.pop(), frozenset(bases))


def load(form: str, raw: str) -> DecoratedPermutation:
    """Parse ``raw`` in the given form and map it to its decorated permutation."""
    text = _read(raw).strip()
    try:
        if form == "perm":
            return parse_decorated(text)
        data = _json(text)
        if form == "necklace":
            N = GrassmannNecklace(int(data["n"]), tuple(tuple(e) for e in data["entries"]))
            return decorated_perm_from_necklace(N)
        if form == "interval":
            I = BruhatInterval(parse_perm(str(data["u"])), parse_perm(str(data["v"])), int(data["k"]))
            return decorated_perm_from_interval(I)
        if form == "bases":
            bases = [parse_subset(b) if isinstance(b, str) else b for b in data["bases"]]
            return decorated_perm_from_necklace(
                necklace_from_positroid(_positroid_from_bases(int(data["n"]), bases)))
        if form == "matrix":
            rows = [[_entry(x) for x in row] for row in data]
            n = len(rows[0]) if rows else 0
            return decorated_perm_from_necklace(
                necklace_from_positroid(_positroid_from_bases(n, matroid_of_matrix(rows))))
    except (KeyError, TypeError, IndexError) as exc:
        raise ParseError(f"malformed {form} input: {exc}") from exc
    raise ParseError(f"unknown input form {form!r}")


def _entry(x) -> Fraction:
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"matrix entries must be integers or 'p/q' strings, got {x!r}")
    try:
        return Fraction(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix entry {x!r}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def render(wd: DecoratedPermutation, target: str) -> str:
    if target == "perm":
        return str(wd)
    if target == "necklace":
        return _dump(grassmann_necklace(wd).to_json())
    if target == "interval":
        return _dump(interval_from_decorated_perm(wd).to_json())
    if target == "bases":
        return _dump(positroid_of(wd).to_json())
    raise ParseError(f"cannot convert to {target!r}")


def cmd_convert(args) -> int:
    print(render(load(args.source, args.input), args.to))
    return 0


def cmd_smooth(args) -> int:
    wd = load(args.source, args.input)
    criteria = CRITERIA if args.criterion == "all" else (args.criterion,)
    report = smoothness_report(wd, criteria)
    if args.certify:
        if wd.n > guard_limit(7):
            raise GuardError(f"--certify refused for n={wd.n}")
        M = positroid_of(wd)
        ranks = {J: jacobian_rank_at(M, J) for J in M.sorted_bases()}
        bad = [J for J, r in ranks.items() if r != report.tangent_codims[J]]
        if bad:
            raise ConsistencyError(f"Jacobian rank differs from tangent count at {bad}")
        report.jacobian_ranks = ranks
    print(json.dumps(report.to_json(), indent=2))
    return 0 if report.smooth else EXIT_SINGULAR


def cmd_census(args) -> int:
    if args.n > guard_limit(8):
        raise GuardError(f"census refused for n={args.n}")
    sys.stdout.write(census_tsv(args.n, args.criterion, args.jobs))
    return 0


def cmd_emit(args) -> int:
    wd = load(args.source, args.input)
    if args.johnson_dot:
        sys.stdout.write(johnson_dot(positroid_of(wd)))
    else:
        sys.stdout.write(chord_svg(wd))
    return 0


def cmd_oracle(args) -> int:
    wd = load(args.source, args.input)
    if wd.n > guard_limit(8):
        raise GuardError(f"oracle refused for n={wd.n}")
    M = positroid_of(wd)
    bases = [parse_subset(args.basis)] if args.basis else M.sorted_bases()
    rows = [{"basis": list(J), "jacobian_rank": jacobian_rank_at(M, J),
             "tangent_codim": tangent_codim(M, J)} for J in bases]
    print(json.dumps(rows, indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="positroid-lab", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--from", dest="source", choices=FORMS, required=True,
                        help="input form (no auto-detection)")
        sp.add_argument("input", help="the object, '-' for stdin, or @FILE")

    sp = sub.add_parser("convert", help="convert between indexing objects")
    with_input(sp)
    sp.add_argument("--to", choices=("perm", "necklace", "interval", "bases"), required=True)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("smooth", help="smoothness report (exit 0 smooth, 1 singular)")
    with_input(sp)
    sp.add_argument("--criterion", choices=("all",) + CRITERIA, default="all")
    sp.add_argument("--certify", action="store_true",
                    help="also compute exact Jacobian ranks at every torus-fixed point")
    sp.set_defaults(func=cmd_smooth)

    sp = sub.add_parser("census", help="TSV counts of smooth positroid varieties by k")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--criterion", choices=CRITERIA, default="crossed")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_census)

    sp = sub.add_parser("emit", help="DOT of the Johnson graph or SVG of the chord diagram")
    with_input(sp)
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument("--johnson-dot", action="store_true")
    g.add_argument("--chord-svg", action="store_true")
    sp.set_defaults(func=cmd_emit)

    sp = sub.add_parser("oracle", help="exact Jacobian rank at torus-fixed points")
    with_input(sp)
    sp.add_argument("--basis", help="a single basis such as 2,6 (default: all)")
    sp.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except GuardError as exc:
        print(f"guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (InvariantError, ConsistencyError) as exc:
        print(f"invariant: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except OSError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
