"""Command-line front end.

Exit codes: 0 success or isomorphic, 1 negative or unknown verdict (or a
sweep with failures), 2 usage or parse error, 3 resource bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import harness
from .deciders import (
    invariant_signature,
    richardson_isomorphic_sufficient,
    schubert_distinguishing_invariants,
    schubert_isomorphic,
)
from .errors import DomainError, ParseError, ResourceBoundError
from .partitions import BoxFrame, Partition, parse_partition, subdiagram_counts, xi
from .posets import build_poset, opposite
from .render import render_ascii
from .singular import is_smooth, lambda_zero, sing_components
from .skew import parse_skew

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BOUND = 0, 1, 2, 3


def _emit(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def _parts(lam: Partition) -> list[int]:
    return list(lam.parts)


def cmd_check_schubert(args) -> int:
    lam, mu = parse_partition(args.lam), parse_partition(args.mu)
    iso = schubert_isomorphic(lam, mu)
    report = schubert_distinguishing_invariants(lam, mu) if (args.explain or args.json) else None
    if args.json:
        _emit({"lambda": _parts(lam), "mu": _parts(mu), "isomorphic": iso, "report": report.to_json()})
    else:
        print("isomorphic" if iso else "not isomorphic")
        if args.explain:
            print(f"rung {report.rung}: {report.reason}")
            for line in report.trace:
                print(f"  {line}")
    return EXIT_OK if iso else EXIT_NEGATIVE


def cmd_check_richardson(args) -> int:
    theta, other = parse_skew(args.theta), parse_skew(args.other)
    result = richardson_isomorphic_sufficient(theta, other)
    if args.json:
        _emit({"theta": theta.to_json(), "other": other.to_json(), **result.to_json()})
    else:
        print(result.verdict.value)
        if args.explain or not result.isomorphic:
            print(result.note)
        if args.explain and not result.isomorphic:
            for shape in result.unmatched_left:
                print(f"  unmatched component on the left: {shape}")
            for shape in result.unmatched_right:
                print(f"  unmatched component on the right: {shape}")
    return EXIT_OK if result.isomorphic else EXIT_NEGATIVE


def cmd_sing(args) -> int:
    lam = parse_partition(args.lam)
    if not lam:
        raise DomainError("the empty partition has no singular locus")
    components = sing_components(lam)
    zero = None if is_smooth(lam) else lambda_zero(lam)
    if args.json:
        _emit({
            "components": [_parts(c) for c in components],
            "lambda0": _parts(zero) if zero is not None else None,
            "smooth": is_smooth(lam),
        })
        return EXIT_OK
    if not components:
        print(f"{lam}: smooth (one rectangle)")
        return EXIT_OK
    for i, component in enumerate(components, start=1):
        print(f"lambda^{i} = {component}")
        print(render_ascii(component))
    print(f"lambda^0 = {zero}")
    print(render_ascii(zero))
    return EXIT_OK


def cmd_xi(args) -> int:
    value = xi(parse_partition(args.lam))
    if args.json:
        _emit({"xi": value})
    else:
        print(value)
    return EXIT_OK


def cmd_betti(args) -> int:
    counts = subdiagram_counts(parse_partition(args.lam))
    if args.json:
        _emit({"counts": counts})
    else:
        print(" ".join(map(str, counts)))
    return EXIT_OK


def cmd_poset(args) -> int:
    theta = parse_skew(args.theta)
    poset = build_poset(theta)
    if args.opposite:
        poset = opposite(poset)
    if args.json or args.format == "json":
        _emit(poset.to_json())
    else:
        print(poset.to_dot())
    return EXIT_OK


def cmd_render(args) -> int:
    text = args.diagram
    diagram = parse_skew(text) if "/" in text else parse_partition(text)
    if args.json:
        payload = diagram.to_json() if "/" in text else _parts(diagram)
        _emit({"diagram": payload, "ascii": render_ascii(diagram, dots=args.dots)})
    else:
        print(render_ascii(diagram, dots=args.dots))
    return EXIT_OK


def cmd_signature(args) -> int:
    sig = invariant_signature(parse_skew(args.theta))
    if args.json:
        _emit(sig.to_json())
    else:
        for key, value in sig.to_json().items():
            print(f"{key}: {value}")
    return EXIT_OK


def cmd_verify(args) -> int:
    box = BoxFrame.parse(args.box) if args.box else None
    kind = args.kind
    if kind == "sing":
        report = harness.verify_sing_identities(box or BoxFrame(6, 6), jobs=args.jobs)
    elif kind == "betti":
        report = harness.verify_betti_identities(box or BoxFrame(5, 5))
    elif kind == "conn":
        report = harness.verify_lemma_conn(args.max_cells or 8, jobs=args.jobs)
    elif kind == "strongskew":
        report = harness.verify_strongskew(args.max_cells or 8, jobs=args.jobs)
    elif kind == "rotation":
        report = harness.verify_rotation_opposite(args.max_cells or 8, jobs=args.jobs)
    else:
        report = harness.verify_semi_iso_paths(args.max_cells or 7, jobs=args.jobs)
    if args.json:
        _emit(report.to_json())
    else:
        print(report.summary())
        for failure in report.failures[:20]:
            print(f"  {failure}")
    return EXIT_OK if report.ok else EXIT_NEGATIVE


def cmd_explore(args) -> int:
    pairs = harness.conjecture_collision_search(args.max_cells)
    if args.json:
        _emit({"pairs": [[str(a), str(b)] for a, b in pairs]})
    else:
        print(f"{len(pairs)} non-semi-isomorphic pairs share an invariant signature")
        for a, b in pairs:
            print(f"  {a}  ~?  {b}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="grassiso",
        description="Isomorphism of Grassmannian Schubert varieties and Richardson skew shapes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(handler=handler)
        return p

    p = command("check-schubert", cmd_check_schubert, "decide X_lam ~ X_mu")
    p.add_argument("lam")
    p.add_argument("mu")
    p.add_argument("--explain", action="store_true", help="print the distinguishing-invariant trace")

    p = command("check-richardson", cmd_check_richardson, "semi-isomorphism of two skew shapes")
    p.add_argument("theta", help='skew shape "nu / lambda"')
    p.add_argument("other")
    p.add_argument("--explain", action="store_true")

    p = command("sing", cmd_sing, "singular locus components and lambda^0")
    p.add_argument("lam")

    p = command("xi", cmd_xi, "longest hook length")
    p.add_argument("lam")

    p = command("betti", cmd_betti, "number of subdiagrams of each size")
    p.add_argument("lam")

    p = command("poset", cmd_poset, "Hasse diagram of the cell poset")
    p.add_argument("theta")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("--opposite", action="store_true")

    p = command("render", cmd_render, "draw a partition or skew shape")
    p.add_argument("diagram")
    p.add_argument("--dots", action="store_true", help="draw the bounding box with dots")

    p = command("signature", cmd_signature, "invariant signature of a skew shape")
    p.add_argument("theta")

    p = command("verify", cmd_verify, "exhaustive identity sweeps")
    p.add_argument("kind", choices=("sing", "conn", "strongskew", "betti", "rotation", "semiiso"))
    p.add_argument("--box", help="MxK box for partition sweeps")
    p.add_argument("--max-cells", type=int, help="cell bound for skew sweeps")
    p.add_argument("--jobs", type=int, default=1)

    p = command("explore", cmd_explore, "conjecture exploration")
    p.add_argument("what", choices=("collisions",))
    p.add_argument("--max-cells", type=int, default=7)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.handler(args)
    except ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except (ParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
