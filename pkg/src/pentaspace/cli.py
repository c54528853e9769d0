"""Command-line front end.

Every invocation writes one JSON report to stdout and a short summary to
stderr. Exit status: 0 pass, 1 bad input, 2 a mathematical check failed.

    pentaspace classify 1 1 1 1 1
    pentaspace polytope 3 2 3 3 2 --svg out.svg
    pentaspace invariants 1 1 1 1 1
    pentaspace verify --seed 42 --samples 30
    pentaspace dh --target 6 --min-critical 3
"""

from __future__ import annotations

import argparse
import functools
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .dh import ASSUMPTIONS, DHConstraints, enumerate_dh, karshon_filter, verify_no_circle_action
from .errors import InputError, PentaspaceError, VerificationFailed
from .geometry import area, boundary_lattice_count, lattice_count_brute, pick_count
from .invariants import REGULAR, rr_closed_form, symplectic_volume, topology, verify_rr_extension
from .pentagon import EdgeLengths, is_nearly_regular, is_smooth, is_toric_generic, moment_polytope
from .rational import format_rational
from .svg import render_polytope_svg

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_INPUT, EXIT_FAILED = 0, 1, 2


@dataclass
class CommandReport:
    command: str
    inputs: dict
    results: dict = field(default_factory=dict)
    provenance: list[dict] = field(default_factory=list)
    exit_status: int = EXIT_OK

    def claim(self, claim: str, ok: bool | str, tag: str):
        status = ok if isinstance(ok, str) else ("pass" if ok else "fail")
        self.provenance.append({"claim": claim, "status": status, "tag": tag})
        if status == "fail" and self.exit_status == EXIT_OK:
            self.exit_status = EXIT_FAILED

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "inputs": self.inputs,
            "results": self.results,
            "provenance": self.provenance,
            "exit_status": self.exit_status,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"


def _q(x) -> str:
    return format_rational(x)


def _lengths(texts) -> EdgeLengths:
    return EdgeLengths.parse(texts)


def _topology_payload(a: EdgeLengths) -> dict:
    t = topology(a)
    return {
        "euler": str(t.euler),
        "betti": [str(b) for b in t.betti],
        "topology_source": t.source,
    }


def cmd_classify(args) -> CommandReport:
    report = CommandReport("classify", {"a": list(args.a)})
    a = _lengths(args.a)
    report.results = {
        "a": [_q(v) for v in a],
        "smooth": is_smooth(a),
        "nearly_regular": is_nearly_regular(a),
        "toric_generic": is_toric_generic(a),
    }
    return report


def cmd_polytope(args) -> CommandReport:
    report = CommandReport("polytope", {"a": list(args.a), "svg": args.svg})
    a = _lengths(args.a)
    mp = moment_polytope(a)
    P = mp.polygon
    n_area, n_boundary = area(P), boundary_lattice_count(P)
    n_brute, n_pick = lattice_count_brute(P), pick_count(P)
    rr = rr_closed_form(a)
    report.results = {
        "a": [_q(v) for v in a],
        "normalized": [_q(v) for v in mp.lengths],
        "swapped": {"a1_a2": mp.swapped[0], "a4_a5": mp.swapped[1]},
        "vertices": [[_q(v.x), _q(v.y)] for v in P.vertices],
        "n_vertices": str(len(P)),
        "cut_corners": sorted(mp.cut_corners),
        "area": _q(n_area),
        "boundary_lattice_points": str(n_boundary),
        "lattice_points_brute": str(n_brute),
        "pick_count": str(n_pick),
        "rr_closed_form": _q(rr),
    }
    report.claim("brute-force lattice count equals Pick count", n_brute == n_pick, "lattice-count")
    report.claim("lattice count equals closed-form Riemann-Roch number", n_brute == rr, "rr-lattice")
    report.claim("boundary lattice points equal the sum of edge lengths", n_boundary == a.total, "boundary-count")
    report.claim("polygon area equals symplectic volume", n_area == symplectic_volume(a), "volume-area")
    if args.svg:
        Path(args.svg).write_text(render_polytope_svg(mp), encoding="utf-8")
        report.results["svg"] = str(args.svg)
    return report


def cmd_invariants(args) -> CommandReport:
    report = CommandReport("invariants", {"a": list(args.a)})
    a = _lengths(args.a)
    res = {
        "a": [_q(v) for v in a],
        "rr": _q(rr_closed_form(a)),
        "volume": _q(symplectic_volume(a)),
        "nearly_regular": is_nearly_regular(a),
        "toric_generic": is_toric_generic(a),
    }
    if is_nearly_regular(a):
        res.update(_topology_payload(a))
    else:
        res["note"] = "not nearly-regular: rr is the polynomial value, not a lattice count"
    report.results = res
    return report


def cmd_verify(args) -> CommandReport:
    report = CommandReport("verify", {"seed": str(args.seed), "samples": str(args.samples)})
    rr_report = verify_rr_extension(n_samples=args.samples, seed=args.seed)
    try:
        dh_report = verify_no_circle_action()
    except VerificationFailed as exc:
        dh_report = exc.report
    report.results = {
        "rr_extension": rr_report.to_dict(),
        "no_circle_action": dh_report.to_dict(),
    }
    report.claim(
        "Riemann-Roch polynomial fitted to lattice counts equals the closed form",
        not rr_report.mismatched_monomials,
        "rr-polynomial-fit",
    )
    report.claim("fitted polynomial is symmetric in a1..a5", rr_report.symmetric, "rr-symmetry")
    report.claim(
        "volume is the degree-2 part of the Riemann-Roch polynomial",
        rr_report.volume_matches_leading_term,
        "volume-leading-term",
    )
    report.claim("RR of the regular pentagon space is 6", rr_report.rr_regular == 6, "rr-regular")
    report.claim("Euler characteristic of the regular pentagon space is 7", dh_report.euler == 7, "euler-regular")
    report.claim("regular pentagon space is not toric (7 vertices > 6 lattice points)", dh_report.non_toric, "non-toric")
    report.claim(
        "the only DH candidate before the slope filter is (1, 2, 0)",
        [p.values for p in dh_report.pre_filter] == [(1, 2, 0)],
        "dh-unique-candidate",
    )
    report.claim(
        "no DH candidate survives, so there is no Hamiltonian circle action",
        not dh_report.post_filter,
        "no-circle-action",
    )
    report.claim(
        "integral edge lengths give an integral symplectic class", "imported", "imported:integrality"
    )
    for text in ASSUMPTIONS:
        report.claim(text, "assumed", "assumption:dh")
    return report


def cmd_dh(args) -> CommandReport:
    report = CommandReport("dh", {"target": str(args.target), "min_critical": str(args.min_critical)})
    if args.target < 1:
        raise InputError("--target must be at least 1")
    if args.min_critical < 2:
        raise InputError("--min-critical must be at least 2")
    pre = enumerate_dh(DHConstraints(args.target, args.min_critical))
    post = karshon_filter(pre)
    report.results = {
        "pre_filter": [p.to_dict() for p in pre],
        "post_filter": [p.to_dict() for p in post],
        "rr_regular": _q(rr_closed_form(REGULAR)),
    }
    return report


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@functools.lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="pentaspace", description="Invariants of nearly-regular pentagon spaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def five(p):
        p.add_argument("a", nargs=5, metavar="A", help="edge lengths: integers, p/q or decimals")

    p = sub.add_parser("classify", help="smooth / nearly-regular / toric-generic predicates")
    five(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("polytope", help="moment polytope with lattice counts")
    five(p)
    p.add_argument("--svg", help="write an SVG drawing to this path")
    p.set_defaults(func=cmd_polytope)

    p = sub.add_parser("invariants", help="RR number, volume, Euler characteristic, Betti numbers")
    five(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("verify", help="check the RR extension and the no-circle-action argument")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=30)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dh", help="enumerate Duistermaat-Heckman candidates")
    p.add_argument("--target", type=int, default=6)
    p.add_argument("--min-critical", type=int, default=3)
    p.set_defaults(func=cmd_dh)
    return parser


def _summary(report: CommandReport) -> str:
    lines = [f"{report.command}: exit {report.exit_status}"]
    for key, value in report.results.items():
        if isinstance(value, (str, bool)) or (isinstance(value, list) and len(value) <= 7):
            lines.append(f"  {key}: {value}")
    for entry in report.provenance:
        if entry["status"] in ("pass", "fail"):
            lines.append(f"  [{entry['status']}] {entry['claim']}")
    return "\n".join(lines) + "\n"


def run(argv=None) -> CommandReport:
    """Parse ``argv`` and run the command, turning errors into a report."""
    args = build_parser().parse_args(argv)
    inputs = {
        k: (str(v) if isinstance(v, int) else v)
        for k, v in vars(args).items()
        if k not in ("func", "command")
    }
    try:
        return args.func(args)
    except PentaspaceError as exc:
        error = exc
    status = EXIT_INPUT if isinstance(error, InputError) else EXIT_FAILED
    report = CommandReport(args.command, inputs, exit_status=status)
    report.results = {"error": {"type": type(error).__name__, "message": str(error)}}
    return report


def main(argv=None) -> int:
    report = run(argv)
    sys.stdout.write(report.to_json())
    sys.stderr.write(_summary(report))
    return report.exit_status


if __name__ == "__main__":
    sys.exit(main())
