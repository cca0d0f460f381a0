"""Command-line entry point: rn, tplus, label, verify, analyze, oracle."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Sequence

from .constructions import optimal_labeling, rn_ordering, t_plus_ordering
from .formulas import rn_formula, rn_lower_bound, rn_upper_bound_trivial, t_plus_formula
from .grid import GridGraph, GridError, UnsupportedSize, require_supported
from .labeling import span, step_report, validate
from .oracle import RN_MAX_N, TPLUS_MAX_N, ResourceLimit, oracle_rn, oracle_t_plus
from .serialize import DocumentError, LabelingDocument, from_json, to_ascii, to_dot, to_json

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_GUARD = 3


def _grid(args: argparse.Namespace) -> GridGraph:
    g = GridGraph(args.a, args.b)
    require_supported(g)
    return g


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def cmd_rn(args: argparse.Namespace) -> int:
    g = _grid(args)
    print(f"G_{{{g.a},{g.b}}} parity={g.parity_case().value}")
    print(f"rn={rn_formula(g.a, g.b)}")
    print(f"lower_bound={rn_lower_bound(g)}")
    print(f"trivial_upper_bound={rn_upper_bound_trivial(g)}")
    return EXIT_OK


def cmd_tplus(args: argparse.Namespace) -> int:
    g = _grid(args)
    s = t_plus_ordering(g)
    total = sum(abs(u[0] - v[0]) + abs(u[1] - v[1]) for u, v in zip(s, s[1:]))
    print(f"G_{{{g.a},{g.b}}} parity={g.parity_case().value}")
    print(f"t_plus={t_plus_formula(g.a, g.b)}")
    print(f"ordering_distance_sum={total}")
    return EXIT_OK


def cmd_label(args: argparse.Namespace) -> int:
    g = _grid(args)
    doc = LabelingDocument.build(g, optimal_labeling(g))
    render = {"json": to_json, "ascii": to_ascii, "dot": to_dot}[args.format]
    _emit(render(doc), args.out)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        text = Path(args.path).read_text(encoding="utf-8")
    except OSError as exc:
        print(f"error: cannot read {args.path}: {exc.strerror}", file=sys.stderr)
        return EXIT_INPUT
    doc = from_json(text)
    g = doc.grid
    bad = validate(g, doc.labels)
    actual = span(doc.labels)
    for v in bad:
        print(
            f"VIOLATION {v.u} {v.v} required_gap={v.required_gap} actual_gap={v.actual_gap}"
        )
    if actual != doc.span:
        print(f"SPAN MISMATCH recorded={doc.span} actual={actual}")
    if bad or actual != doc.span:
        print(f"INVALID violations={len(bad)}")
        return EXIT_INVALID
    print(f"VALID span={actual}")
    return EXIT_OK


def cmd_analyze(args: argparse.Namespace) -> int:
    g = _grid(args)
    s = rn_ordering(g)
    r = step_report(g, s)
    print(f"G_{{{g.a},{g.b}}} parity={g.parity_case().value} n={g.n} D={g.D}")
    print(f"{'i':>4} {'u_i':>9} {'d_i':>4} {'f_i':>4} {'b_i':>4} {'d_rect':>6}")
    for i in range(1, g.n):
        u = s[i - 1]
        print(
            f"{i:>4} {str(u):>9} {r.d[i - 1]:>4} {r.f_gaps[i - 1]:>4} "
            f"{r.bumps[i - 1]:>4} {r.d_rect[i - 1]:>6}"
        )
    print(f"{g.n:>4} {str(s[-1]):>9}")
    print(f"bumps={len(r.bump_events)}")
    for e in r.bump_events:
        print(f"bump step={e.step} magnitude={e.magnitude} predecessor_offset={e.offset}")
    tp = t_plus_formula(g.a, g.b)
    rn = rn_formula(g.a, g.b)
    print(f"sum_d={r.distance_sum} t_plus={tp}")
    print(f"sum_f={sum(r.f_gaps)} span={r.span} rn={rn}")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    g = GridGraph(args.a, args.b)
    if args.kind == "tplus":
        if g.n > TPLUS_MAX_N:
            raise ResourceLimit(f"oracle tplus guard: n={g.n} > {TPLUS_MAX_N}")
        res = oracle_t_plus(g)
        witness = [list(v) for v in res.witness]
        formula = t_plus_formula(g.a, g.b) if min(g.a, g.b) >= 3 else None
    else:
        res = oracle_rn(g, max_n=RN_MAX_N, force=args.force)
        witness = [{"x": x, "y": y, "label": f} for (x, y), f in sorted(res.witness.items())]
        formula = rn_formula(g.a, g.b) if min(g.a, g.b) >= 3 else None
    verdict = "n/a" if formula is None else ("MATCH" if formula == res.value else "MISMATCH")
    print(f"oracle {args.kind} G_{{{g.a},{g.b}}}")
    print(f"value={res.value} formula={formula} {verdict}")
    print(f"nodes={res.nodes_explored} elapsed={res.elapsed:.3f}s")
    if args.out:
        Path(args.out).write_text(json.dumps(witness) + "\n", encoding="utf-8")
    return EXIT_INVALID if verdict == "MISMATCH" else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="radiogrid", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def sized(name: str, help_: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--seed", type=int, default=None, help="reserved; outputs are deterministic")
        return p

    sized("rn", "radio number and bounds").set_defaults(func=cmd_rn)
    sized("tplus", "upper traceable number").set_defaults(func=cmd_tplus)
    p = sized("label", "optimal labeling")
    p.add_argument("--format", choices=["json", "ascii", "dot"], default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_label)
    p = sub.add_parser("verify", help="check a labeling document")
    p.add_argument("path")
    p.set_defaults(func=cmd_verify)
    sized("analyze", "per-step report of the optimal ordering").set_defaults(func=cmd_analyze)
    p = sub.add_parser("oracle", help="exact brute-force value")
    p.add_argument("kind", choices=["rn", "tplus"])
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--force", action="store_true", help="lift the rn size guard")
    p.add_argument("--out", default=None, help="write the witness as JSON")
    p.add_argument("--seed", type=int, default=None, help="reserved; outputs are deterministic")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UnsupportedSize as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (GridError, DocumentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ResourceLimit as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
