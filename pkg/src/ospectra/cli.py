"""Command-line surface.

Subcommands: construct, check, eig, series, enumerate, extremal,
conjectures, verify-paper, report.  Graphs travel as graph6 text files;
structured results as JSON.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

from . import families
from .eigen import eigenpair, spectrum
from .enumeration import enumerate_outerplanar
from .graphs import graph6_decode, graph6_encode
from .outerplanar import is_outerplanar
from .search import conjecture_suite, extremal_lambda_k, verify_structure
from .series import (decompose, eliminate_ratio, hub_series,
                     series_coefficients, solve_char_equation)
from .verify import DEFAULT_CONFIG, parse_matrix, report_render, verify_paper


def _read_graph(path: str):
    text = Path(path).read_text() if path != "-" else sys.stdin.read()
    for line in text.splitlines():
        if line.strip():
            return graph6_decode(line)
    raise SystemExit(f"no graph6 line found in {path}")


def _emit(payload, as_json: bool):
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True, default=str))
    else:
        for key, value in payload.items():
            print(f"{key}: {value}")


def _cmd_construct(args):
    spec = families.FamilySpec(
        tag=args.family, n=args.n, q=args.q, k=args.k,
        attach=_parse_attach(args.attach) if args.attach else None)
    g = families.build_family(spec)
    line = graph6_encode(g)
    if args.out:
        Path(args.out).write_text(line + "\n")
    else:
        print(line)
    return 0


def _parse_attach(text: str):
    sides = text.split("/")
    if len(sides) != 2:
        raise SystemExit("attach format: a,b/c (two sides separated by '/')")
    return tuple(tuple(int(x) for x in side.split(",")) for side in sides)


def _cmd_check(args):
    g = _read_graph(args.infile)
    cert = is_outerplanar(g, want_witness=args.witness)
    payload = {"n": g.n, "m": g.m, "outerplanar": cert.outerplanar}
    if cert.order is not None:
        payload["outer_order"] = list(cert.order)
    if cert.witness is not None:
        payload["witness_pattern"] = cert.witness.pattern
        payload["witness_branch_sets"] = [
            [v for v in range(g.n) if s >> v & 1] for s in cert.witness.branch_sets]
    _emit(payload, args.json)
    return 0 if cert.outerplanar else 1


def _cmd_eig(args):
    g = _read_graph(args.infile)
    s = spectrum(g)
    payload = {"n": g.n, "m": g.m, "k": args.k, "value": s.value(args.k),
               "top_values": [float(v) for v in s.values[:min(10, g.n)]],
               "trace_error": s.trace_error}
    if args.vector:
        pair = eigenpair(g, args.k, seed=args.seed)
        payload["vector"] = [float(x) for x in pair.vector]
        payload["residual"] = pair.residual
    _emit(payload, args.json)
    return 0


def _cmd_series(args):
    g = _read_graph(args.infile)
    hubs = [int(x) for x in args.hubs.split(",")] if args.hubs else None
    if hubs and len(hubs) == 1:
        s = hub_series(g, hubs[0], args.order)
        payload = {"mode": "single-hub", "coefficients": [str(c) for c in s.coeffs]}
        sol = solve_char_equation(s)
        payload.update(root=sol.root, enclosure=[sol.tail_lo, sol.tail_hi])
    else:
        if not hubs:
            degs = g.degrees()
            hubs = sorted(range(g.n), key=lambda v: -degs[v])[:2]
        dec = decompose(g, hubs[0], hubs[1], args.mode, seed=args.seed)
        out = series_coefficients(dec, args.order)
        if args.mode == "split":
            elim = eliminate_ratio(out.hub1, out.hub2, out.cross)
            payload = {
                "mode": "split", "hubs": hubs,
                "own1": [str(c) for c in out.hub1.coeffs],
                "own2": [str(c) for c in out.hub2.coeffs],
                "cross": [str(c) for c in out.cross.coeffs],
                "combined": [str(c) for c in elim.combined.coeffs],
                "root": elim.root,
                "enclosure": list(elim.enclosure),
            }
        else:
            payload = {"mode": args.mode, "hubs": hubs,
                       "coefficients": [str(c) for c in out.coeffs],
                       "tail_scale": out.tail_scale, "tail_base": out.tail_base}
            if not out.upper_bound_only:
                sol = solve_char_equation(out)
                payload.update(root=sol.root,
                               enclosure=[sol.tail_lo, sol.tail_hi])
    _emit(payload, args.json)
    return 0


def _cmd_enumerate(args):
    graphs = enumerate_outerplanar(args.n, connected_only=args.connected,
                                   max_n=args.max_n or max(args.n, 11),
                                   checkpoint=args.checkpoint)
    lines = [graph6_encode(g) for g in graphs]
    body = "\n".join(lines) + ("\n" if lines else "")
    if args.out:
        Path(args.out).write_text(body)
        print(f"{len(lines)} graphs written to {args.out}")
    else:
        sys.stdout.write(body)
    return 0


def _cmd_extremal(args):
    res = extremal_lambda_k(args.n, args.k, args.family, max_n=args.max_n or 11,
                            checkpoint=args.checkpoint)
    payload = asdict(res)
    if args.structure:
        from .eigen import MultiplicityError

        try:
            rep = verify_structure(res.best_graph(), args.k, seed=args.seed)
            payload["structure"] = asdict(rep)
        except MultiplicityError as exc:
            payload["structure"] = {"error": str(exc)}
    _emit(payload, args.json)
    return 0


def _cmd_conjectures(args):
    rows = conjecture_suite(args.kind, args.max_n,
                            exhaustive_cap=args.exhaustive_cap)
    payload = {"kind": args.kind, "rows": [asdict(r) for r in rows]}
    _emit(payload, args.json)
    bad = [r for r in rows if r.verdict != "CONSISTENT"]
    return 1 if bad else 0


def _cmd_verify_paper(args):
    cfg = dict(DEFAULT_CONFIG)
    if args.config:
        cfg.update(json.loads(Path(args.config).read_text()))
    if args.group:
        cfg["groups"] = args.group
    cfg["budget"] = args.budget
    cfg["seed"] = args.seed
    matrix = verify_paper(cfg, threads=args.threads)
    if args.json_out:
        Path(args.json_out).write_text(report_render(matrix, "json"))
    if args.markdown_out:
        Path(args.markdown_out).write_text(report_render(matrix, "markdown"))
    for c in matrix.checks:
        line = f"[{c.status}] {c.id} ({c.runtime}s)"
        if c.status == "FAIL":
            line += f"  expected {c.expected}, observed {c.observed}. {c.detail}"
        elif c.detail and args.verbose:
            line += f"  {c.detail}"
        print(line)
    print(f"\n{len(matrix.passed)} passed, {len(matrix.failed)} failed, "
          f"{len(matrix.skipped)} skipped  (kernel backend: {matrix.kernel_backend})")
    return matrix.exit_code()


def _cmd_report(args):
    matrix = parse_matrix(Path(args.infile).read_text())
    print(report_render(matrix, args.format))
    return 0


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="ospectra",
        description="Spectral extremal toolkit for outerplanar graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="JSON output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1,
                        help="worker processes for parallelizable commands")

    p = sub.add_parser("construct", parents=[common],
                       help="build a named family member")
    p.add_argument("--family", required=True, choices=families.FAMILY_TAGS)
    p.add_argument("--n", type=int)
    p.add_argument("--q", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--attach", help="cut-vertex attachments, e.g. '0,1/3'")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("check", parents=[common], help="outerplanarity test")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--witness", action="store_true",
                   help="attach forbidden-minor branch sets on rejection")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("eig", parents=[common], help="eigenvalues/eigenvector")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--vector", action="store_true")
    p.set_defaults(func=_cmd_eig)

    p = sub.add_parser("series", parents=[common], help="walk-count series")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--hubs", help="comma-separated hub vertices (1 or 2)")
    p.add_argument("--mode", default="symmetric",
                   choices=["symmetric", "exact", "bound", "split"])
    p.add_argument("--order", type=int, default=6)
    p.set_defaults(func=_cmd_series)

    p = sub.add_parser("enumerate", parents=[common],
                       help="all outerplanar graphs of an order")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--connected", action="store_true")
    p.add_argument("--max-n", type=int, dest="max_n",
                   help="raise the resource guard explicitly")
    p.add_argument("--checkpoint", help="resumable level snapshots (JSON)")
    p.add_argument("--out")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("extremal", parents=[common],
                       help="maximize an eigenvalue over a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--family", default="structured",
                   choices=["exhaustive", "structured", "two-hub-structured",
                            "structured-2connected", "cut-vertex",
                            "cut-vertex-family"])
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--checkpoint",
                   help="resumable enumeration snapshots for exhaustive runs")
    p.add_argument("--structure", action="store_true",
                   help="attach a structure report for the maximizer")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("conjectures", parents=[common],
                       help="compare conjectured extremal graphs with search")
    p.add_argument("--kind", required=True,
                   choices=["kq+1", "3q", "3q+2", "even>=14"])
    p.add_argument("--max-n", type=int, dest="max_n", default=13)
    p.add_argument("--exhaustive-cap", type=int, default=9)
    p.set_defaults(func=_cmd_conjectures)

    p = sub.add_parser("verify-paper", parents=[common],
                       help="run the verification matrix")
    p.add_argument("--config", help="JSON config overriding the defaults")
    p.add_argument("--group", action="append", help="restrict to check groups")
    p.add_argument("--budget", default="default",
                   choices=["small", "default", "large"])
    p.add_argument("--json-out", dest="json_out")
    p.add_argument("--markdown-out", dest="markdown_out")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_verify_paper)

    p = sub.add_parser("report", parents=[common],
                       help="re-render a saved verification matrix")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--format", default="markdown", choices=["json", "markdown"])
    p.set_defaults(func=_cmd_report)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
