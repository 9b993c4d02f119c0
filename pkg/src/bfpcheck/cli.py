"""Command-line front-end.

Subcommands:

* ``verify --p P --q Q --k K``: certify that the pendant-shift graph beats
  every one-vertex-added member of the (P, Q, e = P(Q-K)) family.
* ``search --p P --q Q --e E``: brute-force the true maximum of the
  spectral radius over the family.
* ``spectra --degrees D``: spectral radius and min-matrix of one degree
  sequence.
* ``grid``: batch ``verify`` over ranges of p, k and q-offsets, as CSV or
  JSON.

Exit codes: 0 verified/completed, 1 falsified, 2 bad parameters, 3
enumeration guard exceeded.  Output is deterministic: floats are serialized
at 12 significant digits and identical flags produce byte-identical
reports.  The environment variable BFP_MAX_SUBSETS overrides the default
subset cap.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from .errors import GuardExceededError, HypothesisError
from .extremal import (
    DEFAULT_MAX_SUBSETS,
    SearchConfig,
    brute_force_extremal,
    verify_counterexample,
)
from .graphs import build_ferrers, parse_degrees
from .spectral import min_matrix, spectral_radius_graph, spectral_radius_sym

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_BAD_PARAMETERS = 2
EXIT_GUARD_EXCEEDED = 3

GRID_CSV_COLUMNS = [
    "p", "q", "k", "e", "verdict", "rho_pm", "rho_best_candidate", "gap",
    "cert_x_coeff", "cert_const", "error",
]


def _round12(x: float) -> float:
    return float(f"{x:.12g}")


def _fmt12(x: float) -> str:
    return f"{x:.12g}"


def dump_json(payload) -> str:
    """Stable JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def _default_max_subsets() -> int:
    value = os.environ.get("BFP_MAX_SUBSETS")
    if value is None:
        return DEFAULT_MAX_SUBSETS
    try:
        return int(value)
    except ValueError:
        raise HypothesisError(f"BFP_MAX_SUBSETS must be an integer, got {value!r}")


def _config_from_args(args) -> SearchConfig:
    max_subsets = args.max_subsets if args.max_subsets is not None else _default_max_subsets()
    return SearchConfig(
        connected_only=getattr(args, "connected_only", False),
        dedup=getattr(args, "dedup", False),
        max_subsets=max_subsets,
        tol=args.tol,
    )


def _parse_range(text: str) -> range:
    """Parse "3..6" or "3" into an inclusive range."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


# --------------------------------------------------------------------------
# verify
# --------------------------------------------------------------------------

def cmd_verify(args) -> int:
    config = _config_from_args(args)
    report = verify_counterexample(
        args.p, args.q, args.k, config=config, include_brute_force=args.brute_force
    )
    payload = report.to_dict()
    if args.json:
        sys.stdout.write(dump_json(payload))
    else:
        best = report.best_candidate()
        print(f"family: p={report.p} q={report.q} k={report.k} e={report.e}")
        print(f"verdict: {'holds' if report.verdict else 'fails'} "
              f"(pendant-shift graph beats every one-vertex-added candidate: "
              f"{'yes' if report.verdict else 'no'})")
        print(f"pendant-shift degrees: {report.pm_degrees}")
        print(f"  rho = {_fmt12(report.rho_pm)}")
        print(f"  rho^2 in [{report.pm_bracket.lo}, {report.pm_bracket.hi}]")
        print(f"  cubic: {report.pm_cubic.text()}")
        for outcome in report.candidates:
            print(f"candidate a={outcome.a} degrees {outcome.degrees}: "
                  f"rho = {_fmt12(outcome.rho)}, root order {outcome.order} pendant-shift")
            if outcome.certificate is not None:
                print(f"  certificate (difference of cubics): "
                      f"{outcome.certificate.difference.text()}")
        print(f"closest candidate gap: {_fmt12(report.rho_pm - best.rho)}")
        print(f"exact/numeric route gap: {_fmt12(report.route_gap)}")
        if report.brute_force is not None:
            bf = report.brute_force
            print(f"brute force: {bf.enumerated} members, max rho = {_fmt12(bf.rho_max)}")
            print(f"one-vertex-added among maximizers: "
                  f"{'yes' if bf.any_one_vertex_added else 'no'}")
    return EXIT_OK if report.verdict else EXIT_FALSIFIED


# --------------------------------------------------------------------------
# search
# --------------------------------------------------------------------------

def cmd_search(args) -> int:
    config = _config_from_args(args)
    result = brute_force_extremal(args.p, args.q, args.e, config, workers=args.workers)
    if args.json:
        sys.stdout.write(dump_json(result.to_dict()))
    else:
        print(f"family: p={result.p} q={result.q} e={result.e}")
        print(f"members enumerated: {result.enumerated}")
        if result.enumerated == 0:
            print("family is empty")
            return EXIT_OK
        print(f"max rho: {_fmt12(result.rho_max)}")
        print(f"maximizers within tol: {len(result.maximizers)}")
        for info in result.maximizers[: args.show]:
            degrees = ",".join(str(d) for d in sorted(info.graph.row_degrees, reverse=True))
            flags = []
            if info.connected:
                flags.append("connected")
            if info.one_vertex_added:
                flags.append("one-vertex-added")
            if info.pendant_form:
                flags.append("pendant-shift")
            print(f"  parts ({info.graph.p},{info.graph.q}) degrees [{degrees}] "
                  f"rho {_fmt12(info.rho)} {' '.join(flags)}")
        if len(result.maximizers) > args.show:
            print(f"  ... {len(result.maximizers) - args.show} more")
        print(f"one-vertex-added among maximizers: "
              f"{'yes' if result.any_one_vertex_added else 'no'}")
        print(f"pendant-shift form among maximizers: "
              f"{'yes' if result.pendant_form_present else 'no'}")
    return EXIT_OK


# --------------------------------------------------------------------------
# spectra
# --------------------------------------------------------------------------

def cmd_spectra(args) -> int:
    degrees = parse_degrees(args.degrees)
    q = args.q if args.q is not None else degrees.largest
    graph = build_ferrers(degrees, q)
    mm = min_matrix(degrees)
    graph_result = spectral_radius_graph(graph, tol=args.tol)
    gram_result = spectral_radius_sym(mm, tol=args.tol)
    payload = {
        "degrees": list(degrees.entries),
        "parts": [graph.p, graph.q],
        "edges": graph.edge_count,
        "rho": _round12(graph_result.rho),
        "rho_squared": _round12(graph_result.rho**2),
        "min_matrix": [list(row) for row in mm.entries],
        "min_matrix_rho": _round12(gram_result.rho),
        "iterations": graph_result.iterations,
        "residual": _round12(graph_result.residual),
    }
    if args.json:
        sys.stdout.write(dump_json(payload))
    else:
        print(f"degrees: {degrees} (p={graph.p}, q={graph.q}, e={graph.edge_count})")
        print(f"rho = {_fmt12(graph_result.rho)}")
        print(f"rho^2 = {_fmt12(graph_result.rho ** 2)}")
        print("min-matrix (pairwise degree minima):")
        for row in mm.entries:
            print("  " + " ".join(f"{v:>4d}" for v in row))
        print(f"min-matrix rho = {_fmt12(gram_result.rho)} "
              f"({gram_result.iterations} iterations, residual {gram_result.residual:.2e})")
    return EXIT_OK


# --------------------------------------------------------------------------
# grid
# --------------------------------------------------------------------------

def _grid_row(params) -> dict:
    p, q, k, tol = params
    try:
        report = verify_counterexample(p, q, k, config=SearchConfig(tol=tol))
    except (HypothesisError, ValueError) as exc:
        return {"p": p, "q": q, "k": k, "error": str(exc)}
    return report.to_dict()


def cmd_grid(args) -> int:
    ps = _parse_range(args.p)
    ks = _parse_range(args.k)
    offsets = _parse_range(args.q)
    params = [
        (p, k * p + offset, k, args.tol)
        for p in ps
        for k in ks
        for offset in offsets
    ]
    if args.workers > 1:
        with ProcessPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(_grid_row, params))
    else:
        rows = [_grid_row(item) for item in params]

    if args.csv:
        sys.stdout.write(grid_csv(rows))
    elif args.json:
        sys.stdout.write(dump_json({"rows": rows, "count": len(rows)}))
    else:
        verified = sum(1 for row in rows if row.get("verdict") is True)
        failed = sum(1 for row in rows if row.get("verdict") is False)
        errors = sum(1 for row in rows if "error" in row)
        for row in rows:
            if "error" in row:
                status = f"error: {row['error']}"
            else:
                status = "verdict=true" if row["verdict"] else "verdict=false"
            print(f"p={row['p']} q={row['q']} k={row['k']} {status}")
        print(f"{len(rows)} rows: {verified} verified, {failed} falsified, {errors} errors")
    return EXIT_OK


def grid_csv(rows: list[dict]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(GRID_CSV_COLUMNS)
    for row in rows:
        if "error" in row:
            writer.writerow([row["p"], row["q"], row["k"], "", "", "", "", "", "", "", row["error"]])
            continue
        best = max(row["candidates"], key=lambda c: c["rho"])
        cert = best["certificate"]
        cert_coeffs = cert["coefficients"] if cert else []
        cert_const = cert_coeffs[0] if len(cert_coeffs) > 0 else ""
        cert_x = cert_coeffs[1] if len(cert_coeffs) > 1 else "0"
        writer.writerow([
            row["p"], row["q"], row["k"], row["e"],
            str(row["verdict"]).lower(),
            _fmt12(row["pm"]["rho"]),
            _fmt12(best["rho"]),
            _fmt12(row["pm"]["rho"] - best["rho"]),
            cert_x,
            cert_const,
            "",
        ])
    return buffer.getvalue()


# --------------------------------------------------------------------------
# parser / entry point
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bfpcheck",
        description="Spectral-radius extremal search and exact certification "
                    "for bipartite graphs with a fixed edge count.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser(
        "verify",
        help="certify that the pendant-shift graph beats the one-vertex-added family",
    )
    verify.add_argument("--p", type=int, required=True, help="row part size (needs p > 2)")
    verify.add_argument("--q", type=int, required=True, help="column part size (needs q > kp+2)")
    verify.add_argument("--k", type=int, required=True, help="edge deficit per row, e = p(q-k)")
    verify.add_argument("--json", action="store_true", help="machine-readable report")
    verify.add_argument("--brute-force", action="store_true",
                        help="attach a full sweep of the family to the report")
    _common_search_flags(verify)
    verify.set_defaults(func=cmd_verify)

    search = sub.add_parser("search", help="brute-force the max spectral radius over a family")
    search.add_argument("--p", type=int, required=True)
    search.add_argument("--q", type=int, required=True)
    search.add_argument("--e", type=int, required=True, help="edge count (must be < pq)")
    search.add_argument("--json", action="store_true")
    search.add_argument("--show", type=int, default=10, help="maximizers to print (human mode)")
    search.add_argument("--workers", type=int, default=1)
    _common_search_flags(search)
    search.set_defaults(func=cmd_search)

    spectra = sub.add_parser("spectra", help="spectral radius and min-matrix of a degree sequence")
    spectra.add_argument("--degrees", required=True,
                         help="comma-separated, exponent shorthand allowed: 6,5^2,4")
    spectra.add_argument("--q", type=int, default=None, help="column part size (default: largest degree)")
    spectra.add_argument("--json", action="store_true")
    spectra.add_argument("--tol", type=float, default=1e-12)
    spectra.set_defaults(func=cmd_spectra)

    grid = sub.add_parser("grid", help="batch verify over parameter ranges")
    grid.add_argument("--p", default="3..6", help="p range, e.g. 3..6")
    grid.add_argument("--k", default="1..3", help="k range, e.g. 1..3")
    grid.add_argument("--q", default="3..10",
                      help="q offsets above kp, e.g. 3..10 means q = kp+3 .. kp+10")
    grid.add_argument("--json", action="store_true")
    grid.add_argument("--csv", action="store_true")
    grid.add_argument("--tol", type=float, default=1e-9)
    grid.add_argument("--workers", type=int, default=1)
    grid.set_defaults(func=cmd_grid)

    return parser


def _common_search_flags(sub_parser) -> None:
    sub_parser.add_argument("--dedup", action="store_true",
                            help="one representative per isomorphism class")
    sub_parser.add_argument("--connected-only", action="store_true", dest="connected_only")
    sub_parser.add_argument("--max-subsets", type=int, default=None, dest="max_subsets",
                            help=f"subset cap (default {DEFAULT_MAX_SUBSETS}; "
                                 "env BFP_MAX_SUBSETS overrides)")
    sub_parser.add_argument("--tol", type=float, default=1e-9)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_PARAMETERS
    except GuardExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD_EXCEEDED


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
