"""Command-line front end: one subcommand per library capability.

Exit codes: 0 success, 1 usage error, 2 computation error, 3 a certified
instance contradicts the predicted equienergy (bug or counterexample --
either demands attention).

Single-graph commands accept the graph6 string as a positional argument,
``-`` to read it from stdin, or ``--file PATH``; exactly one source.  The
``SEIDELKIT_MAX_DIM`` environment variable overrides the default cap on
constructed matrix dimensions.
"""

import argparse
import json
import os
import sys

from . import __version__
from .graphs import (DEFAULT_MAX_DIM, Graph6Error, blowup, clique_blowup,
                     complement, graph_from_graph6, graph_to_graph6)
from .spectral import (ConvergenceError, charpoly_exact, seidel_inertia,
                       seidel_matrix, seidel_spectrum)
from .search import (NUMERIC_MAX_ORDER, ScanConfig, scan_stream, write_report)
from .theory import (certify, check_cospectral, check_equienergetic,
                     blowup_seidel_spectrum, clique_blowup_seidel_spectrum,
                     composed_blowup_seidel_spectra)

_fmt = "{:.12g}".format


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: error: {message}")


def _max_dim() -> int:
    raw = os.environ.get("SEIDELKIT_MAX_DIM")
    if raw is None:
        return DEFAULT_MAX_DIM
    try:
        value = int(raw)
    except ValueError:
        raise _UsageError(f"SEIDELKIT_MAX_DIM must be an integer, got {raw!r}")
    if value < 1:
        raise _UsageError("SEIDELKIT_MAX_DIM must be positive")
    return value


def _build_parser() -> _Parser:
    parser = _Parser(prog="seidelkit",
                     description="Seidel spectra, energies, and certified "
                                 "equienergetic blow-up pairs")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_command(name, help_text, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("graph", nargs="?", default=None,
                       help="graph6 string, or - for stdin")
        p.add_argument("--file", default=None,
                       help="read the graph6 line from this file")
        if json_flag:
            p.add_argument("--json", action="store_true",
                           help="emit JSON instead of text")
        return p

    graph_command("spectrum", "Seidel spectrum in multiplicity notation")
    graph_command("energy", "Seidel energy (sum of absolute eigenvalues)")
    graph_command("inertia", "positive/zero/negative Seidel eigenvalue counts")
    graph_command("charpoly", "exact characteristic polynomial of the Seidel matrix")
    graph_command("complement", "graph6 of the edge complement")

    p = graph_command("construct", "build a blow-up graph, print its graph6")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--dm", action="store_true",
                       help="independent blow-up (order m*n)")
    which.add_argument("--dmstar", action="store_true",
                       help="clique blow-up (order m*n)")
    which.add_argument("--t2-left", action="store_true",
                       help="clique blow-up of the independent blow-up (order m^2*n)")
    which.add_argument("--t2-right", action="store_true",
                       help="independent blow-up of the clique blow-up (order m^2*n)")
    p.add_argument("--m", type=int, required=True, help="multiplicity, >= 2")

    p = graph_command("closed-form", "predicted blow-up spectrum from the input spectrum")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--lemma", type=int, choices=(1, 2),
                       help="1: independent blow-up, 2: clique blow-up")
    which.add_argument("--theorem", type=int, choices=(2,),
                       help="2: both composed double blow-ups")
    p.add_argument("--m", type=int, required=True)

    p = sub.add_parser("compare", help="equienergetic/cospectral verdict for two graphs")
    p.add_argument("graph1", help="graph6 string, or - for stdin")
    p.add_argument("graph2", help="graph6 string, or - for stdin")
    p.add_argument("--json", action="store_true")

    p = graph_command("certify", "full certificate for one blow-up pair",
                      json_flag=False)
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--no-exact", action="store_true",
                   help="skip the integer charpoly verification")
    p.add_argument("--text", action="store_true",
                   help="human-readable rendering instead of JSON")

    p = sub.add_parser("scan", help="scan a graph6 catalog and report certified pairs")
    p.add_argument("input", nargs="?", default="-",
                   help="catalog file, or - for stdin (default)")
    p.add_argument("--theorem", type=int, choices=(1, 2), default=1)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", default=None, help="write the report to this path")
    p.add_argument("--exact", action="store_true",
                   help="verify integer padding multiplicities exactly")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--max-order", type=int, default=NUMERIC_MAX_ORDER,
                   help="skip graphs whose constructed order exceeds this")
    return parser


# ---------------------------------------------------------------------------
# Input plumbing
# ---------------------------------------------------------------------------


def _first_graph6_line(stream) -> str:
    for line in stream:
        if line.strip():
            return line.strip()
    raise _UsageError("seidelkit: error: no graph6 line found on input")


def _load_graph(args):
    sources = sum(1 for s in (args.graph, args.file) if s is not None)
    if sources != 1:
        raise _UsageError(
            "seidelkit: error: supply exactly one input "
            "(positional graph6, '-', or --file PATH)")
    if args.file is not None:
        with open(args.file, "r", encoding="ascii") as fh:
            text = _first_graph6_line(fh)
    elif args.graph == "-":
        text = _first_graph6_line(sys.stdin)
    else:
        text = args.graph
    return graph_from_graph6(text)


def _load_graph_token(token: str):
    if token == "-":
        return graph_from_graph6(_first_graph6_line(sys.stdin))
    return graph_from_graph6(token)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def _cmd_spectrum(args) -> int:
    spec = seidel_spectrum(_load_graph(args))
    if args.json:
        _emit_json(spec.to_dict())
    else:
        print(spec.format_grouped())
    return 0


def _cmd_energy(args) -> int:
    energy = seidel_spectrum(_load_graph(args)).energy()
    if args.json:
        _emit_json({"energy": energy})
    else:
        print(_fmt(energy))
    return 0


def _cmd_inertia(args) -> int:
    inertia = seidel_inertia(_load_graph(args))
    if args.json:
        _emit_json(inertia.to_dict())
    else:
        print(f"({inertia.n_pos}, {inertia.n_zero}, {inertia.n_neg})")
    return 0


def _cmd_charpoly(args) -> int:
    poly = charpoly_exact(seidel_matrix(_load_graph(args)))
    if args.json:
        _emit_json({"coefficients": poly.to_list()})
    else:
        print(poly.format_text())
    return 0


def _cmd_complement(args) -> int:
    line = graph_to_graph6(complement(_load_graph(args)))
    if args.json:
        _emit_json({"graph6": line})
    else:
        print(line)
    return 0


def _cmd_construct(args) -> int:
    g = _load_graph(args)
    cap = _max_dim()
    if args.dm:
        result = blowup(g, args.m, max_dim=cap)
    elif args.dmstar:
        result = clique_blowup(g, args.m, max_dim=cap)
    elif args.t2_left:
        result = clique_blowup(blowup(g, args.m, max_dim=cap), args.m, max_dim=cap)
    else:
        result = blowup(clique_blowup(g, args.m, max_dim=cap), args.m, max_dim=cap)
    line = graph_to_graph6(result)
    if args.json:
        _emit_json({"graph6": line, "order": result.n})
    else:
        print(line)
    return 0


def _cmd_closed_form(args) -> int:
    g = _load_graph(args)
    sigma = seidel_spectrum(g)
    if args.lemma == 1:
        forms = {"spectrum": blowup_seidel_spectrum(sigma, args.m, g.n)}
    elif args.lemma == 2:
        forms = {"spectrum": clique_blowup_seidel_spectrum(sigma, args.m, g.n)}
    else:
        left, right = composed_blowup_seidel_spectra(sigma, args.m, g.n)
        forms = {"spectrum_a": left, "spectrum_b": right}
    if args.json:
        _emit_json({key: cf.to_dict() for key, cf in forms.items()})
    else:
        for key, cf in forms.items():
            prefix = "" if len(forms) == 1 else f"{key}: "
            print(f"{prefix}{cf.format_grouped()}")
    return 0


def _cmd_compare(args) -> int:
    g1 = _load_graph_token(args.graph1)
    g2 = _load_graph_token(args.graph2)
    equal, delta = check_equienergetic(g1, g2)
    cospectral = check_cospectral(g1, g2)
    if args.json:
        _emit_json({"equienergetic": equal, "energy_delta": delta,
                    "cospectral": cospectral})
    else:
        print(f"equienergetic={equal} delta={_fmt(delta)} "
              f"cospectral={cospectral}")
    return 0


def _cmd_certify(args) -> int:
    g = _load_graph(args)
    cert = certify(g, args.m, args.theorem, exact=not args.no_exact,
                   max_dim=_max_dim())
    if args.text:
        print(cert.render_text())
    else:
        _emit_json(cert.to_dict())
    return 3 if cert.theorem_violation else 0


def _cmd_scan(args) -> int:
    config = ScanConfig(m=args.m, theorem=args.theorem,
                        max_order=args.max_order, exact_verify=args.exact,
                        parallelism=args.jobs)
    if args.input == "-":
        report = scan_stream(sys.stdin, config)
    else:
        with open(args.input, "r", encoding="ascii") as fh:
            report = scan_stream(fh, config)
    text = write_report(report, format=args.format, destination=args.out)
    if args.out is None:
        sys.stdout.write(text)
    return 3 if report.has_violations else 0


_DISPATCH = {
    "spectrum": _cmd_spectrum,
    "energy": _cmd_energy,
    "inertia": _cmd_inertia,
    "charpoly": _cmd_charpoly,
    "complement": _cmd_complement,
    "construct": _cmd_construct,
    "closed-form": _cmd_closed_form,
    "compare": _cmd_compare,
    "certify": _cmd_certify,
    "scan": _cmd_scan,
}


def run(argv) -> int:
    """Parse arguments, dispatch, and map failures onto the exit-code contract."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help / --version
        return 0 if exc.code in (0, None) else 1
    try:
        return _DISPATCH[args.command](args)
    except _UsageError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    except (Graph6Error, ConvergenceError, ValueError, OSError) as exc:
        print(f"seidelkit: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
