"""Command-line front end.

Exit status: 0 on success (and on a clean verification sweep), 1 when the
sweep finds a counterexample, 2 on usage or parse errors.
"""

import argparse
import os
import sys

from .diagrams import (
    enumerate_diagrams,
    parse_diagram,
    parse_hilbert_function,
)
from .graph import build_hilbert_graph, emit
from .incidence import find_intermediate, is_length_zero, resolve_incidence, verdict_line
from .resolution import generic_betti
from .strata import stratum_dim
from .sweep import verify_range


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return value


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbstrata",
        description="Strata of point configurations in the plane: enumeration, "
        "invariants and adjacent-incidence resolution.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list all diagrams of one weight")
    p.add_argument("-n", type=_positive, required=True, help="weight (number of points)")

    p = sub.add_parser("betti", help="generator/relation table of a stratum")
    p.add_argument("--phi", required=True, help="diagram or Hilbert function (use trailing '..')")

    p = sub.add_parser("dim", help="dimension of a stratum")
    p.add_argument("--phi", required=True, help="diagram or Hilbert function")

    p = sub.add_parser("resolve", help="resolve the incidence of an adjacent pair")
    p.add_argument("--phi", required=True, help="smaller Hilbert function or diagram")
    p.add_argument("--psi", required=True, help="larger Hilbert function or diagram")

    p = sub.add_parser("graph", help="emit the cover graph of one weight")
    p.add_argument("-n", type=_positive, required=True)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.add_argument("-o", "--output", help="output path (default: stdout)")

    p = sub.add_parser("verify", help="sweep all covers of a weight range")
    p.add_argument("--n-min", type=_positive, default=1)
    p.add_argument("--n-max", type=_positive, required=True)
    p.add_argument("--workers", type=_positive, default=os.cpu_count() or 1)
    return parser


def _function_arg(text):
    """Accept a Hilbert function ('..' suffix) or a diagram; return the function."""
    if text.strip().endswith(".."):
        return parse_hilbert_function(text)
    return parse_diagram(text).hilbert_function()


def _usage_error(message):
    print(f"error: {message}", file=sys.stderr)
    return 2


def _cmd_enumerate(args, out):
    for d in enumerate_diagrams(args.n):
        out.write(d.render() + "\n")
    return 0


def _cmd_betti(args, out):
    hf = _function_arg(args.phi)
    out.write(generic_betti(hf).render() + "\n")
    return 0


def _cmd_dim(args, out):
    hf = _function_arg(args.phi)
    out.write(f"{stratum_dim(hf)}\n")
    return 0


def _cmd_resolve(args, out):
    phi = _function_arg(args.phi)
    psi = _function_arg(args.psi)
    pair = is_length_zero(phi, psi)
    if pair is None:
        between = find_intermediate(phi, psi)
        if between is not None:
            return _usage_error(
                "pair is not length zero: "
                f"{between.render()} lies strictly between the two functions"
            )
        return _usage_error(
            "pair is not length zero: the difference is not a run of ones "
            "(not a single-square move)"
        )
    out.write(verdict_line(pair, resolve_incidence(pair)) + "\n")
    return 0


def _cmd_graph(args, out):
    data = emit(build_hilbert_graph(args.n), args.format)
    if args.output:
        with open(args.output, "wb") as handle:
            handle.write(data)
    else:
        out.write(data.decode("utf-8"))
    return 0


def _cmd_verify(args, out):
    if args.n_min > args.n_max:
        return _usage_error("--n-min must not exceed --n-max")
    bad = []
    for summary in verify_range(range(args.n_min, args.n_max + 1), workers=args.workers):
        out.write(
            f"n={summary.n}: diagrams={summary.diagrams} covers={summary.covers} "
            f"incident={summary.incident} "
            f"not_incident={summary.covers - summary.incident} "
            f"type_zero={summary.type_zero}"
            + (" FAIL" if summary.failures else "")
            + "\n"
        )
        bad.extend(summary.failures)
    if bad:
        for line in bad:
            out.write("counterexample " + line + "\n")
        return 1
    out.write("all equivalences hold\n")
    return 0


_COMMANDS = {
    "enumerate": _cmd_enumerate,
    "betti": _cmd_betti,
    "dim": _cmd_dim,
    "resolve": _cmd_resolve,
    "graph": _cmd_graph,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
