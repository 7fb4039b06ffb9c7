"""Command-line interface.

Commands:
  qoseval validate <config>
  qoseval weights <config>
  qoseval evaluate <config> <measurements> [--format text|json]
  qoseval whatif <config> <measurements> --set <app> <scale> <app> [--format text|json]

Exit codes: 0 success, 1 validation error, 2 I/O error.
"""

from __future__ import annotations

import argparse
import sys

from .config import load_config, load_measurements
from .evaluation import ImportanceDirective, derive_application_weights, evaluate, whatif
from .fahp import validate_matrix
from .report import render_report, render_whatif

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_IO = 2


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qoseval",
        description="Application-importance-weighted QoS evaluation for heterogeneous networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a configuration file")
    p_validate.add_argument("config")

    p_weights = sub.add_parser(
        "weights", help="print derived comparison matrices and weight vectors"
    )
    p_weights.add_argument("config")

    p_eval = sub.add_parser("evaluate", help="evaluate measurements against a configuration")
    p_eval.add_argument("config")
    p_eval.add_argument("measurements")
    p_eval.add_argument("--format", choices=("text", "json"), default="text")

    p_whatif = sub.add_parser(
        "whatif", help="re-evaluate with one importance judgment overridden"
    )
    p_whatif.add_argument("config")
    p_whatif.add_argument("measurements")
    p_whatif.add_argument(
        "--set",
        dest="directive",
        nargs=3,
        metavar=("APP", "SCALE", "APP"),
        required=True,
        help="importance override, e.g. --set voice1 extreme-over vs1",
    )
    p_whatif.add_argument("--format", choices=("text", "json"), default="text")
    return parser


def _cmd_validate(args) -> int:
    config = load_config(args.config)
    problems = []
    for ran in config.network.rans:
        if len(ran.applications) < 2:
            continue
        _, _, matrix = derive_application_weights(ran.applications, config.weight_rules)
        for violation in validate_matrix(matrix):
            problems.append(f"RAN {ran.id!r}: {violation.message}")
    if problems:
        for problem in problems:
            print(problem, file=sys.stderr)
        return EXIT_VALIDATION
    print(f"configuration OK: network {config.network.id!r}, {len(config.network.rans)} RAN(s)")
    return EXIT_OK


def _cmd_weights(args) -> int:
    config = load_config(args.config)
    for ran in config.network.rans:
        print(f"RAN {ran.id} ({ran.technology})")
        weights, raw, matrix = derive_application_weights(ran.applications, config.weight_rules)
        if matrix is not None:
            width = max(len(a) for a in matrix.alternatives)
            print("  comparison matrix:")
            for alt, row in zip(matrix.alternatives, matrix.cells):
                cells = "  ".join(f"({c.l:.3f}, {c.m:.3f}, {c.u:.3f})" for c in row)
                print(f"    {alt:<{width}}  {cells}")
        if raw is not None:
            print("  raw weights:        " + "  ".join(f"{k}={v:.3f}" for k, v in raw.items()))
        print("  normalized weights: " + "  ".join(f"{k}={v:.3f}" for k, v in weights.items()))
    return EXIT_OK


def _cmd_evaluate(args) -> int:
    config = load_config(args.config)
    measurements = load_measurements(args.measurements, config)
    report = evaluate(config, measurements)
    print(render_report(report, args.format), end="")
    return EXIT_OK


def _cmd_whatif(args) -> int:
    config = load_config(args.config)
    measurements = load_measurements(args.measurements, config)
    subject, scale, obj = args.directive
    result = whatif(config, measurements, ImportanceDirective(subject, scale, obj))
    print(render_whatif(result, args.format), end="")
    return EXIT_OK


_COMMANDS = {
    "validate": _cmd_validate,
    "weights": _cmd_weights,
    "evaluate": _cmd_evaluate,
    "whatif": _cmd_whatif,
}


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
