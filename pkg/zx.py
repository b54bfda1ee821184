#!/usr/bin/env python
"""
Runner script for ScaledZX.
"""
from rich.console import Console
from rich.logging import RichHandler

console = Console(stderr=True)

with console.status("[green]Loading...") as status:
    import sys
    from pathlib import Path

    ROOT = Path(__file__).resolve().parent
    if str(ROOT) not in sys.path:
        sys.path.insert(0, str(ROOT))

    status.update("[bold green]Importing modules...")
    import argparse
    import logging
    from typing import List

    import pyfiglet

    import scaledzx.helpers.utils as utils
    from scaledzx import bb84, diagram_file, render, report
    from scaledzx.equality import decide_equal
    from scaledzx.errors import (
        DiagramFileError,
        InvalidDiagramError,
        NonScalarError,
        NotZeroError,
        ZXError,
    )
    from scaledzx.gslc import gslc_normalize
    from scaledzx.models.Report import Report
    from scaledzx.rules import closure_variants, derived_rules, negative_controls, rule_registry
    from scaledzx.scalars import normalize_scalar_diagram
    from scaledzx.semantics import interpret
    from scaledzx.zero import zero_normal_form

MODULE_NAME = "zx"

EXIT_OK = 0
EXIT_UNEQUAL = 1
EXIT_INVALID = 3
EXIT_FAILURE = 4

logger = logging.getLogger(MODULE_NAME)
logargs = {
    "level": logging.INFO,
    "format": "%(message)s",
    "handlers": [RichHandler(console=console, rich_tracebacks=True, level=logging.INFO)],
}
logging.basicConfig(**logargs)


def _load(path: str):
    try:
        data = Path(path).read_bytes()
        text = data.decode("utf-8")
    except (OSError, UnicodeDecodeError) as err:
        raise DiagramFileError(str(err), path) from err
    return diagram_file.parse_text(text), utils.digest(data)


def cmd_interpret(args) -> int:
    d, digest = _load(args.file)
    payload = report.matrix_payload(interpret(d), approx=args.approx)
    print(Report("interpret", (digest,), payload).to_text(), end="")
    return EXIT_OK


def cmd_normalize(args) -> int:
    d, digest = _load(args.file)
    match args.kind:
        case "scalar":
            form, derivation = normalize_scalar_diagram(d)
        case "zero":
            form, derivation = zero_normal_form(d)
        case _:
            max_states = int(utils.zx_params()["gslc_max_states"])
            form, derivation = gslc_normalize(d, max_states)
    command = f"normalize --kind {args.kind}"
    print(report.normal_form_report(command, [digest], form, derivation).to_text(), end="")
    return EXIT_OK


def cmd_eq(args) -> int:
    left, left_digest = _load(args.a)
    right, right_digest = _load(args.b)
    result = decide_equal(left, right)
    print(report.equality_report("eq", [left_digest, right_digest], result).to_text(), end="")
    return EXIT_OK if result.equal else EXIT_UNEQUAL


def cmd_verify_rules(args) -> int:
    params = utils.zx_params()
    legs = args.legs if args.legs is not None else int(params["verify_legs"])
    rules = rule_registry()
    if args.derived:
        rules += derived_rules()
    if args.include_negative_controls:
        rules += negative_controls()
    rules = closure_variants(rules)
    logger.info(f"Sweeping {len(rules)} rules with up to {legs} legs")
    reports = report.verify_rules(rules, legs, workers=int(params["workers"]))
    command = f"verify-rules --legs {legs}"
    print(report.soundness_report(command, reports).to_text(), end="")
    return EXIT_OK if all(r.as_expected for r in reports) else EXIT_UNEQUAL


def cmd_demo(args) -> int:
    results = bb84.run_demo()
    print(report.bb84_report(f"demo {args.name}", results).to_text(), end="")
    return EXIT_OK


def cmd_render(args) -> int:
    d, _ = _load(args.file)
    print(render.render(d, args.format), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zx", description="ScaledZX")
    parser.add_argument("--quiet", action="store_true", help="skip the banner")
    subparsers = parser.add_subparsers(dest="command", required=True)

    interpret_parser = subparsers.add_parser("interpret", help="print the exact matrix")
    interpret_parser.add_argument("file", type=str, help="diagram file (JSON)")
    interpret_parser.add_argument(
        "--approx", action="store_true", help="also print 15-digit decimals"
    )
    interpret_parser.set_defaults(func=cmd_interpret)

    normalize_parser = subparsers.add_parser("normalize", help="rewrite to a normal form")
    normalize_parser.add_argument(
        "--kind", type=str, choices=["scalar", "zero", "gslc"], required=True,
        help="which normal form",
    )
    normalize_parser.add_argument("file", type=str, help="diagram file (JSON)")
    normalize_parser.set_defaults(func=cmd_normalize)

    eq_parser = subparsers.add_parser("eq", help="decide equality of two diagrams")
    eq_parser.add_argument("a", type=str, help="first diagram file")
    eq_parser.add_argument("b", type=str, help="second diagram file")
    eq_parser.set_defaults(func=cmd_eq)

    verify_parser = subparsers.add_parser("verify-rules", help="check rules against the oracle")
    verify_parser.add_argument("--legs", type=int, help="leg-count bound", required=False)
    verify_parser.add_argument(
        "--include-negative-controls", action="store_true",
        help="also sweep the deliberately unsound rules",
    )
    verify_parser.add_argument("--derived", action="store_true", help="also sweep derived rules")
    verify_parser.set_defaults(func=cmd_verify_rules)

    demo_parser = subparsers.add_parser("demo", help="run a worked example")
    demo_parser.add_argument("name", type=str, choices=["bb84"])
    demo_parser.set_defaults(func=cmd_demo)

    render_parser = subparsers.add_parser("render", help="print the diagram as a graph")
    render_parser.add_argument(
        "--format", type=str, choices=list(render.FORMATS), default="dot", help="output format"
    )
    render_parser.add_argument("file", type=str, help="diagram file (JSON)")
    render_parser.set_defaults(func=cmd_render)
    return parser


def main(argv: List[str] = None) -> int:
    """
    Main function for ScaledZX.

    Returns:
        int: The process exit code.
    """
    root_logger = logging.getLogger()
    if not any(isinstance(h, logging.FileHandler) for h in root_logger.handlers):
        try:
            log_params = utils.config(utils.get_config_file(), "logging")
            file_handler = logging.FileHandler(log_params[MODULE_NAME], mode="a")
            file_handler.setLevel(logging.DEBUG)
            file_handler.setFormatter(
                logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
            )
            root_logger.addHandler(file_handler)
        except (ValueError, KeyError) as err:
            logger.debug(f"No log file: {err}")

    args = build_parser().parse_args(argv)
    logger.debug(f"Arguments: {args}")

    if not args.quiet:
        title = pyfiglet.figlet_format("ScaledZX", font="slant")
        console.print(f"[bold green]{title}")

    try:
        return args.func(args)
    except (DiagramFileError, InvalidDiagramError) as err:
        logger.error(f"Invalid input: {err}")
        return EXIT_INVALID
    except (NotZeroError, NonScalarError) as err:
        logger.error(f"Cannot normalize: {err}")
        return EXIT_INVALID
    except ZXError as err:
        logger.exception(f"Rewrite failed: {err}")
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
