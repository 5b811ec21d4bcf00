"""
Main entry point for gptkit.

Subcommands: reduce, analyze, compose, chsh and export. Exit codes are 0 on
success, 2 on validation failure and 3 on parse errors.
"""

import argparse
import logging
import sys
from typing import List, Optional

import config as app_config
from cli import COMMANDS
from utils import log_section_header, setup_colored_logging
from utils.errors import GptError, SchemaError, TableParseError

EXIT_OK = 0
EXIT_VALIDATION = 2
EXIT_PARSE = 3

main_logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="gptkit", description="Generalized probabilistic theories toolkit")
    parser.add_argument("--log-level", default=app_config.LOG_LEVEL, help="DEBUG, INFO, WARNING or ERROR")
    parser.add_argument("--tolerance", type=float, default=None, help="Tolerance for numeric (qubit) systems only")
    parser.add_argument("--seed", type=int, default=None, help="Seed for numeric sampling")
    parser.add_argument("--enumeration-limit", type=int, default=None,
                        help="Largest joint dimension n*m for vertex enumeration")
    parser.add_argument("--vertex-cap", type=int, default=None, help="Refuse enumerations above this many vertices")
    parser.add_argument("--manifest", default=None, help="Run manifest path (default: next to the first output)")
    sub = parser.add_subparsers(dest="command", required=True)

    reduce_cmd = sub.add_parser("reduce", help="Reduce a probability table to a coordinate representation")
    reduce_cmd.add_argument("table", help="CSV probability table")
    reduce_cmd.add_argument("-o", "--output", required=True, help="coordrep.json")
    reduce_cmd.add_argument("--report", default=None, help="Reduction report JSON")

    analyze_cmd = sub.add_parser("analyze", help="Validate and analyze a system")
    analyze_cmd.add_argument("system", help="System JSON")
    analyze_cmd.add_argument("-o", "--output", required=True, help="Analysis report JSON")
    analyze_cmd.add_argument("--emax", action="store_true", help="Always enumerate E^max")

    compose_cmd = sub.add_parser("compose", help="Compose two systems")
    compose_cmd.add_argument("left", help="Left system JSON")
    compose_cmd.add_argument("right", help="Right system JSON")
    compose_cmd.add_argument("--rule", choices=["min", "max", "genmax", "quantum"], default="min")
    compose_cmd.add_argument("--enumerate", action="store_true", help="Enumerate generators of H-described cones")
    compose_cmd.add_argument("-o", "--output", required=True, help="joint.json")

    chsh_cmd = sub.add_parser("chsh", help="CHSH value of a joint state or its maximum")
    chsh_cmd.add_argument("joint", help="Joint system JSON")
    chsh_cmd.add_argument("measurements", help="Measurements JSON")
    chsh_cmd.add_argument("--maximize", action="store_true", help="Maximize over the joint state space")
    chsh_cmd.add_argument("-o", "--output", required=True, help="chsh_report.json")

    export_cmd = sub.add_parser("export", help="Write a built-in model as system JSON")
    export_cmd.add_argument("model", choices=["classical", "gbit", "polygon", "qubit", "holevo"])
    export_cmd.add_argument("--k", type=int, default=None, help="Size for classical and polygon models")
    export_cmd.add_argument("-o", "--output", default=None, help="Output path (stdout when omitted)")
    return parser


def apply_overrides(args) -> None:
    """Copy global flags onto the config module."""
    if args.tolerance is not None:
        app_config.QUBIT_TOLERANCE = args.tolerance
    if args.seed is not None:
        app_config.DEFAULT_SEED = args.seed
    if args.enumeration_limit is not None:
        app_config.ENUMERATION_DIM_LIMIT = args.enumeration_limit
    if args.vertex_cap is not None:
        app_config.VERTEX_CAP = args.vertex_cap


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_colored_logging(level=getattr(logging, str(args.log_level).upper(), logging.INFO))
    apply_overrides(args)
    log_section_header(main_logger, f"gptkit {args.command}")

    try:
        return COMMANDS[args.command](args)
    except (TableParseError, SchemaError, OSError) as e:
        main_logger.error(f"❌ Parse error: {e}")
        return EXIT_PARSE
    except (GptError, ValueError) as e:
        main_logger.error(f"❌ {type(e).__name__}: {e}")
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
