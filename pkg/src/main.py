"""
mackit: exact Macdonald polynomials from creation operators

Main entry point for the command line.
"""

import sys
import argparse
import os

# Add project root to path for imports
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
if project_root not in sys.path:
    sys.path.insert(0, project_root)

from src.config import get_default_config
from src.controller.command_runner import CommandRunner
from src.interpreter.config_interpreter import ArgumentInterpreter
from src.utils.commands import Method, OutputFormat
from src.utils.logger import Logger
from src.verify.suites import SUITES

EXIT_USAGE = 2


def create_app(verbose: bool = False, threads: int = 1, environ: dict = None):
    """
    Create and initialize the application.

    Raises:
        ValueError: If MACKIT_MAX_DEGREE is malformed
    """
    config = get_default_config(verbose=verbose, threads=threads, environ=environ)
    logger = Logger("mackit", verbose=verbose)
    interpreter = ArgumentInterpreter(config, logger)
    runner = CommandRunner(config, logger)
    return interpreter, runner, logger


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--format",
        choices=[f.value for f in OutputFormat],
        default=OutputFormat.TEXT.value,
        help="Result format on stdout",
    )
    parser.add_argument("--threads", type=int, default=1, help="Worker threads for subset sums")
    parser.add_argument("--seed", type=int, default=None, help="Seed for randomized suite samples")
    parser.add_argument(
        "--verbose",
        "-v",
        action="store_true",
        help="Enable verbose logging (stderr)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mackit",
        description="Macdonald polynomials by Rodrigues formulas, with exact identity checks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    jpoly = sub.add_parser("jpoly", help="J_lam (or P_lam) in the monomial basis")
    jpoly.add_argument("--partition", required=True, help='Comma-separated parts, e.g. "2,1"; "" is the empty partition')
    jpoly.add_argument("--nvars", type=int, default=None, help="Number of variables (default: length of the partition)")
    jpoly.add_argument(
        "--via",
        choices=[m.value for m in Method],
        default=Method.B3.value,
        help="Construction: a creation-operator variant or the Gram-Schmidt oracle",
    )
    jpoly.add_argument("--monic", action="store_true", help="Print P_lam = J_lam / c_lam")
    _add_common(jpoly)

    verify = sub.add_parser("verify", help="Run an exact-identity suite")
    verify.add_argument("--suite", required=True, help=f"One of: {', '.join(SUITES)}")
    verify.add_argument("--nvars", type=int, default=None)
    verify.add_argument("--max-degree", dest="max_degree", type=int, default=None)
    _add_common(verify)

    kostka = sub.add_parser("kostka", help="(q,t)-Kostka matrix of a given degree")
    kostka.add_argument("--degree", type=int, required=True)
    kostka.add_argument("--allow-large", dest="allow_large", action="store_true", help="Lift the degree guard")
    _add_common(kostka)

    pieri = sub.add_parser("pieri", help="e_k P_lam in the P basis")
    pieri.add_argument("--partition", required=True)
    pieri.add_argument("--k", type=int, required=True)
    pieri.add_argument("--nvars", type=int, default=None, help="Number of variables (default: length + k)")
    pieri.add_argument("--explore", action="store_true", help="Also apply B3_k to J_lam, even when l(lam) > k")
    _add_common(pieri)

    return parser


def main(argv=None):
    """Main entry point."""
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        interpreter, runner, logger = create_app(verbose=args.verbose, threads=args.threads)
        if args.command == "verify" and args.suite not in SUITES:
            raise ValueError(f"unknown suite {args.suite!r}; expected one of {', '.join(SUITES)}")
        cfg = interpreter.interpret(args)
        return runner.run(cfg)

    except ValueError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print(file=sys.stderr)
        return 1
    except Exception as e:
        print(f"FATAL ERROR: {e}", file=sys.stderr)
        import traceback
        traceback.print_exc()
        return 1


if __name__ == "__main__":
    sys.exit(main())
