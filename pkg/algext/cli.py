"""
algext.cli
~~~~~~~~~~
Command line interface: run, replay, suite and corpus list.

Exit codes: 0 when every verdict passes, 1 when a verdict fails or the
user-supplied config or artifact is rejected, 2 on infrastructure errors.
"""
import argparse
import json
import logging
import sys
from typing import List, Optional

from dotenv import find_dotenv, load_dotenv

from ._version import __version__
from .errors import AlgextError, ArtifactVersionMismatch, ConfigError
from .harness import SUITES, Harness

logger = logging.getLogger(__name__)

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_ERROR = 2

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algext", description="Algebraic randomness extractors and their verification harness.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="Log at DEBUG level.")
    parser.add_argument("--output-dir", default="reports",
                        help="Directory for reports without an [output] path (default: reports).")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", help="Run one experiment file.")
    run.add_argument("config", help="Experiment file (INI).")

    replay = commands.add_parser("replay", help="Replay an artifact on an input file.")
    replay.add_argument("artifact", help="Artifact JSON file.")
    replay.add_argument("input", help="One input per line.")
    replay.add_argument("-o", "--output", default=None,
                        help="Write outputs here instead of standard output.")

    suite = commands.add_parser("suite", help="Run a shipped suite.")
    suite.add_argument("name", choices=SUITES)
    suite.add_argument("-j", "--jobs", type=int, default=1,
                       help="Experiments run concurrently (default: 1).")

    corpus = commands.add_parser("corpus", help="Inspect the shipped corpus.")
    corpus.add_argument("action", choices=["list"])
    return parser


def configure_logging(verbose: bool) -> None:
    logging.basicConfig(level=logging.DEBUG if verbose else logging.WARNING,
                        format=LOG_FORMAT, stream=sys.stderr)


def _dispatch(args: argparse.Namespace, harness: Harness) -> int:
    if args.command == "run":
        report = harness.run(args.config)
        print(f"{report.name}: {len(report.rows)} rows, "
              f"{report.verdicts['failed']} failed, {'PASS' if report.passed else 'FAIL'}")
        return EXIT_PASS if report.passed else EXIT_FAIL
    if args.command == "replay":
        outputs = harness.replay(args.artifact, args.input, args.output)
        if not args.output:
            sys.stdout.writelines(f"{line}\n" for line in outputs)
        return EXIT_PASS
    if args.command == "suite":
        summary = harness.suite(args.name, args.jobs)
        for entry in summary["experiments"]:
            verdict = "PASS" if entry["passed"] else "FAIL"
            detail = f" ({entry['error']})" if entry.get("error") else ""
            print(f"{entry['name']}: {verdict}{detail}")
        print(f"suite {args.name}: {'PASS' if summary['passed'] else 'FAIL'}")
        return EXIT_PASS if summary["passed"] else EXIT_FAIL
    for entry in harness.corpus_list():
        print(json.dumps(entry, sort_keys=True))
    return EXIT_PASS


def main(argv: Optional[List[str]] = None) -> int:
    """Entry point of the ``algext`` command.

    :param argv: (optional) Arguments, defaults to ``sys.argv[1:]``
    :return: process exit code
    """
    load_dotenv(find_dotenv(usecwd=True))
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    harness = Harness(output_dir=args.output_dir)
    try:
        return _dispatch(args, harness)
    except (ConfigError, ArtifactVersionMismatch) as err:
        print(f"error {err.code}: {err.message}", file=sys.stderr)
        return EXIT_FAIL
    except AlgextError as err:
        print(f"error {err.code}: {err.message}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_ERROR
    except Exception:  # pylint: disable=broad-except
        logger.exception("unexpected failure")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
