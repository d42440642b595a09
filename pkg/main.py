import argparse
import sys
from typing import List, Optional, TextIO

from pydantic import ValidationError

from commands import COMMANDS
from core.config import settings
from core.exceptions import ParseError, SuperderError
from core.handlers import general_exception_handler, superder_error_handler, validation_error_handler
from core.logging_config import get_logger, setup_logging
from schemas.run_config import Command, RunConfig

logger = get_logger("superder")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Exact delta-derivations of classical Lie superalgebras.",
    )
    parser.add_argument("--log-level", default=None, help="Override LOG_LEVEL (DEBUG, INFO, WARNING, ...)")
    parser.add_argument("--json-logs", action="store_true", help="Emit logs on stderr as JSON lines")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default=None, help="Write the artifact here instead of stdout")
        p.add_argument("--format", choices=["json", "csv"], default=None)

    construct = sub.add_parser("construct", help="Build a catalog algebra and write it as JSON")
    construct.add_argument("target", help='Family spec, e.g. "A:1,0", "Aqq:1", "D21:2/3", or fixture:NAME')
    add_common(construct)

    for name, text in (("jacobi", "Check the superidentities"), ("derive", "Solve for delta-derivations"),
                       ("roots", "Root-space decomposition and closure checks"), ("scan", "Critical deltas")):
        p = sub.add_parser(name, help=text)
        p.add_argument("target", help="Algebra JSON path, family spec, or fixture:NAME")
        add_common(p)
        if name == "derive":
            p.add_argument("--delta", required=True, help="Rational delta, e.g. 1/2")
        if name == "roots":
            p.add_argument("--cartan", default=None, help="Comma-separated Cartan basis indices")
        if name == "scan":
            p.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)

    report = sub.add_parser("report", help="Run the acceptance matrix over the catalog")
    add_common(report)
    report.add_argument("--seed", type=int, default=settings.DEFAULT_SEED)
    report.add_argument("--jobs", type=int, default=settings.DEFAULT_JOBS)
    report.add_argument("--max-dim", type=int, default=settings.SUPERDER_MAX_DIM)
    return parser


def _parse_cartan(text: Optional[str]) -> Optional[List[int]]:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ParseError(f"--cartan expects comma-separated integers, got {text!r}") from None


def build_config(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    fmt = args.format or ("csv" if command == Command.REPORT else "json")
    return RunConfig(
        command=command,
        target=getattr(args, "target", None),
        delta=getattr(args, "delta", None),
        out=args.out,
        format=fmt,
        jobs=getattr(args, "jobs", settings.DEFAULT_JOBS),
        seed=getattr(args, "seed", settings.DEFAULT_SEED),
        max_dim=getattr(args, "max_dim", settings.SUPERDER_MAX_DIM),
        cartan=_parse_cartan(getattr(args, "cartan", None)),
    )


def run(config: RunConfig, stream: Optional[TextIO] = None) -> int:
    return COMMANDS[config.command](config, stream or sys.stdout)


def cli(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    args = build_parser().parse_args(argv)
    setup_logging(
        log_level=args.log_level or settings.LOG_LEVEL,
        log_to_console=settings.LOG_TO_CONSOLE,
        json_logs=args.json_logs or settings.JSON_LOGS,
    )
    command = args.command
    try:
        config = build_config(args)
        logger.info(f"Running {command}", extra={"command": command})
        return run(config, stdout)
    except ValidationError as exc:
        return validation_error_handler(exc, command, stderr)
    except SuperderError as exc:
        return superder_error_handler(exc, command, stderr)
    except Exception as exc:
        return general_exception_handler(exc, command, stderr)


if __name__ == "__main__":
    sys.exit(cli())
