import json
import sys
import traceback
import uuid
from typing import Any, Optional, TextIO

from pydantic import ValidationError

from core.exceptions import ParseError, SuperderError
from core.logging_config import get_logger, log_error

# Get logger for handlers
logger = get_logger("handlers")

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_INPUT = 2


def create_response(success: bool, message: str, data=None) -> dict:
    return {
        "success": success,
        "message": message,
        "data": data if data is not None else []
    }


def emit_response(response: dict, stream: Optional[TextIO] = None) -> None:
    stream = stream or sys.stderr
    stream.write(json.dumps(response) + "\n")
    stream.flush()


def superder_error_handler(exc: SuperderError, command: str, stream: Optional[TextIO] = None) -> int:
    """Handle domain and input errors with proper logging.

    Returns:
        The process exit code for the error.
    """
    error_id = str(uuid.uuid4())

    log_error(
        logger,
        f"{type(exc).__name__}: {exc.detail}",
        error_id=error_id,
        command=command,
        exit_code=exc.exit_code,
    )

    emit_response(
        create_response(
            success=False,
            message=exc.detail,
            data={"error_id": error_id, "error": type(exc).__name__},
        ),
        stream,
    )
    return exc.exit_code


def validation_error_handler(exc: ValidationError, command: str, stream: Optional[TextIO] = None) -> int:
    """Handle pydantic validation failures on command input"""
    errors: list[dict[str, Any]] = [
        {"loc": list(err.get("loc", ())), "msg": err.get("msg", "")} for err in exc.errors()
    ]
    message = "; ".join(err["msg"] for err in errors) or "Validation error"
    return superder_error_handler(ParseError(message), command, stream)


def general_exception_handler(exc: Exception, command: str, stream: Optional[TextIO] = None) -> int:
    """Handle unexpected exceptions with comprehensive logging"""
    error_id = str(uuid.uuid4())

    logger.critical(
        f"Unhandled Exception: {type(exc).__name__}: {str(exc)}",
        exc_info=exc,
        extra={
            "error_id": error_id,
            "command": command,
            "exit_code": EXIT_DOMAIN,
            "traceback": traceback.format_exc(),
        }
    )

    emit_response(
        create_response(
            success=False,
            message="Internal error",
            data={"error_id": error_id},
        ),
        stream,
    )
    return EXIT_DOMAIN
