"""Python access to the superchab core.

``run`` mirrors the command-line tool: it takes a command name and the curve
text, and returns the decoded JSON document, the exit code and a summary line.
"""

import json
from typing import Any, NamedTuple

from . import _superchab
from ._superchab import (
    EXIT_HYPOTHESIS,
    EXIT_OK,
    EXIT_PARSE,
    EXIT_VERIFICATION,
    SCHEMA_VERSION,
    DomainError,
    HypothesisError,
    chabauty_prime,
    genus,
    stoll_reference_bound,
    theorem3_bound,
)

COMMANDS = ("genus", "prime", "bound", "analyze", "search", "verify")


class Result(NamedTuple):
    json: dict[str, Any]
    exit_code: int
    summary: str


def run(command: str, text: str) -> Result:
    if command not in COMMANDS:
        raise ValueError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
    payload, code, summary = _superchab.run(command, text)
    return Result(json.loads(payload), code, summary)


__all__ = [
    "COMMANDS",
    "DomainError",
    "EXIT_HYPOTHESIS",
    "EXIT_OK",
    "EXIT_PARSE",
    "EXIT_VERIFICATION",
    "HypothesisError",
    "Result",
    "SCHEMA_VERSION",
    "chabauty_prime",
    "genus",
    "run",
    "stoll_reference_bound",
    "theorem3_bound",
]
