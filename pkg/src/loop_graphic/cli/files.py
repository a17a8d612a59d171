"""Reading sequence and graph files, writing command output."""

import json
import logging
import sys
from pathlib import Path
from typing import Any

from loop_graphic.errors import InputFormatError
from loop_graphic.sequences import DegreeSequence, make_sequence

logger = logging.getLogger(__name__)

STDIN = "-"


def read_source(source: str) -> str:
    """Read a file path, or standard input for ``-``.

    Raises:
        InputFormatError: If the file cannot be read
    """
    if source == STDIN:
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise InputFormatError(f"cannot read {source}: {e.strerror}") from e


def parse_sequence_text(text: str) -> list[int]:
    """Parse a SequenceFile body.

    Accepts a JSON document ``{"degrees": [...]}`` or whitespace-separated
    integers (commas are tolerated). Blank text is the empty sequence.

    Raises:
        InputFormatError: If the text is neither form
    """
    stripped = text.strip()
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as e:
            raise InputFormatError(f"invalid JSON sequence: {e.msg}") from e
        degrees = doc.get("degrees") if isinstance(doc, dict) else None
        if not isinstance(degrees, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in degrees
        ):
            raise InputFormatError('JSON sequence needs "degrees": [int, ...]')
        return degrees
    tokens = stripped.replace(",", " ").split()
    try:
        return [int(token) for token in tokens]
    except ValueError as e:
        raise InputFormatError(f"not a list of integers: {stripped!r}") from e


def load_sequence(
    text: str | None, file: str | None, autosort: bool = False
) -> DegreeSequence:
    """Sequence from a command-line argument or a SequenceFile.

    Raises:
        InputFormatError: If neither or both sources are given, or parsing fails
        NegativeEntry, NotSorted: From make_sequence
    """
    if file is not None:
        if text is not None:
            raise InputFormatError("give a sequence argument or --file, not both")
        body = read_source(file)
    elif text is None:
        raise InputFormatError("missing sequence: give it as an argument or --file")
    else:
        body = read_source(STDIN) if text == STDIN else text
    return make_sequence(parse_sequence_text(body), autosort=autosort)


def load_document(source: str) -> Any:
    """Parse a JSON GraphFile.

    Raises:
        InputFormatError: On unreadable files or invalid JSON
    """
    try:
        return json.loads(read_source(source))
    except json.JSONDecodeError as e:
        raise InputFormatError(f"{source}: invalid JSON ({e.msg})") from e


def dump_document(doc: Any) -> str:
    return json.dumps(doc, indent=2)


def write_output(text: str, output: str | None) -> None:
    """Print ``text`` or write it to ``output``."""
    if output is None or output == STDIN:
        print(text)
        return
    Path(output).write_text(text + "\n", encoding="utf-8")
    logger.info("Wrote %s", output)
