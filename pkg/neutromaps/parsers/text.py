"""Common text cleaning for every input format."""
import unicodedata
from typing import Iterator, List, Tuple

import regex

COMMENT_PREFIX = "#"
CONTROL_CHARACTERS = regex.compile(r"[^\P{C}\t\n\r\f]")


def normalise_unicode(text):
    """Normalise unicode such that things that are visually equivalent map to the same unicode string where possible."""
    return unicodedata.normalize("NFKC", text)


def normalise_whitespace(text):
    """Replace runs of whitespace characters with a single space and strip the ends."""
    return regex.sub(r"\s+", " ", text).strip()


def strip_control_characters(text):
    """Drop unicode control, format, private-use and unassigned characters, keeping tabs and line breaks."""
    return CONTROL_CHARACTERS.sub("", text)


def normalise_text(text):
    """Strip control characters, then normalise unicode and whitespace."""
    text = strip_control_characters(text)
    text = normalise_unicode(text)
    return normalise_whitespace(text)


def content_lines(text: str) -> Iterator[Tuple[int, str]]:
    """Yield ``(line number, normalised line)`` for every line that is neither blank nor a comment."""
    for number, line in enumerate(text.splitlines(), start=1):
        line = normalise_text(line)
        if line and not line.startswith(COMMENT_PREFIX):
            yield number, line


def split_tokens(line: str) -> List[str]:
    return [token for token in regex.split(r"\s+", line.strip()) if token]


def split_list(value: str) -> List[str]:
    """Split on commas, whitespace or both."""
    return [token for token in regex.split(r"[\s,]+", value.strip()) if token]


def header(line: str):
    """Split a ``key: value`` header line, or return None."""
    match = regex.match(r"^(?P<key>[A-Za-z_]+)\s*:\s*(?P<value>.*)$", line)
    if match is None:
        return None
    return match.group("key").lower(), match.group("value")
