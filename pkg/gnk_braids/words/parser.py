# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Text form of words: `a(1,2)`, `a(1,2,3)`, `a(1,2:0)`, `a(1,2,3:1)`, `b(1,2)`, `b(1,2)^-1`."""

import re

from ..utils.errors import WordError
from .base import Letter, LetterKind, StrandSet, Word

__all__ = ["parse_letter", "parse_word", "format_letter", "format_word", "IDENTITY_TEXT"]

IDENTITY_TEXT = "1"

_LETTER_RE = re.compile(
    r"\s*(?P<gen>[ab])\(\s*(?P<idx>\d+(?:\s*,\s*\d+)*)\s*(?::\s*(?P<eps>\d+)\s*)?\)"
    r"(?P<inv>\^-1)?"
)
_IDENTITY_RE = re.compile(r"\s*1(?![\d(])")
_HEADER_RE = re.compile(r"^\s*strands\s*:\s*(?P<labels>[\d\s,]*)$")


def _letter_from_match(match: re.Match[str]) -> Letter:
    indices = tuple(int(x) for x in re.split(r"\s*,\s*", match["idx"]))
    eps = match["eps"]
    inverted = match["inv"] is not None
    if match["gen"] == "b":
        if eps is not None:
            raise WordError(f"braid letter {match.group().strip()} cannot carry a parity bit")
        return Letter(LetterKind.PB, indices, sign=-1 if inverted else 1)
    if inverted:
        raise WordError(f"{match.group().strip()}: only braid letters take ^-1")
    arity = len(indices)
    if arity not in (2, 3):
        raise WordError(f"letter {match.group().strip()} needs 2 or 3 indices")
    if eps is None:
        kind = LetterKind.G2 if arity == 2 else LetterKind.G3
        return Letter(kind, indices)
    if eps not in ("0", "1"):
        raise WordError(f"parity bit must be 0 or 1 in {match.group().strip()}")
    kind = LetterKind.PG2 if arity == 2 else LetterKind.PG3
    return Letter(kind, indices, parity=int(eps))


def parse_letter(text: str) -> Letter:
    match = _LETTER_RE.fullmatch(text.strip())
    if match is None:
        raise WordError(f"cannot parse letter {text!r}")
    return _letter_from_match(match)


def _parse_header(line: str) -> StrandSet:
    match = _HEADER_RE.match(line)
    if match is None:
        raise WordError(f"malformed header {line!r}, expected 'strands: 1,2,...'")
    labels = [x for x in re.split(r"[\s,]+", match["labels"]) if x]
    if not labels:
        raise WordError("the strands header lists no labels")
    return StrandSet(tuple(int(x) for x in labels))


def parse_word(
    text: str, kind: LetterKind | None = None, support: StrandSet | None = None
) -> Word:
    """
    Parse a word.

    Args:
        text: whitespace-separated letters, optionally preceded by a `strands: ...` line.
        kind: expected alphabet; inferred from the letters when omitted.
        support: strand support; the header wins over this, and the union of letter
            indices is used when neither is given.
    """
    body = text
    first_line, _, rest = text.lstrip().partition("\n")
    if first_line.strip().startswith("strands"):
        support = _parse_header(first_line)
        body = rest

    letters: list[Letter] = []
    pos = 0
    while pos < len(body):
        if body[pos:].strip() == "":
            break
        match = _LETTER_RE.match(body, pos)
        if match is not None:
            letters.append(_letter_from_match(match))
            pos = match.end()
            continue
        identity = _IDENTITY_RE.match(body, pos)
        if identity is not None:
            pos = identity.end()
            continue
        snippet = body[pos:].strip().split()[0]
        raise WordError(f"cannot parse {snippet!r} at offset {pos}")

    kinds = {letter.kind for letter in letters}
    if len(kinds) > 1:
        names = ", ".join(sorted(k.value for k in kinds))
        raise WordError(f"word mixes alphabets: {names}")
    if kinds:
        found = kinds.pop()
        if kind is not None and found is not kind:
            raise WordError(f"expected a {kind.value} word, got {found.value} letters")
        kind = found
    if kind is None:
        raise WordError("cannot infer the alphabet of an empty word")
    return Word.from_letters(kind, letters, support)


def format_letter(letter: Letter) -> str:
    body = ",".join(str(x) for x in letter.indices)
    if letter.kind is LetterKind.PB:
        return f"b({body})" + ("^-1" if letter.sign == -1 else "")
    if letter.parity is not None:
        return f"a({body}:{letter.parity})"
    return f"a({body})"


def format_word(w: Word, header: bool = False) -> str:
    """Space-separated letters; the identity prints as `1`."""
    text = " ".join(format_letter(letter) for letter in w.letters) or IDENTITY_TEXT
    if header:
        return f"strands: {w.support}\n{text}"
    return text
