# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Brunnian detection: a word is Brunnian when deleting any one strand kills it."""

import asyncio
from dataclasses import dataclass, field

from ..maps.base import RelabelMode, require_kind
from ..maps.deletion import delete_strand_g3, delete_strand_pb
from ..utils.errors import PreconditionError
from ..words.base import LetterKind, StrandSet, Word, reduce_involutive
from .artin import DEFAULT_MAX_IMAGE_SYMBOLS, is_trivial_braid, is_trivial_braid_bounded

__all__ = [
    "StrandReport",
    "BrunnianReport",
    "check_strand",
    "is_brunnian",
    "is_brunnian_async",
    "is_brunnian_g3",
]


@dataclass
class StrandReport:
    """Outcome of deleting one strand."""

    strand: int
    trivial: bool
    deleted_word: Word


@dataclass
class BrunnianReport:
    """
    Per-strand deletions of a word and the resulting verdict.

    `exact` is False for G_n^3 words: there a reduced empty image proves triviality
    but a nonempty one proves nothing, so a negative verdict is inconclusive.
    `word_trivial` is only filled in when `word_checked` is set, and stays None when
    the check could not decide.
    """

    word: Word
    strands: list[StrandReport] = field(default_factory=list)
    exact: bool = True
    word_checked: bool = False
    word_trivial: bool | None = None

    @property
    def is_brunnian(self) -> bool:
        return all(report.trivial for report in self.strands)

    @property
    def failing_strands(self) -> list[int]:
        return [report.strand for report in self.strands if not report.trivial]


def check_strand(w: Word, n: int, m: int) -> StrandReport:
    """p_m(w) with compact labels, decided on n-1 strands."""
    deleted = delete_strand_pb(w, m, RelabelMode.COMPACT)
    return StrandReport(m, is_trivial_braid(deleted, n - 1), deleted)


def _require_braid(w: Word, n: int) -> None:
    require_kind(w, LetterKind.PB)
    if n < 2:
        raise PreconditionError(f"Brunnian detection needs at least 2 strands, got {n}")
    if w.support != StrandSet.range(n):
        raise PreconditionError(f"expected a braid over 1..{n}, got support {w.support}")


def _whole_word_report(
    w: Word, n: int, reports: list[StrandReport], check_word: bool, max_symbols: int
) -> BrunnianReport:
    if not check_word:
        return BrunnianReport(w, reports)
    trivial = is_trivial_braid_bounded(w, n, max_symbols)
    return BrunnianReport(w, reports, word_checked=True, word_trivial=trivial)


async def is_brunnian_async(
    w: Word,
    n: int,
    check_word: bool = False,
    max_symbols: int = DEFAULT_MAX_IMAGE_SYMBOLS,
) -> BrunnianReport:
    """Run the n strand checks concurrently in worker threads."""
    _require_braid(w, n)
    reports = await asyncio.gather(
        *[asyncio.to_thread(check_strand, w, n, m) for m in range(1, n + 1)]
    )
    return _whole_word_report(w, n, list(reports), check_word, max_symbols)


def is_brunnian(
    w: Word,
    n: int,
    parallel: bool = False,
    check_word: bool = False,
    max_symbols: int = DEFAULT_MAX_IMAGE_SYMBOLS,
) -> BrunnianReport:
    """
    Check that p_m(w) is the trivial braid for every strand m of PB_n.

    Args:
        w: braid word over 1..n.
        n: strand count, at least 2.
        parallel: run the per-strand checks through `is_brunnian_async`.
        check_word: also decide whether `w` itself is trivial, giving up (None) once the
            Artin images exceed `max_symbols` symbols.
    """
    if parallel:
        return asyncio.run(is_brunnian_async(w, n, check_word, max_symbols))
    _require_braid(w, n)
    reports = [check_strand(w, n, m) for m in range(1, n + 1)]
    return _whole_word_report(w, n, reports, check_word, max_symbols)


def is_brunnian_g3(w: Word) -> BrunnianReport:
    """Reduce q_m(w) for every strand m of the support of a G3 word."""
    require_kind(w, LetterKind.G3)
    reports: list[StrandReport] = []
    for m in w.support:
        deleted = reduce_involutive(delete_strand_g3(w, m, RelabelMode.COMPACT))
        reports.append(StrandReport(m, deleted.is_empty(), deleted))
    word_trivial = True if reduce_involutive(w).is_empty() else None
    return BrunnianReport(
        w, reports, exact=False, word_checked=True, word_trivial=word_trivial
    )
