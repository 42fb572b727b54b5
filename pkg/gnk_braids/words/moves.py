# Copyright (c) 2025 gnk-braids contributors
# SPDX-License-Identifier: MIT

"""Single-step applications of the defining relations of each alphabet."""

from dataclasses import dataclass
from enum import Enum

from ..utils.errors import MoveNotApplicable
from .base import Letter, LetterKind, Word

__all__ = [
    "Relation",
    "MoveDirection",
    "MoveSpec",
    "RELATIONS_BY_KIND",
    "apply_move",
    "applicable_moves",
]


class Relation(Enum):
    INVOLUTION = "involution"
    FAR_COMMUTE = "far_commute"
    TRIANGLE = "triangle"
    TETRAHEDRON = "tetrahedron"

    @property
    def span(self) -> int:
        """Number of letters the left-hand side occupies (deletion side for involutions)."""
        return {
            Relation.INVOLUTION: 2,
            Relation.FAR_COMMUTE: 2,
            Relation.TRIANGLE: 3,
            Relation.TETRAHEDRON: 4,
        }[self]


class MoveDirection(Enum):
    INSERT = "insert"
    DELETE = "delete"


RELATIONS_BY_KIND: dict[LetterKind, frozenset[Relation]] = {
    LetterKind.G2: frozenset({Relation.INVOLUTION, Relation.FAR_COMMUTE, Relation.TRIANGLE}),
    LetterKind.PG2: frozenset({Relation.INVOLUTION, Relation.FAR_COMMUTE, Relation.TRIANGLE}),
    LetterKind.G3: frozenset({Relation.INVOLUTION, Relation.FAR_COMMUTE, Relation.TETRAHEDRON}),
    LetterKind.PG3: frozenset({Relation.INVOLUTION, Relation.FAR_COMMUTE, Relation.TETRAHEDRON}),
    LetterKind.PB: frozenset({Relation.INVOLUTION}),
}


@dataclass(frozen=True)
class MoveSpec:
    """
    One relation instance to rewrite.

    `direction` only matters for involutions; an insertion also needs the `letter`
    to insert (its inverse is inserted right after it).
    """

    relation: Relation
    position: int
    direction: MoveDirection = MoveDirection.DELETE
    letter: Letter | None = None


def _far_commute_failure(kind: LetterKind, x: Letter, y: Letter) -> str | None:
    shared = len(set(x.indices) & set(y.indices))
    limit = 1 if kind.arity == 2 else 2
    if shared >= limit:
        return f"letters share {shared} indices"
    return None


def _simplex_failure(kind: LetterKind, letters: tuple[Letter, ...]) -> str | None:
    """Check that the letters are all faces of one simplex, each used once."""
    faces = {letter.indices for letter in letters}
    labels = {x for letter in letters for x in letter.indices}
    if len(faces) != len(letters) or len(labels) != kind.arity + 1:
        return "letters are not the distinct faces of one simplex"
    if kind.has_parity:
        # triangles: all three bits; tetrahedra: only the faces through the largest label
        top = max(labels) if kind.arity == 3 else None
        total = sum(
            letter.parity or 0 for letter in letters if top is None or top in letter.indices
        )
        if total % 2 != 0:
            return f"parity sum {total} is odd"
    return None


def _failure(w: Word, spec: MoveSpec) -> str | None:
    relation = spec.relation
    if relation not in RELATIONS_BY_KIND[w.kind]:
        return f"relation {relation.value} does not exist in the {w.kind.value} alphabet"
    if relation is Relation.INVOLUTION and spec.direction is MoveDirection.INSERT:
        if not 0 <= spec.position <= len(w):
            return f"position {spec.position} out of range"
        if spec.letter is None:
            return "an insertion needs a letter"
        if spec.letter.kind is not w.kind:
            return f"cannot insert a {spec.letter.kind.value} letter"
        if any(x not in w.support for x in spec.letter.indices):
            return "inserted letter lies outside the support"
        return None
    if not 0 <= spec.position <= len(w) - relation.span:
        return f"position {spec.position} out of range"
    window = w.letters[spec.position : spec.position + relation.span]
    match relation:
        case Relation.INVOLUTION:
            return None if window[0].cancels(window[1]) else "letters do not cancel"
        case Relation.FAR_COMMUTE:
            return _far_commute_failure(w.kind, *window)
        case Relation.TRIANGLE | Relation.TETRAHEDRON:
            return _simplex_failure(w.kind, window)


def apply_move(w: Word, spec: MoveSpec) -> Word:
    """Replace one side of a relation instance by the other."""
    reason = _failure(w, spec)
    if reason is not None:
        raise MoveNotApplicable(
            f"{spec.relation.value} at position {spec.position} is not applicable: {reason}"
        )
    letters = list(w.letters)
    p = spec.position
    if spec.relation is Relation.INVOLUTION:
        if spec.direction is MoveDirection.INSERT and spec.letter is not None:
            letters[p:p] = [spec.letter, spec.letter.inverse()]
        else:
            del letters[p : p + 2]
    else:
        span = spec.relation.span
        letters[p : p + span] = reversed(letters[p : p + span])
    return w.with_letters(letters)


def applicable_moves(w: Word) -> list[MoveSpec]:
    """Every move that applies somewhere in `w`, insertions excluded."""
    moves: list[MoveSpec] = []
    for relation in sorted(RELATIONS_BY_KIND[w.kind], key=lambda r: r.span):
        for position in range(len(w) - relation.span + 1):
            spec = MoveSpec(relation, position)
            if _failure(w, spec) is None:
                moves.append(spec)
    return moves
