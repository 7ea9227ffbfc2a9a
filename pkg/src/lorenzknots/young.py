"""Young diagrams coding Lorenz braids.

Left strand ``j`` of a Lorenz braid crosses ``c_j = pi(j) - j`` right strands,
and ``c_1 <= ... <= c_p = q``.  Each left strand but the last with ``c_j >= 2``
gives a row of ``c_j - 1`` cells, so rows are indexed by left strands and the
cell count is ``2 * genus``.  Two boundary segments record what the rows cannot:

* ``extra_right`` counts left strands with ``c_j = 1`` (each one is a left
  stabilization),
* ``extra_up`` counts the right strands beyond ``rows[0] + 1`` (each one is a
  right stabilization).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .braid import genus, lorenz_permutation, word_from_permutation
from .errors import InvalidDiagram, InvalidWord, NotAKnot
from .lyndon import trip
from .skein import homfly


@dataclass(frozen=True)
class YoungDiagram:
    rows: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        rows = tuple(int(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(r <= 0 for r in rows) or any(a < b for a, b in zip(rows, rows[1:])):
            raise InvalidDiagram(f"rows {rows} are not a partition")

    @property
    def cells(self) -> int:
        return sum(self.rows)

    def durfee_side(self) -> int:
        return sum(1 for i, r in enumerate(self.rows) if r >= i + 1)

    def __str__(self) -> str:
        return "[" + ",".join(str(r) for r in self.rows) + "]"

    @classmethod
    def parse(cls, text: str) -> YoungDiagram:
        m = re.fullmatch(r"\s*\[\s*([0-9,\s]*)\]\s*", text)
        if m is None:
            raise InvalidDiagram(f"cannot parse partition {text!r}")
        body = m.group(1).strip()
        rows = tuple(int(tok) for tok in body.split(",")) if body else ()
        return cls(rows)


@dataclass(frozen=True)
class CompletedDiagram:
    diagram: YoungDiagram
    extra_right: int = 0
    extra_up: int = 0

    @property
    def is_standard(self) -> bool:
        return self.extra_right == 0 and self.extra_up == 0

    def __str__(self) -> str:
        return f"{self.diagram} +right {self.extra_right} +up {self.extra_up}"


def word_to_completed(word: str) -> CompletedDiagram:
    pi = lorenz_permutation(word)
    p = word.count("L")
    q = len(word) - p
    crossings = [pi[j] - (j + 1) for j in range(p)]
    rows = sorted((c - 1 for c in crossings[:-1] if c >= 2), reverse=True)
    extra_right = sum(1 for c in crossings[:-1] if c == 1)
    width = rows[0] + 1 if rows else 1
    return CompletedDiagram(YoungDiagram(tuple(rows)), extra_right, q - width)


def completed_permutation(d: CompletedDiagram) -> tuple[int, ...]:
    rows = d.diagram.rows
    q = (rows[0] + 1 if rows else 1) + d.extra_up
    crossings = [1] * d.extra_right + [r + 1 for r in reversed(rows)] + [q]
    p = len(crossings)
    n = p + q
    left = [j + 1 + c for j, c in enumerate(crossings)]
    rest = sorted(set(range(1, n + 1)) - set(left))
    return tuple(left + rest)


def completed_to_word(d: CompletedDiagram) -> str:
    """Lyndon word of a completed diagram; raises :class:`NotAKnot` for links."""
    if d.extra_right < 0 or d.extra_up < 0:
        raise InvalidDiagram("negative extra segment")
    pi = completed_permutation(d)
    p = d.extra_right + len(d.diagram.rows) + 1
    try:
        return word_from_permutation(pi, p)
    except InvalidWord as exc:
        raise NotAKnot(f"{d} closes to a link") from exc


def diagram_word(d: YoungDiagram) -> str:
    return completed_to_word(CompletedDiagram(d))


def closure_is_knot(d: CompletedDiagram) -> bool:
    try:
        completed_to_word(d)
    except NotAKnot:
        return False
    return True


def transpose(d: YoungDiagram) -> YoungDiagram:
    rows = d.rows
    if not rows:
        return YoungDiagram()
    return YoungDiagram(tuple(sum(1 for r in rows if r > i) for i in range(rows[0])))


def diagram_genus(d: YoungDiagram) -> Fraction:
    return Fraction(d.cells, 2)


def diagram_trip(d: YoungDiagram) -> int:
    return 1 + d.durfee_side()


def partitions(total: int, largest: int | None = None):
    """Partitions of ``total`` as non-increasing tuples, largest part first."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def knot_diagrams(cells: int) -> list[YoungDiagram]:
    """Standard diagrams with ``cells`` cells whose closure is a knot."""
    out = []
    for rows in partitions(cells):
        d = YoungDiagram(rows)
        if closure_is_knot(CompletedDiagram(d)):
            out.append(d)
    return out


def invariant_signature(word: str) -> tuple:
    """``(trip, genus, HOMFLY text)`` of the knot coded by ``word``."""
    return trip(word), genus(word), str(homfly(word))


def diagrams_for_knot(word: str) -> list[YoungDiagram]:
    """Standard knot diagrams whose signature matches that of ``word``."""
    target = invariant_signature(word)
    return [d for d in knot_diagrams(2 * genus(word)) if invariant_signature(diagram_word(d)) == target]
