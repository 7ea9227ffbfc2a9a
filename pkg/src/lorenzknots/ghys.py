"""From conjugacy classes of SL2(Z) to Lorenz knots.

An X/Y word names both a hyperbolic conjugacy class and, reading X as L and Y
as R, a Lorenz knot.  This module attaches knot signatures to classes, tables
them against the class group, and checks the two statements about trivial
knots and inverse classes.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import lru_cache
from math import gcd

from .braid import genus, torus_lorenz_word
from .lyndon import canonical_rotation, trip
from .poly import LaurentPoly
from .quad import (
    ClassGroup,
    IdealBasis,
    QuadOrder,
    class_group,
    class_word,
    ideal_mul,
    is_invertible_class,
)
from .skein import braid_index, homfly
from .sl2 import enumerate_classes_by_trace, format_xy, slpm_class, swap_xy


@dataclass(frozen=True)
class KnotSignature:
    trip: int
    genus: int
    braid_index: int
    homfly: LaurentPoly
    name: str

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "trip": self.trip,
            "genus": self.genus,
            "braid_index": self.braid_index,
            "homfly": str(self.homfly),
        }


def xy_to_lr(word: str) -> str:
    return word.translate(str.maketrans("XY", "LR"))


def lr_to_xy(word: str) -> str:
    return word.translate(str.maketrans("LR", "XY"))


@lru_cache(maxsize=None)
def _torus_homfly(p: int, q: int) -> LaurentPoly:
    return homfly(torus_lorenz_word(p, q))


def _name(t: int, g: int, poly: LaurentPoly) -> str:
    if t == 1:
        return "unknot"
    for p in range(2, t + 1):
        q_max = 2 * g // (p - 1) + 1
        for q in range(p, q_max + 1):
            if gcd(p, q) == 1 and (p - 1) * (q - 1) == 2 * g and _torus_homfly(p, q) == poly:
                return f"torus({p},{q})"
    digest = hashlib.sha256(f"{t}|{g}|{poly}".encode()).hexdigest()[:10]
    return f"unnamed({digest})"


@lru_cache(maxsize=None)
def knot_signature(word: str) -> KnotSignature:
    """Signature of the Lorenz knot of an L/R word (any rotation)."""
    word = canonical_rotation(word)
    t, g, poly = trip(word), genus(word), homfly(word)
    return KnotSignature(t, g, braid_index(word), poly, _name(t, g, poly))


def knot_of_class(word: str) -> KnotSignature:
    """Signature of the knot attached to an X/Y class word."""
    return knot_signature(xy_to_lr(word))


def mirror_check(word: str) -> bool:
    """Whether the knots of ``word`` and of its reverse have equal signatures.

    Accepts L/R or X/Y words.
    """
    if set(word) <= {"X", "Y"}:
        word = xy_to_lr(word)
    return knot_signature(word) == knot_signature(word[::-1])


@dataclass(frozen=True)
class ClassRow:
    word: str
    trace: int
    invertible: bool
    group_coords: tuple[int, ...] | None
    knot: KnotSignature

    def as_dict(self) -> dict:
        return {
            "word": format_xy(self.word),
            "trace": self.trace,
            "invertible": self.invertible,
            "group_coords": list(self.group_coords) if self.group_coords is not None else None,
            "knot": self.knot.as_dict(),
        }


def class_knot_table(t: int, group: ClassGroup | None = None) -> list[ClassRow]:
    group = group or class_group(t)
    rows = []
    for w in enumerate_classes_by_trace(t):
        invertible = w in group.coordinates
        rows.append(ClassRow(w, t, invertible, group.coordinates.get(w), knot_of_class(w)))
    return rows


def _omega(n: int) -> int:
    count, p = 0, 2
    while p * p <= n:
        if n % p == 0:
            count += 1
            while n % p == 0:
                n //= p
        p += 1
    return count + (n > 1)


@dataclass(frozen=True)
class TrivialSubgroup:
    """The classes ``X^m Y^m'`` with ``m m' = t - 2`` and ``gcd(m, m') = 1``."""

    t: int
    members: tuple[str, ...]
    expected_order: int
    divisors: tuple[int, ...]
    order_matches: bool
    product_formula_holds: bool
    closed: bool
    elementary_two: bool
    matches_unknots: bool

    @property
    def verified(self) -> bool:
        return (
            self.order_matches
            and self.product_formula_holds
            and self.closed
            and self.elementary_two
            and self.matches_unknots
        )


def _torus_class(t: int, m: int) -> str:
    return slpm_class("X" * ((t - 2) // m) + "Y" * m)


def unitary_divisors(n: int) -> list[int]:
    return [m for m in range(1, n + 1) if n % m == 0 and gcd(m, n // m) == 1]


def trivial_subgroup(t: int, group: ClassGroup | None = None) -> TrivialSubgroup:
    """Check that the unknot classes form a subgroup of order ``2^d``, d = max(omega(t-2) - 1, 0)."""
    n = t - 2
    order = QuadOrder(t)
    divisors = unitary_divisors(n)
    ideals = {m: IdealBasis(order, ((m, 0), (-1, 1))) for m in divisors}
    members = sorted({_torus_class(t, m) for m in divisors}, key=lambda w: (-w.count("X"), w))
    d = max(_omega(n) - 1, 0)

    formula = True
    for m1 in divisors:
        for m2 in divisors:
            m3 = (m1 * m2 // gcd(m1, m2)) // gcd(m1, m2)
            product = class_word(ideal_mul(ideals[m1], ideals[m2]))
            if product != class_word(ideals[m3]) or product != _torus_class(t, m3):
                formula = False

    group = group or class_group(t)
    member_set = set(members)
    all_invertible = all(is_invertible_class(ideals[m]) for m in divisors)
    closed = all_invertible and all(group.mul(x, y) in member_set for x in members for y in members)
    elementary = all_invertible and all(group.mul(x, x) == group.identity for x in members)
    unknots = {w for w in group.elements if knot_of_class(w).name == "unknot"}
    return TrivialSubgroup(
        t=t,
        members=tuple(members),
        expected_order=2**d,
        divisors=tuple(divisors),
        order_matches=len(members) == 2**d,
        product_formula_holds=formula,
        closed=closed,
        elementary_two=elementary,
        matches_unknots=unknots == member_set,
    )


def inverse_pairs_agree(group: ClassGroup) -> bool:
    """Every invertible class and its inverse carry the same knot signature."""
    return all(knot_of_class(w) == knot_of_class(group.inverse(w)) for w in group.elements)


def swap_symmetric(word: str) -> bool:
    return knot_of_class(word) == knot_of_class(swap_xy(word))


def format_row(row: ClassRow) -> str:
    coords = "-" if row.group_coords is None else "(" + ",".join(map(str, row.group_coords)) + ")"
    return f"{format_xy(row.word):<16} {row.trace:>4} {'yes' if row.invertible else 'no':<3} {coords:<8} {row.knot.name}"

