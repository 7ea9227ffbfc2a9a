"""Integer 2x2 matrices, X/Y words and hyperbolic conjugacy classes in SL2(Z).

``X = [[1,0],[1,1]]`` and ``Y = [[1,1],[0,1]]`` generate the monoid of
nonnegative matrices of determinant 1.  Every hyperbolic class of positive
trace contains products of X and Y, unique up to cyclic rotation, so a class
is named by the Lyndon rotation of its word (with ``X < Y``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import isqrt

from .errors import InvalidWord, NegativeTrace, NotHyperbolic, NotPrimitive
from .lyndon import canonical_rotation, format_runs, is_periodic, parse_word, swap_letters


@dataclass(frozen=True)
class Mat2Z:
    a: int
    b: int
    c: int
    d: int

    def __matmul__(self, other: Mat2Z) -> Mat2Z:
        return Mat2Z(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __neg__(self) -> Mat2Z:
        return Mat2Z(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> Mat2Z:
        base = self if k >= 0 else self.inverse()
        result = IDENTITY
        for _ in range(abs(k)):
            result = result @ base
        return result

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def transpose(self) -> Mat2Z:
        return Mat2Z(self.a, self.c, self.b, self.d)

    def inverse(self) -> Mat2Z:
        """Inverse of a unimodular matrix (determinant +1 or -1)."""
        det = self.det
        if det not in (1, -1):
            raise ValueError(f"determinant {det} is not a unit")
        return Mat2Z(self.d * det, -self.b * det, -self.c * det, self.a * det)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __str__(self) -> str:
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    @classmethod
    def parse(cls, text: str) -> Mat2Z:
        nums = re.findall(r"-?[0-9]+", text)
        if len(nums) != 4 or not re.fullmatch(r"\s*\[\s*\[[-0-9,\s]*\]\s*,\s*\[[-0-9,\s]*\]\s*\]\s*", text):
            raise InvalidWord(f"cannot parse matrix {text!r}")
        return cls(*(int(n) for n in nums))


IDENTITY = Mat2Z(1, 0, 0, 1)
X = Mat2Z(1, 0, 1, 1)
Y = Mat2Z(1, 1, 0, 1)
_LETTERS = {"X": X, "Y": Y}


def parse_xy(text: str) -> str:
    """Parse an X/Y word such as ``X^8Y`` into its expanded form."""
    return parse_word(text, alphabet="XY")


def format_xy(word: str) -> str:
    return format_runs(word)


def word_to_matrix(word: str) -> Mat2Z:
    m = IDENTITY
    for letter in word:
        m = m @ _LETTERS[letter]
    return m


def swap_xy(word: str) -> str:
    return swap_letters(word, "XY")


def canonical_word(word: str) -> str:
    """Lyndon rotation of an X/Y word (``X < Y``)."""
    return canonical_rotation(word)


def slpm_class(word: str) -> str:
    """Representative up to rotation and the global swap X <-> Y."""
    return min(canonical_rotation(word), canonical_rotation(swap_xy(word)))


def monoid_factor(m: Mat2Z) -> str | None:
    """Factor a nonnegative determinant-1 matrix as a word in X and Y, or ``None``."""
    if m.det != 1 or min(m.a, m.b, m.c, m.d) < 0:
        return None
    letters = []
    while m != IDENTITY:
        if m.c >= m.a and m.d >= m.b:
            letters.append("X")
            m = Mat2Z(m.a, m.b, m.c - m.a, m.d - m.b)
        elif m.a >= m.c and m.b >= m.d:
            letters.append("Y")
            m = Mat2Z(m.a - m.c, m.b - m.d, m.c, m.d)
        else:
            return None
    return "".join(letters)


def _floor_quadratic(p: int, q: int, d: int, root: int) -> int:
    """``floor((p + sqrt(d)) / q)`` for non-square ``d`` with ``root = isqrt(d)``."""
    if q > 0:
        return (p + root) // q
    return (-p - root - 1) // (-q)


def _period_runs(m: Mat2Z) -> tuple[list[int], int]:
    """Continued fraction of the expanding eigenvector slope of ``m``.

    Returns the periodic partial quotients and the parity of the index where
    the period starts (even indices are Y runs, odd ones X runs).
    """
    t = m.trace
    disc = t * t - 4
    root = isqrt(disc)
    # slope v1/v2 of the eigenvector for (t + sqrt(disc))/2 is (p + sqrt(disc))/q
    p, q = m.a - m.d, 2 * m.c
    seen: dict[tuple[int, int], int] = {}
    quotients: list[int] = []
    while (p, q) not in seen:
        seen[(p, q)] = len(quotients)
        a = _floor_quadratic(p, q, disc, root)
        quotients.append(a)
        p = a * q - p
        q = (disc - p * p) // q
    start = seen[(p, q)]
    return quotients[start:], start % 2


def canonical_class(m: Mat2Z) -> str:
    """Canonical X/Y word of the SL2(Z) conjugacy class of ``m``.

    Reads the period of the continued fraction of the expanding eigenvector's
    slope as alternating Y and X runs.
    """
    if m.det != 1:
        raise ValueError(f"determinant {m.det} != 1")
    t = m.trace
    if abs(t) <= 2:
        raise NotHyperbolic(str(m))
    if t < 0:
        raise NegativeTrace(str(m))
    period, parity = _period_runs(m)
    if len(period) % 2:
        period = period + period
    letters = "YX" if parity == 0 else "XY"
    word = "".join(letters[k % 2] * a for k, a in enumerate(period))
    word = canonical_rotation(word)
    base = word_to_matrix(word)
    if base.trace != t:
        power, k = base, 1
        while power.trace < t:
            power, k = power @ base, k + 1
        raise NotPrimitive(f"{m} is conjugate to ({format_xy(word)})^{k}")
    return word


def _words_up_to_trace(t: int):
    """Depth-first walk over the X/Y words of length below ``t`` with trace at most ``t``.

    Appending a letter never decreases the trace, so branches are pruned as
    soon as the trace exceeds ``t``.  Words using both letters have trace at
    least their length plus one, so the length bound loses nothing.
    """
    stack = [("", IDENTITY)]
    while stack:
        word, m = stack.pop()
        yield word, m
        if len(word) == t - 1:
            continue
        for letter, g in (("Y", Y), ("X", X)):
            nxt = m @ g
            if nxt.trace <= t:
                stack.append((word + letter, nxt))


def _run_count(word: str) -> int:
    return sum(1 for i in range(len(word)) if word[i] != word[i - 1]) or 1


def class_sort_key(word: str) -> tuple[int, str]:
    """Order by number of runs, then lexicographically."""
    return _run_count(word), word


def enumerate_classes_by_trace(t: int) -> list[str]:
    """Primitive hyperbolic classes of trace ``t`` up to SL2(Z) and the X/Y swap."""
    if t <= 2:
        raise NotHyperbolic(f"trace {t}")
    out = []
    for word, m in _words_up_to_trace(t):
        if m.trace != t or "X" not in word or "Y" not in word:
            continue
        if is_periodic(word) or word != slpm_class(word):
            continue
        out.append(word)
    return sorted(out, key=class_sort_key)
