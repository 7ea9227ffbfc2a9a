"""Marked braids, Lorenz permutations and the two braid presentations of a Lorenz knot.

A braid word is a tuple of nonzero integers, ``i`` for the generator
sigma_i and ``-i`` for its inverse.  A :class:`MarkedBraid` pairs the word with
a strand count.  Permutations are tuples of 1-based images ``(pi(1), ..., pi(n))``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .errors import DegenerateWord, InvalidWord, NotCoprime, PeriodicWord
from .lyndon import is_lyndon, lyndon_order, trip


@dataclass(frozen=True)
class MarkedBraid:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(self.word))
        if self.strands < 1:
            raise InvalidWord("a braid needs at least one strand")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise InvalidWord(f"generator {g} invalid on {self.strands} strands")

    def __len__(self) -> int:
        return len(self.word)

    @property
    def is_positive(self) -> bool:
        return all(g > 0 for g in self.word)

    def word_text(self) -> str:
        return " ".join(str(g) for g in self.word)

    def __str__(self) -> str:
        return f"n={self.strands}: {self.word_text()}".rstrip()

    @classmethod
    def parse(cls, text: str) -> MarkedBraid:
        m = re.fullmatch(r"\s*n\s*=\s*([0-9]+)\s*:(.*)", text)
        if m is None:
            raise InvalidWord(f"cannot parse braid {text!r}")
        try:
            word = tuple(int(tok) for tok in m.group(2).split())
        except ValueError as exc:
            raise InvalidWord(f"cannot parse braid {text!r}") from exc
        return cls(int(m.group(1)), word)


def _require_knot_word(word: str) -> None:
    if len(word) < 2 or "L" not in word or "R" not in word:
        raise DegenerateWord(word)
    if not is_lyndon(word):
        raise PeriodicWord(f"{word} is not a Lyndon word")


def lorenz_permutation(word: str) -> tuple[int, ...]:
    """First-return permutation of the orbit: ``pi(r(i)) = r(i+1)``."""
    _require_knot_word(word)
    r = lyndon_order(word)
    n = len(word)
    pi = [0] * n
    for i in range(n):
        pi[r[i] - 1] = r[(i + 1) % n]
    return tuple(pi)


def word_from_permutation(pi: tuple[int, ...], p: int | None = None) -> str:
    """Recover the word of a Lorenz permutation by following the orbit of 1.

    ``p`` is the number of left strands; by default, the strands moved rightwards.
    """
    n = len(pi)
    if p is None:
        p = sum(1 for j in range(n) if pi[j] > j + 1)
    letters = []
    k = 1
    for step in range(n):
        if step and k == 1:
            raise InvalidWord("permutation is not a single cycle")
        letters.append("L" if k <= p else "R")
        k = pi[k - 1]
    return "".join(letters)


def inversions(pi: tuple[int, ...]) -> int:
    n = len(pi)
    return sum(1 for i in range(n) for j in range(i + 1, n) if pi[i] > pi[j])


def lorenz_braid(word: str) -> MarkedBraid:
    """Positive permutation braid of the Lorenz permutation.

    Right strands ``j = p+1, ..., n`` are emitted in order, each contributing
    ``sigma_{j-1} ... sigma_{pi(j)}``.
    """
    pi = lorenz_permutation(word)
    p = word.count("L")
    out: list[int] = []
    for j in range(p + 1, len(pi) + 1):
        out.extend(range(j - 1, pi[j - 1] - 1, -1))
    return MarkedBraid(len(pi), tuple(out))


def bw_counts(word: str) -> tuple[list[int], list[int]]:
    """The exponents ``n_i`` and ``m_i`` (index 0 holds i = 1) of the BW braid."""
    pi = lorenz_permutation(word)
    t = trip(word)
    ns = [0] * max(t - 1, 0)
    ms = [0] * max(t - 1, 0)
    for j in range(1, len(pi) + 1):
        image = pi[j - 1]
        image2 = pi[image - 1]
        if image > j and image < image2:
            i = image - j - 1
            if i >= 1:
                ns[i - 1] += 1
        elif image < j and image > image2:
            i = j - image - 1
            if i >= 1:
                ms[i - 1] += 1
    return ns, ms


def bw_braid(word: str) -> MarkedBraid:
    """Birman-Williams braid on ``trip(word)`` strands.

    ``Delta_t^2 * prod_i (s_1..s_i)^{n_i} * prod_{i=t-1..1} (s_{t-1}..s_i)^{m_{t-i}}``,
    where ``n_i`` counts strands j with ``pi(j) - j = i + 1`` and
    ``pi(j) < pi(pi(j))``, and ``m_i`` strands with ``j - pi(j) = i + 1`` and
    ``pi(j) > pi(pi(j))``.
    """
    t = trip(word)
    _require_knot_word(word)
    if t == 1:
        return MarkedBraid(1, ())
    ns, ms = bw_counts(word)
    out: list[int] = list(range(1, t)) * t
    for i in range(1, t):
        out.extend(list(range(1, i + 1)) * ns[i - 1])
    for i in range(t - 1, 0, -1):
        out.extend(list(range(t - 1, i - 1, -1)) * ms[t - i - 1])
    return MarkedBraid(t, tuple(out))


def braid_permutation(b: MarkedBraid) -> tuple[int, ...]:
    """Permutation sending each strand's start position to its end position."""
    position = list(range(b.strands))  # position[k] = strand currently at slot k
    for g in b.word:
        i = abs(g) - 1
        position[i], position[i + 1] = position[i + 1], position[i]
    pi = [0] * b.strands
    for slot, strand in enumerate(position):
        pi[strand] = slot + 1
    return tuple(pi)


def cycle_count(pi: tuple[int, ...]) -> int:
    seen = [False] * len(pi)
    count = 0
    for start in range(len(pi)):
        if not seen[start]:
            count += 1
            k = start
            while not seen[k]:
                seen[k] = True
                k = pi[k] - 1
    return count


def closure_components(b: MarkedBraid) -> int:
    return cycle_count(braid_permutation(b))


def genus(word: str) -> int:
    """Seifert genus ``(c - n + 1) / 2``, c the number of crossings of the Lorenz braid."""
    pi = lorenz_permutation(word)
    return (inversions(pi) - len(pi) + 1) // 2


def braid_genus(b: MarkedBraid) -> int:
    """Genus of the closure of a positive braid whose closure is a knot."""
    return (len(b.word) - b.strands + 1) // 2


def markov_stabilize(b: MarkedBraid, side: str = "right") -> MarkedBraid:
    if side == "right":
        return MarkedBraid(b.strands + 1, b.word + (b.strands,))
    if side == "left":
        shifted = tuple(g + 1 if g > 0 else g - 1 for g in b.word)
        return MarkedBraid(b.strands + 1, shifted + (1,))
    raise ValueError(f"unknown side {side!r}")


def free_reduce(word: tuple[int, ...]) -> tuple[int, ...]:
    out: list[int] = []
    for g in word:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def conjugate(b: MarkedBraid, g: int) -> MarkedBraid:
    """``g^-1 b g``, freely reduced."""
    return MarkedBraid(b.strands, free_reduce((-g,) + b.word + (g,)))


def torus_lorenz_word(p: int, q: int) -> str:
    """Lyndon word of length ``p + q`` whose closure is the torus knot T(p, q).

    The Lorenz permutation is the shift ``i -> i + p`` modulo ``p + q``, so the
    word has ``q`` letters L and ``p`` letters R; ``(2, 3)`` gives ``LLRLR``.
    """
    if p < 2 or q < 2:
        raise ValueError("torus parameters must be at least 2")
    if gcd(p, q) != 1:
        raise NotCoprime(f"gcd({p}, {q}) != 1")
    n = p + q
    pi = tuple((i + p - 1) % n + 1 for i in range(1, n + 1))
    return word_from_permutation(pi)
