"""Words over {L, R} coding periodic Lorenz orbits.

A word is a plain ``str`` over the letters ``L`` and ``R``.  Lyndon words are
the aperiodic words that are strictly smaller than every nontrivial rotation
(with ``L < R``); each periodic orbit has exactly one.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DegenerateWord, InvalidWord, PeriodicWord

_RUN = re.compile(r"([LR])(?:\^([0-9]+))?")


def parse_word(text: str, alphabet: str = "LR") -> str:
    """Parse ``text`` into a word, expanding run-length sugar such as ``L^3R^2``."""
    text = text.strip()
    pattern = _RUN if alphabet == "LR" else re.compile(rf"([{alphabet}])(?:\^([0-9]+))?")
    out = []
    pos = 0
    while pos < len(text):
        m = pattern.match(text, pos)
        if m is None:
            raise InvalidWord(f"cannot parse {text!r} at offset {pos}")
        k = int(m.group(2)) if m.group(2) is not None else 1
        if k == 0:
            raise InvalidWord(f"zero exponent in {text!r}")
        out.append(m.group(1) * k)
        pos = m.end()
    if not out:
        raise InvalidWord("empty word")
    return "".join(out)


def format_runs(word: str) -> str:
    """Run-length text of a word: ``LLLRR`` becomes ``L^3R^2``."""
    parts = []
    for m in re.finditer(r"(.)\1*", word):
        run = m.group(0)
        parts.append(run[0] if len(run) == 1 else f"{run[0]}^{len(run)}")
    return "".join(parts)


def rotations(word: str) -> list[str]:
    doubled = word + word
    n = len(word)
    return [doubled[i:i + n] for i in range(n)]


def is_periodic(word: str) -> bool:
    """True when ``word`` equals u^k for some k >= 2."""
    return word in (word + word)[1:-1]


def is_lyndon(word: str) -> bool:
    n = len(word)
    if n == 0:
        return False
    doubled = word + word
    return all(word < doubled[i:i + n] for i in range(1, n))


def canonical_rotation(word: str) -> str:
    """The unique Lyndon rotation of an aperiodic word."""
    if is_periodic(word):
        raise PeriodicWord(word)
    return min(rotations(word))


def swap_letters(word: str, pair: str = "LR") -> str:
    a, b = pair
    return word.translate(str.maketrans(a + b, b + a))


def lyndon_order(word: str) -> tuple[int, ...]:
    """Rank of each position (1-based ranks) in the order of its rotations.

    ``r[i]`` is the rank of the rotation starting at position ``i + 1``.
    """
    rots = rotations(word)
    order = sorted(range(len(word)), key=rots.__getitem__)
    ranks = [0] * len(word)
    for rank, i in enumerate(order, start=1):
        ranks[i] = rank
    return tuple(ranks)


def trip(word: str) -> int:
    """Number of cyclic occurrences of the factor ``LR``."""
    n = len(word)
    return sum(1 for i in range(n) if word[i] == "L" and word[(i + 1) % n] == "R")


def _binary_value(word: str) -> int:
    return int(word.replace("L", "0").replace("R", "1"), 2)


def orbit_abscissas(word: str) -> tuple[Fraction, ...]:
    """Abscissas ``2^i p / (2^n - 1) mod 1`` of the orbit, one per position."""
    n = len(word)
    period = 2**n - 1
    p = _binary_value(word)
    return tuple(Fraction((p << i) % period, period) for i in range(n))


def _multiplicative_order(base: int, modulus: int) -> int:
    if modulus == 1:
        return 1
    k, acc = 1, base % modulus
    while acc != 1:
        acc = acc * base % modulus
        k += 1
    return k


def code_of_abscissa(x: Fraction) -> str:
    """Periodic block of the L/R code of the orbit through abscissa ``x``.

    ``x`` must lie in [0, 1) and have an odd denominator, so that it is
    periodic under doubling.  The period is the multiplicative order of 2
    modulo the denominator.
    """
    x = Fraction(x)
    if not 0 <= x < 1:
        raise InvalidWord(f"abscissa {x} outside [0, 1)")
    q = x.denominator
    if q % 2 == 0:
        raise InvalidWord(f"abscissa {x} is not periodic under doubling")
    n = _multiplicative_order(2, q)
    p = x.numerator * ((2**n - 1) // q)
    return format(p, f"0{n}b").replace("0", "L").replace("1", "R")


def _require_knot_word(word: str) -> None:
    if len(word) < 2 or "L" not in word or "R" not in word:
        raise DegenerateWord(word)


def stabilize_left(word: str) -> str:
    return "L" + word


def _max_position(word: str) -> int:
    ranks = lyndon_order(word)
    return ranks.index(len(word))


def stabilize_right(word: str) -> str:
    """Insert ``R`` after the position that is largest in the Lyndon order."""
    i = _max_position(word)
    return word[:i + 1] + "R" + word[i + 1:]


def destabilize_left(word: str) -> str | None:
    """Inverse of :func:`stabilize_left` when it applies, else ``None``."""
    if len(word) < 3 or word[0] != "L":
        return None
    rest = word[1:]
    if "L" not in rest or not is_lyndon(rest):
        return None
    return rest


def destabilize_right(word: str) -> str | None:
    """Inverse of :func:`stabilize_right` when it applies, else ``None``."""
    if len(word) < 3:
        return None
    i = _max_position(word)
    rest = word[:i] + word[i + 1:]
    if "R" not in rest or not is_lyndon(rest):
        return None
    return rest if stabilize_right(rest) == word else None


def is_minimal(word: str) -> bool:
    return destabilize_left(word) is None and destabilize_right(word) is None


def minimal_form(word: str) -> str:
    while True:
        shorter = destabilize_left(word) or destabilize_right(word)
        if shorter is None:
            return word
        word = shorter


def enumerate_lyndon(n: int) -> list[str]:
    """All Lyndon words of length exactly ``n`` in lexicographic order.

    Uses the Fredricksen-Kessler-Maiorana successor rule, which visits Lyndon
    words of length at most ``n`` in lexicographic order.
    """
    if n < 1:
        raise ValueError("length must be positive")
    out = []
    w = [0]
    while w:
        if len(w) == n:
            out.append("".join("LR"[c] for c in w))
        m = len(w)
        while len(w) < n:
            w.append(w[len(w) - m])
        while w and w[-1] == 1:
            w.pop()
        if w:
            w[-1] = 1
    return out
