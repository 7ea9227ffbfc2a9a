"""Skein invariants of positive braid closures via positive computation trees.

A positive braid either reduces, through conjugation and destabilization, to
the trivial braid on some number of strands, or to a conjugate of a braid
``b'' sigma_i^2``.  Splitting that square crossing gives two children,
``b'' sigma_i`` (weight ``w_zero``) and ``b''`` (weight ``w_minus``), both
strictly shorter.  Leaves on ``k`` strands are worth ``delta^(k-1)``.

The same tree evaluates HOMFLY, the positive J(R, C, T) form, Jones and
Conway, depending only on the three weights.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braid import MarkedBraid, bw_braid
from .errors import BoundMismatch, NonPositiveInput
from .lyndon import trip
from .poly import LaurentPoly


@dataclass(frozen=True)
class SkeinWeights:
    w_zero: LaurentPoly
    w_minus: LaurentPoly
    delta: LaurentPoly
    variables: tuple[str, ...]


def _v(name: str, names: tuple[str, ...]) -> LaurentPoly:
    return LaurentPoly.var(name, names)


def _c(k: int, names: tuple[str, ...]) -> LaurentPoly:
    return LaurentPoly.constant(k, names)


_XY = ("x", "y")
_x, _y = _v("x", _XY), _v("y", _XY)
HOMFLY = SkeinWeights(
    w_zero=-(_x**-1) * _y,
    w_minus=-(_x**-2),
    delta=-(_x + _x**-1) * _y**-1,
    variables=_XY,
)

_RCT = ("R", "C", "T")
J_WEIGHTS = SkeinWeights(_v("C", _RCT), _v("R", _RCT), _v("T", _RCT), _RCT)

_Q = ("q",)
_q = _v("q", _Q)
JONES = SkeinWeights(_q**3 - _q, _q**4, -(_q + _q**-1), _Q)

_Z = ("z",)
CONWAY = SkeinWeights(_v("z", _Z), _c(1, _Z), _c(0, _Z), _Z)

# deg C = 1, deg R = 2, deg T = -1 makes J homogeneous of degree len(b) - n + 1
J_GRADING = {"C": 1, "R": 2, "T": -1}

_cache: dict[SkeinWeights, dict[tuple, LaurentPoly]] = {}


def clear_cache() -> None:
    _cache.clear()


@dataclass(frozen=True)
class Reduced:
    """Outcome of :func:`positive_reduce`.

    ``square`` is ``None`` when ``braid`` is trivial; otherwise ``braid`` is
    ``b''`` and the reduced braid is ``b'' sigma_square^2``.
    """

    braid: MarkedBraid
    square: int | None


def _check_positive(b: MarkedBraid) -> None:
    if not b.is_positive:
        raise NonPositiveInput(str(b))


def _rotate_to_end(word: list[int], k: int, width: int) -> list[int]:
    """Rotate so that the ``width`` letters starting at ``k`` (cyclically) come last."""
    start = (k + width) % len(word)
    return word[start:] + word[:start]


def _destabilize(word: list[int], n: int) -> tuple[list[int], int] | None:
    """Remove a generator that occurs once as the largest or the smallest index."""
    if not word:
        return None
    top, bottom = max(word), min(word)
    if word.count(top) == 1:
        k = word.index(top)
        rest = _rotate_to_end(word, k, 1)[:-1]
        return rest, n - 1
    if word.count(bottom) == 1:
        k = word.index(bottom)
        rest = _rotate_to_end(word, k, 1)[:-1]
        return [g - 1 if g > bottom else g for g in rest], n - 1
    return None


def _adjacent_square(word: list[int]) -> tuple[list[int], int] | None:
    n = len(word)
    if n < 2:
        return None
    for k in range(n):
        if word[k] == word[(k + 1) % n]:
            return _rotate_to_end(word, k, 2)[:-2], word[k]
    return None


def _rewrite_step(word: list[int]) -> tuple[list[int], int | None]:
    """One step of the weight-decreasing rewriting.

    Returns ``(b'', i)`` when a square was exposed, or ``(new_word, None)``
    after a braid-relation rewrite that lowers the total weight.
    Requires the top generator to occur at least twice.
    """
    top = max(word)
    start = word.index(top)
    w = word[start:] + word[:start]
    a = 0
    b = w.index(top, 1)
    k = top
    while True:
        inner = [p for p in range(a + 1, b) if w[p] == k - 1]
        if not inner:
            segment = w[a + 1:b]
            w = w[:a] + segment + [k, k] + w[b + 1:]
            pos = a + len(segment)
            return _rotate_to_end(w, pos, 2)[:-2], k
        if len(inner) == 1:
            c = inner[0]
            w = w[:a] + w[a + 1:c] + [k - 1, k, k - 1] + w[c + 1:b] + w[b + 1:]
            return w, None
        a, b = inner[0], inner[1]
        k -= 1


def positive_reduce(b: MarkedBraid) -> Reduced:
    """Reduce a positive braid to a trivial braid or to a conjugate of ``b'' sigma_i^2``."""
    _check_positive(b)
    word, n = list(b.word), b.strands
    while True:
        if not word:
            return Reduced(MarkedBraid(n, ()), None)
        smaller = _destabilize(word, n)
        if smaller is not None:
            word, n = smaller
            continue
        found = _adjacent_square(word)
        if found is not None:
            return Reduced(MarkedBraid(n, tuple(found[0])), found[1])
        word, square = _rewrite_step(word)
        if square is not None:
            return Reduced(MarkedBraid(n, tuple(word)), square)


def _blocks(word: tuple[int, ...], n: int) -> tuple[list[tuple[int, ...]], int]:
    """Split a word into commuting blocks on disjoint strand intervals.

    Each block is shifted to start at generator 1.  Also returns the number of
    strands touched by no generator.
    """
    used = sorted(set(word))
    intervals: list[list[int]] = []
    for g in used:
        if intervals and g == intervals[-1][1] + 1:
            intervals[-1][1] = g
        else:
            intervals.append([g, g])
    blocks = []
    touched = 0
    for lo, hi in intervals:
        blocks.append(tuple(g - lo + 1 for g in word if lo <= g <= hi))
        touched += hi - lo + 2
    return blocks, n - touched


def _key(word: tuple[int, ...]) -> tuple[int, ...]:
    top = max(word) + 1
    flipped = tuple(top - g for g in word)
    return min(min(w[i:] + w[:i] for i in range(len(w))) for w in (word, flipped))


def _eval(word: tuple[int, ...], n: int, weights: SkeinWeights, memo: dict) -> LaurentPoly:
    blocks, free = _blocks(word, n)
    value = weights.delta ** (len(blocks) + free - 1)
    for block in blocks:
        value = value * _eval_block(block, weights, memo)
    return value


def _eval_block(word: tuple[int, ...], weights: SkeinWeights, memo: dict) -> LaurentPoly:
    key = _key(word) if memo is not None else None
    if memo is not None and key in memo:
        return memo[key]
    n = max(word) + 1
    w = list(word)
    while True:
        smaller = _destabilize(w, n)
        if smaller is not None:
            value = _eval(tuple(smaller[0]), smaller[1], weights, memo)
            break
        found = _adjacent_square(w)
        if found is None:
            rest, square = _rewrite_step(w)
            if square is None:
                w = rest
                continue
            found = rest, square
        rest, i = found
        zero = _eval(tuple(rest) + (i,), n, weights, memo)
        minus = _eval(tuple(rest), n, weights, memo)
        value = weights.w_zero * zero + weights.w_minus * minus
        break
    value = value.extend(weights.variables)
    if memo is not None:
        memo[key] = value
    return value


def evaluate(b: MarkedBraid, weights: SkeinWeights, use_cache: bool = True) -> LaurentPoly:
    """Value of the closure of ``b`` under the skein recursion with ``weights``."""
    _check_positive(b)
    memo = _cache.setdefault(weights, {}) if use_cache else None
    return _eval(b.word, b.strands, weights, memo).extend(weights.variables)


def j_poly(b: MarkedBraid) -> LaurentPoly:
    return evaluate(b, J_WEIGHTS)


def homfly_of_braid(b: MarkedBraid) -> LaurentPoly:
    return evaluate(b, HOMFLY)


def j_to_homfly(j: LaurentPoly) -> LaurentPoly:
    """Substitute R = -x^-2, C = -x^-1 y, T = -(x + x^-1)/y."""
    return j.substitute({"R": HOMFLY.w_minus, "C": HOMFLY.w_zero, "T": HOMFLY.delta}).extend(_XY)


def mfw_bound(b: MarkedBraid) -> int:
    """``deg_T J + 1``, a lower bound for the braid index of the closure."""
    return j_poly(b).degree("T") + 1


def homfly(word: str) -> LaurentPoly:
    return evaluate(bw_braid(word), HOMFLY)


def jones(word: str) -> LaurentPoly:
    """Jones polynomial in ``q = t^(1/2)``."""
    return evaluate(bw_braid(word), JONES)


def conway(word: str) -> LaurentPoly:
    return evaluate(bw_braid(word), CONWAY)


def conway_to_alexander(nabla: LaurentPoly) -> LaurentPoly:
    """Substitute ``z^2 = t - 2 + t^-1`` and normalize the leading coefficient to be positive."""
    t = LaurentPoly.var("t")
    u = t - 2 + t**-1
    out = LaurentPoly.constant(0, ("t",))
    for (e,), c in nabla.extend(_Z).terms.items():
        if e % 2:
            raise ValueError("Conway polynomial of a link with an even number of components")
        out = out + c * u ** (e // 2)
    out = out.extend(("t",))
    if out and out.terms[max(out.terms)] < 0:
        out = -out
    return out


def alexander(word: str) -> LaurentPoly:
    return conway_to_alexander(conway(word))


def braid_index(word: str) -> int:
    """Braid index of the Lorenz knot, equal to its trip; checked against the MFW bound."""
    t = trip(word)
    bound = mfw_bound(bw_braid(word))
    if bound != t:
        raise BoundMismatch(f"{word}: trip {t}, MFW bound {bound}")
    return t
