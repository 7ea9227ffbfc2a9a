"""Independent reference computations used to cross-check the library.

Nothing here imports the code under test except for plain data types, so an
agreement between an oracle and the library is real evidence.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import product

import sympy


def min_rotation(word: str) -> str:
    return min(word[i:] + word[:i] for i in range(len(word)))


def is_primitive(word: str) -> bool:
    n = len(word)
    return all(word != word[k:] + word[:k] for k in range(1, n))


def mobius(n: int) -> int:
    result, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    return -result if n > 1 else result


def lyndon_count(n: int) -> int:
    """Binary Lyndon words of length n (necklace formula)."""
    return sum(mobius(d) * 2 ** (n // d) for d in range(1, n + 1) if n % d == 0) // n


def brute_lyndon(n: int) -> list[str]:
    words = ("".join(p) for p in product("LR", repeat=n))
    return sorted(w for w in words if is_primitive(w) and w == min_rotation(w))


def doubling_code(x: Fraction, length: int) -> str:
    """First ``length`` letters of the orbit of ``x`` under x -> 2x mod 1."""
    out = []
    for _ in range(length):
        out.append("L" if x < Fraction(1, 2) else "R")
        x = (2 * x) % 1
    return "".join(out)


def brute_permutation(word: str) -> tuple[int, ...]:
    """Lorenz permutation from sorting the rotations directly."""
    n = len(word)
    rots = [word[i:] + word[:i] for i in range(n)]
    rank = {r: k + 1 for k, r in enumerate(sorted(rots))}
    pi = [0] * n
    for i in range(n):
        pi[rank[rots[i]] - 1] = rank[rots[(i + 1) % n]]
    return tuple(pi)


def cycle_string(pi: tuple[int, ...]) -> str:
    """Cycle notation starting from the image of 1, e.g. ``(35241)``."""
    out, k = [], pi[0]
    while True:
        out.append(k)
        k = pi[k - 1]
        if k == pi[0]:
            break
    return "(" + "".join(map(str, out)) + ")"


# Kauffman bracket state sum


def _loops(n: int, word: tuple[int, ...], state: int) -> int:
    parent = {}

    def find(a):
        while parent.setdefault(a, a) != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def join(a, b):
        parent[find(a)] = find(b)

    levels = len(word)
    for k, g in enumerate(word):
        i = g - 1
        for j in range(n):
            if j not in (i, i + 1):
                join((k, j), (k + 1, j))
        if state >> k & 1:
            join((k, i), (k, i + 1))
            join((k + 1, i), (k + 1, i + 1))
        else:
            join((k, i), (k + 1, i))
            join((k, i + 1), (k + 1, i + 1))
    for j in range(n):
        join((levels, j), (0, j))
        find((0, j))
    return len({find(a) for a in list(parent)})


def jones_state_sum(n: int, word: tuple[int, ...]) -> dict[int, int]:
    """Jones polynomial of a positive braid closure as {exponent of q: coeff}, q = t^(1/2).

    Bracket state sum with A = q^(-1/2), normalized by (-A^3)^(-writhe).
    """
    bracket: Counter[int] = Counter()  # exponents of A
    crossings = len(word)
    for state in range(2 ** crossings):
        b = bin(state).count("1")
        a = crossings - b
        loops = _loops(n, word, state)
        # d^(loops-1) with d = -A^2 - A^-2
        term = Counter({a - b: 1})
        for _ in range(loops - 1):
            nxt: Counter[int] = Counter()
            for e, c in term.items():
                nxt[e + 2] -= c
                nxt[e - 2] -= c
            term = nxt
        bracket.update(term)
    sign = -1 if crossings % 2 else 1
    out = {}
    for e, c in bracket.items():
        if c:
            total = e - 3 * crossings  # times A^(-3w)
            assert total % 2 == 0
            out[-total // 2] = sign * c
    return out


# Burau representation


def burau_alexander(n: int, word: tuple[int, ...]) -> list[int]:
    """Alexander polynomial coefficients (lowest degree first, positive leading term)."""
    t = sympy.Symbol("t")
    size = n - 1
    m = sympy.eye(size)
    for g in word:
        # reduced Burau: block [[1, t, 0], [0, -t, 0], [0, 1, 1]] centred on index g-1
        s = sympy.eye(size)
        c = g - 1
        s[c, c] = -t
        if c - 1 >= 0:
            s[c - 1, c] = t
        if c + 1 < size:
            s[c + 1, c] = 1
        m = m * s
    poly = sympy.cancel((sympy.eye(size) - m).det() * (1 - t) / (1 - t**n))
    coeffs = sympy.Poly(sympy.expand(poly), t).all_coeffs()[::-1]
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    if coeffs[-1] < 0:
        coeffs = [-c for c in coeffs]
    return coeffs


# SL2(Z)


def mat_mul(a, b):
    return (
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    )


def xy_matrix(word: str):
    m = (1, 0, 0, 1)
    for c in word:
        m = mat_mul(m, (1, 0, 1, 1) if c == "X" else (1, 1, 0, 1))
    return m


def brute_classes(t: int) -> set[str]:
    """Primitive X/Y classes of trace t up to rotation and letter swap, by exhaustion."""
    out = set()
    for n in range(2, t):
        for letters in product("XY", repeat=n):
            w = "".join(letters)
            if "X" not in w or "Y" not in w or not is_primitive(w):
                continue
            m = xy_matrix(w)
            if m[0] + m[3] == t:
                swapped = w.translate(str.maketrans("XY", "YX"))
                out.add(min(min_rotation(w), min_rotation(swapped)))
    return out
