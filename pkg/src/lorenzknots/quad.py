"""Ideals of the quadratic order Z[alpha], alpha^2 = t*alpha - 1, and their classes.

An element ``u + v*alpha`` is the pair ``(u, v)``.  An ideal is a rank-2
lattice of such pairs stable under multiplication by alpha.  Ideal classes
correspond to conjugacy classes of trace-``t`` matrices up to SL2(Z) and the
X/Y swap: an ideal with basis ``(b1, b2)`` gives the integer matrix ``B`` with
``B (b1, b2)^T = alpha (b1, b2)^T``, and a matrix gives the ideal spanned by
the coordinates of an alpha-eigenvector.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from .errors import InvalidWord, NotAnIdeal, NotAnnihilated, NotHyperbolic, NotPrimitive
from .sl2 import Mat2Z, canonical_class, enumerate_classes_by_trace, slpm_class, word_to_matrix

Elem = tuple[int, int]


@dataclass(frozen=True)
class QuadOrder:
    t: int

    def __post_init__(self) -> None:
        d = self.discriminant
        if self.t <= 2 or isqrt(d) ** 2 == d:
            raise NotHyperbolic(f"x^2 - {self.t}x + 1 is reducible")

    @property
    def discriminant(self) -> int:
        return self.t * self.t - 4

    def mul(self, x: Elem, y: Elem) -> Elem:
        (u1, v1), (u2, v2) = x, y
        return u1 * u2 - v1 * v2, u1 * v2 + u2 * v1 + self.t * v1 * v2

    def norm(self, x: Elem) -> int:
        u, v = x
        return u * u + self.t * u * v + v * v

    def conj(self, x: Elem) -> Elem:
        # conjugate of alpha is t - alpha
        u, v = x
        return u + self.t * v, -v

    def companion(self) -> Mat2Z:
        return Mat2Z(0, 1, -1, self.t)


def hermite_basis(vectors: list[Elem]) -> tuple[Elem, Elem]:
    """Triangular basis ``((a, 0), (b, c))`` with ``a, c > 0`` and ``0 <= b < a``."""
    vecs = [tuple(v) for v in vectors if tuple(v) != (0, 0)]
    # gcd of the second coordinates, tracked with the combination achieving it
    pivot = (0, 0)
    rest: list[Elem] = []
    for v in vecs:
        if v[1] == 0:
            rest.append(v)
            continue
        if pivot[1] == 0:
            pivot = v
            continue
        g, s, r = _ext_gcd(pivot[1], v[1])
        new = (s * pivot[0] + r * v[0], g)
        k1, k2 = pivot[1] // g, v[1] // g
        rest.append((k2 * pivot[0] - k1 * v[0], 0))
        pivot = new
    if pivot[1] == 0:
        raise NotAnIdeal("lattice has rank below 2")
    if pivot[1] < 0:
        pivot = (-pivot[0], -pivot[1])
    a = 0
    for u, _ in rest:
        a = gcd(a, u)
    if a == 0:
        raise NotAnIdeal("lattice has rank below 2")
    return (a, 0), (pivot[0] % a, pivot[1])


def _ext_gcd(x: int, y: int) -> tuple[int, int, int]:
    """``(g, s, r)`` with ``s*x + r*y = g = gcd(x, y) > 0``."""
    s0, s1, r0, r1 = 1, 0, 0, 1
    while y:
        k = x // y
        x, y = y, x - k * y
        s0, s1 = s1, s0 - k * s1
        r0, r1 = r1, r0 - k * r1
    if x < 0:
        x, s0, r0 = -x, -s0, -r0
    return x, s0, r0


@dataclass(frozen=True, eq=False)
class IdealBasis:
    """An ideal of ``order`` with a chosen Z-basis.

    The generators are kept as given (they fix the ideal matrix); equality and
    hashing use the Hermite basis of the lattice.
    """

    order: QuadOrder
    basis: tuple[Elem, Elem]

    def __post_init__(self) -> None:
        g1, g2 = (tuple(int(c) for c in g) for g in self.basis)
        object.__setattr__(self, "basis", (g1, g2))
        if g1[0] * g2[1] - g1[1] * g2[0] == 0:
            raise NotAnIdeal("generators are linearly dependent")
        for g in (g1, g2):
            if not self.contains(self.order.mul((0, 1), g)):
                raise NotAnIdeal(f"{self} is not stable under alpha")

    @property
    def hermite(self) -> tuple[Elem, Elem]:
        return hermite_basis(list(self.basis))

    def contains(self, x: Elem) -> bool:
        (a, _), (b, c) = hermite_basis(list(self.basis))
        if x[1] % c:
            return False
        return (x[0] - (x[1] // c) * b) % a == 0

    @property
    def norm(self) -> int:
        """Index of the lattice in Z[alpha]."""
        (a, _), (_, c) = self.hermite
        return a * c

    def canonical(self) -> IdealBasis:
        return IdealBasis(self.order, self.hermite)

    def __eq__(self, other) -> bool:
        return isinstance(other, IdealBasis) and self.order == other.order and self.hermite == other.hermite

    def __hash__(self) -> int:
        return hash((self.order, self.hermite))

    def __str__(self) -> str:
        return "(" + ", ".join(_format_elem(g) for g in self.basis) + ")"

    @classmethod
    def parse(cls, text: str, order: QuadOrder) -> IdealBasis:
        m = re.fullmatch(r"\s*\((.*),(.*)\)\s*", text)
        if m is None:
            raise InvalidWord(f"cannot parse ideal {text!r}")
        return cls(order, (_parse_elem(m.group(1)), _parse_elem(m.group(2))))


def _format_elem(x: Elem) -> str:
    u, v = x
    if v == 0:
        return str(u)
    return f"{u}{'+' if v >= 0 else ''}{v}*alpha"


def _parse_elem(text: str) -> Elem:
    text = text.replace(" ", "")
    m = re.fullmatch(r"(-?[0-9]+)?(?:([+-]?[0-9]*)\*?alpha)?", text)
    if m is None or not text:
        raise InvalidWord(f"cannot parse element {text!r}")
    u = int(m.group(1)) if m.group(1) else 0
    coef = m.group(2)
    if m.group(0).endswith("alpha"):
        v = int(coef) if coef not in (None, "", "+", "-") else (-1 if coef == "-" else 1)
    else:
        v = 0
    return u, v


def principal(order: QuadOrder, x: Elem = (1, 0)) -> IdealBasis:
    """The principal ideal ``x * Z[alpha]`` with basis ``(x, x*alpha)``."""
    return IdealBasis(order, (x, order.mul(x, (0, 1))))


def ideal_from_matrix(m: Mat2Z, order: QuadOrder) -> IdealBasis:
    """Ideal spanned by an alpha-eigenvector of ``m``.

    For ``m = [[a, b], [c, d]]`` the vector ``(b, alpha - a)`` satisfies
    ``m v = alpha v``.
    """
    t = order.t
    if m.trace != t or m.det != 1:
        raise NotAnnihilated(f"{m} does not satisfy x^2 - {t}x + 1")
    if m.b != 0:
        return IdealBasis(order, ((m.b, 0), (-m.a, 1)))
    return IdealBasis(order, ((-m.d, 1), (m.c, 0)))


def _coordinates(ideal: IdealBasis, x: Elem) -> tuple[int, int]:
    """Integer coordinates of ``x`` in the ideal's chosen basis."""
    (p, q), (r, s) = ideal.basis
    det = p * s - q * r
    k1, rem1 = divmod(x[0] * s - x[1] * r, det)
    k2, rem2 = divmod(p * x[1] - q * x[0], det)
    if rem1 or rem2:
        raise NotAnIdeal(f"{x} is not in {ideal}")
    return k1, k2


def matrix_from_ideal(ideal: IdealBasis) -> Mat2Z:
    """The matrix ``B`` with ``B (b1, b2)^T = alpha (b1, b2)^T``."""
    rows = [_coordinates(ideal, ideal.order.mul((0, 1), g)) for g in ideal.basis]
    return Mat2Z(rows[0][0], rows[0][1], rows[1][0], rows[1][1])


def ideal_matrix(ideal: IdealBasis) -> Mat2Z:
    """The matrix sending ``(1, alpha)`` to the chosen basis of ``ideal``."""
    (u1, v1), (u2, v2) = ideal.basis
    return Mat2Z(u1, v1, u2, v2)


def conjugate_by(p: Mat2Z, m: Mat2Z) -> Mat2Z | None:
    """``p m p^-1`` when it is an integer matrix, else ``None``; ``p`` need not be unimodular."""
    det = p.det
    if det == 0:
        raise ValueError("singular conjugator")
    adj = Mat2Z(p.d, -p.b, -p.c, p.a)
    num = p @ m @ adj
    entries = (num.a, num.b, num.c, num.d)
    if any(e % det for e in entries):
        return None
    return Mat2Z(*(e // det for e in entries))


def ideal_mul(i1: IdealBasis, i2: IdealBasis) -> IdealBasis:
    if i1.order != i2.order:
        raise ValueError("ideals of different orders")
    order = i1.order
    products = [order.mul(x, y) for x, y in product(i1.basis, i2.basis)]
    return IdealBasis(order, hermite_basis(products))


def class_word(ideal: IdealBasis) -> str:
    """Canonical X/Y word (up to rotation and swap) of the ideal's class."""
    return slpm_class(canonical_class(matrix_from_ideal(ideal)))


def class_equiv(i1: IdealBasis, i2: IdealBasis) -> bool:
    return class_word(i1) == class_word(i2)


def quadratic_form(ideal: IdealBasis) -> tuple[int, int, int]:
    """Coefficients of ``N(x b1 + y b2) / N(I)`` for the chosen basis."""
    order = ideal.order
    b1, b2 = ideal.basis
    n = ideal.norm
    cross = order.mul(b1, order.conj(b2))
    trace_cross = 2 * cross[0] + order.t * cross[1]
    return order.norm(b1) // n, trace_cross // n, order.norm(b2) // n


def is_invertible_class(ideal: IdealBasis) -> bool:
    a, b, c = quadratic_form(ideal)
    return gcd(gcd(a, b), c) == 1


def class_ideal(word: str, order: QuadOrder) -> IdealBasis:
    return ideal_from_matrix(word_to_matrix(word), order)


@dataclass(frozen=True)
class ClassGroup:
    """Invertible ideal classes of trace ``t`` with their multiplication table."""

    t: int
    elements: tuple[str, ...]
    table: dict[tuple[str, str], str]
    identity: str
    invariants: tuple[int, ...]
    coordinates: dict[str, tuple[int, ...]]
    non_invertible: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, x: str, y: str) -> str:
        return self.table[(x, y)]

    def inverse(self, x: str) -> str:
        return next(y for y in self.elements if self.table[(x, y)] == self.identity)

    def element_order(self, x: str) -> int:
        k, y = 1, x
        while y != self.identity:
            y, k = self.table[(y, x)], k + 1
        return k


def _prime_factors(n: int) -> list[int]:
    out, p = [], 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def abelian_invariants(elements, mul, identity, element_order) -> tuple[int, ...]:
    """Invariant factors ``n1 | n2 | ...`` of a finite abelian group given by its table."""
    size = len(elements)
    orders = {x: element_order(x) for x in elements}
    factors_by_prime: dict[int, list[int]] = {}
    for p in _prime_factors(size):
        # |G[p^k]| = p^(s_k) with s_k = sum_i min(k, e_i); s_k - s_(k-1) counts e_i >= k
        logs = [0]
        k = 0
        while True:
            k += 1
            killed = sum(1 for x in elements if (p**k) % orders[x] == 0)
            e = 0
            while killed % p == 0 and killed > 1:
                killed //= p
                e += 1
            if e == logs[-1]:
                break
            logs.append(e)
        at_least = [logs[k] - logs[k - 1] for k in range(1, len(logs))] + [0]
        exponents = []
        for k in range(len(at_least) - 1):
            exponents += [k + 1] * (at_least[k] - at_least[k + 1])
        factors_by_prime[p] = sorted(exponents, reverse=True)
    rank = max((len(v) for v in factors_by_prime.values()), default=0)
    invariants = [1] * rank
    for p, exps in factors_by_prime.items():
        for i, e in enumerate(exps):
            invariants[rank - 1 - i] *= p**e
    return tuple(invariants)


def _coordinates_for(elements, mul, identity, element_order, invariants) -> dict[str, tuple[int, ...]]:
    """An explicit isomorphism onto ``Z/n1 x ... x Z/nr``, first generators found in element order."""
    if not invariants:
        return {identity: ()}

    def power(x, k):
        y = identity
        for _ in range(k):
            y = mul(y, x)
        return y

    candidates = {n: [x for x in elements if element_order(x) == n] for n in set(invariants)}
    for gens in product(*(candidates[n] for n in invariants)):
        coords = {}
        for exps in product(*(range(n) for n in invariants)):
            y = identity
            for g, e in zip(gens, exps):
                y = mul(y, power(g, e))
            if y in coords:
                break
            coords[y] = exps
        if len(coords) == len(elements):
            return coords
    raise AssertionError("no basis found for a finite abelian group")


def class_group(t: int) -> ClassGroup:
    order = QuadOrder(t)
    classes = enumerate_classes_by_trace(t)
    ideals = {w: class_ideal(w, order) for w in classes}
    invertible = tuple(w for w in classes if is_invertible_class(ideals[w]))
    others = tuple(w for w in classes if w not in invertible)
    identity = class_word(principal(order))
    table = {}
    for x in invertible:
        for y in invertible:
            z = class_word(ideal_mul(ideals[x], ideals[y]))
            if z not in invertible:
                raise AssertionError(f"product {x} * {y} left the group")
            table[(x, y)] = z

    def mul(x, y):
        return table[(x, y)]

    def element_order(x):
        k, y = 1, x
        while y != identity:
            y, k = mul(y, x), k + 1
        return k

    invariants = abelian_invariants(invertible, mul, identity, element_order)
    coords = _coordinates_for(invertible, mul, identity, element_order, invariants)
    return ClassGroup(t, invertible, table, identity, invariants, coords, others)
