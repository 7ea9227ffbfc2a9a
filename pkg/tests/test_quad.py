from itertools import product
from math import gcd

import pytest

from lorenzknots.errors import NotAnIdeal, NotAnnihilated
from lorenzknots.quad import (
    IdealBasis,
    QuadOrder,
    class_equiv,
    class_group,
    class_ideal,
    class_word,
    conjugate_by,
    hermite_basis,
    ideal_from_matrix,
    ideal_matrix,
    ideal_mul,
    is_invertible_class,
    matrix_from_ideal,
    principal,
    quadratic_form,
)
from lorenzknots.sl2 import IDENTITY, Mat2Z, canonical_class, enumerate_classes_by_trace, slpm_class, word_to_matrix

O10 = QuadOrder(10)
ALPHA = (0, 1)


def ideal(order, text):
    return IdealBasis.parse(text, order)


def test_order_arithmetic():
    assert O10.discriminant == 96
    assert O10.mul(ALPHA, ALPHA) == (-1, 10)
    assert O10.norm(ALPHA) == 1
    assert O10.companion() == Mat2Z(0, 1, -1, 10)
    with pytest.raises(ValueError):
        QuadOrder(2)


def test_ideal_parse_and_text():
    i = ideal(O10, "(2, -1+alpha)")
    assert str(i) == "(2, -1+1*alpha)"
    assert ideal(O10, str(i)) == i
    assert i.norm == 2 and i.contains((4, 2))


def test_not_an_ideal():
    with pytest.raises(NotAnIdeal):
        ideal(O10, "(3, -1+alpha)")
    with pytest.raises(NotAnIdeal):
        IdealBasis(O10, ((1, 0), (2, 0)))


def test_phi_examples():
    assert ideal_from_matrix(O10.companion(), O10) == principal(O10)
    assert ideal_from_matrix(Mat2Z(1, 2, 4, 9), O10) == ideal(O10, "(2, -1+alpha)")
    assert ideal_from_matrix(Mat2Z(2, 3, 5, 8), O10) == ideal(O10, "(3, -2+alpha)")
    with pytest.raises(NotAnnihilated):
        ideal_from_matrix(Mat2Z(2, 1, 1, 1), O10)


def test_psi_examples():
    assert matrix_from_ideal(principal(O10)) == Mat2Z(0, 1, -1, 10)
    m = matrix_from_ideal(ideal(O10, "(2, -1+alpha)"))
    assert canonical_class(m) == "XXXXYY"


def test_ideal_matrix_conjugates_to_companion():
    assert ideal_matrix(principal(O10)) == IDENTITY
    for word, p in [("XXXXYY", Mat2Z(2, 0, -1, 1)), ("XXYXY", Mat2Z(3, 0, -2, 1))]:
        m = word_to_matrix(word)
        i = ideal_from_matrix(m, O10)
        assert ideal_matrix(i) == p
        assert conjugate_by(p, O10.companion()) == m


def test_ideal_mul_examples():
    i = ideal(O10, "(2, -1+alpha)")
    assert ideal_mul(principal(O10), i) == i
    assert ideal_mul(i, i) == ideal_mul(principal(O10, (2, 0)), i)


def test_class_equiv_examples():
    i2, i3 = ideal(O10, "(2, -1+alpha)"), ideal(O10, "(3, -2+alpha)")
    assert not class_equiv(i2, i3)
    scaled = IdealBasis(O10, tuple(O10.mul(ALPHA, g) for g in i3.basis))
    assert class_equiv(i3, scaled)
    lam = (3, 1)
    assert class_equiv(i2, ideal_mul(principal(O10, lam), i2))


def test_invertibility_examples():
    assert not is_invertible_class(ideal(O10, "(2, -1+alpha)"))
    assert is_invertible_class(principal(O10))
    for t in (10, 22, 40, 52):
        n = t - 2
        order = QuadOrder(t)
        for m in range(1, n + 1):
            if n % m == 0 and gcd(m, n // m) == 1:
                i = IdealBasis(order, ((m, 0), (-1, 1)))
                assert is_invertible_class(i)
                assert quadratic_form(i)[0] == m


def test_hermite_basis_spans_same_lattice():
    vectors = [(6, 4), (4, 2), (10, 0)]
    (a, b), (c, d) = hermite_basis(vectors)
    assert b == 0 and a > 0 and d > 0 and 0 <= c < a
    assert a * d == 4


@pytest.mark.parametrize("t, invariants", [(3, ()), (7, ()), (10, (2,)), (22, (2, 2)), (30, (4,)), (40, (2, 4)), (50, (2, 4))])
def test_class_group_structure(t, invariants):
    g = class_group(t)
    assert g.invariants == invariants
    size = 1
    for k in invariants:
        size *= k
    assert g.order == size


def test_class_group_examples():
    assert set(class_group(10).elements) == {"XXXXXXXXY", "XXYXY"}
    g = class_group(22)
    assert g.order == 4 and len(g.non_invertible) == 2
    assert class_group(40).order == 8


@pytest.mark.parametrize("t", [10, 13, 22, 27, 34, 40])
def test_psi_phi_round_trip(t):
    order = QuadOrder(t)
    for w in enumerate_classes_by_trace(t):
        i = class_ideal(w, order)
        assert slpm_class(canonical_class(matrix_from_ideal(i))) == w
        assert class_word(i) == w


@pytest.mark.parametrize("t", [10, 18, 22, 30, 40])
def test_group_axioms(t):
    g = class_group(t)
    order = QuadOrder(t)
    ideals = {w: class_ideal(w, order) for w in g.elements}
    for a, b in product(g.elements, repeat=2):
        prod = ideal_mul(ideals[a], ideals[b])
        assert class_word(prod) == g.mul(a, b) == g.mul(b, a)
        assert prod.norm == ideals[a].norm * ideals[b].norm
    for a, b, c in product(g.elements, repeat=3):
        assert g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c))
    assert all(g.mul(g.identity, a) == a for a in g.elements)
    assert class_word(principal(order)) == g.identity


@pytest.mark.parametrize("t", [10, 22, 33, 40])
def test_inverse_is_transpose(t):
    order = QuadOrder(t)
    g = class_group(t)
    for w in g.elements:
        m = word_to_matrix(w)
        prod = ideal_mul(ideal_from_matrix(m.transpose(), order), ideal_from_matrix(m, order))
        assert class_equiv(prod, principal(order))


def test_coordinates_respect_multiplication():
    for t in (22, 40, 50):
        g = class_group(t)
        for a, b in product(g.elements, repeat=2):
            ca, cb, cab = g.coordinates[a], g.coordinates[b], g.coordinates[g.mul(a, b)]
            assert cab == tuple((x + y) % k for x, y, k in zip(ca, cb, g.invariants))
