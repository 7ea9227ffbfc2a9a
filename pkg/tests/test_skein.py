import random

import pytest
from conftest import knot_words
from oracles import burau_alexander, jones_state_sum

from lorenzknots.braid import MarkedBraid, bw_braid, closure_components, genus, lorenz_braid, markov_stabilize
from lorenzknots.errors import NonPositiveInput
from lorenzknots.lyndon import trip
from lorenzknots.poly import LaurentPoly, variables
from lorenzknots.skein import (
    CONWAY,
    HOMFLY,
    J_GRADING,
    JONES,
    alexander,
    braid_index,
    conway,
    evaluate,
    homfly,
    homfly_of_braid,
    j_poly,
    j_to_homfly,
    jones,
    mfw_bound,
    positive_reduce,
)

TREFOIL = MarkedBraid(2, (1, 1, 1))
x, y = variables("x", "y")
R, C, T = variables("R", "C", "T")


def test_positive_reduce_examples():
    r = positive_reduce(MarkedBraid(3, (1, 2)))
    assert r.square is None and r.braid == MarkedBraid(1)
    r = positive_reduce(TREFOIL)
    assert r.square == 1 and r.braid == MarkedBraid(2, (1,))
    r = positive_reduce(MarkedBraid(3, (2, 1, 2)))
    assert r.square is not None or not r.braid.word


def test_positive_reduce_rejects_negative():
    with pytest.raises(NonPositiveInput):
        positive_reduce(MarkedBraid(2, (-1,)))


@pytest.mark.parametrize("k", range(1, 5))
def test_trivial_braids(k):
    assert evaluate(MarkedBraid(k), HOMFLY) == (-(x + x**-1) * y**-1) ** (k - 1)
    assert j_poly(MarkedBraid(k)) == (T ** (k - 1)).extend(("R", "C", "T"))


def test_trefoil_values():
    assert evaluate(TREFOIL, HOMFLY) == x**-2 * y**2 - 2 * x**-2 - x**-4
    assert evaluate(TREFOIL, CONWAY) == (variables("z")[0] ** 2 + 1)
    assert j_poly(TREFOIL) == C**2 + C * R * T + R
    assert j_poly(MarkedBraid(2, (1,))) == LaurentPoly.constant(1, ("R", "C", "T"))
    assert j_to_homfly(j_poly(TREFOIL)) == evaluate(TREFOIL, HOMFLY)
    assert mfw_bound(TREFOIL) == 2 and mfw_bound(MarkedBraid(1)) == 1


def test_word_level_polynomials():
    assert homfly("LLR") == LaurentPoly.constant(1, ("x", "y"))
    (t,) = variables("t")
    assert alexander("LLRLR") == t - 1 + t**-1
    assert jones("LLRLR") == jones("LRLRR")
    assert braid_index("LLR") == 1 and braid_index("LLRLR") == 2 and braid_index("LLRLLRR") == 2


def test_hopf_link():
    hopf = MarkedBraid(2, (1, 1))
    assert j_poly(hopf) == C + R * T
    assert closure_components(hopf) == 2


def test_jones_matches_state_sum():
    for w in knot_words(9):
        b = bw_braid(w)
        if len(b) > 14:
            continue
        ours = {e[0]: c for e, c in jones(w).terms.items()}
        assert ours == jones_state_sum(b.strands, b.word), w


def dense(p: LaurentPoly) -> list[int]:
    lo, hi = p.min_degree("t"), p.degree("t")
    return [p.terms.get((e,), 0) for e in range(lo, hi + 1)]


def test_alexander_matches_burau():
    for w in knot_words(8) + ["LLLLRLLR"]:
        b = lorenz_braid(w)
        assert dense(alexander(w)) == burau_alexander(b.strands, b.word), w


def test_j_properties():
    for w in knot_words(10):
        b = bw_braid(w)
        j = j_poly(b)
        assert all(c > 0 for c in j.terms.values()), w
        assert j.weighted_degrees(J_GRADING) == {len(b) - b.strands + 1}, w
        r0 = j.substitute({"R": 0})
        assert r0.is_monomial() and r0.degree("T") == closure_components(b) - 1, w
        assert j_to_homfly(j) == homfly_of_braid(b), w
        assert j.degree("T") + 1 <= b.strands


def test_j_properties_on_links():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(2, 5)
        b = MarkedBraid(n, tuple(rng.randint(1, n - 1) for _ in range(rng.randint(0, 9))))
        j = j_poly(b)
        # only the branch of b_minus children keeps the number of components
        c0 = j.substitute({"C": 0})
        assert all(c > 0 for c in j.terms.values())
        assert j.weighted_degrees(J_GRADING) == {len(b) - n + 1}
        assert j.substitute({"R": 0}).is_monomial()
        assert c0.is_monomial() and c0.degree("T") == closure_components(b) - 1
        assert j_to_homfly(j) == homfly_of_braid(b)
        assert mfw_bound(b) <= n


def test_mfw_equals_trip():
    for w in knot_words(10):
        assert mfw_bound(bw_braid(w)) == trip(w), w


def test_alexander_monic_of_degree_two_genus():
    for w in knot_words(10):
        a = alexander(w)
        coeffs = a.coefficients()
        assert abs(coeffs[0]) == 1 and abs(coeffs[-1]) == 1, w
        assert a.degree("t") - a.min_degree("t") == 2 * genus(w), w


def test_markov_invariance():
    rng = random.Random(11)
    for w in knot_words(8):
        b = lorenz_braid(w)
        ref = homfly_of_braid(b)
        for _ in range(3):
            if rng.random() < 0.5:
                k = rng.randrange(len(b.word))
                b = MarkedBraid(b.strands, b.word[k:] + b.word[:k])
            else:
                b = markov_stabilize(b, rng.choice(("left", "right")))
        assert homfly_of_braid(b) == ref, w


def test_cache_does_not_change_values():
    b = bw_braid("LLRLLRLRR")
    assert evaluate(b, JONES, use_cache=False) == evaluate(b, JONES)
    assert conway("LLRLLRR") == evaluate(bw_braid("LLRLLRR"), CONWAY, use_cache=False)
