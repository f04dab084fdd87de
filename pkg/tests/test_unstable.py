import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import k_generator_degrees, monomial_count, poly_mul, sq_on_poly, sw_image, word_on_poly
from twisted_steenrod.steenrod import adem_normalize
from twisted_steenrod.unstable import (
    BSPIN_MAX_DEGREE,
    K,
    BOType,
    PolyElement,
    apply_word,
    basis_elements,
    bspin_series,
    classify_iota_to_w,
    dimension_series,
    generators_up_to,
    sq_action,
    thom_sq,
)

i1 = PolyElement.generator(K, 0)
i2 = PolyElement.generator(K, 1)


def bo(n):
    return BOType(n)


def w(j, n=8):
    return PolyElement.generator(bo(n), j - 1)


@pytest.mark.parametrize(
    "i, x, expected",
    [
        (1, i1, i1 ** 2),
        (2, i1, PolyElement.zero(K)),
        (2, i2, i2 ** 2),
        (1, i1 ** 2, PolyElement.zero(K)),
        (2, i1 ** 2, i1 ** 4),
    ],
)
def test_k_examples(i, x, expected):
    assert sq_action(i, x) == expected


def test_wu_example():
    assert sq_action(1, w(2)) == w(1) * w(2) + w(3)


def test_negative_square_rejected():
    with pytest.raises(ValueError):
        sq_action(-1, i1)


def test_generators():
    assert [str(g) for g in generators_up_to(K, 5)] == ["i1", "i2", "Sq1 i2", "Sq2 Sq1 i2"]
    assert [str(g) for g in generators_up_to(K, 1)] == ["i1"]
    assert [str(g) for g in generators_up_to(bo(3), 3)] == ["w1", "w2", "w3"]


def test_derived_generator_renders():
    assert str(sq_action(1, i2)) == "Sq1 i2"
    assert str(i1 * sq_action(1, i2)) == "i1 (Sq1 i2)"


def test_k_dimensions():
    assert dimension_series(K, 4).dims == (1, 1, 2, 3, 4)
    assert list(dimension_series(K, 20).dims) == monomial_count(k_generator_degrees(20), 20)


def test_bo_dimensions():
    assert dimension_series(bo(1), 9).dims == (1,) * 10
    # stable range: partitions of d
    assert list(dimension_series(bo(12), 12).dims) == monomial_count(list(range(1, 13)), 12)


def test_instability():
    for g in range(K.num_generators(17)):
        x = PolyElement.generator(K, g)
        n = K.generator_degree(g)
        assert sq_action(n, x) == x * x
        assert sq_action(n + 1, x) == 0
        assert sq_action(n + 3, x) == 0
        assert sq_action(0, x) == x


# ---- oracle: i1 -> y, i2 -> x1 x2 + x3 x4 in a ring of line classes ----

NV = 5  # y, x1, x2, x3, x4


def _unit(i):
    return tuple(1 if j == i else 0 for j in range(NV))


IOTA1 = frozenset([_unit(0)])
IOTA2 = poly_mul(frozenset([_unit(1)]), frozenset([_unit(2)])) ^ poly_mul(frozenset([_unit(3)]), frozenset([_unit(4)]))


def k_image(x: PolyElement) -> frozenset:
    gens = [IOTA1] + [word_on_poly(K.generator_word(k), IOTA2) for k in range(1, 6)]
    acc = set()
    for m in x.terms:
        img = frozenset([(0,) * NV])
        for k, e in enumerate(m):
            for _ in range(e):
                img = poly_mul(img, gens[k])
        acc ^= set(img)
    return frozenset(acc)


def test_k_action_matches_line_class_oracle():
    for d in range(9):
        for x in basis_elements(K, d):
            for i in range(d + 1):
                assert k_image(sq_action(i, x)) == sq_on_poly(i, k_image(x)), (i, str(x))


def test_wu_formula_matches_splitting_principle():
    n = 5
    for d in range(7):
        for x in basis_elements(bo(n), d):
            (m,) = x.terms
            for i in range(d + 1):
                img = set()
                for t in sq_action(i, x).terms:
                    img ^= set(sw_image(t, n))
                assert frozenset(img) == sq_on_poly(i, sw_image(m, n)), (i, str(x))


def test_adem_consistency_on_k():
    mons = [x for d in range(9) for x in basis_elements(K, d)]
    words = [wd for wd in itertools.product(range(1, 5), repeat=2)] + [(1, 2, 1), (2, 2, 2), (3, 1, 2)]
    for wd in words:
        norm = adem_normalize(wd)
        for x in mons:
            expected = PolyElement.zero(K)
            for m in norm.terms:
                expected = expected + apply_word(m, x)
            assert apply_word(wd, x) == expected


@given(st.data())
def test_cartan(data):
    xs = [x for d in range(1, 6) for x in basis_elements(K, d)]
    x = data.draw(st.sampled_from(xs))
    y = data.draw(st.sampled_from(xs))
    i = data.draw(st.integers(0, 8))
    expected = PolyElement.zero(K)
    for a in range(i + 1):
        expected = expected + sq_action(a, x) * sq_action(i - a, y)
    assert sq_action(i, x * y) == expected


def test_classify_examples():
    b = bo(8)
    assert classify_iota_to_w(i1, b) == w(1)
    assert classify_iota_to_w(i2, b) == w(2)
    assert classify_iota_to_w(sq_action(1, i2), b) == w(1) * w(2) + w(3)


def test_classify_rejects_small_bound():
    with pytest.raises(ValueError):
        classify_iota_to_w(sq_action(1, i2), bo(2))


def test_classify_commutes_with_squares():
    b = bo(12)
    for d in range(9):
        for x in basis_elements(K, d):
            cx = classify_iota_to_w(x, b)
            for i in range(5):
                assert classify_iota_to_w(sq_action(i, x), b) == sq_action(i, cx)


def test_thom_class():
    b = bo(4)
    one = PolyElement.one(b)
    assert thom_sq(1, one) == PolyElement.generator(b, 0)
    assert thom_sq(2, one) == PolyElement.generator(b, 1)


def test_bspin_low_degrees():
    assert bspin_series(4).dims == (1, 0, 0, 0, 1)


def test_bspin_bound_enforced():
    with pytest.raises(ValueError):
        bspin_series(BSPIN_MAX_DEGREE + 1)


def test_bspin_below_bo():
    s = bspin_series(16)
    t = dimension_series(bo(16), 16)
    assert all(a <= b for a, b in zip(s.dims, t.dims))


def test_bspin_matches_polynomial_oracle():
    # polynomial on w_i, i >= 4, except the degrees 2^k + 1 of the killed classes
    n = 24
    degs = [i for i in range(4, n + 1) if i not in (5, 9, 17)]
    assert list(bspin_series(n).dims) == monomial_count(degs, n)
