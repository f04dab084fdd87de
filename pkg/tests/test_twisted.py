import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import k_generator_degrees, milnor_dims, monomial_count
from twisted_steenrod.expr import parse_twisted as T
from twisted_steenrod.steenrod import AlgebraId, SteenrodElement, basis, coproduct_monomial
from twisted_steenrod.twisted import (
    APPENDIX_SIX_TERMS,
    TwistedElement,
    TwistedSubalgebraId,
    coproduct_twisted,
    in_twisted_a1,
    multiply_terms,
    phi,
    phi_extended,
    psi,
    tensor_multiply_twisted,
    tensor_of,
    twisted_basis,
    twisted_dimension_series,
    verify_appendix,
    verify_commutation,
    verify_inverse,
)
from twisted_steenrod.unstable import K, PolyElement, apply_word, basis_elements

S = SteenrodElement.sq
A1_BASIS = [v for d in range(7) for v in basis(AlgebraId.A1, d)]


def full_basis(max_degree):
    return [x for d in range(max_degree + 1) for x in twisted_basis(TwistedSubalgebraId.FullTwisted, d)]


@pytest.mark.parametrize(
    "x, y, expected",
    [
        ("1 | Sq1", "i1 | 1", "i1^2 | 1 + i1 | Sq1"),
        ("i1 | 1", "i2 | 1", "i1 i2 | 1"),
        ("1 | Sq2", "i2 | 1", "i2^2 | 1 + Sq1 i2 | Sq1 + i2 | Sq2"),
    ],
)
def test_product_examples(x, y, expected):
    assert T(x) * T(y) == T(expected)


def test_coproduct_examples():
    one = T("1 | 1")
    assert coproduct_twisted(T("i1 | 1")) == tensor_of(T("i1 | 1"), one) | tensor_of(one, T("i1 | 1"))
    assert tensor_of(T("i1 | 1"), T("i1 | 1")) <= coproduct_twisted(T("i2 | 1"))
    assert coproduct_twisted(one) == tensor_of(one, one)


def test_phi_examples():
    assert phi(S(1)) == T("1 | Sq1 + i1 | 1")
    assert phi(S(2)) == T("1 | Sq2 + i1 | Sq1 + i1^2 | 1 + i2 | 1")
    assert phi(SteenrodElement.one()) == TwistedElement.one()
    assert phi(S(2, 1)) == phi(S(2)) * phi(S(1))


def test_phi_rejects_outside_a1():
    with pytest.raises(ValueError):
        phi(S(4))


def test_psi_examples():
    assert psi(T("1 | Sq1")) == T("1 | Sq1 + i1 | 1")
    assert psi(T("i2 | 1")) == T("i2 | 1")
    assert psi(phi(S(2))) == T("1 | Sq2")
    with pytest.raises(ValueError):
        psi(T("1 | Sq4"))


def test_phi_extended_examples():
    assert phi_extended(T("i1 | Sq1")) == T("i1^2 | 1 + i1 | Sq1")
    assert phi_extended(T("Sq1 i2 | 1")) == T("Sq1 i2 | 1")
    for b in [x for d in range(7) for x in twisted_basis(TwistedSubalgebraId.TwistedA1, d)]:
        assert phi_extended(psi(b)) == b


def test_phi_multiplicative_on_all_pairs():
    assert len(A1_BASIS) == 8
    for a in A1_BASIS:
        for b in A1_BASIS:
            assert phi(a * b) == phi(a) * phi(b)


def test_appendix_identities():
    checks = verify_appendix()
    assert all(c.passed for c in checks)
    assert phi(S(2)) * phi(S(2)) == APPENDIX_SIX_TERMS
    assert len(APPENDIX_SIX_TERMS.terms) == 6


def test_commutation_small():
    assert all(c.passed for c in verify_commutation(6))


def test_inverse_small():
    assert all(c.passed for c in verify_inverse(10))


@given(st.data())
def test_associativity(data):
    b = full_basis(5)
    x, y, z = (data.draw(st.sampled_from(b)) for _ in range(3))
    if x.degree + y.degree + z.degree <= 10:
        assert (x * y) * z == x * (y * z)


def test_inclusions_multiplicative():
    ks = [m for d in range(9) for m in basis_elements(K, d)]
    for k in ks[:30]:
        for l in ks[:30]:
            if k.degree + l.degree <= 8:
                assert TwistedElement.from_poly(k) * TwistedElement.from_poly(l) == TwistedElement.from_poly(k * l)
    from twisted_steenrod.steenrod import admissible_monomials

    ms = [SteenrodElement._raw(frozenset([m])) for d in range(9) for m in admissible_monomials(d)]
    for a in ms:
        for b in ms:
            if a.degree + b.degree <= 8:
                assert TwistedElement.from_steenrod(a) * TwistedElement.from_steenrod(b) == TwistedElement.from_steenrod(a * b)


def act_on_k(x: TwistedElement, z: PolyElement) -> PolyElement:
    out = PolyElement.zero(K)
    for k, a in x.terms:
        out = out + PolyElement._raw(K, frozenset([k])) * apply_word(a, z)
    return out


@given(st.data())
def test_product_acts_as_composite_on_k(data):
    b = full_basis(4)
    x = data.draw(st.sampled_from(b))
    y = data.draw(st.sampled_from(b))
    zs = [m for d in range(5) for m in basis_elements(K, d)]
    z = data.draw(st.sampled_from(zs))
    assert act_on_k(x * y, z) == act_on_k(x, act_on_k(y, z))


def _coassoc_sides(x):
    d = coproduct_twisted(x)
    left, right = set(), set()
    for s, t in d:
        for s1, s2 in coproduct_twisted(TwistedElement._raw(frozenset([s]))):
            left ^= {(s1, s2, t)}
        for t1, t2 in coproduct_twisted(TwistedElement._raw(frozenset([t]))):
            right ^= {(s, t1, t2)}
    return left, right


def test_coassociativity():
    for x in full_basis(6):
        left, right = _coassoc_sides(x)
        assert left == right


@given(st.data())
def test_coproduct_is_algebra_map(data):
    b = full_basis(4)
    x = data.draw(st.sampled_from(b))
    y = data.draw(st.sampled_from(b))
    assert coproduct_twisted(x * y) == tensor_multiply_twisted(coproduct_twisted(x), coproduct_twisted(y))


def test_dimension_series():
    n = 14
    ks = monomial_count(k_generator_degrees(n), n)
    a = milnor_dims(n)
    expected = [sum(ks[i] * a[d - i] for i in range(d + 1)) for d in range(n + 1)]
    assert list(twisted_dimension_series(TwistedSubalgebraId.FullTwisted, n).dims) == expected
    a1 = [1, 1, 1, 2, 1, 1, 1] + [0] * n
    expected1 = [sum(ks[i] * a1[d - i] for i in range(d + 1)) for d in range(n + 1)]
    assert list(twisted_dimension_series(TwistedSubalgebraId.TwistedA1, n).dims) == expected1


def test_twisted_a1_membership():
    assert in_twisted_a1(phi(S(2)))
    assert in_twisted_a1(T("i1 (Sq1 i2) | Sq5 + i1 (Sq1 i2) | Sq4 Sq1"))
    assert not in_twisted_a1(T("i1 | Sq4"))


def test_hopf_on_generators():
    for i in (1, 2):
        right = set()
        for a1, a2 in coproduct_monomial((i,)):
            right ^= set(tensor_of(phi(SteenrodElement._raw(frozenset([a1]))),
                                   phi(SteenrodElement._raw(frozenset([a2])))))
        assert coproduct_twisted(phi(S(i))) == frozenset(right)


def test_multiply_terms_unit():
    t = ((1,), (2,))
    assert multiply_terms(((), ()), t) == frozenset([t])
    assert multiply_terms(t, ((), ())) == frozenset([t])
