"""The twisted Steenrod algebra H*(K) (x) A and the morphisms phi, psi.

An element is a GF(2)-sum of pairs ``(k, a)`` with ``k`` a monomial of H*(K)
and ``a`` an admissible monomial, read as ``k (x) a``.  Products are pushed
to this normal form by

    (k (x) a)(l (x) b) = sum  k a'(l) (x) a'' b,     Delta(a) = sum a' (x) a''.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional

from .f2core import Reducer, iter_bits
from .series import PoincareSeries
from .steenrod import (
    AlgebraId,
    SteenrodElement,
    a1_basis_words,
    a1_coordinates,
    adem_normalize_word,
    admissible_monomials,
    coproduct_monomial,
    multiply_monomials,
    render_monomial,
)
from .steenrod import dimension_series as steenrod_series
from .unstable import (
    K,
    PolyElement,
    _gen_mono,
    _mono_degree,
    _mono_mul,
    _sq_mono,
    act_monomial,
    monomials,
    render_poly_monomial,
)
from .unstable import dimension_series as poly_series

Term = tuple  # (poly monomial, admissible monomial)


def _toggle(acc: set, items: Iterable) -> None:
    for x in items:
        if x in acc:
            acc.remove(x)
        else:
            acc.add(x)


def term_degree(t: Term) -> int:
    return _mono_degree(K, t[0]) + sum(t[1])


def render_term(t: Term) -> str:
    return "%s | %s" % (render_poly_monomial(K, t[0]), render_monomial(t[1]))


def _term_key(t: Term):
    return (term_degree(t), sum(t[1]), t[1], t[0])


class TwistedSubalgebraId(enum.Enum):
    FullTwisted = "twisted-A"
    TwistedA1 = "twisted-A1"


class TwistedElement:
    """Immutable GF(2)-sum of terms k (x) a."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Term] = ()):
        acc: set = set()
        for k, a in terms:
            k, a = tuple(k), tuple(a)
            while k and k[-1] == 0:
                k = k[:-1]
            _toggle(acc, [(k, a)])
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, terms: frozenset) -> "TwistedElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def zero(cls) -> "TwistedElement":
        return cls._raw(frozenset())

    @classmethod
    def one(cls) -> "TwistedElement":
        return cls._raw(frozenset([((), ())]))

    @classmethod
    def from_poly(cls, k: PolyElement) -> "TwistedElement":
        if k.ambient != K:
            raise ValueError("expected an element of H*(K)")
        return cls._raw(frozenset((m, ()) for m in k.terms))

    @classmethod
    def from_steenrod(cls, a: SteenrodElement) -> "TwistedElement":
        return cls._raw(frozenset(((), m) for m in a.terms))

    @classmethod
    def tensor(cls, k: PolyElement, a: SteenrodElement) -> "TwistedElement":
        acc: set = set()
        for m in k.terms:
            for x in a.terms:
                acc.add((m, x))
        return cls._raw(frozenset(acc))

    @property
    def degree(self) -> Optional[int]:
        degs = {term_degree(t) for t in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, TwistedElement) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "TwistedElement") -> "TwistedElement":
        return TwistedElement._raw(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "TwistedElement") -> "TwistedElement":
        return multiply_twisted(self, other)

    def left_poly_multiply(self, k: tuple) -> "TwistedElement":
        """(k (x) 1) * self for a K-monomial k; no Steenrod action involved."""
        return TwistedElement._raw(frozenset((_mono_mul(k, m), a) for m, a in self.terms))

    def sorted_terms(self) -> list[Term]:
        return sorted(self.terms, key=_term_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_term(t) for t in self.sorted_terms())

    def __repr__(self) -> str:
        return "TwistedElement(%s)" % self


# ------------------------------------------------------------------- product


@lru_cache(maxsize=None)
def _mono_product(a: tuple, l: tuple, b: tuple) -> frozenset:
    """(1 (x) a)(l (x) b) for monomials, as a set of terms."""
    acc: set = set()
    for a1, a2 in coproduct_monomial(a):
        acted = act_monomial(K, a1, l)
        if not acted:
            continue
        prods = multiply_monomials(a2, b)
        for m in acted:
            for c in prods:
                _toggle(acc, [(m, c)])
    return frozenset(acc)


def multiply_terms(x: Term, y: Term) -> frozenset:
    k, a = x
    l, b = y
    prod = _mono_product(a, l, b)
    if not k:
        return prod
    return frozenset((_mono_mul(k, m), c) for m, c in prod)


def multiply_twisted(x: TwistedElement, y: TwistedElement) -> TwistedElement:
    acc: set = set()
    for s in x.terms:
        for t in y.terms:
            _toggle(acc, multiply_terms(s, t))
    return TwistedElement._raw(frozenset(acc))


# ----------------------------------------------------------------- coproduct


def _pair_mul(x: frozenset, y: frozenset) -> frozenset:
    acc: set = set()
    for a1, a2 in x:
        for b1, b2 in y:
            _toggle(acc, [(_mono_mul(a1, b1), _mono_mul(a2, b2))])
    return frozenset(acc)


def _pair_sq(i: int, x: frozenset) -> frozenset:
    """Diagonal (Cartan) action of Sq^i on H*(K) (x) H*(K)."""
    acc: set = set()
    for l, r in x:
        for a in range(i + 1):
            left = _sq_mono(K, a, l)
            if not left:
                continue
            right = _sq_mono(K, i - a, r)
            for p in left:
                for q in right:
                    _toggle(acc, [(p, q)])
    return frozenset(acc)


@lru_cache(maxsize=None)
def _poly_generator_coproduct(k: int) -> frozenset:
    i1, i2 = _gen_mono(0), _gen_mono(1)
    if k == 0:
        return frozenset([(i1, ()), ((), i1)])
    if k == 1:
        return frozenset([(i2, ()), (i1, i1), ((), i2)])
    x = _poly_generator_coproduct(1)
    for i in reversed(K.generator_word(k)):
        x = _pair_sq(i, x)
    return x


@lru_cache(maxsize=None)
def poly_coproduct(m: tuple) -> frozenset:
    """Coproduct of a K-monomial: multiplicative, with Delta(i2) carrying i1 (x) i1."""
    out = frozenset([((), ())])
    for k, e in enumerate(m):
        for _ in range(e):
            out = _pair_mul(out, _poly_generator_coproduct(k))
    return out


def coproduct_twisted(x: TwistedElement) -> frozenset:
    """Sum of pairs (term, term) in twisted (x) twisted."""
    acc: set = set()
    for k, a in x.terms:
        for k1, k2 in poly_coproduct(k):
            for a1, a2 in coproduct_monomial(a):
                _toggle(acc, [((k1, a1), (k2, a2))])
    return frozenset(acc)


def tensor_multiply_twisted(x: frozenset, y: frozenset) -> frozenset:
    acc: set = set()
    for s1, s2 in x:
        for t1, t2 in y:
            left = multiply_terms(s1, t1)
            if not left:
                continue
            right = multiply_terms(s2, t2)
            for l in left:
                for r in right:
                    _toggle(acc, [(l, r)])
    return frozenset(acc)


def tensor_of(x: TwistedElement, y: TwistedElement) -> frozenset:
    return frozenset((s, t) for s in x.terms for t in y.terms)


def render_twisted_tensor(x: frozenset) -> str:
    if not x:
        return "0"
    ordered = sorted(x, key=lambda p: (_term_key(p[0]), _term_key(p[1])))
    return " + ".join("(%s) (x) (%s)" % (render_term(l), render_term(r)) for l, r in ordered)


# ---------------------------------------------------------------- phi and psi

_I1 = _gen_mono(0)
_I2 = _gen_mono(1)
_I1SQ = _gen_mono(0, 2)

PHI_GENERATORS = {
    1: TwistedElement._raw(frozenset([((), (1,)), (_I1, ())])),
    2: TwistedElement._raw(frozenset([((), (2,)), (_I1, (1,)), (_I1SQ, ()), (_I2, ())])),
}

PSI_GENERATORS = {
    1: TwistedElement._raw(frozenset([((), (1,)), (_I1, ())])),
    2: TwistedElement._raw(frozenset([((), (2,)), (_I1, (1,)), (_I2, ())])),
}


def _word_image(word: tuple, gens: dict) -> TwistedElement:
    out = TwistedElement.one()
    for g in word:
        out = out * gens[g]
    return out


@lru_cache(maxsize=None)
def phi_word(word: tuple) -> TwistedElement:
    return _word_image(word, PHI_GENERATORS)


@lru_cache(maxsize=None)
def psi_word(word: tuple) -> TwistedElement:
    return _word_image(word, PSI_GENERATORS)


def _a1_words(terms: Iterable[tuple]) -> Optional[list]:
    """Sq1/Sq2 words summing to the given admissible monomials, None if outside A(1)."""
    by_degree: dict = {}
    for m in terms:
        by_degree.setdefault(sum(m), []).append(m)
    words = []
    for d, ms in sorted(by_degree.items()):
        if d > 6:
            return None
        coords = a1_coordinates(d).coordinates(SteenrodElement._raw(frozenset(ms)))
        if coords is None:
            return None
        basis = a1_basis_words(d)
        words.extend(basis[j][0] for j in iter_bits(coords))
    return words


def phi(a: SteenrodElement) -> TwistedElement:
    """The algebra map A(1) -> twisted algebra fixed on Sq1 and Sq2."""
    words = _a1_words(a.terms)
    if words is None:
        raise ValueError("%s is not in A(1)" % a)
    out = TwistedElement.zero()
    for w in words:
        out = out + phi_word(w)
    return out


def _split_by_poly(x: TwistedElement) -> dict:
    groups: dict = {}
    for k, a in x.terms:
        groups.setdefault(k, []).append(a)
    return groups


def in_twisted_a1(x: TwistedElement) -> bool:
    return all(_a1_words(ms) is not None for ms in _split_by_poly(x).values())


def _extend(x: TwistedElement, image) -> TwistedElement:
    out: set = set()
    for k, ms in _split_by_poly(x).items():
        words = _a1_words(ms)
        if words is None:
            raise ValueError("%s is not in the subalgebra generated by A(1) and H*(K)" % x)
        for w in words:
            _toggle(out, image(w).left_poly_multiply(k).terms)
    return TwistedElement._raw(frozenset(out))


def psi(x: TwistedElement) -> TwistedElement:
    """psi(k (x) a) = (k (x) 1) psi(1 (x) a), multiplicative on Sq1, Sq2."""
    return _extend(x, psi_word)


def phi_extended(x: TwistedElement) -> TwistedElement:
    """phi(k (x) a) = (k (x) 1) phi(a): phi extended by the identity on H*(K)."""
    return _extend(x, phi_word)


# ------------------------------------------------------------------- bases


def twisted_basis(alg: TwistedSubalgebraId, degree: int) -> list[TwistedElement]:
    """Degreewise basis.

    FullTwisted: all k (x) a with a admissible.  TwistedA1: k (x) b with b
    running over the A(1) basis (so basis elements may have several terms).
    """
    out = []
    if alg is TwistedSubalgebraId.FullTwisted:
        for j in range(degree + 1):
            for a in admissible_monomials(j):
                for k in monomials(K, degree - j):
                    out.append(TwistedElement._raw(frozenset([(k, a)])))
        return out
    for j in range(min(degree, 6) + 1):
        for w, value in a1_basis_words(j):
            for k in monomials(K, degree - j):
                out.append(TwistedElement._raw(frozenset((k, m) for m in value.terms)))
    return out


def twisted_dimension_series(alg: TwistedSubalgebraId, max_degree: int) -> PoincareSeries:
    return PoincareSeries(tuple(len(twisted_basis(alg, d)) for d in range(max_degree + 1)))


def expected_dimension_series(alg: TwistedSubalgebraId, max_degree: int) -> PoincareSeries:
    """Product of the H*(K) series with the A or A(1) series."""
    a = AlgebraId.FullA if alg is TwistedSubalgebraId.FullTwisted else AlgebraId.A1
    return poly_series(K, max_degree) * steenrod_series(a, max_degree)


# ------------------------------------------------------------- verification


@dataclass
class IdentityCheck:
    name: str
    lhs: str
    rhs: str
    passed: bool
    steps: list = field(default_factory=list)


APPENDIX_SIX_TERMS = TwistedElement(
    [
        ((), (3, 1)),
        (_I1, (3,)),
        (_I1, (2, 1)),
        (_gen_mono(0, 3), (1,)),
        (_gen_mono(2), (1,)),
        ((1, 0, 1), ()),
    ]
)


def verify_appendix() -> list[IdentityCheck]:
    """Recompute the two defining relations of A(1) under phi and the Hopf property."""
    p1, p2 = PHI_GENERATORS[1], PHI_GENERATORS[2]
    out = []

    sq = p1 * p1
    out.append(IdentityCheck("phi(Sq1)^2 = 0", str(sq), "0", sq == 0,
                             ["phi(Sq1) = %s" % p1]))

    p1p2 = p1 * p2
    lhs = p1p2 * p1
    rhs = p2 * p2
    out.append(IdentityCheck(
        "phi(Sq1)phi(Sq2)phi(Sq1) = phi(Sq2)^2",
        str(lhs), str(rhs), lhs == rhs and lhs == APPENDIX_SIX_TERMS,
        ["phi(Sq2) = %s" % p2,
         "phi(Sq1)phi(Sq2) = %s" % p1p2,
         "expected = %s" % APPENDIX_SIX_TERMS],
    ))

    for i in (1, 2):
        x = PHI_GENERATORS[i]
        left = coproduct_twisted(x)
        right: set = set()
        for a1, a2 in coproduct_monomial((i,)):
            _toggle(right, tensor_of(phi_word(a1), phi_word(a2)))
        right = frozenset(right)
        out.append(IdentityCheck(
            "Delta phi(Sq%d) = (phi (x) phi) Delta(Sq%d)" % (i, i),
            render_twisted_tensor(left), render_twisted_tensor(right), left == right,
        ))
    return out


def coproduct_a1_right(alpha: SteenrodElement) -> list[tuple[SteenrodElement, tuple]]:
    """Write Delta(alpha) = sum_j c_j (x) b_j with b_j given by Sq1/Sq2 words."""
    from .steenrod import coproduct

    by_left: dict = {}
    for l, r in coproduct(alpha):
        by_left.setdefault(l, []).append(r)
    out = []
    for l, rs in sorted(by_left.items()):
        words = _a1_words(rs)
        if words is None:
            raise ValueError("coproduct of %s leaves A (x) A(1)" % alpha)
        for w in words:
            out.append((SteenrodElement._raw(frozenset([l])), w))
    return out


def commutation_sides(alpha_word: tuple, l: tuple) -> tuple[TwistedElement, TwistedElement]:
    """Both sides of phi(alpha)(l (x) 1) = sum (alpha'(l) (x) 1) phi(alpha'')."""
    alpha = SteenrodElement._raw(adem_normalize_word(alpha_word))
    lhs = phi_word(alpha_word) * TwistedElement._raw(frozenset([(l, ())]))
    acc: set = set()
    for left, w in coproduct_a1_right(alpha):
        acted: set = set()
        for m in left.terms:
            _toggle(acted, act_monomial(K, m, l))
        if not acted:
            continue
        image = phi_word(w)
        for k in acted:
            _toggle(acc, image.left_poly_multiply(k).terms)
    return lhs, TwistedElement._raw(frozenset(acc))


def verify_commutation(max_degree: int) -> list[IdentityCheck]:
    out = []
    for d in range(7):
        for w, value in a1_basis_words(d):
            bad = []
            count = 0
            for ld in range(max_degree + 1):
                for l in monomials(K, ld):
                    lhs, rhs = commutation_sides(w, l)
                    count += 1
                    if lhs != rhs:
                        bad.append(render_poly_monomial(K, l))
            out.append(IdentityCheck(
                "commutation alpha=%s" % value,
                "%d monomials" % count,
                "%d mismatches" % len(bad),
                not bad,
                bad[:5],
            ))
    return out


def _coords_twisted(x: TwistedElement, index: dict) -> int:
    v = 0
    for t in x.terms:
        v ^= 1 << index[t]
    return v


def verify_inverse(max_degree: int) -> list[IdentityCheck]:
    """phi_ext and psi are mutually inverse and bijective on each degree."""
    out = []
    for d in range(max_degree + 1):
        basis = twisted_basis(TwistedSubalgebraId.TwistedA1, d)
        terms = sorted({t for b in basis for t in b.terms}, key=_term_key)
        index = {t: i for i, t in enumerate(terms)}
        bad = 0
        rank_phi, rank_psi = Reducer(), Reducer()
        for b in basis:
            f, g = phi_extended(b), psi(b)
            if psi(f) != b or phi_extended(g) != b:
                bad += 1
            rank_phi.add(_coords_twisted(f, index))
            rank_psi.add(_coords_twisted(g, index))
        ok = bad == 0 and rank_phi.rank == rank_psi.rank == len(basis)
        out.append(IdentityCheck(
            "degree %d" % d,
            "dim %d, rank phi %d, rank psi %d" % (len(basis), rank_phi.rank, rank_psi.rank),
            "%d failures" % bad,
            ok,
        ))
    return out
