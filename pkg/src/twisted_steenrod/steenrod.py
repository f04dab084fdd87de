"""The mod 2 Steenrod algebra in the admissible basis.

Monomials are tuples of positive exponents ``(i1, ..., ik)`` standing for the
composite ``Sq^i1 ... Sq^ik``; the empty tuple is the unit.  Elements are
GF(2)-sums of admissible monomials stored as frozensets.
"""

from __future__ import annotations

import enum
import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .f2core import Reducer, iter_bits
from .series import PoincareSeries

Monomial = tuple[int, ...]


def binom2(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) mod 2 via Lucas' theorem."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


def is_admissible(m: Sequence[int]) -> bool:
    return all(x >= 1 for x in m) and all(m[j] >= 2 * m[j + 1] for j in range(len(m) - 1))


def excess(m: Sequence[int]) -> int:
    if not m:
        return 0
    return m[0] - sum(m[1:])


def _toggle(acc: set, items: Iterable) -> None:
    for x in items:
        if x in acc:
            acc.remove(x)
        else:
            acc.add(x)


@lru_cache(maxsize=None)
def _sq_times(a: int, m: Monomial) -> frozenset:
    """Sq^a times an admissible monomial, as a set of admissible monomials."""
    if a == 0:
        return frozenset([m])
    if not m or a >= 2 * m[0]:
        return frozenset([(a,) + m])
    b, rest = m[0], m[1:]
    acc: set = set()
    for c in range(a // 2 + 1):
        if binom2(b - c - 1, a - 2 * c):
            for t in _sq_times(c, rest):
                _toggle(acc, _sq_times(a + b - c, t))
    return frozenset(acc)


@lru_cache(maxsize=None)
def adem_normalize_word(word: Monomial) -> frozenset:
    """Admissible expansion of an arbitrary word Sq^w1 ... Sq^wk."""
    word = tuple(x for x in word if x != 0)
    if is_admissible(word):
        return frozenset([word])
    tail = adem_normalize_word(word[1:])
    acc: set = set()
    for t in tail:
        _toggle(acc, _sq_times(word[0], t))
    return frozenset(acc)


def render_monomial(m: Monomial) -> str:
    return " ".join("Sq%d" % i for i in m) if m else "1"


def _sort_key(m: Monomial):
    return (sum(m), m)


class SteenrodElement:
    """Immutable GF(2)-sum of admissible monomials."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Iterable[Monomial] = ()):
        acc: set = set()
        for t in terms:
            t = tuple(t)
            if not is_admissible(t):
                raise ValueError("not admissible: %r" % (t,))
            _toggle(acc, [t])
        self.terms = frozenset(acc)
        self._hash = None

    @classmethod
    def _raw(cls, terms: frozenset) -> "SteenrodElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "SteenrodElement":
        return cls._raw(frozenset())

    @classmethod
    def one(cls) -> "SteenrodElement":
        return cls._raw(frozenset([()]))

    @classmethod
    def sq(cls, *word: int) -> "SteenrodElement":
        """The (normalized) composite Sq^w1 ... Sq^wk."""
        return adem_normalize(word)

    @property
    def degree(self) -> Optional[int]:
        degs = {sum(t) for t in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def is_homogeneous(self) -> bool:
        return len({sum(t) for t in self.terms}) <= 1

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, SteenrodElement) and self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __add__(self, other: "SteenrodElement") -> "SteenrodElement":
        return SteenrodElement._raw(self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "SteenrodElement") -> "SteenrodElement":
        return multiply(self, other)

    def sorted_terms(self) -> list[Monomial]:
        return sorted(self.terms, key=_sort_key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(render_monomial(m) for m in sorted(self.terms, key=lambda m: (-sum(m), [-x for x in m])))

    def __repr__(self) -> str:
        return "SteenrodElement(%s)" % self


def adem_normalize(word: Sequence[int]) -> SteenrodElement:
    if any(x < 0 for x in word):
        raise ValueError("negative Steenrod square")
    return SteenrodElement._raw(adem_normalize_word(tuple(word)))


@lru_cache(maxsize=None)
def multiply_monomials(a: Monomial, b: Monomial) -> frozenset:
    return adem_normalize_word(a + b)


def multiply(a: SteenrodElement, b: SteenrodElement) -> SteenrodElement:
    acc: set = set()
    for x in a.terms:
        for y in b.terms:
            _toggle(acc, multiply_monomials(x, y))
    return SteenrodElement._raw(frozenset(acc))


@lru_cache(maxsize=None)
def coproduct_monomial(m: Monomial) -> frozenset:
    """Cartan coproduct of an admissible monomial as a set of monomial pairs."""
    acc: set = set()
    for split in itertools.product(*[range(i + 1) for i in m]):
        left = adem_normalize_word(split)
        if not left:
            continue
        right = adem_normalize_word(tuple(i - s for i, s in zip(m, split)))
        for x in left:
            for y in right:
                _toggle(acc, [(x, y)])
    return frozenset(acc)


def coproduct(a: SteenrodElement) -> frozenset:
    """Cartan coproduct; a GF(2)-sum of (left monomial, right monomial) pairs."""
    acc: set = set()
    for m in a.terms:
        _toggle(acc, coproduct_monomial(m))
    return frozenset(acc)


def tensor_multiply(x: frozenset, y: frozenset) -> frozenset:
    """Componentwise product in A (x) A."""
    acc: set = set()
    for a1, a2 in x:
        for b1, b2 in y:
            left = multiply_monomials(a1, b1)
            if not left:
                continue
            right = multiply_monomials(a2, b2)
            for l in left:
                for r in right:
                    _toggle(acc, [(l, r)])
    return frozenset(acc)


def render_tensor(x: frozenset) -> str:
    if not x:
        return "0"
    return " + ".join(
        "%s (x) %s" % (render_monomial(l), render_monomial(r))
        for l, r in sorted(x, key=lambda p: (_sort_key(p[0]), _sort_key(p[1])))
    )


class AlgebraId(enum.Enum):
    FullA = "A"
    A1 = "A1"


def _admissible(degree: int, max_first: int) -> Iterator[Monomial]:
    if degree == 0:
        yield ()
        return
    for first in range(min(degree, max_first), 0, -1):
        rest = degree - first
        # the tail starts with at most first // 2
        for tail in _admissible(rest, first // 2):
            yield (first,) + tail


@lru_cache(maxsize=None)
def admissible_monomials(degree: int) -> tuple[Monomial, ...]:
    """All admissible monomials of the given degree, in a fixed order."""
    if degree < 0:
        raise ValueError("negative degree")
    return tuple(sorted(_admissible(degree, degree)))


def _words12(degree: int) -> Iterator[Monomial]:
    if degree == 0:
        yield ()
        return
    for g in (1, 2):
        if g <= degree:
            for w in _words12(degree - g):
                yield (g,) + w


@lru_cache(maxsize=None)
def a1_basis_words(degree: int) -> tuple[tuple[Monomial, SteenrodElement], ...]:
    """A basis of A(1) in ``degree`` as (word in Sq1/Sq2, normalized value).

    Words are scanned in lexicographic order and kept when they enlarge the
    span inside the admissible basis of A.
    """
    if degree < 0:
        raise ValueError("negative degree")
    index = {m: i for i, m in enumerate(admissible_monomials(degree))}
    red = Reducer()
    out = []
    for w in sorted(_words12(degree)):
        value = adem_normalize(w)
        if red.add(_coords(value, index)):
            out.append((w, value))
    return tuple(out)


def _coords(x: SteenrodElement, index: dict) -> int:
    v = 0
    for m in x.terms:
        v ^= 1 << index[m]
    return v


def basis(alg: AlgebraId, degree: int) -> list[SteenrodElement]:
    """Basis of the degree-``degree`` part of ``alg``.

    For the full algebra these are the admissible monomials; for A(1) they are
    products of Sq1 and Sq2 chosen by row reduction (not necessarily single
    monomials, e.g. Sq5 + Sq4 Sq1 in degree 5).
    """
    if degree < 0:
        raise ValueError("negative degree")
    if alg is AlgebraId.FullA:
        return [SteenrodElement._raw(frozenset([m])) for m in admissible_monomials(degree)]
    return [v for _, v in a1_basis_words(degree)]


def dimension_series(alg: AlgebraId, max_degree: int) -> PoincareSeries:
    return PoincareSeries(tuple(len(basis(alg, d)) for d in range(max_degree + 1)))


class A1Coordinates:
    """Express elements of A(1) in the basis returned by ``a1_basis_words``."""

    def __init__(self, degree: int):
        self.degree = degree
        self.words = a1_basis_words(degree)
        self.index = {m: i for i, m in enumerate(admissible_monomials(degree))}
        red = Reducer()
        self._combo: dict[int, int] = {}
        for j, (_, value) in enumerate(self.words):
            v, c = _coords(value, self.index), 1 << j
            for p in sorted(red.rows):
                if (v >> p) & 1:
                    v ^= red.rows[p]
                    c ^= self._combo[p]
            p = (v & -v).bit_length() - 1
            red.rows[p] = v
            red.pivot_mask |= 1 << p
            self._combo[p] = c
        self._red = red

    def coordinates(self, x: SteenrodElement) -> Optional[int]:
        """Bitmask over basis indices, or None when x is not in A(1)."""
        if not x:
            return 0
        if x.degree != self.degree:
            return None
        v, c = _coords(x, self.index), 0
        for p in sorted(self._red.rows):
            if (v >> p) & 1:
                v ^= self._red.rows[p]
                c ^= self._combo[p]
        return None if v else c


@lru_cache(maxsize=None)
def a1_coordinates(degree: int) -> A1Coordinates:
    return A1Coordinates(degree)


def in_a1(x: SteenrodElement) -> bool:
    if not x:
        return True
    if not x.is_homogeneous():
        return all(in_a1(SteenrodElement._raw(frozenset(t for t in x.terms if sum(t) == d)))
                   for d in {sum(t) for t in x.terms})
    return a1_coordinates(x.degree).coordinates(x) is not None


def a1_decompose(x: SteenrodElement) -> list[Monomial]:
    """Words in Sq1/Sq2 whose sum equals x; raises ValueError if x is not in A(1)."""
    out: list[Monomial] = []
    for d in sorted({sum(t) for t in x.terms}):
        part = SteenrodElement._raw(frozenset(t for t in x.terms if sum(t) == d))
        c = a1_coordinates(d).coordinates(part) if d <= 6 else None
        if c is None:
            raise ValueError("%s is not in A(1)" % part)
        words = a1_basis_words(d)
        out.extend(words[j][0] for j in iter_bits(c))
    return out
