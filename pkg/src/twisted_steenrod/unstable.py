"""Unstable polynomial algebras with Steenrod action.

Two ambients are supported:

* ``KType`` -- H*(K(Z/2,1) x K(Z/2,2)), free on i1 and the Serre generators
  Sq^I i2 (I admissible of excess at most 1).  Generator 0 is i1, generator
  ``k >= 1`` is ``Sq^(2^(k-2)) ... Sq^2 Sq^1 i2`` (so generator 1 is i2).
* ``BOType(n)`` -- H*(BO(n)) = F2[w1, ..., wn]; generator ``j - 1`` is w_j.

A monomial is the tuple of generator exponents with trailing zeros removed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Union

from .f2core import Reducer
from .series import PoincareSeries
from .steenrod import (
    adem_normalize_word,
    admissible_monomials,
    binom2,
    render_monomial,
)

PolyMonomial = tuple[int, ...]

# H*(BSpin) as H*(BO)/(Steenrod-closed ideal on w1, w2) is only trusted here
BSPIN_MAX_DEGREE = 31


@dataclass(frozen=True)
class KType:
    """H*(K) for K = K(Z/2,1) x K(Z/2,2)."""

    def generator_degree(self, k: int) -> int:
        return 1 if k == 0 else (1 << (k - 1)) + 1

    def generator_word(self, k: int) -> tuple[int, ...]:
        """Admissible word I with generator k = Sq^I i2 (k >= 1)."""
        if k < 1:
            raise ValueError("generator 0 is i1")
        return tuple(1 << j for j in range(k - 2, -1, -1))

    def generator_name(self, k: int) -> str:
        if k == 0:
            return "i1"
        word = self.generator_word(k)
        return "i2" if not word else render_monomial(word) + " i2"

    def num_generators(self, max_degree: int) -> int:
        k = 0
        while self.generator_degree(k) <= max_degree:
            k += 1
        return k

    def __str__(self) -> str:
        return "K"


@dataclass(frozen=True)
class BOType:
    """H*(BO(n)) on Stiefel-Whitney classes w1..wn."""

    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative variable bound")

    def generator_degree(self, k: int) -> int:
        return k + 1

    def generator_name(self, k: int) -> str:
        return "w%d" % (k + 1)

    def num_generators(self, max_degree: int) -> int:
        return min(self.n, max(max_degree, 0))

    def __str__(self) -> str:
        return "BO(%d)" % self.n


Ambient = Union[KType, BOType]
K = KType()


@dataclass(frozen=True)
class UGenerator:
    kind: str  # "iota1", "iota2", "sw"
    word: tuple[int, ...] = ()
    index: int = 0

    @property
    def degree(self) -> int:
        if self.kind == "iota1":
            return 1
        if self.kind == "iota2":
            return 2 + sum(self.word)
        return self.index

    def __str__(self) -> str:
        if self.kind == "iota1":
            return "i1"
        if self.kind == "iota2":
            return "i2" if not self.word else render_monomial(self.word) + " i2"
        return "w%d" % self.index


def generators_up_to(ambient: Ambient, max_degree: int) -> list[UGenerator]:
    if isinstance(ambient, KType):
        out = []
        for k in range(ambient.num_generators(max_degree)):
            if k == 0:
                out.append(UGenerator("iota1"))
            else:
                out.append(UGenerator("iota2", ambient.generator_word(k)))
        return out
    return [UGenerator("sw", index=j) for j in range(1, ambient.num_generators(max_degree) + 1)]


def _mono_mul(a: PolyMonomial, b: PolyMonomial) -> PolyMonomial:
    if len(a) < len(b):
        a, b = b, a
    return tuple(x + y for x, y in itertools.zip_longest(a, b, fillvalue=0))


def _mono_degree(ambient: Ambient, m: PolyMonomial) -> int:
    return sum(e * ambient.generator_degree(k) for k, e in enumerate(m))


def _gen_mono(k: int, e: int = 1) -> PolyMonomial:
    return (0,) * k + (e,)


def _toggle(acc: set, items: Iterable) -> None:
    for x in items:
        if x in acc:
            acc.remove(x)
        else:
            acc.add(x)


def _poly_mul(x: Iterable[PolyMonomial], y: Iterable[PolyMonomial]) -> frozenset:
    acc: set = set()
    y = list(y)
    for a in x:
        for b in y:
            _toggle(acc, [_mono_mul(a, b)])
    return frozenset(acc)


def _square(x: Iterable[PolyMonomial]) -> frozenset:
    return frozenset(tuple(2 * e for e in m) for m in x)


def render_poly_monomial(ambient: Ambient, m: PolyMonomial) -> str:
    parts = []
    alone = sum(1 for e in m if e) == 1
    for k, e in enumerate(m):
        if not e:
            continue
        name = ambient.generator_name(k)
        if " " in name and not (alone and e == 1):
            name = "(%s)" % name
        parts.append(name if e == 1 else "%s^%d" % (name, e))
    return " ".join(parts) if parts else "1"


class PolyElement:
    """Immutable GF(2)-sum of monomials in a fixed ambient algebra."""

    __slots__ = ("ambient", "terms")

    def __init__(self, ambient: Ambient, terms: Iterable[PolyMonomial] = ()):
        acc: set = set()
        for t in terms:
            t = tuple(t)
            while t and t[-1] == 0:
                t = t[:-1]
            if any(e < 0 for e in t):
                raise ValueError("negative exponent")
            if isinstance(ambient, BOType) and len(t) > ambient.n:
                raise ValueError("w%d outside BO(%d)" % (len(t), ambient.n))
            _toggle(acc, [t])
        self.ambient = ambient
        self.terms = frozenset(acc)

    @classmethod
    def _raw(cls, ambient: Ambient, terms: frozenset) -> "PolyElement":
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.terms = terms
        return obj

    @classmethod
    def one(cls, ambient: Ambient) -> "PolyElement":
        return cls._raw(ambient, frozenset([()]))

    @classmethod
    def zero(cls, ambient: Ambient) -> "PolyElement":
        return cls._raw(ambient, frozenset())

    @classmethod
    def generator(cls, ambient: Ambient, k: int, power: int = 1) -> "PolyElement":
        if isinstance(ambient, BOType) and k >= ambient.n:
            return cls.zero(ambient)
        return cls._raw(ambient, frozenset([_gen_mono(k, power)]))

    @property
    def degree(self) -> Optional[int]:
        degs = {_mono_degree(self.ambient, m) for m in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def _check(self, other: "PolyElement") -> None:
        if other.ambient != self.ambient:
            raise ValueError("ambient mismatch: %s vs %s" % (self.ambient, other.ambient))

    def __add__(self, other: "PolyElement") -> "PolyElement":
        self._check(other)
        return PolyElement._raw(self.ambient, self.terms ^ other.terms)

    __sub__ = __add__

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        self._check(other)
        return PolyElement._raw(self.ambient, _poly_mul(self.terms, other.terms))

    def __pow__(self, e: int) -> "PolyElement":
        out = PolyElement.one(self.ambient)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self.terms
        return isinstance(other, PolyElement) and self.ambient == other.ambient and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.ambient, self.terms))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def sq(self, i: int) -> "PolyElement":
        return sq_action(i, self)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        ordered = sorted(self.terms, key=lambda m: (_mono_degree(self.ambient, m), m))
        return " + ".join(render_poly_monomial(self.ambient, m) for m in ordered)

    def __repr__(self) -> str:
        return "PolyElement(%s, %s)" % (self.ambient, self)


# ---------------------------------------------------------------- K-type action


@lru_cache(maxsize=None)
def _eval_iota2(word: tuple[int, ...]) -> frozenset:
    """Sq^word (i2) for an admissible word, via instability."""
    if not word:
        return frozenset([_gen_mono(1)])
    first, rest = word[0], word[1:]
    inner_degree = 2 + sum(rest)
    if first > inner_degree:
        return frozenset()
    if first == inner_degree:
        return _square(_eval_iota2(rest))
    # excess <= 1: a Serre generator
    return frozenset([_gen_mono(len(word) + 1)])


@lru_cache(maxsize=None)
def _sq_gen_k(i: int, k: int) -> frozenset:
    if i == 0:
        return frozenset([_gen_mono(k)])
    if k == 0:
        return frozenset([_gen_mono(0, 2)]) if i == 1 else frozenset()
    acc: set = set()
    for w in adem_normalize_word((i,) + K.generator_word(k)):
        _toggle(acc, _eval_iota2(w))
    return frozenset(acc)


# --------------------------------------------------------------- BO-type action


@lru_cache(maxsize=None)
def _sq_gen_bo(i: int, j: int, n: int) -> frozenset:
    """Wu formula: Sq^i(w_j) in F2[w1..wn]."""
    if i == 0:
        return frozenset([_gen_mono(j - 1)]) if j <= n else frozenset()
    if i > j or j > n:
        return frozenset()
    if i == j:
        return frozenset([_gen_mono(j - 1, 2)])
    acc: set = set()
    for t in range(i + 1):
        if not binom2(j - i + t - 1, t):
            continue
        a, b = i - t, j + t
        if b > n:
            continue
        mono = _gen_mono(b - 1) if a == 0 else _mono_mul(_gen_mono(a - 1), _gen_mono(b - 1))
        _toggle(acc, [mono])
    return frozenset(acc)


def _sq_gen(ambient: Ambient, i: int, k: int) -> frozenset:
    if isinstance(ambient, KType):
        return _sq_gen_k(i, k)
    return _sq_gen_bo(i, k + 1, ambient.n)


@lru_cache(maxsize=None)
def _sq_mono(ambient: Ambient, i: int, m: PolyMonomial) -> frozenset:
    """Cartan formula, peeling one generator off the monomial."""
    if i == 0:
        return frozenset([m])
    if not m:
        return frozenset()
    deg = _mono_degree(ambient, m)
    if i > deg:
        return frozenset()
    if i == deg:
        return frozenset([tuple(2 * e for e in m)])
    k = next(idx for idx, e in enumerate(m) if e)
    rest = list(m)
    rest[k] -= 1
    rest = tuple(rest)
    while rest and rest[-1] == 0:
        rest = rest[:-1]
    gdeg = ambient.generator_degree(k)
    acc: set = set()
    for a in range(min(i, gdeg) + 1):
        left = _sq_gen(ambient, a, k)
        if not left:
            continue
        right = _sq_mono(ambient, i - a, rest)
        if right:
            _toggle(acc, _poly_mul(left, right))
    return frozenset(acc)


def sq_action(i: int, x: PolyElement) -> PolyElement:
    """Sq^i(x) in the ambient unstable algebra of x."""
    if i < 0:
        raise ValueError("negative Steenrod square")
    acc: set = set()
    for m in x.terms:
        _toggle(acc, _sq_mono(x.ambient, i, m))
    return PolyElement._raw(x.ambient, frozenset(acc))


def apply_word(word: Iterable[int], x: PolyElement) -> PolyElement:
    """Apply Sq^w1 ... Sq^wk to x (rightmost square first)."""
    for i in reversed(tuple(word)):
        x = sq_action(i, x)
        if not x:
            break
    return x


@lru_cache(maxsize=None)
def act_monomial(ambient: Ambient, word: tuple[int, ...], m: PolyMonomial) -> frozenset:
    """Sq^word applied to a single monomial (cached)."""
    if not word:
        return frozenset([m])
    inner = act_monomial(ambient, word[1:], m)
    acc: set = set()
    for t in inner:
        _toggle(acc, _sq_mono(ambient, word[0], t))
    return frozenset(acc)


# ------------------------------------------------------------ bases and series


@lru_cache(maxsize=None)
def monomials(ambient: Ambient, degree: int) -> tuple[PolyMonomial, ...]:
    """All monomials of the given degree, in a fixed order."""
    if degree < 0:
        return ()
    gens = ambient.num_generators(degree)
    degs = [ambient.generator_degree(k) for k in range(gens)]

    def rec(k: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if k < 0:
            if remaining == 0:
                yield ()
            return
        for e in range(remaining // degs[k] + 1):
            for head in rec(k - 1, remaining - e * degs[k]):
                yield head + (e,)

    out = set()
    for t in rec(gens - 1, degree):
        t = tuple(t)
        while t and t[-1] == 0:
            t = t[:-1]
        out.add(t)
    return tuple(sorted(out))


def dimension_series(ambient: Ambient, max_degree: int) -> PoincareSeries:
    return PoincareSeries(tuple(len(monomials(ambient, d)) for d in range(max_degree + 1)))


def basis_elements(ambient: Ambient, degree: int) -> list[PolyElement]:
    return [PolyElement._raw(ambient, frozenset([m])) for m in monomials(ambient, degree)]


# ------------------------------------------------------- classifying map i -> w


def _required_vars(m: PolyMonomial) -> int:
    return max((K.generator_degree(k) for k, e in enumerate(m) if e), default=0)


def classify_iota_to_w(x: PolyElement, target: BOType) -> PolyElement:
    """Image under i1 -> w1, i2 -> w2 (Sq^I i2 -> Sq^I w2 by the Wu formula)."""
    if not isinstance(x.ambient, KType):
        raise ValueError("classify_iota_to_w expects an element of H*(K)")
    need = max((_required_vars(m) for m in x.terms), default=0)
    if target.n < need:
        raise ValueError("BO(%d) too small, need at least %d variables" % (target.n, need))
    images = {}
    out = PolyElement.zero(target)
    for m in x.terms:
        term = PolyElement.one(target)
        for k, e in enumerate(m):
            if not e:
                continue
            if k not in images:
                if k == 0:
                    images[k] = PolyElement.generator(target, 0)
                else:
                    images[k] = apply_word(K.generator_word(k), PolyElement.generator(target, 1))
            term = term * images[k] ** e
        out = out + term
    return out


# ------------------------------------------------------------------ Thom class


def thom_sq(i: int, x: PolyElement) -> PolyElement:
    """Sq^i(u x) = u * sum_a w_a Sq^(i-a)(x) for the Thom class u of H*(MO)."""
    if not isinstance(x.ambient, BOType):
        raise ValueError("Thom class lives over a BO-type algebra")
    bo = x.ambient
    out = sq_action(i, x)
    for a in range(1, i + 1):
        out = out + PolyElement.generator(bo, a - 1) * sq_action(i - a, x)
    return out


# -------------------------------------------------------------------- BSpin


def bspin_series(max_degree: int) -> PoincareSeries:
    """Dimensions of H*(BO)/(Steenrod-closed ideal generated by w1, w2).

    Degreewise: I_d = sum_i w_i I_(d-i) + span{Sq^J w1, Sq^J w2 in degree d}.
    """
    if max_degree > BSPIN_MAX_DEGREE:
        raise ValueError("H*(BSpin) model only valid through degree %d" % BSPIN_MAX_DEGREE)
    if max_degree < 0:
        raise ValueError("negative degree")
    bo = BOType(max(max_degree, 2))
    ideal: list[list[frozenset]] = []
    dims = []
    for d in range(max_degree + 1):
        mons = monomials(bo, d)
        index = {m: i for i, m in enumerate(mons)}
        red = Reducer()
        basis_here: list[frozenset] = []

        def push(terms: frozenset) -> None:
            v = 0
            for m in terms:
                v ^= 1 << index[m]
            if red.add(v):
                basis_here.append(terms)

        for k in (1, 2):
            if d - k >= 0:
                for J in admissible_monomials(d - k):
                    push(act_monomial(bo, J, _gen_mono(k - 1)))
        for i in range(1, d + 1):
            wi = _gen_mono(i - 1)
            for terms in ideal[d - i]:
                push(frozenset(_mono_mul(wi, m) for m in terms))
        ideal.append(basis_here)
        dims.append(len(mons) - red.rank)
    return PoincareSeries(tuple(dims))
