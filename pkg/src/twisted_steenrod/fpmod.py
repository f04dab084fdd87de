"""Finitely presented graded left modules, realized degree by degree.

A module is presented by generators (name, degree) and relations
``sum coef * gen`` over one of four acting algebras.  Realizing it up to a
degree bound means, in each degree d,

* ambient space: (algebra basis of degree d - |g|) * g over all generators g,
* submodule: span of (algebra basis element) * (relation),
* module basis: the non-pivot ambient coordinates (see ``f2core.quotient_basis``).

Ambient coordinates are ordered lexicographically by (generator name,
rendering of the algebra basis element), which makes bases deterministic.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Iterable, Optional, Union

from .f2core import BitMatrix, Reducer, iter_bits
from .series import PoincareSeries
from .steenrod import (
    SteenrodElement,
    a1_basis_words,
    a1_coordinates,
    admissible_monomials,
    coproduct_monomial,
    in_a1,
    render_monomial,
)
from .twisted import (
    TwistedElement,
    in_twisted_a1,
    phi,
    render_term,
    term_degree,
)
from .unstable import K, monomials

Element = Union[SteenrodElement, TwistedElement]


class AlgebraKind(enum.Enum):
    FullA = "FullA"
    A1 = "A1"
    FullTwisted = "FullTwisted"
    TwistedA1 = "TwistedA1"

    @property
    def twisted(self) -> bool:
        return self in (AlgebraKind.FullTwisted, AlgebraKind.TwistedA1)


class PresentationError(ValueError):
    pass


# ------------------------------------------------------------ algebra backends


class _Backend:
    """Degreewise basis, coordinates and products for one acting algebra."""

    kind: AlgebraKind

    def one(self) -> Element:
        raise NotImplementedError

    def contains(self, x: Element) -> bool:
        raise NotImplementedError

    def degree(self, x: Element) -> Optional[int]:
        return x.degree

    def labels(self, d: int) -> list[str]:
        raise NotImplementedError

    def factored_basis(self, d: int) -> list[tuple[Element, list]]:
        """Basis of degree d as {(k (x) 1) * s}: pairs (s, list of K-monomials k)."""
        raise NotImplementedError

    def basis_element(self, d: int, i: int) -> Element:
        raise NotImplementedError

    def coords(self, x: Element, d: int) -> int:
        """Bitmask over basis(d); x must lie in the algebra."""
        raise NotImplementedError

    def poly_shift(self, k, x: Element) -> Element:
        return x

    def generators(self, max_degree: int) -> list[tuple[str, Element]]:
        raise NotImplementedError


class _SteenrodBackend(_Backend):
    def __init__(self, kind: AlgebraKind):
        self.kind = kind

    def one(self):
        return SteenrodElement.one()

    def contains(self, x):
        return True if self.kind is AlgebraKind.FullA else in_a1(x)

    @lru_cache(maxsize=None)
    def _basis(self, d: int) -> tuple:
        if d < 0:
            return ()
        if self.kind is AlgebraKind.FullA:
            return tuple(SteenrodElement._raw(frozenset([m])) for m in admissible_monomials(d))
        if d > 6:
            return ()
        return tuple(v for _, v in a1_basis_words(d))

    @lru_cache(maxsize=None)
    def _order(self, d: int) -> tuple:
        """Basis indices sorted by rendering."""
        b = self._basis(d)
        return tuple(sorted(range(len(b)), key=lambda i: str(b[i])))

    def labels(self, d):
        b = self._basis(d)
        return [str(b[i]) for i in self._order(d)]

    def basis_element(self, d, i):
        return self._basis(d)[self._order(d)[i]]

    def factored_basis(self, d):
        return [(self.basis_element(d, i), [None]) for i in range(len(self._basis(d)))]

    @lru_cache(maxsize=None)
    def _index(self, d: int) -> dict:
        return {next(iter(self._basis(d)[j].terms)): pos for pos, j in enumerate(self._order(d))}

    @lru_cache(maxsize=None)
    def _a1_position(self, d: int) -> tuple:
        inv = [0] * len(self._order(d))
        for pos, j in enumerate(self._order(d)):
            inv[j] = pos
        return tuple(inv)

    def coords(self, x, d):
        if not x:
            return 0
        if self.kind is AlgebraKind.FullA:
            idx = self._index(d)
            v = 0
            for m in x.terms:
                v ^= 1 << idx[m]
            return v
        c = a1_coordinates(d).coordinates(x) if d <= 6 else None
        if c is None:
            raise PresentationError("%s is not in A(1)" % x)
        pos = self._a1_position(d)
        v = 0
        for j in iter_bits(c):
            v |= 1 << pos[j]
        return v

    def generators(self, max_degree):
        if self.kind is AlgebraKind.A1:
            return [("Sq1", SteenrodElement.sq(1)), ("Sq2", SteenrodElement.sq(2))]
        out, i = [], 1
        while i <= max(max_degree, 1):
            out.append(("Sq%d" % i, SteenrodElement.sq(i)))
            i *= 2
        return out


class _TwistedBackend(_Backend):
    def __init__(self, kind: AlgebraKind):
        self.kind = kind

    def one(self):
        return TwistedElement.one()

    def contains(self, x):
        return True if self.kind is AlgebraKind.FullTwisted else in_twisted_a1(x)

    def _steenrod_parts(self, j: int) -> list[tuple[str, frozenset]]:
        """(rendering, set of admissible monomials) for the A or A(1) basis in degree j."""
        if self.kind is AlgebraKind.FullTwisted:
            return [(render_monomial(m), frozenset([m])) for m in admissible_monomials(j)]
        if j > 6:
            return []
        return [(str(v), v.terms) for _, v in a1_basis_words(j)]

    @lru_cache(maxsize=None)
    def _basis(self, d: int) -> tuple:
        """Sorted tuple of (label, K-monomial, steenrod part index, degree j)."""
        if d < 0:
            return ()
        items = []
        for j in range(d + 1):
            for si, (sname, _) in enumerate(self._steenrod_parts(j)):
                for k in monomials(K, d - j):
                    label = render_term((k, ())).split(" | ")[0] + " | " + sname
                    items.append((label, k, j, si))
        items.sort(key=lambda t: t[0])
        return tuple(items)

    def labels(self, d):
        return [t[0] for t in self._basis(d)]

    def basis_element(self, d, i):
        _, k, j, si = self._basis(d)[i]
        ms = self._steenrod_parts(j)[si][1]
        return TwistedElement._raw(frozenset((k, m) for m in ms))

    def factored_basis(self, d):
        groups: dict = {}
        for j in range(d + 1):
            for si, (_, ms) in enumerate(self._steenrod_parts(j)):
                groups[(j, si)] = (TwistedElement._raw(frozenset(((), m) for m in ms)), list(monomials(K, d - j)))
        return list(groups.values())

    @lru_cache(maxsize=None)
    def _index(self, d: int) -> dict:
        if self.kind is AlgebraKind.FullTwisted:
            out = {}
            for pos, (_, k, j, si) in enumerate(self._basis(d)):
                (m,) = self._steenrod_parts(j)[si][1]
                out[(k, m)] = pos
            return out
        return {(k, j, si): pos for pos, (_, k, j, si) in enumerate(self._basis(d))}

    def coords(self, x, d):
        idx = self._index(d)
        if self.kind is AlgebraKind.FullTwisted:
            v = 0
            for t in x.terms:
                v ^= 1 << idx[t]
            return v
        groups: dict = {}
        for k, m in x.terms:
            groups.setdefault(k, []).append(m)
        v = 0
        for k, ms in groups.items():
            j = sum(ms[0])
            c = a1_coordinates(j).coordinates(SteenrodElement._raw(frozenset(ms))) if j <= 6 else None
            if c is None:
                raise PresentationError("%s is not in the twisted A(1)" % x)
            for si in iter_bits(c):
                v ^= 1 << idx[(k, j, si)]
        return v

    def poly_shift(self, k, x):
        if k is None or not k:
            return x
        return x.left_poly_multiply(k)

    def generators(self, max_degree):
        out = []
        if self.kind is AlgebraKind.TwistedA1:
            out += [("1 | Sq1", TwistedElement([((), (1,))])), ("1 | Sq2", TwistedElement([((), (2,))]))]
        else:
            i = 1
            while i <= max(max_degree, 1):
                out.append(("1 | Sq%d" % i, TwistedElement([((), (i,))])))
                i *= 2
        for g in range(K.num_generators(max(max_degree, 1))):
            k = (0,) * g + (1,)
            out.append((render_term((k, ())), TwistedElement([(k, ())])))
        return out


_BACKENDS = {
    AlgebraKind.FullA: _SteenrodBackend(AlgebraKind.FullA),
    AlgebraKind.A1: _SteenrodBackend(AlgebraKind.A1),
    AlgebraKind.FullTwisted: _TwistedBackend(AlgebraKind.FullTwisted),
    AlgebraKind.TwistedA1: _TwistedBackend(AlgebraKind.TwistedA1),
}


def backend(kind: AlgebraKind) -> _Backend:
    return _BACKENDS[kind]


def algebra_labels(kind: AlgebraKind, degree: int) -> list[str]:
    return backend(kind).labels(degree)


# --------------------------------------------------------------- presentations


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int


Relation = tuple  # tuple of (coefficient element, generator name)


@dataclass(frozen=True)
class ModulePresentation:
    algebra: AlgebraKind
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...] = ()

    def __post_init__(self):
        names = [g.name for g in self.generators]
        if len(set(names)) != len(names):
            raise PresentationError("duplicate generator names")
        gdeg = {g.name: g.degree for g in self.generators}
        be = backend(self.algebra)
        rels = []
        for r in self.relations:
            r = tuple((c, name) for c, name in r)
            degs = set()
            for c, name in r:
                if name not in gdeg:
                    raise PresentationError("relation references unknown generator %r" % name)
                if not isinstance(c, (TwistedElement if self.algebra.twisted else SteenrodElement)):
                    raise PresentationError("coefficient %r has the wrong type for %s" % (c, self.algebra.value))
                if not c:
                    continue
                if c.degree is None:
                    raise PresentationError("inhomogeneous coefficient %s" % c)
                if not be.contains(c):
                    raise PresentationError("coefficient %s is not in %s" % (c, self.algebra.value))
                degs.add(c.degree + gdeg[name])
            if len(degs) > 1:
                raise PresentationError("relation is not homogeneous: degrees %s" % sorted(degs))
            rels.append(r)
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def cyclic(cls, algebra: AlgebraKind, relations: Iterable[Element] = (), name: str = "g", degree: int = 0):
        return cls(algebra, (Generator(name, degree),), tuple(((c, name),) for c in relations))

    def generator_degree(self, name: str) -> int:
        for g in self.generators:
            if g.name == name:
                return g.degree
        raise KeyError(name)

    def relation_degree(self, r: Relation) -> Optional[int]:
        for c, name in r:
            if c:
                return c.degree + self.generator_degree(name)
        return None

    def shifted(self, k: int) -> "ModulePresentation":
        return ModulePresentation(
            self.algebra, tuple(Generator(g.name, g.degree + k) for g in self.generators), self.relations
        )

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra.value,
            "generators": [{"name": g.name, "degree": g.degree} for g in self.generators],
            "relations": [[{"coef": str(c), "gen": name} for c, name in r] for r in self.relations],
        }

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> "ModulePresentation":
        from .expr import parse_steenrod, parse_twisted

        if isinstance(data, str):
            data = json.loads(data)
        try:
            algebra = AlgebraKind(data["algebra"])
        except (KeyError, ValueError) as exc:
            raise PresentationError("bad or missing algebra: %s" % exc) from None
        gens = tuple(Generator(str(g["name"]), int(g["degree"])) for g in data.get("generators", []))
        parse = parse_twisted if algebra.twisted else parse_steenrod
        rels = []
        for r in data.get("relations", []):
            rels.append(tuple((parse(t["coef"]), str(t["gen"])) for t in r))
        return cls(algebra, gens, tuple(rels))


def induce_along_phi(p: ModulePresentation) -> ModulePresentation:
    """Twisted algebra (x)_{A(1)} M via phi: same generators, coefficients phi(a)."""
    if p.algebra is not AlgebraKind.A1:
        raise PresentationError("induction along phi needs an A(1)-module")
    rels = tuple(tuple((phi(c), name) for c, name in r) for r in p.relations)
    return ModulePresentation(AlgebraKind.FullTwisted, p.generators, rels)


# ----------------------------------------------------------------- realization


class _Degree:
    __slots__ = ("ambient", "offsets", "reducer", "basis", "position")

    def __init__(self, ambient, offsets, reducer, basis):
        self.ambient = ambient  # list of (gen name, algebra basis index)
        self.offsets = offsets  # gen name -> (offset, algebra degree)
        self.reducer = reducer
        self.basis = basis  # ambient indices of the module basis
        self.position = {a: i for i, a in enumerate(basis)}


class ModuleRealization:
    """Degreewise bases and action of a presented module, built on demand."""

    def __init__(self, presentation: ModulePresentation, max_degree: int):
        if max_degree < 0:
            raise ValueError("max_degree must be >= 0")
        self.presentation = presentation
        self.backend = backend(presentation.algebra)
        self.max_degree = max_degree
        self._degrees: dict[int, _Degree] = {}
        self._gens = sorted(presentation.generators, key=lambda g: g.name)

    # -- construction

    def _ambient(self, d: int):
        ambient, offsets = [], {}
        for g in self._gens:
            e = d - g.degree
            labels = self.backend.labels(e) if e >= 0 else []
            offsets[g.name] = (len(ambient), e)
            ambient.extend((g.name, i) for i in range(len(labels)))
        return ambient, offsets

    def _vector(self, offsets: dict, parts: Iterable[tuple[Element, str]]) -> int:
        v = 0
        for x, name in parts:
            if not x:
                continue
            off, e = offsets[name]
            c = self.backend.coords(x, e)
            v ^= c << off
        return v

    def _degree(self, d: int) -> _Degree:
        if d in self._degrees:
            return self._degrees[d]
        if d < 0 or d > self.max_degree:
            raise ValueError("degree %d outside realized range 0..%d" % (d, self.max_degree))
        ambient, offsets = self._ambient(d)
        red = Reducer()
        be = self.backend
        for r in self.presentation.relations:
            rd = self.presentation.relation_degree(r)
            if rd is None or rd > d:
                continue
            for s, ks in be.factored_basis(d - rd):
                prods = [(s * c, name) for c, name in r]
                for k in ks:
                    red.add(self._vector(offsets, [(be.poly_shift(k, x), n) for x, n in prods]))
        basis = [i for i in range(len(ambient)) if not (red.pivot_mask >> i) & 1]
        out = _Degree(ambient, offsets, red, basis)
        self._degrees[d] = out
        return out

    def extend(self, max_degree: int) -> "ModuleRealization":
        self.max_degree = max(self.max_degree, max_degree)
        return self

    # -- queries

    def dim(self, d: int) -> int:
        if d < 0 or d > self.max_degree:
            return 0
        return len(self._degree(d).basis)

    def poincare(self, max_degree: Optional[int] = None) -> PoincareSeries:
        n = self.max_degree if max_degree is None else max_degree
        if n > self.max_degree:
            raise ValueError("realized only through degree %d" % self.max_degree)
        return PoincareSeries(tuple(self.dim(d) for d in range(n + 1)))

    def basis_labels(self, d: int) -> list[str]:
        deg = self._degree(d)
        out = []
        for a in deg.basis:
            name, i = deg.ambient[a]
            _, e = deg.offsets[name]
            lab = self.backend.labels(e)[i]
            out.append(name if lab in ("1", "1 | 1") else ("%s %s" % (_paren(lab), name)))
        return out

    def render(self, d: int, vec: int) -> str:
        labels = self.basis_labels(d)
        if not vec:
            return "0"
        return " + ".join(labels[i] for i in iter_bits(vec))

    def generator_vector(self, name: str) -> int:
        """Coordinates of the image of a generator in its own degree."""
        d = self.presentation.generator_degree(name)
        return self.reduce(d, self._vector(self._degree(d).offsets, [(self.backend.one(), name)]))

    def reduce(self, d: int, ambient_vec: int) -> int:
        """Class of an ambient vector, in module-basis coordinates."""
        deg = self._degree(d)
        v = deg.reducer.reduce(ambient_vec)
        out = 0
        for a in iter_bits(v):
            out |= 1 << deg.position[a]
        return out

    def element(self, d: int, parts: Iterable[tuple[Element, str]]) -> int:
        """Class of sum x * gen for algebra elements x of matching degree."""
        return self.reduce(d, self._vector(self._degree(d).offsets, parts))

    def act(self, x: Element, d: int, vec: int) -> int:
        """x * v for v in degree d (module-basis coordinates)."""
        if not x or not vec:
            return 0
        xd = x.degree
        if xd is None:
            raise ValueError("acting element must be homogeneous")
        target = d + xd
        if target > self.max_degree:
            raise ValueError("action leaves realized range (degree %d)" % target)
        deg = self._degree(d)
        parts = []
        for i in iter_bits(vec):
            name, j = deg.ambient[deg.basis[i]]
            _, e = deg.offsets[name]
            parts.append((x * self.backend.basis_element(e, j), name))
        return self.element(target, parts)

    def action_table(self, x: Element, d: int) -> BitMatrix:
        """Matrix of x: degree d -> degree d + |x|; column i is the image of basis vector i."""
        rows = self.dim(d + x.degree)
        cols = [self.act(x, d, 1 << i) for i in range(self.dim(d))]
        data = [0] * rows
        for i, c in enumerate(cols):
            for r in iter_bits(c):
                data[r] |= 1 << i
        return BitMatrix(rows, len(cols), tuple(data))

    def action_tables(self) -> dict[str, list[BitMatrix]]:
        out = {}
        for name, x in self.backend.generators(self.max_degree):
            xd = x.degree
            out[name] = [self.action_table(x, d) for d in range(self.max_degree - xd + 1)]
        return out

    def relation_images(self) -> list[tuple[int, int]]:
        """(degree, class) of every relation times every algebra basis element."""
        out = []
        for r in self.presentation.relations:
            rd = self.presentation.relation_degree(r)
            if rd is None:
                continue
            for d in range(rd, self.max_degree + 1):
                for s, ks in self.backend.factored_basis(d - rd):
                    for k in ks:
                        b = self.backend.poly_shift(k, s)
                        vec = 0
                        for c, name in r:
                            gd = self.presentation.generator_degree(name)
                            vec ^= self.act(b * c, gd, self.generator_vector(name))
                        out.append((d, vec))
        return out

    def to_json(self, with_basis: bool = False, with_actions: bool = False) -> dict:
        out: dict[str, Any] = {
            "algebra": self.presentation.algebra.value,
            "max_degree": self.max_degree,
            "dims": list(self.poincare().dims),
        }
        if with_basis:
            out["basis"] = {str(d): self.basis_labels(d) for d in range(self.max_degree + 1)}
        if with_actions:
            out["actions"] = {
                name: [m.to_lists() for m in tables] for name, tables in self.action_tables().items()
            }
        return out


def _paren(label: str) -> str:
    return "(%s)" % label if (" " in label) else label


_REALIZATIONS: dict = {}


def realize(p: ModulePresentation, max_degree: int) -> ModuleRealization:
    """Realization through ``max_degree``; degrees already computed are reused."""
    if max_degree < 0:
        raise ValueError("max_degree must be >= 0")
    r = _REALIZATIONS.get(p)
    if r is None:
        r = _REALIZATIONS[p] = ModuleRealization(p, max_degree)
    r.extend(max_degree)
    view = ModuleRealization.__new__(ModuleRealization)
    view.__dict__.update(r.__dict__)
    view.max_degree = max_degree
    return view


def poincare(r: "ModuleRealization | TensorRealization") -> PoincareSeries:
    return r.poincare()


# ---------------------------------------------------------------------- tensor


class TensorRealization:
    """M (x) T for an A-module M and a twisted module T, twisted action by

        (k (x) a)(x (x) y) = sum a'(x) (x) (k (x) a'')(y).
    """

    def __init__(self, m: ModuleRealization, t: ModuleRealization, max_degree: int):
        if m.presentation.algebra is not AlgebraKind.FullA:
            raise ValueError("left factor must be an A-module")
        if t.presentation.algebra is not AlgebraKind.FullTwisted:
            raise ValueError("right factor must be a twisted module")
        self.m, self.t, self.max_degree = m, t, max_degree
        self._index: dict[int, dict] = {}

    def _layout(self, d: int) -> dict:
        if d not in self._index:
            pairs = []
            for p in range(d + 1):
                if p > self.m.max_degree or d - p > self.t.max_degree:
                    continue
                for i in range(self.m.dim(p)):
                    for j in range(self.t.dim(d - p)):
                        pairs.append((p, i, j))
            self._index[d] = {pr: n for n, pr in enumerate(pairs)}
        return self._index[d]

    def dim(self, d: int) -> int:
        return len(self._layout(d))

    def poincare(self, max_degree: Optional[int] = None) -> PoincareSeries:
        n = self.max_degree if max_degree is None else max_degree
        return PoincareSeries(tuple(self.dim(d) for d in range(n + 1)))

    def pure(self, p: int, x: int, q: int, y: int) -> int:
        """x (x) y for x in M_p, y in T_q."""
        lay = self._layout(p + q)
        v = 0
        for i in iter_bits(x):
            for j in iter_bits(y):
                v ^= 1 << lay[(p, i, j)]
        return v

    def contributions(self, x: TwistedElement, d: int, vec: int) -> list[tuple[str, int, int]]:
        """Unsummed pieces of x * vec: (description, target degree, vector)."""
        lay = self._layout(d)
        rev = {n: pr for pr, n in lay.items()}
        out = []
        for n in iter_bits(vec):
            p, i, j = rev[n]
            for k, a in sorted(x.terms):
                for a1, a2 in sorted(coproduct_monomial(a)):
                    left = self.m.act(SteenrodElement._raw(frozenset([a1])), p, 1 << i)
                    right = self.t.act(TwistedElement._raw(frozenset([(k, a2)])), d - p, 1 << j)
                    desc = "(%s)[%s (x) %s]" % (render_term((k, a)), render_monomial(a1), render_term((k, a2)))
                    v = self.pure(p + sum(a1), left, d - p + term_degree((k, a2)), right) if left and right else 0
                    out.append((desc, d + x.degree, v))
        return out

    def act(self, x: TwistedElement, d: int, vec: int) -> int:
        out = 0
        for _, _, v in self.contributions(x, d, vec):
            out ^= v
        return out

    def basis_labels(self, d: int) -> list[str]:
        lay = self._layout(d)
        out = [""] * len(lay)
        for (p, i, j), n in lay.items():
            out[n] = "%s (x) %s" % (self.m.basis_labels(p)[i], self.t.basis_labels(d - p)[j])
        return out

    def render(self, d: int, vec: int) -> str:
        if not vec:
            return "0"
        labels = self.basis_labels(d)
        return " + ".join(labels[i] for i in iter_bits(vec))


def tensor_with_plain(m: ModuleRealization, t: ModuleRealization, max_degree: int) -> TensorRealization:
    return TensorRealization(m, t, max_degree)


# ----------------------------------------------------------- named modules


def trivial_a1() -> ModulePresentation:
    """Z/2 = A(1)/(Sq1, Sq2)."""
    return ModulePresentation.cyclic(AlgebraKind.A1, [SteenrodElement.sq(1), SteenrodElement.sq(2)])


def joker_a1() -> ModulePresentation:
    """A(1)/A(1)Sq3."""
    return ModulePresentation.cyclic(AlgebraKind.A1, [SteenrodElement.sq(3)])


def free_module(kind: AlgebraKind, name: str = "g", degree: int = 0) -> ModulePresentation:
    return ModulePresentation.cyclic(kind, [], name, degree)


def a_mod_a1_plus() -> ModulePresentation:
    """A/A(Sq1, Sq2), the cohomology of ko."""
    return ModulePresentation.cyclic(AlgebraKind.FullA, [SteenrodElement.sq(1), SteenrodElement.sq(2)])


def a_mod_sq3(name: str = "g", degree: int = 0) -> ModulePresentation:
    return ModulePresentation.cyclic(AlgebraKind.FullA, [SteenrodElement.sq(3)], name, degree)


def k2o_presentation(name: str = "kappa") -> ModulePresentation:
    """Twisted algebra modulo phi(Sq1), phi(Sq2)."""
    return ModulePresentation.cyclic(
        AlgebraKind.FullTwisted, [phi(SteenrodElement.sq(1)), phi(SteenrodElement.sq(2))], name
    )


def k2o2_presentation(name: str = "kappa") -> ModulePresentation:
    """Twisted algebra modulo phi(Sq3)."""
    return ModulePresentation.cyclic(AlgebraKind.FullTwisted, [phi(SteenrodElement.sq(3))], name)


def milnor_moore_presentation(name: str = "g") -> ModulePresentation:
    """Twisted algebra modulo the left ideal on phi of every positive A(1) basis element."""
    rels = [phi(v) for d in range(1, 7) for _, v in a1_basis_words(d)]
    return ModulePresentation.cyclic(AlgebraKind.FullTwisted, rels, name)
