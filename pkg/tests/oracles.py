"""Reference computations written independently of the package internals."""

from __future__ import annotations

import itertools
from math import comb


def milnor_dims(max_degree: int) -> list[int]:
    """dim A_d from the Milnor basis: sequences (r1, r2, ...) with sum r_i (2^i - 1) = d."""
    weights = []
    i = 1
    while (1 << i) - 1 <= max(max_degree, 1):
        weights.append((1 << i) - 1)
        i += 1
    out = [0] * (max_degree + 1)
    out[0] = 1
    for w in weights:
        for d in range(w, max_degree + 1):
            out[d] += out[d - w]
    return out


def monomial_count(generator_degrees: list[int], max_degree: int) -> list[int]:
    """Monomials in commuting variables of the given degrees (one variable at a time)."""
    out = [1] + [0] * max_degree
    for g in generator_degrees:
        new = [0] * (max_degree + 1)
        for d in range(max_degree + 1):
            for e in range(d // g + 1):
                new[d] += out[d - e * g]
        out = new
    return out


def k_generator_degrees(max_degree: int) -> list[int]:
    degs = [1]
    k = 0
    while (1 << k) + 1 <= max_degree:
        degs.append((1 << k) + 1)
        k += 1
    return degs


def a1_dual_series() -> list[int]:
    """(1 + t + t^2 + t^3)(1 + t^3)."""
    p = [1, 1, 1, 1]
    q = [1, 0, 0, 1]
    out = [0] * 7
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


# ---- action on F2[x1..xn], all generators of degree 1 ----

Poly = frozenset  # of exponent tuples


def _toggle(acc: set, m) -> None:
    if m in acc:
        acc.remove(m)
    else:
        acc.add(m)


def sq_on_monomial(k: int, m: tuple) -> set:
    """Sq^k of a monomial in degree-one classes: degree-k part of prod (x + x^2)^a."""
    out: set = set()
    choices = [[j for j in range(a + 1) if comb(a, j) % 2] for a in m]
    for js in itertools.product(*choices):
        if sum(js) == k:
            _toggle(out, tuple(a + j for a, j in zip(m, js)))
    return out


def sq_on_poly(k: int, p) -> frozenset:
    acc: set = set()
    for m in p:
        for t in sq_on_monomial(k, m):
            _toggle(acc, t)
    return frozenset(acc)


def word_on_poly(word, p) -> frozenset:
    for k in reversed(tuple(word)):
        p = sq_on_poly(k, p)
    return frozenset(p)


def top_class(n: int) -> frozenset:
    return frozenset([(1,) * n])


def element_on_top(terms, n: int) -> frozenset:
    """Action of a sum of words on x1 ... xn."""
    acc: set = set()
    for w in terms:
        for t in word_on_poly(w, top_class(n)):
            _toggle(acc, t)
    return frozenset(acc)


def elementary_symmetric(j: int, n: int) -> frozenset:
    out = set()
    for idx in itertools.combinations(range(n), j):
        out.add(tuple(1 if i in idx else 0 for i in range(n)))
    return frozenset(out)


def poly_mul(a, b) -> frozenset:
    acc: set = set()
    for x in a:
        for y in b:
            _toggle(acc, tuple(i + j for i, j in zip(x, y)))
    return frozenset(acc)


def sw_image(exponents: tuple, n: int) -> frozenset:
    """Image of w1^e1 w2^e2 ... in F2[x1..xn] under w_j -> e_j."""
    out = frozenset([(0,) * n])
    for j, e in enumerate(exponents, start=1):
        for _ in range(e):
            out = poly_mul(out, elementary_symmetric(j, n))
    return out
