"""Truncated Poincaré series of graded vector spaces."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class NegativeCoefficient(ValueError):
    pass


class InexactDivision(ValueError):
    pass


@dataclass(frozen=True)
class PoincareSeries:
    """Dimensions ``dims[d]`` for degrees ``0..max_degree``."""

    dims: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(x) for x in self.dims))
        if any(x < 0 for x in self.dims):
            raise NegativeCoefficient("negative dimension in %r" % (self.dims,))

    @classmethod
    def of(cls, dims: Iterable[int], max_degree: int | None = None) -> "PoincareSeries":
        dims = list(dims)
        if max_degree is not None:
            dims = (dims + [0] * (max_degree + 1))[: max_degree + 1]
        return cls(tuple(dims))

    @classmethod
    def one(cls, max_degree: int) -> "PoincareSeries":
        return cls.of([1], max_degree)

    @classmethod
    def polynomial(cls, generator_degrees: Sequence[int], max_degree: int) -> "PoincareSeries":
        """Series of a free commutative polynomial algebra (monomial count)."""
        s = [1] + [0] * max_degree
        for g in generator_degrees:
            if g <= 0:
                raise ValueError("generator degrees must be positive")
            for d in range(g, max_degree + 1):
                s[d] += s[d - g]
        return cls(tuple(s))

    @property
    def max_degree(self) -> int:
        return len(self.dims) - 1

    def __getitem__(self, d: int) -> int:
        return self.dims[d] if 0 <= d < len(self.dims) else 0

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self):
        return iter(self.dims)

    def truncate(self, max_degree: int) -> "PoincareSeries":
        return PoincareSeries.of(self.dims[: max_degree + 1], max_degree)

    def __add__(self, other: "PoincareSeries") -> "PoincareSeries":
        n = min(self.max_degree, other.max_degree)
        return PoincareSeries(tuple(self[d] + other[d] for d in range(n + 1)))

    def __mul__(self, other: "PoincareSeries") -> "PoincareSeries":
        n = min(self.max_degree, other.max_degree)
        return PoincareSeries(
            tuple(sum(self[i] * other[d - i] for i in range(d + 1)) for d in range(n + 1))
        )

    def shift(self, k: int) -> "PoincareSeries":
        """Multiply by t^k, keeping the truncation degree."""
        if k < 0:
            raise ValueError("negative shift")
        return PoincareSeries.of([0] * k + list(self.dims), self.max_degree)

    def __sub__(self, other: "PoincareSeries") -> "PoincareSeries":
        n = min(self.max_degree, other.max_degree)
        out = [self[d] - other[d] for d in range(n + 1)]
        for d, x in enumerate(out):
            if x < 0:
                raise NegativeCoefficient("difference negative in degree %d" % d)
        return PoincareSeries(tuple(out))

    def __truediv__(self, other: "PoincareSeries") -> "PoincareSeries":
        """Exact quotient q with q * other == self up to the truncation.

        Raises InexactDivision when no nonnegative integer quotient exists.
        """
        n = min(self.max_degree, other.max_degree)
        if other[0] == 0:
            raise InexactDivision("divisor has zero constant term")
        q: list[int] = []
        for d in range(n + 1):
            r = self[d] - sum(q[i] * other[d - i] for i in range(d))
            c, rem = divmod(r, other[0])
            if rem:
                raise InexactDivision("not divisible in degree %d" % d)
            if c < 0:
                raise InexactDivision("negative quotient coefficient in degree %d" % d)
            q.append(c)
        return PoincareSeries(tuple(q))

    def __repr__(self) -> str:
        return "PoincareSeries(%s)" % list(self.dims)
