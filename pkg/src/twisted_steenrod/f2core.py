"""Dense linear algebra over GF(2).

Vectors and matrix rows are bit-packed into Python integers: coordinate ``i``
is bit ``i``.  XOR of two rows is then a single big-int operation, which is
what keeps the degreewise module computations fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


def _mask(length: int) -> int:
    return (1 << length) - 1


def _lowbit(x: int) -> int:
    return (x & -x).bit_length() - 1


def iter_bits(x: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``x`` in increasing order."""
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class BitVector:
    length: int
    bits: int = 0

    def __post_init__(self):
        if self.length < 0:
            raise ValueError("negative length")
        if self.bits < 0 or self.bits >> self.length:
            raise ValueError("bits outside of vector length")

    @classmethod
    def from_list(cls, entries: Sequence[int]) -> "BitVector":
        bits = 0
        for i, e in enumerate(entries):
            if e % 2:
                bits |= 1 << i
        return cls(len(entries), bits)

    @classmethod
    def from_support(cls, length: int, support: Iterable[int]) -> "BitVector":
        bits = 0
        for i in support:
            bits ^= 1 << i
        return cls(length, bits)

    @classmethod
    def zero(cls, length: int) -> "BitVector":
        return cls(length, 0)

    def __getitem__(self, i: int) -> int:
        if not 0 <= i < self.length:
            raise IndexError(i)
        return (self.bits >> i) & 1

    def __add__(self, other: "BitVector") -> "BitVector":
        if other.length != self.length:
            raise ValueError("length mismatch")
        return BitVector(self.length, self.bits ^ other.bits)

    __xor__ = __add__

    def __bool__(self) -> bool:
        return self.bits != 0

    def __len__(self) -> int:
        return self.length

    def to_list(self) -> list[int]:
        return [(self.bits >> i) & 1 for i in range(self.length)]

    def support(self) -> list[int]:
        return list(iter_bits(self.bits))

    def dot(self, other: "BitVector") -> int:
        return bin(self.bits & other.bits).count("1") & 1

    def __repr__(self) -> str:
        return "BitVector(%s)" % "".join(str(b) for b in self.to_list())


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("negative shape")
        if len(self.data) != self.rows:
            raise ValueError("row count mismatch")
        m = _mask(self.cols)
        if any(r < 0 or r & ~m for r in self.data):
            raise ValueError("row wider than cols")

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "BitMatrix":
        if cols is None:
            cols = len(rows[0]) if rows else 0
        data = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
            data.append(BitVector.from_list(r).bits)
        return cls(len(rows), cols, tuple(data))

    @classmethod
    def from_vectors(cls, vectors: Sequence[BitVector], cols: int) -> "BitMatrix":
        for v in vectors:
            if v.length != cols:
                raise ValueError("vector length mismatch")
        return cls(len(vectors), cols, tuple(v.bits for v in vectors))

    @classmethod
    def identity(cls, n: int) -> "BitMatrix":
        return cls(n, n, tuple(1 << i for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "BitMatrix":
        return cls(rows, cols, (0,) * rows)

    def row(self, i: int) -> BitVector:
        return BitVector(self.cols, self.data[i])

    def to_lists(self) -> list[list[int]]:
        return [self.row(i).to_list() for i in range(self.rows)]

    def __matmul__(self, v: BitVector) -> BitVector:
        if v.length != self.cols:
            raise ValueError("shape mismatch")
        out = 0
        for i, r in enumerate(self.data):
            if bin(r & v.bits).count("1") & 1:
                out |= 1 << i
        return BitVector(self.rows, out)

    def transpose(self) -> "BitMatrix":
        cols = [0] * self.cols
        for i, r in enumerate(self.data):
            for j in iter_bits(r):
                cols[j] |= 1 << i
        return BitMatrix(self.cols, self.rows, tuple(cols))


@dataclass(frozen=True)
class EchelonForm:
    pivots: tuple[int, ...]
    reduced: BitMatrix

    @property
    def rank(self) -> int:
        return len(self.pivots)


class Reducer:
    """Incrementally grown echelon basis of a subspace of GF(2)^n.

    Each stored row is keyed by its lowest set bit.  ``add`` returns True when
    the vector enlarged the span.
    """

    def __init__(self):
        self.rows: dict[int, int] = {}
        self.pivot_mask = 0

    def reduce(self, v: int) -> int:
        rows = self.rows
        m = v & self.pivot_mask
        while m:
            p = _lowbit(m)
            v ^= rows[p]
            m = v & self.pivot_mask & ~((2 << p) - 1)
        return v

    def add(self, v: int) -> bool:
        v = self.reduce(v)
        if not v:
            return False
        p = _lowbit(v)
        self.rows[p] = v
        self.pivot_mask |= 1 << p
        return True

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, v: int) -> bool:
        return self.reduce(v) == 0

    def fully_reduced(self) -> dict[int, int]:
        """Pivot -> row with every other pivot column cleared."""
        out: dict[int, int] = {}
        for p in sorted(self.rows, reverse=True):
            r = self.rows[p]
            # out[q] is zero on every pivot column except q
            for q in iter_bits(r & self.pivot_mask & ~((2 << p) - 1)):
                r ^= out[q]
            out[p] = r
        return out


def row_reduce(m: BitMatrix) -> EchelonForm:
    """Reduced row echelon form; pivot of a row is its lowest nonzero column."""
    red = Reducer()
    for r in m.data:
        red.add(r)
    full = red.fully_reduced()
    pivots = tuple(sorted(full))
    data = tuple(full[p] for p in pivots) + (0,) * (m.rows - len(pivots))
    return EchelonForm(pivots, BitMatrix(m.rows, m.cols, data))


def rank(m: BitMatrix) -> int:
    red = Reducer()
    for r in m.data:
        red.add(r)
    return red.rank


def kernel_basis(m: BitMatrix) -> list[BitVector]:
    """Basis of {x : m @ x = 0}, one vector per free column."""
    ech = row_reduce(m)
    pivset = set(ech.pivots)
    rows = ech.reduced.data[: ech.rank]
    out = []
    for f in range(m.cols):
        if f in pivset:
            continue
        x = 1 << f
        for p, r in zip(ech.pivots, rows):
            if (r >> f) & 1:
                x |= 1 << p
        out.append(BitVector(m.cols, x))
    return out


def quotient_basis(sub: Sequence[BitVector], ambient_dim: int) -> list[BitVector]:
    """Unit vectors on the non-pivot coordinates of ``span(sub)``.

    These complete ``sub`` to a basis of the ambient space, and reducing any
    vector modulo ``span(sub)`` leaves it supported on exactly these
    coordinates.
    """
    red = Reducer()
    for v in sub:
        if v.length != ambient_dim:
            raise ValueError("vector length mismatch")
        red.add(v.bits)
    return [BitVector(ambient_dim, 1 << i) for i in range(ambient_dim) if not (red.pivot_mask >> i) & 1]


def solve(m: BitMatrix, b: BitVector) -> Optional[BitVector]:
    """Some x with ``m @ x == b``, or None when b is outside the column space."""
    if b.length != m.rows:
        raise ValueError("shape mismatch")
    # eliminate on columns of m, tracking which columns were combined
    red = Reducer()
    combo: dict[int, int] = {}
    t = m.transpose()
    for j, col in enumerate(t.data):
        v, c = col, 1 << j
        mm = v & red.pivot_mask
        while mm:
            p = _lowbit(mm)
            v ^= red.rows[p]
            c ^= combo[p]
            mm = v & red.pivot_mask & ~((2 << p) - 1)
        if v:
            p = _lowbit(v)
            red.rows[p] = v
            red.pivot_mask |= 1 << p
            combo[p] = c
    v, x = b.bits, 0
    mm = v & red.pivot_mask
    while mm:
        p = _lowbit(mm)
        v ^= red.rows[p]
        x ^= combo[p]
        mm = v & red.pivot_mask & ~((2 << p) - 1)
    if v:
        return None
    return BitVector(m.cols, x)
