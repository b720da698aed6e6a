"""Integer partitions, weak compositions, and majorization order.

Partitions are stored as tuples of positive parts in weakly decreasing
order; the empty tuple is the unique partition of 0.  All arithmetic
(addition, scaling, subtraction) is coordinatewise with implicit zero
padding.  The dominance comparison works on arbitrary rational vectors,
not just partitions, and is always exact (`fractions.Fraction`).
"""

from __future__ import annotations

import enum
import itertools
from fractions import Fraction
from typing import Iterable, Iterator, Sequence, Union

Rational = Union[int, Fraction]


class NotAPartitionError(ValueError):
    """Raised when a coordinatewise operation leaves the partition lattice."""


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        ps = tuple(int(p) for p in parts)
        while ps and ps[-1] == 0:
            ps = ps[:-1]
        for i, p in enumerate(ps):
            if p < 0:
                raise NotAPartitionError(f"negative part {p} in {ps}")
            if i and ps[i - 1] < p:
                raise NotAPartitionError(f"parts not weakly decreasing: {ps}")
        return super().__new__(cls, ps)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """i-th part (0-based), zero beyond the stored length."""
        return self[i] if 0 <= i < len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"

    def __str__(self) -> str:
        return ",".join(str(p) for p in self) if self else "0"

    # vector arithmetic, not tuple concatenation/repetition
    def __add__(self, other):
        return add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return subtract(self, other)

    def __mul__(self, n):
        return scale(n, self)

    __rmul__ = __mul__

    @staticmethod
    def parse(text: str) -> "Partition":
        """Parse the comma syntax, e.g. "7,6,5,5,4,4,3,2,2,1"; "" or "0" is empty."""
        text = text.strip()
        if text in ("", "0"):
            return Partition()
        try:
            parts = [int(tok) for tok in text.split(",")]
        except ValueError as exc:
            raise NotAPartitionError(f"cannot parse partition {text!r}") from exc
        return Partition(parts)


class Composition(tuple):
    """Finite sequence of nonnegative integers; order and padding preserved."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> "Composition":
        ps = tuple(int(p) for p in parts)
        if any(p < 0 for p in ps):
            raise ValueError(f"negative entry in composition {ps}")
        return super().__new__(cls, ps)

    @property
    def size(self) -> int:
        return sum(self)

    def __repr__(self) -> str:
        return f"Composition({tuple(self)})"

    @staticmethod
    def parse(text: str) -> "Composition":
        text = text.strip()
        if text in ("", "0"):
            return Composition()
        return Composition(int(tok) for tok in text.split(","))


RationalVector = tuple  # entries are int or Fraction, always exact


def rational_vector(entries: Iterable[Rational]) -> RationalVector:
    return tuple(Fraction(e) for e in entries)


def pi_sequence(data) -> Partition:
    """Entries of a matrix (iterable of rows) or a flat sequence, sorted
    weakly decreasingly with trailing zeros dropped."""
    if isinstance(data, (Partition, Composition)):
        entries = list(data)
    else:
        rows = list(data)
        if rows and isinstance(rows[0], (list, tuple)):
            entries = [e for row in rows for e in row]
        else:
            entries = rows
    if any(e < 0 for e in entries):
        raise ValueError(f"negative entry in {entries}")
    return Partition(sorted(entries, reverse=True))


def _padded(a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    k = max(len(a), len(b))
    return (list(a) + [0] * (k - len(a)), list(b) + [0] * (k - len(b)))


def add(a: Partition, b: Partition) -> Partition:
    xs, ys = _padded(a, b)
    return Partition(x + y for x, y in zip(xs, ys))


def scale(n: int, a: Partition) -> Partition:
    if n < 0:
        raise ValueError("scale factor must be nonnegative")
    return Partition(n * p for p in a)


def subtract(a: Partition, b: Partition) -> Partition:
    """Coordinatewise difference; raises NotAPartitionError when the result
    has a negative entry or is not weakly decreasing."""
    xs, ys = _padded(a, b)
    return Partition(x - y for x, y in zip(xs, ys))


def union(a: Partition, b: Partition) -> Partition:
    """Multiset union of parts, sorted decreasingly."""
    return Partition(sorted(itertools.chain(a, b), reverse=True))


def contains(outer: Sequence[int], inner: Sequence[int]) -> bool:
    """True iff inner[i] <= outer[i] for all i (Young diagram containment)."""
    xs, ys = _padded(outer, inner)
    return all(y <= x for x, y in zip(xs, ys))


def shifted_partition(nu: Partition, mu: Partition, alpha: Partition, n: int) -> Partition:
    """nu - (n - |mu|) * alpha; raises NotAPartitionError if that fails."""
    if n < mu.size:
        raise ValueError(f"need n >= |mu| = {mu.size}, got {n}")
    return subtract(nu, scale(n - mu.size, alpha))


class Dominance(enum.Enum):
    STRICTLY_DOMINATED = "strictly_dominated"  # a < b in dominance, pi(a) != pi(b)
    EQUAL_PI = "equal_pi"
    DOMINATES = "dominates"                    # a > b
    INCOMPARABLE = "incomparable"
    DIFFERENT_SUM = "different_sum"


def dominates(a: Sequence[Rational], b: Sequence[Rational]) -> Dominance:
    """Majorization comparison of a against b, on sorted entries.

    Returns how `a` relates to `b`: STRICTLY_DOMINATED means a is strictly
    below b (every prefix sum of sorted(a) is <= the one of sorted(b), sums
    equal, sorted entries not all equal)."""
    xs, ys = _padded(tuple(a), tuple(b))
    if sum(xs) != sum(ys):
        return Dominance.DIFFERENT_SUM
    xs = sorted(xs, reverse=True)
    ys = sorted(ys, reverse=True)
    if xs == ys:
        return Dominance.EQUAL_PI
    below = above = True
    px = py = 0
    for x, y in zip(xs, ys):
        px += x
        py += y
        if px > py:
            below = False
        if px < py:
            above = False
    if below:
        return Dominance.STRICTLY_DOMINATED
    if above:
        return Dominance.DOMINATES
    return Dominance.INCOMPARABLE


def is_dominated_by(a: Sequence[Rational], b: Sequence[Rational]) -> bool:
    """a <= b in dominance order (equality of sorted entries allowed)."""
    return dominates(a, b) in (Dominance.STRICTLY_DOMINATED, Dominance.EQUAL_PI)


def partitions_of(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n with parts bounded by max_part, largest part first."""
    if n < 0:
        return
    if max_part is None:
        max_part = n

    def gen(rem: int, bound: int, acc: list[int]) -> Iterator[Partition]:
        if rem == 0:
            yield Partition(acc)
            return
        for head in range(min(rem, bound), 0, -1):
            acc.append(head)
            yield from gen(rem - head, head, acc)
            acc.pop()

    yield from gen(n, max_part, [])


def partitions_up_to(n: int) -> Iterator[Partition]:
    for m in range(n + 1):
        yield from partitions_of(m)


def subpartitions_of_size(outer: Sequence[int], size: int) -> Iterator[Partition]:
    """All partitions of `size` contained in `outer` (coordinatewise)."""
    outer = tuple(outer)
    if size < 0 or size > sum(outer):
        return

    def gen(i: int, rem: int, bound: int, acc: list[int]) -> Iterator[Partition]:
        if rem == 0:
            yield Partition(acc)
            return
        if i >= len(outer):
            return
        # enough room left below?
        cap = min(bound, outer[i])
        if cap * (len(outer) - i) < rem:
            return
        for part in range(min(cap, rem), 0, -1):
            acc.append(part)
            yield from gen(i + 1, rem - part, part, acc)
            acc.pop()

    yield from gen(0, size, size, [])
