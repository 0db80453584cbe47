"""Integer partitions, Frobenius coordinates and the constrained enumerators
used by the character sums.

A partition is stored as a weakly decreasing tuple of positive parts; trailing
zeros are stripped on construction, so the zero partition is the empty tuple.
All enumerators yield partitions in weight-ascending order and, within a fixed
weight, in lexicographically descending order.  Unbounded constraints are
passed as None, never as a large magic integer.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator


class Partition:
    """An integer partition with 0-padded indexing.

    Indexing is 0-based and returns 0 past the last part, which keeps
    formulas like the Weyl dimension product free of padding noise:

        Partition([5, 4, 4, 2])[1] == 4
        Partition([5, 4, 4, 2])[9] == 0
    """

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        if parts and parts[-1] < 0:
            raise ValueError(f"parts must be non-negative, got {parts}")
        self._parts = parts

    @property
    def parts(self) -> tuple[int, ...]:
        return self._parts

    @property
    def weight(self) -> int:
        """Number of boxes |lambda|."""
        return sum(self._parts)

    def __len__(self) -> int:
        """Number of positive parts (the length of the partition)."""
        return len(self._parts)

    def __getitem__(self, i: int) -> int:
        if i < 0:
            raise IndexError("parts are indexed from 0")
        return self._parts[i] if i < len(self._parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Partition):
            return self._parts == other._parts
        if isinstance(other, tuple):
            return self._parts == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._parts)

    def __repr__(self) -> str:
        return f"Partition({list(self._parts)})"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self._parts)) + ")" if self._parts else "(0)"

    def conjugate(self) -> "Partition":
        """Reflect the diagram along the main diagonal.

        The j-th conjugate part counts the parts of size at least j+1
        (0-based), i.e. the height of column j+1.
        """
        if not self._parts:
            return Partition()
        cols = [0] * self._parts[0]
        for p in self._parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other[i] <= self[i] for every row."""
        return all(other[i] <= self[i] for i in range(len(other)))

    def hook_length(self, i: int, j: int) -> int:
        """Hook length of box (i, j), rows and columns counted from 1.

        h(i,j) = lambda_i + lambda'_j - i - j + 1.  Raises ValueError for a
        box outside the diagram.
        """
        if i < 1 or j < 1 or j > self[i - 1]:
            raise ValueError(f"box ({i},{j}) lies outside {self!r}")
        conj_j = sum(1 for p in self._parts if p >= j)
        return self._parts[i - 1] + conj_j - i - j + 1

    def frobenius(self) -> "FrobeniusForm":
        """Frobenius coordinates (arm lengths | leg lengths) of the diagram.

        The rank r is the number of diagonal boxes; arm a_k and leg b_k count
        the boxes strictly right of and strictly below diagonal box (k, k).
        """
        conj = self.conjugate()
        arms = []
        legs = []
        k = 0
        while self[k] > k:
            arms.append(self[k] - k - 1)
            legs.append(conj[k] - k - 1)
            k += 1
        return FrobeniusForm(arms, legs)


class FrobeniusForm:
    """Frobenius coordinates (a_1 > ... > a_r | b_1 > ... > b_r), all >= 0."""

    __slots__ = ("_arms", "_legs")

    def __init__(self, arms: Iterable[int], legs: Iterable[int]):
        arms = tuple(int(a) for a in arms)
        legs = tuple(int(b) for b in legs)
        if len(arms) != len(legs):
            raise ValueError("arm and leg sequences must have equal length")
        for seq in (arms, legs):
            if any(x < 0 for x in seq):
                raise ValueError(f"coordinates must be non-negative, got {seq}")
            if any(x <= y for x, y in zip(seq, seq[1:])):
                raise ValueError(f"coordinates must strictly decrease, got {seq}")
        self._arms = arms
        self._legs = legs

    @property
    def arms(self) -> tuple[int, ...]:
        return self._arms

    @property
    def legs(self) -> tuple[int, ...]:
        return self._legs

    @property
    def rank(self) -> int:
        return len(self._arms)

    @property
    def weight(self) -> int:
        """Number of boxes: each diagonal box carries its arm and leg."""
        return self.rank + sum(self._arms) + sum(self._legs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FrobeniusForm):
            return self._arms == other._arms and self._legs == other._legs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._arms, self._legs))

    def __repr__(self) -> str:
        return f"FrobeniusForm({list(self._arms)}, {list(self._legs)})"

    def __str__(self) -> str:
        a = " ".join(map(str, self._arms))
        b = " ".join(map(str, self._legs))
        return f"({a} | {b})"

    def to_partition(self) -> Partition:
        """Rebuild the partition whose diagonal hooks have these coordinates."""
        rows = [self._arms[k] + k + 1 for k in range(self.rank)]
        depth = self._legs[0] + 1 if self._legs else 0
        for i in range(self.rank, depth):
            rows.append(sum(1 for k, b in enumerate(self._legs) if b + k >= i))
        return Partition(rows)


def _exact_partitions(
    weight: int, max_part: int | None, max_len: int | None
) -> Iterator[tuple[int, ...]]:
    """All partitions of the exact weight within the box, lex-descending."""
    if weight == 0:
        yield ()
        return
    if max_len is not None and max_len <= 0:
        return
    hi = weight if max_part is None else min(weight, max_part)
    # smallest admissible first part: the rest must fit in max_len rows
    lo = 1 if max_len is None else -(-weight // max_len)
    for first in range(hi, lo - 1, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in _exact_partitions(weight - first, first, rest_len):
            yield (first,) + rest


def enum_partitions(
    max_weight: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """All partitions with |lambda| <= max_weight, lambda_1 <= max_part and
    length <= max_len, weight-ascending then lex-descending."""
    for w in range(max_weight + 1):
        for t in _exact_partitions(w, max_part, max_len):
            yield Partition(t)


def enum_rectangle(max_part: int, max_len: int) -> Iterator[Partition]:
    """All partitions fitting in a max_len x max_part rectangle.

    The stream is finite with exactly binomial(max_part + max_len, max_len)
    members.
    """
    if max_part < 0 or max_len < 0:
        raise ValueError("rectangle sides must be non-negative")
    return enum_partitions(max_part * max_len, max_part, max_len)


def enum_B(
    max_weight: int, max_part: int | None = None, max_len: int | None = None
) -> Iterator[Partition]:
    """Partitions in which every part value occurs with even multiplicity.

    Such a partition is a vertical doubling (c_1, c_1, c_2, c_2, ...) of an
    arbitrary partition (c_1, c_2, ...), so all weights are even.
    """
    half_len = None if max_len is None else max_len // 2
    for mu in enum_partitions(max_weight // 2, max_part, half_len):
        doubled = []
        for c in mu:
            doubled.append(c)
            doubled.append(c)
        yield Partition(doubled)


def enum_D(max_weight: int, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions whose parts are all even: the conjugates of the even-
    multiplicity family."""
    for mu in enum_partitions(max_weight // 2, None, max_len):
        yield Partition(tuple(2 * c for c in mu))


def enum_offset_forms(n: int, p: int) -> Iterator[tuple[FrobeniusForm, int]]:
    """Signed Frobenius forms (a | a + p) with arms below n - p.

    Yields (form, sign) pairs for every strictly decreasing arm sequence
    n - p - 1 >= a_1 > ... > a_r >= 0, r from 0 to n - p, with sign
    (-1)**(sum(a) + r).  When p >= n the stream is the single pair
    (empty form, +1).  The stream always has exactly 2**max(n - p, 0)
    members.
    """
    if n < 0 or p < 0:
        raise ValueError("both arguments must be non-negative")
    top = max(n - p, 0)
    for r in range(top + 1):
        for arms in combinations(range(top - 1, -1, -1), r):
            sign = -1 if (sum(arms) + r) % 2 else 1
            yield FrobeniusForm(arms, tuple(a + p for a in arms)), sign


def subpartitions(lam: Partition, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions contained in the diagram of lam, optionally with a
    bounded number of parts."""
    rows = len(lam) if max_len is None else min(max_len, len(lam))

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == rows:
            yield ()
            return
        for v in range(min(cap, lam[i]), -1, -1):
            if v == 0:
                yield ()
                return
            for rest in rec(i + 1, v):
                yield (v,) + rest

    for t in rec(0, lam[0] if lam else 0):
        yield Partition(t)
