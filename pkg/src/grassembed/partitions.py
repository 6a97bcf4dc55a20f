"""Partitions, Young diagram cells, and the total order used for Schur elimination."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple


class Cell(NamedTuple):
    row: int  # 1-based
    col: int  # 1-based
    hook: int
    content: int


@dataclass(frozen=True, init=False)
class Partition:
    """Weakly decreasing tuple of positive integers.

    Trailing zeros passed to the constructor are dropped, so ``Partition((2, 2, 0, 0))``
    and ``Partition((2, 2))`` are the same object for hashing and equality. Use
    :meth:`padded` to get a U(n) highest weight back.
    """

    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part in {list(parts)}")
            if a and p > parts[a - 1]:
                raise ValueError(f"{list(parts)} is not weakly decreasing")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"

    def __len__(self):
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, a: int) -> int:
        # 0-based, zero beyond the last row
        if a < 0:
            raise IndexError(a)
        return self.parts[a] if a < len(self.parts) else 0

    def __lt__(self, other: "Partition") -> bool:
        return compare(self, other) < 0

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> tuple[int, ...]:
        if len(self.parts) > n:
            raise ValueError(f"{self} has more than {n} rows")
        return self.parts + (0,) * (n - len(self.parts))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[Cell]:
        return cells(self)

    def contains(self, other: "Partition") -> bool:
        """Diagram inclusion ``other ⊆ self``."""
        return len(other) <= len(self) and all(q <= p for p, q in zip(self.parts, other.parts))

    def to_json(self) -> list[int]:
        return list(self.parts)


def conjugate(p: Partition) -> Partition:
    if not p.parts:
        return p
    return Partition(sum(1 for r in p.parts if r >= c) for c in range(1, p.parts[0] + 1))


def cells(p: Partition) -> list[Cell]:
    """All boxes of the diagram in row-major order, with hook lengths and contents."""
    conj = conjugate(p)
    out = []
    for r, length in enumerate(p.parts, start=1):
        for c in range(1, length + 1):
            hook = length - c + conj[c - 1] - r + 1
            out.append(Cell(r, c, hook, c - r))
    return out


def sort_key(p: Partition) -> tuple:
    """Ascending sort by this key lists partitions in ``compare`` order."""
    return (-p.size, tuple(-x for x in p.parts))


def compare(p: Partition, q: Partition) -> int:
    """-1 if p precedes q, 0 if equal, 1 otherwise.

    Larger size first, then lexicographically larger parts first. On equal
    sizes this refines dominance: if p strictly dominates q then p precedes q.
    """
    kp, kq = sort_key(p), sort_key(q)
    return (kp > kq) - (kp < kq)


def dominates(p: Partition, q: Partition) -> bool:
    if p.size != q.size:
        return False
    sp = sq = 0
    for a in range(max(len(p), len(q))):
        sp += p[a]
        sq += q[a]
        if sp < sq:
            return False
    return True


def partitions_of(size: int, max_rows: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of ``size`` in reverse lexicographic order."""
    if max_part is None:
        max_part = size
    if max_rows is None:
        max_rows = size

    def rec(rem, bound, rows):
        if rem == 0:
            yield ()
            return
        if rows == 0:
            return
        for first in range(min(rem, bound), 0, -1):
            for rest in rec(rem - first, first, rows - 1):
                yield (first,) + rest

    for parts in rec(size, max_part, max_rows):
        yield Partition(parts)
