"""Integer partitions, skew diagrams and their cells.

Partitions are immutable and normalized (no trailing zeros) so they can be
used as dictionary keys.  Cells are 1-based ``(row, col)`` pairs; all
off-by-one translation between 1-based diagram coordinates and Python
indices is confined to this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator

Cell = tuple[int, int]


class NotHookError(ValueError):
    """Partition does not fit inside the (m|n) hook."""


def _normalize(parts: Iterable[int]) -> tuple[int, ...]:
    out = []
    prev = None
    for p in parts:
        p = int(p)
        if p < 0:
            raise ValueError(f"negative part {p}")
        if prev is not None and p > prev:
            raise ValueError(f"parts not weakly decreasing: {tuple(parts)}")
        out.append(p)
        prev = p
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive integers.

    Indexing is 1-based and total: ``p[i]`` is 0 for ``i > len(p)``, which
    keeps difference formulas like ``p[a] - p[a + 1]`` free of edge cases.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "parts", _normalize(self.parts))

    def __getitem__(self, i: int) -> int:
        if i < 1:
            raise IndexError("partition indices are 1-based")
        return self.parts[i - 1] if i <= len(self.parts) else 0

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram: result[j] = #{i : parts[i] >= j}."""
        if not self.parts:
            return Partition()
        cols = self.parts[0]
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, cols + 1)))

    def contains(self, other: "Partition") -> bool:
        """Componentwise containment (missing parts read as 0)."""
        top = max(len(self), len(other))
        return all(other[i] <= self[i] for i in range(1, top + 1))

    def to_json(self) -> list[int]:
        return list(self.parts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"


def conjugate(p: Partition) -> Partition:
    return p.conjugate()


def contains(outer: Partition, inner: Partition) -> bool:
    return outer.contains(inner)


def partitions_of(total: int, max_parts: int | None = None,
                  max_part: int | None = None) -> list[Partition]:
    """All partitions of ``total``, largest-part-first order, with bounds."""
    cap = total if max_part is None else min(max_part, total)
    rows = total if max_parts is None else max_parts
    out: list[Partition] = []

    def rec(remaining: int, limit: int, depth: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        if depth == rows:
            return
        for part in range(min(limit, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, depth + 1, acc)
            acc.pop()

    rec(total, cap, 0, [])
    return out


def subpartitions(p: Partition) -> list[Partition]:
    """All partitions contained in ``p``, in deterministic order."""
    out: list[Partition] = []

    def rec(i: int, limit: int, acc: list[int]) -> None:
        if i > len(p):
            out.append(Partition(tuple(acc)))
            return
        # stopping early drops trailing zeros automatically
        out.append(Partition(tuple(acc)))
        for part in range(min(limit, p[i]), 0, -1):
            acc.append(part)
            rec(i + 1, part, acc)
            acc.pop()

    rec(1, p[1] if p else 0, [])
    # rec() emits duplicates of the truncated prefixes; dedupe, keep order
    seen: set[Partition] = set()
    uniq = []
    for q in out:
        if q not in seen:
            seen.add(q)
            uniq.append(q)
    return uniq


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram ``outer/inner`` with inner contained in outer."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[Cell]:
        """All cells [i, j] with inner[i] < j <= outer[i], row-major."""
        out: list[Cell] = []
        for i in range(1, len(self.outer) + 1):
            out.extend((i, j) for j in range(self.inner[i] + 1, self.outer[i] + 1))
        return out

    def conjugate(self) -> "SkewShape":
        return SkewShape(self.outer.conjugate(), self.inner.conjugate())

    def to_json(self) -> dict:
        return {"outer": self.outer.to_json(), "inner": self.inner.to_json()}

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


def skew_cells(s: SkewShape) -> list[Cell]:
    return s.cells()


@dataclass(frozen=True)
class HookSplit:
    """A hook partition recorded as its arm and conjugated leg.

    ``plus`` holds the first ``m`` rows; ``minus`` is the transpose of the
    remaining rows, so the pair doubles as a dominant polynomial weight
    ``(plus | minus)`` with at most m and n components respectively.
    """

    m: int
    n: int
    plus: Partition
    minus: Partition

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be positive")
        if len(self.plus) > self.m:
            raise ValueError(f"{self.plus} has more than m={self.m} parts")
        if len(self.minus) > self.n:
            raise ValueError(f"{self.minus} has more than n={self.n} parts")
        if self.plus[self.m] < len(self.minus):
            # reconstructed rows would fail to decrease across the boundary
            raise ValueError(f"({self.plus}|{self.minus}) is not a hook partition split")

    def to_partition(self) -> Partition:
        """Rebuild the underlying partition: arm rows then transposed leg rows."""
        return Partition(self.plus.parts + self.minus.conjugate().parts)

    def weight(self) -> tuple[int, ...]:
        """The dominant weight (plus | minus) as a length m+n vector."""
        return tuple(self.plus[i] for i in range(1, self.m + 1)) + tuple(
            self.minus[j] for j in range(1, self.n + 1))

    def conjugate_whole(self) -> Partition:
        """Conjugate of the underlying partition; rowwise it is plus' + minus."""
        return self.to_partition().conjugate()

    @property
    def size(self) -> int:
        return self.plus.size + self.minus.size

    def __str__(self) -> str:
        return f"({','.join(map(str, self.plus))}|{','.join(map(str, self.minus))})"


def hook_split(lam: Partition, m: int, n: int) -> HookSplit:
    """Split a partition along the (m|n) hook; row m+1 must not exceed n."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be positive")
    if lam[m + 1] > n:
        raise NotHookError(f"{lam} is not an (m|n)-hook partition for m={m}, n={n}")
    plus = Partition(lam.parts[:m])
    minus = Partition(lam.parts[m:]).conjugate()
    return HookSplit(m, n, plus, minus)


def hook_partitions(m: int, n: int, max_size: int) -> list[Partition]:
    """All (m|n)-hook partitions with at most ``max_size`` cells, by size."""
    out: list[Partition] = []
    for total in range(0, max_size + 1):
        for p in partitions_of(total):
            if p[m + 1] <= n:
                out.append(p)
    return out
