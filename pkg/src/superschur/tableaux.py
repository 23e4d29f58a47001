"""Skew tableaux: reading words, lattice predicates, canonical fillings and
the cumulative count matrices with their preorders."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .shapes import Cell, Partition, SkewShape


class ShapeMismatchError(ValueError):
    """Comparison of tableaux with different shapes or contents."""


@dataclass(frozen=True)
class SkewTableau:
    """A filling of a skew diagram by positive integers.

    Entries are stored row-aligned: ``rows[i-1]`` has length ``outer[i]``
    with ``None`` in the first ``inner[i]`` slots.  The threshold between
    "even" and "odd" symbols is not part of the tableau; callers supply it.
    """

    shape: SkewShape
    rows: tuple[tuple[int | None, ...], ...]

    def __post_init__(self):
        outer, inner = self.shape.outer, self.shape.inner
        if len(self.rows) != len(outer):
            raise ValueError("row count does not match outer shape")
        for i, row in enumerate(self.rows, start=1):
            if len(row) != outer[i]:
                raise ValueError(f"row {i} has length {len(row)}, expected {outer[i]}")
            for j, v in enumerate(row, start=1):
                if (v is None) != (j <= inner[i]):
                    raise ValueError(f"cell [{i},{j}] must be {'empty' if j <= inner[i] else 'filled'}")

    @classmethod
    def from_entries(cls, shape: SkewShape, entries: dict[Cell, int]) -> "SkewTableau":
        cells = set(shape.cells())
        if set(entries) != cells:
            raise ValueError("entries must be defined exactly on the skew cells")
        rows = tuple(
            tuple(entries[(i, j)] if j > shape.inner[i] else None
                  for j in range(1, shape.outer[i] + 1))
            for i in range(1, len(shape.outer) + 1))
        return cls(shape, rows)

    def __getitem__(self, cell: Cell) -> int:
        i, j = cell
        v = self.rows[i - 1][j - 1]
        assert v is not None
        return v

    def entries(self) -> dict[Cell, int]:
        return {c: self[c] for c in self.shape.cells()}

    @property
    def size(self) -> int:
        return self.shape.size

    def to_json(self) -> dict:
        d = self.shape.to_json()
        d["rows"] = [list(r) for r in self.rows]
        return d

    @classmethod
    def from_json(cls, d: dict) -> "SkewTableau":
        shape = SkewShape(Partition(tuple(d["outer"])), Partition(tuple(d["inner"])))
        return cls(shape, tuple(tuple(r) for r in d["rows"]))

    def __str__(self) -> str:
        return "[" + "],[".join(
            ",".join("." if v is None else str(v) for v in row) for row in self.rows) + "]"


def content(t: SkewTableau, max_symbol: int) -> tuple[int, ...]:
    """counts[s-1] = number of cells carrying symbol s, for s = 1..max_symbol."""
    counts = [0] * max_symbol
    for c in t.shape.cells():
        v = t[c]
        if v > max_symbol:
            raise ValueError(f"entry {v} exceeds max symbol {max_symbol}")
        counts[v - 1] += 1
    return tuple(counts)


def is_semistandard(t: SkewTableau) -> bool:
    """Rows weakly increase left to right, columns strictly increase downwards."""
    ents = t.entries()
    for (i, j), v in ents.items():
        if (i, j + 1) in ents and ents[(i, j + 1)] < v:
            return False
        if (i + 1, j) in ents and ents[(i + 1, j)] <= v:
            return False
    return True


def is_anti_semistandard(t: SkewTableau) -> bool:
    """Rows strictly decrease left to right, columns weakly decrease downwards."""
    ents = t.entries()
    for (i, j), v in ents.items():
        if (i, j + 1) in ents and ents[(i, j + 1)] >= v:
            return False
        if (i + 1, j) in ents and ents[(i + 1, j)] > v:
            return False
    return True


def reading_cells(shape: SkewShape) -> list[Cell]:
    """Cells in row-reading order: rows top to bottom, right to left inside a row."""
    out: list[Cell] = []
    for i in range(1, len(shape.outer) + 1):
        out.extend((i, j) for j in range(shape.outer[i], shape.inner[i], -1))
    return out


def row_word(t: SkewTableau) -> tuple[int, ...]:
    return tuple(t[c] for c in reading_cells(t.shape))


def place_word(t: SkewTableau) -> tuple[int, ...]:
    """Column indices of the cells, in the same reading order as row_word."""
    return tuple(j for _, j in reading_cells(t.shape))


def canonical_column(shape: SkewShape) -> SkewTableau:
    """Column j filled with the symbol j."""
    return SkewTableau.from_entries(shape, {(i, j): j for i, j in shape.cells()})


def canonical_row(shape: SkewShape, m: int) -> SkewTableau:
    """Row i filled with the symbol m + i."""
    return SkewTableau.from_entries(shape, {(i, j): m + i for i, j in shape.cells()})


def shifted_word(t_plus: SkewTableau, lambda_minus: Partition, m: int) -> tuple[int, ...]:
    """Reading word prefixed by the canonical row filling of [lambda_minus]."""
    prefix: list[int] = []
    for i in range(1, len(lambda_minus) + 1):
        prefix.extend([m + i] * lambda_minus[i])
    return tuple(prefix) + row_word(t_plus)


def is_lattice(word: tuple[int, ...], alphabet_offset: int = 0) -> bool:
    """Every prefix holds at least as many symbols offset+i as offset+i+1."""
    if not word:
        return True
    top = max(word) - alphabet_offset
    counts = [0] * (top + 1)
    for w in word:
        s = w - alphabet_offset
        if s < 1:
            raise ValueError(f"symbol {w} below alphabet offset {alphabet_offset}")
        counts[s - 1] += 1
        if s > 1 and counts[s - 1] > counts[s - 2]:
            return False
    return True


def is_shifted_yamanouchi(t_plus: SkewTableau, lambda_minus: Partition, m: int) -> bool:
    """Prefix counts shifted by lambda_minus stay weakly decreasing.

    For every initial part w' of the reading word and every i,
    lambda_minus[i] + #(m+i in w') >= lambda_minus[i+1] + #(m+i+1 in w').
    Equivalent to ``is_lattice(shifted_word(...), m)``.
    """
    word = row_word(t_plus)
    top = max([w - m for w in word], default=0)
    top = max(top, len(lambda_minus))
    counts = [lambda_minus[i] for i in range(1, top + 2)]
    for w in word:
        s = w - m
        if s < 1:
            raise ValueError(f"entry {w} is not above the threshold m={m}")
        counts[s - 1] += 1
        if s > 1 and counts[s - 1] > counts[s - 2]:
            return False
    return True


@dataclass(frozen=True)
class ClausenMatrix:
    """Cumulative symbol-count matrix of a tableau.

    kind "column": data[k-1][j-1] counts symbols <= m+k in columns >= j.
    kind "row":    data[r][k-1] counts symbols <= m+k in rows up to the
    (r+1)-st nonempty row; empty rows are skipped.
    """

    kind: str
    data: tuple[tuple[int, ...], ...]


def _column_entries(t: SkewTableau) -> dict[int, list[int]]:
    cols: dict[int, list[int]] = {}
    for (i, j) in t.shape.cells():
        cols.setdefault(j, []).append(t[(i, j)])
    return cols


def clausen_column(t_plus: SkewTableau, m: int, n: int) -> ClausenMatrix:
    ncols = t_plus.shape.outer[1]
    cols = _column_entries(t_plus)
    data = []
    for k in range(1, n + 1):
        row = []
        for j in range(1, ncols + 1):
            row.append(sum(1 for jj, vals in cols.items() if jj >= j
                           for v in vals if v <= m + k))
        data.append(tuple(row))
    return ClausenMatrix("column", tuple(data))


def clausen_row(t_plus: SkewTableau, m: int, n: int) -> ClausenMatrix:
    outer, inner = t_plus.shape.outer, t_plus.shape.inner
    nonempty = [i for i in range(1, len(outer) + 1) if outer[i] > inner[i]]
    data = []
    for i in nonempty:
        row = []
        for k in range(1, n + 1):
            row.append(sum(1 for (r, c) in t_plus.shape.cells()
                           if r <= i and t_plus[(r, c)] <= m + k))
        data.append(tuple(row))
    return ClausenMatrix("row", tuple(data))


class Comparison(Enum):
    LESS_STRICT = "less"
    EQUAL_MATRICES = "equal"
    GREATER_STRICT = "greater"
    INCOMPARABLE = "incomparable"  # unreachable for equal-shape comparisons


def clausen_compare_col(a: ClausenMatrix, b: ClausenMatrix) -> Comparison:
    """Scan columns of the tableau from rightmost down, thresholds inside."""
    if a.kind != "column" or b.kind != "column":
        raise ShapeMismatchError("column matrices required")
    if len(a.data) != len(b.data) or any(len(x) != len(y) for x, y in zip(a.data, b.data)):
        raise ShapeMismatchError("matrix dimensions differ")
    ncols = len(a.data[0]) if a.data else 0
    for j in range(ncols, 0, -1):
        for k in range(1, len(a.data) + 1):
            x, y = a.data[k - 1][j - 1], b.data[k - 1][j - 1]
            if x != y:
                return Comparison.LESS_STRICT if x < y else Comparison.GREATER_STRICT
    return Comparison.EQUAL_MATRICES


def clausen_compare_row(a: ClausenMatrix, b: ClausenMatrix) -> Comparison:
    """Scan tableau rows from the top down, thresholds inside."""
    if a.kind != "row" or b.kind != "row":
        raise ShapeMismatchError("row matrices required")
    if len(a.data) != len(b.data) or any(len(x) != len(y) for x, y in zip(a.data, b.data)):
        raise ShapeMismatchError("matrix dimensions differ")
    for i in range(len(a.data)):
        for k in range(len(a.data[i])):
            x, y = a.data[i][k], b.data[i][k]
            if x != y:
                return Comparison.LESS_STRICT if x < y else Comparison.GREATER_STRICT
    return Comparison.EQUAL_MATRICES
