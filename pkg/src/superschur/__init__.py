"""Exact toolkit for even-primitive vectors: partitions and skew tableaux,
Littlewood-Richardson machinery, supercommutative polynomial arithmetic and
machine verification of the identities tying them together."""

from .shapes import (Cell, HookSplit, NotHookError, Partition, SkewShape,
                     hook_split, skew_cells)
from .tableaux import SkewTableau

__all__ = [
    "Cell", "HookSplit", "NotHookError", "Partition", "SkewShape",
    "SkewTableau", "hook_split", "skew_cells",
]
