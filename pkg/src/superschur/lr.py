"""Enumeration of semistandard and Littlewood-Richardson tableaux, the
repositioning and opposite maps, marked tableaux and Zelevinsky pictures."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .shapes import Cell, HookSplit, Partition, SkewShape, partitions_of
from .tableaux import (SkewTableau, canonical_row, is_anti_semistandard,
                       is_lattice, is_semistandard, is_shifted_yamanouchi,
                       reading_cells, row_word, shifted_word)


class ShapeOverflowError(ValueError):
    """A repositioned entry landed outside its target row."""


class NotMarkedError(ValueError):
    pass


@dataclass(frozen=True)
class CellBijection:
    """A bijection between the cells of two skew diagrams."""

    forward: tuple[tuple[Cell, Cell], ...]
    domain_shape: SkewShape
    image_shape: SkewShape

    def __post_init__(self):
        fwd = dict(self.forward)
        if sorted(fwd) != sorted(self.domain_shape.cells()):
            raise ValueError("domain cells do not match the domain shape")
        if sorted(fwd.values()) != sorted(self.image_shape.cells()):
            raise ValueError("image cells do not match the image shape")

    def as_dict(self) -> dict[Cell, Cell]:
        return dict(self.forward)

    def inverse_dict(self) -> dict[Cell, Cell]:
        return {v: k for k, v in self.forward}

    def to_json(self) -> list:
        return [[list(a), list(b)] for a, b in sorted(self.forward)]


@dataclass(frozen=True)
class MarkedPair:
    """A marked tableau with its repositioned companion and cell bijection."""

    t_plus: SkewTableau
    t_minus: SkewTableau
    rpos: CellBijection

    def to_json(self) -> dict:
        return {"t_plus": self.t_plus.to_json(), "t_minus": self.t_minus.to_json(),
                "rpos": self.rpos.to_json()}


def enumerate_ssyt(shape: SkewShape, cont: tuple[int, ...]) -> list[SkewTableau]:
    """All semistandard fillings of ``shape`` with the given content.

    ``cont[s-1]`` is the multiplicity of symbol s.  Output is sorted by
    row-reading word so listings are reproducible.
    """
    cells = shape.cells()
    if sum(cont) != len(cells):
        return []
    remaining = list(cont)
    entries: dict[Cell, int] = {}
    out: list[SkewTableau] = []

    def ok(cell: Cell, v: int) -> bool:
        i, j = cell
        left = entries.get((i, j - 1))
        if left is not None and v < left:
            return False
        up = entries.get((i - 1, j))
        if up is not None and v <= up:
            return False
        return True

    def rec(idx: int) -> None:
        if idx == len(cells):
            out.append(SkewTableau.from_entries(shape, dict(entries)))
            return
        cell = cells[idx]
        for s in range(1, len(remaining) + 1):
            if remaining[s - 1] and ok(cell, s):
                remaining[s - 1] -= 1
                entries[cell] = s
                rec(idx + 1)
                del entries[cell]
                remaining[s - 1] += 1

    rec(0)
    out.sort(key=row_word)
    return out


def enumerate_lr(shape: SkewShape, cont: tuple[int, ...]) -> list[SkewTableau]:
    """Semistandard fillings whose reading word is a lattice word."""
    return [t for t in enumerate_ssyt(shape, cont) if is_lattice(row_word(t))]


def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Number of Littlewood-Richardson tableaux of shape alpha/beta, content gamma."""
    if not alpha.contains(beta):
        return 0
    if alpha.size - beta.size != gamma.size:
        return 0
    cont = tuple(gamma[i] for i in range(1, len(gamma) + 1))
    return len(enumerate_lr(SkewShape(alpha, beta), cont))


def _scan_place(word: tuple[int, ...], places: tuple[int, ...],
                row_offsets: dict[int, int], m: int,
                row_caps: dict[int, int] | None) -> dict[Cell, int]:
    """Place the s-th letter at [i, offset_i + (occurrence index of m+i)]."""
    seen: dict[int, int] = {}
    entries: dict[Cell, int] = {}
    for w, z in zip(word, places):
        i = w - m
        if i < 1:
            raise ValueError(f"symbol {w} not above threshold m={m}")
        seen[i] = seen.get(i, 0) + 1
        col = row_offsets.get(i, 0) + seen[i]
        if row_caps is not None and col > row_caps.get(i, 0):
            raise ShapeOverflowError(f"row {i} overflows at column {col}")
        entries[(i, col)] = z
    return entries


def reposition(t_plus: SkewTableau, lambda_minus: Partition, nu: Partition,
               m: int) -> MarkedPair:
    """Build the companion tableau of shape nu/lambda_minus and its cell map.

    Reading the word of ``t_plus``, the j-th occurrence of symbol m+i is sent
    to the cell [i, lambda_minus[i] + j], which receives the source column.
    """
    word = row_word(t_plus)
    cells = reading_cells(t_plus.shape)
    offsets = {i: lambda_minus[i] for i in range(1, len(nu) + 1)}
    caps = {i: nu[i] for i in range(1, len(nu) + 1)}
    entries = _scan_place(word, tuple(j for _, j in cells), offsets, m, caps)
    target = SkewShape(nu, lambda_minus)
    if sorted(entries) != sorted(target.cells()):
        raise ShapeOverflowError(
            f"content of {t_plus} does not fill {target}")
    t_minus = SkewTableau.from_entries(target, entries)

    seen: dict[int, int] = {}
    fwd = []
    for w, cell in zip(word, cells):
        i = w - m
        seen[i] = seen.get(i, 0) + 1
        fwd.append((cell, (i, lambda_minus[i] + seen[i])))
    rpos = CellBijection(tuple(sorted(fwd)), t_plus.shape, target)
    return MarkedPair(t_plus, t_minus, rpos)


def opp_with_map(t: SkewTableau, m: int) -> tuple[SkewTableau, dict[Cell, Cell]]:
    """Opposite tableau plus the underlying cell map.

    The j-th occurrence of m+i in the reading word goes to cell [i, j] of the
    straight shape, carrying the source column.
    """
    word = row_word(t)
    cells = reading_cells(t.shape)
    entries = _scan_place(word, tuple(j for _, j in cells), {}, m, None)
    nrows = max((i for i, _ in entries), default=0)
    nu = Partition(tuple(sorted((max(j for r, j in entries if r == i)
                                 for i in range(1, nrows + 1)), reverse=True)))
    row_lengths = {i: max((j for r, j in entries if r == i), default=0)
                   for i in range(1, nrows + 1)}
    if list(row_lengths.values()) != sorted(row_lengths.values(), reverse=True):
        raise ShapeOverflowError(f"opposite of {t} is not a partition shape")
    if any((i, j) not in entries for i in range(1, nrows + 1)
           for j in range(1, row_lengths[i] + 1)):
        raise ShapeOverflowError(f"opposite of {t} has gaps")
    shape = SkewShape(nu, Partition())
    seen: dict[int, int] = {}
    cmap: dict[Cell, Cell] = {}
    for w, cell in zip(word, cells):
        i = w - m
        seen[i] = seen.get(i, 0) + 1
        cmap[cell] = (i, seen[i])
    return SkewTableau.from_entries(shape, entries), cmap


def opp(t: SkewTableau, m: int) -> SkewTableau:
    return opp_with_map(t, m)[0]


def embed_plus(t_plus: SkewTableau, lam: HookSplit, mu: Partition) -> SkewTableau:
    """Extend t_plus by the canonical rows sitting beyond column m.

    The result has shape lam'/mu' and carries m+i throughout row i of the
    leg region, which is what the ambient-tableau constructions expect.
    """
    lam_conj = lam.conjugate_whole()
    mu_conj = mu.conjugate()
    shape = SkewShape(lam_conj, mu_conj)
    entries = t_plus.entries()
    for i in range(1, len(lam.minus) + 1):
        for j in range(lam.m + 1, lam.m + lam.minus[i] + 1):
            entries[(i, j)] = lam.m + i
    return SkewTableau.from_entries(shape, entries)


def restrict_plus(t: SkewTableau, m: int) -> SkewTableau:
    """Drop the cells beyond column m, keeping the arm part of the tableau."""
    keep = {c: v for c, v in t.entries().items() if c[1] <= m}
    outer = []
    inner = []
    for i in range(1, len(t.shape.outer) + 1):
        outer.append(min(t.shape.outer[i], m))
        inner.append(min(t.shape.inner[i], m))
    shape = SkewShape(Partition(tuple(outer)), Partition(tuple(inner)))
    return SkewTableau.from_entries(shape, keep)


def is_behaved(t: SkewTableau, m: int) -> bool:
    """The opposite map restricted to arm cells must agree with repositioning."""
    t_plus = restrict_plus(t, m)
    leg_cols = [t.shape.outer[i] - min(t.shape.outer[i], m)
                for i in range(1, len(t.shape.outer) + 1)]
    lambda_minus = Partition(tuple(sorted((c for c in leg_cols if c), reverse=True))) \
        if leg_cols == sorted(leg_cols, reverse=True) else None
    if lambda_minus is None:
        raise ValueError("tableau does not carry a leg of partition shape")
    try:
        t_opp, oppos = opp_with_map(t, m)
    except ShapeOverflowError:
        return False
    nu = t_opp.shape.outer
    try:
        pair = reposition(t_plus, lambda_minus, nu, m)
    except ShapeOverflowError:
        return False
    rp = pair.rpos.as_dict()
    return all(oppos[c] == rp[c] for c in t_plus.shape.cells())


def is_marked(t_plus: SkewTableau, lambda_minus: Partition, nu: Partition,
              m: int) -> bool:
    """Semistandard with anti-semistandard companion.

    Checked both directly and through the shifted-Yamanouchi route; the two
    must agree, which is itself part of the contract.
    """
    if not is_semistandard(t_plus):
        return False
    try:
        pair = reposition(t_plus, lambda_minus, nu, m)
    except ShapeOverflowError:
        return False
    direct = is_anti_semistandard(pair.t_minus)
    via_word = is_shifted_yamanouchi(t_plus, lambda_minus, m)
    assert direct == via_word, (t_plus, lambda_minus, nu, m)
    return direct


def marked_content(lam: HookSplit, nu: Partition) -> tuple[int, ...] | None:
    """Content vector over symbols 1..m+n for fillings counted by nu/leg."""
    cont = [0] * (lam.m + lam.n)
    for j in range(1, lam.n + 1):
        c = nu[j] - lam.minus[j]
        if c < 0:
            return None
        cont[lam.m + j - 1] = c
    if nu[lam.n + 1] > 0:
        return None
    return tuple(cont)


def enumerate_marked(lam: HookSplit, mu: Partition, nu: Partition) -> list[MarkedPair]:
    """All marked tableaux of shape (plus/mu)' with content given by nu/leg."""
    if not lam.plus.contains(mu) or not nu.contains(lam.minus):
        return []
    shape = SkewShape(lam.plus.conjugate(), mu.conjugate())
    cont = marked_content(lam, nu)
    if cont is None or sum(cont) != shape.size:
        return []
    out = []
    for t in enumerate_ssyt(shape, cont):
        if is_marked(t, lam.minus, nu, lam.m):
            out.append(reposition(t, lam.minus, nu, lam.m))
    return out


def _le_nw(a: Cell, b: Cell) -> bool:
    return a[0] <= b[0] and a[1] <= b[1]


def _le_sw(a: Cell, b: Cell) -> bool:
    return a[0] <= b[0] and a[1] >= b[1]


def is_picture(f: CellBijection) -> bool:
    """Monotone for the northwest order forward and southwest order backward."""
    fwd = f.as_dict()
    cells = list(fwd)
    for x in cells:
        for y in cells:
            if _le_nw(x, y) and not _le_sw(fwd[x], fwd[y]):
                return False
            if _le_nw(fwd[x], fwd[y]) and not _le_sw(x, y):
                return False
    return True


def picture_readings(f: CellBijection) -> tuple[SkewTableau, SkewTableau]:
    """Row reading (first image coordinate) and column reading (first preimage
    coordinate read backwards through the map)."""
    fwd = f.as_dict()
    e_plus = SkewTableau.from_entries(f.domain_shape, {c: fwd[c][0] for c in fwd})
    inv = f.inverse_dict()
    e_minus = SkewTableau.from_entries(f.image_shape, {c: inv[c][1] for c in inv})
    return e_plus, e_minus


def enumerate_pictures(domain: SkewShape, image: SkewShape) -> list[CellBijection]:
    """All pictures between two skew diagrams, brute force over bijections."""
    dom = domain.cells()
    img = image.cells()
    if len(dom) != len(img):
        return []
    out = []
    for perm in permutations(img):
        f = CellBijection(tuple(zip(dom, perm)), domain, image)
        if is_picture(f):
            out.append(f)
    out.sort(key=lambda f: f.forward)
    return out


def marked_picture_correspondence(pair: MarkedPair) -> CellBijection:
    """The repositioning map of a marked pair, viewed as a picture."""
    if not is_semistandard(pair.t_plus) or not is_anti_semistandard(pair.t_minus):
        raise NotMarkedError(f"{pair.t_plus} is not marked")
    f = pair.rpos
    if not is_picture(f):
        raise NotMarkedError(f"repositioning of {pair.t_plus} is not a picture")
    return f


def picture_to_marked(f: CellBijection, m: int) -> MarkedPair:
    """Inverse direction: the row reading, shifted above m, is marked."""
    e_plus, _ = picture_readings(f)
    t_plus = SkewTableau.from_entries(
        f.domain_shape, {c: v + m for c, v in e_plus.entries().items()})
    lambda_minus = f.image_shape.inner
    nu = f.image_shape.outer
    pair = reposition(t_plus, lambda_minus, nu, m)
    if not is_marked(t_plus, lambda_minus, nu, m):
        raise NotMarkedError(f"row reading of {f} is not marked")
    return pair


def lr_sum_identity(lam: HookSplit, mu: Partition, nu: Partition) -> tuple[int, int]:
    """Both sides of the skew coefficient factorization.

    Left: the LR coefficient of the conjugate pair with content nu.  Right:
    the sum over kappa of products of arm and leg coefficients.
    """
    lhs = lr_coefficient(lam.conjugate_whole(), mu.conjugate(), nu)
    k = lam.plus.size - mu.size
    rhs = 0
    for kappa in partitions_of(k):
        a = lr_coefficient(lam.plus.conjugate(), mu.conjugate(), kappa)
        if a == 0:
            continue
        rhs += a * lr_coefficient(nu, lam.minus, kappa)
    return lhs, rhs
