"""Construction and verification of even-primitive vectors.

The operator algebra runs in an abstract representation: wedge monomials
over the odd basis symbols ``y[r,s]`` with coefficients in the commutative
subring generated by the even block and the Schur-complement generators.
Only the final primitivity check substitutes the localized fractions back
in and applies superderivations to the honest element of the localized
superring.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .lr import CellBijection, MarkedPair, enumerate_marked, reposition
from .shapes import Cell, HookSplit, Partition, SkewShape
from .tableaux import SkewTableau
from . import superring as sr
from .superring import (DivisionFailedError, Localized, Poly, SuperRing,
                        dplus, exact_divide, exact_divide_many, ring,
                        y_element, zminor)

Pair = tuple[int, int]
MultiIndex = tuple[Pair, ...]
YSym = tuple[int, int]
WedgeMono = tuple[YSym, ...]


class InconsistentRposError(ValueError):
    pass


class IncompatiblePositioningError(ValueError):
    pass


class RankDeficientError(RuntimeError):
    pass


# -- multiindices ------------------------------------------------------------

def q_plus(t_plus: SkewTableau, m: int) -> MultiIndex:
    """Columns left to right, top to bottom inside a column; the column index
    is the even component, the entry above m the odd one."""
    cells = plus_reading_cells(t_plus.shape)
    return tuple((j, t_plus[(i, j)] - m) for (i, j) in cells)


def plus_reading_cells(shape: SkewShape) -> list[Cell]:
    ncols = shape.outer[1]
    out: list[Cell] = []
    for j in range(1, ncols + 1):
        for i in range(1, len(shape.outer) + 1):
            if shape.inner[i] < j <= shape.outer[i]:
                out.append((i, j))
    return out


def q_minus(t_minus: SkewTableau, m: int) -> MultiIndex:
    """Rows top to bottom, left to right inside a row; the row index is the
    odd component, the entry the even one."""
    out = []
    for i in range(1, len(t_minus.shape.outer) + 1):
        for j in range(t_minus.shape.inner[i] + 1, t_minus.shape.outer[i] + 1):
            out.append((t_minus[(i, j)], i))
    return tuple(out)


def mi_content(mi: MultiIndex, m: int, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    iota = [0] * m
    kappa = [0] * n
    for i, j in mi:
        iota[i - 1] += 1
        kappa[j - 1] += 1
    return tuple(iota), tuple(kappa)


def content_and_weight(mi: MultiIndex, lam: HookSplit):
    """Content of the multiindex and the shifted weight, with dominance flag."""
    iota, kappa = mi_content(mi, lam.m, lam.n)
    mu = tuple(lam.plus[i] - iota[i - 1] for i in range(1, lam.m + 1))
    nu = tuple(lam.minus[j] + kappa[j - 1] for j in range(1, lam.n + 1))
    dominant = all(mu[i] >= mu[i + 1] for i in range(lam.m - 1)) and \
        all(nu[j] >= nu[j + 1] for j in range(lam.n - 1))
    return (iota, kappa), mu + nu, dominant


def is_left_admissible(mi: MultiIndex, lam: HookSplit) -> bool:
    _, _, dominant = content_and_weight(mi, lam)
    if not dominant:
        return False
    for (i1, j1), (i2, j2) in zip(mi, mi[1:]):
        if i1 > i2 or (i1 == i2 and j1 >= j2):
            return False
    return True


def is_right_admissible(mi: MultiIndex, lam: HookSplit) -> bool:
    _, _, dominant = content_and_weight(mi, lam)
    if not dominant:
        return False
    for (i1, j1), (i2, j2) in zip(mi, mi[1:]):
        if j1 > j2 or (j1 == j2 and i1 >= i2):
            return False
    return True


@dataclass(frozen=True)
class DenominatorVector:
    """Net exponents of the nested determinants carried by the scaled vector."""

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    def all_nonnegative(self) -> bool:
        return all(e >= 0 for e in self.plus + self.minus)


def v_ij_denominator(lam: HookSplit, mi: MultiIndex) -> DenominatorVector:
    """Depends only on the content: base exponents of the highest vector
    minus one for each index occurrence."""
    iota, kappa = mi_content(mi, lam.m, lam.n)
    plus = []
    for a in range(1, lam.m + 1):
        base = lam.plus[a] - lam.plus[a + 1] if a < lam.m else lam.plus[lam.m]
        plus.append(base - iota[a - 1])
    minus = []
    for b in range(1, lam.n + 1):
        base = lam.minus[b] - lam.minus[b + 1] if b < lam.n else lam.minus[lam.n]
        spent = kappa[b] if b < lam.n else 0
        minus.append(base - spent)
    return DenominatorVector(tuple(plus), tuple(minus))


def is_robust(lam: HookSplit, mi: MultiIndex) -> bool:
    return v_ij_denominator(lam, mi).all_nonnegative()


# -- the rho elements --------------------------------------------------------

def _dminus_hat(rng: SuperRing, j: int, s: int) -> Poly:
    """Abstract minor over the first j odd indices with the s-th removed."""
    return zminor(rng, j - 1, [c for c in range(1, j + 1) if c != s])


def rho_single(rng: SuperRing, i: int, j: int) -> list[tuple[YSym, Poly]]:
    """All terms of one rho factor: coefficient times an odd basis symbol."""
    if not (1 <= i <= rng.m and 1 <= j <= rng.n):
        raise IndexError(f"rho indices out of range: ({i},{j})")
    out = []
    for r in range(i, rng.m + 1):
        dp = dplus(rng, tuple(range(1, i)) + (r,))
        for s in range(1, j + 1):
            coeff = (dp * _dminus_hat(rng, j, s)).scale(-1 if (s + j) & 1 else 1)
            if not coeff.is_zero():
                out.append(((r, s), coeff))
    return out


def rho_single_expanded(rng: SuperRing, i: int, j: int) -> Localized:
    """The same element multiplied out in the localized superring."""
    total = Localized(rng.zero(), 0)
    for (r, s), coeff in rho_single(rng, i, j):
        total = total + sr.expand_z(coeff) * y_element(rng, r, rng.m + s)
    return total


def _sort_sign(seq) -> tuple[int, tuple]:
    """Sorting permutation sign; 0 when two entries coincide."""
    items = list(seq)
    sign = 1
    for a in range(len(items)):
        for b in range(a + 1, len(items)):
            if items[a] == items[b]:
                return 0, ()
            if items[a] > items[b]:
                items[a], items[b] = items[b], items[a]
                sign = -sign
    return sign, tuple(items)


# -- formal wedges of rho symbols ---------------------------------------------

RhoWedge = dict[tuple[Pair, ...], int]


def _add(d: dict, key, value) -> None:
    s = d.get(key, 0) + value
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def rho_wedge_of_sequences(seqs: list[tuple[int, MultiIndex]]) -> RhoWedge:
    """Canonicalize signed multiindex sequences into wedge normal form."""
    out: RhoWedge = {}
    for coeff, seq in seqs:
        sign, mono = _sort_sign(seq)
        if sign:
            _add(out, mono, coeff * sign)
    return out


# -- the tau operator ----------------------------------------------------------

def _validate_rpos(t_plus: SkewTableau, rpos: CellBijection, m: int) -> None:
    fwd = rpos.as_dict()
    for cell in t_plus.shape.cells():
        img = fwd.get(cell)
        if img is None:
            raise InconsistentRposError(f"cell {cell} missing from the bijection")
        if img[0] != t_plus[cell] - m:
            raise InconsistentRposError(
                f"cell {cell} with entry {t_plus[cell]} maps into row {img[0]}")


def _position_groups(cells: list[Cell], key) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    for l, c in enumerate(cells):
        groups.setdefault(key(c), []).append(l)
    return [groups[k] for k in sorted(groups)]


def _group_perms(groups: list[list[int]], k: int):
    """All position relabelings that permute inside each group; identity
    elsewhere.  Yields (source_of[l]) arrays."""
    base = list(range(k))

    def rec(gi: int, cur: list[int]):
        if gi == len(groups):
            yield tuple(cur)
            return
        grp = groups[gi]
        for perm in permutations(grp):
            for l, src in zip(grp, perm):
                cur[l] = src
            yield from rec(gi + 1, cur)
        for l in grp:
            cur[l] = l

    yield from rec(0, base)


def tau_members(t_plus: SkewTableau, rpos: CellBijection, m: int,
                minus_only: bool = False, plus_only: bool = False):
    """Signed multiindex sequences spanning the operator sum at wedge level.

    Positions are anchored to the cells in column-reading order.  Working in
    the exterior algebra trades the unsigned entry transports for signed
    component permutations: the even components permute inside source rows,
    the odd components inside target columns (through the repositioning),
    each contributing its permutation sign.  The two actions touch disjoint
    components, so they compose independently.
    """
    _validate_rpos(t_plus, rpos, m)
    cells = plus_reading_cells(t_plus.shape)
    base = q_plus(t_plus, m)
    k = len(cells)
    fwd = rpos.as_dict()
    row_groups = [[l] for l in range(k)] if minus_only else \
        _position_groups(cells, key=lambda c: c[0])
    col_groups = [[l] for l in range(k)] if plus_only else \
        _position_groups(cells, key=lambda c: fwd[c][1])
    out = []
    for ihat in _group_perms(row_groups, k):
        sign_i = _perm_sign_positions(ihat)
        for jhat in _group_perms(col_groups, k):
            sign = sign_i * _perm_sign_positions(jhat)
            seq = tuple((base[ihat[l]][0], base[jhat[l]][1]) for l in range(k))
            out.append((sign, seq))
    return out


def tau_rho_wedge(t_plus: SkewTableau, rpos: CellBijection, m: int) -> RhoWedge:
    return rho_wedge_of_sequences(tau_members(t_plus, rpos, m))


def _perm_maps(groups: list[list[Cell]]):
    def rec(gi: int, cur: dict[Cell, Cell]):
        if gi == len(groups):
            yield dict(cur)
            return
        grp = groups[gi]
        for perm in permutations(grp):
            for a, b in zip(grp, perm):
                cur[a] = b
            yield from rec(gi + 1, cur)

    yield from rec(0, {})


def tau_cell_maps(t_plus: SkewTableau, rpos: CellBijection, m: int,
                  minus_only: bool = False, plus_only: bool = False):
    """Cell relabelings of the source diagram spanning the operator sum:
    conjugated column permutations of the target composed with source row
    permutations."""
    _validate_rpos(t_plus, rpos, m)
    fwd = rpos.as_dict()
    inv = {v: c for c, v in fwd.items()}
    cells = t_plus.shape.cells()
    img_cols: dict[int, list[Cell]] = {}
    for c in cells:
        img_cols.setdefault(fwd[c][1], []).append(fwd[c])
    row_groups: dict[int, list[Cell]] = {}
    for c in cells:
        row_groups.setdefault(c[0], []).append(c)
    minus_maps = [dict()] if plus_only else \
        list(_perm_maps([sorted(v) for _, v in sorted(img_cols.items())]))
    plus_maps = [dict()] if minus_only else \
        list(_perm_maps([sorted(v) for _, v in sorted(row_groups.items())]))
    for sig_minus in minus_maps:
        transported = {c: inv[sig_minus.get(fwd[c], fwd[c])] for c in cells}
        for sig_plus in plus_maps:
            yield {c: transported[sig_plus.get(c, c)] for c in cells}


def tau_tableaux(t_plus: SkewTableau, rpos: CellBijection, m: int,
                 minus_only: bool = False, plus_only: bool = False) -> dict[SkewTableau, int]:
    """The operator sum at tableau level, coefficients collected."""
    out: dict[SkewTableau, int] = {}
    for gmap in tau_cell_maps(t_plus, rpos, m, minus_only, plus_only):
        entries = {c: t_plus[gmap[c]] for c in gmap}
        _add(out, SkewTableau.from_entries(t_plus.shape, entries), 1)
    return out


def tau_members_with_maps(t_plus: SkewTableau, rpos: CellBijection, m: int):
    """Each term of the operator sum with the relabeling that produced it;
    composing the bijection with the relabeling stays compatible with the
    term, which is what the orbit-closure property quantifies over."""
    for gmap in tau_cell_maps(t_plus, rpos, m):
        entries = {c: t_plus[gmap[c]] for c in gmap}
        yield SkewTableau.from_entries(t_plus.shape, entries), gmap


def tau_minus_tableaux(pair: MarkedPair, m: int) -> dict[SkewTableau, int]:
    return tau_tableaux(pair.t_plus, pair.rpos, m, minus_only=True)


def tau_plus_tableaux(ts: dict[SkewTableau, int]) -> dict[SkewTableau, int]:
    """Row permutations applied to every term of a tableau sum."""
    out: dict[SkewTableau, int] = {}
    for t, coeff in ts.items():
        rows: dict[int, list[Cell]] = {}
        for c in t.shape.cells():
            rows.setdefault(c[0], []).append(c)
        groups = [sorted(v) for _, v in sorted(rows.items())]

        def rec(gi: int, cur: dict[Cell, Cell]):
            if gi == len(groups):
                entries = {c: t[cur.get(c, c)] for c in t.shape.cells()}
                _add(out, SkewTableau.from_entries(t.shape, entries), coeff)
                return
            for perm in permutations(groups[gi]):
                for a, b in zip(groups[gi], perm):
                    cur[a] = b
                rec(gi + 1, cur)

        rec(0, {})
    return out


def is_insignificant(pair: MarkedPair) -> bool:
    """Two cells in one target column pulled back to a single source row."""
    inv = pair.rpos.inverse_dict()
    cols: dict[int, list[Cell]] = {}
    for c in pair.t_minus.shape.cells():
        cols.setdefault(c[1], []).append(c)
    for cells in cols.values():
        rows = [inv[c][0] for c in cells]
        if len(rows) != len(set(rows)):
            return True
    return False


# -- wedge expressions over the odd basis symbols ------------------------------

@dataclass
class WedgeExpression:
    """Formal sum of even coefficients times wedge monomials in y symbols."""

    ring: SuperRing
    terms: dict[WedgeMono, Poly]

    def add(self, mono: WedgeMono, coeff: Poly) -> None:
        cur = self.terms.get(mono)
        s = coeff if cur is None else cur + coeff
        if s.is_zero():
            self.terms.pop(mono, None)
        else:
            self.terms[mono] = s

    def is_zero(self) -> bool:
        return not self.terms

    def num_terms(self) -> int:
        return len(self.terms)

    def scale_poly(self, p: Poly) -> "WedgeExpression":
        return WedgeExpression(self.ring, {mono: c * p for mono, c in self.terms.items()})

    def map_coeffs(self, fn) -> "WedgeExpression":
        out = {}
        for mono, c in self.terms.items():
            v = fn(c)
            if v is None:
                raise DivisionFailedError(f"coefficient of {mono} not divisible")
            if not v.is_zero():
                out[mono] = v
        return WedgeExpression(self.ring, out)

    def weight_of_terms(self) -> tuple[int, ...] | None:
        """Common total weight coefficient * wedge monomial, if homogeneous."""
        total = None
        for mono, c in self.terms.items():
            w = c.weight()
            if w is None:
                return None
            w = list(w)
            for (r, s) in mono:
                w[self.ring.m + s - 1] += 1
                w[r - 1] -= 1
            w = tuple(w)
            if total is None:
                total = w
            elif total != w:
                return None
        return total

    def __str__(self) -> str:
        bits = []
        for mono in sorted(self.terms):
            ys = "^".join(f"y[{r},{s}]" for r, s in mono) or "1"
            bits.append(f"({self.terms[mono]}) {ys}")
        return " + ".join(bits) if bits else "0"


def expand_rho_monomial(rng: SuperRing, mono: tuple[Pair, ...]) -> WedgeExpression:
    """Multiply out a wedge of rho factors into y-symbol wedge monomials."""
    out = WedgeExpression(rng, {(): rng.one()})
    for (i, j) in mono:
        factor = rho_single(rng, i, j)
        nxt = WedgeExpression(rng, {})
        for prev_mono, prev_coeff in out.terms.items():
            for ysym, coeff in factor:
                sign, sorted_mono = _sort_sign(prev_mono + (ysym,))
                if sign == 0:
                    continue
                nxt.add(sorted_mono, (prev_coeff * coeff).scale(sign))
        out = nxt
    return out


def rho_wedge_to_y(rng: SuperRing, rw: RhoWedge) -> WedgeExpression:
    out = WedgeExpression(rng, {})
    for mono, coeff in sorted(rw.items()):
        part = expand_rho_monomial(rng, mono)
        for ymono, c in part.terms.items():
            out.add(ymono, c.scale(coeff))
    return out


# -- construction of the primitive vectors -------------------------------------

def build_primitive(t_plus: SkewTableau, lam: HookSplit, mu: Partition,
                    nu: Partition) -> WedgeExpression:
    """Scaled wedge expression with every structured denominator cleared.

    The operator sum is expanded over the y basis, multiplied by the
    positive part of the scaling exponents and divided exactly by the
    negative part.  A failed division falsifies a verified statement and is
    raised, never silenced.
    """
    rng = ring(lam.m, lam.n)
    pair = reposition(t_plus, lam.minus, nu, lam.m)
    rw = tau_rho_wedge(t_plus, pair.rpos, lam.m)
    w = rho_wedge_to_y(rng, rw)
    mi = q_plus(t_plus, lam.m)
    dv = v_ij_denominator(lam, mi)
    mult = rng.one()
    divisors: list[tuple[Poly, int]] = []
    for a, e in enumerate(dv.plus, start=1):
        if e > 0:
            mult = mult * dplus(rng, range(1, a + 1)) ** e
        elif e < 0:
            divisors.append((dplus(rng, range(1, a + 1)), -e))
    for b, e in enumerate(dv.minus, start=1):
        if e > 0:
            mult = mult * zminor(rng, b, range(1, b + 1)) ** e
        elif e < 0:
            divisors.append((zminor(rng, b, range(1, b + 1)), -e))
    w = w.scale_poly(mult)
    return w.map_coeffs(lambda c: exact_divide_many(c, divisors))


def expand_wedge(w: WedgeExpression) -> Localized:
    """Substitute the Schur-complement generators and the odd fractions."""
    rng = w.ring
    total = Localized(rng.zero(), 0)
    ycache: dict[YSym, Localized] = {}
    for mono, coeff in sorted(w.terms.items()):
        term = sr.expand_z(coeff)
        for (r, s) in mono:
            if (r, s) not in ycache:
                ycache[(r, s)] = y_element(rng, r, rng.m + s)
            term = term * ycache[(r, s)]
        total = total + term
    return total


def even_lowering_pairs(m: int, n: int) -> list[tuple[int, int]]:
    pairs = [(i, j) for j in range(1, m + 1) for i in range(j + 1, m + 1)]
    pairs += [(i, j) for j in range(m + 1, m + n + 1) for i in range(j + 1, m + n + 1)]
    return pairs


def verify_even_primitive(w: WedgeExpression) -> dict:
    """Apply every even lowering superderivation to the expanded element."""
    rng = w.ring
    element = expand_wedge(w)
    pairs = {}
    for (i, j) in even_lowering_pairs(rng.m, rng.n):
        d = sr.derive(element, i, j)
        pairs[f"{i},{j}"] = "zero" if d.is_zero() else "nonzero"
    return {
        "pairs": pairs,
        "all_zero": all(v == "zero" for v in pairs.values()),
        "expanded_polynomial": element.is_polynomial(),
        "expanded_zero": element.is_zero(),
    }


def rho_bar(rng: SuperRing, mi: MultiIndex) -> WedgeExpression:
    """Wedge of the rho factors of a multiindex, in canonical order."""
    sign, mono = _sort_sign(mi)
    if sign == 0:
        return WedgeExpression(rng, {})
    out = expand_rho_monomial(rng, mono)
    return WedgeExpression(rng, {k: v.scale(sign) for k, v in out.terms.items()}) \
        if sign < 0 else out


# -- the tensor-level operator --------------------------------------------------

def canonical_p_plus(mi: MultiIndex, shape: SkewShape) -> tuple[Cell, ...]:
    """Positions with even component c take the cells of column c in order."""
    cells = plus_reading_cells(shape)
    cols: dict[int, list[Cell]] = {}
    for c in cells:
        cols.setdefault(c[1], []).append(c)
    taken = {c: 0 for c in cols}
    out = []
    for (i, _) in mi:
        col = cols.get(i, [])
        if taken.get(i, 0) >= len(col):
            raise IncompatiblePositioningError(
                f"component {i} exceeds the column capacity of {shape}")
        out.append(col[taken[i]])
        taken[i] += 1
    if len(out) != len(cells):
        raise IncompatiblePositioningError("content does not fill the diagram")
    return tuple(out)


def canonical_p_minus(mi: MultiIndex, shape: SkewShape,
                      reverse_rows: bool = False) -> tuple[Cell, ...]:
    """Positions with odd component r take the cells of row r in order."""
    rows: dict[int, list[Cell]] = {}
    for c in shape.cells():
        rows.setdefault(c[0], []).append(c)
    if reverse_rows:
        rows = {r: list(reversed(v)) for r, v in rows.items()}
    taken = {r: 0 for r in rows}
    out = []
    for (_, j) in mi:
        row = rows.get(j, [])
        if taken.get(j, 0) >= len(row):
            raise IncompatiblePositioningError(
                f"component {j} exceeds the row capacity of {shape}")
        out.append(row[taken[j]])
        taken[j] += 1
    if len(out) != len(shape.cells()):
        raise IncompatiblePositioningError("content does not fill the diagram")
    return tuple(out)


def sigma_members(mi: MultiIndex, p_plus: tuple[Cell, ...],
                  p_minus: tuple[Cell, ...]) -> list[tuple[int, MultiIndex]]:
    """Signed sequences: even components permuted inside source rows, odd
    components inside target columns, both with permutation signs."""
    k = len(mi)
    row_groups = _position_groups(list(p_plus), key=lambda c: c[0])
    col_groups = _position_groups(list(p_minus), key=lambda c: c[1])
    out = []
    for ihat in _group_perms(row_groups, k):
        sign_i = _perm_sign_positions(ihat)
        for jhat in _group_perms(col_groups, k):
            sign = sign_i * _perm_sign_positions(jhat)
            seq = tuple((mi[ihat[l]][0], mi[jhat[l]][1]) for l in range(k))
            out.append((sign, seq))
    return out


def _perm_sign_positions(src: tuple[int, ...]) -> int:
    inv = sum(1 for a in range(len(src)) for b in range(a + 1, len(src))
              if src[a] > src[b])
    return -1 if inv & 1 else 1


def _signed_display(t: SkewTableau, groups: list[list[Cell]]) -> dict[SkewTableau, int]:
    out: dict[SkewTableau, int] = {}

    def rec(gi: int, cur: dict[Cell, Cell], sign: int):
        if gi == len(groups):
            entries = {c: t[cur.get(c, c)] for c in t.shape.cells()}
            _add(out, SkewTableau.from_entries(t.shape, entries), sign)
            return
        grp = groups[gi]
        for perm in permutations(grp):
            psign = _perm_sign_positions(tuple(grp.index(p) for p in perm))
            for a, b in zip(grp, perm):
                cur[a] = b
            rec(gi + 1, cur, sign * psign)

    rec(0, {}, 1)
    return out


def sigma_plus_display(t: SkewTableau) -> dict[SkewTableau, int]:
    """Signed sum over entry permutations inside each row of the tableau."""
    rows: dict[int, list[Cell]] = {}
    for c in t.shape.cells():
        rows.setdefault(c[0], []).append(c)
    return _signed_display(t, [sorted(v) for _, v in sorted(rows.items())])


def sigma_minus_display(t: SkewTableau) -> dict[SkewTableau, int]:
    """Signed sum over entry permutations inside each column of the tableau."""
    cols: dict[int, list[Cell]] = {}
    for c in t.shape.cells():
        cols.setdefault(c[1], []).append(c)
    return _signed_display(t, [sorted(v) for _, v in sorted(cols.items())])


def sigma_tensor(rng: SuperRing, members: list[tuple[int, MultiIndex]]) -> dict:
    """Expand signed multiindex sequences at tensor level: ordered y tuples,
    no wedge reduction, coefficients multiplied out."""
    out: dict[tuple[YSym, ...], Poly] = {}
    for sign, seq in members:
        parts = [rho_single(rng, i, j) for (i, j) in seq]
        stack: list[tuple[tuple[YSym, ...], Poly]] = [((), rng.one().scale(sign))]
        for factor in parts:
            nxt = []
            for ytup, coeff in stack:
                for ysym, c in factor:
                    nxt.append((ytup + (ysym,), coeff * c))
            stack = nxt
        for ytup, coeff in stack:
            cur = out.get(ytup)
            s = coeff if cur is None else cur + coeff
            if s.is_zero():
                out.pop(ytup, None)
            else:
                out[ytup] = s
    return out


def tensor_divide(tensor: dict, divisors: list[tuple[Poly, int]]) -> dict | None:
    out = {}
    for ytup, coeff in tensor.items():
        q = exact_divide_many(coeff, divisors)
        if q is None:
            return None
        if not q.is_zero():
            out[ytup] = q
    return out


def tensor_to_wedge(rng: SuperRing, tensor: dict) -> WedgeExpression:
    out = WedgeExpression(rng, {})
    for ytup, coeff in tensor.items():
        sign, mono = _sort_sign(ytup)
        if sign:
            out.add(mono, coeff.scale(sign))
    return out


# -- congruences of neighbouring rho factors ------------------------------------

def tensor_pair(rng: SuperRing, a: Pair, b: Pair) -> dict:
    """rho_a tensor rho_b with coefficients multiplied, y pairs kept ordered."""
    out: dict[tuple[YSym, YSym], Poly] = {}
    for y1, c1 in rho_single(rng, *a):
        for y2, c2 in rho_single(rng, *b):
            key = (y1, y2)
            cur = out.get(key)
            s = c1 * c2 if cur is None else cur + c1 * c2
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
    return out


def _tensor_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        cur = out.get(k)
        s = (-v) if cur is None else cur - v
        if s.is_zero():
            out.pop(k, None)
        else:
            out[k] = s
    return out


def check_l3(rng: SuperRing, i: int, j1: int, j2: int) -> bool:
    """The antisymmetrized neighbour tensor is divisible by the nested
    determinant on the even side."""
    lhs = _tensor_sub(tensor_pair(rng, (i, j1), (i + 1, j2)),
                      tensor_pair(rng, (i + 1, j1), (i, j2)))
    d = dplus(rng, range(1, i + 1))
    return all(exact_divide(c, d) is not None for c in lhs.values())


def check_l4(rng: SuperRing, i1: int, i2: int, j: int) -> bool:
    """Same on the odd side, with the leading principal complement minor."""
    lhs = _tensor_sub(tensor_pair(rng, (i1, j), (i2, j + 1)),
                      tensor_pair(rng, (i1, j + 1), (i2, j)))
    d = zminor(rng, j, range(1, j + 1))
    return all(exact_divide(c, d) is not None for c in lhs.values())


# -- bases and ranks -------------------------------------------------------------

def exact_rank(rows: list[dict]) -> int:
    """Rank over the rationals of sparse rows keyed by arbitrary hashables."""
    work = [{k: Fraction(v) for k, v in row.items() if v} for row in rows]
    rank = 0
    while True:
        work = [r for r in work if r]
        if not work:
            return rank
        pivot_row = work.pop(0)
        pivot_key = sorted(pivot_row)[0]
        pivot_val = pivot_row[pivot_key]
        rank += 1
        reduced = []
        for r in work:
            if pivot_key in r:
                factor = r[pivot_key] / pivot_val
                new = dict(r)
                for k, v in pivot_row.items():
                    s = new.get(k, Fraction(0)) - factor * v
                    if s:
                        new[k] = s
                    else:
                        new.pop(k, None)
                reduced.append(new)
            else:
                reduced.append(r)
        work = reduced


def vector_row(w: WedgeExpression) -> dict:
    row = {}
    for mono, coeff in w.terms.items():
        for term_mono, c in coeff.terms.items():
            row[(mono, term_mono)] = c
    return row


def basis_for_weight(lam: HookSplit, mu: Partition, nu: Partition):
    """All constructed vectors for the weight, with an exact rank certificate."""
    marked = enumerate_marked(lam, mu, nu)
    vectors = [build_primitive(p.t_plus, lam, mu, nu) for p in marked]
    rank = exact_rank([vector_row(w) for w in vectors])
    if rank != len(marked):
        raise RankDeficientError(
            f"rank {rank} below the marked count {len(marked)} at {lam}, {mu}, {nu}")
    return marked, vectors, rank


def berezinian_shift(weight: tuple[int, ...], m: int, n: int):
    """Minimal twist making the last even component at least n and the last
    component nonnegative; records the determinant powers used."""
    if len(weight) != m + n:
        raise ValueError("weight length must be m + n")
    a_plus = max(0, n - weight[m - 1])
    a_minus = max(0, -weight[m + n - 1])
    shifted = tuple(w + a_plus if idx < m else w + a_minus
                    for idx, w in enumerate(weight))
    return shifted, a_plus, a_minus
