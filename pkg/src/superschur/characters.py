"""Schur, skew Schur and hook Schur polynomials as exact integer-coefficient
symmetric polynomials, plus the even-primitive multiplicity they encode."""

from __future__ import annotations

from .lr import lr_coefficient
from .shapes import HookSplit, NotHookError, Partition, SkewShape, subpartitions

# A symmetric polynomial is a map from exponent vectors to integers.
SymPoly = dict[tuple[int, ...], int]


def _add_monomial(poly: SymPoly, expo: tuple[int, ...], coeff: int = 1) -> None:
    poly[expo] = poly.get(expo, 0) + coeff
    if poly[expo] == 0:
        del poly[expo]


def poly_mul(a: SymPoly, b: SymPoly) -> SymPoly:
    out: SymPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            _add_monomial(out, tuple(x + y for x, y in zip(ea, eb)), ca * cb)
    return out


def poly_add(a: SymPoly, b: SymPoly) -> SymPoly:
    out = dict(a)
    for e, c in b.items():
        _add_monomial(out, e, c)
    return out


def poly_pad(p: SymPoly, left: int, right: int) -> SymPoly:
    """Embed into a larger variable list with ``left``/``right`` zero slots."""
    return {(0,) * left + e + (0,) * right: c for e, c in p.items()}


def schur(mu: Partition, num_vars: int) -> SymPoly:
    """Sum of content monomials over semistandard tableaux with entries <= num_vars."""
    return skew_schur(SkewShape(mu, Partition()), num_vars)


def skew_schur(shape: SkewShape, num_vars: int) -> SymPoly:
    cells = shape.cells()
    out: SymPoly = {}
    entries: dict[tuple[int, int], int] = {}

    def rec(idx: int) -> None:
        if idx == len(cells):
            expo = [0] * num_vars
            for v in entries.values():
                expo[v - 1] += 1
            _add_monomial(out, tuple(expo))
            return
        i, j = cells[idx]
        lo = 1
        left = entries.get((i, j - 1))
        if left is not None:
            lo = max(lo, left)
        up = entries.get((i - 1, j))
        if up is not None:
            lo = max(lo, up + 1)
        for v in range(lo, num_vars + 1):
            entries[(i, j)] = v
            rec(idx + 1)
            del entries[(i, j)]

    rec(0)
    return out


def hook_schur_by_sum(whole: Partition, m: int, n: int) -> SymPoly:
    """Route one: sum over arm subshapes of Schur times conjugate skew Schur."""
    plus = Partition(whole.parts[:m])
    whole_conj = whole.conjugate()
    out: SymPoly = {}
    for mu in subpartitions(plus):
        sx = schur(mu, m)
        sy = skew_schur(SkewShape(whole_conj, mu.conjugate()), n)
        term = poly_mul(poly_pad(sx, 0, n), poly_pad(sy, m, 0))
        out = poly_add(out, term)
    return out


def hook_schur_by_tableaux(whole: Partition, m: int, n: int) -> SymPoly:
    """Route two: direct enumeration of hook-semistandard fillings.

    Entries 1..m+n fill the whole diagram; rows weakly increase with the
    symbols above m strictly increasing, columns weakly increase with the
    symbols up to m strictly increasing.
    """
    shape = SkewShape(whole, Partition())
    cells = shape.cells()
    out: SymPoly = {}
    entries: dict[tuple[int, int], int] = {}

    def ok(cell: tuple[int, int], v: int) -> bool:
        i, j = cell
        left = entries.get((i, j - 1))
        if left is not None:
            if v < left or (v == left and v > m):
                return False
        up = entries.get((i - 1, j))
        if up is not None:
            if v < up or (v == up and v <= m):
                return False
        return True

    def rec(idx: int) -> None:
        if idx == len(cells):
            expo = [0] * (m + n)
            for v in entries.values():
                expo[v - 1] += 1
            _add_monomial(out, tuple(expo))
            return
        cell = cells[idx]
        for v in range(1, m + n + 1):
            if ok(cell, v):
                entries[cell] = v
                rec(idx + 1)
                del entries[cell]

    rec(0)
    return out


def hook_schur_of(whole: Partition, m: int, n: int) -> SymPoly:
    """Both computation routes, asserted equal.  m or n may be zero."""
    if whole[m + 1] > n:
        raise NotHookError(f"{whole} does not fit the ({m}|{n}) hook")
    a = hook_schur_by_sum(whole, m, n)
    b = hook_schur_by_tableaux(whole, m, n)
    if a != b:
        raise AssertionError(f"hook Schur routes disagree for {whole} at ({m}|{n})")
    return a


def hook_schur(lam: HookSplit) -> SymPoly:
    return hook_schur_of(lam.to_partition(), lam.m, lam.n)


def primitive_multiplicity(lam: HookSplit, mu: Partition, nu: Partition) -> int:
    """Coefficient of S_mu(x) S_nu(y) in the hook Schur expansion."""
    return lr_coefficient(lam.conjugate_whole(), mu.conjugate(), nu)
