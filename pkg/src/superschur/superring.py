"""Exact supercommutative polynomial arithmetic.

The ring has generators ``c[i,j]`` for ``1 <= i,j <= m+n`` whose parity is
``|i| + |j| mod 2`` (indices up to m are even), together with auxiliary even
generators ``z[r,s]`` standing for the Schur-complement entries
``c[m+r,m+s] - (C21 C11^-1 C12)[r,s]``.  Working with ``z`` keeps all
operator-level coefficients inside an honest commutative polynomial ring;
``expand`` substitutes the fractions back in when a computation genuinely
needs the localized superring.

Monomials are stored as ``(even_exponents, odd_bitmask)``; odd generators
square to zero and reordering them into canonical ``(i, j)`` order is the
only source of signs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable

from .shapes import HookSplit

EvenKey = tuple[tuple[int, int], ...]
Monomial = tuple[EvenKey, int]

_cancel_check: Callable[[], bool] | None = None


class CancelledError(RuntimeError):
    pass


class TermLimitExceededError(RuntimeError):
    """A polynomial outgrew SUPERSCHUR_MAX_TERMS."""


class DivisionFailedError(RuntimeError):
    """An exact division that a verified statement guarantees did not succeed."""


def set_cancel_check(cb: Callable[[], bool] | None) -> None:
    """Install a cooperative cancellation probe consulted inside long products."""
    global _cancel_check
    _cancel_check = cb


def _term_cap() -> int:
    return int(os.environ.get("SUPERSCHUR_MAX_TERMS", "5000000"))


def _merge_odd(a: int, b: int) -> tuple[int, int]:
    """Concatenate two canonical odd blocks; sign is the sort parity, 0 on repeats."""
    if a & b:
        return 0, 0
    inv = 0
    bb = b
    while bb:
        low = bb & -bb
        j = low.bit_length() - 1
        inv += bin(a >> (j + 1)).count("1")
        bb ^= low
    return (-1 if inv & 1 else 1), a | b


class SuperRing:
    """Generator tables and polynomial constructors for fixed (m, n)."""

    def __init__(self, m: int, n: int):
        if m < 1 or n < 0:
            raise ValueError("need m >= 1 and n >= 0")
        self.m = m
        self.n = n
        self.size = m + n
        names: list[str] = []
        parity: list[int] = []
        weights: list[tuple[int, ...]] = []
        self._c: dict[tuple[int, int], int] = {}
        self._z: dict[tuple[int, int], int] = {}
        for i in range(1, self.size + 1):
            for j in range(1, self.size + 1):
                self._c[(i, j)] = len(names)
                names.append(f"c[{i},{j}]")
                parity.append(((i > m) + (j > m)) % 2)
                w = [0] * self.size
                w[j - 1] = 1
                weights.append(tuple(w))
        for r in range(1, n + 1):
            for s in range(1, n + 1):
                self._z[(r, s)] = len(names)
                names.append(f"z[{r},{s}]")
                parity.append(0)
                w = [0] * self.size
                w[m + s - 1] = 1
                weights.append(tuple(w))
        self.names = tuple(names)
        self.parity = tuple(parity)
        self.gen_weights = tuple(weights)
        odd = [g for g in range(len(names)) if parity[g]]
        self.odd_bit = {g: b for b, g in enumerate(odd)}
        self.odd_gen = tuple(odd)

    # -- generator lookups -------------------------------------------------
    def cidx(self, i: int, j: int) -> int:
        return self._c[(i, j)]

    def zidx(self, r: int, s: int) -> int:
        return self._z[(r, s)]

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return Poly(self, {((), 0): 1})

    def scalar(self, value) -> "Poly":
        return Poly(self, {((), 0): value} if value else {})

    def gen(self, idx: int) -> "Poly":
        if self.parity[idx]:
            return Poly(self, {((), 1 << self.odd_bit[idx]): 1})
        return Poly(self, {(((idx, 1),), 0): 1})

    def c(self, i: int, j: int) -> "Poly":
        return self.gen(self.cidx(i, j))

    def z(self, r: int, s: int) -> "Poly":
        return self.gen(self.zidx(r, s))


@lru_cache(maxsize=None)
def ring(m: int, n: int) -> SuperRing:
    return SuperRing(m, n)


class Poly:
    """Sparse exact-coefficient polynomial over a SuperRing."""

    __slots__ = ("ring", "terms")

    def __init__(self, rng: SuperRing, terms: dict[Monomial, int | Fraction]):
        self.ring = rng
        self.terms = terms
        if len(terms) > _term_cap():
            raise TermLimitExceededError(f"{len(terms)} terms exceeds cap")

    # -- basics ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.ring is other.ring and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, 0) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Poly(self.ring, out)

    def __neg__(self) -> "Poly":
        return Poly(self.ring, {mono: -c for mono, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def scale(self, value) -> "Poly":
        if not value:
            return self.ring.zero()
        return Poly(self.ring, {mono: c * value for mono, c in self.terms.items()})

    def __mul__(self, other: "Poly") -> "Poly":
        out: dict[Monomial, int | Fraction] = {}
        cap = _term_cap()
        for (e1, o1), c1 in self.terms.items():
            if _cancel_check is not None and _cancel_check():
                raise CancelledError("product interrupted")
            d1 = dict(e1)
            for (e2, o2), c2 in other.terms.items():
                sign, om = _merge_odd(o1, o2)
                if sign == 0:
                    continue
                de = dict(d1)
                for g, e in e2:
                    de[g] = de.get(g, 0) + e
                mono = (tuple(sorted(de.items())), om)
                s = out.get(mono, 0) + sign * c1 * c2
                if s:
                    out[mono] = s
                    if len(out) > cap:
                        raise TermLimitExceededError(f"{len(out)} terms exceeds cap")
                else:
                    out.pop(mono, None)
        return Poly(self.ring, out)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = self.ring.one()
        for _ in range(k):
            out = out * self
        return out

    # -- inspection ----------------------------------------------------------
    def parity(self) -> int | None:
        """0 or 1 if homogeneous in parity, else None."""
        seen = {bin(om).count("1") % 2 for (_, om) in self.terms}
        return seen.pop() if len(seen) == 1 else None

    def total_degree(self) -> int:
        return max((sum(e for _, e in ek) + bin(om).count("1")
                    for (ek, om) in self.terms), default=0)

    def weight(self) -> tuple[int, ...] | None:
        """Common torus weight of all terms under the column grading."""
        w = None
        for (ek, om) in self.terms:
            cur = [0] * self.ring.size
            for g, e in ek:
                for a, x in enumerate(self.ring.gen_weights[g]):
                    cur[a] += e * x
            mask = om
            while mask:
                low = mask & -mask
                g = self.ring.odd_gen[low.bit_length() - 1]
                for a, x in enumerate(self.ring.gen_weights[g]):
                    cur[a] += x
                mask ^= low
            cur = tuple(cur)
            if w is None:
                w = cur
            elif w != cur:
                return None
        return w

    def uses_z(self) -> bool:
        z0 = len(self.ring.names) - self.ring.n * self.ring.n
        return any(g >= z0 for (ek, _) in self.terms for g, _ in ek)

    def _dense(self, ek: EvenKey) -> tuple[int, ...]:
        v = [0] * len(self.ring.names)
        for g, e in ek:
            v[g] = e
        return tuple(v)

    def _order_key(self, mono: Monomial):
        ek, om = mono
        deg = sum(e for _, e in ek) + bin(om).count("1")
        return (deg, self._dense(ek), om)

    def leading(self) -> tuple[Monomial, int | Fraction]:
        mono = max(self.terms, key=self._order_key)
        return mono, self.terms[mono]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for mono in sorted(self.terms, key=self._order_key, reverse=True):
            ek, om = mono
            c = self.terms[mono]
            factors = []
            for g, e in ek:
                factors.append(self.ring.names[g] + (f"^{e}" if e > 1 else ""))
            mask = om
            while mask:
                low = mask & -mask
                factors.append(self.ring.names[self.ring.odd_gen[low.bit_length() - 1]])
                mask ^= low
            body = " * ".join(factors) if factors else "1"
            bits.append(f"{c} * {body}")
        return " + ".join(bits)

    __repr__ = __str__


# -- derivations -----------------------------------------------------------

def _mono_poly(rng: SuperRing, mono: Monomial, coeff=1) -> Poly:
    return Poly(rng, {mono: coeff}) if coeff else rng.zero()


def poly_derive(p: Poly, i: int, j: int) -> Poly:
    """Right superderivation: c[k,i] maps to c[k,j], signed Leibniz rule.

    The sign on a factor is (|i|+|j|) times the parity of everything to its
    right, with monomials read as (even block) x (odd block in mask order).
    """
    rng = p.ring
    if p.uses_z():
        raise ValueError("derivation is defined on the raw generators only")
    act_parity = ((i > rng.m) + (j > rng.m)) % 2
    out = rng.zero()
    for (ek, om), coeff in p.terms.items():
        odd_bits = []
        mask = om
        while mask:
            low = mask & -mask
            odd_bits.append(low.bit_length() - 1)
            mask ^= low
        odd_gens = [rng.odd_gen[b] for b in odd_bits]
        n_odd = len(odd_gens)
        # even factors: everything to their right includes the whole odd block
        sign_even = -1 if (act_parity * n_odd) % 2 else 1
        for g, e in ek:
            gi, gj = divmod(g, rng.size)
            if gj + 1 != i:
                continue
            rest = tuple((h, x - 1) if h == g else (h, x)
                         for h, x in ek if h != g or x > 1)
            repl = rng.c(gi + 1, j)
            term = _mono_poly(rng, (rest, om), coeff * e * sign_even) * repl
            out = out + term
        # odd factors, rightmost first has empty suffix
        for pos, g in enumerate(odd_gens):
            gi, gj = divmod(g, rng.size)
            if gj + 1 != i:
                continue
            suffix = n_odd - pos - 1
            sgn = -1 if (act_parity * suffix) % 2 else 1
            prefix_mask = 0
            for b in odd_bits[:pos]:
                prefix_mask |= 1 << b
            suffix_mask = 0
            for b in odd_bits[pos + 1:]:
                suffix_mask |= 1 << b
            repl = rng.c(gi + 1, j)
            term = _mono_poly(rng, (ek, prefix_mask), coeff * sgn) * repl
            term = term * _mono_poly(rng, ((), suffix_mask), 1)
            out = out + term
    return out


# -- determinants and the localized elements --------------------------------

def det_of(rng: SuperRing, rows: list[list[Poly]]) -> Poly:
    """Determinant of a square matrix of even polynomials (Leibniz sum)."""
    size = len(rows)
    out = rng.zero()
    for perm in permutations(range(size)):
        sign = _perm_sign(perm)
        term = rng.one()
        for r in range(size):
            term = term * rows[r][perm[r]]
        out = out + term.scale(sign)
    return out


def _perm_sign(perm: Iterable[int]) -> int:
    perm = list(perm)
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
              if perm[a] > perm[b])
    return -1 if inv & 1 else 1


def dplus(rng: SuperRing, cols: Iterable[int]) -> Poly:
    """Determinant with rows 1..s and the given columns, all at most m."""
    cols = list(cols)
    for c in cols:
        if not 1 <= c <= rng.m:
            raise IndexError(f"column {c} outside 1..{rng.m}")
    return det_of(rng, [[rng.c(r, c) for c in cols] for r in range(1, len(cols) + 1)])


def det_c11(rng: SuperRing) -> Poly:
    return dplus(rng, range(1, rng.m + 1))


def adjugate_entry(rng: SuperRing, k: int, a: int) -> Poly:
    """adj(C11)[k,a]: signed minor with row a and column k removed."""
    rows = [r for r in range(1, rng.m + 1) if r != a]
    cols = [c for c in range(1, rng.m + 1) if c != k]
    minor = det_of(rng, [[rng.c(r, c) for c in cols] for r in rows])
    return minor.scale(_perm_sign_for_cofactor(k, a))


def _perm_sign_for_cofactor(k: int, a: int) -> int:
    return -1 if (k + a) & 1 else 1


@dataclass(frozen=True)
class Localized:
    """A fraction num / det(C11)^power, kept normalized."""

    num: Poly
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError("negative localization power")

    @staticmethod
    def of(num: Poly, power: int = 0) -> "Localized":
        d = det_c11(num.ring)
        while power > 0 and not num.is_zero():
            q = exact_divide(num, d)
            if q is None:
                break
            num, power = q, power - 1
        if num.is_zero():
            power = 0
        return Localized(num, power)

    @property
    def ring(self) -> SuperRing:
        return self.num.ring

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.power == 0

    def __add__(self, other: "Localized") -> "Localized":
        d = det_c11(self.ring)
        p = max(self.power, other.power)
        a = self.num * d ** (p - self.power)
        b = other.num * d ** (p - other.power)
        return Localized.of(a + b, p)

    def __neg__(self) -> "Localized":
        return Localized(-self.num, self.power)

    def __sub__(self, other: "Localized") -> "Localized":
        return self + (-other)

    def __mul__(self, other: "Localized") -> "Localized":
        return Localized.of(self.num * other.num, self.power + other.power)

    def scale(self, v) -> "Localized":
        return Localized(self.num.scale(v), self.power if v else 0)

    def __pow__(self, k: int) -> "Localized":
        out = Localized(self.ring.one(), 0)
        for _ in range(k):
            out = out * self
        return out

    def weight(self) -> tuple[int, ...] | None:
        w = self.num.weight()
        if w is None:
            return None
        dw = [0] * self.ring.size
        for a in range(self.ring.m):
            dw[a] = self.power
        return tuple(x - y for x, y in zip(w, dw))

    def __str__(self) -> str:
        return f"({self.num}) / D^{self.power}" if self.power else str(self.num)


def derive(x: Localized, i: int, j: int) -> Localized:
    """Quotient rule (u/D^N)' = (u' D - N u D') / D^(N+1)."""
    u, npow = x.num, x.power
    du = poly_derive(u, i, j)
    if npow == 0:
        return Localized.of(du, 0)
    d = det_c11(x.ring)
    dd = poly_derive(d, i, j)
    return Localized.of(du * d - (u * dd).scale(npow), npow + 1)


def y_element(rng: SuperRing, k: int, l: int) -> Localized:
    """The odd localized generator sum_a adj(C11)[k,a] c[a,l] / D."""
    if not (1 <= k <= rng.m and rng.m < l <= rng.size):
        raise IndexError(f"y requires 1<=k<=m<l<=m+n, got ({k},{l})")
    out = rng.zero()
    for a in range(1, rng.m + 1):
        out = out + adjugate_entry(rng, k, a) * rng.c(a, l)
    return Localized.of(out, 1)


def phi_c22(rng: SuperRing, r: int, l: int) -> Localized:
    """Schur-complement entry c[m+r,m+l] - (C21 C11^-1 C12)[r,l]."""
    m = rng.m
    num = rng.c(m + r, m + l) * det_c11(rng)
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            num = num - rng.c(m + r, a) * adjugate_entry(rng, a, b) * rng.c(b, m + l)
    return Localized.of(num, 1)


def dminus_raw(rng: SuperRing, idxs: Iterable[int]) -> Localized:
    """Determinant over the localized Schur-complement entries, rows 1..t."""
    idxs = list(idxs)
    for j in idxs:
        if not rng.m < j <= rng.size:
            raise IndexError(f"index {j} outside {rng.m + 1}..{rng.size}")
    t = len(idxs)
    if t == 0:
        return Localized(rng.one(), 0)
    entries = [[phi_c22(rng, r, j - rng.m) for j in idxs] for r in range(1, t + 1)]

    def laplace(rows: list[list[Localized]]) -> Localized:
        k = len(rows)
        if k == 1:
            return rows[0][0]
        acc = Localized(rng.zero(), 0)
        for c in range(k):
            minor = [[row[cc] for cc in range(k) if cc != c] for row in rows[1:]]
            term = rows[0][c] * laplace(minor)
            acc = acc + (term if c % 2 == 0 else -term)
        return acc

    return laplace(entries)


def zminor(rng: SuperRing, nrows: int, cols: Iterable[int]) -> Poly:
    """det Z[1..nrows, cols] in the abstract Schur-complement generators."""
    cols = list(cols)
    if len(cols) != nrows:
        raise ValueError("square minor required")
    if nrows == 0:
        return rng.one()
    return det_of(rng, [[rng.z(r, c) for c in cols] for r in range(1, nrows + 1)])


def dminus_abstract(rng: SuperRing, idxs: Iterable[int]) -> Poly:
    """The abstract counterpart of dminus_raw over the z generators."""
    idxs = [j - rng.m for j in idxs]
    for j in idxs:
        if not 1 <= j <= rng.n:
            raise IndexError("index outside the odd block")
    return zminor(rng, len(idxs), idxs)


def expand_z(p: Poly) -> Localized:
    """Substitute z[r,s] by its localized expression in the raw generators."""
    rng = p.ring
    z0 = len(rng.names) - rng.n * rng.n
    cache: dict[int, Localized] = {}
    out = Localized(rng.zero(), 0)
    for (ek, om), coeff in p.terms.items():
        term = Localized(_mono_poly(rng, (tuple((g, e) for g, e in ek if g < z0), om), coeff), 0)
        for g, e in ek:
            if g < z0:
                continue
            if g not in cache:
                r, s = divmod(g - z0, rng.n)
                cache[g] = phi_c22(rng, r + 1, s + 1)
            for _ in range(e):
                term = term * cache[g]
        out = out + term
    return out


def highest_vector(rng: SuperRing, lam: HookSplit) -> Localized:
    """Product of nested determinants realizing the heighest weight vector.

    Exponents follow the per-block bideterminant shape: the full-width
    factors carry the last component of the corresponding block.
    """
    if lam.m != rng.m or lam.n != rng.n:
        raise ValueError("hook split does not match the ring")
    out = Localized(rng.one(), 0)
    for a in range(1, rng.m + 1):
        e = lam.plus[a] - lam.plus[a + 1] if a < rng.m else lam.plus[rng.m]
        if e:
            out = out * Localized(dplus(rng, range(1, a + 1)) ** e, 0)
    for b in range(1, rng.n + 1):
        e = lam.minus[b] - lam.minus[b + 1] if b < rng.n else lam.minus[rng.n]
        if e:
            out = out * dminus_raw(rng, range(rng.m + 1, rng.m + b + 1)) ** e
    return out


def highest_vector_abstract(rng: SuperRing, lam: HookSplit) -> Poly:
    """Same product with the odd-block determinants kept as z minors."""
    if lam.m != rng.m or lam.n != rng.n:
        raise ValueError("hook split does not match the ring")
    out = rng.one()
    for a in range(1, rng.m + 1):
        e = lam.plus[a] - lam.plus[a + 1] if a < rng.m else lam.plus[rng.m]
        if e:
            out = out * dplus(rng, range(1, a + 1)) ** e
    for b in range(1, rng.n + 1):
        e = lam.minus[b] - lam.minus[b + 1] if b < rng.n else lam.minus[rng.n]
        if e:
            out = out * zminor(rng, b, range(1, b + 1)) ** e
    return out


# -- exact division ----------------------------------------------------------

def exact_divide(p: Poly, q: Poly) -> Poly | None:
    """Quotient h with p = q * h, or None.

    The divisor must involve only even generators; each odd-block component
    of p is then divided in the plain commutative sense, which makes a
    nonzero remainder a sound certificate of non-divisibility.  Successful
    quotients are re-multiplied as a final check.
    """
    rng = p.ring
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if any(om for (_, om) in q.terms):
        raise ValueError("divisor must be even-generator-only")
    by_mask: dict[int, dict[EvenKey, int | Fraction]] = {}
    for (ek, om), c in p.terms.items():
        by_mask.setdefault(om, {})[ek] = c

    q_terms = {ek: c for (ek, _), c in q.terms.items()}
    q_lead = max(q_terms, key=lambda ek: p._order_key((ek, 0)))
    q_lc = q_terms[q_lead]
    q_lead_exp = dict(q_lead)

    quotient: dict[Monomial, int | Fraction] = {}
    for om, comp in by_mask.items():
        work = dict(comp)
        while work:
            lead = max(work, key=lambda ek: p._order_key((ek, 0)))
            lc = work[lead]
            lead_exp = dict(lead)
            rest = {}
            for g, e in q_lead_exp.items():
                d = lead_exp.get(g, 0) - e
                if d < 0:
                    return None
                if d:
                    rest[g] = d
            for g, e in lead_exp.items():
                if g not in q_lead_exp and e:
                    rest[g] = e
            if isinstance(lc, int) and isinstance(q_lc, int) and lc % q_lc == 0:
                qc = lc // q_lc
            else:
                qc = Fraction(lc) / Fraction(q_lc)
            qmono = tuple(sorted(rest.items()))
            quotient[(qmono, om)] = qc
            for ek2, c2 in q_terms.items():
                merged = dict(rest)
                for g, e in ek2:
                    merged[g] = merged.get(g, 0) + e
                key = tuple(sorted(merged.items()))
                s = work.get(key, 0) - qc * c2
                if s:
                    work[key] = s
                else:
                    work.pop(key, None)
    h = Poly(rng, quotient)
    if not (q * h - p).is_zero():
        return None
    return h


def exact_divide_many(p: Poly, divisors: Iterable[tuple[Poly, int]]) -> Poly | None:
    for q, e in divisors:
        for _ in range(e):
            nxt = exact_divide(p, q)
            if nxt is None:
                return None
            p = nxt
    return p


# -- determinantal identity checks -------------------------------------------

def _tuples(values: list[int], length: int) -> list[tuple[int, ...]]:
    if length == 0:
        return [()]
    return [t + (v,) for t in _tuples(values, length - 1) for v in values]


def check_d2(rng: SuperRing, xs: tuple[int, ...], avec: tuple[int, ...]) -> bool:
    s = len(avec)
    lhs = rng.zero()
    for t in range(1, s + 1):
        rest = avec[:t - 1] + avec[t:]
        term = dplus(rng, xs + (avec[t - 1],)) * dplus(rng, rest)
        lhs = lhs + term.scale(-1 if (s - t) & 1 else 1)
    rhs = dplus(rng, xs) * dplus(rng, avec)
    return (lhs - rhs).is_zero()


def check_d3(rng: SuperRing, xs: tuple[int, ...], avec: tuple[int, ...]) -> bool:
    s = len(avec)
    lhs = rng.zero()
    for perm in permutations(range(s)):
        term = rng.one()
        for t in range(1, s + 1):
            term = term * dplus(rng, xs[:t - 1] + (avec[perm[t - 1]],))
        lhs = lhs + term.scale(_perm_sign(perm))
    rhs = dplus(rng, avec)
    for t in range(1, s):
        rhs = rhs * dplus(rng, xs[:t])
    return (lhs - rhs).is_zero()


def check_pr1(rng: SuperRing, u: int, avec: tuple[int, ...]) -> bool:
    s = len(avec)
    lhs = rng.zero()
    for perm in permutations(range(s)):
        term = rng.one()
        for t in range(1, s + 1):
            term = term * dplus(rng, tuple(range(1, u + t - 1)) + (avec[perm[t - 1]],))
        lhs = lhs + term.scale(_perm_sign(perm))
    rhs = dplus(rng, tuple(range(1, u)) + avec)
    for t in range(1, s):
        rhs = rhs * dplus(rng, range(1, u + t))
    return (lhs - rhs).is_zero()


def _dminus_hat(rng: SuperRing, top: int, removed: int) -> Poly:
    """Abstract D-minus over m+1..m+top with one index removed; zero if the
    removed index falls outside the range (the vanishing convention)."""
    if removed > top:
        return rng.zero()
    cols = [c for c in range(1, top + 1) if c != removed]
    return zminor(rng, top - 1, cols)


def check_d2prime(rng: SuperRing, xs: tuple[int, ...], avec: tuple[int, ...]) -> bool:
    s = len(avec)
    lhs = rng.zero()
    for t in range(1, s + 1):
        rest = avec[:t - 1] + avec[t:]
        term = (zminor(rng, len(xs) + 1, [x - rng.m for x in xs + (avec[t - 1],)])
                * zminor(rng, s - 1, [a - rng.m for a in rest]))
        lhs = lhs + term.scale(-1 if (s - t) & 1 else 1)
    rhs = (zminor(rng, len(xs), [x - rng.m for x in xs])
           * zminor(rng, s, [a - rng.m for a in avec]))
    return (lhs - rhs).is_zero()


def check_pr2(rng: SuperRing, u: int, avec: tuple[int, ...]) -> bool:
    """Signed products of hatted minors against the complement identity."""
    s = len(avec)
    arel = [a - rng.m for a in avec]
    lhs = rng.zero()
    for perm in permutations(range(s)):
        term = rng.one()
        for t in range(1, s + 1):
            term = term * _dminus_hat(rng, u + t - 1, arel[perm[t - 1]])
            if term.is_zero():
                break
        lhs = lhs + term.scale(_perm_sign(perm))
    bs = [c for c in range(1, u + s) if c not in arel]
    rhs = zminor(rng, u - 1, bs)
    for t in range(1, s):
        rhs = rhs * zminor(rng, u + t - 1, range(1, u + t))
    return (lhs - rhs).is_zero()


def check_det_identities(m: int, n: int, s_max: int = 3, u_max: int = 2) -> dict:
    """Sweep every identity over all index choices in range; exact equality."""
    rng = ring(m, n)
    report: dict[str, dict] = {}

    def record(name: str, ok: bool, instance) -> None:
        entry = report.setdefault(name, {"instances": 0, "failures": []})
        entry["instances"] += 1
        if not ok:
            entry["failures"].append(repr(instance))

    cols = list(range(1, m + 1))
    for s in range(2, min(s_max, m) + 1):
        for xs in _tuples(cols, s - 1):
            for avec in _tuples(cols, s):
                record("d2", check_d2(rng, xs, avec), (xs, avec))
                record("d3", check_d3(rng, xs, avec), (xs, avec))
        for u in range(1, u_max + 1):
            if u + s - 1 > m:
                continue
            for avec in _tuples(cols, s):
                record("pr1", check_pr1(rng, u, avec), (u, avec))

    ocols = list(range(m + 1, m + n + 1))
    for s in range(2, min(s_max, n) + 1):
        for xs in _tuples(ocols, s - 1):
            for avec in _tuples(ocols, s):
                record("d2prime", check_d2prime(rng, xs, avec), (xs, avec))
        for u in range(1, u_max + 1):
            if u + s - 1 > n:
                continue
            for avec in [t for t in _tuples(ocols, s)
                         if all(t[i] < t[i + 1] for i in range(s - 1))
                         and t[-1] <= m + u + s - 1]:
                record("pr2", check_pr2(rng, u, avec), (u, avec))

    report["all_pass"] = all(not v["failures"] for k, v in report.items()
                             if isinstance(v, dict))
    return report
