"""Schur, skew Schur and hook Schur polynomials on finite alphabets.

An alphabet is an ordered sequence of letters; a letter is a variable or a
monomial :class:`LaurentPoly` (e.g. ``z1*q^(1/2)``), so substituted alphabets
need no special handling.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

from .partitions import Partition, SkewShape, conjugate, enumerate_partitions, horizontal_strips
from .polyring import (
    HalfSeries,
    Kind,
    LaurentPoly,
    VarId,
    as_poly,
    geometric_factor,
    mono_pow,
)

Letter = Union[VarId, LaurentPoly]


def to_doubled(order) -> int:
    """Convert a q-exponent (int, Fraction, '5/2', 2.5) into a doubled integer."""
    k = Fraction(order) * 2
    if k.denominator != 1:
        raise ValueError(f"{order} is not a half-integer")
    return int(k)


def _letter_monomials(alphabet: Sequence[Letter]):
    out = []
    for a in alphabet:
        p = as_poly(a)
        if not p.is_monomial():
            raise ValueError(f"alphabet letter {a} is not a monomial")
        out.append(next(iter(p.terms.items())))
    return out


def skew_schur(
    shape: SkewShape,
    alphabet: Sequence[Letter],
    trunc: int | None = None,
    graded=None,
) -> LaurentPoly:
    """Skew Schur polynomial: sum over semistandard fillings of ``shape``.

    Computed by peeling horizontal strips: the boxes holding the last letter
    form a horizontal strip, so ``s_{λ/κ}(a_1..a_n) = Σ s_{ν/κ}(a_1..a_{n-1}) a_n^{|λ/ν|}``.
    """
    letters = _letter_monomials(alphabet)
    inner = shape.inner
    one = LaurentPoly.one(trunc, graded)
    zero = LaurentPoly.zero(trunc, graded)
    inner_conj = conjugate(inner)
    memo: dict = {}

    def power(k: int, e: int) -> LaurentPoly:
        mono, c = letters[k]
        return LaurentPoly({mono_pow(mono, e): c ** e}, trunc, graded)

    def f(mu: Partition, k: int) -> LaurentPoly:
        if mu == inner:
            return one
        if k == 0:
            return zero
        key = (mu, k)
        if key in memo:
            return memo[key]
        mc = conjugate(mu)
        if any(mc[j] - inner_conj[j] > k for j in range(len(mc))):
            memo[key] = zero
            return zero
        total = zero
        for nu in horizontal_strips(mu, inner):
            sub = f(nu, k - 1)
            if not sub:
                continue
            e = mu.size() - nu.size()
            total = total + (sub if e == 0 else sub * power(k - 1, e))
        memo[key] = total
        return total

    return f(shape.outer, len(letters))


def schur(lam: Partition, alphabet: Sequence[Letter], trunc: int | None = None, graded=None) -> LaurentPoly:
    """Schur polynomial ``s_λ`` on a finite alphabet (zero if λ has too many rows)."""
    return skew_schur(SkewShape(lam, Partition()), alphabet, trunc, graded)


def sub_partitions(lam: Partition) -> Iterator[Partition]:
    """All ``μ ⊆ λ``, by recursive descent over rows."""

    def rec(i: int, upper: int, acc: list[int]) -> Iterator[Partition]:
        if i == len(lam):
            yield Partition(acc)
            return
        for v in range(min(lam[i], upper), -1, -1):
            acc.append(v)
            yield from rec(i + 1, v, acc)
            acc.pop()

    yield from rec(0, lam[0] if len(lam) else 0, [])


def hook_schur_skew(
    lam: Partition,
    x_alpha: Sequence[Letter],
    y_alpha: Sequence[Letter],
    trunc: int | None = None,
    graded=None,
) -> LaurentPoly:
    """``HS_λ(x;y) = Σ_{μ⊆λ} s_μ(x) s_{λ'/μ'}(y)``."""
    lam_c = conjugate(lam)
    total = LaurentPoly.zero(trunc, graded)
    for mu in sub_partitions(lam):
        if len(mu) > len(x_alpha):
            continue
        sx = schur(mu, x_alpha, trunc, graded)
        if not sx:
            continue
        sy = skew_schur(SkewShape(lam_c, conjugate(mu)), y_alpha, trunc, graded)
        if sy:
            total = total + sx * sy
    return total


@dataclass(frozen=True)
class HookTableau:
    """An (∞|∞)-semistandard filling of ``shape``.

    ``rows[i][j]`` is ``('x', a)`` or ``('y', b)`` with 1-based letter indices.
    The x-entries occupy a partition ``inner_shape``; they weakly increase
    along rows and strictly down columns.  The y-entries fill the rest and
    strictly increase along rows, weakly down columns.
    """

    shape: Partition
    rows: tuple[tuple[tuple[str, int], ...], ...]

    @property
    def inner_shape(self) -> Partition:
        return Partition(sum(1 for kind, _ in row if kind == "x") for row in self.rows)

    def inner_entries(self) -> list[list[int]]:
        return [[a for kind, a in row if kind == "x"] for row in self.rows]

    def outer_entries(self) -> list[list[int]]:
        return [[b for kind, b in row if kind == "y"] for row in self.rows]

    def is_valid(self) -> bool:
        counts = [sum(1 for kind, _ in row if kind == "x") for row in self.rows]
        if any(a < b for a, b in zip(counts, counts[1:])):
            return False
        inner = Partition(counts)
        for i, row in enumerate(self.rows):
            if len(row) != self.shape[i]:
                return False
            for j, (kind, a) in enumerate(row):
                if kind == "x" and j >= inner[i]:
                    return False
                left = row[j - 1] if j else None
                up = self.rows[i - 1][j] if i else None
                if kind == "x":
                    if left and (left[0] != "x" or left[1] > a):
                        return False
                    if up and (up[0] != "x" or up[1] >= a):
                        return False
                else:
                    if left and left[0] == "y" and left[1] >= a:
                        return False
                    if up and up[0] == "y" and up[1] > a:
                        return False
        return True

    def monomial(self, x_alpha: Sequence[Letter], y_alpha: Sequence[Letter]) -> LaurentPoly:
        """The product of all entries, ``(xy)^T``."""
        out = LaurentPoly.one()
        for row in self.rows:
            for kind, a in row:
                out = out * as_poly((x_alpha if kind == "x" else y_alpha)[a - 1])
        return out


def _hook_fill(lam: Partition, nx, ny, bound: int | None = None) -> Iterator[tuple[list, int]]:
    """Enumerate hook fillings cell by cell in row-major order.

    With ``bound`` set, letters are weighted for the principal specialization
    (x_a has doubled weight 2a-1, y_b has 2b) and only fillings of total
    doubled weight <= bound are produced; ``nx``/``ny`` may then be None.
    Yields ``(grid, weight)`` where ``grid`` is reused between yields.
    """
    cells = lam.cells()
    n = len(cells)
    grid = [[None] * r for r in lam.parts]
    # suffix[k]: lower bound for the doubled weight of cells k, k+1, ...
    later_rows = [0] * (len(lam) + 1)
    for i in range(len(lam) - 1, -1, -1):
        later_rows[i] = later_rows[i + 1] + _row_min_weight(i, lam[i])
    suffix = [0] * (n + 1)
    for k, (i, j) in enumerate(cells):
        suffix[k] = _row_min_weight(i, lam[i] - j) + later_rows[i + 1]

    def rec(k: int, w: int) -> Iterator[tuple[list, int]]:
        if k == n:
            yield grid, w
            return
        i, j = cells[k]
        left = grid[i][j - 1] if j else None
        up = grid[i - 1][j] if i else None
        room = None if bound is None else bound - w - suffix[k + 1]
        # x choices
        if (left is None or left[0] == "x") and (up is None or up[0] == "x"):
            lo = max(left[1] if left else 1, up[1] + 1 if up else 1)
            hi = nx
            if room is not None:
                hx = (room + 1) // 2
                hi = hx if hi is None else min(hi, hx)
            for a in range(lo, hi + 1):
                grid[i][j] = ("x", a)
                yield from rec(k + 1, w + 2 * a - 1)
        # y choices
        lo = 1
        if left is not None and left[0] == "y":
            lo = left[1] + 1
        if up is not None and up[0] == "y":
            lo = max(lo, up[1])
        hi = ny
        if room is not None:
            hy = room // 2
            hi = hy if hi is None else min(hi, hy)
        for b in range(lo, hi + 1):
            grid[i][j] = ("y", b)
            yield from rec(k + 1, w + 2 * b)
        grid[i][j] = None

    if bound is not None and suffix[0] > bound:
        return
    yield from rec(0, 0)


def hook_tableaux(lam: Partition, nx: int, ny: int) -> Iterator[HookTableau]:
    """All (∞|∞)-semistandard tableaux of shape λ with letters x_1..x_nx, y_1..y_ny."""
    for grid, _ in _hook_fill(lam, nx, ny):
        yield HookTableau(lam, tuple(tuple(row) for row in grid))


def hook_schur_tableau(
    lam: Partition,
    x_alpha: Sequence[Letter],
    y_alpha: Sequence[Letter],
    trunc: int | None = None,
    graded=None,
) -> LaurentPoly:
    """``HS_λ(x;y) = Σ_T (xy)^T`` over (∞|∞)-semistandard tableaux T of shape λ."""
    xs = _letter_monomials(x_alpha)
    ys = _letter_monomials(y_alpha)
    contents: Counter = Counter()
    for grid, _ in _hook_fill(lam, len(xs), len(ys)):
        contents[tuple(sorted(e for row in grid for e in row))] += 1
    terms: dict = {}
    for content, count in contents.items():
        mono = LaurentPoly.one()
        for kind, a in content:
            m, c = (xs if kind == "x" else ys)[a - 1]
            mono = mono * LaurentPoly({m: c})
        for m, c in mono.terms.items():
            terms[m] = terms.get(m, 0) + c * count
    return LaurentPoly(terms, trunc, graded)


def _row_min_weight(i: int, c: int) -> int:
    """Lower bound for the doubled weight of ``c`` consecutive cells ending row ``i``.

    Any x-entries come first and weigh at least ``2i+1`` each (x_a sits in
    row >= a-1); the y-entries strictly increase, so they weigh at least
    ``2 + 4 + ... + 2(c-t)``.
    """
    return min(t * (2 * i + 1) + (c - t) * (c - t + 1) for t in range(c + 1))


def principal_min_weight(lam: Partition) -> int:
    """Lower bound for the doubled weight of an (∞|∞)-tableau of shape λ
    under ``x_a -> q^(a-1/2)``, ``y_b -> q^b``."""
    return sum(_row_min_weight(i, r) for i, r in enumerate(lam.parts))


def hook_schur_q(lam: Partition, order) -> HalfSeries:
    """``HS_λ(q^(1/2), q^(3/2), ... ; q, q^2, ...)`` through ``q^order``.

    Every entry weighs at least 1/2, so only finitely many tableaux contribute
    below any order and the count is exact: the coefficient of ``q^s`` is the
    number of tableaux whose entries multiply to ``q^s``.
    """
    bound = to_doubled(order)
    counts: Counter = Counter()
    for _, w in _hook_fill(lam, None, None, bound):
        counts[w] += 1
    return HalfSeries(dict(counts), bound)


def _z_kinds(z_alpha: Sequence[Letter]) -> frozenset:
    kinds = set()
    for m, _ in _letter_monomials(z_alpha):
        kinds.update(v.kind for v, _ in m)
    return frozenset(kinds) or frozenset({Kind.Z})


def hook_cauchy_lhs(
    x_alpha: Sequence[Letter],
    y_alpha: Sequence[Letter],
    z_alpha: Sequence[Letter],
    trunc: int,
) -> LaurentPoly:
    """``Π_{i,j,k} (1 - x_i z_k)^(-1) (1 + y_j z_k)`` through z-degree ``trunc``."""
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    graded = _z_kinds(z_alpha)
    out = LaurentPoly.one(trunc, graded)
    for zk in z_alpha:
        zp = as_poly(zk)
        for xi in x_alpha:
            out = out * geometric_factor(as_poly(xi) * zp, "-", trunc, graded)
        for yj in y_alpha:
            out = out * geometric_factor(as_poly(yj) * zp, "+", trunc, graded)
    return out


def hook_cauchy_rhs(
    x_alpha: Sequence[Letter],
    y_alpha: Sequence[Letter],
    z_alpha: Sequence[Letter],
    trunc: int,
) -> LaurentPoly:
    """``Σ_λ HS_λ(x;y) s_λ(z)`` over λ with size <= trunc and at most |z| rows."""
    graded = _z_kinds(z_alpha)
    out = LaurentPoly.zero(trunc, graded)
    for lam in enumerate_partitions(trunc, len(z_alpha)):
        sz = schur(lam, z_alpha, trunc, graded)
        if not sz:
            continue
        out = out + hook_schur_skew(lam, x_alpha, y_alpha) * sz
    return out


__all__ = [
    "HookTableau",
    "hook_cauchy_lhs",
    "hook_cauchy_rhs",
    "hook_schur_q",
    "hook_schur_skew",
    "hook_schur_tableau",
    "hook_tableaux",
    "principal_min_weight",
    "schur",
    "skew_schur",
    "sub_partitions",
    "to_doubled",
]
