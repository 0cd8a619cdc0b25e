"""Rational GL_l characters, character decomposition and Littlewood-Richardson coefficients.

Characters are Laurent polynomials in ``x1..xl`` (kind ``X``, negative
exponents allowed).  Decomposition peels off irreducibles by their highest
weight: the lexicographically largest monomial of a genuine character is
always dominant, and its coefficient is the multiplicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Mapping

from .partitions import GeneralizedPartition, Partition, SkewShape, horizontal_strips
from .polyring import Kind, LaurentPoly, X
from .symfun import schur


class NonCharacter(ValueError):
    """Raised when a polynomial is not a nonnegative combination of irreducible characters."""


@dataclass(frozen=True)
class GlCharacter:
    rank: int
    poly: LaurentPoly

    def exponent_map(self) -> dict[tuple[int, ...], int]:
        return {_exponents(m, self.rank): c for m, c in self.poly.terms.items()}

    def is_symmetric(self) -> bool:
        """Check invariance under the adjacent transpositions, which generate S_l."""
        terms = self.exponent_map()
        for i in range(self.rank - 1):
            for a, c in terms.items():
                b = list(a)
                b[i], b[i + 1] = b[i + 1], b[i]
                if terms.get(tuple(b), 0) != c:
                    return False
        return True

    def dimension(self) -> int:
        return sum(self.poly.terms.values())

    def __mul__(self, other: GlCharacter) -> GlCharacter:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return GlCharacter(self.rank, self.poly * other.poly)

    def __add__(self, other: GlCharacter) -> GlCharacter:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return GlCharacter(self.rank, self.poly + other.poly)

    def __sub__(self, other: GlCharacter) -> GlCharacter:
        if self.rank != other.rank:
            raise ValueError("rank mismatch")
        return GlCharacter(self.rank, self.poly - other.poly)


def _exponents(mono, rank: int, kind: Kind = Kind.X, offset: int = 0) -> tuple[int, ...]:
    out = [0] * rank
    for v, e in mono:
        if v.kind != kind or not offset < v.index <= offset + rank:
            raise ValueError(f"unexpected variable {v} in a rank {rank} character")
        out[v.index - offset - 1] = e
    return tuple(out)


def _mono(exps, offset: int = 0):
    return tuple((X(i + 1 + offset), e) for i, e in enumerate(exps) if e)


def _variables(rank: int) -> list:
    return [X(i) for i in range(1, rank + 1)]


def gl_character(lam: GeneralizedPartition) -> GlCharacter:
    """Character of ``V^λ_l``: ``(x1..xl)^{λ_l} s_{λ - λ_l}(x1..xl)``."""
    rank = len(lam)
    last = lam[rank - 1]
    base = schur(Partition(p - last for p in lam), _variables(rank))
    if last:
        det = LaurentPoly.monomial({X(i): last for i in range(1, rank + 1)})
        base = base * det
    return GlCharacter(rank, base)


@lru_cache(maxsize=None)
def _dominant_weights_below(lam: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Dominant weights of ``V^λ`` (those ``μ ≤ λ`` in dominance order with ``|μ| = |λ|``)."""
    rank = len(lam)
    last = lam[-1]
    shifted = [p - last for p in lam]
    total = sum(shifted)
    out = []

    def rec(i, upper, remaining, partial, acc):
        if i == rank:
            if remaining == 0:
                out.append(tuple(p + last for p in acc))
            return
        for v in range(min(upper, remaining), -1, -1):
            # dominance: partial sums may not exceed those of λ
            if partial + v > sum(shifted[: i + 1]):
                continue
            if v * (rank - i) < remaining:
                break
            acc.append(v)
            rec(i + 1, v, remaining - v, partial + v, acc)
            acc.pop()

    rec(0, total, total, 0, [])
    return tuple(out)


@lru_cache(maxsize=None)
def kostka(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    """Multiplicity of the weight ``μ`` in ``V^λ`` (rank = len(λ)), for any weight ``μ``.

    Semistandard tableaux of shape λ and content μ: the boxes holding the
    largest letter form a horizontal strip.
    """
    if sum(lam) != sum(mu) or len(lam) != len(mu):
        return 0
    last = min(lam[-1], min(mu))
    lam_p = Partition(p - last for p in lam)
    content = tuple(sorted((m - last for m in mu), reverse=True))
    return _kostka_partition(lam_p, content)


@lru_cache(maxsize=None)
def _kostka_partition(lam: Partition, content: tuple[int, ...]) -> int:
    if not content:
        return 1 if lam.size() == 0 else 0
    if len(lam) > len(content):
        return 0
    *rest, k = content
    total = 0
    for nu in horizontal_strips(lam, Partition(), k):
        total += _kostka_partition(nu, tuple(rest))
    return total


def decompose_character(c: GlCharacter | LaurentPoly, rank: int | None = None) -> dict[GeneralizedPartition, int]:
    """Write a symmetric Laurent polynomial as ``Σ m_λ ch V^λ_l``.

    Only dominant monomials are tracked: an irreducible character is
    determined by its dominant part, whose coefficients are Kostka numbers.
    Raises :class:`NonCharacter` on asymmetric input, a non-dominant leading
    monomial, or a negative multiplicity.
    """
    if isinstance(c, LaurentPoly):
        if rank is None:
            raise ValueError("rank is required for a bare polynomial")
        c = GlCharacter(rank, c)
    if not c.is_symmetric():
        raise NonCharacter("input is not symmetric in x1..xl")
    rank = c.rank
    remaining = {
        a: v for a, v in c.exponent_map().items() if all(a[i] >= a[i + 1] for i in range(rank - 1))
    }
    out: dict[GeneralizedPartition, int] = {}
    while remaining:
        lead = max(remaining)
        m = remaining[lead]
        if m < 0:
            raise NonCharacter(f"negative multiplicity {m} for {lead}")
        out[GeneralizedPartition(lead)] = m
        for mu in _dominant_weights_below(lead):
            k = kostka(lead, mu)
            v = remaining.get(mu, 0) - m * k
            if v:
                remaining[mu] = v
            else:
                remaining.pop(mu, None)
        if lead in remaining:
            raise NonCharacter(f"leading monomial {lead} could not be removed")
    if rank and not out and c.poly:
        raise NonCharacter("no dominant monomials")
    return dict(sorted(out.items(), key=lambda kv: kv[0].parts, reverse=True))


def decompose_block(poly: LaurentPoly, l: int, r: int) -> dict[tuple[GeneralizedPartition, GeneralizedPartition], int]:
    """Decompose a ``GL_l × GL_r`` character in ``x1..xl | x_{l+1}..x_{l+r}``."""
    inner: dict = {}
    for mono, c in poly.terms.items():
        a = _exponents(tuple(p for p in mono if p[0].index <= l), l)
        b = _exponents(tuple(p for p in mono if p[0].index > l), r, offset=l)
        inner.setdefault(b, {})[_mono(a)] = c
    # first decompose in the right block, with coefficients that are l-variable polynomials
    right_terms: dict = {}
    for b, coeff_terms in inner.items():
        right_terms[b] = LaurentPoly(coeff_terms)
    dominant_b = {b: p for b, p in right_terms.items() if all(b[i] >= b[i + 1] for i in range(r - 1))}
    out: dict = {}
    while dominant_b:
        lead = max(dominant_b)
        coeff = dominant_b[lead]
        for lam_l, m in decompose_character(GlCharacter(l, coeff)).items():
            out[(lam_l, GeneralizedPartition(lead))] = m
        for mu in _dominant_weights_below(lead):
            k = kostka(lead, mu)
            v = dominant_b.get(mu, LaurentPoly.zero()) - coeff * k
            if v:
                dominant_b[mu] = v
            else:
                dominant_b.pop(mu, None)
    return dict(sorted(out.items(), key=lambda kv: (kv[0][0].parts, kv[0][1].parts), reverse=True))


def _lr_fillings(outer: Partition, inner: Partition, content: Partition) -> int:
    """Count LR tableaux of shape outer/inner and content ``content``.

    Boxes are filled along the reverse reading word (rows top to bottom,
    each row right to left); the word must stay a lattice word.
    """
    shape = SkewShape(outer, inner)
    if shape.size() != content.size():
        return 0
    order = [(i, j) for i in range(len(outer)) for j in range(outer[i] - 1, inner[i] - 1, -1)]
    filled: dict = {}
    counts = [0] * (len(content) + 1)
    n = len(content)

    def rec(k: int) -> int:
        if k == len(order):
            return 1
        i, j = order[k]
        right = filled.get((i, j + 1))
        up = filled.get((i - 1, j)) if i > 0 and j >= inner[i - 1] else None
        total = 0
        # rows weakly increase left to right, so this box is <= its right neighbour
        hi = right if right is not None else n
        lo = up + 1 if up is not None else 1
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] + 1 > counts[v - 1]:
                continue
            counts[v] += 1
            filled[(i, j)] = v
            total += rec(k + 1)
            counts[v] -= 1
            del filled[(i, j)]
        return total

    return rec(0)


def lr_coefficients(mu: Partition, nu: Partition) -> dict[Partition, int]:
    """``s_μ s_ν = Σ_λ c^λ_{μν} s_λ`` via lattice-word fillings of ``λ/μ`` with content ``ν``."""
    out: dict[Partition, int] = {}
    n = mu.size() + nu.size()
    max_len = len(mu) + len(nu)
    for lam in _supersets(mu, n, max_len, mu[0] + nu[0]):
        c = _lr_fillings(lam, mu, nu)
        if c:
            out[lam] = c
    return dict(sorted(out.items(), key=lambda kv: kv[0].parts, reverse=True))


def _supersets(mu: Partition, size: int, max_len: int, max_part: int):
    def rec(i, upper, remaining, acc):
        if i == max_len:
            if remaining == 0:
                yield Partition(acc)
            return
        lo = mu[i]
        for v in range(min(upper, remaining), lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, v, remaining - v, acc)
            acc.pop()

    yield from rec(0, max_part, size, [])


def inverse_character(nu: Partition, rank: int) -> GlCharacter:
    """``s_ν(x^{-1})`` as the character of ``(-ν_l, ..., -ν_1)``."""
    return gl_character(GeneralizedPartition([-p for p in reversed(nu.padded(rank))]))


def mixed_tensor_coefficients(mu: Partition, nu: Partition, rank: int) -> dict[GeneralizedPartition, int]:
    """``s_μ(x) s_ν(x^{-1}) = Σ c^λ_{μν} ch V^λ_l`` in rank l."""
    if len(mu) > rank or len(nu) > rank:
        raise ValueError("partitions longer than the rank")
    left = GlCharacter(rank, schur(mu, _variables(rank)))
    return decompose_character(left * inverse_character(nu, rank))


def branching_gl_sum(
    lam: GeneralizedPartition, l: int, r: int
) -> dict[tuple[GeneralizedPartition, GeneralizedPartition], int]:
    """Restriction of ``V^λ_{l+r}`` to ``GL_l × GL_r``, by decomposing in split variables."""
    if len(lam) != l + r:
        raise ValueError(f"{lam} must have declared length {l + r}")
    return decompose_block(gl_character(lam).poly, l, r)


def character_from_map(terms: Mapping[GeneralizedPartition, int], rank: int) -> GlCharacter:
    """``Σ m_λ ch V^λ_l``."""
    total = LaurentPoly.zero()
    for lam, m in terms.items():
        if len(lam) != rank:
            raise ValueError(f"{lam} does not have rank {rank}")
        total = total + gl_character(lam).poly * m
    return GlCharacter(rank, total)


def transpose_variables(c: GlCharacter, i: int, j: int) -> GlCharacter:
    """Swap ``x_i`` and ``x_j`` (1-based)."""
    return GlCharacter(c.rank, c.poly.rename({X(i): X(j), X(j): X(i)}))


def all_permutations_agree(c: GlCharacter) -> bool:
    """Brute-force symmetry check over the full symmetric group (small ranks only)."""
    base = c.poly
    for perm in permutations(range(1, c.rank + 1)):
        if c.poly.rename({X(i): X(p) for i, p in zip(range(1, c.rank + 1), perm)}) != base:
            return False
    return True


__all__ = [
    "GlCharacter",
    "NonCharacter",
    "all_permutations_agree",
    "branching_gl_sum",
    "character_from_map",
    "decompose_block",
    "decompose_character",
    "gl_character",
    "inverse_character",
    "kostka",
    "lr_coefficients",
    "mixed_tensor_coefficients",
    "transpose_variables",
]
