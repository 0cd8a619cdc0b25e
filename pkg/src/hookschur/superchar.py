"""Characters of highest weight modules over gl(inf|inf)^ and level-1 affine gl(m|n).

Conventions
-----------
* Half-integer indices and q-exponents are stored doubled.
* In :func:`character` the alphabets are ``z = Z(1..p)`` (standing for
  ``z_{1/2}, z_{3/2}, ...``), ``y = Y(1..p)``, and the independent formal
  inverses ``Zinv(k)``, ``Yinv(k)``; all four kinds count towards the degree.
* In the affine characters ``Y`` and ``Z`` carry genuine (possibly negative)
  exponents and only ``q`` is graded.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .glchar import GlCharacter, decompose_character, mixed_tensor_coefficients
from .partitions import GeneralizedPartition, Partition, enumerate_partitions, gen_column_length
from .polyring import (
    HalfSeries,
    Kind,
    LaurentPoly,
    Q,
    X,
    Y,
    Yinv,
    Z,
    Zinv,
    geometric_factor,
    series_inv_unit,
    series_product,
)
from .symfun import hook_schur_q, hook_schur_skew, principal_min_weight, schur, to_doubled

CHAR_GRADING = frozenset({Kind.Y, Kind.YINV, Kind.Z, Kind.ZINV})
Q_GRADING = frozenset({Kind.Q})


def _fmt_half(doubled: int) -> str:
    return str(Fraction(doubled, 2))


@dataclass(frozen=True)
class Weight:
    """A weight given by its values ``Λ_s = Λ(e_ss)`` (doubled index -> value) and ``Λ(C)``."""

    entries: tuple[tuple[int, int], ...]
    central_charge: int

    @classmethod
    def from_map(cls, entries: dict[int, int], central_charge: int) -> Weight:
        return cls(tuple(sorted((k, v) for k, v in entries.items() if v)), central_charge)

    def as_map(self) -> dict[int, int]:
        return dict(self.entries)

    def __getitem__(self, s) -> int:
        return self.as_map().get(to_doubled(s), 0)

    def support(self) -> list[Fraction]:
        return [Fraction(k, 2) for k, _ in self.entries]

    def __str__(self) -> str:
        terms = [(v, f"w({_fmt_half(k)})") for k, v in self.entries]
        terms.append((self.central_charge, "L0"))
        return _signed_sum(terms)

    def to_json(self) -> dict:
        return {
            "entries": {_fmt_half(k): v for k, v in self.entries},
            "central_charge": self.central_charge,
        }


def _signed_sum(terms) -> str:
    pieces = []
    for c, body in terms:
        if not c:
            continue
        mag = abs(c)
        pieces.append(("- " if c < 0 else "+ ") + (body if mag == 1 else f"{mag}*{body}"))
    if not pieces:
        return "0"
    s = " ".join(pieces)
    return s[2:] if s.startswith("+ ") else "-" + s[2:]


def _clamp(k: int) -> int:
    return k if k > 0 else 0


def weight_of(lam: GeneralizedPartition) -> Weight:
    """The weight attached to a generalized partition of declared length l.

    With ``<k> = max(k, 0)`` and ``λ'`` the (generalized) column lengths:
    ``Λ_i = <λ'_i - i>`` (i >= 1), ``Λ_j = -<-λ'_j + j>`` (j <= 0),
    ``Λ_r = <λ_{r+1/2} - (r - 1/2)>`` (r = 1/2, 3/2, ...) and
    ``Λ_s = -<-λ_{l+s+1/2} + (s - 1/2)>`` (s = -1/2, -3/2, ...); parts outside
    ``1..l`` count as 0.  The central charge is l.
    """
    l = len(lam)
    span = l + max(abs(p) for p in lam) + 2

    def part(k: int) -> int:
        return lam[k - 1] if 1 <= k <= l else 0

    out: dict[int, int] = {}
    for i in range(1, span + 1):
        out[2 * i] = _clamp(gen_column_length(lam, i) - i)
    for j in range(0, -span - 1, -1):
        out[2 * j] = -_clamp(-gen_column_length(lam, j) + j)
    for k in range(1, span + 1):
        # r = k - 1/2
        out[2 * k - 1] = _clamp(part(k) - (k - 1))
    for k in range(0, -span - 1, -1):
        # s = k - 1/2, index l + s + 1/2 = l + k
        out[2 * k - 1] = -_clamp(-part(l + k) + k - 1)
    return Weight.from_map(out, l)


def h_of(lam: GeneralizedPartition) -> Fraction:
    """``h(λ) = Σ_r r Λ(λ)_r``."""
    return sum((Fraction(k, 2) * v for k, v in weight_of(lam).entries), Fraction(0))


# --- characters in the z, y alphabets -------------------------------------------------


def _alphabets(z_size: int, y_size: int):
    return (
        [Z(k) for k in range(1, z_size + 1)],
        [Y(k) for k in range(1, y_size + 1)],
        [Zinv(k) for k in range(1, z_size + 1)],
        [Yinv(k) for k in range(1, y_size + 1)],
    )


@lru_cache(maxsize=None)
def _mixed(mu: Partition, nu: Partition, rank: int) -> dict:
    return mixed_tensor_coefficients(mu, nu, rank)


def character(lam: GeneralizedPartition, z_size: int, y_size: int, trunc: int) -> LaurentPoly:
    """``Σ_{μ,ν} c^λ_{μν} HS_μ(z;y) HS_ν(z^-1;y^-1)`` through degree ``trunc``.

    μ, ν run over partitions with at most l rows and ``|μ| + |ν| <= trunc``
    (each box contributes degree 1).
    """
    if trunc < 0 or z_size < 0 or y_size < 0:
        raise ValueError("sizes and truncation must be nonnegative")
    rank = len(lam)
    z, y, zi, yi = _alphabets(z_size, y_size)
    shapes = enumerate_partitions(trunc, rank)
    hs_plus: dict = {}
    hs_minus: dict = {}
    total = LaurentPoly.zero(trunc, CHAR_GRADING)
    for mu in shapes:
        for nu in shapes:
            if mu.size() + nu.size() > trunc:
                continue
            c = _mixed(mu, nu, rank).get(lam, 0)
            if not c:
                continue
            if mu not in hs_plus:
                hs_plus[mu] = hook_schur_skew(mu, z, y, trunc, CHAR_GRADING)
            if nu not in hs_minus:
                hs_minus[nu] = hook_schur_skew(nu, zi, yi, trunc, CHAR_GRADING)
            total = total + hs_plus[mu] * hs_minus[nu] * c
    return total


def level_one_sum(lam: int, z_size: int, y_size: int, trunc: int) -> LaurentPoly:
    """The rank-one double sum ``Σ_{μ-ν=λ} HS_(μ)(z;y) HS_(ν)(z^-1;y^-1)`` (μ, ν >= 0)."""
    z, y, zi, yi = _alphabets(z_size, y_size)
    total = LaurentPoly.zero(trunc, CHAR_GRADING)
    for nu in range(0, trunc + 1):
        mu = nu + lam
        if mu < 0 or mu + nu > trunc:
            continue
        total = total + hook_schur_skew(Partition([mu]), z, y, trunc, CHAR_GRADING) * hook_schur_skew(
            Partition([nu]), zi, yi, trunc, CHAR_GRADING
        )
    return total


def fock_character(rank: int, z_size: int, y_size: int, trunc: int) -> LaurentPoly:
    """The Fock space product in ``x1..xl`` and the z, y alphabets, through degree ``trunc``.

    ``Π_i Π_n (1 + x_i y_n)(1 + x_i^-1 y_n^-1) / Π_r (1 - x_i z_r)(1 - x_i^-1 z_r^-1)``.
    """
    z, y, zi, yi = _alphabets(z_size, y_size)
    out = LaurentPoly.one(trunc, CHAR_GRADING)
    for i in range(1, rank + 1):
        x = LaurentPoly.var(X(i))
        xinv = LaurentPoly.monomial({X(i): -1})
        for a in y:
            out = out * geometric_factor(x * LaurentPoly.var(a), "+", trunc, CHAR_GRADING)
        for a in yi:
            out = out * geometric_factor(xinv * LaurentPoly.var(a), "+", trunc, CHAR_GRADING)
        for a in z:
            out = out * geometric_factor(x * LaurentPoly.var(a), "-", trunc, CHAR_GRADING)
        for a in zi:
            out = out * geometric_factor(xinv * LaurentPoly.var(a), "-", trunc, CHAR_GRADING)
    return out


def fock_decomposition(rank: int, z_size: int, y_size: int, trunc: int) -> dict[GeneralizedPartition, LaurentPoly]:
    """Decompose the Fock product in the x variables: ``{λ: coefficient of ch V^λ}``."""
    prod = fock_character(rank, z_size, y_size, trunc)
    out: dict[GeneralizedPartition, dict] = {}
    for zy_mono, xpoly in prod.split(CHAR_GRADING).items():
        for lam, m in decompose_character(GlCharacter(rank, xpoly)).items():
            terms = out.setdefault(lam, {})
            terms[zy_mono] = terms.get(zy_mono, 0) + m
    return {lam: LaurentPoly(t, trunc, CHAR_GRADING) for lam, t in sorted(out.items(), key=lambda kv: kv[0].parts)}


# --- q-characters -----------------------------------------------------------------------


@lru_cache(maxsize=None)
def aux_coefficients(mu: Partition, rank: int) -> dict[GeneralizedPartition, int]:
    """Decomposition of ``s_μ(x, x^-1) Π_i (1 + x_i^-1)`` into rank-l irreducibles."""
    letters = [LaurentPoly.var(X(i)) for i in range(1, rank + 1)]
    letters += [LaurentPoly.monomial({X(i): -1}) for i in range(1, rank + 1)]
    poly = schur(mu, letters)
    if not poly:
        return {}
    for i in range(1, rank + 1):
        poly = poly * (LaurentPoly.one() + LaurentPoly.monomial({X(i): -1}))
    return decompose_character(GlCharacter(rank, poly))


@lru_cache(maxsize=None)
def _hs_q(mu: Partition, bound: int) -> HalfSeries:
    return hook_schur_q(mu, Fraction(bound, 2))


def _principal_shapes(max_len: int, bound: int) -> Iterator[Partition]:
    # a tableau of shape μ weighs at least |μ|/2, so |μ| <= bound (doubled)
    for mu in enumerate_partitions(bound, max_len):
        if principal_min_weight(mu) <= bound:
            yield mu


def q_character(lam: GeneralizedPartition, order) -> HalfSeries:
    """``q^{-h(λ)} Σ_μ c^μ_λ HS_μ(q^{1/2}, q^{3/2}, ...; q, q^2, ...)`` through ``q^order``.

    μ runs over partitions with at most 2l rows; shapes whose lightest
    tableau is already above the order are skipped.
    """
    rank = len(lam)
    order2 = to_doubled(order)
    if order2 < 0:
        raise ValueError("order must be nonnegative")
    shift = to_doubled(h_of(lam))
    bound = order2 + shift
    total = HalfSeries({}, max(bound, 0))
    for mu in _principal_shapes(2 * rank, bound):
        c = aux_coefficients(mu, rank).get(lam, 0)
        if c:
            total = total + _hs_q(mu, bound) * c
    return HalfSeries({k - shift: v for k, v in total.coeffs.items()}, order2)


def _fock_q_product(order2: int) -> HalfSeries:
    """``Π_{n>=1, r in 1/2+Z_+} (1 + q^r)^2 / (1 - q^n)^2`` through doubled order."""
    factors = []
    for k in range(1, order2 + 1):
        if k % 2:
            f = HalfSeries({0: 1, k: 1}, order2)
            factors += [f, f]
        else:
            f = series_inv_unit(HalfSeries({0: 1, k: -1}, order2))
            factors += [f, f]
    return series_product(factors, order2)


def q_identity_sides(lam: int, order) -> tuple[HalfSeries, HalfSeries]:
    """Both sides of the rank-one q-series identity, as HalfSeries through ``q^order``.

    LHS sums ``HS_μ`` over two-row μ with ``μ1 - μ2 >= λ`` (λ >= 0) or
    ``μ2 - μ1 - 1 <= λ`` (λ < 0).  RHS is
    ``q^{λ/2} (1 + q^{λ+1/2})^-1 P`` resp. ``q^{-(λ+1)/2} (1 + q^{-λ-1/2})^-1 P``
    with ``P = Π (1 + q^r)^2 / (1 - q^n)^2``.
    """
    order2 = to_doubled(order)
    lhs = HalfSeries({}, order2)
    for mu in _principal_shapes(2, order2):
        d = mu[0] - mu[1]
        keep = d >= lam if lam >= 0 else mu[1] - mu[0] - 1 <= lam
        if keep:
            lhs = lhs + _hs_q(mu, order2)
    if lam >= 0:
        shift, pole = lam, 2 * lam + 1
    else:
        shift, pole = -(lam + 1), -2 * lam - 1
    rhs = series_inv_unit(HalfSeries({0: 1, pole: 1}, order2)) * _fock_q_product(order2)
    rhs = rhs.shift(shift).truncate(order2)
    return lhs, rhs


def first_series_mismatch(expected: HalfSeries, actual: HalfSeries):
    """First doubled exponent where two series differ, as ``(exponent, expected, actual)``."""
    n = min(expected.order, actual.order)
    for k in range(n + 1):
        a, b = expected.coeff2(k), actual.coeff2(k)
        if a != b:
            return Fraction(k, 2), a, b
    return None


def verify_q_identity(lam: int, order) -> tuple[bool, object]:
    """Check the rank-one q-series identity through ``q^order``; returns (ok, first mismatch)."""
    lhs, rhs = q_identity_sides(lam, order)
    diff = first_series_mismatch(rhs, lhs)
    return diff is None, diff


def dual_partition(lam: GeneralizedPartition) -> GeneralizedPartition:
    """``(λ_1, ..., λ_l) -> (-λ_l - 1, ..., -λ_1 - 1)``."""
    return GeneralizedPartition([-p - 1 for p in reversed(lam.parts)])


def verify_duality_symmetry(lam: GeneralizedPartition, order) -> tuple[bool, object]:
    a = q_character(lam, order)
    b = q_character(dual_partition(lam), order)
    diff = first_series_mismatch(a, b)
    return diff is None, diff


# --- level one affine gl(m|n) ------------------------------------------------------------


def _q_letters(var_factory, size: int, sign: int, trunc2: int) -> list[LaurentPoly]:
    out = []
    for j in range(1, size + 1):
        for s2 in range(1, trunc2 + 1, 2):
            out.append(LaurentPoly.monomial({var_factory(j): sign, Q: s2}))
    return out


def affine_sum(lam: int, m: int, n: int, trunc2: int) -> LaurentPoly:
    """``Σ_{μ-ν=λ} HS_(μ)(zq; yq) HS_(ν)(z^-1 q; y^-1 q)`` through doubled q-degree ``trunc2``.

    The alphabets are ``{z_j q^s}``, ``{y_i q^s}`` and their inverses in y, z,
    with ``s = 1/2, 3/2, ...``, i <= m and j <= n.
    """
    zq = _q_letters(Z, n, 1, trunc2)
    yq = _q_letters(Y, m, 1, trunc2)
    ziq = _q_letters(Z, n, -1, trunc2)
    yiq = _q_letters(Y, m, -1, trunc2)
    total = LaurentPoly.zero(trunc2, Q_GRADING)
    # every letter carries at least q^(1/2)
    for nu in range(0, trunc2 + 1):
        mu = nu + lam
        if mu < 0 or mu + nu > trunc2:
            continue
        a = hook_schur_skew(Partition([mu]), zq, yq, trunc2, Q_GRADING)
        b = hook_schur_skew(Partition([nu]), ziq, yiq, trunc2, Q_GRADING)
        total = total + a * b
    return total


def _shift_q(p: LaurentPoly, doubled: int, trunc2: int) -> LaurentPoly:
    terms = {}
    for mono, c in p.terms.items():
        d = dict(mono)
        e = d.get(Q, 0) + doubled
        if e:
            d[Q] = e
        else:
            d.pop(Q, None)
        terms[tuple(sorted(d.items()))] = c
    return LaurentPoly(terms, trunc2, Q_GRADING)


def affine_character_mn(lam: int, m: int, n: int, order) -> LaurentPoly:
    """Level-1 character of affine gl(m|n) with highest weight ``Λ~(λ)``, through ``q^order``.

    ``q^{-|λ|/2} Σ_{μ-ν=λ} HS_(μ)(zq; yq) HS_(ν)(z^-1 q; y^-1 q)``; q exponents are doubled.
    """
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    order2 = to_doubled(order)
    if order2 < 0:
        raise ValueError("order must be nonnegative")
    raw = affine_sum(lam, m, n, order2 + abs(lam))
    return _shift_q(raw, -abs(lam), order2)


def affine_character_nn(lam: int, n: int, order) -> LaurentPoly:
    """Level-1 affine gl(n|n) character: the ``m = n`` case."""
    return affine_character_mn(lam, n, n, order)


def glmn_product(m: int, n: int, trunc2: int) -> LaurentPoly:
    """``Π_s Π_i (1 + x y_i q^s)(1 + x^-1 y_i^-1 q^s) / Π_j (1 - x z_j q^s)(1 - x^-1 z_j^-1 q^s)``.

    ``x = x1``, ``s`` runs over ``1/2 + Z_+``; kept through doubled q-degree ``trunc2``.
    """
    out = LaurentPoly.one(trunc2, Q_GRADING)
    for s2 in range(1, trunc2 + 1, 2):
        for i in range(1, m + 1):
            out = out * geometric_factor(LaurentPoly.monomial({X(1): 1, Y(i): 1, Q: s2}), "+", trunc2, Q_GRADING)
            out = out * geometric_factor(LaurentPoly.monomial({X(1): -1, Y(i): -1, Q: s2}), "+", trunc2, Q_GRADING)
        for j in range(1, n + 1):
            out = out * geometric_factor(LaurentPoly.monomial({X(1): 1, Z(j): 1, Q: s2}), "-", trunc2, Q_GRADING)
            out = out * geometric_factor(LaurentPoly.monomial({X(1): -1, Z(j): -1, Q: s2}), "-", trunc2, Q_GRADING)
    return out


def glmn_product_coefficient(product: LaurentPoly, lam: int, order) -> LaurentPoly:
    """The ``x^λ`` coefficient of :func:`glmn_product`, times ``q^{-|λ|/2}``, through ``q^order``."""
    key = ((X(1), lam),) if lam else ()
    coeff = product.split([Kind.X]).get(key, LaurentPoly.zero())
    return _shift_q(coeff, -abs(lam), to_doubled(order))


def specialized_level_one_sum(lam: int, order) -> HalfSeries:
    """The n = 1 affine double sum at ``y1 = q^{1/2}``, ``z1 = 1``, through ``q^order``.

    The alphabets become ``q^{1/2}, q^{3/2}, ...`` (both z sides), ``q, q^2, ...``
    (y side) and ``1, q, q^2, ...`` (inverse y side).
    """
    order2 = to_doubled(order)
    odd = [LaurentPoly.monomial({Q: k}) for k in range(1, order2 + 1, 2)]
    even = [LaurentPoly.monomial({Q: k}) for k in range(2, order2 + 1, 2)]
    even0 = [LaurentPoly.one()] + even
    total = LaurentPoly.zero(order2, Q_GRADING)
    for nu in range(0, order2 + 2):
        mu = nu + lam
        if mu < 0 or mu > order2:
            continue
        a = hook_schur_skew(Partition([mu]), odd, even, order2, Q_GRADING)
        b = hook_schur_skew(Partition([nu]), odd, even0, order2, Q_GRADING)
        total = total + a * b
    coeffs: dict = {}
    for mono, c in total.terms.items():
        k = dict(mono).get(Q, 0)
        coeffs[k] = coeffs.get(k, 0) + c
    return HalfSeries(coeffs, order2)


# --- affine weights and odd reflections --------------------------------------------------


@dataclass(frozen=True)
class AffineWeight:
    """``Σ eps_i ε~_i + Σ delta_j δ~_j + lambda0 Λ~_0 + delta_imag δ~`` for gl(m|n)^."""

    eps: tuple[int, ...]
    delta_part: tuple[int, ...]
    lambda0: int = 1
    delta_imag: Fraction = field(default=Fraction(0))

    @property
    def m(self) -> int:
        return len(self.eps)

    @property
    def n(self) -> int:
        return len(self.delta_part)

    def __str__(self) -> str:
        terms = []
        for name, coeffs in (("e", self.eps), ("d", self.delta_part)):
            terms += [(c, f"{name}{i}") for i, c in enumerate(coeffs, start=1)]
        terms += [(self.lambda0, "L0"), (self.delta_imag, "delta")]
        return _signed_sum(terms)

    def to_json(self) -> dict:
        return {
            "eps": list(self.eps),
            "delta": list(self.delta_part),
            "lambda0": self.lambda0,
            "delta_imag": str(self.delta_imag),
        }


def integrable_weight(lam: int, m: int, n: int) -> AffineWeight:
    """The level-1 integrable highest weight ``Λ~(λ)`` of affine gl(m|n)."""
    if m < 1 or n < 1:
        raise ValueError("need m, n >= 1")
    eps = [0] * m
    delta = [0] * n
    if 0 <= lam <= m:
        for i in range(lam):
            eps[i] = 1
    elif lam > m:
        eps = [1] * m
        delta[0] = lam - m
    else:
        delta[n - 1] = lam
    return AffineWeight(tuple(eps), tuple(delta))


def nonstandard_weight(lam: int, n: int) -> AffineWeight:
    """Highest weight of the level-1 gl(n|n)^ module for the alternating Borel.

    ``λ δ~_1 + Λ~_0`` for λ >= 0 and ``(λ+1) δ~_n - ε~_n + Λ~_0`` for λ < 0.
    """
    eps = [0] * n
    delta = [0] * n
    if lam >= 0:
        delta[0] = lam
    else:
        delta[n - 1] = lam + 1
        eps[n - 1] = -1
    return AffineWeight(tuple(eps), tuple(delta))


class UndecidableReflection(ValueError):
    """The pairing with an odd coroot could not be evaluated from the stored coefficients."""


@dataclass(frozen=True)
class ReflectionStep:
    root: tuple[int, int]  # (i, j) for the odd root δ_i - ε_j
    pairing: int
    before: AffineWeight
    after: AffineWeight


def odd_reflection_steps(hw: AffineWeight) -> list[ReflectionStep]:
    """Move from the Borel ordered ``δ1 ε1 δ2 ε2 ... δn εn`` to ``ε1..εn δ1..δn``.

    Each step swaps the rightmost adjacent pair ``δ_i ε_j``, i.e. reflects in
    the odd simple root ``γ = δ_i - ε_j``.  With ``(ε,ε) = 1`` and
    ``(δ,δ) = -1`` the pairing is ``(Λ, γ) = -(b_i + a_j)``; when it is
    nonzero the highest weight becomes ``Λ - γ``.
    """
    if hw.m != hw.n:
        raise ValueError("the alternating Borel needs m = n")
    n = hw.n
    for c in hw.eps + hw.delta_part:
        if Fraction(c).denominator != 1:
            raise UndecidableReflection(f"non-integral coefficient {c}")
    word = []
    for k in range(1, n + 1):
        word += [("d", k), ("e", k)]
    eps = list(hw.eps)
    delta = list(hw.delta_part)
    steps = []
    while True:
        pos = None
        for k in range(len(word) - 2, -1, -1):
            if word[k][0] == "d" and word[k + 1][0] == "e":
                pos = k
                break
        if pos is None:
            break
        i, j = word[pos][1], word[pos + 1][1]
        before = AffineWeight(tuple(eps), tuple(delta), hw.lambda0, hw.delta_imag)
        pairing = -(delta[i - 1] + eps[j - 1])
        if pairing:
            delta[i - 1] -= 1
            eps[j - 1] += 1
        after = AffineWeight(tuple(eps), tuple(delta), hw.lambda0, hw.delta_imag)
        steps.append(ReflectionStep((i, j), pairing, before, after))
        word[pos], word[pos + 1] = word[pos + 1], word[pos]
    return steps


def odd_reflect_chain(hw: AffineWeight) -> AffineWeight:
    """Highest weight for the standard Borel after the full chain of odd reflections."""
    steps = odd_reflection_steps(hw)
    return steps[-1].after if steps else hw


__all__ = [
    "AffineWeight",
    "ReflectionStep",
    "UndecidableReflection",
    "Weight",
    "affine_character_mn",
    "affine_character_nn",
    "affine_sum",
    "aux_coefficients",
    "character",
    "dual_partition",
    "first_series_mismatch",
    "fock_character",
    "fock_decomposition",
    "glmn_product",
    "glmn_product_coefficient",
    "h_of",
    "integrable_weight",
    "level_one_sum",
    "nonstandard_weight",
    "odd_reflect_chain",
    "odd_reflection_steps",
    "q_character",
    "q_identity_sides",
    "specialized_level_one_sum",
    "verify_duality_symmetry",
    "verify_q_identity",
    "weight_of",
]
