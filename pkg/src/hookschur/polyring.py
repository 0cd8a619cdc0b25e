"""Exact sparse Laurent polynomials and half-integer q-series.

Coefficients are Python ints throughout.  A :class:`LaurentPoly` may carry a
truncation bound: monomials whose grading exceeds the bound are discarded on
construction, so every product is exact below the bound.  The grading is the
sum of exponents over the variable kinds listed in ``graded`` (all kinds by
default).

Inverse alphabets (``xinv``, ``yinv``, ``zinv``) are separate formal variables
of positive degree.  Genuine negative exponents are allowed as well and are
used for finite Weyl characters.

The variable ``q`` stores doubled exponents: ``Q^k`` means ``q^(k/2)``.
"""

from __future__ import annotations

from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Union


class Kind(IntEnum):
    X = 0
    XINV = 1
    Y = 2
    YINV = 3
    Z = 4
    ZINV = 5
    Q = 6

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    Kind.X: "x",
    Kind.XINV: "xinv",
    Kind.Y: "y",
    Kind.YINV: "yinv",
    Kind.Z: "z",
    Kind.ZINV: "zinv",
    Kind.Q: "q",
}
_BY_LABEL = {v: k for k, v in _LABELS.items()}


class VarId(NamedTuple):
    kind: Kind
    index: int

    def __str__(self) -> str:
        if self.kind is Kind.Q:
            return "q"
        return f"{self.kind.label}{self.index}"

    @classmethod
    def parse(cls, name: str) -> VarId:
        if name == "q":
            return Q
        head = name.rstrip("0123456789")
        if head not in _BY_LABEL or head == name:
            raise ValueError(f"unknown variable name {name!r}")
        return cls(_BY_LABEL[head], int(name[len(head):]))


def X(i: int) -> VarId:
    return VarId(Kind.X, i)


def Xinv(i: int) -> VarId:
    return VarId(Kind.XINV, i)


def Y(i: int) -> VarId:
    return VarId(Kind.Y, i)


def Yinv(i: int) -> VarId:
    return VarId(Kind.YINV, i)


def Z(i: int) -> VarId:
    return VarId(Kind.Z, i)


def Zinv(i: int) -> VarId:
    return VarId(Kind.ZINV, i)


Q = VarId(Kind.Q, 0)

ALL_KINDS = frozenset(Kind)

# sorted tuple of (VarId, nonzero exponent)
Monomial = tuple


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        e2 = d.get(v, 0) + e
        if e2:
            d[v] = e2
        else:
            del d[v]
    return tuple(sorted(d.items()))


def _canonical(m: Monomial) -> Monomial:
    """Sort a monomial by variable, merging repeats and dropping zero exponents."""
    if all(m[i][0] < m[i + 1][0] for i in range(len(m) - 1)) and all(e for _, e in m):
        return m
    merged: dict = {}
    for v, e in m:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted((v, e) for v, e in merged.items() if e))


def mono_pow(a: Monomial, k: int) -> Monomial:
    if k == 0:
        return ()
    return tuple((v, e * k) for v, e in a)


def mono_degree(m: Monomial, graded: frozenset = ALL_KINDS) -> int:
    return sum(e for v, e in m if v.kind in graded)


def _sort_key(m: Monomial):
    return (sum(e for _, e in m), tuple((v, -e) for v, e in m))


def format_monomial(m: Monomial) -> str:
    pieces = []
    for v, e in m:
        if v.kind is Kind.Q:
            pieces.append(format_qpower(e))
        elif e == 1:
            pieces.append(str(v))
        else:
            pieces.append(f"{v}^{e}")
    return "*".join(pieces)


def format_qpower(doubled: int) -> str:
    if doubled == 2:
        return "q"
    if doubled % 2 == 0:
        return f"q^{doubled // 2}"
    return f"q^({doubled}/2)"


def _join_terms(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for k, (c, body) in enumerate(terms):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if not body:
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(f" {sign} {text}")
    return "".join(out)


class LaurentPoly:
    """Sparse multivariate Laurent polynomial with big-integer coefficients."""

    __slots__ = ("terms", "trunc", "graded", "_hash")

    def __init__(
        self,
        terms: Mapping[Monomial, int] | None = None,
        trunc: int | None = None,
        graded: Iterable[Kind] | None = None,
    ):
        self.graded = ALL_KINDS if graded is None else frozenset(graded)
        self.trunc = trunc
        clean = {}
        if terms:
            for m, c in terms.items():
                m = _canonical(m)
                if c and (trunc is None or mono_degree(m, self.graded) <= trunc):
                    clean[m] = clean.get(m, 0) + c
            clean = {m: c for m, c in clean.items() if c}
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, trunc, graded) -> LaurentPoly:
        p = cls.__new__(cls)
        p.terms = terms
        p.trunc = trunc
        p.graded = graded
        p._hash = None
        return p

    # constructors

    @classmethod
    def const(cls, c: int, trunc: int | None = None, graded=None) -> LaurentPoly:
        return cls({(): c}, trunc, graded)

    @classmethod
    def one(cls, trunc: int | None = None, graded=None) -> LaurentPoly:
        return cls.const(1, trunc, graded)

    @classmethod
    def zero(cls, trunc: int | None = None, graded=None) -> LaurentPoly:
        return cls({}, trunc, graded)

    @classmethod
    def var(cls, v: VarId, exp: int = 1, trunc: int | None = None, graded=None) -> LaurentPoly:
        return cls({((v, exp),) if exp else (): 1}, trunc, graded)

    @classmethod
    def monomial(cls, m: Mapping[VarId, int] | Monomial, coeff: int = 1, trunc=None, graded=None) -> LaurentPoly:
        items = m.items() if isinstance(m, Mapping) else m
        return cls({tuple(sorted((v, e) for v, e in items if e)): coeff}, trunc, graded)

    # context helpers

    def _context(self, other: LaurentPoly):
        if self.graded != other.graded:
            # an untruncated operand adopts the other's grading
            if self.trunc is None:
                return other.trunc, other.graded
            if other.trunc is None:
                return self.trunc, self.graded
            raise ValueError("cannot combine truncated polynomials with different gradings")
        if self.trunc is None:
            return other.trunc, self.graded
        if other.trunc is None:
            return self.trunc, self.graded
        return min(self.trunc, other.trunc), self.graded

    def _coerce(self, other) -> LaurentPoly:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, None, self.graded)
        if isinstance(other, VarId):
            return LaurentPoly.var(other, 1, None, self.graded)
        return NotImplemented

    # arithmetic

    def __add__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        trunc, graded = self._context(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            c2 = terms.get(m, 0) + c
            if c2:
                terms[m] = c2
            else:
                terms.pop(m, None)
        return LaurentPoly(terms, trunc, graded)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly._raw({m: -c for m, c in self.terms.items()}, self.trunc, self.graded)

    def __sub__(self, other) -> LaurentPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> LaurentPoly:
        return (-self) + other

    def __mul__(self, other) -> LaurentPoly:
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly._raw({}, self.trunc, self.graded)
            return LaurentPoly._raw({m: c * other for m, c in self.terms.items()}, self.trunc, self.graded)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> LaurentPoly:
        if k < 0:
            raise ValueError("negative powers are only defined for monomials; use monomial exponents")
        result = LaurentPoly.one(self.trunc, self.graded)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        items = sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))
        return _join_terms([(c, format_monomial(m)) for m, c in items])

    # queries

    def coeff(self, m: Mapping[VarId, int] | Monomial) -> int:
        items = m.items() if isinstance(m, Mapping) else m
        return self.terms.get(tuple(sorted((v, e) for v, e in items if e)), 0)

    def degree(self) -> int | None:
        if not self.terms:
            return None
        return max(mono_degree(m, self.graded) for m in self.terms)

    def variables(self) -> set[VarId]:
        return {v for m in self.terms for v, _ in m}

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: _sort_key(t[0]))

    # transformations

    def truncate(self, trunc: int | None, graded: Iterable[Kind] | None = None) -> LaurentPoly:
        g = self.graded if graded is None else frozenset(graded)
        return LaurentPoly(self.terms, trunc, g)

    def regrade(self, graded: Iterable[Kind] | None, trunc: int | None = None) -> LaurentPoly:
        return LaurentPoly(self.terms, trunc, graded)

    def homogeneous_part(self, deg: int) -> LaurentPoly:
        return LaurentPoly(
            {m: c for m, c in self.terms.items() if mono_degree(m, self.graded) == deg},
            self.trunc,
            self.graded,
        )

    def rename(self, mapping: Mapping[VarId, VarId]) -> LaurentPoly:
        """Substitute variables by variables."""
        terms: dict = {}
        for m, c in self.terms.items():
            d: dict = {}
            for v, e in m:
                w = mapping.get(v, v)
                d[w] = d.get(w, 0) + e
            key = tuple(sorted((v, e) for v, e in d.items() if e))
            c2 = terms.get(key, 0) + c
            if c2:
                terms[key] = c2
            else:
                terms.pop(key, None)
        return LaurentPoly(terms, self.trunc, self.graded)

    def substitute(self, mapping: Mapping[VarId, LaurentPoly], trunc=None, graded=None) -> LaurentPoly:
        """Ring homomorphism sending each mapped variable to a polynomial.

        Negative exponents are allowed only for variables mapped to monomials.
        """
        g = self.graded if graded is None else frozenset(graded)
        out = LaurentPoly.zero(trunc, g)
        pow_cache: dict = {}

        def power(v, e):
            key = (v, e)
            if key not in pow_cache:
                img = mapping[v]
                if e < 0:
                    if not img.is_monomial():
                        raise ValueError(f"cannot invert non-monomial image of {v}")
                    ((mono, c),) = img.terms.items()
                    if c not in (1, -1):
                        raise ValueError(f"cannot invert image of {v} over the integers")
                    pow_cache[key] = LaurentPoly({mono_pow(mono, e): c if e % 2 else 1}, trunc, g)
                else:
                    pow_cache[key] = img.regrade(g, trunc) ** e
            return pow_cache[key]

        for m, c in self.terms.items():
            term = LaurentPoly({(): c}, trunc, g)
            for v, e in m:
                if v in mapping:
                    term = term * power(v, e)
                else:
                    term = term * LaurentPoly({((v, e),): 1}, trunc, g)
            out = out + term
        return out

    def evaluate_ones(self, kinds: Iterable[Kind] | None = None) -> LaurentPoly:
        """Set every variable of the given kinds (default: all) to 1."""
        ks = ALL_KINDS if kinds is None else frozenset(kinds)
        terms: dict = {}
        for m, c in self.terms.items():
            key = tuple((v, e) for v, e in m if v.kind not in ks)
            terms[key] = terms.get(key, 0) + c
        return LaurentPoly(terms, self.trunc, self.graded)

    def split(self, kinds: Iterable[Kind]) -> dict[Monomial, LaurentPoly]:
        """Group terms by their part in the given kinds.

        Returns ``{m: p}`` with ``self = Σ m·p`` and ``p`` free of those kinds.
        """
        ks = frozenset(kinds)
        groups: dict = {}
        for m, c in self.terms.items():
            key = tuple((v, e) for v, e in m if v.kind in ks)
            rest = tuple((v, e) for v, e in m if v.kind not in ks)
            groups.setdefault(key, {})[rest] = c
        return {k: LaurentPoly(t, None, self.graded) for k, t in groups.items()}

    def to_json(self) -> list[dict]:
        return [
            {"monomial": {str(v): e for v, e in m}, "coeff": str(c)}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict], trunc=None, graded=None) -> LaurentPoly:
        terms = {}
        for entry in data:
            m = tuple(sorted((VarId.parse(k), int(e)) for k, e in entry["monomial"].items()))
            terms[m] = terms.get(m, 0) + int(entry["coeff"])
        return cls(terms, trunc, graded)


def poly_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact product, discarding monomials above the common truncation bound."""
    trunc, graded = a._context(b)
    if len(a.terms) > len(b.terms):
        a, b = b, a
    out: dict = {}
    if trunc is None:
        for ma, ca in a.terms.items():
            for mb, cb in b.terms.items():
                m = mono_mul(ma, mb)
                c = out.get(m, 0) + ca * cb
                if c:
                    out[m] = c
                else:
                    del out[m]
        return LaurentPoly._raw(out, None, graded)
    da = [(ma, ca, mono_degree(ma, graded)) for ma, ca in a.terms.items()]
    db = sorted(((mb, cb, mono_degree(mb, graded)) for mb, cb in b.terms.items()), key=lambda t: t[2])
    for ma, ca, ga in da:
        room = trunc - ga
        for mb, cb, gb in db:
            if gb > room:
                break
            m = mono_mul(ma, mb)
            c = out.get(m, 0) + ca * cb
            if c:
                out[m] = c
            else:
                del out[m]
    return LaurentPoly._raw(out, trunc, graded)


def as_poly(letter: Union[VarId, LaurentPoly], trunc: int | None = None, graded=None) -> LaurentPoly:
    if isinstance(letter, LaurentPoly):
        return letter if trunc is None and graded is None else letter.truncate(trunc, graded)
    return LaurentPoly.var(letter, 1, trunc, graded)


def geometric_factor(
    v: Union[VarId, LaurentPoly],
    sign: str,
    trunc: int,
    graded: Iterable[Kind] | None = None,
) -> LaurentPoly:
    """Truncated expansion of ``(1 - v)^(-1)`` (sign ``'-'``) or ``1 + v`` (sign ``'+'``).

    ``v`` is a variable or a monomial with positive grading; the result keeps
    terms of grading <= ``trunc``.
    """
    if trunc < 0:
        raise ValueError("trunc must be nonnegative")
    g = ALL_KINDS if graded is None else frozenset(graded)
    m = as_poly(v)
    if not m.is_monomial():
        raise ValueError("geometric_factor needs a single monomial")
    ((mono, c),) = m.terms.items()
    if sign == "+":
        return LaurentPoly({(): 1, mono: c}, trunc, g)
    if sign != "-":
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    step = mono_degree(mono, g)
    if step <= 0:
        raise ValueError("geometric series needs a monomial of positive grading")
    terms = {mono_pow(mono, k): c ** k for k in range(trunc // step + 1)}
    return LaurentPoly(terms, trunc, g)


def product(factors: Iterable[LaurentPoly], trunc: int | None = None, graded=None) -> LaurentPoly:
    out = LaurentPoly.one(trunc, graded)
    for f in factors:
        out = out * f
    return out


class HalfSeries:
    """Truncated series in ``q`` with exponents in ``(1/2)Z``, exact through ``q^(order/2)``.

    ``coeffs`` maps doubled exponents to integers; ``order`` is doubled too.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Mapping[int, int] | None = None, order: int = 0):
        clean = {}
        for k, c in (coeffs or {}).items():
            if c and k <= order:
                if k < 0:
                    raise ValueError(f"negative exponent q^({k}/2) in a HalfSeries")
                clean[k] = c
        self.coeffs = clean
        self.order = order

    @classmethod
    def one(cls, order: int) -> HalfSeries:
        return cls({0: 1}, order)

    @classmethod
    def qpow(cls, doubled: int, order: int, coeff: int = 1) -> HalfSeries:
        return cls({doubled: coeff}, order)

    @classmethod
    def from_list(cls, coeffs: Iterable[int], order: int | None = None) -> HalfSeries:
        """Coefficient list indexed by doubled exponent."""
        coeffs = list(coeffs)
        return cls(dict(enumerate(coeffs)), len(coeffs) - 1 if order is None else order)

    def __getitem__(self, exponent) -> int:
        """Coefficient of ``q^exponent`` (exponent may be a Fraction or half-integer)."""
        k = Fraction(exponent) * 2
        if k.denominator != 1:
            raise ValueError(f"{exponent} is not a half-integer")
        k = int(k)
        if k > self.order:
            raise IndexError(f"q^{exponent} is beyond the series order")
        return self.coeffs.get(k, 0)

    def coeff2(self, doubled: int) -> int:
        return self.coeffs.get(doubled, 0)

    def to_list(self) -> list[int]:
        return [self.coeffs.get(k, 0) for k in range(self.order + 1)]

    def _coerce(self, other):
        if isinstance(other, HalfSeries):
            return other
        if isinstance(other, int):
            return HalfSeries({0: other}, self.order)
        return NotImplemented

    def __add__(self, other) -> HalfSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        order = min(self.order, other.order)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return HalfSeries(out, order)

    __radd__ = __add__

    def __neg__(self) -> HalfSeries:
        return HalfSeries({k: -c for k, c in self.coeffs.items()}, self.order)

    def __sub__(self, other) -> HalfSeries:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> HalfSeries:
        return (-self) + other

    def __mul__(self, other) -> HalfSeries:
        if isinstance(other, int):
            return HalfSeries({k: c * other for k, c in self.coeffs.items()}, self.order)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return series_mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> HalfSeries:
        if k < 0:
            return series_inv_unit(self) ** (-k)
        out = HalfSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = HalfSeries({0: other}, self.order)
        if not isinstance(other, HalfSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, frozenset(self.coeffs.items())))

    def agrees_with(self, other: HalfSeries) -> bool:
        n = min(self.order, other.order)
        return all(self.coeffs.get(k, 0) == other.coeffs.get(k, 0) for k in range(n + 1))

    def truncate(self, order: int) -> HalfSeries:
        if order > self.order:
            raise ValueError("cannot extend a series beyond its known order")
        return HalfSeries(self.coeffs, order)

    def shift(self, doubled: int) -> HalfSeries:
        """Multiply by ``q^(doubled/2)``; the known order moves with it."""
        return HalfSeries({k + doubled: c for k, c in self.coeffs.items()}, self.order + doubled)

    def __repr__(self) -> str:
        return f"HalfSeries({self})"

    def __str__(self) -> str:
        body = _join_terms(
            [(c, "" if k == 0 else format_qpower(k)) for k, c in sorted(self.coeffs.items())]
        )
        tail = f"O({format_qpower(self.order + 1)})"
        return tail if body == "0" else f"{body} + {tail}"

    def to_json(self) -> dict:
        return {
            "order": str(Fraction(self.order, 2)),
            "coeffs": {str(Fraction(k, 2)): str(c) for k, c in sorted(self.coeffs.items())},
        }


def series_mul(a: HalfSeries, b: HalfSeries) -> HalfSeries:
    order = min(a.order, b.order)
    out: dict = {}
    bi = sorted(b.coeffs.items())
    for i, ca in a.coeffs.items():
        for j, cb in bi:
            k = i + j
            if k > order:
                break
            out[k] = out.get(k, 0) + ca * cb
    return HalfSeries(out, order)


def series_inv_unit(a: HalfSeries) -> HalfSeries:
    """Inverse of a series whose constant term is +1 or -1."""
    c0 = a.coeffs.get(0, 0)
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit")
    order = a.order
    inv = [0] * (order + 1)
    inv[0] = c0
    terms = [(k, c) for k, c in sorted(a.coeffs.items()) if k > 0]
    for n in range(1, order + 1):
        s = 0
        for k, c in terms:
            if k > n:
                break
            s += c * inv[n - k]
        inv[n] = -c0 * s
    return HalfSeries(dict(enumerate(inv)), order)


def series_product(factors: Iterable[HalfSeries], order: int) -> HalfSeries:
    out = HalfSeries.one(order)
    for f in factors:
        out = series_mul(out, f)
    return out


def specialize(p: LaurentPoly, assignment: Mapping[VarId, HalfSeries]) -> HalfSeries:
    """Substitute a q-series for every variable of ``p``.

    Negative exponents need the assigned series to be a unit.
    The result is exact through the smallest order among the assigned series.
    """
    used = p.variables()
    missing = used - set(assignment)
    if missing:
        raise KeyError(f"unassigned variables: {sorted(str(v) for v in missing)}")
    orders = [assignment[v].order for v in used] or [min((s.order for s in assignment.values()), default=0)]
    order = min(orders)
    cache: dict = {}

    def power(v: VarId, e: int) -> HalfSeries:
        key = (v, e)
        if key not in cache:
            base = assignment[v].truncate(order) if assignment[v].order > order else assignment[v]
            cache[key] = base ** e
        return cache[key]

    out = HalfSeries({}, order)
    for m, c in p.terms.items():
        term = HalfSeries({0: c}, order)
        for v, e in m:
            term = term * power(v, e)
        out = out + term
    return out


def q_as_series(doubled: int, order: int) -> HalfSeries:
    return HalfSeries.qpow(doubled, order)


def qpoly_to_series(p: LaurentPoly, order: int | None = None) -> HalfSeries:
    """View a polynomial in ``q`` alone (doubled exponents) as a HalfSeries."""
    if order is None:
        if p.trunc is None:
            raise ValueError("need an explicit order for an untruncated polynomial")
        order = p.trunc
    coeffs: dict = {}
    for m, c in p.terms.items():
        if any(v.kind is not Kind.Q for v, _ in m):
            raise ValueError("polynomial involves variables other than q")
        k = dict(m).get(Q, 0)
        coeffs[k] = coeffs.get(k, 0) + c
    return HalfSeries(coeffs, order)
