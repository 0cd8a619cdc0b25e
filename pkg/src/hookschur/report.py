"""Verification reports and the identity-checking harness."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .glchar import GlCharacter, decompose_character, lr_coefficients
from .partitions import GeneralizedPartition, Partition, enumerate_generalized, enumerate_partitions, partitions_of
from .polyring import HalfSeries, LaurentPoly, X, Y, Z, format_monomial
from .superchar import (
    affine_character_mn,
    character,
    first_series_mismatch,
    fock_decomposition,
    glmn_product,
    glmn_product_coefficient,
    integrable_weight,
    level_one_sum,
    nonstandard_weight,
    odd_reflection_steps,
    q_character,
    q_identity_sides,
)
from .symfun import hook_cauchy_lhs, hook_cauchy_rhs, hook_schur_skew, hook_schur_tableau, schur, to_doubled
from .tensorprod import verify_tensor_against_branching


@dataclass
class VerificationReport:
    identity_name: str
    parameters: dict
    status: str
    first_mismatch: dict | None = None
    elapsed_ms: int = 0
    checks: int = 0

    def __post_init__(self):
        if self.status not in ("pass", "fail"):
            raise ValueError(f"status must be 'pass' or 'fail', not {self.status!r}")
        if self.status == "fail" and self.first_mismatch is None:
            raise ValueError("a failing report needs a first_mismatch")

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        return {
            "identity_name": self.identity_name,
            "parameters": self.parameters,
            "status": self.status,
            "first_mismatch": self.first_mismatch,
            "elapsed_ms": self.elapsed_ms,
            "checks": self.checks,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> VerificationReport:
        return cls(
            data["identity_name"],
            data["parameters"],
            data["status"],
            data.get("first_mismatch"),
            data.get("elapsed_ms", 0),
            data.get("checks", 0),
        )

    @classmethod
    def from_json(cls, text: str) -> VerificationReport:
        return cls.from_dict(json.loads(text))

    def summary(self) -> str:
        line = f"{self.identity_name}: {self.status.upper()} ({self.checks} checks, {self.elapsed_ms} ms)"
        if self.first_mismatch:
            m = self.first_mismatch
            line += f" first mismatch in {m['case']} at {m['at']}: expected {m['expected']}, got {m['actual']}"
        return line


# a check yields (case label, expected, actual); values are LaurentPoly, HalfSeries, dict or scalars
Check = Iterator[tuple[str, object, object]]


def first_mismatch(expected, actual):
    """Locate the first differing coefficient as ``(location, expected, actual)``, or None."""
    if isinstance(expected, LaurentPoly) and isinstance(actual, LaurentPoly):
        keys = sorted(set(expected.terms) | set(actual.terms), key=lambda m: (sum(e for _, e in m), format_monomial(m)))
        for m in keys:
            a, b = expected.terms.get(m, 0), actual.terms.get(m, 0)
            if a != b:
                return format_monomial(m) or "1", a, b
        return None
    if isinstance(expected, HalfSeries) and isinstance(actual, HalfSeries):
        d = first_series_mismatch(expected, actual)
        if d is None:
            if expected.order != actual.order:
                return "order", expected.order, actual.order
            return None
        return f"q^{d[0]}", d[1], d[2]
    if isinstance(expected, dict) and isinstance(actual, dict):
        for k in sorted(set(expected) | set(actual), key=str):
            a, b = expected.get(k, 0), actual.get(k, 0)
            if a != b:
                return str(k), a, b
        return None
    if expected != actual:
        return "value", expected, actual
    return None


def _perturbed(value):
    if isinstance(value, (LaurentPoly, HalfSeries)):
        return value + 1
    if isinstance(value, dict):
        out = dict(value)
        key = next(iter(sorted(out, key=str)), "perturbed")
        out[key] = out.get(key, 0) + 1
        return out
    return ("perturbed", value)


def run_check(name: str, parameters: dict, check: Check, perturb: bool = False) -> VerificationReport:
    """Drive a check generator, stopping at the first mismatch."""
    start = time.perf_counter()
    count = 0
    mismatch = None
    for case, expected, actual in check:
        if perturb and count == 0:
            actual = _perturbed(actual)
        count += 1
        d = first_mismatch(expected, actual)
        if d is not None:
            mismatch = {"case": case, "at": d[0], "expected": str(d[1]), "actual": str(d[2])}
            break
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(name, parameters, "fail" if mismatch else "pass", mismatch, elapsed, count)


# --- individual identities ------------------------------------------------------------------


def _alpha(var, n):
    return [var(i) for i in range(1, n + 1)]


def check_two_definitions(max_size: int, max_alphabet: int = 3) -> Check:
    for lam in enumerate_partitions(max_size, max_size):
        for nx in range(max_alphabet + 1):
            for ny in range(max_alphabet + 1):
                x, y = _alpha(X, nx), _alpha(Y, ny)
                yield f"HS{lam} |x|={nx} |y|={ny}", hook_schur_skew(lam, x, y), hook_schur_tableau(lam, x, y)


def check_hook_cauchy(degree: int, nx: int = 3, ny: int = 3, nz: int = 2) -> Check:
    x, y, z = _alpha(X, nx), _alpha(Y, ny), _alpha(Z, nz)
    yield f"degree {degree}", hook_cauchy_lhs(x, y, z, degree), hook_cauchy_rhs(x, y, z, degree)


def check_q_identity(lams: Iterable[int], order) -> Check:
    for lam in lams:
        lhs, rhs = q_identity_sides(lam, order)
        yield f"lambda={lam}", rhs, lhs


def check_duality(max_rank: int, max_abs: int, order) -> Check:
    from .superchar import dual_partition

    for l in range(1, max_rank + 1):
        for lam in enumerate_generalized(max_abs, l):
            yield f"{lam} vs {dual_partition(lam)}", q_character(lam, order), q_character(dual_partition(lam), order)


def check_level_one(lams: Iterable[int], alphabet: int, trunc: int) -> Check:
    for lam in lams:
        expected = level_one_sum(lam, alphabet, alphabet, trunc)
        yield f"lambda={lam}", expected, character(GeneralizedPartition([lam]), alphabet, alphabet, trunc)


def check_fock(max_rank: int, alphabet: int, trunc: int) -> Check:
    for l in range(1, max_rank + 1):
        dec = fock_decomposition(l, alphabet, alphabet, trunc)
        for lam, coeff in dec.items():
            yield f"l={l} {lam}", coeff, character(lam, alphabet, alphabet, trunc)


def check_lr(max_size: int) -> Check:
    for a in range(max_size + 1):
        for b in range(max_size + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(b):
                    # every constituent has at most l(μ)+l(ν) rows, so this rank loses nothing
                    rank = len(mu) + len(nu)
                    xs = _alpha(X, rank)
                    prod = schur(mu, xs) * schur(nu, xs)
                    if rank:
                        dec = decompose_character(GlCharacter(rank, prod))
                        oracle = {lam.to_partition(): m for lam, m in dec.items()}
                    else:
                        oracle = {Partition(): 1}
                    yield f"{mu}*{nu}", oracle, lr_coefficients(mu, nu)


def check_tensor(max_abs: int, bound: int, levels=((1, 1), (2, 1))) -> Check:
    for l, r in levels:
        for mu in enumerate_generalized(max_abs, l):
            for nu in enumerate_generalized(max_abs, r):
                ok, rep = verify_tensor_against_branching(mu, l, nu, r, bound)
                bad = rep["mismatches"][0] if rep["mismatches"] else None
                expected = {tuple(bad["weight"]): bad["oracle"]} if bad else {}
                actual = {tuple(bad["weight"]): bad["theorem"]} if bad else {}
                yield f"{mu} (x) {nu}", expected, actual


def check_glmn(m: int, n: int, lams: Iterable[int], order) -> Check:
    lams = list(lams)
    order2 = to_doubled(order)
    prod = glmn_product(m, n, order2 + max((abs(k) for k in lams), default=0))
    for lam in lams:
        yield f"lambda={lam}", glmn_product_coefficient(prod, lam, order), affine_character_mn(lam, m, n, order)


def check_odd_reflections(ns: Iterable[int], lam_min: int, lam_extra: int) -> Check:
    for n in ns:
        for lam in range(lam_min, n + lam_extra + 1):
            steps = odd_reflection_steps(nonstandard_weight(lam, n))
            final = steps[-1].after if steps else nonstandard_weight(lam, n)
            yield f"n={n} lambda={lam}", str(integrable_weight(lam, n, n)), str(final)
            for st in steps:
                diff = [a - b for a, b in zip(st.before.eps + st.before.delta_part, st.after.eps + st.after.delta_part)]
                i, j = st.root
                odd_root = [0] * (2 * n)
                if st.pairing:
                    # before - after is the odd root δ_i - ε_j
                    odd_root[j - 1] = -1
                    odd_root[n + i - 1] = 1
                yield f"n={n} lambda={lam} step {st.root}", odd_root, diff
                yield f"n={n} lambda={lam} level", st.before.lambda0, st.after.lambda0


def _lams(lam, default):
    return [lam] if lam is not None else list(default)


IDENTITIES: dict[str, Callable[..., tuple[dict, Check]]] = {
    "two-defs": lambda order, size, lam=None: (
        {"max_size": size, "max_alphabet": 3},
        check_two_definitions(size),
    ),
    "cauchy": lambda order, size, lam=None: (
        {"degree": size, "x": 3, "y": 3, "z": 2},
        check_hook_cauchy(size),
    ),
    "q-identity": lambda order, size, lam=None: (
        {"lambda": _lams(lam, range(-3, 4)), "order": order},
        check_q_identity(_lams(lam, range(-3, 4)), order),
    ),
    "duality": lambda order, size, lam=None: (
        {"max_rank": 2, "max_abs": 2, "order": order},
        check_duality(2, 2, order),
    ),
    "level-one": lambda order, size, lam=None: (
        {"lambda": _lams(lam, range(-2, 3)), "alphabet": 2, "trunc": size},
        check_level_one(_lams(lam, range(-2, 3)), 2, size),
    ),
    "fock": lambda order, size, lam=None: (
        {"max_rank": 2, "alphabet": 2, "trunc": size},
        check_fock(2, 2, size),
    ),
    "lr": lambda order, size, lam=None: ({"max_size": size}, check_lr(size)),
    "tensor": lambda order, size, lam=None: ({"max_abs": 2, "bound": size}, check_tensor(2, size)),
    "glmn": lambda order, size, lam=None: (
        {"m": 2, "n": 1, "lambda": _lams(lam, (-1, 0, 1)), "order": order},
        check_glmn(2, 1, _lams(lam, (-1, 0, 1)), order),
    ),
    "odd-reflection": lambda order, size, lam=None: (
        {"n": [1, 2, 3], "lambda": "-3..n+3"},
        check_odd_reflections((1, 2, 3), -3, 3),
    ),
}


def _jsonable(params: dict) -> dict:
    return {k: str(v) if isinstance(v, Fraction) else v for k, v in params.items()}


def verify_identity(
    name: str, order_budget=3, size_budget: int = 3, perturb: bool = False, lam: int | None = None
) -> VerificationReport:
    """Run one named identity check; ``lam`` narrows the λ range where one applies."""
    if name not in IDENTITIES:
        raise KeyError(f"unknown identity {name!r}; choose from {sorted(IDENTITIES)}")
    if order_budget < 0 or size_budget < 0:
        raise ValueError("budgets must be nonnegative")
    params, check = IDENTITIES[name](order_budget, size_budget, lam)
    return run_check(name, _jsonable(params), check, perturb)


def verify_all(order_budget=3, size_budget: int = 3, perturb: str | None = None) -> list[VerificationReport]:
    """Run every identity; ``perturb`` names one identity whose first actual value gets +1."""
    if order_budget < 0 or size_budget < 0:
        raise ValueError("budgets must be nonnegative")
    if perturb is not None and perturb not in IDENTITIES:
        raise KeyError(f"unknown identity {perturb!r}")
    return [verify_identity(name, order_budget, size_budget, name == perturb) for name in IDENTITIES]


__all__ = [
    "IDENTITIES",
    "VerificationReport",
    "first_mismatch",
    "run_check",
    "verify_all",
    "verify_identity",
]
