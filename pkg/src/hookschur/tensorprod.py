"""Tensor products of gl(inf|inf)^ modules via shifted Littlewood-Richardson coefficients.

``L(Λ(μ)) ⊗ L(Λ(ν))`` (levels l and r) decomposes into ``L(Λ(λ - d·1))`` with
multiplicity ``c^λ_{μ+d·1_l, ν+d·1_r}``, over pairs (λ, d) where λ is a
partition with at most l+r rows, d >= 0, both shifted arguments are
partitions, and ``λ_{l+r} = 0`` whenever d > 0.  The oracle route restricts
``V^κ_{l+r}`` to ``GL_l × GL_r`` instead.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .glchar import branching_gl_sum, lr_coefficients
from .partitions import GeneralizedPartition, Partition, partitions_of


@dataclass(frozen=True)
class Channel:
    lam: Partition
    d: int
    weight: GeneralizedPartition
    multiplicity: int


@dataclass
class TensorDecomposition:
    left: tuple[GeneralizedPartition, int]
    right: tuple[GeneralizedPartition, int]
    bound: int
    terms: dict[GeneralizedPartition, int] = field(default_factory=dict)
    channels: list[Channel] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "left": {"weight": list(self.left[0].parts), "level": self.left[1]},
            "right": {"weight": list(self.right[0].parts), "level": self.right[1]},
            "bound": self.bound,
            "channels": [
                {
                    "lambda": list(ch.lam.padded(len(ch.weight))),
                    "d": ch.d,
                    "weight": list(ch.weight.parts),
                    "multiplicity": ch.multiplicity,
                }
                for ch in self.channels
            ],
        }


def _check_inputs(mu: GeneralizedPartition, l: int, nu: GeneralizedPartition, r: int, bound: int) -> None:
    if len(mu) != l or len(nu) != r:
        raise ValueError("weights must have declared lengths l and r")
    if bound < 0:
        raise ValueError("bound must be nonnegative")


def _window(total: int, rows: int, bound: int):
    """Pairs (λ, d): λ a partition with <= rows rows, |λ| = total + d·rows <= bound,
    d <= bound, and λ_rows = 0 when d > 0."""
    for d in range(bound + 1):
        size = total + d * rows
        if size < 0:
            continue
        if size > bound:
            break
        for lam in partitions_of(size, rows):
            if d > 0 and len(lam) == rows:
                continue
            yield lam, d


def tensor_decompose(
    mu: GeneralizedPartition, l: int, nu: GeneralizedPartition, r: int, bound: int
) -> TensorDecomposition:
    """Decompose ``L(Λ(μ)) ⊗ L(Λ(ν))`` for ``|λ| <= bound`` and ``d <= bound``."""
    _check_inputs(mu, l, nu, r, bound)
    out = TensorDecomposition((mu, l), (nu, r), bound)
    rows = l + r
    d_min = max(0, -mu[l - 1], -nu[r - 1])
    seen: dict[GeneralizedPartition, tuple[Partition, int]] = {}
    for d in range(d_min, bound + 1):
        a = Partition(p + d for p in mu)
        b = Partition(p + d for p in nu)
        if a.size() + b.size() > bound:
            break
        for lam, c in lr_coefficients(a, b).items():
            if d > 0 and len(lam) == rows:
                continue
            weight = GeneralizedPartition(p - d for p in lam.padded(rows))
            # the (λ, d) representation of an output weight must be unique
            assert weight not in seen, (weight, seen.get(weight), (lam, d))
            seen[weight] = (lam, d)
            out.channels.append(Channel(lam, d, weight, c))
            out.terms[weight] = c
    out.terms = dict(sorted(out.terms.items(), key=lambda kv: kv[0].parts, reverse=True))
    return out


@lru_cache(maxsize=None)
def _branching(kappa: GeneralizedPartition, l: int, r: int) -> dict:
    return branching_gl_sum(kappa, l, r)


def verify_tensor_against_branching(
    mu: GeneralizedPartition, l: int, nu: GeneralizedPartition, r: int, bound: int
) -> tuple[bool, dict]:
    """Compare the theorem route with ``b^κ_{μν}`` from restricting ``V^κ_{l+r}``.

    Every candidate κ = λ - d·1 inside the bound window is checked, including
    those the theorem route assigns multiplicity 0.
    """
    _check_inputs(mu, l, nu, r, bound)
    dec = tensor_decompose(mu, l, nu, r, bound)
    mismatches = []
    checked = 0
    for lam, d in _window(mu.size() + nu.size(), l + r, bound):
        kappa = GeneralizedPartition(p - d for p in lam.padded(l + r))
        expected = _branching(kappa, l, r).get((mu, nu), 0)
        actual = dec.terms.get(kappa, 0)
        checked += 1
        if expected != actual:
            mismatches.append({"weight": list(kappa.parts), "oracle": expected, "theorem": actual})
    report = {
        "mu": list(mu.parts),
        "l": l,
        "nu": list(nu.parts),
        "r": r,
        "bound": bound,
        "checked": checked,
        "mismatches": mismatches,
    }
    return not mismatches, report


__all__ = ["Channel", "TensorDecomposition", "tensor_decompose", "verify_tensor_against_branching"]
