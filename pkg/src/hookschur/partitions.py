"""Partitions, generalized partitions and skew shapes.

A :class:`Partition` is stored in canonical form (trailing zeros trimmed).
A :class:`GeneralizedPartition` is a weakly decreasing integer tuple of a
fixed length ``l``; zeros are kept because the ambient rank matters for
rational ``GL_l`` weights.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence


def _check_decreasing(parts: Sequence[int]) -> None:
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"parts must be weakly decreasing: {tuple(parts)}")


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        _check_decreasing(parts)
        if parts and parts[-1] < 0:
            raise ValueError(f"partition parts must be nonnegative: {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        """Row ``i`` (0-based); rows past the end have length 0."""
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __repr__(self) -> str:
        return f"Partition{self.parts}"

    def __str__(self) -> str:
        return format_parts(self.parts)

    def length(self) -> int:
        return len(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.parts) for j in range(row)]

    def padded(self, length: int) -> tuple[int, ...]:
        if length < len(self.parts):
            raise ValueError(f"{self} has more than {length} rows")
        return self.parts + (0,) * (length - len(self.parts))


@dataclass(frozen=True, order=True)
class GeneralizedPartition:
    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int]):
        parts = tuple(int(p) for p in parts)
        if not parts:
            raise ValueError("a generalized partition needs declared length >= 1")
        _check_decreasing(parts)
        object.__setattr__(self, "parts", parts)

    @classmethod
    def padded(cls, parts: Sequence[int], length: int) -> GeneralizedPartition:
        """Insert zeros between the nonnegative and negative parts up to ``length``."""
        parts = tuple(parts)
        if len(parts) > length:
            raise ValueError(f"{parts} has more than {length} parts")
        pos = [p for p in parts if p >= 0]
        neg = [p for p in parts if p < 0]
        return cls(pos + [0] * (length - len(parts)) + neg)

    @property
    def declared_length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> int:
        return self.parts[i]

    def __repr__(self) -> str:
        return f"GeneralizedPartition{self.parts}"

    def __str__(self) -> str:
        return format_parts(self.parts)

    def size(self) -> int:
        return sum(self.parts)

    def shift(self, d: int) -> GeneralizedPartition:
        """``λ + d·(1,...,1)``."""
        return GeneralizedPartition(p + d for p in self.parts)

    def is_partition(self) -> bool:
        return self.parts[-1] >= 0

    def to_partition(self) -> Partition:
        return Partition(self.parts)

    def column_length(self, j: int) -> int:
        return gen_column_length(self, j)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner} is not contained in {self.outer}")

    def size(self) -> int:
        return self.outer.size() - self.inner.size()

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i, row in enumerate(self.outer.parts)
            for j in range(self.inner[i], row)
        ]


def conjugate(p: Partition) -> Partition:
    parts = p.parts
    if not parts:
        return Partition()
    return Partition(sum(1 for r in parts if r >= j) for j in range(1, parts[0] + 1))


def gen_column_length(gp: GeneralizedPartition, j: int) -> int:
    """Length of column ``j`` of a generalized partition.

    Columns ``j >= 1`` count rows reaching column ``j``.  Columns ``j <= 0``
    sit to the left of the first column and get a nonpositive length: minus
    the number of rows whose (negative) boxes extend past column ``j``.
    For ``(5,3,2,1,-1,-2)``: column -1 has length -1, column 0 has -2 and
    column 1 has 4.
    """
    if j >= 1:
        return sum(1 for p in gp.parts if p >= j)
    return -sum(1 for p in gp.parts if p <= j - 1)


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def _partitions_of(n: int, max_length: int, max_part: int) -> Iterator[tuple[int, ...]]:
    # lexicographically descending
    if n == 0:
        yield ()
        return
    if max_length == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        if first * max_length < n:
            break
        for rest in _partitions_of(n - first, max_length - 1, first):
            yield (first,) + rest


def partitions_of(n: int, max_length: int | None = None) -> list[Partition]:
    """Partitions of ``n`` with at most ``max_length`` rows, lex descending."""
    if max_length is None:
        max_length = n
    return [Partition(p) for p in _partitions_of(n, max_length, n)]


def enumerate_partitions(max_size: int, max_length: int) -> list[Partition]:
    """All partitions with size <= max_size and length <= max_length.

    Ordered by size, then lexicographically descending within a size.
    """
    if max_size < 0 or max_length < 0:
        raise ValueError("bounds must be nonnegative")
    out = []
    for n in range(max_size + 1):
        out.extend(partitions_of(n, max_length))
    return out


def enumerate_generalized(max_abs: int, length: int) -> list[GeneralizedPartition]:
    """Weakly decreasing integer tuples of the given length with |part| <= max_abs.

    Ordered lexicographically ascending.
    """
    if max_abs < 0 or length < 1:
        raise ValueError("need max_abs >= 0 and length >= 1")

    def rec(k: int, upper: int) -> Iterator[tuple[int, ...]]:
        if k == 0:
            yield ()
            return
        for first in range(-max_abs, upper + 1):
            for rest in rec(k - 1, first):
                yield (first,) + rest

    tuples = sorted(rec(length, max_abs))
    return [GeneralizedPartition(t) for t in tuples]


def horizontal_strips(outer: Partition, inner: Partition, size: int | None = None) -> Iterator[Partition]:
    """Partitions ``nu`` with ``inner ⊆ nu ⊆ outer`` and ``outer/nu`` a horizontal strip.

    If ``size`` is given only strips with exactly that many boxes are produced.
    """
    rows = len(outer)
    bounds = [(max(outer[i + 1], inner[i]), outer[i]) for i in range(rows)]
    if any(lo > hi for lo, hi in bounds):
        return
    total = outer.size()

    def rec(i: int, acc: list[int], removed: int) -> Iterator[Partition]:
        if size is not None and removed > size:
            return
        if i == rows:
            if size is None or removed == size:
                yield Partition(acc)
            return
        lo, hi = bounds[i]
        for v in range(hi, lo - 1, -1):
            acc.append(v)
            yield from rec(i + 1, acc, removed + hi - v)
            acc.pop()

    if size is not None and size > total - inner.size():
        return
    yield from rec(0, [], 0)


def parse_parts(text: str) -> tuple[int, ...]:
    """Parse the comma-separated syntax ``5,3,2,1,-1,-2``; ``""`` and ``"0"`` are empty."""
    text = text.strip()
    if text in ("", "0"):
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition string: {text!r}") from None


def parse_partition(text: str) -> Partition:
    return Partition(parse_parts(text))


def parse_generalized(text: str, length: int) -> GeneralizedPartition:
    return GeneralizedPartition.padded(parse_parts(text), length)


def format_parts(parts: Sequence[int]) -> str:
    return "(" + ",".join(str(p) for p in parts) + ")"
