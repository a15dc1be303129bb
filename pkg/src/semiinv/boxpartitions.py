"""Partitions contained in a ``k x n`` rectangle.

``p(k, n, m)`` counts partitions of ``m`` into at most ``k`` parts, each
part at most ``n`` (equivalently: exactly ``k`` parts with zero parts
allowed).  A partition is encoded by its part-multiplicity vector
``nu = (nu_0, ..., nu_n)``, where ``nu_i`` is the number of parts equal to
``i``; then ``sum(nu) == k`` and ``sum(i * nu_i) == m``.  This is exactly
the exponent vector of a monomial of degree ``k`` and weight ``m`` in the
binary-form coefficients ``a_0..a_n``, so the enumeration order fixed here
doubles as the column order of every operator matrix and kernel file in
the package: partitions are emitted in descending anti-lexicographic
monomial order, i.e. ascending lexicographic order of the reversed vector
``(nu_n, ..., nu_0)``.

Counting uses a two-dimensional recurrence over the box,

    p(k, n, m) = p(k, n-1, m) + p(k-1, n, m-n)

(split on whether some part equals ``n``), memoized per ``(k, n)`` with
the whole weight vector stored, since delta scans reuse the same boxes
heavily.  Cells are exact big integers.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass


@dataclass(frozen=True)
class BoxPartition:
    """A partition inside a ``box_k x box_n`` rectangle, as multiplicities.

    ``nu[i]`` is the number of parts equal to ``i``; zero parts are counted,
    so ``sum(nu) == box_k`` always holds.
    """

    nu: tuple[int, ...]
    box_k: int
    box_n: int

    def __post_init__(self):
        if len(self.nu) != self.box_n + 1:
            raise ValueError(
                f"multiplicity vector has length {len(self.nu)}, "
                f"expected {self.box_n + 1}"
            )
        if any(v < 0 for v in self.nu):
            raise ValueError("negative part multiplicity")
        if sum(self.nu) != self.box_k:
            raise ValueError(
                f"multiplicities sum to {sum(self.nu)}, expected {self.box_k}"
            )

    @property
    def weight(self) -> int:
        """Size of the partition: sum of all parts."""
        return sum(i * v for i, v in enumerate(self.nu))

    def parts(self) -> tuple[int, ...]:
        """The nonzero parts in decreasing order."""
        out = []
        for i in range(self.box_n, 0, -1):
            out.extend([i] * self.nu[i])
        return tuple(out)


@functools.lru_cache(maxsize=None)
def _count_table(k: int, n: int) -> tuple[int, ...]:
    """Vector of p(k, n, m) for m = 0..n*k."""
    if k == 0 or n == 0:
        return (1,)
    narrower = _count_table(k, n - 1)
    shorter = _count_table(k - 1, n)
    out = []
    for m in range(n * k + 1):
        v = narrower[m] if m < len(narrower) else 0
        if m >= n:
            v += shorter[m - n]
        out.append(v)
    return tuple(out)


def count_partitions_in_box(k: int, n: int, m: int) -> int:
    """Number of partitions of ``m`` with at most ``k`` parts, each <= ``n``.

    Returns 0 for ``m < 0`` and for ``m > n*k``.
    """
    if k < 0 or n < 0:
        raise ValueError(f"box dimensions must be nonnegative, got ({k},{n})")
    if m < 0 or m > n * k:
        return 0
    return _count_table(k, n)[m]


def delta(k: int, n: int, m: int) -> int:
    """p(k,n,m) - p(k,n,m-1); may be negative past the middle weight n*k/2."""
    return count_partitions_in_box(k, n, m) - count_partitions_in_box(k, n, m - 1)


def enumerate_partitions_in_box(k: int, n: int, m: int) -> list[BoxPartition]:
    """All partitions of ``m`` in the ``k x n`` box, in basis order.

    The order is descending anti-lexicographic on the associated monomials:
    multiplicity vectors are generated in ascending lexicographic order of
    ``(nu_n, nu_n-1, ..., nu_1)``.  The length of the result always equals
    ``count_partitions_in_box(k, n, m)``.
    """
    if k < 0 or n < 0:
        raise ValueError(f"box dimensions must be nonnegative, got ({k},{n})")
    if not 0 <= m <= n * k:
        raise ValueError(f"weight {m} outside [0, {n * k}]")
    out: list[BoxPartition] = []
    if n == 0:
        out.append(BoxPartition((k,), k, n))
        return out
    chosen: list[int] = []  # nu_n, nu_{n-1}, ..., nu_1 as chosen so far

    def descend(i: int, parts: int, weight: int) -> None:
        if i == 0:
            # weight == 0 is guaranteed by the bounds below
            out.append(BoxPartition((parts, *reversed(chosen)), k, n))
            return
        # smaller parts carry at most (i-1) each, so weight - i*v <= (i-1)*(parts-v)
        lo = max(0, weight - (i - 1) * parts)
        for v in range(lo, parts + 1):
            rest = weight - i * v
            if rest < 0:
                break
            chosen.append(v)
            descend(i - 1, parts - v, rest)
            chosen.pop()

    descend(n, k, m)
    return out
