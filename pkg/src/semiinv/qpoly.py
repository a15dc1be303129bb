"""Exact integer polynomials in q, Gaussian coefficients, and shape predicates.

A polynomial is stored densely: index ``i`` of :attr:`QPoly.coeffs` holds the
(arbitrary-precision) integer coefficient of ``q**i``.  Canonical form never
stores a trailing zero, so the zero polynomial stores nothing at all and has
degree ``-inf``.

The Gaussian coefficient ``gauss(a, b)`` is built by the q-Pascal recurrence

    gauss(a, b) == gauss(a-1, b-1) + q**b * gauss(a-1, b)

with memoization, so integrality of every coefficient holds by construction;
no polynomial division ever happens.  Coefficient ``m`` of ``gauss(n+k, k)``
counts partitions of ``m`` inside a ``k x n`` box, which is what makes these
polynomials symmetric and unimodal and is cross-checked against the
independent counter in :mod:`semiinv.boxpartitions`.

The unimodality predicates operate on coefficient sequences.  A sequence is
unimodal if it rises weakly and then falls weakly.  The strict variant used
for the two-sided difference families demands strict rises and strict falls,
with exactly three tolerated equalities: between the first two coefficients,
between the last two, and between the two entries of the apex when the
maximum is attained twice in adjacent positions (for a symmetric polynomial
of odd degree the central pair is always equal, so a strict apex there is
impossible).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

NEG_INF = float("-inf")


class NonnegativityViolation(ValueError):
    """Raised when a coefficient required to be nonnegative is negative."""

    def __init__(self, index: int, value: int):
        super().__init__(f"negative coefficient {value} at q^{index}")
        self.index = index
        self.value = value


class QPoly:
    """Dense polynomial in ``q`` with integer coefficients.

    >>> p = QPoly([1, 1, 2, 1, 1])
    >>> p.degree
    4
    >>> print(p + QPoly([0, 1]))
    1 + 2q + 2q^2 + q^3 + q^4
    >>> print(QPoly([1, 1]).shift(2))
    q^2 + q^3
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "QPoly":
        return cls(())

    @classmethod
    def one(cls) -> "QPoly":
        return cls((1,))

    @property
    def degree(self) -> int | float:
        """Degree of the polynomial; ``-inf`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, i: int) -> int:
        """Coefficient of ``q**i`` (zero outside the stored range)."""
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QPoly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "QPoly") -> "QPoly":
        return QPoly(
            x + y
            for x, y in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __sub__(self, other: "QPoly") -> "QPoly":
        return QPoly(
            x - y
            for x, y in itertools.zip_longest(self.coeffs, other.coeffs, fillvalue=0)
        )

    def __neg__(self) -> "QPoly":
        return QPoly(-c for c in self.coeffs)

    def __mul__(self, other: "QPoly | int") -> "QPoly":
        if isinstance(other, int):
            return QPoly(c * other for c in self.coeffs)
        if not isinstance(other, QPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for j, d in enumerate(other.coeffs):
                out[i + j] += c * d
        return QPoly(out)

    __rmul__ = __mul__

    def shift(self, s: int) -> "QPoly":
        """Multiply by ``q**s`` (``s`` must be nonnegative)."""
        if s < 0:
            raise ValueError(f"shift amount must be nonnegative, got {s}")
        if not self.coeffs:
            return QPoly()
        return QPoly((0,) * s + self.coeffs)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if i == 0 else ("q" if i == 1 else f"q^{i}")
            mag = abs(c)
            body = str(mag) if (mag != 1 or i == 0) else ""
            if not parts:
                sign = "-" if c < 0 else ""
            else:
                sign = " - " if c < 0 else " + "
            parts.append(f"{sign}{body}{mono}")
        return "".join(parts)

    def __repr__(self) -> str:
        return f"QPoly({list(self.coeffs)!r})"

    def to_json_obj(self) -> dict:
        """JSON form: coefficients as decimal strings, ascending power."""
        return {"coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "QPoly":
        return cls(int(c) for c in obj["coeffs"])


_GAUSS_CACHE: dict[tuple[int, int], QPoly] = {}


def gauss(a: int, b: int) -> QPoly:
    """Gaussian coefficient ``[a over b]`` as a polynomial in ``q``.

    Requires ``0 <= b <= a``.  The result has nonnegative coefficients and
    degree ``b * (a - b)``; coefficient ``m`` counts partitions of ``m``
    with at most ``b`` parts, each at most ``a - b``.

    >>> print(gauss(4, 2))
    1 + q + 2q^2 + q^3 + q^4
    >>> print(gauss(5, 0))
    1
    """
    if a < 0 or b < 0:
        raise ValueError(f"gauss({a},{b}): arguments must be nonnegative")
    if b > a:
        raise ValueError(f"gauss({a},{b}): lower index exceeds upper index")
    cached = _GAUSS_CACHE.get((a, b))
    if cached is not None:
        return cached
    one = QPoly.one()
    # Bottom-up q-Pascal sweep; row ap holds gauss(ap, j) for j <= min(ap, b).
    row = [one]
    for ap in range(1, a + 1):
        new = [one]
        for j in range(1, min(ap, b) + 1):
            if j == ap:
                new.append(one)
            else:
                new.append(row[j - 1] + row[j].shift(j))
        row = new
    result = row[b]
    _GAUSS_CACHE[(a, b)] = result
    return result


def first_negative_index(p: QPoly) -> int | None:
    """Index of the first negative coefficient, or None if all nonnegative."""
    for i, c in enumerate(p.coeffs):
        if c < 0:
            return i
    return None


def _require_nonnegative(p: QPoly) -> None:
    i = first_negative_index(p)
    if i is not None:
        raise NonnegativityViolation(i, p.coeffs[i])


def is_symmetric(p: QPoly) -> bool:
    """True iff coefficient ``i`` equals coefficient ``degree - i`` for all i.

    The zero polynomial counts as symmetric.
    """
    cs = p.coeffs
    n = len(cs)
    return all(cs[i] == cs[n - 1 - i] for i in range(n // 2))


def unimodality_break(p: QPoly) -> int | None:
    """First index at which the rise-then-fall pattern fails, else None.

    Coefficients must be nonnegative; a negative coefficient raises
    :class:`NonnegativityViolation` with the offending index.
    """
    _require_nonnegative(p)
    cs = p.coeffs
    i = 0
    while i + 1 < len(cs) and cs[i] <= cs[i + 1]:
        i += 1
    while i + 1 < len(cs) and cs[i] >= cs[i + 1]:
        i += 1
    return None if i + 1 >= len(cs) else i + 1


def is_unimodal(p: QPoly) -> bool:
    """True iff the coefficients rise weakly to a peak and then fall weakly."""
    return unimodality_break(p) is None


def strictness_break(p: QPoly) -> int | None:
    """First index breaking strict unimodality away from the ends, else None.

    Requires degree >= 4 and nonnegative coefficients.  Equality is
    tolerated only between coefficients 0 and 1, between the last two
    coefficients, and once at the apex (two adjacent equal maxima, the
    unavoidable central pair of a symmetric polynomial of odd degree).
    Every other step of the interior must be strictly monotone.
    """
    _require_nonnegative(p)
    cs = p.coeffs
    d = len(cs) - 1
    if d < 4:
        raise ValueError(f"degree must be at least 4, got {p.degree}")
    if cs[0] > cs[1]:
        return 1
    if cs[d - 1] < cs[d]:
        return d
    # Interior cs[1..d-1]: strict rise, at most one apex equality, strict fall.
    i = 1
    while i + 1 <= d - 1 and cs[i] < cs[i + 1]:
        i += 1
    if i + 1 <= d - 1 and cs[i] == cs[i + 1]:
        i += 1
    while i + 1 <= d - 1 and cs[i] > cs[i + 1]:
        i += 1
    return None if i == d - 1 else i + 1


def is_strictly_unimodal_except_ends(p: QPoly) -> bool:
    """True iff the interior is strictly unimodal, ends and apex pair aside."""
    return strictness_break(p) is None
