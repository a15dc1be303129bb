"""The lowering operator on binary-form coefficients and its exact kernel.

For a form of degree ``n`` the operator is

    D = a_0 d/da_1 + 2 a_1 d/da_2 + ... + n a_{n-1} d/da_n.

On a monomial ``a^nu`` it acts as ``sum_i i*nu_i * a^(nu + e_{i-1} - e_i)``,
so it preserves degree and lowers weight by one: it maps the stratum of
degree ``k``, weight ``m`` into the stratum of degree ``k``, weight ``m-1``.
A polynomial is a semi-invariant (invariant under the unipotent shear of
the underlying form, checked directly by :func:`shear_check`) exactly when
``D`` annihilates it, so semi-invariant bases are nullspaces of the sparse
integer matrices built here.

The nullspace computation is exact and fraction-free: rows are eliminated
over the integers by cross-multiplication, each updated row is divided by
the gcd of its entries, and kernel vectors are recovered by rational back
substitution and scaled to coprime integer coordinates with a positive
leading coefficient.  Pivoting follows the fixed anti-lexicographic column
order with first-nonzero row selection, so bases are reproducible
bit-for-bit across runs.

For weights up to half the maximum, the computed nullity must equal the
partition-count difference ``delta(k, n, m)``; every kernel computation
asserts this, so a mismatch signals an implementation bug rather than a
mathematical possibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd
from typing import Sequence

from .boxpartitions import delta, enumerate_partitions_in_box
from .monomials import Coeff, SIPoly


class SylvesterMismatchError(RuntimeError):
    """Computed nullity disagrees with the partition-count dimension."""


def basis_exponents(n: int, k: int, m: int) -> list[tuple[int, ...]]:
    """Monomial basis of the (degree k, weight m) stratum, anti-lex descending."""
    return [bp.nu for bp in enumerate_partitions_in_box(k, n, m)]


def apply_D(p: SIPoly) -> SIPoly:
    """Image of ``p`` under the lowering operator for its form degree."""
    integral = all(c.denominator == 1 for _, c in p.items())
    out: dict[tuple[int, ...], Fraction | int] = {}
    get = out.get
    for nu, c in p.items():
        if integral:
            c = c.numerator
        for i in range(1, p.n + 1):
            e = nu[i]
            if not e:
                continue
            mu = nu[: i - 1] + (nu[i - 1] + 1, e - 1) + nu[i + 1 :]
            out[mu] = get(mu, 0) + c * i * e
    return SIPoly(p.n, {mu: v for mu, v in out.items() if v})


@dataclass(frozen=True, eq=False)
class SparseIntMatrix:
    """Column-major sparse integer matrix.

    ``cols[j]`` maps row index to the nonzero entry in column ``j``.  Rows
    index the target stratum basis (weight ``m-1``), columns the source
    basis (weight ``m``), both in descending anti-lexicographic order.
    """

    nrows: int
    ncols: int
    cols: tuple[dict[int, int], ...]

    def entry(self, r: int, c: int) -> int:
        return self.cols[c].get(r, 0)

    def nnz(self) -> int:
        return sum(len(col) for col in self.cols)

    def column_abs_sum(self, c: int) -> int:
        return sum(abs(v) for v in self.cols[c].values())


def build_D_matrix(n: int, k: int, m: int) -> SparseIntMatrix:
    """Matrix of the lowering operator from weight ``m`` to weight ``m-1``.

    Requires ``1 <= m <= n*k``.  Column ``j`` holds the coordinates of the
    image of the j-th basis monomial; each column has at most ``n`` nonzero
    entries.
    """
    if not 1 <= m <= n * k:
        raise ValueError(f"weight {m} outside [1, {n * k}]")
    col_basis = basis_exponents(n, k, m)
    row_basis = basis_exponents(n, k, m - 1)
    row_index = {nu: i for i, nu in enumerate(row_basis)}
    cols = []
    for nu in col_basis:
        col: dict[int, int] = {}
        for i in range(1, n + 1):
            if nu[i]:
                mu = list(nu)
                mu[i] -= 1
                mu[i - 1] += 1
                col[row_index[tuple(mu)]] = i * nu[i]
        cols.append(col)
    return SparseIntMatrix(len(row_basis), len(col_basis), tuple(cols))


def _content_normalize(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _echelon(mat: SparseIntMatrix) -> tuple[list[tuple[int, dict[int, int]]], list[int]]:
    """Integer row echelon form.

    Returns ``(pivots, free_cols)`` where ``pivots`` is a list of
    ``(pivot_column, row)`` in ascending pivot-column order.  Rows are
    sparse dicts over column indices; entries stay integral throughout and
    every update is gcd-normalized to keep growth down.
    """
    rows: list[dict[int, int]] = [{} for _ in range(mat.nrows)]
    for c, col in enumerate(mat.cols):
        for r, v in col.items():
            rows[r][c] = v
    # column -> set of candidate row indices currently nonzero there
    incidence: list[set[int]] = [set() for _ in range(mat.ncols)]
    for r, row in enumerate(rows):
        for c in row:
            incidence[c].add(r)
    used = [False] * mat.nrows
    pivots: list[tuple[int, dict[int, int]]] = []
    free_cols: list[int] = []
    for c in range(mat.ncols):
        cand = sorted(r for r in incidence[c] if not used[r] and c in rows[r])
        if not cand:
            free_cols.append(c)
            continue
        piv = cand[0]
        used[piv] = True
        prow = rows[piv]
        pivots.append((c, prow))
        a = prow[c]
        for r in cand[1:]:
            row = rows[r]
            b = row[c]
            g = gcd(a, b)
            fa, fb = a // g, b // g
            new = {cc: fa * v for cc, v in row.items()}
            for cc, v in prow.items():
                w = new.get(cc, 0) - fb * v
                if w:
                    new[cc] = w
                else:
                    new.pop(cc, None)
            new = _content_normalize(new)
            for cc in row:
                if cc not in new:
                    incidence[cc].discard(r)
            for cc in new:
                incidence[cc].add(r)
            rows[r] = new
    return pivots, free_cols


def _back_substitute(
    pivots: list[tuple[int, dict[int, int]]], free_col: int
) -> dict[int, Fraction]:
    """Kernel vector with coordinate 1 at ``free_col``, 0 at other free columns."""
    x: dict[int, Fraction] = {free_col: Fraction(1)}
    for c, row in reversed(pivots):
        s = Fraction(0)
        for cc, v in row.items():
            if cc == c:
                continue
            xv = x.get(cc)
            if xv is not None:
                s += v * xv
        if s:
            x[c] = -s / row[c]
    return x


@dataclass(frozen=True, eq=False)
class KernelBasis:
    """Exact basis of the semi-invariants of degree ``k`` and weight ``m``."""

    n: int
    k: int
    m: int
    vectors: tuple[SIPoly, ...] = field(default=())

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def verify(self) -> bool:
        """Re-check that every vector is nonzero and annihilated by D."""
        return all(not v.is_zero() and apply_D(v).is_zero() for v in self.vectors)

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "m": self.m,
            "dim": self.dim,
            "vectors": [v.to_json_list() for v in self.vectors],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "KernelBasis":
        n = int(obj["n"])
        vectors = tuple(SIPoly.from_json_list(n, vec) for vec in obj["vectors"])
        kb = cls(n=n, k=int(obj["k"]), m=int(obj["m"]), vectors=vectors)
        if kb.dim != int(obj["dim"]):
            raise ValueError("vector count disagrees with recorded dimension")
        return kb


def kernel_basis(n: int, k: int, m: int) -> KernelBasis:
    """Exact nullspace basis of the lowering operator on the (k, m) stratum.

    Vectors are primitive (coprime integer coordinates, positive leading
    coefficient) and ordered by their defining free column.  For
    ``m <= n*k/2`` the basis size is asserted to equal ``delta(k, n, m)``.
    """
    if n < 0 or k < 0:
        raise ValueError(f"parameters must be nonnegative, got n={n}, k={k}")
    if not 0 <= m <= n * k:
        raise ValueError(f"weight {m} outside [0, {n * k}]")
    if m == 0:
        nu = (k,) + (0,) * n
        return KernelBasis(n, k, m, (SIPoly.term(n, nu, 1),))
    mat = build_D_matrix(n, k, m)
    pivots, free_cols = _echelon(mat)
    col_basis = basis_exponents(n, k, m)
    vectors = []
    for f in free_cols:
        x = _back_substitute(pivots, f)
        poly = SIPoly(n, {col_basis[c]: v for c, v in x.items() if v}).primitive()
        vectors.append(poly)
    kb = KernelBasis(n, k, m, tuple(vectors))
    if 2 * m <= n * k:
        expected = delta(k, n, m)
        if kb.dim != expected:
            raise SylvesterMismatchError(
                f"nullity {kb.dim} != delta(k={k}, n={n}, m={m}) = {expected}; "
                "this indicates a bug in the elimination"
            )
    return kb


def semiinvariant_dim(n: int, k: int, m: int) -> int:
    """Nullity of the lowering operator on the (k, m) stratum.

    Computed by exact elimination alone; no partition counting is involved,
    so comparing this value with ``delta(k, n, m)`` is a genuine two-route
    check.
    """
    if n < 0 or k < 0:
        raise ValueError(f"parameters must be nonnegative, got n={n}, k={k}")
    if not 0 <= m <= n * k:
        raise ValueError(f"weight {m} outside [0, {n * k}]")
    if m == 0:
        return 1
    _, free_cols = _echelon(build_D_matrix(n, k, m))
    return len(free_cols)


def shear_coefficients(a: Sequence[Coeff], h: Coeff) -> list[Fraction]:
    """Coefficients of the form after the shear ``x -> x + h*y``.

    ``a_i' = sum_j C(i, j) * a_{i-j} * h**j``.
    """
    vals = [Fraction(v) for v in a]
    hh = Fraction(h)
    out = []
    for i in range(len(vals)):
        s = Fraction(0)
        for j in range(i + 1):
            s += comb(i, j) * vals[i - j] * hh**j
        out.append(s)
    return out


def shear_check(p: SIPoly, h: Coeff, a: Sequence[Coeff]) -> bool:
    """Exact test that ``p`` takes equal values before and after a shear.

    This is an independent witness of semi-invariance that involves no
    linear algebra: it evaluates ``p`` at the original coefficient vector
    and at the sheared one and compares exactly.
    """
    if len(a) != p.n + 1:
        raise ValueError(f"expected {p.n + 1} coefficients, got {len(a)}")
    return p.evaluate(a) == p.evaluate(shear_coefficients(a, h))


def sylvester_grid_mismatches(
    n_max: int, k_max: int
) -> list[tuple[int, int, int, int, int]]:
    """Compare nullity and partition difference on the full desk-scale grid.

    Returns ``(n, k, m, delta, nullity)`` tuples for every disagreement on
    ``0 <= n <= n_max``, ``0 <= k <= k_max``, ``0 <= m <= n*k/2``; an empty
    list means the two computations agree everywhere.
    """
    bad = []
    for n in range(n_max + 1):
        for k in range(k_max + 1):
            for m in range(n * k // 2 + 1):
                d = delta(k, n, m)
                dim = semiinvariant_dim(n, k, m)
                if d != dim:
                    bad.append((n, k, m, d, dim))
    return bad
