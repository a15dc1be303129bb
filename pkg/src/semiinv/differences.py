"""Symmetric differences of Gaussian coefficients and their grid scanners.

Five families are built here, all exactly, as differences of one Gaussian
coefficient and a power-of-q shift of another:

* ``F(n, k)``:  gauss(n+k, k) - q^n * gauss(n+k-2, k-2)
* ``G(n, k, r)``:  gauss(n+k, k) - q^(n*r/2) * gauss(n+k-r, k-r)
* ``strange(n, k, r)``:  gauss(n-1, k) - q^(n-2rk+1+4(r-1)) * gauss(n-1+4(r-1), k-2)
* ``stanley_zanello(k, m, b)``:  gauss(m, k) - q^(k(m-b)/2+b-2k+2) * gauss(b, k-2)
* ``bergeron(a, b, c, d)``:  gauss(b+c, b) - gauss(a+d, d)  (a minimal, ad == bc)

Coefficient ``m`` of ``F`` equals ``p(k,n,m) - p(k-2,n,m-n)`` and likewise
for ``G`` with ``r`` in place of 2, which ties these polynomials to
semi-invariant dimension differences and is what the verifiers exploit.

Verifiers ASSERT proved facts (a failure aborts with a witness index and
would mean a bug in this package, not new mathematics).  Scanners only
REPORT findings for the open conjecture families; nonnegativity and
unimodality failures are recorded with the first offending index, never
raised.  Grid iteration is row-major and deterministic, and parallel runs
buffer results back into grid order.
"""

from __future__ import annotations

import csv
import hashlib
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable, Sequence

from .boxpartitions import delta
from .qpoly import (
    QPoly,
    first_negative_index,
    gauss,
    is_symmetric,
    strictness_break,
    unimodality_break,
)

FAMILIES = ("F", "G", "strange", "stanley_zanello", "bergeron")


class VerificationError(RuntimeError):
    """A proved property failed to verify; carries the witnessing cell."""

    def __init__(self, message: str, family: str, params: dict, witness: int | None):
        super().__init__(message)
        self.family = family
        self.params = params
        self.witness = witness


def coefficients_digest(p: QPoly) -> str:
    data = ",".join(str(c) for c in p.coeffs).encode()
    return "sha256:" + hashlib.sha256(data).hexdigest()


@dataclass(frozen=True)
class ScanReport:
    """Outcome of the checks run on one parameter tuple.

    ``witness`` is the first offending coefficient index and is present
    exactly when some check failed.
    """

    family: str
    params: dict
    checks: dict
    witness: int | None
    coefficients_digest: str

    def __post_init__(self):
        failed = any(not ok for ok in self.checks.values())
        if failed and self.witness is None:
            raise ValueError("failed checks require a witness index")
        if not failed and self.witness is not None:
            raise ValueError("witness given although every check passed")

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "checks": self.checks,
            "witness": self.witness,
            "coefficients_digest": self.coefficients_digest,
        }


# ---------------------------------------------------------------------------
# family constructors


def F(n: int, k: int) -> QPoly:
    """Two-step difference family; symmetric of degree ``n*k``."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return gauss(n + k, k) - gauss(n + k - 2, k - 2).shift(n)


def G(n: int, k: int, r: int) -> QPoly:
    """r-step difference family; requires ``k >= r >= 1`` and ``n*r`` even."""
    if not 1 <= r <= k:
        raise ValueError(f"need k >= r >= 1, got k={k}, r={r}")
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if (n * r) % 2:
        raise ValueError(f"n*r must be even, got n={n}, r={r}")
    return gauss(n + k, k) - gauss(n + k - r, k - r).shift(n * r // 2)


def strange(n: int, k: int, r: int) -> QPoly:
    """Odd-n difference family with the shifted, widened second term.

    Not asserted nonnegative: whether these are nonnegative and unimodal is
    open, so scanners only record what they find.
    """
    if n % 2 == 0:
        raise ValueError(f"need n odd, got {n}")
    if k < 2 or r < 1:
        raise ValueError(f"need k >= 2 and r >= 1, got k={k}, r={r}")
    shift = n - 2 * r * k + 1 + 4 * (r - 1)
    if shift < 0:
        raise ValueError(
            f"parameters outside the stated range: n={n} < {2 * r * k - 4 * r + 3}"
        )
    return gauss(n - 1, k) - gauss(n - 1 + 4 * (r - 1), k - 2).shift(shift)


def stanley_zanello(k: int, m: int, b: int) -> QPoly:
    """Generalized difference family ``gauss(m,k) - q^e * gauss(b,k-2)``.

    The exponent ``e = k(m-b)/2 + b - 2k + 2`` must be a nonnegative
    integer.  With ``b = m - 2`` this reduces exactly to ``F(m-k, k)``.
    """
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    if b > m:
        raise ValueError(f"need b <= m, got b={b}, m={m}")
    num = k * (m - b)
    if num % 2:
        raise ValueError(f"k*(m-b) = {num} is odd; exponent not an integer")
    e = num // 2 + b - 2 * k + 2
    if e < 0:
        raise ValueError(f"exponent {e} is negative")
    return gauss(m, k) - gauss(b, k - 2).shift(e)


def bergeron(a: int, b: int, c: int, d: int) -> QPoly:
    """Difference ``gauss(b+c, b) - gauss(a+d, d)`` with a minimal, ad == bc."""
    if min(a, b, c, d) < 1:
        raise ValueError("all four parameters must be positive")
    if a != min(a, b, c, d):
        raise ValueError(f"a={a} is not the smallest of {(a, b, c, d)}")
    if a * d != b * c:
        raise ValueError(f"need a*d == b*c, got {a * d} != {b * c}")
    return gauss(b + c, b) - gauss(a + d, d)


# ---------------------------------------------------------------------------
# report helpers


def _finding_report(
    family: str, params: dict, poly: QPoly, with_strict: bool
) -> ScanReport:
    """Nonnegativity, then unimodality, then (optionally) strictness.

    Later checks are omitted when an earlier one fails, since they are not
    defined on the failing input.
    """
    checks: dict = {}
    witness = None
    neg = first_negative_index(poly)
    checks["nonnegative"] = neg is None
    if neg is not None:
        witness = neg
    else:
        brk = unimodality_break(poly)
        checks["unimodal"] = brk is None
        if brk is not None:
            witness = brk
        elif with_strict:
            sbrk = strictness_break(poly)
            checks["strict_except_ends"] = sbrk is None
            if sbrk is not None:
                witness = sbrk
    return ScanReport(family, params, checks, witness, coefficients_digest(poly))


def _symmetry_witness(p: QPoly) -> int | None:
    cs = p.coeffs
    for i in range(len(cs) // 2):
        if cs[i] != cs[len(cs) - 1 - i]:
            return i
    return None


# ---------------------------------------------------------------------------
# verifiers (proved statements; failures abort)


def verify_theorem_F(n_max: int, k_max: int) -> list[ScanReport]:
    """Symmetry, unimodality, and the dimension identity for the F family.

    Covers every even ``n <= n_max`` and ``2 <= k <= k_max``.  Besides the
    two shape checks, the coefficient deltas are matched against the
    partition-count differences ``delta(k,n,m) - delta(k-2,n,m-n)`` for
    ``m <= n*k/2``, tying the polynomial arithmetic to the independent
    counting route.
    """
    reports = []
    for n in range(2, n_max + 1, 2):
        for k in range(2, k_max + 1):
            poly = F(n, k)
            params = {"n": n, "k": k}
            w = _symmetry_witness(poly)
            if w is not None:
                raise VerificationError(
                    f"F({n},{k}) is not symmetric at index {w}", "F", params, w
                )
            w = unimodality_break(poly)
            if w is not None:
                raise VerificationError(
                    f"F({n},{k}) is not unimodal at index {w}", "F", params, w
                )
            for m in range(0, n * k // 2 + 1):
                lhs = poly.coefficient(m) - poly.coefficient(m - 1)
                rhs = delta(k, n, m) - delta(k - 2, n, m - n)
                if lhs != rhs:
                    raise VerificationError(
                        f"F({n},{k}) coefficient delta at m={m}: {lhs} != {rhs}",
                        "F",
                        params,
                        m,
                    )
            reports.append(
                ScanReport(
                    "F",
                    params,
                    {"symmetric": True, "unimodal": True, "delta_identity": True},
                    None,
                    coefficients_digest(poly),
                )
            )
    return reports


def verify_theorem_G(n_max: int, k_max: int, r_max: int) -> list[ScanReport]:
    """Symmetry and strict unimodality (except the end pairs) for G.

    Covers ``8 <= n <= n_max``, ``8 <= r <= r_max`` with ``n*r`` even, and
    ``r <= k <= k_max``.
    """
    reports = []
    for n in range(8, n_max + 1):
        for r in range(8, r_max + 1):
            if (n * r) % 2:
                continue
            for k in range(r, k_max + 1):
                poly = G(n, k, r)
                params = {"n": n, "k": k, "r": r}
                w = _symmetry_witness(poly)
                if w is not None:
                    raise VerificationError(
                        f"G({n},{k},{r}) is not symmetric at index {w}",
                        "G",
                        params,
                        w,
                    )
                w = strictness_break(poly)
                if w is not None:
                    raise VerificationError(
                        f"G({n},{k},{r}) strictness fails at index {w}",
                        "G",
                        params,
                        w,
                    )
                reports.append(
                    ScanReport(
                        "G",
                        params,
                        {"symmetric": True, "strict_except_ends": True},
                        None,
                        coefficients_digest(poly),
                    )
                )
    return reports


# ---------------------------------------------------------------------------
# scanners (open questions; findings only)


def _f_strict_cell(params: tuple[int, int]) -> ScanReport:
    n, k = params
    return _finding_report("F", {"n": n, "k": k}, F(n, k), with_strict=True)


def _strange_cell(params: tuple[int, int, int]) -> ScanReport:
    n, k, r = params
    return _finding_report(
        "strange", {"n": n, "k": k, "r": r}, strange(n, k, r), with_strict=False
    )


def _bergeron_cell(params: tuple[int, int, int, int]) -> ScanReport:
    a, b, c, d = params
    return _finding_report(
        "bergeron",
        {"a": a, "b": b, "c": c, "d": d},
        bergeron(a, b, c, d),
        with_strict=False,
    )


def _run_cells(
    fn: Callable[[tuple], ScanReport], cells: list[tuple], jobs: int
) -> list[ScanReport]:
    if jobs <= 1 or len(cells) <= 1:
        return [fn(c) for c in cells]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, cells, chunksize=max(1, len(cells) // (4 * jobs))))


def scan_conjecture_F_strict(
    n_max: int, k_max: int, include_below_range: bool = False, jobs: int = 1
) -> list[ScanReport]:
    """Record strict-unimodality findings for F; asserts nothing.

    The conjectured range is ``n >= 8``, ``k >= 15``.  With
    ``include_below_range`` the grid extends down to ``n >= 1``, ``k >= 2``
    (cells of degree < 4 are skipped since the strict check is undefined
    there), which is how the known strictness failures below the range are
    surfaced.
    """
    n_lo, k_lo = (1, 2) if include_below_range else (8, 15)
    cells = [
        (n, k)
        for n in range(n_lo, n_max + 1)
        for k in range(k_lo, k_max + 1)
        if n * k >= 4
    ]
    return _run_cells(_f_strict_cell, cells, jobs)


def scan_strange(
    n_max: int, k_max: int, r_max: int, jobs: int = 1
) -> list[ScanReport]:
    """Nonnegativity and unimodality findings for the strange family."""
    cells = [
        (n, k, r)
        for n in range(3, n_max + 1, 2)
        for k in range(2, k_max + 1)
        for r in range(1, r_max + 1)
        if n >= 2 * r * k - 4 * r + 3
    ]
    return _run_cells(_strange_cell, cells, jobs)


def scan_bergeron(bound: int, jobs: int = 1) -> list[ScanReport]:
    """Findings for every valid (a, b, c, d) with all entries <= bound."""
    cells = [
        (a, b, c, d)
        for a in range(1, bound + 1)
        for b in range(a, bound + 1)
        for c in range(a, bound + 1)
        for d in range(a, bound + 1)
        if a * d == b * c
    ]
    return _run_cells(_bergeron_cell, cells, jobs)


# ---------------------------------------------------------------------------
# serialization


def write_jsonl(reports: Iterable[ScanReport], path: str | Path) -> None:
    with Path(path).open("w", encoding="utf-8") as fh:
        for rep in reports:
            fh.write(json.dumps(rep.to_json_obj(), separators=(",", ":")) + "\n")


def write_csv(reports: Sequence[ScanReport], path: str | Path) -> None:
    """One row per (tuple, check): family, params..., check, pass, witness_index."""
    param_names: list[str] = []
    for rep in reports:
        for name in rep.params:
            if name not in param_names:
                param_names.append(name)
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["family", *param_names, "check", "pass", "witness_index"])
        for rep in reports:
            base = [rep.family] + [rep.params.get(p, "") for p in param_names]
            for check, ok in rep.checks.items():
                witness = "" if ok or rep.witness is None else rep.witness
                writer.writerow(base + [check, str(ok).lower(), witness])
