"""Brute-force oracles shared by the tests.

These deliberately avoid the production code paths: partitions are grown
part by part as decreasing tuples, polynomials are expanded with plain
dicts, and ranks are computed by dense elimination over Fractions.
"""

from fractions import Fraction


def brute_partitions(k, n, m):
    """All partitions of m with at most k parts, each part <= n."""
    found = set()

    def grow(remaining, maxpart, parts):
        if remaining == 0:
            found.add(tuple(parts))
            return
        if len(parts) == k:
            return
        for part in range(min(maxpart, remaining), 0, -1):
            grow(remaining - part, part, parts + [part])

    if m == 0:
        return {()}
    if m < 0 or k <= 0 or n <= 0:
        return set()
    grow(m, n, [])
    return found


def brute_count(k, n, m):
    return len(brute_partitions(k, n, m))


def partition_to_nu(parts, k, n):
    """Multiplicity vector of a partition given as a tuple of parts."""
    nu = [0] * (n + 1)
    for part in parts:
        nu[part] += 1
    nu[0] = k - len(parts)
    return tuple(nu)


def brute_mul(terms1, terms2):
    """Expand a product of two {exponent-tuple: coeff} dicts."""
    out = {}
    for nu1, c1 in terms1.items():
        for nu2, c2 in terms2.items():
            nu = tuple(a + b for a, b in zip(nu1, nu2))
            out[nu] = out.get(nu, 0) + c1 * c2
    return {nu: c for nu, c in out.items() if c}


def dense_rank(vectors):
    """Rank of a family of SIPoly over the union of their monomials.

    Dense Gaussian elimination with Fractions; independent of the sparse
    integer elimination used by the package.
    """
    monomials = sorted({nu for v in vectors for nu, _ in v.items()})
    index = {nu: i for i, nu in enumerate(monomials)}
    rows = []
    for v in vectors:
        row = [Fraction(0)] * len(monomials)
        for nu, c in v.items():
            row[index[nu]] = Fraction(c)
        rows.append(row)
    rank = 0
    for col in range(len(monomials)):
        piv = None
        for r in range(rank, len(rows)):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col]:
                factor = rows[r][col] / lead
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[rank])]
        rank += 1
        if rank == len(rows):
            break
    return rank


# the explicit degree-4, weight-6 semi-invariants of a quartic form
I1_TERMS = {
    (0, 2, 2, 0, 0): 3,
    (0, 3, 0, 1, 0): -4,
    (1, 1, 1, 1, 0): -2,
    (2, 0, 0, 2, 0): 3,
    (1, 2, 0, 0, 1): 4,
    (2, 0, 1, 0, 1): -4,
}
I2_TERMS = {
    (1, 0, 3, 0, 0): 1,
    (1, 1, 1, 1, 0): -2,
    (2, 0, 0, 2, 0): 1,
    (1, 2, 0, 0, 1): 1,
    (2, 0, 1, 0, 1): -1,
}
