"""Independent brute-force oracles used across the test suite.

Everything in here is deliberately naive: no shared code paths with the
package, so a bug in ghilb cannot hide behind the same bug here.
"""

from fractions import Fraction
from itertools import product


def det_fraction(rows):
    """Determinant by plain Gaussian elimination over Fraction."""
    n = len(rows)
    a = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            f = a[i][k] * inv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det


def rank_fraction(rows):
    if not rows:
        return 0
    a = [[Fraction(x) for x in r] for r in rows]
    m, n = len(a), len(a[0])
    rank = 0
    for col in range(n):
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = 1 / a[rank][col]
        for i in range(m):
            if i != rank and a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[rank])]
        rank += 1
    return rank


def residues_zero(rows, moduli, v):
    """Does A v == 0 componentwise mod the given moduli?"""
    return all(
        sum(a * x for a, x in zip(row, v)) % m == 0 for row, m in zip(rows, moduli)
    )


def subgroup_order(rows, moduli):
    """Order of the subgroup of prod Z/m_j generated by the columns of A."""
    k = len(rows)
    cols = list(zip(*rows)) if rows else []
    seen = {(0,) * k}
    frontier = [(0,) * k]
    while frontier:
        t = frontier.pop()
        for col in cols:
            nt = tuple((a + b) % m for a, b, m in zip(t, col, moduli))
            if nt not in seen:
                seen.add(nt)
                frontier.append(nt)
    return len(seen)


def box_vectors(n, bound):
    """All integer vectors in [-bound, bound]^n."""
    return product(range(-bound, bound + 1), repeat=n)


def solve_square(a, b):
    """Solve a square Fraction system; None when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k]), None)
        if piv is None:
            return None
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k]:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return tuple(m[i][n] for i in range(n))


def polytope_vertices(rows, box):
    """All vertices of {x : rows hold, box bounds hold} by brute force.

    rows are (coeffs, rel, rhs) with rel in {'>=', '<=', '=='}; box is a list
    of (lo, up) with both sides finite, so the region is bounded and any
    nonempty region has a vertex.
    """
    from itertools import combinations

    n = len(box)
    hyps = [(tuple(c), Fraction(r)) for c, _, r in rows]
    for j, (lo, up) in enumerate(box):
        e = tuple(Fraction(1 if i == j else 0) for i in range(n))
        hyps.append((e, Fraction(lo)))
        hyps.append((e, Fraction(up)))

    def feasible(x):
        for coeffs, rel, rhs in rows:
            lhs = sum(c * v for c, v in zip(coeffs, x))
            if rel == ">=" and lhs < rhs:
                return False
            if rel == "<=" and lhs > rhs:
                return False
            if rel == "==" and lhs != rhs:
                return False
        return all(lo <= v <= up for v, (lo, up) in zip(x, box))

    found = set()
    for combo in combinations(range(len(hyps)), n):
        a = [hyps[i][0] for i in combo]
        b = [hyps[i][1] for i in combo]
        x = solve_square(a, b)
        if x is not None and feasible(x):
            found.add(x)
    return sorted(found)
