"""Exact integer linear algebra on small dense matrices.

Everything here works on tuples of int tuples (rows) and returns the same.
No floats anywhere; the few rational computations use fractions.Fraction.
These routines back the lattice side of the package: kernels of character
maps, Hermite/Smith forms, lattice membership and indices.
"""

from fractions import Fraction
from math import gcd, lcm


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(rows):
    return tuple(zip(*rows)) if rows else ()


def mat_mul(a, b):
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a, v):
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def vec_scale(c, v):
    return tuple(c * x for x in v)


def is_zero(v):
    return all(x == 0 for x in v)


def _row_sub(a, i, k, q):
    """a[i] -= q * a[k], in place on a list of lists."""
    if q:
        ak = a[k]
        a[i] = [x - q * y for x, y in zip(a[i], ak)]


def hermite_normal_form(rows):
    """Row-style Hermite normal form with transformation matrix.

    Returns (H, U) with U * A = H, U unimodular.  H is in row echelon form,
    pivots positive, and every entry above a pivot lies in [0, pivot).
    Zero rows of H are collected at the bottom.

    >>> H, U = hermite_normal_form(((2, 4), (1, 3)))
    >>> H
    ((1, 1), (0, 2))
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [list(r) for r in identity(m)]
    pivot_row = 0
    for col in range(n):
        if pivot_row == m:
            break
        while True:
            nz = [i for i in range(pivot_row, m) if a[i][col]]
            if len(nz) <= 1:
                break
            i0 = min(nz, key=lambda i: abs(a[i][col]))
            for i in nz:
                if i != i0:
                    q = a[i][col] // a[i0][col]
                    _row_sub(a, i, i0, q)
                    _row_sub(u, i, i0, q)
        if not nz:
            continue
        i0 = nz[0]
        if i0 != pivot_row:
            a[pivot_row], a[i0] = a[i0], a[pivot_row]
            u[pivot_row], u[i0] = u[i0], u[pivot_row]
        if a[pivot_row][col] < 0:
            a[pivot_row] = [-x for x in a[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        for i in range(pivot_row):
            q = a[i][col] // a[pivot_row][col]
            _row_sub(a, i, pivot_row, q)
            _row_sub(u, i, pivot_row, q)
        pivot_row += 1
    return tuple(map(tuple, a)), tuple(map(tuple, u))


def hermite_basis(vectors):
    """Canonical basis (nonzero HNF rows) of the lattice the vectors generate."""
    if not vectors:
        return ()
    h, _ = hermite_normal_form(tuple(vectors))
    return tuple(row for row in h if not is_zero(row))


def determinant(rows):
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    assert all(len(r) == n for r in rows), "determinant needs a square matrix"
    a = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[-1][-1]


def integer_kernel(rows):
    """Basis of {x in Z^n : A x = 0}, as rows.  The kernel lattice is saturated.

    Works by HNF of the transpose: with U * A^T = H, the rows of U that hit
    zero rows of H are exactly a basis of the kernel.
    """
    t = transpose(rows)
    if not t:
        # A has no columns; kernel of Z^0 is trivial
        return ()
    h, u = hermite_normal_form(t)
    ker = tuple(u[i] for i in range(len(h)) if is_zero(h[i]))
    return hermite_basis(ker)


def kernel_mod(rows, moduli, n=None):
    """Basis of {x in Z^n : A x = 0 componentwise mod the given moduli}.

    rows is k x n, moduli has length k with every modulus >= 1.  Found as the
    projection to the first n coordinates of the integer kernel of [A | diag(m)].
    With no rows (trivial group) the kernel is all of Z^n, so n must be given.
    """
    k = len(rows)
    assert len(moduli) == k and all(m >= 1 for m in moduli)
    if k == 0:
        if n is None:
            raise ValueError("kernel_mod with no congruences needs n")
        return identity(n)
    n = len(rows[0])
    ext = tuple(
        tuple(rows[i]) + tuple(moduli[i] if j == i else 0 for j in range(k))
        for i in range(k)
    )
    ker = integer_kernel(ext)
    return hermite_basis(tuple(v[:n] for v in ker))


def lattice_index(basis, n):
    """Index [Z^n : L] of the lattice generated by the given vectors.

    Raises ValueError when the lattice has rank < n (infinite index).
    """
    h = hermite_basis(basis)
    if len(h) < n or any(len(v) != n for v in h):
        raise ValueError("lattice does not have full rank %d" % n)
    idx = 1
    for i in range(n):
        idx *= h[i][i]
    return idx


def _pivots(h):
    cols = []
    for row in h:
        for j, x in enumerate(row):
            if x:
                cols.append(j)
                break
    return cols


def solve_integer(basis, target):
    """Integer coefficients c with sum c_i * basis_i = target, or None.

    basis is a sequence of k vectors; the result has length k.
    """
    basis = tuple(tuple(v) for v in basis)
    if not basis:
        return () if is_zero(target) else None
    h, u = hermite_normal_form(basis)
    piv = _pivots(h)
    resid = list(target)
    y = [0] * len(basis)
    for t, j in enumerate(piv):
        q, r = divmod(resid[j], h[t][j])
        if r:
            return None
        y[t] = q
        if q:
            resid = [x - q * hx for x, hx in zip(resid, h[t])]
    if not is_zero(resid):
        return None
    c = tuple(sum(y[t] * u[t][i] for t in range(len(basis))) for i in range(len(basis)))
    assert mat_vec(transpose(basis), c) == tuple(target)
    return c


def lattice_contains(basis, v):
    return solve_integer(basis, v) is not None


def axis_order(basis, i):
    """Smallest k >= 1 with k * e_i in the lattice generated by basis.

    Raises ValueError when no multiple of e_i lies in the lattice.
    """
    h = hermite_basis(basis)
    if not h:
        raise ValueError("axis %d meets the zero lattice only at 0" % i)
    n = len(h[0])
    piv = _pivots(h)
    resid = [Fraction(0)] * n
    resid[i] = Fraction(1)
    y = []
    for t, j in enumerate(piv):
        q = resid[j] / h[t][j]
        y.append(q)
        if q:
            resid = [x - q * hx for x, hx in zip(resid, h[t])]
    if any(resid):
        raise ValueError("axis %d is not in the span of the lattice" % i)
    k = lcm(*[f.denominator for f in y]) if y else 1
    return k


def smith_normal_form(rows):
    """Smith normal form with transformations: returns (D, U, V), U * A * V = D.

    D is diagonal with d_1 | d_2 | ... and nonnegative entries.
    """
    a = [list(r) for r in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    u = [list(r) for r in identity(m)]
    v = [list(r) for r in identity(n)]

    def col_sub(j, k, q):
        if q:
            for row in a:
                row[j] -= q * row[k]
            for row in v:
                row[j] -= q * row[k]

    def col_swap(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(m, n):
        # find a nonzero pivot in the remaining block
        found = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j]:
                    found = (i, j)
                    break
            if found:
                break
        if not found:
            break
        i, j = found
        if i != t:
            a[t], a[i] = a[i], a[t]
            u[t], u[i] = u[i], u[t]
        if j != t:
            col_swap(t, j)
        while True:
            # clear column t
            for i in range(t + 1, m):
                while a[i][t]:
                    q = a[i][t] // a[t][t]
                    _row_sub(a, i, t, q)
                    _row_sub(u, i, t, q)
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        u[t], u[i] = u[i], u[t]
            # clear row t
            for j in range(t + 1, n):
                while a[t][j]:
                    q = a[t][j] // a[t][t]
                    col_sub(j, t, q)
                    if a[t][j]:
                        col_swap(t, j)
            if all(a[i][t] == 0 for i in range(t + 1, m)):
                break
        # divisibility: a[t][t] must divide everything below and to the right
        redo = False
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    _row_sub(a, t, i, -1)
                    _row_sub(u, t, i, -1)
                    redo = True
                    break
            if redo:
                break
        if redo:
            continue
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return tuple(map(tuple, a)), tuple(map(tuple, u)), tuple(map(tuple, v))


def invariant_factors(rows):
    """Nontrivial diagonal entries of the Smith form (the d_i > 1)."""
    d, _, _ = smith_normal_form(rows)
    out = []
    for t in range(min(len(d), len(d[0]) if d else 0)):
        if d[t][t] not in (0, 1):
            out.append(d[t][t])
    return tuple(out)


def primitive(v):
    """Divide a nonzero integer vector by the gcd of its entries, keep direction."""
    g = 0
    for x in v:
        g = gcd(g, x)
    assert g > 0, "primitive() needs a nonzero vector"
    return tuple(x // g for x in v)
