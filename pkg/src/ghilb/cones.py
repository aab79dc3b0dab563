"""Rational polyhedral cones, Hilbert bases, and semigroup membership.

All cones here are generated by finitely many integer vectors and are
required to be pointed (certified by an integer functional strictly positive
on every generator; the failure certificate is a nonnegative combination of
generators summing to zero).  The Hilbert basis routine works inside an
arbitrary finite-index sublattice: it returns the minimal generating set of
(lattice points of the cone), which is the saturation of whatever semigroup
the generators span.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import floor, gcd

from .intlin import (
    determinant,
    hermite_normal_form,
    identity,
    integer_kernel,
    primitive,
    smith_normal_form,
    solve_integer,
)
from .lp import EQ, GE, LinearProgram, integerize, lp_solve


class NotPointedError(ValueError):
    """The cone contains a line; combination is a verified nonnegative
    integer combination of the generators equal to zero."""

    def __init__(self, combination):
        self.combination = combination
        super().__init__("cone is not pointed")


class InvalidGradingError(ValueError):
    """No functional is strictly positive on all semigroup generators, so
    the descent used by membership search cannot terminate."""


def positive_functional(vectors):
    """Integer w with w . v >= 1 for every v, or NotPointedError."""
    vectors = [tuple(v) for v in vectors]
    n = len(vectors[0])
    lp = LinearProgram.of(
        objective=(0,) * n,
        constraints=[(v, GE, 1) for v in vectors],
        bounds=[(None, None)] * n,
    )
    out = lp_solve(lp)
    if out.status == "infeasible":
        comb = integerize(out.farkas.row_multipliers)
        assert all(c >= 0 for c in comb) and any(c > 0 for c in comb)
        zero = [
            sum(c * v[j] for c, v in zip(comb, vectors)) for j in range(n)
        ]
        assert all(z == 0 for z in zero)
        raise NotPointedError(comb)
    assert out.status == "optimal"
    w = out.x
    denom = 1
    for c in w:
        denom = denom * c.denominator // gcd(denom, c.denominator)
    w = tuple(int(c * denom) for c in w)
    assert all(sum(a * b for a, b in zip(w, v)) >= 1 for v in vectors)
    return w


def extreme_rays(vectors):
    """Primitive extreme rays of the pointed cone spanned by the vectors.

    A generator is kept exactly when it is not a nonnegative combination of
    the remaining ones; for a pointed cone the survivors are the unique
    minimal generating set of the cone.
    """
    prims = []
    for v in vectors:
        v = tuple(v)
        if any(v):
            p = primitive(v)
            if p not in prims:
                prims.append(p)
    if not prims:
        return ()
    positive_functional(prims)  # raises when a line hides in the cone
    n = len(prims[0])
    keep = []
    for i, v in enumerate(prims):
        others = [u for j, u in enumerate(prims) if j != i]
        if not others:
            keep.append(v)
            continue
        lp = LinearProgram.of(
            objective=(0,) * len(others),
            constraints=[
                (tuple(u[j] for u in others), EQ, v[j]) for j in range(n)
            ],
            bounds=[(0, None)] * len(others),
        )
        if lp_solve(lp).status == "infeasible":
            keep.append(v)
    return tuple(sorted(keep))


def _solve_fraction(rows, rhs):
    """One rational solution of rows^T-free system rows . y = rhs, where the
    rows are independent; free coordinates are set to zero."""
    m = len(rows)
    n = len(rows[0])
    a = [[Fraction(x) for x in row] + [Fraction(b)] for row, b in zip(rows, rhs)]
    piv_cols = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if a[i][col]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][col]
        a[r] = [x * inv for x in a[r]]
        for i in range(m):
            if i != r and a[i][col]:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        piv_cols.append(col)
        r += 1
        if r == m:
            break
    assert r == m, "system rows are dependent"
    y = [Fraction(0)] * n
    for i, col in enumerate(piv_cols):
        y[col] = a[i][n]
    return tuple(y)


@dataclass(frozen=True)
class Cone:
    """Pointed cone with exact membership testing.

    span_eqs vanish on the cone's linear span; rays_coords are the extreme
    rays written in the basis span_basis of the saturated span lattice, and
    normals are the facet inequalities in those coordinates.
    """

    rays: tuple
    span_basis: tuple
    span_eqs: tuple
    rays_coords: tuple
    normals: tuple

    @staticmethod
    def from_rays(rays):
        rays = extreme_rays(rays)
        if not rays:
            return Cone((), (), (), (), ())
        m = len(rays[0])
        span_eqs = integer_kernel(rays)
        if span_eqs:
            span_basis = integer_kernel(span_eqs)
        else:
            span_basis = identity(m)
        coords = []
        for v in rays:
            c = solve_integer(span_basis, v)
            assert c is not None
            coords.append(c)
        d = len(span_basis)
        normals = _facet_normals(coords, d)
        cone = Cone(rays, span_basis, span_eqs, tuple(coords), normals)
        for c in coords:
            assert all(_dot(y, c) >= 0 for y in normals)
        return cone

    @property
    def dim(self):
        return len(self.span_basis)

    def contains(self, v):
        if not self.rays:
            return not any(v)
        if any(_dot(e, v) for e in self.span_eqs):
            return False
        c = solve_integer(self.span_basis, v)
        if c is None:
            return False
        return all(_dot(y, c) >= 0 for y in self.normals)

    def facet_inequalities(self):
        """Facet normals lifted back to the ambient coordinates."""
        out = []
        for y in self.normals:
            lift = _solve_fraction(self.span_basis, y)
            out.append(integerize(lift))
        return tuple(out)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _facet_normals(coords, d):
    """Facets of a full-dimensional pointed cone given by ray coordinates."""
    if d == 0:
        return ()
    if d == 1:
        return ((1,),) if all(c[0] > 0 for c in coords) else ((-1,),)
    found = set()
    for sub in combinations(coords, d - 1):
        kernel = integer_kernel(sub)
        if len(kernel) != 1:
            continue
        y = kernel[0]
        signs = [_dot(y, c) for c in coords]
        if all(s >= 0 for s in signs):
            found.add(primitive(y))
        elif all(s <= 0 for s in signs):
            found.add(primitive(tuple(-t for t in y)))
    assert found, "pointed full-dimensional cone must have facets"
    return tuple(sorted(found))


def facets(vectors):
    """Facet inequalities and span equations cutting out cone(vectors)."""
    cone = Cone.from_rays(vectors)
    return cone.facet_inequalities(), cone.span_eqs


def _box_points(subset):
    """Nonzero lattice points of the half-open parallelepiped spanned by the
    rows of a square nonsingular integer matrix."""
    d = len(subset)
    dmat, u, v = smith_normal_form(subset)
    h, vinv = hermite_normal_form(v)
    assert h == identity(d), "unimodular matrix expected"
    diag = [dmat[i][i] for i in range(d)]
    pts = []
    for s in product(*[range(abs(t)) for t in diag]):
        if not any(s):
            continue
        x = tuple(
            sum(s[k] * vinv[k][j] for k in range(d)) for j in range(d)
        )
        t = _solve_fraction(
            tuple(zip(*subset)), x
        )  # x = t . subset  <=>  subset^T t = x
        shift = [floor(tt) for tt in t]
        pt = tuple(
            x[j] - sum(shift[k] * subset[k][j] for k in range(d))
            for j in range(d)
        )
        if any(pt):
            pts.append(pt)
    return pts


@dataclass(frozen=True)
class HilbertBasis:
    """Hilbert basis of a saturated cone semigroup, with its inputs."""

    vectors: tuple
    lattice: tuple
    cone_gens: tuple

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


def hilbert_basis(generators, lattice=None):
    """Minimal generating set of {lattice points in cone(generators)}.

    generators must lie in the lattice (rows spanning a finite-index
    sublattice of Z^n; omitted means Z^n itself).  This is the Hilbert basis
    of the saturated semigroup; comparing a semigroup against it decides
    normality.
    """
    gens = [tuple(v) for v in generators if any(v)]
    if not gens:
        return HilbertBasis((), () if lattice is None else tuple(map(tuple, lattice)), ())
    n = len(gens[0])
    basis = tuple(tuple(r) for r in lattice) if lattice is not None else identity(n)
    coords = []
    for v in gens:
        c = solve_integer(basis, v)
        if c is None:
            raise ValueError("generator %r is not in the lattice" % (v,))
        coords.append(c)

    rays = extreme_rays(coords)
    cone = Cone.from_rays(rays)
    d = cone.dim
    ray_coords = {r: c for r, c in zip(cone.rays, cone.rays_coords)}

    candidates = set(rays)
    for sub in combinations(cone.rays, d):
        sub_c = tuple(ray_coords[r] for r in sub)
        if determinant(sub_c) == 0:
            continue
        for pt in _box_points(sub_c):
            # back from span coordinates to lattice coordinates
            vec = tuple(
                sum(pt[k] * cone.span_basis[k][j] for k in range(d))
                for j in range(len(basis))
            )
            candidates.add(vec)

    grading = positive_functional(rays)
    graded = sorted(candidates, key=lambda c: (_dot(grading, c), c))
    kept = []
    for c in graded:
        reducible = False
        for h in kept:
            if _dot(grading, h) >= _dot(grading, c):
                break
            diff = tuple(a - b for a, b in zip(c, h))
            if cone.contains(diff):
                reducible = True
                break
        if not reducible:
            kept.append(c)

    out = [
        tuple(sum(c[k] * basis[k][j] for k in range(len(basis))) for j in range(n))
        for c in kept
    ]
    return HilbertBasis(tuple(sorted(out)), basis, tuple(gens))


def semigroup_contains(generators, target, grading=None, witness=False):
    """Exact membership of target in the semigroup sum(N . generators).

    Runs a memoized descent along a grading that is strictly positive on the
    generators (found by LP when not supplied); raises InvalidGradingError
    when the supplied grading fails that or none exists.  With witness=True
    the result is (flag, decomposition) where the decomposition lists
    generators summing to target.
    """
    gens = [tuple(v) for v in generators if any(v)]
    target = tuple(target)
    if not any(target):
        return (True, ()) if witness else True
    if not gens:
        return (False, None) if witness else False
    if grading is not None:
        grading = tuple(grading)
        bad = [g for g in gens if _dot(grading, g) <= 0]
        if bad:
            raise InvalidGradingError(
                "grading %s is not strictly positive on %s" % (grading, bad[0])
            )
    else:
        try:
            grading = positive_functional(gens)
        except NotPointedError as err:
            raise InvalidGradingError(
                "no strictly positive grading: combination %s of the generators "
                "sums to zero" % (err.combination,)
            )
    cone = Cone.from_rays(gens)
    order = sorted(gens, key=lambda g: (-_dot(grading, g), g))
    memo = {}

    def search(v):
        if not any(v):
            return ()
        hit = memo.get(v)
        if hit is not None:
            return hit if hit is not False else None
        gv = _dot(grading, v)
        for g in order:
            if _dot(grading, g) > gv:
                continue
            rest = tuple(a - b for a, b in zip(v, g))
            if not cone.contains(rest):
                continue
            sub = search(rest)
            if sub is not None:
                memo[v] = (g,) + sub
                return (g,) + sub
        memo[v] = False
        return None

    deco = search(target)
    if deco is not None:
        total = [sum(g[j] for g in deco) for j in range(len(target))]
        assert tuple(total) == target
    return ((deco is not None), deco) if witness else deco is not None
