"""Groebner fan of a zero-dimensional lattice ideal, restricted to w >= 0.

Every generic nonnegative weight w selects a monomial initial ideal; the
weights selecting the same one form a full-dimensional polyhedral cone, and
those cones fit together into a fan covering the orthant.  enumerate_fan
walks the fan cone-to-cone across shared facets, which is exhaustive because
the orthant interior is connected.

Cones are recorded by their irredundant facet inequalities (each row a means
a . w >= 0), so containment checks stay integer-exact.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .groebner import (
    MonomialIdeal,
    TiedWeightError,
    WeightOrder,
    buchberger,
    initial_ideal,
    standard_monomials,
)
from .intlin import hermite_basis, primitive
from .lp import GE, LinearProgram, integerize, lp_solve


class BudgetExceeded(RuntimeError):
    """Raised when the fan holds more cones than the caller allowed."""

    def __init__(self, limit):
        super().__init__("more than %d cones in the fan" % limit)
        self.limit = limit


@dataclass(frozen=True)
class GroebnerCone:
    """Closed cone of weights selecting one marked reduced GB.

    inequalities are primitive integer rows a with the meaning a . w >= 0,
    irredundant, so each row supports a facet.  The rows always imply
    w >= 0.  rays are the primitive extreme rays of the cone; together the
    two descriptions make facet points and interior weights pure sums.
    """

    inequalities: tuple
    rays: tuple = ()

    def contains(self, w, strict=False):
        for a in self.inequalities:
            s = sum(x * y for x, y in zip(a, w))
            if s < 0 or (strict and s == 0):
                return False
        return True


def _axes(n):
    return [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _rank(vectors):
    return len(hermite_basis(vectors)) if vectors else 0


def _extreme_rays_h(rows, n):
    """Primitive extreme rays of {w : a . w >= 0 for every row a}.

    The rows must contain the coordinate hyperplanes and cut out a
    full-dimensional cone, which holds for every weight cone here: start
    from the orthant and add the remaining halfspaces one by one (double
    description).  Two rays are adjacent, and so combine across a new
    hyperplane, exactly when their common tight rows leave a rank-(n-2)
    face; full dimension keeps that test exact.
    """
    axes = _axes(n)
    rays = list(axes)
    processed = list(axes)
    for a in rows:
        if a in processed:
            continue
        plus = [r for r in rays if _dot(a, r) > 0]
        zero = [r for r in rays if _dot(a, r) == 0]
        minus = [r for r in rays if _dot(a, r) < 0]
        if minus:
            fresh = []
            for p in plus:
                tp = [b for b in processed if _dot(b, p) == 0]
                for m in minus:
                    shared = [b for b in tp if _dot(b, m) == 0]
                    if _rank(shared) != n - 2:
                        continue
                    mix = tuple(
                        _dot(a, p) * mj - _dot(a, m) * pj for pj, mj in zip(p, m)
                    )
                    fresh.append(primitive(mix))
            rays = plus + zero + sorted(set(fresh))
        processed.append(a)
    return tuple(sorted(rays))


def groebner_cone(gb):
    """Facet description of the weight cone of a marked reduced GB.

    Rows are the lead-minus-trail vectors together with the coordinate
    hyperplanes; a row survives exactly when its tight extreme rays span a
    hyperplane (the cone is full-dimensional, so the facets are unique).
    """
    assert gb, "empty basis has no cone"
    n = len(gb[0].lead)
    rows = set()
    for g in gb:
        rows.add(primitive(tuple(a - b for a, b in zip(g.lead, g.trail))))
    rows.update(_axes(n))
    rows = sorted(rows)
    rays = _extreme_rays_h(rows, n)
    kept = [
        a for a in rows if _rank([r for r in rays if _dot(a, r) == 0]) == n - 1
    ]
    return GroebnerCone(tuple(kept), rays)


def interior_weight(cone):
    """An integer weight strictly inside the cone (and hence w > 0)."""
    if cone.rays:
        w = primitive(tuple(sum(col) for col in zip(*cone.rays)))
        assert cone.contains(w, strict=True)
        return w
    # no ray description: maximize the least slack over the box 0 <= w <= 1
    rows = cone.inequalities
    n = len(rows[0])
    lp = LinearProgram.of(
        [0] * n + [1],
        [(a + (-1,), GE, 0) for a in rows],
        bounds=[(0, 1)] * n + [(None, 1)],
        maximize=True,
    )
    out = lp_solve(lp)
    assert out.status == "optimal" and out.value > 0, "cone is not full-dimensional"
    w = integerize(out.x[:n])
    assert cone.contains(w, strict=True)
    return w


def _facet_relint(cone, facet):
    """Integer point in the facet's relative interior, or None.

    The extreme rays of the facet are the cone rays it is tight on, so the
    sum of those rays is relative-interior.  None means the facet lies in a
    coordinate hyperplane, where there is no positive weight to cross toward.
    """
    tight = [r for r in cone.rays if _dot(facet, r) == 0]
    if not tight:
        return None
    p = tuple(sum(col) for col in zip(*tight))
    if any(x == 0 for x in p):
        return None
    assert _dot(facet, p) == 0
    return p


def _cross_facet(gens, cone, facet, point, initial):
    """Initial data on the far side of a facet through its relint point.

    Steps off the facet by point - delta * facet, halving delta until the
    step lands strictly inside a single neighboring cone that still touches
    the boundary point.
    """
    delta = Fraction(1)
    shrink = [Fraction(x, a) for x, a in zip(point, facet) if a > 0]
    if shrink:
        delta = min(delta, min(shrink) / 2)
    for _ in range(80):
        w = tuple(Fraction(x) - delta * a for x, a in zip(point, facet))
        if all(x > 0 for x in w):
            try:
                other, gb = initial_ideal(gens, w)
            except TiedWeightError:
                delta /= 2
                continue
            if other.gens != initial.gens:
                far = groebner_cone(gb)
                if far.contains(point) and far.contains(w, strict=True):
                    return other, far
        delta /= 2
    raise AssertionError("facet crossing did not stabilize")


@dataclass(frozen=True)
class FanCone:
    """One maximal cone of the fan: its initial ideal, cone and a witness."""

    initial: MonomialIdeal
    cone: GroebnerCone
    weight: tuple


def enumerate_fan(gens, chars=None, max_cones=None):
    """All monomial initial ideals of the ideal generated by gens, w > 0.

    Breadth-first flips across facets, starting from the cone of the
    all-ones weight; cones are keyed by the minimal generators of their
    initial ideal, and the result is sorted by that key so any traversal
    order produces the same tuple.  Facets lying in coordinate hyperplanes
    are not crossed.  With chars, every initial ideal found is checked to
    have one standard monomial per character.
    """
    gens = tuple(gens)
    assert gens, "zero ideal has no fan to walk"
    n = len(gens[0].lead)
    gb0 = buchberger(gens, WeightOrder((1,) * n, "lex"))
    cone0 = groebner_cone(gb0)
    w0 = interior_weight(cone0)
    j0, _ = initial_ideal(gens, w0)
    assert j0 == MonomialIdeal.of(g.lead for g in gb0)

    found = {j0.gens: FanCone(j0, cone0, w0)}
    frontier = deque([j0.gens])
    axes = set(_axes(n))
    while frontier:
        entry = found[frontier.popleft()]
        for facet in entry.cone.inequalities:
            if facet in axes:
                continue
            point = _facet_relint(entry.cone, facet)
            if point is None:
                continue
            other, far = _cross_facet(gens, entry.cone, facet, point, entry.initial)
            if other.gens in found:
                continue
            if max_cones is not None and len(found) >= max_cones:
                raise BudgetExceeded(max_cones)
            w = interior_weight(far)
            check, _ = initial_ideal(gens, w)
            assert check == other
            if chars is not None:
                std = standard_monomials(other)
                degs = set(chars.deg(m) for m in std)
                assert len(std) == chars.r and len(degs) == chars.r
            found[other.gens] = FanCone(other, far, w)
            frontier.append(other.gens)
    return tuple(found[k] for k in sorted(found))
