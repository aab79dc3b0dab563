"""Distinguished quiver representations for a stability parameter and weight.

The module generated by all arrow binomials x_i e_rho - e_{rho rho_i} has,
for each stability parameter theta and weight w, a distinguished initial
module: solve min theta . v over the slice {v : w_i + v_rho - v_{rho rho_i}
>= 0}, keep the binomial where the constraint is tight and the lone monomial
x_i e_rho where it is slack.  The tight pattern is the 0/1 table b.

Everything is exact: slacks are Fractions compared to zero, never rounded.
"""

from dataclasses import dataclass
from fractions import Fraction

from .group import ThetaParam, quiver_matrices
from .lp import GE, LinearProgram, lp_solve


class RelationViolation(ValueError):
    """A 0/1 table that is not a quiver representation."""

    def __init__(self, i, j, rho):
        super().__init__(
            "commutation fails for labels %d,%d at vertex %d" % (i + 1, j + 1, rho)
        )
        self.i = i
        self.j = j
        self.rho = rho


class UnexpectedCycle(ValueError):
    def __init__(self, arrows):
        super().__init__("support quiver has a directed cycle: %s" % (arrows,))
        self.arrows = arrows


def mckay_module(chars):
    """Arrow generators (i, rho) for x_i e_rho - e_{rho rho_i}.

    Blocks run over rho in enumeration order, i inside each block, which is
    also the column order of the incidence matrices.
    """
    return tuple((i, p) for p in range(chars.r) for i in range(chars.n))


@dataclass(frozen=True)
class QuiverRep:
    """0/1 arrow table; b[rho][i] marks the arrow a_i^rho as present."""

    chars: object
    b: tuple


def verify_quiver_rep(rep):
    """Check the commutation relations, returning how many were checked.

    For each vertex rho and labels i < j, the S-pair of the generators
    x_i e_rho - b_i^rho e_{rho rho_i} and x_j e_rho - b_j^rho e_{rho rho_j}
    is x_i b_j^rho e_{rho rho_j} - x_j b_i^rho e_{rho rho_i}; reducing each
    term by the generator at its vertex leaves
    (b_j^rho b_i^{rho rho_j} - b_i^rho b_j^{rho rho_i}) e_{rho rho_i rho_j},
    and the table is consistent exactly when that coefficient vanishes.
    """
    chars, b = rep.chars, rep.b
    assert len(b) == chars.r and all(len(row) == chars.n for row in b)
    checked = 0
    for p in range(chars.r):
        for i in range(chars.n):
            for j in range(i + 1, chars.n):
                pi = chars.mul[i][p]
                pj = chars.mul[j][p]
                assert chars.mul[j][pi] == chars.mul[i][pj]
                if b[p][j] * b[pj][i] - b[p][i] * b[pi][j] != 0:
                    raise RelationViolation(i, j, p)
                checked += 1
    return checked


@dataclass(frozen=True)
class Constellation:
    """LP output bundle: the gauge-fixed optimum v, its value, and b."""

    chars: object
    theta: ThetaParam
    w: tuple
    v: tuple
    value: Fraction
    rep: QuiverRep

    def generators(self):
        """(i, rho, kept) per arrow generator: binomial when kept, else the
        lone monomial x_i e_rho."""
        return tuple(
            (i, p, self.rep.b[p][i] == 1)
            for p in range(self.chars.r)
            for i in range(self.chars.n)
        )

    def kept(self):
        return frozenset(
            (i + 1, p)
            for p in range(self.chars.r)
            for i in range(self.chars.n)
            if self.rep.b[p][i] == 1
        )


def distinguished_constellation(chars, theta, w, constraint_order=None):
    """Distinguished representation for (theta, w) by exact LP.

    Minimizes theta . v over {v : w_i + v_rho - v_{rho rho_i} >= 0} with
    v pinned to 0 on the trivial character (the slice is invariant under
    adding constants and theta sums to zero, so the value is unaffected).
    b marks the constraints that are tight at the optimum.

    constraint_order, when given, must be a permutation of the arrow pairs
    (i, rho).  The LP rows are always assembled in a fixed internal order,
    so the answer cannot drift with the caller's enumeration even when the
    optimal face is positive-dimensional and several vertices tie.
    """
    if not isinstance(theta, ThetaParam):
        theta = ThetaParam.of(theta)
    r, n = chars.r, chars.n
    assert len(theta.values) == r
    w = tuple(Fraction(x) for x in w)
    assert len(w) == n and all(x >= 0 for x in w)

    if constraint_order is not None:
        bad = sorted(constraint_order) != sorted(mckay_module(chars))
        assert not bad, "constraint_order is not a permutation of the arrows"

    rows = []
    for i, p in mckay_module(chars):
        q = chars.mul[i][p]
        coeffs = [Fraction(0)] * (r - 1)
        if p != chars.trivial:
            coeffs[p - 1] += 1
        if q != chars.trivial:
            coeffs[q - 1] -= 1
        rows.append((tuple(coeffs), GE, -w[i]))
    lp = LinearProgram.of(theta.values[1:], rows)
    out = lp_solve(lp)
    assert out.status == "optimal", (
        "objective unbounded on the slice; theta=%s is outside the usable range"
        % (theta.values,)
    )

    v = (Fraction(0),) + tuple(out.x)
    b = tuple(
        tuple(1 if w[i] + v[p] - v[chars.mul[i][p]] == 0 else 0 for i in range(n))
        for p in range(r)
    )
    rep = QuiverRep(chars, b)
    verify_quiver_rep(rep)
    return Constellation(chars, theta, w, v, out.value, rep)


@dataclass(frozen=True)
class SupportQuiver:
    """Arrows (i, rho) with b_i^rho = 1; the arrow runs rho rho_i -> rho."""

    chars: object
    arrows: tuple

    def tail(self, arrow):
        i, p = arrow
        return self.chars.mul[i][p]

    def head(self, arrow):
        return arrow[1]

    def out_map(self):
        """vertex -> arrows leaving it, in label order."""
        out = {p: [] for p in range(self.chars.r)}
        for a in self.arrows:
            out[self.tail(a)].append(a)
        return out

    def reachable_from_trivial(self):
        """Vertices reachable from the trivial character along arrows."""
        out = self.out_map()
        seen = {self.chars.trivial}
        stack = [self.chars.trivial]
        while stack:
            p = stack.pop()
            for a in out[p]:
                h = self.head(a)
                if h not in seen:
                    seen.add(h)
                    stack.append(h)
        return frozenset(seen)

    def connected_from_trivial(self):
        """Vertices reachable from the trivial character ignoring direction."""
        nbr = {p: set() for p in range(self.chars.r)}
        for a in self.arrows:
            nbr[self.tail(a)].add(self.head(a))
            nbr[self.head(a)].add(self.tail(a))
        seen = {self.chars.trivial}
        stack = [self.chars.trivial]
        while stack:
            for q in nbr[stack.pop()]:
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
        return frozenset(seen)


def support_quiver(rep, expect_acyclic=False):
    """Subquiver of arrows with b = 1, optionally certified acyclic.

    When the weight lies inside a top-dimensional cone the LP optimum is a
    vertex and the support contains no directed cycle; expect_acyclic turns
    that into a checked error (UnexpectedCycle carries the offending arrows).
    """
    chars = rep.chars
    arrows = tuple(
        (i, p) for p in range(chars.r) for i in range(chars.n) if rep.b[p][i]
    )
    quiver = SupportQuiver(chars, arrows)
    if expect_acyclic:
        out = quiver.out_map()
        state = [0] * chars.r  # 0 fresh, 1 on stack, 2 done
        trail = []

        def visit(p):
            state[p] = 1
            for a in out[p]:
                h = a[1]
                if state[h] == 0:
                    trail.append(a)
                    visit(h)
                    trail.pop()
                elif state[h] == 1:
                    cycle = [a]
                    for back in reversed(trail):
                        cycle.append(back)
                        if back[1] == h:
                            break
                    raise UnexpectedCycle(tuple(reversed(cycle)))
            state[p] = 2

        for p in range(chars.r):
            if state[p] == 0:
                visit(p)
    return quiver


def path_decompose(chars, u, theta):
    """Split u >= 0 with B u = theta into paths from the trivial vertex plus
    a circulation.

    Requires theta nonnegative away from the trivial character and
    nonpositive there.  Repeatedly walks from the trivial vertex along
    arrows with positive residual multiplicity (smallest label first,
    self-loops left aside) until stuck; each walk is emitted as one path
    vector whose incidence image is e_end - e_trivial.  What remains has
    incidence image zero.
    """
    quiver = quiver_matrices(chars)
    r, n = chars.r, chars.n
    u = tuple(int(x) for x in u)
    assert len(u) == n * r and all(x >= 0 for x in u)
    if isinstance(theta, ThetaParam):
        theta = theta.values
    theta = tuple(theta)
    bu = tuple(sum(row[c] * u[c] for c in range(n * r)) for row in quiver.B)
    assert tuple(map(Fraction, bu)) == tuple(map(Fraction, theta)), "B u != theta"
    t0 = chars.trivial
    assert bu[t0] <= 0 and all(
        bu[p] >= 0 for p in range(r) if p != t0
    ), "theta has the wrong sign pattern"

    # head of the arrow labeled i leaving p: the unique q with q rho_i = p
    leave = [[None] * r for _ in range(n)]
    for i in range(n):
        for q in range(r):
            leave[i][chars.mul[i][q]] = q

    res = list(u)
    residual_theta = list(bu)
    paths = []
    while any(residual_theta):
        assert residual_theta[t0] < 0
        path = [0] * (n * r)
        at = t0
        while True:
            step = None
            for i in range(n):
                head = leave[i][at]
                if head == at:
                    continue  # self-loop, belongs to the circulation part
                c = quiver.column_index[(head, i)]
                if res[c] > 0:
                    step = (c, head)
                    break
            if step is None:
                break
            c, head = step
            res[c] -= 1
            path[c] += 1
            at = head
        assert at != t0 and residual_theta[at] > 0, "walk ended at a bad vertex"
        img = tuple(sum(row[c] * path[c] for c in range(n * r)) for row in quiver.B)
        assert all(
            x == (1 if p == at else -1 if p == t0 else 0) for p, x in enumerate(img)
        )
        paths.append(tuple(path))
        residual_theta[at] -= 1
        residual_theta[t0] += 1
    img = tuple(sum(row[c] * res[c] for c in range(n * r)) for row in quiver.B)
    assert not any(img), "remainder is not a circulation"
    assert all(
        r0 + sum(p[c] for p in paths) == u[c] for c, r0 in enumerate(res)
    )
    return tuple(res), tuple(paths)
