"""Exact rational linear programming with verified certificates.

A dense two-phase primal simplex over fractions.Fraction with Bland's rule,
so every run terminates and identical inputs pivot identically.  Outcomes are
values, never exceptions: optimal (vertex + value), infeasible (Farkas
multipliers), or unbounded (improving ray).  Certificates are re-verified by
direct arithmetic before being returned; a failed verification is a bug and
raises AssertionError.

Also home to strict_separation, the witness-or-certificate engine behind the
coherent-component membership test.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

GE = ">="
EQ = "=="
LE = "<="


def _frac(x):
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class LinearProgram:
    """min (or max) objective . x subject to rows and simple bounds.

    constraints: tuple of (coeffs, rel, rhs) with rel one of ">=", "==", "<=".
    bounds: per-variable (lower, upper), either side None for unbounded.
    """

    objective: tuple
    constraints: tuple
    bounds: tuple
    maximize: bool = False

    @staticmethod
    def of(objective, constraints, bounds=None, maximize=False):
        objective = tuple(_frac(c) for c in objective)
        nv = len(objective)
        rows = []
        for coeffs, rel, rhs in constraints:
            coeffs = tuple(_frac(c) for c in coeffs)
            assert len(coeffs) == nv, "constraint arity mismatch"
            assert rel in (GE, EQ, LE)
            rows.append((coeffs, rel, _frac(rhs)))
        if bounds is None:
            bounds = ((None, None),) * nv
        else:
            bounds = tuple(
                (None if lo is None else _frac(lo), None if up is None else _frac(up))
                for lo, up in bounds
            )
            assert len(bounds) == nv
        return LinearProgram(objective, tuple(rows), bounds, maximize)


@dataclass(frozen=True)
class FarkasCertificate:
    """Multipliers proving infeasibility.

    row_multipliers[i] pairs with constraint i (>= rows get a nonnegative
    multiplier, == rows a free one).  lower/upper multipliers pair with the
    variable bounds.  The combination satisfies
        sum_i m_i a_i + mu_lo - mu_up = 0   and
        sum_i m_i b_i + mu_lo . lower - mu_up . upper > 0,
    which no feasible point can survive.
    """

    row_multipliers: tuple
    lower_multipliers: tuple
    upper_multipliers: tuple


@dataclass(frozen=True)
class LPOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: tuple = None
    value: Fraction = None
    farkas: FarkasCertificate = None
    ray: tuple = None


def verify_solution(lp, x):
    for coeffs, rel, rhs in lp.constraints:
        lhs = sum(c * v for c, v in zip(coeffs, x))
        assert (
            lhs >= rhs if rel == GE else lhs <= rhs if rel == LE else lhs == rhs
        ), "solution violates a constraint"
    for v, (lo, up) in zip(x, lp.bounds):
        assert lo is None or v >= lo
        assert up is None or v <= up


def verify_farkas(lp, cert):
    nv = len(lp.objective)
    m = cert.row_multipliers
    assert len(m) == len(lp.constraints)
    combo = [Fraction(0)] * nv
    rhs_total = Fraction(0)
    for mi, (coeffs, rel, rhs) in zip(m, lp.constraints):
        if rel == GE:
            assert mi >= 0, "negative multiplier on a >= row"
        elif rel == LE:
            assert mi <= 0, "positive multiplier on a <= row"
        for j in range(nv):
            combo[j] += mi * coeffs[j]
        rhs_total += mi * rhs
    for j, (lo, up) in enumerate(lp.bounds):
        ml, mu = cert.lower_multipliers[j], cert.upper_multipliers[j]
        assert ml >= 0 and mu >= 0
        assert ml == 0 or lo is not None
        assert mu == 0 or up is not None
        combo[j] += ml - mu
        if ml:
            rhs_total += ml * lo
        if mu:
            rhs_total -= mu * up
    assert all(c == 0 for c in combo), "Farkas combination is not the zero functional"
    assert rhs_total > 0, "Farkas combination does not reach a contradiction"


def verify_ray(lp, ray):
    sense = -1 if lp.maximize else 1
    drop = sense * sum(c * v for c, v in zip(lp.objective, ray))
    assert drop < 0, "ray does not improve the objective"
    for coeffs, rel, rhs in lp.constraints:
        lhs = sum(c * v for c, v in zip(coeffs, ray))
        assert (
            lhs >= 0 if rel == GE else lhs <= 0 if rel == LE else lhs == 0
        ), "ray leaves the feasible cone"
    for v, (lo, up) in zip(ray, lp.bounds):
        assert lo is None or v >= 0
        assert up is None or v <= 0


class _Tableau:
    """Simplex tableau for min c.x, A x = b, x >= 0 (b >= 0 on entry)."""

    def __init__(self, a, b, c):
        self.m = len(a)
        self.n = len(a[0]) if a else len(c)
        self.total = self.n
        self.rows = [list(r) + [bi] for r, bi in zip(a, b)]
        self.basis = []

    def add_artificials(self):
        for i in range(self.m):
            for k in range(self.m):
                self.rows[i].insert(self.n + k, Fraction(1 if k == i else 0))
        self.basis = [self.n + i for i in range(self.m)]
        self.total = self.n + self.m

    def cost_row(self, costs):
        """Reduced costs and objective value for the given full cost vector."""
        total = self.total
        rc = list(costs) + [Fraction(0)] * (total - len(costs))
        val = Fraction(0)
        for i, bi in enumerate(self.basis):
            cb = costs[bi] if bi < len(costs) else Fraction(0)
            if cb:
                row = self.rows[i]
                for j in range(total):
                    rc[j] -= cb * row[j]
                val -= cb * row[total]
        return rc, -val

    def pivot(self, row, col):
        piv = self.rows[row][col]
        inv = 1 / piv
        self.rows[row] = [x * inv for x in self.rows[row]]
        prow = self.rows[row]
        for i in range(self.m):
            if i != row:
                f = self.rows[i][col]
                if f:
                    self.rows[i] = [x - f * y for x, y in zip(self.rows[i], prow)]
        self.basis[row] = col

    def solve(self, costs, allowed):
        """Bland-rule simplex on the allowed columns.

        Returns ("optimal", reduced_costs, value) or ("unbounded", entering).
        """
        total = self.total
        while True:
            rc, val = self.cost_row(costs)
            enter = None
            for j in range(total):
                if allowed[j] and rc[j] < 0:
                    enter = j
                    break
            if enter is None:
                return "optimal", rc, val
            leave = None
            best = None
            for i in range(self.m):
                aij = self.rows[i][enter]
                if aij > 0:
                    ratio = self.rows[i][total] / aij
                    if best is None or ratio < best or (
                        ratio == best and self.basis[i] < self.basis[leave]
                    ):
                        best = ratio
                        leave = i
            if leave is None:
                return "unbounded", enter, None
            self.pivot(leave, enter)

    def solution(self, nreal):
        x = [Fraction(0)] * nreal
        total = self.total
        for i, bi in enumerate(self.basis):
            if bi < nreal:
                x[bi] = self.rows[i][total]
        return x


def lp_solve(lp):
    """Solve an exact rational LP; all outcomes carry verified evidence."""
    nv = len(lp.objective)
    sense = Fraction(-1 if lp.maximize else 1)

    # Standard-form bookkeeping.  Variable j becomes either a shifted
    # nonnegative column, a negated one, or a split pair.
    # cols[j] = (kind, data): kind "pos" -> x = col + lo, "neg" -> x = up - col,
    # "split" -> x = col_plus - col_minus.
    col_of = []
    shift = []
    ncols = 0
    extra_rows = []  # (col, ub) rows for two-sided bounds, appended after real rows
    for j, (lo, up) in enumerate(lp.bounds):
        if lo is None and up is None:
            col_of.append(("split", (ncols, ncols + 1)))
            shift.append(Fraction(0))
            ncols += 2
        elif lo is not None:
            col_of.append(("pos", ncols))
            shift.append(lo)
            if up is not None:
                extra_rows.append((ncols, up - lo))
            ncols += 1
        else:
            col_of.append(("neg", ncols))
            shift.append(up)
            ncols += 1

    def expand(coeffs):
        """Row of the standard-form matrix for original coefficients."""
        row = [Fraction(0)] * ncols
        const = Fraction(0)
        for j, cj in enumerate(coeffs):
            if not cj:
                continue
            kind, data = col_of[j]
            if kind == "split":
                p, q = data
                row[p] += cj
                row[q] -= cj
            elif kind == "pos":
                row[data] += cj
                const += cj * shift[j]
            else:
                row[data] -= cj
                const += cj * shift[j]
        return row, const

    a_rows = []
    b_vals = []
    row_kinds = []  # original constraint index, or ("ub", column, slack)
    for idx, (coeffs, rel, rhs) in enumerate(lp.constraints):
        row, const = expand(coeffs)
        rhs = rhs - const
        if rel != EQ:
            row.append(Fraction(-1 if rel == GE else 1))
            for r in a_rows:
                r.append(Fraction(0))
            ncols += 1
        a_rows.append(row)
        b_vals.append(rhs)
        row_kinds.append(idx)
    for col, ub in extra_rows:
        row = [Fraction(0)] * ncols
        row[col] = Fraction(1)
        slack = ncols
        row.append(Fraction(1))
        for r in a_rows:
            r.append(Fraction(0))
        ncols += 1
        a_rows.append(row)
        b_vals.append(ub)
        row_kinds.append(("ub", col, slack))

    # normalize rhs signs
    sigma = []
    for i in range(len(a_rows)):
        if b_vals[i] < 0:
            a_rows[i] = [-x for x in a_rows[i]]
            b_vals[i] = -b_vals[i]
            sigma.append(Fraction(-1))
        else:
            sigma.append(Fraction(1))

    m = len(a_rows)
    tab = _Tableau(a_rows, b_vals, [Fraction(0)] * ncols)
    tab.add_artificials()
    total = ncols + m
    allowed = [True] * total
    phase1_costs = [Fraction(0)] * ncols + [Fraction(1)] * m
    status, rc, val = tab.solve(phase1_costs, allowed)
    assert status == "optimal", "phase 1 cannot be unbounded"
    if val > 0:
        # infeasible: simplex multipliers y_i = 1 - rc(artificial_i)
        y = [Fraction(1) - rc[ncols + i] for i in range(m)]
        row_mult = [Fraction(0)] * len(lp.constraints)
        low_mult = [Fraction(0)] * nv
        up_mult = [Fraction(0)] * nv
        for i in range(m):
            yi = y[i] * sigma[i]
            if not yi:
                continue
            kind = row_kinds[i]
            if isinstance(kind, int):
                row_mult[kind] += yi
            else:
                _, col, _ = kind
                # upper-bound row col <= ub; multiplier must be <= 0 side
                j = next(
                    jj for jj, (k, d) in enumerate(col_of) if k == "pos" and d == col
                )
                up_mult[j] += -yi
        # bound multipliers close the combination exactly
        for j in range(nv):
            kind, data = col_of[j]
            coef = Fraction(0)
            for i, (coeffs, rel, rhs) in enumerate(lp.constraints):
                coef += row_mult[i] * coeffs[j]
            coef -= up_mult[j]
            if kind == "split":
                assert coef == 0, "free variable not cancelled by the certificate"
            elif kind == "pos":
                if coef < 0:
                    low_mult[j] = -coef
                else:
                    assert coef == 0, "lower-bounded variable has positive residue"
            else:
                if coef > 0:
                    up_mult[j] += coef
                else:
                    assert coef == 0
        cert = FarkasCertificate(tuple(row_mult), tuple(low_mult), tuple(up_mult))
        verify_farkas(lp, cert)
        return LPOutcome(status="infeasible", farkas=cert)

    # drive artificials out of the basis (or drop redundant rows)
    for i in range(m - 1, -1, -1):
        if tab.basis[i] >= ncols:
            piv = next((j for j in range(ncols) if tab.rows[i][j] != 0), None)
            if piv is None:
                del tab.rows[i], tab.basis[i]
                tab.m -= 1
            else:
                tab.pivot(i, piv)
    for j in range(ncols, total):
        allowed[j] = False

    costs = [Fraction(0)] * ncols
    for j in range(nv):
        cj = sense * lp.objective[j]
        if not cj:
            continue
        kind, data = col_of[j]
        if kind == "split":
            p, q = data
            costs[p] += cj
            costs[q] -= cj
        elif kind == "pos":
            costs[data] += cj
        else:
            costs[data] -= cj
    status, info, val = tab.solve(costs, allowed)
    if status == "unbounded":
        enter = info
        r = [Fraction(0)] * ncols
        r[enter] = Fraction(1)
        for i, bi in enumerate(tab.basis):
            if bi < ncols:
                r[bi] = -tab.rows[i][enter]
        ray = []
        for j in range(nv):
            kind, data = col_of[j]
            if kind == "split":
                p, q = data
                ray.append(r[p] - r[q])
            elif kind == "pos":
                ray.append(r[data])
            else:
                ray.append(-r[data])
        ray = tuple(ray)
        verify_ray(lp, ray)
        return LPOutcome(status="unbounded", ray=ray)

    xs = tab.solution(ncols)
    x = []
    for j in range(nv):
        kind, data = col_of[j]
        if kind == "split":
            p, q = data
            x.append(xs[p] - xs[q])
        elif kind == "pos":
            x.append(xs[data] + shift[j])
        else:
            x.append(shift[j] - xs[data])
    x = tuple(x)
    verify_solution(lp, x)
    value = sum(c * v for c, v in zip(lp.objective, x))
    shift_const = sum(lp.objective[j] * shift[j] for j in range(nv))
    assert val == sense * (value - shift_const), "tableau value disagrees with x"
    return LPOutcome(status="optimal", x=x, value=value)


def integerize(vec):
    """Scale a rational vector to a primitive integer vector (>= direction)."""
    denom = lcm(*[_frac(v).denominator for v in vec]) if vec else 1
    ints = [int(_frac(v) * denom) for v in vec]
    g = 0
    for z in ints:
        g = gcd(g, z)
    if g > 1:
        ints = [z // g for z in ints]
    return tuple(ints)


@dataclass(frozen=True)
class SeparationResult:
    """Either a strictly separating nonnegative integer weight vector, or
    nonnegative integer multipliers lambda (one per pair, not all zero) with
    sum_d lambda_d d <= 0 componentwise, proving no such weight exists."""

    witness: tuple = None
    multipliers: tuple = None


def strict_separation(pairs):
    """Find integer w >= 0 with w.d > 0 for every d, or certify impossibility.

    The witness search maximizes the worst slack over the box 0 <= w <= 1;
    the certificate comes from the alternative system (nonnegative, summing
    to one, pushed componentwise nonpositive), then gets support-minimized
    greedily in input order and scaled to integers.
    """
    pairs = [tuple(d) for d in pairs]
    assert pairs, "strict_separation needs at least one pair"
    n = len(pairs[0])
    eps_lp = LinearProgram.of(
        objective=(0,) * n + (1,),
        constraints=[(d + (-1,), GE, 0) for d in pairs],
        bounds=[(0, 1)] * n + [(None, None)],
        maximize=True,
    )
    out = lp_solve(eps_lp)
    assert out.status == "optimal", "the slack LP is always feasible and bounded"
    if out.value > 0:
        w = integerize(out.x[:n])
        assert all(sum(wi * di for wi, di in zip(w, d)) > 0 for d in pairs)
        assert all(wi >= 0 for wi in w)
        return SeparationResult(witness=w)

    k = len(pairs)

    def feasible(active):
        cons = [(tuple(Fraction(1) if i in active else 0 for i in range(k)), EQ, 1)]
        for j in range(n):
            cons.append(
                (
                    tuple(
                        Fraction(pairs[i][j]) if i in active else 0 for i in range(k)
                    ),
                    LE,
                    0,
                )
            )
        lam_lp = LinearProgram.of(
            objective=(0,) * k,
            constraints=cons,
            bounds=[(0, None) if i in active else (0, 0) for i in range(k)],
        )
        res = lp_solve(lam_lp)
        return res.x if res.status == "optimal" else None

    active = set(range(k))
    lam = feasible(active)
    assert lam is not None, "no witness and no certificate: duality violated"
    for i in range(k):
        if i in active:
            trial = active - {i}
            if trial:
                got = feasible(trial)
                if got is not None:
                    active = trial
                    lam = got
    mult = integerize(lam)
    assert all(v >= 0 for v in mult) and any(v > 0 for v in mult)
    combo = [sum(mult[i] * pairs[i][j] for i in range(k)) for j in range(n)]
    assert all(c <= 0 for c in combo), "certificate combination is not nonpositive"
    return SeparationResult(multipliers=mult)
