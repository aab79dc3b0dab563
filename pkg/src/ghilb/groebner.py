"""Groebner bases of lattice ideals over exact arithmetic.

Every ideal handled here is generated by differences of monomials, and that
shape is closed under S-polynomials and reduction, so the whole engine works
on exponent tuples and never touches coefficients.  Buchberger runs with the
normal selection strategy and Bland-free determinism: identical inputs walk
identical pair queues.  By default every returned basis is re-verified (all
S-pairs reduce to zero over the final basis), so a logic bug shows up as an
AssertionError instead of a wrong ideal.
"""

from dataclasses import dataclass
from fractions import Fraction
from heapq import heappush, heappop

from .intlin import axis_order as _axis_order, integer_kernel, transpose


@dataclass(frozen=True)
class Binomial:
    """x^lead - x^trail with lead, trail nonnegative exponent tuples."""

    lead: tuple
    trail: tuple

    def __post_init__(self):
        assert self.lead != self.trail, "zero binomial"
        assert all(e >= 0 for e in self.lead) and all(e >= 0 for e in self.trail)

    def vector(self):
        return tuple(a - b for a, b in zip(self.lead, self.trail))


class WeightOrder:
    """Weight vector first, then lex or grevlex as tiebreak.

    With the all-ones weight and lex tiebreak this is the canonical order
    used to normalize ideals for comparison and printing.
    """

    def __init__(self, weights, tiebreak="lex"):
        self.weights = tuple(Fraction(w) for w in weights)
        assert tiebreak in ("lex", "grevlex")
        self.tiebreak = tiebreak

    def key(self, u):
        w = sum(wi * ui for wi, ui in zip(self.weights, u))
        if self.tiebreak == "lex":
            return (w, u)
        return (w, sum(u), tuple(-e for e in reversed(u)))


class SaturationOrder:
    """Positive grading refined by reverse lex with one chosen variable
    cheapest.  For a graded ideal, initial terms divisible by that variable
    force the whole element divisible, which is what makes colon-by-variable
    a division of the basis."""

    def __init__(self, grading, cheapest):
        self.grading = tuple(Fraction(g) for g in grading)
        assert all(g > 0 for g in self.grading), "grading must be positive"
        n = len(self.grading)
        self.cheapest = cheapest
        self.scan = (cheapest,) + tuple(
            j for j in range(n - 1, -1, -1) if j != cheapest
        )

    def key(self, u):
        w = sum(g * e for g, e in zip(self.grading, u))
        return (w, tuple(-u[j] for j in self.scan))


def orient(a, b, order):
    """Binomial with the order-larger side leading; None when a == b."""
    a, b = tuple(a), tuple(b)
    if a == b:
        return None
    return Binomial(a, b) if order.key(a) > order.key(b) else Binomial(b, a)


def _divides(d, m):
    return all(a <= b for a, b in zip(d, m))


def nf_monomial(m, basis):
    """Normal form of a single monomial against difference binomials.

    Each step swaps a divisible lead for the matching trail, which strictly
    drops in the term order of the basis, so this terminates.  Against a
    reduced Groebner basis the result is the unique standard representative.
    """
    m = tuple(m)
    changed = True
    while changed:
        changed = False
        for g in basis:
            lead = g.lead
            if _divides(lead, m):
                m = tuple(a - b + c for a, b, c in zip(m, lead, g.trail))
                changed = True
                break
    return m


def normal_form(binom, basis, order):
    """Normal form of a difference binomial; None when it reduces to zero."""
    return orient(
        nf_monomial(binom.lead, basis), nf_monomial(binom.trail, basis), order
    )


def spoly(f, g, order):
    lcm_m = tuple(max(a, b) for a, b in zip(f.lead, g.lead))
    a = tuple(l - fl + ft for l, fl, ft in zip(lcm_m, f.lead, f.trail))
    b = tuple(l - gl + gt for l, gl, gt in zip(lcm_m, g.lead, g.trail))
    return a, b, lcm_m


def buchberger(gens, order, verify=True, interreduce=True):
    """Reduced Groebner basis of the difference-binomial ideal of gens.

    Normal selection: pairs pop by order key of the pair lcm.  The coprime
    criterion prunes; everything else is the textbook loop.  Returns a tuple
    sorted by lead, canonical for the (ideal, order) pair.
    """
    basis = []
    for g in gens:
        if isinstance(g, Binomial):
            ob = orient(g.lead, g.trail, order)
        else:
            ob = orient(g[0], g[1], order)
        if ob is not None:
            basis.append(ob)

    heap = []
    counter = 0

    def push_pairs(j):
        nonlocal counter
        gj = basis[j]
        for i in range(j):
            gi = basis[i]
            if all(a == 0 or b == 0 for a, b in zip(gi.lead, gj.lead)):
                continue  # coprime leads: S-pair reduces to zero
            lcm_m = tuple(max(a, b) for a, b in zip(gi.lead, gj.lead))
            heappush(heap, (order.key(lcm_m), counter, i, j))
            counter += 1

    for j in range(len(basis)):
        push_pairs(j)

    while heap:
        _, _, i, j = heappop(heap)
        a, b, _ = spoly(basis[i], basis[j], order)
        red = orient(nf_monomial(a, basis), nf_monomial(b, basis), order)
        if red is not None:
            basis.append(red)
            push_pairs(len(basis) - 1)

    if interreduce:
        basis = _reduce_basis(basis, order)
    out = tuple(sorted(basis, key=lambda g: order.key(g.lead)))
    if verify:
        verify_groebner(out, order)
    return out


def _reduce_basis(basis, order):
    # minimal: no lead divides another lead
    keep = []
    for i, g in enumerate(basis):
        if any(
            _divides(h.lead, g.lead) and (h.lead != g.lead or j < i)
            for j, h in enumerate(basis)
            if j != i
        ):
            continue
        keep.append(g)
    # reduced: every trail in normal form against the others
    out = []
    for g in keep:
        t = nf_monomial(g.trail, [h for h in keep if h is not g])
        assert t != g.lead
        out.append(Binomial(g.lead, t))
    return out


def verify_groebner(basis, order):
    """Buchberger criterion on the final basis: all S-pairs drop to zero."""
    for j in range(len(basis)):
        for i in range(j):
            gi, gj = basis[i], basis[j]
            if all(a == 0 or b == 0 for a, b in zip(gi.lead, gj.lead)):
                continue
            a, b, _ = spoly(gi, gj, order)
            assert nf_monomial(a, basis) == nf_monomial(
                b, basis
            ), "S-pair does not reduce to zero: not a Groebner basis"
    for g in basis:
        assert order.key(g.lead) > order.key(g.trail), "misoriented element"


class TiedWeightError(ValueError):
    """The weight vector fails to pick a single term somewhere, so the
    initial ideal is not a monomial ideal."""


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal held by its minimal generators, canonically sorted."""

    gens: tuple

    @staticmethod
    def of(monomials):
        ms = sorted(set(tuple(m) for m in monomials), key=lambda m: (sum(m), m))
        keep = []
        for m in ms:
            if not any(_divides(k, m) for k in keep):
                keep.append(m)
        return MonomialIdeal(tuple(keep))

    def contains(self, m):
        return any(_divides(g, m) for g in self.gens)

    @property
    def nvars(self):
        return len(self.gens[0]) if self.gens else 0


class InfiniteStaircaseError(ValueError):
    def __init__(self, variable):
        self.variable = variable
        super().__init__(
            "no pure power of variable %d in the ideal: "
            "infinitely many standard monomials" % variable
        )


def standard_monomials(ideal, nvars=None):
    """All monomials outside a monomial ideal, sorted by (degree, lex).

    Finite exactly when every variable has a pure power inside the ideal;
    otherwise InfiniteStaircaseError tells which direction escapes.
    """
    n = ideal.nvars if nvars is None else nvars
    for i in range(n):
        if not any(
            g[i] > 0 and all(g[j] == 0 for j in range(n) if j != i)
            for g in ideal.gens
        ):
            raise InfiniteStaircaseError(i)
    zero = (0,) * n
    if ideal.contains(zero):
        return ()
    seen = {zero}
    frontier = [zero]
    while frontier:
        m = frontier.pop()
        for i in range(n):
            m2 = m[:i] + (m[i] + 1,) + m[i + 1 :]
            if m2 not in seen and not ideal.contains(m2):
                seen.add(m2)
                frontier.append(m2)
    return tuple(sorted(seen, key=lambda m: (sum(m), m)))


def initial_ideal(gens, weight, tiebreak="lex", verify=True):
    """in_w of the difference-binomial ideal of gens, as a monomial ideal.

    Computes the reduced basis under (weight, tiebreak) and demands strict
    weight separation on every element; a tie means in_w is not monomial and
    raises TiedWeightError.
    """
    order = WeightOrder(weight, tiebreak)
    gb = buchberger(gens, order, verify=verify)
    w = order.weights
    for g in gb:
        lw = sum(wi * e for wi, e in zip(w, g.lead))
        tw = sum(wi * e for wi, e in zip(w, g.trail))
        if lw == tw:
            raise TiedWeightError(
                "weight vector ties %s and %s" % (g.lead, g.trail)
            )
        assert lw > tw, "order produced a lead below its trail"
    return MonomialIdeal.of(g.lead for g in gb), gb


def canonical_order(n):
    return WeightOrder((1,) * n, "lex")


def lattice_ideal(basis, orders=None, order=None, verify=True):
    """Reduced Groebner basis of the ideal of a finite-index lattice.

    basis spans the lattice; orders[i] is the least positive k with
    k*e_i in the lattice (computed if omitted).  Generators are the basis
    differences together with x_i^orders[i] - 1; since each variable is
    invertible modulo those pure relations, every lattice vector's binomial
    is reachable, no saturation needed.
    """
    if not basis:
        raise ValueError("lattice basis is empty")
    n = len(basis[0])
    if orders is None:
        orders = tuple(_axis_order(basis, i) for i in range(n))
    if order is None:
        order = canonical_order(n)
    gens = []
    for v in basis:
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        if plus != minus:
            gens.append((plus, minus))
    for i in range(n):
        e = tuple(orders[i] if j == i else 0 for j in range(n))
        gens.append((e, (0,) * n))
    return buchberger(gens, order, verify=verify)


def saturate_variable(gens, var, grading, verify=True):
    """Reduced basis of (I : x_var^infinity) for a graded difference ideal."""
    order = SaturationOrder(grading, var)
    gb = buchberger(gens, order, verify=verify)
    out = []
    for g in gb:
        c = min(g.lead[var], g.trail[var])
        if c:
            strip = lambda m: m[:var] + (m[var] - c,) + m[var + 1 :]
            out.append(Binomial(strip(g.lead), strip(g.trail)))
        else:
            out.append(g)
    return out


def toric_kernel_ideal(columns, weight, verify=True):
    """Reduced Groebner basis of the toric ideal of the given columns.

    columns live in Z^d; variable j corresponds to column j.  weight is a
    functional with weight . column > 0 for every column, which grades the
    kernel ideal positively and lets saturation go variable by variable.
    Output is canonical under (grading, lex).
    """
    k = len(columns)
    grading = tuple(
        sum(Fraction(w) * c for w, c in zip(weight, col)) for col in columns
    )
    assert all(g > 0 for g in grading), "weight must be positive on every column"
    kernel = integer_kernel(transpose(columns))
    gens = []
    for v in kernel:
        plus = tuple(max(x, 0) for x in v)
        minus = tuple(max(-x, 0) for x in v)
        if plus != minus:
            gens.append(Binomial(plus, minus))
    if not gens:
        return ()
    for var in range(k):
        gens = saturate_variable(gens, var, grading, verify=verify)
    return buchberger(gens, WeightOrder(grading, "lex"), verify=verify)


def reduced_gb_equal(gens_a, gens_b, n, verify=True):
    """Do two generating sets span the same ideal?  Compare their unique
    reduced bases under the canonical order."""
    order = canonical_order(n)
    return buchberger(gens_a, order, verify=verify) == buchberger(
        gens_b, order, verify=verify
    )
