"""Monomial clusters, membership in the coherent component, chart data.

This module glues the rest of the package together.  A monomial ideal is
promoted to a cluster when its staircase carries every character exactly
once; membership in the coherent component is decided by strict separation
over generator pairs with a Groebner recheck; each chart then contributes a
difference semigroup whose saturation is measured with Hilbert bases, which
is the whole normality scan.
"""

from dataclasses import dataclass
from fractions import Fraction

from .cones import hilbert_basis, semigroup_contains
from .fan import BudgetExceeded, enumerate_fan, groebner_cone, interior_weight
from .groebner import (
    InfiniteStaircaseError,
    MonomialIdeal,
    TiedWeightError,
    WeightOrder,
    buchberger,
    initial_ideal,
    lattice_ideal,
    standard_monomials,
    toric_kernel_ideal,
)
from .group import character_group
from .intlin import hermite_basis
from .lp import strict_separation


class NotACluster(ValueError):
    def __init__(self, message, character=None, count=None):
        super().__init__(message)
        self.character = character
        self.count = count


class DegenerateWitness(ValueError):
    """The weight fails to be strictly positive on a chart generator."""

    def __init__(self, gen, value):
        super().__init__(
            "witness is not strictly positive on %s (value %s)" % (gen, value)
        )
        self.gen = gen
        self.value = value


@dataclass(frozen=True)
class GCluster:
    """Monomial ideal whose staircase holds each character exactly once."""

    chars: object
    ideal: MonomialIdeal
    std: tuple  # std[k] = the standard exponent of character k

    def standard_for(self, u):
        """Standard exponent sharing the character of x^u."""
        return self.std[self.chars.deg(u)]


def is_g_cluster(ideal, chars):
    """Promote a monomial ideal to a GCluster or explain why it is not one."""
    if not isinstance(ideal, MonomialIdeal):
        ideal = MonomialIdeal.of(ideal)
    try:
        std = standard_monomials(ideal, chars.n)
    except InfiniteStaircaseError as err:
        raise NotACluster(
            "staircase is infinite in direction %d" % (err.variable + 1)
        ) from None
    by_char = {}
    for m in std:
        by_char.setdefault(chars.deg(m), []).append(m)
    for k in range(chars.r):
        got = by_char.get(k, ())
        if len(got) != 1:
            raise NotACluster(
                "character %s carries %d standard monomials, want exactly 1"
                % (chars.label(k), len(got)),
                character=k,
                count=len(got),
            )
    table = tuple(by_char[k][0] for k in range(chars.r))
    assert table[chars.trivial] == (0,) * chars.n
    return GCluster(chars=chars, ideal=ideal, std=table)


def generator_pairs(cluster):
    """Difference vectors (generator) - (standard mate), deduplicated."""
    out = set()
    for g in cluster.ideal.gens:
        s = cluster.standard_for(g)
        out.add(tuple(a - b for a, b in zip(g, s)))
    return tuple(sorted(out))


@dataclass(frozen=True)
class OnCoherent:
    """Membership verdict with a recheckable weight witness."""

    witness: tuple
    pairs: tuple


@dataclass(frozen=True)
class OffComponent:
    """Farkas-style refutation: nonnegative multipliers on the pair vectors
    whose combination is componentwise nonpositive, so no weight can be
    strictly positive on all of them."""

    pairs: tuple
    multipliers: tuple
    truncated: bool = False

    def combination(self):
        n = len(self.pairs[0])
        return tuple(
            sum(m * d[j] for m, d in zip(self.multipliers, self.pairs))
            for j in range(n)
        )


def _settled_witness(ideal, w, want):
    """Return a weight with in_w equal to want, nudging w off walls, or None."""
    try:
        got, _ = initial_ideal(ideal, w)
        return tuple(w) if got.gens == want else None
    except TiedWeightError:
        pass
    # w ties some binomial beyond the pair set; refine by lex, and if the
    # refined leads match, any interior weight of their cone settles it
    gb = buchberger(ideal, WeightOrder(w, "lex"))
    if MonomialIdeal.of(g.lead for g in gb).gens != want:
        return None
    w2 = interior_weight(groebner_cone(gb))
    got, _ = initial_ideal(ideal, w2)
    assert got.gens == want
    return w2


def _truncated_pairs(cluster):
    """Every (ideal monomial) - (standard mate) difference up to a degree cap.

    The cap is max generator degree plus max standard degree; this is a
    heuristic depth for the fallback stage, not a proven bound.
    """
    n = cluster.chars.n
    cap = max(sum(g) for g in cluster.ideal.gens) + max(sum(s) for s in cluster.std)
    out = set()
    stack = [(0,) * n]
    seen = {(0,) * n}
    while stack:
        m = stack.pop()
        if cluster.ideal.contains(m):
            s = cluster.standard_for(m)
            out.add(tuple(a - b for a, b in zip(m, s)))
        if sum(m) < cap:
            for i in range(n):
                m2 = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if m2 not in seen:
                    seen.add(m2)
                    stack.append(m2)
    return tuple(sorted(out))


def coherent_membership(cluster, ideal):
    """Decide whether the cluster is an initial ideal of the orbit ideal.

    Strict positivity on the generator pairs is necessary for any witness,
    so an infeasible pair system refutes membership outright.  A feasible
    witness is rechecked by Groebner computation.  If the recheck ever
    refuted a pair witness the code would fall back to the truncated full
    pair system and say so on the verdict; the colength argument (both
    ideals have one standard monomial per character, and pair separation
    forces containment) makes that branch unreachable, but it is kept
    rather than trusted silently.
    """
    want = cluster.ideal.gens
    pairs = generator_pairs(cluster)
    sep = strict_separation(pairs)
    if sep.witness is None:
        return OffComponent(pairs=pairs, multipliers=sep.multipliers)
    w = _settled_witness(ideal, sep.witness, want)
    if w is not None:
        return OnCoherent(witness=w, pairs=pairs)
    full = _truncated_pairs(cluster)
    sep = strict_separation(full)
    if sep.witness is None:
        return OffComponent(pairs=full, multipliers=sep.multipliers, truncated=True)
    w = _settled_witness(ideal, sep.witness, want)
    assert w is not None, "truncated pair witness still unsettled"
    return OnCoherent(witness=w, pairs=full)


def enumerate_monomial_clusters(chars, budget=100000):
    """All monomial ideals whose staircase carries each character once.

    Staircases grow one exponent at a time in (degree, lex) order, so every
    downward closed set is reached along exactly one branch.  A character
    already holding its standard monomial blocks further additions in that
    degree, which prunes hard.  budget caps the search nodes.
    """
    n, r = chars.n, chars.r
    key = lambda m: (sum(m), m)
    zero = (0,) * n
    found = []
    state = {"nodes": 0}

    def corners(std_set):
        out = set()
        for m in std_set:
            for i in range(n):
                m2 = m[:i] + (m[i] + 1,) + m[i + 1 :]
                if m2 in std_set or m2 in out:
                    continue
                if all(
                    m2[j] == 0 or m2[:j] + (m2[j] - 1,) + m2[j + 1 :] in std_set
                    for j in range(n)
                ):
                    out.add(m2)
        return sorted(out, key=key)

    def grow(std_set, last, used):
        state["nodes"] += 1
        if state["nodes"] > budget:
            raise BudgetExceeded(budget)
        if len(std_set) == r:
            ideal = MonomialIdeal.of(corners(std_set))
            table = [None] * r
            for m in std_set:
                table[chars.deg(m)] = m
            found.append(GCluster(chars=chars, ideal=ideal, std=tuple(table)))
            return
        for m in corners(std_set):
            if key(m) <= key(last):
                continue
            k = chars.deg(m)
            if k in used:
                continue
            grow(std_set | {m}, m, used | {k})

    grow(frozenset([zero]), zero, frozenset([chars.trivial]))
    found.sort(key=lambda c: c.ideal.gens)
    return tuple(found)


@dataclass(frozen=True)
class ChartSemigroup:
    """Difference semigroup of the chart around a coherent cluster."""

    cluster: GCluster
    gens: tuple
    witness: tuple


def chart_semigroup(cluster, witness):
    gens = generator_pairs(cluster)
    w = tuple(Fraction(x) for x in witness)
    for d in gens:
        val = sum(a * b for a, b in zip(w, d))
        if val <= 0:
            raise DegenerateWitness(d, val)
    return ChartSemigroup(cluster=cluster, gens=gens, witness=tuple(witness))


@dataclass(frozen=True)
class UniversalFamily:
    """Deformed generators over a chart plus relations among the parameters.

    binomials lists (generator exponent, standard exponent, parameter index)
    per ideal generator, meaning x^g - y_k x^s; relations is the toric ideal
    of the parameter vectors in the y variables.
    """

    chart: ChartSemigroup
    binomials: tuple
    relations: tuple


def universal_family(chart):
    cluster = chart.cluster
    index = {d: k for k, d in enumerate(chart.gens)}
    binomials = []
    for g in cluster.ideal.gens:
        s = cluster.standard_for(g)
        d = tuple(a - b for a, b in zip(g, s))
        binomials.append((g, s, index[d]))
    relations = toric_kernel_ideal(chart.gens, chart.witness)
    return UniversalFamily(
        chart=chart, binomials=tuple(binomials), relations=tuple(relations)
    )


@dataclass(frozen=True)
class ChartReport:
    """Saturation data of one chart, per ambient lattice.

    basis_m / missing_m use the degree kernel as ambient lattice, basis_za /
    missing_za the span of the chart generators; a field is None when that
    lattice was not requested.
    """

    cluster: GCluster
    witness: tuple
    gens: tuple
    basis_m: tuple = None
    missing_m: tuple = None
    basis_za: tuple = None
    missing_za: tuple = None

    @property
    def normal(self):
        # the degree kernel is the ambient the charts naturally live in, so
        # it carries the headline; the span verdict is reported alongside
        if self.basis_m is not None:
            return not self.missing_m
        return not self.missing_za


@dataclass(frozen=True)
class NormalityReport:
    chars: object
    charts: tuple
    complete: bool  # False in spot-check mode: only the given weights ran
    mode: str

    @property
    def overall_normal(self):
        return all(c.normal for c in self.charts)


def check_normality(group, weights=None, lattice="both", max_cones=None):
    """Scan charts of the coherent component for nonnormal semigroups.

    weights, when given, restricts the scan to those charts and the report
    is marked incomplete; otherwise the whole fan is walked.  lattice picks
    where saturation is measured: "M" (degree kernel), "ZA" (span of the
    chart generators), or "both".  A chart is normal when its semigroup
    already contains the Hilbert basis of its saturation.
    """
    assert lattice in ("M", "ZA", "both")
    chars = group if hasattr(group, "deg") else character_group(group)
    ideal = lattice_ideal(chars.lattice)
    if weights is None:
        items = [(c.initial, c.weight) for c in enumerate_fan(ideal, chars=chars, max_cones=max_cones)]
        complete = True
    else:
        items = []
        for w in weights:
            j, _ = initial_ideal(ideal, w)
            items.append((j, tuple(w)))
        complete = False

    charts = []
    for j, w in items:
        cluster = is_g_cluster(j, chars)
        chart = chart_semigroup(cluster, w)
        fields = {}
        if lattice in ("M", "both"):
            hb = hilbert_basis(chart.gens, lattice=chars.lattice)
            fields["basis_m"] = hb.vectors
            fields["missing_m"] = tuple(
                z for z in hb if not semigroup_contains(chart.gens, z, grading=w)
            )
        if lattice in ("ZA", "both"):
            span = hermite_basis(chart.gens)
            hb = hilbert_basis(chart.gens, lattice=span)
            fields["basis_za"] = hb.vectors
            fields["missing_za"] = tuple(
                z for z in hb if not semigroup_contains(chart.gens, z, grading=w)
            )
        charts.append(
            ChartReport(cluster=cluster, witness=w, gens=chart.gens, **fields)
        )
    charts.sort(key=lambda c: c.cluster.ideal.gens)
    return NormalityReport(chars=chars, charts=tuple(charts), complete=complete, mode=lattice)
