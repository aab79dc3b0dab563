from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ghilb.cones import (
    Cone,
    InvalidGradingError,
    NotPointedError,
    extreme_rays,
    facets,
    hilbert_basis,
    positive_functional,
    semigroup_contains,
)
from ghilb.lp import EQ, LinearProgram, lp_solve


def test_extreme_rays_plane():
    rays = extreme_rays([(1, 0), (1, 1), (0, 1), (2, 1), (2, 0)])
    assert rays == ((0, 1), (1, 0))


def test_extreme_rays_not_pointed():
    with pytest.raises(NotPointedError) as err:
        extreme_rays([(1, 0), (-1, 0), (0, 1)])
    comb = err.value.combination
    assert sum(comb) > 0 and all(c >= 0 for c in comb)


def test_positive_functional():
    w = positive_functional([(1, 0), (0, 1), (1, 1)])
    assert all(isinstance(c, int) for c in w)
    assert w[0] >= 1 and w[1] >= 1


def test_facets_plane():
    ineqs, eqs = facets([(1, 0), (1, 2)])
    assert eqs == ()
    assert set(ineqs) == {(0, 1), (2, -1)}


def test_low_dimensional_cone():
    cone = Cone.from_rays([(1, 1, 0), (2, 2, 0)])
    assert cone.dim == 1
    assert cone.contains((3, 3, 0))
    assert not cone.contains((1, 1, 1))
    assert not cone.contains((-1, -1, 0))
    assert cone.contains((0, 0, 0))


def test_hilbert_basis_classic():
    hb = hilbert_basis([(2, 1), (1, 2)])
    assert set(hb) == {(2, 1), (1, 2), (1, 1)}
    assert hb.cone_gens == ((2, 1), (1, 2))
    assert hb.lattice == ((1, 0), (0, 1))
    assert len(hb) == 3


def test_hilbert_basis_quadrant():
    assert set(hilbert_basis([(1, 0), (0, 1)])) == {(1, 0), (0, 1)}
    assert set(hilbert_basis([(5, 0), (0, 3)])) == {(1, 0), (0, 1)}


def test_hilbert_basis_sublattice():
    even_first = ((2, 0), (0, 1))
    hb = hilbert_basis([(2, 0), (0, 1)], lattice=even_first)
    assert set(hb) == {(2, 0), (0, 1)}
    checker = ((1, 1), (0, 2))  # x + y even
    hb = hilbert_basis([(2, 0), (0, 2)], lattice=checker)
    assert set(hb) == {(1, 1), (2, 0), (0, 2)}
    with pytest.raises(ValueError):
        hilbert_basis([(1, 0), (0, 1)], lattice=checker)


def test_hilbert_basis_low_dim():
    hb = hilbert_basis([(2, 2, 0)])
    assert hb.vectors == ((1, 1, 0),)


def test_semigroup_contains():
    gens = [(2, 0), (0, 2), (1, 1)]
    ok, deco = semigroup_contains(gens, (3, 1), witness=True)
    assert ok and sorted(deco) == [(1, 1), (2, 0)]
    assert not semigroup_contains(gens, (1, 0))
    assert semigroup_contains(gens, (0, 0))
    # a saturation point the semigroup itself misses
    gens = [(2, 0), (1, 2)]
    assert not semigroup_contains(gens, (1, 1))
    assert (1, 1) in set(hilbert_basis(gens))
    assert semigroup_contains(gens, (3, 2))


def test_semigroup_contains_invalid_grading():
    with pytest.raises(InvalidGradingError):
        semigroup_contains([(1, -1), (-1, 1)], (2, -2))


def test_semigroup_contains_supplied_grading():
    gens = [(2, 0), (1, 2)]
    assert semigroup_contains(gens, (3, 2), grading=(1, 1))
    with pytest.raises(InvalidGradingError):
        semigroup_contains(gens, (3, 2), grading=(1, -1))


def _cone_member_lp(gens, v):
    lp = LinearProgram.of(
        objective=(0,) * len(gens),
        constraints=[
            (tuple(g[j] for g in gens), EQ, v[j]) for j in range(len(v))
        ],
        bounds=[(0, None)] * len(gens),
    )
    return lp_solve(lp).status == "optimal"


vec3 = st.tuples(
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=-3, max_value=3),
    st.integers(min_value=-3, max_value=3),
)


@settings(max_examples=60, deadline=None)
@given(st.lists(vec3, min_size=1, max_size=5), vec3)
def test_cone_membership_matches_lp(gens, v):
    gens = [g for g in gens if any(g)]
    if not gens:
        return
    try:
        cone = Cone.from_rays(gens)
    except NotPointedError:
        lp_zero = _cone_member_lp(gens, (0, 0, 0))
        assert lp_zero  # zero is always a member; nothing else to check
        return
    assert cone.contains(v) == _cone_member_lp(gens, v)


@settings(max_examples=20, deadline=None)
@given(st.lists(vec3, min_size=1, max_size=4))
def test_hilbert_basis_generates_and_is_minimal(gens):
    gens = [g for g in gens if any(g)]
    if not gens:
        return
    try:
        hb = hilbert_basis(gens)
    except NotPointedError:
        return
    cone = Cone.from_rays(gens)
    grading = positive_functional([g for g in gens])
    bound = 3 * max(sum(a * b for a, b in zip(grading, g)) for g in gens)
    # completeness: every cone point of small grade decomposes over the basis
    from itertools import product as iproduct

    span = range(-6, 7)
    for v in iproduct(span, span, span):
        if not any(v) or not cone.contains(v):
            continue
        if sum(a * b for a, b in zip(grading, v)) > bound:
            continue
        assert semigroup_contains(hb, v), v
    # minimality: no member reduces by another inside the cone
    for i, h in enumerate(hb):
        for j, h2 in enumerate(hb):
            if i != j:
                diff = tuple(a - b for a, b in zip(h, h2))
                if any(diff) and cone.contains(diff):
                    # h = h2 + diff with diff a cone lattice point: h reducible
                    assert False, (h, h2)
