from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ghilb.lp import (
    EQ,
    GE,
    LE,
    LinearProgram,
    integerize,
    lp_solve,
    strict_separation,
    verify_farkas,
    verify_ray,
    verify_solution,
)
from oracles import polytope_vertices


def test_optimal_vertex():
    lp = LinearProgram.of(
        objective=(1, 1),
        constraints=[((1, 2), GE, 3), ((3, 1), GE, 4)],
        bounds=[(0, None), (0, None)],
    )
    out = lp_solve(lp)
    assert out.status == "optimal"
    assert out.x == (Fraction(1), Fraction(1))
    assert out.value == 2


def test_infeasible_pair():
    # x >= 1 together with -x >= 0 admits no x at all
    lp = LinearProgram.of(
        objective=(0,),
        constraints=[((1,), GE, 1), ((-1,), GE, 0)],
        bounds=[(None, None)],
    )
    out = lp_solve(lp)
    assert out.status == "infeasible"
    m = out.farkas.row_multipliers
    assert m[0] == m[1] > 0
    verify_farkas(lp, out.farkas)


def test_unbounded_ray():
    lp = LinearProgram.of(
        objective=(1,),
        constraints=[((1,), GE, 0)],
        bounds=[(0, None)],
        maximize=True,
    )
    out = lp_solve(lp)
    assert out.status == "unbounded"
    assert out.ray == (Fraction(1),)
    verify_ray(lp, out.ray)


def test_equalities_and_boxes():
    lp = LinearProgram.of(
        objective=(2, 1),
        constraints=[((1, 1), EQ, 5)],
        bounds=[(0, 3), (0, None)],
    )
    out = lp_solve(lp)
    assert out.status == "optimal"
    assert out.value == 5  # push everything into the cheap variable
    assert out.x == (Fraction(0), Fraction(5))

    tight = LinearProgram.of(
        objective=(0, 0),
        constraints=[((1, 1), EQ, 5)],
        bounds=[(0, 1), (0, 1)],
    )
    assert lp_solve(tight).status == "infeasible"


def test_free_variables_both_signs():
    lp = LinearProgram.of(
        objective=(1, 0),
        constraints=[((1, 1), GE, -3), ((1, -1), GE, -7)],
        bounds=[(None, None), (0, 2)],
    )
    out = lp_solve(lp)
    assert out.status == "optimal"
    assert out.value == -5
    verify_solution(lp, out.x)


def test_objective_scaling_keeps_vertex():
    cons = [((1, 2), GE, 3), ((3, 1), GE, 4), ((1, 1), LE, 10)]
    base = LinearProgram.of((2, 5), cons, [(0, None)] * 2)
    scaled = LinearProgram.of(
        (Fraction(2 * 7, 3), Fraction(5 * 7, 3)), cons, [(0, None)] * 2
    )
    a, b = lp_solve(base), lp_solve(scaled)
    assert a.status == b.status == "optimal"
    assert a.x == b.x
    assert b.value == a.value * Fraction(7, 3)


Z14_PAIRS = [
    (-3, 1, 2),
    (-2, 0, 4),
    (-1, 2, 1),
    (0, 4, -2),
    (1, -1, 2),
    (1, 2, -3),
    (2, -3, 1),
    (2, 1, -1),
    (4, -2, 0),
]


def test_separation_certificate_is_forced():
    # the three coordinate-sum-zero vectors sum to zero; every other pair has
    # coordinate sum 2, so no witness exists and the certificate is unique
    res = strict_separation(Z14_PAIRS)
    assert res.witness is None
    want = tuple(1 if sum(d) == 0 else 0 for d in Z14_PAIRS)
    assert res.multipliers == want
    combo = [
        sum(m * d[j] for m, d in zip(res.multipliers, Z14_PAIRS)) for j in range(3)
    ]
    assert combo == [0, 0, 0]


def test_separation_witness_when_triple_removed():
    pairs = [d for d in Z14_PAIRS if sum(d) != 0]
    res = strict_separation(pairs)
    assert res.multipliers is None
    w = res.witness
    assert all(isinstance(c, int) and c >= 0 for c in w)
    assert all(sum(a * b for a, b in zip(w, d)) > 0 for d in pairs)


def test_separation_degenerate_pairs():
    res = strict_separation([(0, 0)])
    assert res.multipliers == (1,)
    res = strict_separation([(1, 0), (0, 1)])
    assert res.witness is not None


def test_integerize():
    assert integerize((Fraction(1, 2), Fraction(1, 3))) == (3, 2)
    assert integerize((Fraction(2), Fraction(4))) == (1, 2)
    assert integerize((Fraction(0), Fraction(0))) == (0, 0)
    assert integerize((Fraction(-1, 2), Fraction(3, 2))) == (-1, 3)


coeff = st.integers(min_value=-3, max_value=3)


@st.composite
def random_lp(draw):
    n = draw(st.integers(min_value=2, max_value=3))
    nrows = draw(st.integers(min_value=1, max_value=4))
    rows = []
    for _ in range(nrows):
        coeffs = tuple(draw(coeff) for _ in range(n))
        rel = draw(st.sampled_from([GE, LE, EQ]))
        rhs = draw(st.integers(min_value=-4, max_value=4))
        rows.append((coeffs, rel, rhs))
    obj = tuple(draw(coeff) for _ in range(n))
    up = draw(st.integers(min_value=1, max_value=4))
    box = [(0, up)] * n
    return obj, rows, box


@settings(max_examples=120, deadline=None)
@given(random_lp())
def test_against_vertex_enumeration(data):
    obj, rows, box = data
    lp = LinearProgram.of(obj, rows, box)
    out = lp_solve(lp)
    verts = polytope_vertices(rows, box)
    if out.status == "infeasible":
        assert verts == []
    else:
        assert out.status == "optimal"  # a box region cannot be unbounded
        best = min(sum(c * v for c, v in zip(obj, x)) for x in verts)
        assert out.value == best


@settings(max_examples=60, deadline=None)
@given(
    st.lists(
        st.tuples(coeff, coeff, coeff).map(tuple), min_size=1, max_size=6
    )
)
def test_separation_dichotomy(pairs):
    res = strict_separation(pairs)
    if res.witness is not None:
        assert all(sum(a * b for a, b in zip(res.witness, d)) > 0 for d in pairs)
        assert all(c >= 0 for c in res.witness)
    else:
        mult = res.multipliers
        assert all(m >= 0 for m in mult) and any(m > 0 for m in mult)
        combo = [sum(m * d[j] for m, d in zip(mult, pairs)) for j in range(3)]
        assert all(c <= 0 for c in combo)
