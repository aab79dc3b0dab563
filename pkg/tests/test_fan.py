import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ghilb.cases import (
    G5555_WEIGHT,
    Z11_WEIGHT,
    load_group,
    z14_cluster,
)
from ghilb.fan import (
    BudgetExceeded,
    FanCone,
    enumerate_fan,
    groebner_cone,
    interior_weight,
)
from ghilb.groebner import (
    MonomialIdeal,
    TiedWeightError,
    initial_ideal,
    lattice_ideal,
    standard_monomials,
)
from ghilb.intlin import kernel_mod


def test_single_cone():
    fan = enumerate_fan(lattice_ideal(((2,),)))
    assert len(fan) == 1
    assert fan[0].initial.gens == ((2,),)
    assert fan[0].cone.inequalities == ((1,),)


def test_sl3_fan_is_the_three_charts():
    chars = load_group("sl3")
    fan = enumerate_fan(lattice_ideal(chars.lattice), chars=chars)
    assert [f.initial.gens for f in fan] == [
        ((0, 0, 1), (0, 1, 0), (3, 0, 0)),
        ((0, 0, 1), (1, 0, 0), (0, 3, 0)),
        ((0, 1, 0), (1, 0, 0), (0, 0, 3)),
    ]
    for f in fan:
        assert f.cone.contains(f.weight, strict=True)


def test_fan_budget():
    chars = load_group("sl3")
    with pytest.raises(BudgetExceeded):
        enumerate_fan(lattice_ideal(chars.lattice), max_cones=2)


def test_fan_partitions_generic_weights():
    chars = load_group("sl3")
    gens = lattice_ideal(chars.lattice)
    fan = enumerate_fan(gens)
    rng = random.Random(7)
    for _ in range(60):
        w = tuple(rng.randint(1, 40) for _ in range(3))
        strict = [f for f in fan if f.cone.contains(w, strict=True)]
        loose = [f for f in fan if f.cone.contains(w)]
        assert len(loose) >= 1
        assert len(strict) <= 1
        try:
            j, _ = initial_ideal(gens, w)
        except TiedWeightError:
            assert not strict
            continue
        assert len(strict) == 1 and strict[0].initial == j


def test_z14_fan_misses_the_reducible_cluster():
    chars = load_group("z14")
    gens = lattice_ideal(chars.lattice)
    fan = enumerate_fan(gens, chars=chars)
    outside = MonomialIdeal.of(z14_cluster())
    assert all(f.initial != outside for f in fan)
    assert len(fan) == 33


def test_groebner_cone_contains_its_weight():
    for name, w in (("z11", Z11_WEIGHT), ("g5555", G5555_WEIGHT)):
        chars = load_group(name)
        gens = lattice_ideal(chars.lattice)
        _, gb = initial_ideal(gens, w)
        cone = groebner_cone(gb)
        assert cone.contains(w, strict=True)
        assert cone.contains(interior_weight(cone), strict=True)


@settings(max_examples=8, deadline=None)
@given(st.integers(2, 6), st.tuples(st.integers(0, 5), st.integers(0, 5), st.integers(0, 5)))
def test_fan_of_random_cyclic_group(m, col):
    basis = kernel_mod((col,), (m,), n=3)
    gens = lattice_ideal(basis)
    fan = enumerate_fan(gens)
    assert fan == tuple(sorted(fan, key=lambda f: f.initial.gens))
    size = None
    for f in fan:
        std = standard_monomials(f.initial)
        if size is None:
            size = len(std)
        assert len(std) == size  # every initial ideal has index-many standards
        assert f.cone.contains(f.weight, strict=True)
    # witnesses of distinct cones never land in each other's interior
    for f in fan:
        strict = [g for g in fan if g.cone.contains(f.weight, strict=True)]
        assert strict == [f]
