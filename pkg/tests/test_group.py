import pytest

from ghilb.group import (
    GroupParseError,
    ThetaParam,
    character_group,
    format_group,
    parse_group,
    quiver_matrices,
    validate_theta_ghilb,
)

Z11_DOC = """
# cyclic of order 11 inside GL(3)
n = 3
gen 11 : 1 2 8
"""

Z14_DOC = "n = 3\ngen 14 : 1 9 11\n"

G5555_DOC = """
n = 6
names = a b c d e f
gen 5 : 1 1 1 1 1 1
gen 5 : 0 1 0 3 4 3
gen 5 : 3 2 4 2 1 1
gen 5 : 1 0 1 0 0 0
"""

TRIVIAL_DOC = "n = 2\n"


def test_parse_group_basic():
    spec = parse_group(Z11_DOC)
    assert spec.n == 3
    assert spec.generators == ((11, (1, 2, 8)),)
    assert spec.names == ("x1", "x2", "x3")

    spec5 = parse_group(G5555_DOC)
    assert spec5.n == 6
    assert len(spec5.generators) == 4
    assert spec5.names == ("a", "b", "c", "d", "e", "f")

    triv = parse_group(TRIVIAL_DOC)
    assert triv.generators == ()


def test_parse_group_roundtrip():
    for doc in (Z11_DOC, Z14_DOC, G5555_DOC, TRIVIAL_DOC):
        spec = parse_group(doc)
        assert parse_group(format_group(spec)) == spec


def test_parse_group_errors():
    with pytest.raises(GroupParseError, match="line 1"):
        parse_group("gen 5 : 1 2\nn = 2\n")  # gen before n
    with pytest.raises(GroupParseError, match="modulus"):
        parse_group("n = 2\ngen 0 : 1 1\n")
    with pytest.raises(GroupParseError, match="expected 2 exponents"):
        parse_group("n = 2\ngen 3 : 1 1 1\n")
    with pytest.raises(GroupParseError):
        parse_group("n = two\n")
    with pytest.raises(GroupParseError):
        parse_group("")


def test_character_group_z11():
    chars = character_group(parse_group(Z11_DOC))
    assert chars.r == 11
    # one-generator group: element j is the class j character
    assert chars.elements == tuple((j,) for j in range(11))
    assert chars.rho == (1, 2, 8)
    assert chars.orders == (11, 11, 11)
    assert chars.invariants == (11,)
    # deg is a homomorphism into G*
    assert chars.deg((1, 1, 0)) == 3
    assert chars.deg((0, 0, 0)) == 0
    assert chars.deg((1, 1, 1)) == 0  # 1+2+8 = 11
    assert chars.deg((-1, 0, 0)) == 10


def test_character_group_sizes():
    assert character_group(parse_group(Z14_DOC)).r == 14
    assert character_group(parse_group(G5555_DOC)).r == 625
    assert character_group(parse_group(TRIVIAL_DOC)).r == 1


def test_character_group_g5555():
    chars = character_group(parse_group(G5555_DOC))
    assert chars.orders == (5,) * 6
    assert chars.invariants == (5, 5, 5, 5)
    assert chars.names == ("a", "b", "c", "d", "e", "f")


def test_deg_homomorphism_property():
    import random

    rng = random.Random(3)
    chars = character_group(parse_group(G5555_DOC))
    for _ in range(50):
        u = tuple(rng.randrange(-4, 5) for _ in range(6))
        v = tuple(rng.randrange(-4, 5) for _ in range(6))
        lhs = chars.deg(tuple(a + b for a, b in zip(u, v)))
        prod = tuple(
            (a + b) % m
            for a, b, m in zip(
                chars.elements[chars.deg(u)], chars.elements[chars.deg(v)], chars.moduli
            )
        )
        assert chars.elements[lhs] == prod


def test_quiver_matrices_trivial():
    chars = character_group(parse_group("n = 1\n"))
    qm = quiver_matrices(chars)
    assert qm.B == ((0,),)
    assert qm.C == ((0,), (1,))


def test_quiver_matrices_z2():
    chars = character_group(parse_group("n = 1\ngen 2 : 1\n"))
    qm = quiver_matrices(chars)
    # column order: (rho0, x) then (rho1, x)
    assert qm.B == ((1, -1), (-1, 1))
    assert qm.column_index == {(0, 0): 0, (1, 0): 1}


def test_quiver_matrices_z11_structure():
    chars = character_group(parse_group(Z11_DOC))
    qm = quiver_matrices(chars)
    cols = list(zip(*qm.B))
    assert len(cols) == 33
    assert len(set(cols)) == 33
    for col in cols:
        assert sorted(col) == [-1] + [0] * 9 + [1]
        assert sum(col) == 0
    # lower block of C holds the variable labels
    for c in range(33):
        label_rows = [qm.C[11 + i][c] for i in range(3)]
        assert label_rows == [1 if i == c % 3 else 0 for i in range(3)]


def test_theta_parsing_and_chamber():
    chars = character_group(parse_group(Z11_DOC))
    hard = ThetaParam.parse("1,1,1,1,-7,-9,1,1,1,8,1", chars.r)
    assert sum(hard.values) == 0
    assert not validate_theta_ghilb(hard)

    ghilb = ThetaParam.of((-10,) + (1,) * 10)
    assert validate_theta_ghilb(ghilb)

    zero = ThetaParam.of((0,) * 11)
    assert not validate_theta_ghilb(zero)

    with pytest.raises(ValueError, match="sum"):
        ThetaParam.parse("1,2,3", 3)
    with pytest.raises(ValueError, match="entries"):
        ThetaParam.parse("1,-1", 3)
    frac = ThetaParam.parse("-1/2,1/4,1/4", 3)
    assert validate_theta_ghilb(frac)
