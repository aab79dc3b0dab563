"""Bundled case studies.

Three worked examples exercise every feature end to end: a cyclic group of
order 11 with a hand-checkable distinguished representation, the order-14
cyclic group whose Hilbert scheme of clusters is reducible, and a rank-four
elementary abelian 5-group whose chart semigroup fails normality.  The raw
data lives here as display text so the test suite can compare computed
output against it character for character.
"""

from importlib import resources

from .group import character_group, parse_group
from .serialize import parse_binomial_ideal, parse_monomial_ideal


def group_text(name):
    return (resources.files("ghilb") / "data" / (name + ".grp")).read_text()


def load_group(name):
    return character_group(parse_group(group_text(name)))


# --- cyclic order 11, generator weights (1, 2, 8) -------------------------

Z11 = "z11"
Z11_THETA = "1,1,1,1,-7,-9,1,1,1,8,1"
Z11_WEIGHT = (10, 7, 6)
Z11_OPTIMUM = -237
# module generators x_i e[r] keeping their trailing term, as (i, r) with
# i the 1-based variable and r the character index; the other 21 of the
# 33 generators collapse to the lone monomial x_i e[r]
Z11_KEPT = frozenset(
    [
        (2, 0),
        (3, 0),
        (2, 1),
        (2, 2),
        (2, 3),
        (2, 6),
        (3, 6),
        (3, 7),
        (3, 8),
        (2, 9),
        (3, 9),
        (3, 10),
    ]
)

# --- cyclic order 14, generator weights (1, 9, 11) ------------------------

Z14 = "z14"
Z14_NAMES = ("x1", "x2", "x3")
Z14_CLUSTER = """<
  x2^2*x3, x1*x3^2, x1*x2^2, x1^2*x2, x2*x3^2, x1^2*x3, x2^4, x3^4, x1^4
>"""
Z14_PRESENTATION = """<
  x1^14 - 1, x2 - x1^9, x3 - x1^11
>"""
# the three generator/standard pairs whose difference vectors sum to zero
Z14_CERTIFICATE = (
    ((2, 0, 1), (0, 3, 0)),
    ((0, 1, 2), (3, 0, 0)),
    ((1, 2, 0), (0, 0, 3)),
)

# --- elementary abelian (Z/5)^4 on six variables --------------------------

G5555 = "g5555"
G5555_NAMES = ("a", "b", "c", "d", "e", "f")
G5555_WEIGHT = (22, 10, 16, 50, 31, 21)

G5555_LATTICE_IDEAL = """<
  f^5 - 1, e^2*f^3 - b^4*d, e^4*f - b^3*d^2, e^5 - 1, d*f^2 - b*e^2,
  d*e^3 - b*f^3, d^2*e - b^2*f, d^3 - b^3*e*f^4,
  c*e^3 - a*b*f^2, c*d*e - a*b^2,
  c^2*e*f - a^2*b^2, c^3*f^4 - a^3*b^3*e, c^3*d^2 - a^3*f^2,
  c^4*d - a^4*f, c^5 - 1,
  b*e^2*f^2 - a^4*c, b*d*e^2*f - a^3*c^2, b*c^2*d^2 - a^2*e^3,
  b^2*e^4 - a^3*c^2*f, b^2*c*d^2 - a*e*f^3, b^3*d*e - a*c^4,
  b^4*e^3 - a*c^4*f^2, b^4*c*f^3 - a*e^2,
  b^5 - 1, a*e^4 - b^3*c*d, a*d - c*f, a*c^4*e^2 - b^4*f^3,
  a*e^2*f^2 - b^4*c,
  a*b*e^2 - c*f^3, a*b*c^4*f^2 - e^3, a*b^2*c^4 - d*e,
  a*b^3*e*f^3 - c*d^2, a^2*f^4 - b^3*c^2*e, a^2*e*f^2 - b^2*c^2*d,
  a^2*c^3 - b^3*e*f, a^3*e*f - b^2*c^3, a^3*e^3 - b*c^3*d*f,
  a^3*c^2*f^2 - d^2, a^3*c^2*e - b^2*f^4, a^3*b^3*c^2*f - e^4,
  a^3*b^4*c^2 - d*e^2*f,
  a^4*f^3 - b*c^4*e^2, a^4*c*f - d, a^4*c*e^2 - b^4*d^2*f,
  a^4*b^4*c - e^2*f^2, a^5 - 1
>"""

G5555_CLUSTER = """<
  f^5, e^2*f^3, e^4*f, e^5, d*f^2, d*e^3, d^2*e, d^3, c*e^3, c*d*e,
  c^2*e*f, c^3*f^4, c^3*d^2, c^4*d, c^5,
  b*e^2*f^2, b*d*e^2*f, b*c^2*d^2, b^2*e^4, b^2*c*d^2, b^3*d*e,
  b^4*e^3, b^4*c*f^3, b^5, a*e^2*f^2, a*e^4, a*d,
  a*c^4*e^2, a*b*e^2, a*b*c^4*f^2, a*b^2*c^4, a*b^3*e*f^3, a^2*f^4,
  a^2*e*f^2, a^2*c^3, a^3*e*f, a^3*e^3,
  a^3*c^2*f^2, a^3*c^2*e, a^3*b^3*c^2*f, a^3*b^4*c^2, a^4*f^3,
  a^4*c*f, a^4*c*e^2, a^4*b^4*c, a^5
>"""

G5555_HILBERT_BASIS = (
    (0, -3, 0, 3, -1, -4),
    (-3, -3, 3, 0, -1, 4),
    (-4, 0, 4, 1, 0, -1),
    (-2, 1, 2, 2, -3, 0),
    (-1, 4, -4, 0, 3, -2),
    (2, -2, -2, -1, 1, 2),
    (3, 4, 2, -1, -2, -1),
    (4, -1, -4, 0, -2, 3),
    (4, -4, 1, -2, 2, -1),
    (3, 2, -3, 1, -1, -2),
)
G5555_OUTSIDE = (3, 2, -3, 1, -1, -2)

# --- cyclic order 3 inside SL(3) ------------------------------------------

SL3 = "sl3"


def z14_cluster():
    return parse_monomial_ideal(Z14_CLUSTER, Z14_NAMES)


def z14_presentation():
    return parse_binomial_ideal(Z14_PRESENTATION, Z14_NAMES)


def g5555_lattice_ideal():
    return parse_binomial_ideal(G5555_LATTICE_IDEAL, G5555_NAMES)


def g5555_cluster():
    return parse_monomial_ideal(G5555_CLUSTER, G5555_NAMES)
