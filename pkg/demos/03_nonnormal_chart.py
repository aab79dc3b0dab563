"""A chart whose semigroup misses a lattice point of its own cone.

For this rank-625 elementary abelian group the chart at the weight below
has 46 semigroup generators whose Hilbert basis (inside the degree
kernel) contains a vector that is not a nonnegative integer combination
of the generators.  The chart is therefore not normal, and neither is
the scheme it covers.  Takes around half a minute: the Groebner basis,
the Hilbert basis completion, and the membership descents are all exact.
"""

from ghilb.cases import G5555, G5555_WEIGHT, load_group
from ghilb.hilb import check_normality
from ghilb.serialize import format_normality

chars = load_group(G5555)
report = check_normality(chars, weights=[G5555_WEIGHT], lattice="M")
print(format_normality(report))
