"""Groebner fan, clusters, and a universal family for a small action.

For the order-3 subgroup of SL(3) the fan of the orbit ideal has three
maximal cones, the monomial clusters are exactly the three initial
ideals, and each chart carries a one-relation-free universal family.
"""

from ghilb.cases import SL3, load_group
from ghilb.fan import enumerate_fan
from ghilb.groebner import lattice_ideal
from ghilb.hilb import (
    chart_semigroup,
    coherent_membership,
    enumerate_monomial_clusters,
    is_g_cluster,
    universal_family,
)
from ghilb.serialize import format_family, format_fan

chars = load_group(SL3)
gens = lattice_ideal(chars.lattice)

fan = enumerate_fan(gens, chars=chars)
print(format_fan(fan, chars.names))

clusters = enumerate_monomial_clusters(chars)
verdicts = [coherent_membership(c, gens) for c in clusters]
print()
print("%d clusters, %d on the coherent component"
      % (len(clusters), sum(hasattr(v, "witness") for v in verdicts)))

chart = chart_semigroup(is_g_cluster(fan[0].initial, chars), fan[0].weight)
print()
print(format_family(universal_family(chart)))
