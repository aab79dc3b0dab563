"""A monomial cluster that no weight vector can reach.

The nine-generator ideal below is a genuine cluster for the cyclic group
of order 14 (one standard monomial per character), yet it is not an
initial ideal of the orbit lattice ideal: the three pair vectors it would
have to separate sum to zero, so no weight is positive on all of them.
coherent_membership returns that combination as a certificate.
"""

from ghilb.cases import Z14, load_group, z14_cluster
from ghilb.groebner import MonomialIdeal, lattice_ideal
from ghilb.hilb import coherent_membership, is_g_cluster
from ghilb.serialize import format_ideal, format_membership

chars = load_group(Z14)
cluster = is_g_cluster(MonomialIdeal.of(z14_cluster()), chars)
print("cluster with %d standard monomials:" % len(cluster.std))
print(format_ideal(cluster.ideal.gens, chars.names))

verdict = coherent_membership(cluster, lattice_ideal(chars.lattice))
print()
print(format_membership(verdict))
