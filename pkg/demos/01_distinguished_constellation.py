"""Distinguished module for the hard cyclic case.

The slice LP picks a vertex v of the weight polytope; arrows whose
inequality is tight keep their target and the rest degenerate to lone
monomials.  For this theta the optimum keeps 12 of the 33 arrows and the
support quiver is a spanning forest-with-one-extra-arrow on the eleven
characters, acyclic as it must be.
"""

from ghilb.cases import Z11, Z11_THETA, Z11_WEIGHT, load_group
from ghilb.constellation import distinguished_constellation, support_quiver
from ghilb.group import ThetaParam
from ghilb.serialize import format_constellation, format_vector

chars = load_group(Z11)
theta = ThetaParam.parse(Z11_THETA, chars.r)

con = distinguished_constellation(chars, theta, Z11_WEIGHT)
print("objective value:", con.value)
print("v =", format_vector(con.v))
print(format_constellation(con))

quiver = support_quiver(con.rep, expect_acyclic=True)
print("kept arrows:", len(quiver.arrows))
print("characters connected to %s: %d of %d"
      % (chars.label(chars.trivial),
         len(quiver.connected_from_trivial()), chars.r))
