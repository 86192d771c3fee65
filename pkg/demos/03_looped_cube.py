"""A graph on Z2 x Z4 that escapes all three bad families.

The graph census on Z2 x Z4 finds 12 inverse-closed sets whose Cayley graph
has more automorphisms than A x| <inversion>, but which are neither
normalized by a group automorphism nor of the product form S' x S''
(generalized wreath graphs are not counted at prime-power order).
The smallest one is the 3-cube with a loop on every vertex.

Run: python demos/03_looped_cube.py
"""

from cayleygrr import classify, exact_census, make_group
from cayleygrr.autsolver import ColoredDigraph, brute_force_automorphisms
from cayleygrr.cayley import ConnectionSet, build
from cayleygrr.classify import ex_fibred_witness

g = make_group([2, 4])
report = exact_census(g, "graph", strict=False)
print("violations:", report.violations)

mask = report.violations[0]["mask"]
s = ConnectionSet(g, mask)
print("S =", [g.decode(a) for a in s.elements], "(coordinates in Z2 x Z4)")

# the n! filter confirms the solver: 48 automorphisms, three times |A x| <inversion>|
auts = brute_force_automorphisms(ColoredDigraph.from_cayley(build(g, s)))
print("brute-force |Aut| =", len(auts))
print("classification:", classify(g, s, "graph").to_dict())

# Without the loops the cube is a product (C minus 0) x {z} and is caught.
loopless = ConnectionSet(g, mask & ~1)
print("without loops:", classify(g, loopless, "graph").to_dict()["ex"])

# Allowing each fibre {c : c + z in S} its own shape covers every gap found.
c, z, tags = ex_fibred_witness(g, s)
print(f"fibred form: C = {c.elements}, Z = {z.elements}, fibre shapes {tags}")
