"""Build a Cayley digraph, look at its arcs, and ask how symmetric it is.

Run: python demos/01_first_cayley_digraph.py
"""

from cayleygrr import classify, make_group, parse_set
from cayleygrr.cayley import build

# Z_3 with S = {1}: an arc x -> y whenever x - y lies in S, so each vertex
# points at its predecessor.  That is a directed triangle.
g = make_group([3])
s = parse_set(g, "1")
print("arcs of Cay(Z3, {1}):", sorted(build(g, s).arcs()))

# The translations x -> x + a are always automorphisms.  A DRR is a digraph
# with no others.
print("Cay(Z3, {1}):", classify(g, s).to_dict())

# Add the inverse and the triangle becomes undirected; the reflection
# x -> -x now joins the translations, so the graph is no longer a DRR, but
# its group is A x| <inversion>, the smallest a graph on Z3 can have.
s = parse_set(g, "1,2")
print("Cay(Z3, {1,2}) as a graph:", classify(g, s, "graph").to_dict())

# On Z5, a single generator gives a directed 5-cycle: a DRR.  The two
# bad-family detectors find nothing to blame.
g = make_group([5])
r = classify(g, parse_set(g, "1"))
print(f"Cay(Z5, {{1}}): |Aut| = {r.aut_order}, DRR = {r.is_drr}, gw = {r.gw}, nor = {r.nor}")
