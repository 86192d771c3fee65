"""Counting Cayley digraphs up to isomorphism.

Conjugating S by a group automorphism gives an isomorphic digraph, so the
number of isomorphism classes is at most the number of Aut(A)-orbits on
subsets.  For DRRs the two coincide, so the unlabeled DRR count is at least
the labeled count divided by |Aut(A)|.

Run: python demos/05_unlabeled_counts.py
"""

from cayleygrr import abelian_groups_of_order, unlabeled_census

print(f"{'group':<10}{'orbits':>8}{'classes':>9}{'DRR classes':>13}{'labeled/|Aut|':>15}")
for n in range(3, 11):
    for g in abelian_groups_of_order(n):
        r = unlabeled_census(g, "digraph")
        print(f"{g.name:<10}{r.orbit_count:>8}{r.iso_classes:>9}{r.good_iso_classes:>13}"
              f"{str(r.lower_bound):>15}")
