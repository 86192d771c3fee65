"""Counting Cayley (di)graphs on ``A`` up to isomorphism.

Two counts are kept apart:

* ``orbit_count`` is the number of ``Aut(A)``-orbits on connection sets,
  evaluated with Burnside's lemma;
* ``iso_classes`` is the number of distinct canonical forms.

Conjugate sets give isomorphic digraphs, so ``iso_classes <= orbit_count``.
For DRRs the two notions coincide, which the census checks orbit by orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abelian import AbelianGroup
from .autsolver import ColoredDigraph, search
from .bits import permute_mask
from .cayley import ConnectionSet, _check_mode, build
from .census import exact_census
from .classify import group_data
from .errors import ClaimViolation, InvalidInput
from .permgroup import closure, group_order, orbit


def _orbit_total(perms, n) -> int:
    seen = 0
    count = 0
    for a in range(n):
        if seen >> a & 1:
            continue
        count += 1
        for b in orbit(perms, a):
            seen |= 1 << b
    return count


def fixed_subset_count(g: AbelianGroup, phi, inverse_closed_only: bool) -> int:
    """Subsets (inverse-closed ones if asked) mapped onto themselves by ``phi``."""
    gens = [tuple(phi)]
    if inverse_closed_only:
        gens.append(g.iota())
    # the orbits of the whole generated group, enumerated from its elements
    elements = sorted(closure(gens, g.n))
    return 2 ** _orbit_total(elements, g.n)


def orbit_count(g: AbelianGroup, inverse_closed_only: bool = False) -> int:
    """Number of ``Aut(A)``-orbits on subsets of ``A`` (or on inverse-closed ones)."""
    auts = group_data(g).automorphisms
    total = sum(fixed_subset_count(g, phi, inverse_closed_only) for phi in auts)
    q, r = divmod(total, len(auts))
    if r:
        raise ClaimViolation(f"Burnside sum {total} not divisible by |Aut(A)| = {len(auts)}")
    return q


@dataclass
class UnlabeledReport:
    group: AbelianGroup
    mode: str
    orbit_count: int
    iso_classes: int
    good_iso_classes: int
    good_labeled: int
    aut_a_order: int
    good_orbits: int

    @property
    def lower_bound(self) -> Fraction:
        return Fraction(self.good_labeled, self.aut_a_order)

    @property
    def ratio(self) -> float:
        return self.good_iso_classes / self.iso_classes if self.iso_classes else 0.0

    def to_dict(self) -> dict:
        lb = self.lower_bound
        return {
            "group": self.group.spec,
            "mode": self.mode,
            "orbit_count": self.orbit_count,
            "iso_classes": self.iso_classes,
            "good_iso_classes": self.good_iso_classes,
            "lower_bound_num": lb.numerator,
            "lower_bound_den": lb.denominator,
            "ratio": self.ratio,
        }


def unlabeled_census(g: AbelianGroup, mode: str = "digraph", jobs: int = 1,
                     limit: int | None = None) -> UnlabeledReport:
    """Isomorphism classes of all Cayley (di)graphs on ``g`` and of the good ones.

    Good means DRR for digraphs and ``Aut = A x| <inversion>`` for graphs.
    Raises :class:`ClaimViolation` if a class count breaks one of the
    inequalities against labeled counts, or if DRR classes and orbits differ.
    """
    _check_mode(mode)
    census = exact_census(g, mode, jobs=jobs, limit=limit, strict=False)
    a = census.arrays
    reps = a["rep_masks"]
    forms = a["rep_canonical"]
    labels = a["labels"]
    good = a["good"]
    rep_good = [False] * len(reps)
    for i, lab in enumerate(labels):
        if good[i]:
            rep_good[lab] = True

    burnside = orbit_count(g, inverse_closed_only=mode == "graph")
    if burnside != len(reps):
        raise ClaimViolation(f"Burnside gives {burnside} orbits, enumeration gives {len(reps)}")
    classes = set(forms)
    good_forms = [f for f, ok in zip(forms, rep_good) if ok]
    good_classes = set(good_forms)
    aut_a = len(group_data(g).automorphisms)
    good_labeled = int(good.sum())
    report = UnlabeledReport(g, mode, burnside, len(classes), len(good_classes), good_labeled,
                             aut_a, len(good_forms))
    if report.iso_classes > report.orbit_count:
        raise ClaimViolation(f"{report.iso_classes} isomorphism classes exceed {report.orbit_count} orbits")
    if report.good_iso_classes * aut_a < good_labeled:
        raise ClaimViolation(f"{report.good_iso_classes} good classes times |Aut(A)| = {aut_a} "
                             f"is below {good_labeled} good labeled sets")
    if mode == "digraph" and report.good_iso_classes != report.good_orbits:
        raise ClaimViolation(f"{report.good_orbits} DRR orbits fall into {report.good_iso_classes} "
                             "isomorphism classes")
    return report


def drr_conjugacy_check(g: AbelianGroup, s1: ConnectionSet, s2: ConnectionSet) -> bool:
    """Whether two DRRs on ``g`` are isomorphic.

    Also checks that this matches the existence of a group automorphism
    carrying ``s1`` onto ``s2``.
    """
    r1 = search(ColoredDigraph.from_cayley(build(g, s1)))
    r2 = search(ColoredDigraph.from_cayley(build(g, s2)))
    for s, r in ((s1, r1), (s2, r2)):
        if group_order(r.generators, g.n) != g.n:
            raise InvalidInput(f"Cay(A, {{{s}}}) is not a DRR")
    iso = r1.canonical == r2.canonical
    conj = any(permute_mask(s1.members, phi) == s2.members for phi in group_data(g).automorphisms)
    if iso != conj:
        raise ClaimViolation(f"isomorphic={iso} but conjugate={conj} for {{{s1}}} and {{{s2}}}", s2.members)
    return iso

