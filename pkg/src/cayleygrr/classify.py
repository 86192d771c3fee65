"""DRR / smallest-group decisions and the bad-family detectors.

The detectors are literal predicates:

* generalized wreath: some ``1 < H <= K < A`` with ``S \\ K`` a union of
  ``H``-cosets (an empty union counts);
* normalized: some group automorphism other than the identity (and, for
  graphs, other than inversion) fixes ``S`` setwise;
* exceptional product (graphs): ``A = C x Z`` with ``C`` cyclic of order at
  least 4, ``Z`` elementary abelian (possibly trivial) and
  ``S = S' x S''`` with ``S'`` one of ``{}, {0}, C - {0}, C``.

None of them applies the prime-power convention for the generalized wreath
family; the census layer does that.

``ex_fibred_witness`` is a wider diagnostic family: under the same
decompositions each fibre ``{c : c + z in S}`` must be one of the four allowed
``S'`` values, independently per ``z``.  It strictly contains the product
family and is not part of ``bad``; the census uses it to describe sets that
escape the literal dichotomy (the looped cube on ``Z2 x Z4`` is one).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .abelian import AbelianGroup, Subgroup, automorphism_group, coset_partition, subgroups
from .autsolver import ColoredDigraph, search
from .bits import bits_list, iter_bits, mask_of
from .cayley import ConnectionSet, build, is_inverse_closed
from .errors import InvalidInput
from .permgroup import schreier_sims

SPRIME_TAGS = ("empty", "identity", "complement-of-identity", "all")


@dataclass(frozen=True)
class GroupData:
    """Per-group tables reused by every classification on that group."""

    group: AbelianGroup
    subgroups: tuple
    automorphisms: tuple
    iota: tuple
    gw_pairs: tuple  # (H, K, cosets of H outside K)
    decompositions: tuple  # (C, Z, {a: (c, z)})


@lru_cache(maxsize=None)
def group_data(g: AbelianGroup) -> GroupData:
    subs = tuple(subgroups(g))
    auts = tuple(automorphism_group(g))
    full = (1 << g.n) - 1
    proper = [h for h in subs if 1 < h.order < g.n]
    pairs = []
    for h in proper:
        cosets = coset_partition(g, h)
        for k in proper:
            if h.members & ~k.members:
                continue
            pairs.append((h, k, tuple(c for c in cosets if not c & k.members)))
    decomps = []
    for c in subs:
        if c.order < 4 or g.element_orders[_generator_of_cyclic(g, c)] != c.order:
            continue
        for z in subs:
            if z.order * c.order != g.n or z.members & c.members != 1:
                continue
            if any(g.element_orders[a] > 2 for a in z.elements):
                continue
            split = {}
            for a in c.elements:
                for b in z.elements:
                    split[g.add(a, b)] = (a, b)
            assert len(split) == g.n and full == mask_of(split)
            decomps.append((c, z, split))
    return GroupData(g, subs, auts, g.iota(), tuple(pairs), tuple(decomps))


def _generator_of_cyclic(g, h: Subgroup):
    """An element of maximal order in ``h`` (a generator iff ``h`` is cyclic)."""
    return max(h.elements, key=lambda a: (g.element_orders[a], -a))


# ---- automorphism group of the Cayley digraph ----

@dataclass
class CayleyAut:
    order: int
    generators: list
    bsgs: object
    canonical: object
    nodes: int


def cayley_aut(g: AbelianGroup, s: ConnectionSet) -> CayleyAut:
    digraph = build(g, s)
    res = search(ColoredDigraph.from_cayley(digraph))
    b = schreier_sims(res.generators, degree=g.n)
    return CayleyAut(b.order, res.generators, b, res.canonical, res.nodes)


def aut_order(g: AbelianGroup, s: ConnectionSet) -> int:
    return cayley_aut(g, s).order


def is_drr(g: AbelianGroup, s: ConnectionSet) -> bool:
    return aut_order(g, s) == g.n


def _small_from(g, aut: CayleyAut) -> bool:
    target = 2 * g.n if g.exponent > 2 else g.n
    if aut.order != target:
        return False
    needed = g.regular_generators() + [g.iota()]
    return all(aut.bsgs.contains(p) for p in needed)


def is_small(g: AbelianGroup, s: ConnectionSet) -> bool:
    """Whether ``Aut(Cay(A, S))`` is exactly ``A x| <inversion>``."""
    if not is_inverse_closed(g, s):
        raise InvalidInput(f"connection set {{{s}}} is not inverse-closed")
    return _small_from(g, cayley_aut(g, s))


# ---- detectors ----

def gw_holds(s_mask: int, k: Subgroup, outside_cosets) -> bool:
    rest = s_mask & ~k.members
    return all(not rest & c or rest & c == c for c in outside_cosets)


def gw_witness(g: AbelianGroup, s: ConnectionSet):
    """First ``(H, K)`` (in subgroup order) making ``Cay(A, S)`` a generalized wreath."""
    for h, k, cosets in group_data(g).gw_pairs:
        if gw_holds(s.members, k, cosets):
            return h, k
    return None


def fixes_set(images, s_mask: int) -> bool:
    return all(s_mask >> images[a] & 1 for a in iter_bits(s_mask))


def nor_witnesses(g: AbelianGroup, s: ConnectionSet, exclude_iota: bool = False) -> list:
    """Group automorphisms fixing ``S`` setwise, minus identity (and inversion)."""
    data = group_data(g)
    ident = tuple(range(g.n))
    excluded = {ident, data.iota} if exclude_iota else {ident}
    return [phi for phi in data.automorphisms if phi not in excluded and fixes_set(phi, s.members)]


def ex_witness(g: AbelianGroup, s: ConnectionSet):
    """First decomposition exhibiting ``S = S' x S''``; ``(C, Z, tag, S'' mask)``."""
    if not is_inverse_closed(g, s):
        raise InvalidInput(f"connection set {{{s}}} is not inverse-closed")
    for c, z, split in group_data(g).decompositions:
        tag, s2 = product_split(s.members, c, split)
        if tag is not None:
            return c, z, tag, s2
    return None


def product_split(s_mask, c: Subgroup, split):
    """Tag and ``S''`` if ``S`` is ``S' x S''`` with an allowed ``S'``, else ``(None, None)``."""
    if not s_mask:
        return "empty", 0
    s1 = s2 = 0
    for a in iter_bits(s_mask):
        x, y = split[a]
        s1 |= 1 << x
        s2 |= 1 << y
    if s1.bit_count() * s2.bit_count() != s_mask.bit_count():
        return None, None
    if s1 == 1:
        return "identity", s2
    if s1 == c.members & ~1:
        return "complement-of-identity", s2
    if s1 == c.members:
        return "all", s2
    return None, None


def fibre_tags(s_mask, c: Subgroup, z: Subgroup, split):
    """Per-``z`` tags of the fibres of ``S`` over ``C``, or ``None`` if one is not allowed."""
    fibres = dict.fromkeys(z.elements, 0)
    for a in iter_bits(s_mask):
        x, y = split[a]
        fibres[y] |= 1 << x
    allowed = {sprime_mask(c, t): t for t in SPRIME_TAGS}
    tags = tuple(allowed.get(f) for f in fibres.values())
    return None if None in tags else tags


def ex_fibred_witness(g: AbelianGroup, s: ConnectionSet):
    """First ``(C, Z, fibre tags)`` with every fibre of ``S`` allowed; ``None`` otherwise."""
    for c, z, split in group_data(g).decompositions:
        tags = fibre_tags(s.members, c, z, split)
        if tags is not None:
            return c, z, tags
    return None


def sprime_mask(c: Subgroup, tag: str) -> int:
    return {"empty": 0, "identity": 1, "complement-of-identity": c.members & ~1, "all": c.members}[tag]


def product_set(g: AbelianGroup, s1: int, s2: int) -> int:
    return mask_of(g.add(a, b) for a in iter_bits(s1) for b in iter_bits(s2))


@dataclass
class Classification:
    mode: str
    aut_order: int
    is_drr: bool
    is_small: bool | None
    gw_witness: tuple | None
    nor_witnesses: list = field(default_factory=list)
    ex_witness: tuple | None = None

    @property
    def gw(self) -> bool:
        return self.gw_witness is not None

    @property
    def nor(self) -> bool:
        return bool(self.nor_witnesses)

    @property
    def ex(self) -> bool:
        return self.ex_witness is not None

    @property
    def good(self) -> bool:
        return self.is_drr if self.mode == "digraph" else bool(self.is_small)

    def to_dict(self) -> dict:
        gw = None
        if self.gw_witness is not None:
            h, k = self.gw_witness
            gw = {"H": h.elements, "K": k.elements}
        ex = None
        if self.ex_witness is not None:
            c, z, tag, s2 = self.ex_witness
            ex = {"C": c.elements, "Z": z.elements, "sprime_tag": tag, "sdoubleprime": bits_list(s2)}
        return {
            "aut_order": self.aut_order,
            "is_drr": self.is_drr,
            "is_small": self.is_small,
            "gw": gw,
            "nor": [list(p) for p in self.nor_witnesses],
            "ex": ex,
        }


def classify(g: AbelianGroup, s: ConnectionSet, mode: str = "digraph", aut: CayleyAut | None = None) -> Classification:
    if mode not in ("digraph", "graph"):
        raise InvalidInput(f"unknown mode {mode!r}")
    graph = mode == "graph"
    if graph and not is_inverse_closed(g, s):
        raise InvalidInput(f"connection set {{{s}}} is not inverse-closed")
    if aut is None:
        aut = cayley_aut(g, s)
    return Classification(
        mode=mode,
        aut_order=aut.order,
        is_drr=aut.order == g.n,
        is_small=_small_from(g, aut) if graph else None,
        gw_witness=gw_witness(g, s),
        nor_witnesses=nor_witnesses(g, s, exclude_iota=graph),
        ex_witness=ex_witness(g, s) if graph else None,
    )
