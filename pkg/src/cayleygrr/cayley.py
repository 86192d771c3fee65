"""Cayley digraphs on abelian groups.

Arc convention: ``(x, y)`` is an arc of ``Cay(A, S)`` iff ``x - y`` lies in
``S``, so the out-neighbours of ``x`` are ``{x - s : s in S}``.  The mirrored
convention gives the reversed digraph, which has the same automorphism group
but different arcs; tests pin the orientation with ``Cay(Z_3, {1})``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .abelian import AbelianGroup
from .bits import bits_list, iter_bits, mask_of
from .errors import InvalidInput, ResourceGuard

DIGRAPH_LIMIT_N = 16
GRAPH_LIMIT_N = 20

MODES = ("digraph", "graph")


@dataclass(frozen=True)
class ConnectionSet:
    group: AbelianGroup
    members: int

    def __post_init__(self):
        if self.members < 0 or self.members >> self.group.n:
            raise InvalidInput(f"connection set {self.members:#x} has elements outside the group")

    @classmethod
    def from_elements(cls, group, elements):
        elements = list(elements)
        for a in elements:
            if not 0 <= a < group.n:
                raise InvalidInput(f"element {a} out of range for group of order {group.n}")
        return cls(group, mask_of(elements))

    @property
    def elements(self) -> list:
        return bits_list(self.members)

    def __len__(self):
        return self.members.bit_count()

    def __contains__(self, a):
        return bool(self.members >> a & 1)

    def __str__(self):
        return ",".join(map(str, self.elements))


def parse_set(group: AbelianGroup, text: str) -> ConnectionSet:
    """Parse ``"1,3"`` (element indices) or ``"0xA"`` (hex bitmask)."""
    text = text.strip()
    if text.lower().startswith("0x"):
        try:
            mask = int(text, 16)
        except ValueError:
            raise InvalidInput(f"bad hex mask {text!r}") from None
        return ConnectionSet(group, mask)
    if not text:
        return ConnectionSet(group, 0)
    elements = []
    for tok in text.split(","):
        tok = tok.strip()
        try:
            elements.append(int(tok))
        except ValueError:
            raise InvalidInput(f"bad element token {tok!r}") from None
    return ConnectionSet.from_elements(group, elements)


@dataclass(frozen=True)
class CayleyDigraph:
    n: int
    out_rows: tuple

    def has_arc(self, x, y) -> bool:
        return bool(self.out_rows[x] >> y & 1)

    def arcs(self) -> list:
        return [(x, y) for x in range(self.n) for y in iter_bits(self.out_rows[x])]

    @property
    def in_rows(self) -> tuple:
        rows = [0] * self.n
        for x in range(self.n):
            for y in iter_bits(self.out_rows[x]):
                rows[y] |= 1 << x
        return tuple(rows)

    def is_symmetric(self) -> bool:
        return self.out_rows == self.in_rows

    def adjacency_text(self) -> str:
        """``u: v1 v2 ...`` lines, for debugging."""
        return "\n".join(
            f"{x}: {' '.join(map(str, iter_bits(self.out_rows[x])))}".rstrip() for x in range(self.n)
        )


def build(group: AbelianGroup, s: ConnectionSet) -> CayleyDigraph:
    if s.group != group:
        raise InvalidInput("connection set belongs to a different group")
    elems = s.elements
    rows = tuple(mask_of(group.sub(x, a) for a in elems) for x in range(group.n))
    return CayleyDigraph(group.n, rows)


def is_inverse_closed(group: AbelianGroup, s: ConnectionSet) -> bool:
    neg = group.neg_table
    return all(s.members >> neg[a] & 1 for a in iter_bits(s.members))


def inverse_blocks(group: AbelianGroup) -> list:
    """Orbits of inversion as masks: ``{a}`` when ``2a = 0``, else ``{a, -a}``.

    Ordered by smallest element; graph-mode enumeration chooses each block
    independently.
    """
    neg = group.neg_table
    blocks = []
    for a in range(group.n):
        b = neg[a]
        if b >= a:
            blocks.append((1 << a) | (1 << b))
    return blocks


def count_inverse_closed(group: AbelianGroup) -> int:
    m = group.involution_count
    return 2**m * 2 ** ((group.n - m) // 2)


def _check_mode(mode):
    if mode not in MODES:
        raise InvalidInput(f"mode must be one of {MODES}, got {mode!r}")


def subset_count(group: AbelianGroup, mode: str) -> int:
    _check_mode(mode)
    return 2**group.n if mode == "digraph" else 2 ** len(inverse_blocks(group))


def subset_masks(group: AbelianGroup, mode: str, start=0, stop=None, limit=None):
    """Yield connection-set bitmasks in census order.

    Digraph mode yields ``0 .. 2^n - 1``.  Graph mode yields, for
    ``t = 0, 1, ...``, the union of the inversion blocks selected by the bits
    of ``t``.  ``start``/``stop`` slice by position in that order, so disjoint
    ranges can be processed independently.
    """
    _check_mode(mode)
    if limit is None:
        limit = DIGRAPH_LIMIT_N if mode == "digraph" else GRAPH_LIMIT_N
    if group.n > limit:
        raise ResourceGuard(f"{mode} enumeration limited to n <= {limit}, got {group.n}")
    total = subset_count(group, mode)
    stop = total if stop is None else min(stop, total)
    if mode == "digraph":
        yield from range(start, stop)
        return
    blocks = inverse_blocks(group)
    for t in range(start, stop):
        m = 0
        for j in iter_bits(t):
            m |= blocks[j]
        yield m


def subset_iter(group: AbelianGroup, mode: str, start=0, stop=None, limit=None):
    for m in subset_masks(group, mode, start, stop, limit):
        yield ConnectionSet(group, m)
