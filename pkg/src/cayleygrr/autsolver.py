"""Automorphism groups and canonical forms of small vertex-colored digraphs.

The search is plain individualization-refinement:

* partitions are ordered lists of cells, each cell an int bitmask;
* refinement splits cells by (out-degree, in-degree) counts into a splitter
  cell until the partition is equitable;
* the target cell is the first smallest non-singleton cell;
* leaves are compared by the adjacency encoding of the relabeled digraph.  A
  leaf matching the first leaf or the current best leaf yields an
  automorphism, and the search backs up to the common ancestor of the two
  leaves, since the abandoned subtree is an image of one already explored;
* children whose vertex shares an orbit (under the automorphisms found so far
  that fix the current prefix) with an explored sibling are skipped.

Loops are folded into vertex colors (``2 * color + has_loop``) before search.
"""

from __future__ import annotations

import itertools
import sys
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .bits import iter_bits, mask_of
from .errors import InvalidInput, ResourceGuard

SOLVER_LIMIT_N = 4096
BRUTE_FORCE_LIMIT_N = 8

_NO_JUMP = sys.maxsize


@dataclass(frozen=True)
class ColoredDigraph:
    n: int
    out_rows: tuple
    colors: tuple

    @classmethod
    def from_rows(cls, rows, colors=None):
        """Build from out-rows that may contain loops; loops become colors."""
        rows = tuple(int(r) for r in rows)
        n = len(rows)
        if colors is None:
            colors = (0,) * n
        if len(colors) != n:
            raise InvalidInput(f"expected {n} colors, got {len(colors)}")
        if any(r >> n for r in rows):
            raise InvalidInput("adjacency row refers to a vertex outside the graph")
        folded = tuple(2 * int(c) + (rows[v] >> v & 1) for v, c in enumerate(colors))
        stripped = tuple(r & ~(1 << v) for v, r in enumerate(rows))
        return cls(n, stripped, folded)

    @classmethod
    def from_arcs(cls, n, arcs, colors=None):
        rows = [0] * n
        for u, v in arcs:
            rows[u] |= 1 << v
        return cls.from_rows(rows, colors)

    @classmethod
    def from_cayley(cls, digraph):
        return cls.from_rows(digraph.out_rows)

    @property
    def in_rows(self) -> tuple:
        rows = [0] * self.n
        for x in range(self.n):
            for y in iter_bits(self.out_rows[x]):
                rows[y] |= 1 << x
        return tuple(rows)

    def relabel(self, perm):
        """The isomorphic copy in which vertex ``v`` is renamed ``perm[v]``."""
        rows = [0] * self.n
        colors = [0] * self.n
        for v in range(self.n):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(self.out_rows[v]))
            colors[perm[v]] = self.colors[v]
        return ColoredDigraph(self.n, tuple(rows), tuple(colors))

    def is_automorphism(self, perm) -> bool:
        if any(self.colors[perm[v]] != self.colors[v] for v in range(self.n)):
            return False
        return all(
            mask_of(perm[u] for u in iter_bits(self.out_rows[v])) == self.out_rows[perm[v]]
            for v in range(self.n)
        )

    def adjacency_matrix(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=bool)
        for v in range(self.n):
            for u in iter_bits(self.out_rows[v]):
                m[v, u] = True
        return m


@dataclass(frozen=True)
class CanonicalForm:
    """Adjacency of the canonically relabeled digraph plus its vertex colors."""

    data: bytes

    def hex(self) -> str:
        return self.data.hex()


def _encode_form(n, colors, rows) -> CanonicalForm:
    width = (n + 7) // 8
    parts = [n.to_bytes(2, "big")]
    parts.extend(int(c).to_bytes(4, "big") for c in colors)
    parts.extend(r.to_bytes(width, "big") for r in rows)
    return CanonicalForm(b"".join(parts))


def _split_by_keys(cells, out_rows, in_rows, symmetric, queue):
    cells = list(cells)
    queue = deque(queue)
    n = len(out_rows)
    while queue and len(cells) < n:
        w = queue.popleft()
        new = []
        for x in cells:
            if not x & (x - 1):
                new.append(x)
                continue
            groups = {}
            for v in iter_bits(x):
                k = (out_rows[v] & w).bit_count()
                if not symmetric:
                    k = (k, (in_rows[v] & w).bit_count())
                groups[k] = groups.get(k, 0) | (1 << v)
            if len(groups) == 1:
                new.append(x)
            else:
                for k in sorted(groups):
                    new.append(groups[k])
                    queue.append(groups[k])
        cells = new
    return cells


def refine(g: ColoredDigraph, coloring) -> list:
    """Coarsest equitable refinement of an ordered partition.

    ``coloring`` is a sequence of cells (iterables of vertices); the result
    is a list of sorted vertex lists, in refinement order.
    """
    cells = [mask_of(c) for c in coloring]
    covered = 0
    for c in cells:
        if not c or c & covered:
            raise InvalidInput("coloring is not a partition")
        covered |= c
    if covered != (1 << g.n) - 1:
        raise InvalidInput("coloring does not cover every vertex")
    in_rows = g.in_rows
    out = _split_by_keys(cells, g.out_rows, in_rows, g.out_rows == in_rows, cells)
    return [list(iter_bits(c)) for c in out]


@dataclass
class SearchResult:
    generators: list
    canonical: CanonicalForm
    canonical_labeling: list
    nodes: int = 0
    leaves: int = 0
    stats: dict = field(default_factory=dict)


class _Search:
    def __init__(self, g: ColoredDigraph):
        self.g = g
        self.n = g.n
        self.out = g.out_rows
        self.inn = g.in_rows
        self.symmetric = self.out == self.inn
        self.gens = []
        self.first = None
        self.best = None
        self.nodes = 0
        self.leaves = 0

    def run(self) -> SearchResult:
        by_color = {}
        for v, c in enumerate(self.g.colors):
            by_color[c] = by_color.get(c, 0) | (1 << v)
        cells = [by_color[c] for c in sorted(by_color)]
        cells = _split_by_keys(cells, self.out, self.inn, self.symmetric, cells)
        if self.n:
            self._dfs(cells, [])
            code, lab, _ = self.best
        else:
            code, lab = ((), ()), []
        colors, rows = code
        return SearchResult(list(self.gens), _encode_form(self.n, colors, rows), list(lab),
                            self.nodes, self.leaves)

    def _dfs(self, cells, seq):
        self.nodes += 1
        target, size = -1, self.n + 1
        for i, c in enumerate(cells):
            k = c.bit_count()
            if 1 < k < size:
                target, size = i, k
        if target < 0:
            return self._leaf(cells, seq)
        depth = len(seq)
        cell = cells[target]
        explored = []
        for v in iter_bits(cell):
            if explored and self._equivalent_to_explored(v, explored, seq):
                continue
            explored.append(v)
            bit = 1 << v
            child = cells[:target] + [bit, cell & ~bit] + cells[target + 1:]
            child = _split_by_keys(child, self.out, self.inn, self.symmetric, [bit])
            back = self._dfs(child, seq + [v])
            if back < depth:
                return back
        return _NO_JUMP

    def _equivalent_to_explored(self, v, explored, seq):
        gens = [p for p in self.gens if all(p[x] == x for x in seq)]
        if not gens:
            return False
        targets = set(explored)
        seen = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            if x in targets:
                return True
            for p in gens:
                y = p[x]
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def _leaf(self, cells, seq):
        self.leaves += 1
        lab = [c.bit_length() - 1 for c in cells]
        inv = [0] * self.n
        for pos, v in enumerate(lab):
            inv[v] = pos
        rows = []
        for v in lab:
            r = 0
            for u in iter_bits(self.out[v]):
                r |= 1 << inv[u]
            rows.append(r)
        code = (tuple(self.g.colors[v] for v in lab), tuple(rows))
        if self.first is None:
            self.first = self.best = (code, lab, seq)
            return _NO_JUMP
        for ref_code, ref_lab, ref_seq in (self.first, self.best):
            if code == ref_code:
                gamma = [0] * self.n
                for a, b in zip(ref_lab, lab):
                    gamma[a] = b
                self.gens.append(tuple(gamma))
                common = 0
                for a, b in zip(ref_seq, seq):
                    if a != b:
                        break
                    common += 1
                return common
        if code < self.best[0]:
            self.best = (code, lab, seq)
        return _NO_JUMP


def _guard(g, limit=SOLVER_LIMIT_N):
    if g.n > limit:
        raise ResourceGuard(f"solver limited to n <= {limit}, got {g.n}")


def search(g: ColoredDigraph) -> SearchResult:
    """Run one search; gives both automorphism generators and canonical form."""
    _guard(g)
    old = sys.getrecursionlimit()
    if g.n + 100 > old:
        sys.setrecursionlimit(g.n + 200)
    try:
        return _Search(g).run()
    finally:
        sys.setrecursionlimit(old)


def automorphism_generators(g: ColoredDigraph) -> list:
    return search(g).generators


def canonical_form(g: ColoredDigraph) -> CanonicalForm:
    return search(g).canonical


def brute_force_automorphisms(g: ColoredDigraph) -> list:
    """Every automorphism, by filtering all ``n!`` permutations."""
    if g.n > BRUTE_FORCE_LIMIT_N:
        raise ResourceGuard(f"brute force limited to n <= {BRUTE_FORCE_LIMIT_N}, got {g.n}")
    if g.n == 0:
        return [()]
    perms = np.array(list(itertools.permutations(range(g.n))), dtype=np.intp)
    adj = g.adjacency_matrix()
    colors = np.array(g.colors)
    ok = np.all(colors[perms] == colors, axis=1)
    # p is an automorphism iff adj[p[u], p[v]] == adj[u, v] for all u, v
    permuted = adj[perms[:, :, None], perms[:, None, :]]
    ok &= np.all(permuted == adj, axis=(1, 2))
    return [tuple(int(x) for x in p) for p in perms[ok]]
