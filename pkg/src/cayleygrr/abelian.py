"""Finite abelian groups in invariant-factor form.

Elements are dense indices ``0..n-1``.  An index is the row-major
(last coordinate least significant) encoding of a coordinate vector over the
invariant factors ``d_1 | d_2 | ... | d_k``, so ``Z_2 x Z_6`` has
``encode((1, 0)) == 6`` and ``encode((0, 1)) == 1``.  Index 0 is the identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce

import numpy as np

from .bits import iter_bits, mask_of
from .errors import InvalidInput, ResourceGuard

SUBGROUP_LIMIT_N = 256
AUTOMORPHISM_LIMIT = 10**7
TABLE_LIMIT_N = 4096


def _factorize(d):
    out = {}
    p = 2
    while p * p <= d:
        while d % p == 0:
            out[p] = out.get(p, 0) + 1
            d //= p
        p += 1
    if d > 1:
        out[d] = out.get(d, 0) + 1
    return out


def make_group(factors) -> AbelianGroup:
    """Build the group ``Z_{f1} x ... x Z_{fr}`` in invariant-factor form.

    >>> make_group([6, 2]).factors
    (2, 6)
    """
    factors = [int(f) for f in factors]
    if not factors:
        raise InvalidInput("at least one cyclic factor is required")
    for f in factors:
        if f <= 1:
            raise InvalidInput(f"cyclic factor must be >= 2, got {f}")
    # primary components, per prime, largest first
    powers = {}
    for f in factors:
        for p, e in _factorize(f).items():
            powers.setdefault(p, []).append(p**e)
    for p in powers:
        powers[p].sort(reverse=True)
    k = max(len(v) for v in powers.values())
    chain = []
    for i in range(k):
        d = 1
        for v in powers.values():
            if i < len(v):
                d *= v[i]
        chain.append(d)
    return AbelianGroup(tuple(reversed(chain)))


def parse_group(spec: str) -> AbelianGroup:
    """Parse a comma-separated factor list such as ``"2,4"``."""
    tokens = [t.strip() for t in spec.split(",")]
    factors = []
    for t in tokens:
        try:
            factors.append(int(t))
        except ValueError:
            raise InvalidInput(f"bad group factor {t!r}") from None
    return make_group(factors)


@dataclass(frozen=True)
class AbelianGroup:
    factors: tuple

    def __post_init__(self):
        fs = self.factors
        if not fs or any(f < 2 for f in fs):
            raise InvalidInput(f"invalid invariant factors {fs!r}")
        if any(fs[i + 1] % fs[i] for i in range(len(fs) - 1)):
            raise InvalidInput(f"factors {fs!r} do not form a divisibility chain")

    def __repr__(self):
        return f"AbelianGroup({self.spec})"

    @property
    def spec(self) -> str:
        return ",".join(map(str, self.factors))

    @property
    def name(self) -> str:
        return "x".join(f"Z{d}" for d in self.factors)

    @cached_property
    def n(self) -> int:
        return math.prod(self.factors)

    @property
    def order(self) -> int:
        return self.n

    @cached_property
    def _strides(self):
        strides = [1] * len(self.factors)
        for i in range(len(self.factors) - 2, -1, -1):
            strides[i] = strides[i + 1] * self.factors[i + 1]
        return tuple(strides)

    def encode(self, coords) -> int:
        if len(coords) != len(self.factors):
            raise InvalidInput(f"expected {len(self.factors)} coordinates, got {len(coords)}")
        return sum((c % d) * s for c, d, s in zip(coords, self.factors, self._strides))

    def decode(self, a: int) -> tuple:
        self._check(a)
        return tuple((a // s) % d for d, s in zip(self.factors, self._strides))

    def _check(self, a):
        if not 0 <= a < self.n:
            raise InvalidInput(f"element index {a} out of range for group of order {self.n}")

    @cached_property
    def _coords(self):
        return [tuple((a // s) % d for d, s in zip(self.factors, self._strides)) for a in range(self.n)]

    @cached_property
    def add_table(self):
        """Dense ``n x n`` addition table (only for ``n <= 4096``)."""
        if self.n > TABLE_LIMIT_N:
            raise ResourceGuard(f"addition table not built for n={self.n} > {TABLE_LIMIT_N}")
        coords = np.array(self._coords, dtype=np.int64).reshape(self.n, len(self.factors))
        d = np.array(self.factors, dtype=np.int64)
        s = np.array(self._strides, dtype=np.int64)
        summed = (coords[:, None, :] + coords[None, :, :]) % d
        dtype = np.uint8 if self.n <= 256 else np.uint16
        return (summed @ s).astype(dtype)

    @cached_property
    def neg_table(self) -> tuple:
        return tuple(self.encode(tuple(-c for c in v)) for v in self._coords)

    def add(self, a: int, b: int) -> int:
        if self.n <= TABLE_LIMIT_N:
            return int(self.add_table[a, b])
        self._check(a)
        self._check(b)
        va, vb = self.decode(a), self.decode(b)
        return self.encode(tuple(x + y for x, y in zip(va, vb)))

    def neg(self, a: int) -> int:
        self._check(a)
        return self.neg_table[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def scale(self, t: int, a: int) -> int:
        return self.encode(tuple(t * c for c in self.decode(a)))

    def element_order(self, a: int) -> int:
        v = self.decode(a)
        return reduce(math.lcm, (d // math.gcd(c, d) for c, d in zip(v, self.factors)), 1)

    @cached_property
    def element_orders(self) -> tuple:
        return tuple(self.element_order(a) for a in range(self.n))

    @property
    def exponent(self) -> int:
        return self.factors[-1]

    @property
    def involution_count(self) -> int:
        """Number of elements of order at most 2 (identity included)."""
        return math.prod(math.gcd(2, d) for d in self.factors)

    def iota(self) -> tuple:
        """The inversion automorphism ``a -> -a`` as an image tuple."""
        return self.neg_table

    def translation(self, a: int) -> tuple:
        """The right-regular permutation ``x -> x + a``."""
        return tuple(self.add(x, a) for x in range(self.n))

    @cached_property
    def basis(self) -> tuple:
        """Standard generators, one per invariant factor."""
        k = len(self.factors)
        return tuple(self.encode(tuple(int(i == j) for j in range(k))) for i in range(k))

    def regular_generators(self) -> list:
        return [self.translation(e) for e in self.basis]

    def prime_power_order(self) -> bool:
        return len(_factorize(self.n)) == 1


@dataclass(frozen=True, order=True)
class Subgroup:
    """A subgroup stored as a member bitmask; ordering is ``(order, members)``."""

    order: int
    members: int
    generators: tuple = field(default=(), compare=False)

    @property
    def elements(self) -> list:
        return list(iter_bits(self.members))

    def __contains__(self, a) -> bool:
        return bool(self.members >> a & 1)

    def __repr__(self):
        return f"Subgroup({self.elements})"


def _span(g: AbelianGroup, members: list, gen: int) -> list:
    """Elements of ``<members> + <gen>`` given ``members`` is a subgroup."""
    seen = mask_of(members)
    out = list(members)
    step = gen
    while not seen >> step & 1:
        for x in members:
            y = g.add(x, step)
            if not seen >> y & 1:
                seen |= 1 << y
                out.append(y)
        step = g.add(step, gen)
    return out


def generated_subgroup(g: AbelianGroup, gens) -> Subgroup:
    members = [0]
    for a in gens:
        members = _span(g, members, a)
    return Subgroup(len(members), mask_of(members), tuple(gens))


def _join(g: AbelianGroup, h: Subgroup, k: Subgroup) -> Subgroup:
    hs = h.elements
    mask = 0
    for y in k.elements:
        for x in hs:
            mask |= 1 << g.add(x, y)
    return Subgroup(mask.bit_count(), mask, h.generators + k.generators)


def subgroups(g: AbelianGroup, limit_n: int = SUBGROUP_LIMIT_N) -> list:
    """All subgroups, each exactly once, sorted by ``(order, members)``.

    Every subgroup of a finite group is a join of cyclic subgroups, so the
    lattice is the closure of the cyclic subgroups under joins with a cyclic
    subgroup.
    """
    if g.n > limit_n:
        raise ResourceGuard(f"subgroup enumeration limited to n <= {limit_n}, got {g.n}")
    return list(_subgroups_cached(g))


_SUBGROUP_CACHE: dict = {}


def _subgroups_cached(g):
    if g in _SUBGROUP_CACHE:
        return _SUBGROUP_CACHE[g]
    cyclic = {}
    for a in range(g.n):
        c = generated_subgroup(g, (a,) if a else ())
        cyclic.setdefault(c.members, c)
    cyclic = sorted(cyclic.values())
    found = {c.members: c for c in cyclic}
    # guard: at most n^{log2 n} subgroups
    cap = 2.0 ** (math.log2(g.n) ** 2) if g.n > 1 else 1.0
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for x in frontier:
            for c in cyclic:
                if c.members & ~x.members:
                    j = _join(g, x, c)
                    if j.members not in found:
                        found[j.members] = j
                        nxt.append(j)
        if len(found) > cap:
            raise ResourceGuard(f"subgroup count exceeded {cap:.3g}")
        frontier = nxt
    result = tuple(sorted(found.values()))
    _SUBGROUP_CACHE[g] = result
    return result


def coset_partition(g: AbelianGroup, h: Subgroup) -> list:
    """Cosets of ``h`` as bitmasks, ordered by smallest element."""
    elems = h.elements
    if not h.members & 1:
        raise InvalidInput("subgroup must contain the identity")
    for a in elems:
        if not h.members >> g.neg(a) & 1 or any(not h.members >> g.add(a, b) & 1 for b in elems):
            raise InvalidInput(f"{h!r} is not closed under the group operation")
    covered = 0
    blocks = []
    for a in range(g.n):
        if covered >> a & 1:
            continue
        block = mask_of(g.add(a, b) for b in elems)
        covered |= block
        blocks.append(block)
    return blocks


_AUT_CACHE: dict = {}


def automorphism_group(g: AbelianGroup, limit: int = AUTOMORPHISM_LIMIT) -> list:
    """All automorphisms as image tuples, sorted lexicographically.

    Backtracks over images of the standard basis; a basis vector of order
    ``d`` may only go to an element of order ``d``, and each new image must
    extend the span by a factor of exactly ``d`` so the map is injective.
    """
    key = (g, limit)
    if key in _AUT_CACHE:
        return list(_AUT_CACHE[key])
    basis_orders = g.factors
    by_order = {}
    for a in range(g.n):
        by_order.setdefault(g.element_orders[a], []).append(a)
    found = []
    k = len(basis_orders)

    def extend(i, dom, img, seen):
        # dom[j] is mapped to img[j]; both lists enumerate the same span
        if i == k:
            images = [0] * g.n
            for x, y in zip(dom, img):
                images[x] = y
            found.append(tuple(images))
            if len(found) > limit:
                raise ResourceGuard(f"|Aut(A)| exceeds limit {limit}")
            return
        e = g.basis[i]
        d = basis_orders[i]
        for c in by_order.get(d, ()):
            if seen >> c & 1:
                continue
            new_dom, new_img, new_seen = list(dom), list(img), seen
            ok = True
            se, sc = e, c
            for _ in range(1, d):
                for x, y in zip(dom, img):
                    u, v = g.add(x, se), g.add(y, sc)
                    if new_seen >> v & 1:
                        ok = False
                        break
                    new_seen |= 1 << v
                    new_dom.append(u)
                    new_img.append(v)
                if not ok:
                    break
                se, sc = g.add(se, e), g.add(sc, c)
            if ok:
                extend(i + 1, new_dom, new_img, new_seen)

    extend(0, [0], [0], 1)
    found.sort()
    _AUT_CACHE[key] = tuple(found)
    return found


def is_automorphism(g: AbelianGroup, images) -> bool:
    if sorted(images) != list(range(g.n)) or images[0] != 0:
        return False
    return all(images[g.add(a, b)] == g.add(images[a], images[b]) for a in range(g.n) for b in range(g.n))


def abelian_groups_of_order(n: int) -> list:
    """One group per isomorphism type of order ``n``."""
    if n < 2:
        return []

    def partitions(e, largest=None):
        largest = e if largest is None else largest
        if e == 0:
            yield []
            return
        for first in range(min(e, largest), 0, -1):
            for rest in partitions(e - first, first):
                yield [first] + rest

    per_prime = []
    for p, e in sorted(_factorize(n).items()):
        per_prime.append([[p**x for x in part] for part in partitions(e)])
    groups = []

    def combine(i, acc):
        if i == len(per_prime):
            groups.append(make_group(acc))
            return
        for choice in per_prime[i]:
            combine(i + 1, acc + choice)

    combine(0, [])
    return sorted(groups, key=lambda grp: (len(grp.factors), grp.factors))
