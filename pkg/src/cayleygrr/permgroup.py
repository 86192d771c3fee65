"""Permutations as image tuples and a deterministic Schreier-Sims.

Composition applies left to right: ``compose(p, q)[i] == q[p[i]]``, i.e.
first ``p``, then ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInput


def identity(n: int) -> tuple:
    return tuple(range(n))


def is_identity(p) -> bool:
    return all(i == x for i, x in enumerate(p))


def compose(p, q) -> tuple:
    """Apply ``p`` first, then ``q``."""
    if len(p) != len(q):
        raise InvalidInput(f"degree mismatch: {len(p)} vs {len(q)}")
    return tuple(q[x] for x in p)


def invert(p) -> tuple:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def check_perm(p, n=None):
    if n is not None and len(p) != n:
        raise InvalidInput(f"expected degree {n}, got {len(p)}")
    if sorted(p) != list(range(len(p))):
        raise InvalidInput(f"not a permutation: {p!r}")


def from_cycles(n: int, *cycles) -> tuple:
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a] = b
    return tuple(img)


def cycle_string(p) -> str:
    seen = set()
    parts = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            seen.add(j)
            cyc.append(j)
            j = p[j]
        parts.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(parts) or "()"


def orbit(gens, point) -> list:
    out = [point]
    seen = {point}
    for x in out:
        for s in gens:
            y = s[x]
            if y not in seen:
                seen.add(y)
                out.append(y)
    return out


@dataclass
class _Level:
    point: int
    gens: list = field(default_factory=list)
    # transversal[b] maps the base point to b
    transversal: dict = field(default_factory=dict)
    checked: set = field(default_factory=set)


@dataclass
class BSGS:
    degree: int
    levels: list

    @property
    def base(self) -> list:
        return [lv.point for lv in self.levels]

    @property
    def strong_generators(self) -> list:
        seen = []
        for lv in self.levels:
            for s in lv.gens:
                if s not in seen:
                    seen.append(s)
        return seen

    @property
    def order(self) -> int:
        out = 1
        for lv in self.levels:
            out *= len(lv.transversal)
        return out

    def sift(self, p, start=0):
        """Strip ``p`` through the chain; returns ``(residue, level)``."""
        for j in range(start, len(self.levels)):
            lv = self.levels[j]
            img = p[lv.point]
            u = lv.transversal.get(img)
            if u is None:
                return p, j
            p = tuple(_apply_inverse(p, u))
        return p, len(self.levels)

    def contains(self, p) -> bool:
        if len(p) != self.degree:
            raise InvalidInput(f"degree mismatch: {len(p)} vs {self.degree}")
        residue, j = self.sift(tuple(p))
        return j == len(self.levels) and is_identity(residue)

    __contains__ = contains


def _apply_inverse(p, u):
    """``compose(p, invert(u))`` without materializing the inverse."""
    inv = [0] * len(u)
    for i, x in enumerate(u):
        inv[x] = i
    return [inv[x] for x in p]


def _extend_orbit(lv: _Level):
    frontier = list(lv.transversal)
    for b in frontier:
        ub = lv.transversal[b]
        for s in lv.gens:
            c = s[b]
            if c not in lv.transversal:
                lv.transversal[c] = compose(ub, s)
                frontier.append(c)


def schreier_sims(gens, degree=None, base=()) -> BSGS:
    """Base and strong generating set of ``<gens>``.

    Deterministic: the result depends only on ``gens`` (in order) and the
    optional ``base`` prefix.  Schreier generators already shown to sift are
    remembered per level since transversal entries never change once set.
    """
    gens = [tuple(g) for g in gens]
    if degree is None:
        if not gens:
            raise InvalidInput("degree required when no generators are given")
        degree = len(gens[0])
    for g in gens:
        check_perm(g, degree)
    ident = identity(degree)
    b = BSGS(degree, [])
    for pt in base:
        b.levels.append(_Level(pt, [], {pt: ident}))

    def add_level_for(p):
        moved = next(i for i in range(degree) if p[i] != i)
        b.levels.append(_Level(moved, [], {moved: ident}))

    def add_strong(p, upto):
        # p fixes the base points of levels < upto
        if upto == len(b.levels):
            add_level_for(p)
        for lv in b.levels[: upto + 1]:
            lv.gens.append(p)
            _extend_orbit(lv)

    for g in gens:
        if is_identity(g):
            continue
        residue, j = b.sift(g)
        if j < len(b.levels) or not is_identity(residue):
            add_strong(residue, j)

    i = len(b.levels) - 1
    while i >= 0:
        lv = b.levels[i]
        restarted = False
        for pt in list(lv.transversal):
            u = lv.transversal[pt]
            for gi, s in enumerate(lv.gens):
                if (pt, gi) in lv.checked:
                    continue
                img = s[pt]
                # Schreier generator u_pt * s * u_img^-1
                h = tuple(_apply_inverse(compose(u, s), lv.transversal[img]))
                residue, j = b.sift(h, i + 1)
                if j < len(b.levels) or not is_identity(residue):
                    add_strong(residue, j)
                    i = j if j < len(b.levels) else len(b.levels) - 1
                    restarted = True
                    break
                lv.checked.add((pt, gi))
            if restarted:
                break
        if not restarted:
            i -= 1
    return b


def group_order(gens, degree=None) -> int:
    return schreier_sims(gens, degree).order


def stabilizer_order(gens, point, degree=None) -> int:
    """Order of the point stabilizer of a transitive group."""
    gens = [tuple(g) for g in gens]
    if degree is None:
        degree = len(gens[0]) if gens else 1
    orb = orbit(gens, point)
    if len(orb) != degree:
        raise InvalidInput(f"group is not transitive: orbit of {point} has size {len(orb)} of {degree}")
    b = schreier_sims(gens, degree, base=[point])
    return b.order // len(b.levels[0].transversal)


def closure(gens, degree) -> set:
    """Brute-force group closure by breadth-first multiplication (test oracle)."""
    ident = identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = compose(p, s)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen
