"""Exhaustive and sampled censuses of connection sets, counting formulas and bounds.

An exhaustive census works on the array of all connection-set bitmasks:

* membership in the generalized-wreath, normalized and exceptional-product
  families is computed for every subset with numpy;
* subsets are grouped into ``Aut(A)``-orbits (all of the above, and the
  automorphism group of the Cayley digraph up to isomorphism, are orbit
  invariants), and the solver plus the literal detectors run once per orbit
  representative;
* the representative's literal detector results must agree with the
  vectorized flags, so every family count is computed two ways.

Bound exponents are exact rationals.  When ``n`` is not a power of two,
``log2(n)`` is replaced by ``ceil(log2(n))``, which only weakens the upper
bounds.  The Lemma 5.3-style exceptional bound ``n/4 + 2 log n - 1`` is read
with a base-2 logarithm.
"""

from __future__ import annotations

import itertools
import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import sparse, stats
from scipy.sparse.csgraph import connected_components

from .abelian import AbelianGroup, Subgroup, coset_partition
from .bits import bits_list, iter_bits
from .cayley import (DIGRAPH_LIMIT_N, GRAPH_LIMIT_N, ConnectionSet, _check_mode, count_inverse_closed,
                     inverse_blocks, is_inverse_closed, subset_count)
from .classify import SPRIME_TAGS, _small_from, cayley_aut, classify, group_data, product_set, sprime_mask
from .errors import DichotomyViolation, InvalidInput, ResourceGuard
from .permgroup import compose, schreier_sims

SAMPLE_LIMIT_N = 64
DEFAULT_SEED = 20140101
BOUND_NAMES = ("thm_epsilon1", "thm_epsilon2", "lemma_gw_digraph", "lemma_nor_digraph",
               "lemma_ex", "lemma_gw_graph", "lemma_nor_graph")


# ---- bounds in exact arithmetic ----

def pow2_admits(count: int, exponent: Fraction) -> bool:
    """``count <= 2**exponent``, decided with integers only."""
    if count <= 0:
        return True
    p, q = exponent.numerator, exponent.denominator
    if p < 0:
        return False
    return count**q <= 1 << p


def log2_bracket(n: int):
    """``(floor, ceil)`` of ``log2(n)``; equal when ``n`` is a power of two."""
    lo = n.bit_length() - 1
    return lo, lo if n == 1 << lo else lo + 1


@dataclass(frozen=True)
class BoundValue:
    name: str
    exponent: Fraction
    exponent_floor: Fraction
    exact: bool

    def admits(self, count: int) -> bool:
        return pow2_admits(count, self.exponent)

    def to_dict(self) -> dict:
        return {"exponent": str(self.exponent), "exponent_floor_log": str(self.exponent_floor),
                "log2n_exact": self.exact}


def _exponents(n, m, L):
    n, m, L = Fraction(n), Fraction(m), Fraction(L)
    return {
        "thm_epsilon1": 3 * n / 4 + 2 * L**2 + 1,
        "thm_epsilon2": m / 2 + 11 * n / 24 + 2 * L**2 + 2,
        "lemma_gw_digraph": 3 * n / 4 + 2 * L**2,
        "lemma_nor_digraph": 3 * n / 4 + L**2,
        "lemma_ex": n / 4 + 2 * L - 1,
        "lemma_gw_graph": m / 2 + 11 * n / 24 + 2 * L**2,
        "lemma_nor_graph": m / 2 + 11 * n / 24 + L**2,
    }


def bounds(n: int, m: int) -> dict:
    """The seven upper-bound exponents for order ``n`` with ``m`` elements of order <= 2."""
    if n < 2 or not 1 <= m <= n:
        raise InvalidInput(f"need n >= 2 and 1 <= m <= n, got n={n}, m={m}")
    lo, hi = log2_bracket(n)
    up = _exponents(n, m, hi)
    down = _exponents(n, m, lo)
    return {k: BoundValue(k, up[k], down[k], lo == hi) for k in BOUND_NAMES}


# ---- exact interior counts ----

def gw_pair_exponent(g: AbelianGroup, h: Subgroup, k: Subgroup, mode: str) -> int:
    _check_mode(mode)
    if not (1 < h.order and k.order < g.n and h.members & ~k.members == 0):
        raise InvalidInput("need subgroups with 1 < H <= K < A")
    n, hh, kk = g.n, h.order, k.order
    if mode == "digraph":
        e = Fraction(kk) + Fraction(n - kk, hh)
    else:
        j = sum(1 for a in k.elements if g.element_orders[a] <= 2)
        i = sum(1 for a in range(n) if not k.members >> a & 1 and h.members >> g.add(a, a) & 1)
        e = j + Fraction(kk - j, 2) + Fraction(i, hh) + Fraction(n - kk - i, 2 * hh)
    if e.denominator != 1:
        raise AssertionError(f"non-integral exponent {e} for H={h!r}, K={k!r}")
    return int(e)


def gw_pair_count(g: AbelianGroup, h: Subgroup, k: Subgroup, mode: str) -> int:
    """Subsets (or inverse-closed subsets) with ``S \\ K`` a union of ``H``-cosets."""
    return 2 ** gw_pair_exponent(g, h, k, mode)


def ex_quadruples(g: AbelianGroup):
    """Yield every ``(C, Z, tag, S'')`` with ``A = C x Z`` as in the exceptional family."""
    for c, z, _ in group_data(g).decompositions:
        for tag in ("empty", "identity", "complement-of-identity", "all"):
            zs = z.elements
            for t in range(1 << len(zs)):
                s2 = 0
                for j in iter_bits(t):
                    s2 |= 1 << zs[j]
                yield c, z, tag, s2


def ex_quadruple_count(g: AbelianGroup) -> int:
    return sum(4 * 2**z.order for _, z, _ in group_data(g).decompositions)


def ex_family(g: AbelianGroup) -> set:
    return {product_set(g, sprime_mask(c, tag), s2) for c, z, tag, s2 in ex_quadruples(g)}


# ---- vectorized family flags ----

def all_masks(g: AbelianGroup, mode: str) -> np.ndarray:
    if g.n > 63:
        raise ResourceGuard("vectorized census needs n <= 63")
    if mode == "digraph":
        return np.arange(1 << g.n, dtype=np.uint64)
    blocks = np.array(inverse_blocks(g), dtype=np.uint64)
    t = np.arange(1 << len(blocks), dtype=np.uint64)
    out = np.zeros_like(t)
    for j, b in enumerate(blocks):
        out |= ((t >> np.uint64(j)) & np.uint64(1)) * b
    return out


def image_masks(masks: np.ndarray, images) -> np.ndarray:
    out = np.zeros_like(masks)
    one = np.uint64(1)
    for i, y in enumerate(images):
        out |= ((masks >> np.uint64(i)) & one) << np.uint64(y)
    return out


def _union_of_blocks(masks, blocks) -> np.ndarray:
    ok = np.ones(masks.shape, dtype=bool)
    for b in blocks:
        b = np.uint64(b)
        x = masks & b
        ok &= (x == 0) | (x == b)
    return ok


def gw_flags(g: AbelianGroup, masks: np.ndarray) -> np.ndarray:
    """Generalized-wreath membership for every mask.

    Uses only prime-order ``H`` and maximal ``K``: shrinking ``H`` or growing
    ``K`` preserves the defining property, so this is equivalent to scanning
    every pair.
    """
    data = group_data(g)
    proper = [s for s in data.subgroups if 1 < s.order < g.n]
    maximal = [k for k in proper if not any(k.members & ~x.members == 0 and x != k for x in proper)]
    minimal = [h for h in proper if _is_prime(h.order)]
    out = np.zeros(masks.shape, dtype=bool)
    for h in minimal:
        cosets = coset_partition(g, h)
        for k in maximal:
            if h.members & ~k.members:
                continue
            outside = [c for c in cosets if not c & k.members]
            out |= _union_of_blocks(masks & np.uint64(~k.members & ((1 << g.n) - 1)), outside)
    return out


def _is_prime(x):
    return x > 1 and all(x % p for p in range(2, math.isqrt(x) + 1))


def _perm_order(p):
    o = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        ln = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = p[j]
            ln += 1
        o = math.lcm(o, ln)
    return o


def _perm_power(p, e):
    out = tuple(range(len(p)))
    base = tuple(p)
    while e:
        if e & 1:
            out = compose(out, base)
        base = compose(base, base)
        e >>= 1
    return out


def _cycles(p):
    seen = 0
    out = []
    for i in range(len(p)):
        if seen >> i & 1:
            continue
        c = 0
        j = i
        while not c >> j & 1:
            c |= 1 << j
            j = p[j]
        seen |= c
        if c & (c - 1):
            out.append(c)
    return out


def normalizing_candidates(g: AbelianGroup, exclude_iota: bool) -> list:
    """Automorphisms whose fixed sets cover every nontrivially normalized set.

    A set fixed by ``phi`` outside the excluded ones is fixed by some power of
    ``phi`` of prime order other than inversion, or (when inversion is
    excluded) by a power of order 4 squaring to inversion.  One generator per
    cyclic subgroup is kept.
    """
    data = group_data(g)
    iota = data.iota
    seen_subgroups = set()
    out = []
    for phi in data.automorphisms:
        o = _perm_order(phi)
        if o == 1:
            continue
        wanted = _is_prime(o) and not (exclude_iota and phi == iota)
        if not wanted and exclude_iota and o == 4 and _perm_power(phi, 2) == iota:
            wanted = True
        if not wanted:
            continue
        cyc = frozenset(_perm_power(phi, e) for e in range(1, o) if math.gcd(e, o) == 1)
        if cyc in seen_subgroups:
            continue
        seen_subgroups.add(cyc)
        out.append(phi)
    return out


def nor_flags(g: AbelianGroup, masks: np.ndarray, exclude_iota: bool) -> np.ndarray:
    out = np.zeros(masks.shape, dtype=bool)
    for phi in normalizing_candidates(g, exclude_iota):
        out |= _union_of_blocks(masks, _cycles(phi))
    return out


def ex_flags(g: AbelianGroup, masks: np.ndarray) -> np.ndarray:
    fam = np.array(sorted(ex_family(g)), dtype=np.uint64)
    return np.isin(masks, fam)


def ex_fibred_family(g: AbelianGroup) -> set:
    """Sets whose fibres over ``C`` are each allowed, per decomposition (``4^|Z|`` each)."""
    out = set()
    for c, z, _ in group_data(g).decompositions:
        choices = [sprime_mask(c, t) for t in SPRIME_TAGS]
        for pick in itertools.product(choices, repeat=z.order):
            m = 0
            for f, b in zip(pick, z.elements):
                m |= product_set(g, f, 1 << b)
            out.add(m)
    return out


def ex_fibred_flags(g: AbelianGroup, masks: np.ndarray) -> np.ndarray:
    fam = np.array(sorted(ex_fibred_family(g)), dtype=np.uint64)
    return np.isin(masks, fam)


# ---- orbits of Aut(A) on subsets ----

def aut_generators(g: AbelianGroup) -> list:
    """A small generating set of ``Aut(A)``, picked greedily in list order."""
    gens = []
    b = schreier_sims([], degree=g.n)
    for phi in group_data(g).automorphisms:
        if not b.contains(phi):
            gens.append(phi)
            b = schreier_sims(gens, degree=g.n)
    return gens


def subset_orbits(g: AbelianGroup, masks: np.ndarray):
    """``(labels, reps)``: orbit label per mask and the least mask of each orbit."""
    order = np.argsort(masks, kind="stable")
    sorted_masks = masks[order]
    rows, cols = [], []
    idx = np.arange(len(masks))
    for phi in aut_generators(g):
        img = image_masks(masks, phi)
        pos = order[np.searchsorted(sorted_masks, img)]
        if not np.array_equal(masks[pos], img):
            raise AssertionError("subset family is not closed under Aut(A)")
        rows.append(idx)
        cols.append(pos)
    if rows:
        r = np.concatenate(rows)
        c = np.concatenate(cols)
        adj = sparse.coo_matrix((np.ones(len(r), dtype=np.int8), (r, c)), shape=(len(masks), len(masks)))
        count, labels = connected_components(adj, directed=True, connection="weak")
    else:
        count, labels = len(masks), idx.copy()
    reps = np.full(count, np.iinfo(np.uint64).max, dtype=np.uint64)
    np.minimum.at(reps, labels, masks)
    # relabel orbits by their representative so labels are deterministic
    rank = np.argsort(reps, kind="stable")
    relabel = np.empty(count, dtype=np.int64)
    relabel[rank] = np.arange(count)
    return relabel[labels], reps[rank]


# ---- exhaustive census ----

@dataclass
class RepResult:
    mask: int
    aut_order: int
    good: bool
    drr: bool
    gw: bool
    nor: bool
    ex: bool
    canonical: bytes
    nodes: int


def classify_rep(g: AbelianGroup, mode: str, mask: int) -> RepResult:
    s = ConnectionSet(g, mask)
    aut = cayley_aut(g, s)
    cls = classify(g, s, mode, aut)
    return RepResult(mask, cls.aut_order, cls.good, cls.is_drr, cls.gw, cls.nor, cls.ex,
                     aut.canonical.data, aut.nodes)


def _classify_chunk(args):
    g, mode, masks = args
    return [classify_rep(g, mode, m) for m in masks]


def classify_reps(g: AbelianGroup, mode: str, reps, jobs: int = 1) -> list:
    reps = [int(r) for r in reps]
    if jobs <= 1 or len(reps) < 2 * jobs:
        return [classify_rep(g, mode, m) for m in reps]
    size = -(-len(reps) // (4 * jobs))
    chunks = [(g, mode, reps[i:i + size]) for i in range(0, len(reps), size)]
    out = []
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(_classify_chunk, chunks):
            out.extend(part)
    return out


@dataclass
class CensusReport:
    group: AbelianGroup
    mode: str
    totals: dict
    bounds: dict
    bound_checks: dict
    violations: list
    solver: dict
    wall_time: float = 0.0
    arrays: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.group.n

    @property
    def m(self) -> int:
        return self.group.involution_count

    @property
    def proportions(self) -> dict:
        t = self.totals
        key = "drr" if self.mode == "digraph" else "small"
        return {key: _ratio(t[key], t["subsets"]), "good": _ratio(t["good"], t["subsets"])}

    def to_dict(self) -> dict:
        return {
            "group": self.group.spec,
            "mode": self.mode,
            "n": self.n,
            "m": self.m,
            "totals": dict(self.totals),
            "proportions": self.proportions,
            "bounds": {k: v.to_dict() for k, v in self.bounds.items()},
            "bound_checks": dict(self.bound_checks),
            "violations": list(self.violations),
            "solver": dict(self.solver),
            "conventions": {
                "log2n": "ceil(log2 n) in exponents when n is not a power of two",
                "lemma_ex_log_base": 2,
                "ex_trivial_Z": True,
                "gw_graph_prime_power": "empty family when n is a prime power; raw count in gw_raw",
            },
        }

    def rows(self):
        """Per-subset classification stream: ``(mask, good, gw, nor, ex)``."""
        a = self.arrays
        for i in range(len(a["masks"])):
            yield (int(a["masks"][i]), bool(a["good"][i]), bool(a["gw"][i]), bool(a["nor"][i]), bool(a["ex"][i]))


def _ratio(a, b):
    return a / b if b else 0.0


def exact_census(g: AbelianGroup, mode: str = "digraph", jobs: int = 1, limit: int | None = None,
                 strict: bool = True) -> CensusReport:
    """Classify every connection set of ``g`` and check the dichotomy.

    With ``strict`` a subset that is not good yet lies in no bad family
    raises :class:`DichotomyViolation` carrying the least such mask;
    otherwise violations are listed in the report.
    """
    _check_mode(mode)
    if limit is None:
        limit = DIGRAPH_LIMIT_N if mode == "digraph" else GRAPH_LIMIT_N
    if g.n > limit:
        raise ResourceGuard(f"{mode} census limited to n <= {limit}, got {g.n}")
    t0 = time.perf_counter()
    graph = mode == "graph"
    masks = all_masks(g, mode)
    gw_raw = gw_flags(g, masks)
    prime_power = g.prime_power_order()
    gw = gw_raw & (not (graph and prime_power))
    nor = nor_flags(g, masks, exclude_iota=graph)
    ex = ex_flags(g, masks) if graph else np.zeros(masks.shape, dtype=bool)

    labels, reps = subset_orbits(g, masks)
    results = classify_reps(g, mode, reps, jobs)
    rep_index = {int(m): i for i, m in enumerate(masks)} if graph else None
    for r in results:
        i = rep_index[r.mask] if graph else r.mask
        if (r.gw, r.nor, r.ex) != (bool(gw_raw[i]), bool(nor[i]), bool(ex[i])):
            raise AssertionError(f"detector mismatch at mask {r.mask:#x}: literal {(r.gw, r.nor, r.ex)} "
                                 f"vs vectorized {(bool(gw_raw[i]), bool(nor[i]), bool(ex[i]))}")
    rep_good = np.array([r.good for r in results], dtype=bool)
    rep_drr = np.array([r.drr for r in results], dtype=bool)
    rep_order = np.array([r.aut_order for r in results], dtype=object)
    good_status = rep_good[labels]
    drr = rep_drr[labels]

    bad = gw | nor | ex
    violations = []
    uncovered = ~good_status & ~bad
    if uncovered.any():
        v = {"kind": "dichotomy", "mask": int(masks[uncovered].min()), "count": int(uncovered.sum())}
        if graph:
            v["covered_by_ex_fibred"] = int((uncovered & ex_fibred_flags(g, masks)).sum())
        violations.append(v)
    if prime_power and not graph:
        weak = ~good_status & ~nor
        if weak.any():
            violations.append({"kind": "prime_power_nor", "mask": int(masks[weak].min()),
                               "count": int(weak.sum())})
    if strict and violations:
        v = violations[0]
        raise DichotomyViolation(f"{v['kind']} violated on {g.name} ({mode}) at S={bits_list(v['mask'])}",
                                 v["mask"])

    total = len(masks)
    good_count = int(good_status.sum())
    totals = {
        "subsets": total,
        "drr": int(drr.sum()),
        "small": good_count if graph else None,
        "large_aut": total - good_count,
        "gw": int(gw.sum()),
        "gw_raw": int(gw_raw.sum()),
        "nor": int(nor.sum()),
        "ex": int(ex.sum()),
        "bad": int(bad.sum()),
        "good": total - int(bad.sum()),
    }
    bvals = bounds(g.n, g.involution_count)
    if graph:
        checks = {
            "large_aut<=thm_epsilon2": bvals["thm_epsilon2"].admits(totals["large_aut"]),
            "bad<=thm_epsilon2": bvals["thm_epsilon2"].admits(totals["bad"]),
            "gw<=lemma_gw_graph": bvals["lemma_gw_graph"].admits(totals["gw"]),
            "nor<=lemma_nor_graph": bvals["lemma_nor_graph"].admits(totals["nor"]),
            "ex<=lemma_ex": bvals["lemma_ex"].admits(totals["ex"]),
            "ex_quadruples<=lemma_ex": bvals["lemma_ex"].admits(ex_quadruple_count(g)),
        }
    else:
        checks = {
            "large_aut<=thm_epsilon1": bvals["thm_epsilon1"].admits(totals["large_aut"]),
            "bad<=thm_epsilon1": bvals["thm_epsilon1"].admits(totals["bad"]),
            "gw<=lemma_gw_digraph": bvals["lemma_gw_digraph"].admits(totals["gw_raw"]),
            "nor<=lemma_nor_digraph": bvals["lemma_nor_digraph"].admits(totals["nor"]),
        }
    solver = {"orbits": len(reps), "search_nodes": int(sum(r.nodes for r in results))}
    report = CensusReport(g, mode, totals, bvals, checks, violations, solver,
                          wall_time=time.perf_counter() - t0)
    report.arrays = {"masks": masks, "good": good_status, "drr": drr, "gw": gw, "gw_raw": gw_raw,
                     "nor": nor, "ex": ex, "labels": labels, "rep_masks": reps,
                     "rep_aut_order": rep_order, "rep_canonical": [r.canonical for r in results]}
    return report


def drr_trend(orders=range(2, 17), jobs: int = 1) -> list:
    """Exact DRR proportion of ``Z_n`` for each ``n`` (reported, not asserted monotone)."""
    from .abelian import make_group
    rows = []
    for n in orders:
        rep = exact_census(make_group([n]), "digraph", jobs=jobs)
        rows.append({"group": str(n), "n": n, "subsets": rep.totals["subsets"], "drr": rep.totals["drr"],
                     "proportion": rep.proportions["drr"]})
    return rows


# ---- sampling ----

def trial_rng(seed: int, trial: int) -> np.random.Generator:
    """Per-trial generator: PCG64 seeded by ``SeedSequence(seed, spawn_key=(trial,))``."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(trial,))))


def sample_mask(g: AbelianGroup, mode: str, rng: np.random.Generator) -> int:
    """A uniform subset (digraph) or uniform inverse-closed subset (graph)."""
    if mode == "digraph":
        bits = rng.integers(0, 2, size=g.n)
        return sum(1 << i for i in range(g.n) if bits[i])
    blocks = inverse_blocks(g)
    bits = rng.integers(0, 2, size=len(blocks))
    m = 0
    for j, b in enumerate(blocks):
        if bits[j]:
            m |= b
    return m


class _GoodCache:
    """Memo of good/bad status keyed by the least ``Aut(A)``-image of a mask."""

    def __init__(self, g, mode, aut_limit=2000):
        self.g = g
        self.mode = mode
        auts = group_data(g).automorphisms if g.n <= 16 else ()
        self.auts = auts if len(auts) <= aut_limit else ()
        self.memo = {}

    def key(self, mask):
        if not self.auts:
            return mask
        best = mask
        for phi in self.auts:
            m = 0
            for i in iter_bits(mask):
                m |= 1 << phi[i]
            best = min(best, m)
        return best

    def good(self, mask) -> bool:
        k = self.key(mask)
        if k not in self.memo:
            aut = cayley_aut(self.g, ConnectionSet(self.g, k))
            self.memo[k] = aut.order == self.g.n if self.mode == "digraph" else _small_from(self.g, aut)
        return self.memo[k]


def _sample_chunk(args):
    g, mode, seed, start, stop = args
    cache = _GoodCache(g, mode)
    return [cache.good(sample_mask(g, mode, trial_rng(seed, t))) for t in range(start, stop)]


@dataclass
class SampleReport:
    group: AbelianGroup
    mode: str
    trials: int
    seed: int
    hits: int

    @property
    def estimate(self) -> float:
        return self.hits / self.trials if self.trials else 0.0

    @property
    def interval(self) -> tuple:
        return clopper_pearson(self.hits, self.trials, 0.99)

    def to_dict(self) -> dict:
        lo, hi = self.interval
        return {"group": self.group.spec, "mode": self.mode, "n": self.group.n, "trials": self.trials,
                "seed": self.seed, "hits": self.hits, "estimate": self.estimate,
                "ci99": [lo, hi], "rng": "PCG64(SeedSequence(seed, spawn_key=(trial,)))"}


def clopper_pearson(k: int, n: int, level: float = 0.99) -> tuple:
    if n == 0:
        return 0.0, 1.0
    alpha = 1 - level
    lo = 0.0 if k == 0 else float(stats.beta.ppf(alpha / 2, k, n - k + 1))
    hi = 1.0 if k == n else float(stats.beta.ppf(1 - alpha / 2, k + 1, n - k))
    return lo, hi


def binomial_band(p: float, trials: int, level: float = 0.99) -> tuple:
    """Central ``level`` band for the hit count of ``trials`` draws at rate ``p``."""
    alpha = 1 - level
    dist = stats.binom(trials, p)
    return int(dist.ppf(alpha / 2)), int(dist.isf(alpha / 2))


def sample_census(g: AbelianGroup, mode: str = "digraph", trials: int = 1000, seed: int = DEFAULT_SEED,
                  jobs: int = 1, limit: int = SAMPLE_LIMIT_N) -> SampleReport:
    _check_mode(mode)
    if g.n > limit:
        raise ResourceGuard(f"sampling limited to n <= {limit}, got {g.n}")
    if trials < 0:
        raise InvalidInput("trials must be non-negative")
    if jobs <= 1 or trials < 2 * jobs:
        hits = sum(_sample_chunk((g, mode, seed, 0, trials)))
    else:
        size = -(-trials // jobs)
        chunks = [(g, mode, seed, a, min(a + size, trials)) for a in range(0, trials, size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            hits = sum(sum(part) for part in pool.map(_sample_chunk, chunks))
    return SampleReport(g, mode, trials, seed, int(hits))


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("CAYLEY_CENSUS_JOBS", "1")))
    except ValueError:
        return 1
