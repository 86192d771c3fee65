import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleygrr.abelian import abelian_groups_of_order, automorphism_group, make_group
from cayleygrr.bits import iter_bits, permute_mask
from cayleygrr.cayley import ConnectionSet, is_inverse_closed, parse_set
from cayleygrr.census import ex_fibred_flags, exact_census
from cayleygrr.classify import (aut_order, classify, ex_witness, fibre_tags, group_data, gw_witness, is_drr,
                                is_small, nor_witnesses, product_set, sprime_mask)
from cayleygrr.errors import InvalidInput

groups = st.lists(st.integers(2, 6), min_size=1, max_size=3).filter(lambda fs: math.prod(fs) <= 12).map(make_group)


def S(factors, text):
    g = make_group(factors)
    return g, parse_set(g, text)


def test_aut_orders():
    assert aut_order(*S([5], "1")) == 5
    assert aut_order(*S([4], "1,3")) == 8
    assert aut_order(*S([4], "1,2,3")) == 24


def test_drr_examples():
    assert is_drr(*S([5], "1"))
    assert not is_drr(*S([4], "1,3"))
    for f in ([3], [6], [2, 2]):
        assert not is_drr(*S(f, ""))
    # Sym(2) is the regular copy of Z2
    assert is_drr(*S([2], ""))


def test_small_examples():
    assert is_small(*S([4], "1,3"))
    assert not is_small(*S([4], "1,2,3"))
    with pytest.raises(InvalidInput):
        is_small(*S([4], "1"))


def test_small_equals_drr_in_exponent_two():
    g = make_group([2, 2])
    for m in range(16):
        s = ConnectionSet(g, m)
        assert is_small(g, s) == is_drr(g, s)


def test_gw_examples():
    h, k = gw_witness(*S([4], "1,3"))
    assert h.elements == [0, 2] and k.elements == [0, 2]
    assert gw_witness(*S([4], "1")) is None
    g = make_group([7])
    assert all(gw_witness(g, ConnectionSet(g, m)) is None for m in range(128))


def test_nor_examples():
    assert nor_witnesses(*S([4], "1")) == []
    assert nor_witnesses(*S([4], "1,3")) == [(0, 3, 2, 1)]
    assert nor_witnesses(*S([4], "1,3"), exclude_iota=True) == []
    g, s = S([8], "1,3,5,7")
    assert tuple(3 * x % 8 for x in range(8)) in nor_witnesses(g, s, exclude_iota=True)


def test_ex_examples():
    g = make_group([2, 4])
    s = ConnectionSet.from_elements(g, [g.encode((z, c)) for z in range(2) for c in range(1, 4)])
    c, z, tag, s2 = ex_witness(g, s)
    assert product_set(g, sprime_mask(c, tag), s2) == s.members
    # the decomposition named by the factors also exhibits the product form
    c4 = next(x for x, zz, _ in _decomps(g) if x.elements == [0, 1, 2, 3] and zz.elements == [0, 4])
    assert product_set(g, sprime_mask(c4, "complement-of-identity"), 0b10001) == s.members

    c, z, tag, s2 = ex_witness(*S([4], "1,2,3"))
    assert c.order == 4 and z.order == 1 and tag == "complement-of-identity" and s2 == 1
    assert ex_witness(*S([4], "1,3")) is None
    with pytest.raises(InvalidInput):
        ex_witness(*S([4], "1"))


def _decomps(g):
    return group_data(g).decompositions


def test_classify_records():
    r = classify(*S([5], "1"), "digraph")
    assert r.is_drr and not r.gw and not r.nor and r.is_small is None
    r = classify(*S([4], "1,3"), "graph")
    assert r.is_small and r.gw and not r.nor and not r.ex
    r = classify(*S([4], "1,2,3"), "graph")
    assert not r.is_small and r.ex
    assert set(r.to_dict()) == {"aut_order", "is_drr", "is_small", "gw", "nor", "ex"}
    with pytest.raises(InvalidInput):
        classify(*S([4], "1"), "graph")
    with pytest.raises(InvalidInput):
        classify(*S([4], "1"), "tournament")


@given(groups, st.data())
def test_witnesses_reverify(g, data):
    s = ConnectionSet(g, data.draw(st.integers(0, (1 << g.n) - 1)))
    w = gw_witness(g, s)
    if w is not None:
        h, k = w
        assert 1 < h.order and k.order < g.n and h.members & ~k.members == 0
        rest = s.members & ~k.members
        for a in iter_bits(rest):
            assert all(rest >> g.add(a, t) & 1 for t in h.elements)
    for phi in nor_witnesses(g, s):
        assert phi != tuple(range(g.n)) and permute_mask(s.members, phi) == s.members
    if is_inverse_closed(g, s):
        e = ex_witness(g, s)
        if e is not None:
            c, z, tag, s2 = e
            assert product_set(g, sprime_mask(c, tag), s2) == s.members


@given(groups, st.data())
def test_drr_status_is_an_orbit_invariant(g, data):
    s = ConnectionSet(g, data.draw(st.integers(0, (1 << g.n) - 1)))
    phi = data.draw(st.sampled_from(automorphism_group(g)))
    assert is_drr(g, s) == is_drr(g, ConnectionSet(g, permute_mask(s.members, phi)))


def test_fibre_tags_of_looped_cube():
    g = make_group([2, 4])
    c, z, split = next(d for d in _decomps(g) if d[0].elements == [0, 2, 5, 7] and d[1].elements == [0, 6])
    assert fibre_tags(0b11011, c, z, split) == ("identity", "complement-of-identity")


def test_fibred_family_closes_every_graph_gap_up_to_sixteen():
    for n in range(2, 17):
        for g in abelian_groups_of_order(n):
            if g.exponent <= 2:
                continue
            r = exact_census(g, "graph", strict=False)
            a = r.arrays
            uncovered = ~a["good"] & ~(a["gw"] | a["nor"] | a["ex"])
            assert not (uncovered & ~ex_fibred_flags(g, a["masks"])).any(), g.name
