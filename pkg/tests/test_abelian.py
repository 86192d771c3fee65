import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleygrr.abelian import (abelian_groups_of_order, automorphism_group, coset_partition, generated_subgroup,
                               is_automorphism, make_group, parse_group, subgroups)
from cayleygrr.errors import InvalidInput

small_factor_lists = st.lists(st.integers(2, 6), min_size=1, max_size=3).filter(
    lambda fs: math.prod(fs) <= 64)


def test_invariant_factor_normalization():
    assert make_group([4]).factors == (4,)
    assert make_group([6, 2]).factors == (2, 6)
    assert make_group([6, 2]).n == 12
    g = make_group([2, 2, 2])
    assert g.factors == (2, 2, 2) and g.exponent == 2
    assert make_group([3, 4]).factors == (12,)


@pytest.mark.parametrize("bad", [[], [1], [0], [4, -2]])
def test_invalid_factors(bad):
    with pytest.raises(InvalidInput):
        make_group(bad)


def test_parse_group_names_bad_token():
    assert parse_group("2, 4").factors == (2, 4)
    with pytest.raises(InvalidInput, match="'x'"):
        parse_group("2,x")


def test_element_orders():
    g = make_group([2, 6])
    assert g.element_order(g.encode((1, 1))) == 6
    assert g.element_order(0) == 1
    assert make_group([8]).element_order(4) == 2


def test_involution_counts():
    assert make_group([9]).involution_count == 1
    assert make_group([2, 6]).involution_count == 4
    assert make_group([2, 2, 2]).involution_count == 8


def test_iota():
    assert make_group([4]).iota() == (0, 3, 2, 1)
    assert make_group([2, 2]).iota() == (0, 1, 2, 3)
    assert make_group([5]).iota() == tuple((5 - x) % 5 for x in range(5))


def test_subgroup_counts():
    assert [s.elements for s in subgroups(make_group([4]))] == [[0], [0, 2], [0, 1, 2, 3]]
    assert len(subgroups(make_group([2, 2]))) == 5
    assert len(subgroups(make_group([6]))) == 4
    assert len(subgroups(make_group([2, 2, 2]))) == 16
    assert len(subgroups(make_group([4, 4]))) == 15


def test_automorphism_counts():
    assert automorphism_group(make_group([4])) == [(0, 1, 2, 3), (0, 3, 2, 1)]
    assert len(automorphism_group(make_group([8]))) == 4
    assert len(automorphism_group(make_group([2, 4]))) == 8
    assert len(automorphism_group(make_group([2, 2, 2, 2]))) == 20160


def test_automorphisms_of_klein_group_match_permutation_filter():
    g = make_group([2, 2])
    brute = sorted(p for p in itertools.permutations(range(4)) if is_automorphism(g, p))
    assert automorphism_group(g) == brute and len(brute) == 6


def test_coset_partition():
    g = make_group([4])
    h = generated_subgroup(g, [2])
    assert coset_partition(g, h) == [0b0101, 0b1010]
    assert coset_partition(g, generated_subgroup(g, [])) == [1 << i for i in range(4)]
    assert coset_partition(g, generated_subgroup(g, [1])) == [0b1111]


def test_abelian_groups_of_order():
    assert [g.factors for g in abelian_groups_of_order(16)] == [(16,), (2, 8), (4, 4), (2, 2, 4), (2, 2, 2, 2)]
    assert sum(len(abelian_groups_of_order(n)) for n in range(2, 17)) == 24


@given(small_factor_lists, st.data())
def test_encode_decode_roundtrip(fs, data):
    g = make_group(fs)
    coords = tuple(data.draw(st.integers(0, d - 1)) for d in g.factors)
    assert g.decode(g.encode(coords)) == coords
    assert g.encode((0,) * len(g.factors)) == 0


@given(small_factor_lists)
def test_group_structure_properties(fs):
    g = make_group(fs)
    assert all(b % a == 0 for a, b in zip(g.factors, g.factors[1:]))
    assert math.prod(g.factors) == g.n
    assert g.involution_count == sum(1 for a in range(g.n) if g.add(a, a) == 0)
    bound = 2 ** (math.log2(g.n) ** 2)
    subs = subgroups(g)
    assert len(subs) <= bound
    for h in subs:
        assert g.n % h.order == 0
        blocks = coset_partition(g, h)
        assert sum(blocks) == (1 << g.n) - 1
        assert all(b.bit_count() == h.order for b in blocks)


@given(small_factor_lists.filter(lambda fs: math.prod(fs) <= 32))
def test_automorphisms_are_homomorphisms_and_include_iota(fs):
    g = make_group(fs)
    auts = automorphism_group(g)
    assert len(auts) <= 2 ** (math.log2(g.n) ** 2)
    assert all(is_automorphism(g, p) for p in auts)
    iota = g.iota()
    assert iota in auts
    assert tuple(iota[iota[a]] for a in range(g.n)) == tuple(range(g.n))
    assert auts == sorted(set(auts))
