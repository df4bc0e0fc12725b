import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from simrel import build_succ_index, members, succ_of, ts_to_ats
from simrel.generate import random_ats

import util


def test_fix1_index(fix1):
    idx = build_succ_index(fix1)
    assert idx.count == 3
    # characteristic-vector order: {1} < {0} < {0,1}
    assert idx.g_lists == ((1,), (0,), (0, 1))
    assert succ_of(idx, 0, 0) == 2  # action a
    assert succ_of(idx, 0, 1) == 0  # action b
    assert succ_of(idx, 1, 0) == 1


def test_embedding_index_is_deduplicated(fix2_ats):
    idx = build_succ_index(fix2_ats)
    # both states step to state 1, so only one distinct successor set exists
    assert idx.count == 1
    assert idx.g_lists == ((1,),)
    assert all(len(g) == 1 for g in idx.g_lists)


def test_members_and_errors(fix1):
    idx = build_succ_index(fix1)
    assert members(idx, 2) == (0, 1)
    assert members(idx, 0) == (1,)
    with pytest.raises(IndexError):
        members(idx, 3)
    with pytest.raises(ValueError):
        succ_of(idx, 1, 1)  # action b not enabled at state 1


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_index_matches_enumeration_oracle(seed):
    rng = random.Random(seed)
    k = random_ats(rng, rng.randint(1, 6), rng.randint(1, 3),
                   rng.randint(1, 3), rng.randint(1, 3))
    idx = build_succ_index(k)
    oracle_sets = util.succ_sets_oracle(k)
    for (w, a), expected in oracle_sets.items():
        assert frozenset(members(idx, succ_of(idx, w, a))) == expected


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32))
def test_canonical_id_assignment(seed):
    rng = random.Random(seed)
    k = random_ats(rng, rng.randint(1, 8), rng.randint(1, 3),
                   rng.randint(1, 3), rng.randint(1, 2))
    idx = build_succ_index(k)
    oracle = util.canonical_ids_oracle(k)
    assert idx.count == len(oracle)
    for s, i in oracle.items():
        assert idx.g_lists[i] == tuple(sorted(s))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 2**32))
def test_bijectivity_and_bounds(seed):
    rng = random.Random(seed)
    n, a1 = rng.randint(1, 7), rng.randint(1, 3)
    k = random_ats(rng, n, a1, rng.randint(1, 3), rng.randint(1, 3))
    idx = build_succ_index(k)
    assert idx.count <= n * a1
    assert len(set(idx.g_lists)) == idx.count
    assert all(g and g == tuple(sorted(set(g))) for g in idx.g_lists)
    hit = {idx.h_table[w][a] for w in range(n) for a in k.enabled1[w]}
    assert hit == set(range(idx.count))
    assert idx.trie_nodes <= n * n * a1 + n


def test_ts_embedding_counts(fix3):
    idx = build_succ_index(ts_to_ats(fix3))
    assert idx.count == 1 and idx.g_lists == ((0,),)
