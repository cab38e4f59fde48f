from __future__ import annotations

from itertools import permutations

import pytest

from mvparking.parking import displacement_mvp, is_parking_function
from mvparking.perms import dec, split_right
from mvparking.subgraphs import (
    NotASubgraph,
    SizeCapExceeded,
    bounds,
    check_one_subgraph,
    count_one_subgraphs,
    enumerate_one_subgraphs,
    fibre_brute,
    fibre_via_subgraphs,
    format_arcs,
    hs_count,
    is_hs,
    is_p2_free,
    is_valid,
    p2_free_count,
    parse_arcs,
    pf_to_subgraph,
    subgraph_to_pf,
    valid_subgraphs,
)

from helpers import all_preferences


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_one_subgraphs((2, 3, 1))) == 3
    assert sum(1 for _ in enumerate_one_subgraphs((3, 1, 2))) == 4
    assert sum(1 for _ in enumerate_one_subgraphs(dec(4))) == 24


def test_enumeration_matches_product_formula_and_is_duplicate_free():
    for n in range(1, 6):
        for word in permutations(range(1, n + 1)):
            subs = list(enumerate_one_subgraphs(word))
            assert len(subs) == count_one_subgraphs(word)
            assert len(set(subs)) == len(subs)
            for sub in subs:
                check_one_subgraph(sub, word)  # must not raise


def test_pf_to_subgraph_goldens():
    assert pf_to_subgraph((1, 1, 1)) == frozenset({(1, 2), (1, 3)})
    assert pf_to_subgraph((2, 3, 1)) == frozenset()
    assert pf_to_subgraph((2, 2, 1, 2, 5)) == frozenset({(2, 3), (2, 4)})


def test_subgraph_to_pf_goldens():
    assert subgraph_to_pf({(2, 3), (2, 4)}, (3, 4, 1, 2, 5)) == (2, 2, 1, 2, 5)
    word = (4, 2, 3, 1, 5)
    assert subgraph_to_pf(frozenset(), word) == subgraph_to_pf([], word)
    # empty subgraph: the car in spot i prefers i
    prefs = subgraph_to_pf(frozenset(), word)
    for i, car in enumerate(word, start=1):
        assert prefs[car - 1] == i
    # eleven-vertex arc diagram on the decreasing permutation
    delta = {(1, 6), (3, 5), (7, 10), (8, 9)}
    assert subgraph_to_pf(delta, dec(11)) == (11, 7, 8, 8, 7, 1, 3, 4, 3, 2, 1)


def test_subgraph_to_pf_rejects_bad_subgraphs():
    with pytest.raises(NotASubgraph):
        subgraph_to_pf({(1, 2)}, (1, 2, 3))  # not an inversion
    with pytest.raises(NotASubgraph):
        subgraph_to_pf({(1, 3), (2, 3)}, (3, 2, 1))  # two left-arcs at 3
    with pytest.raises(ValueError):
        subgraph_to_pf({(3, 2)}, (3, 2, 1))  # malformed arc


def test_is_valid_goldens():
    assert not is_valid({(1, 2), (1, 3)}, (3, 2, 1))
    for n in range(1, 6):
        for word in permutations(range(1, n + 1)):
            assert is_valid(frozenset(), word)
    # every single-arc subgraph is valid
    for word in permutations(range(1, 6)):
        for sub in enumerate_one_subgraphs(word):
            if len(sub) == 1:
                assert is_valid(sub, word)


def test_p2_free():
    assert not is_p2_free({(1, 2), (2, 3)})
    assert is_p2_free(frozenset())
    assert is_p2_free({(1, 2), (1, 3)})
    assert not is_p2_free({(2, 4), (4, 9)})


def test_hs():
    assert is_hs({(1, 2), (3, 4)})
    assert is_hs({(3, 4), (6, 9)})
    assert not is_hs({(2, 3), (1, 4)})   # nested
    assert not is_hs({(1, 3), (2, 4)})   # crossing
    assert not is_hs({(1, 3), (3, 5)})   # shared endpoint
    assert is_hs({(2, 7)})
    assert is_hs(frozenset())


def test_fibre_via_subgraphs_goldens():
    assert fibre_via_subgraphs((3, 1, 2)) == [
        (1, 1, 1), (1, 3, 1), (2, 1, 1), (2, 3, 1)]
    assert fibre_via_subgraphs((1, 2, 3, 4)) == [(1, 2, 3, 4)]
    assert len(fibre_via_subgraphs(dec(5))) == 21
    assert fibre_via_subgraphs((3, 2, 1)) == [
        (1, 2, 1), (2, 2, 1), (3, 1, 1), (3, 2, 1)]


def test_fibre_brute_matches_subgraph_method():
    assert fibre_brute((3, 1, 2)) == fibre_via_subgraphs((3, 1, 2))
    assert fibre_brute((1, 2, 3)) == [(1, 2, 3)]
    assert len(fibre_brute((3, 2, 1))) == 4
    for word in permutations(range(1, 5)):
        assert fibre_brute(word) == fibre_via_subgraphs(word)


def test_fibre_brute_cap():
    with pytest.raises(SizeCapExceeded):
        fibre_brute(dec(8))
    assert len(fibre_brute(dec(4), cap=4)) == 9


def test_pruning_does_not_change_fibres():
    for word in permutations(range(1, 5)):
        assert fibre_via_subgraphs(word, prune_p2=True) == fibre_via_subgraphs(word, prune_p2=False)
    for word in (dec(5), split_right(2, 3)):
        assert fibre_via_subgraphs(word, prune_p2=True) == fibre_via_subgraphs(word, prune_p2=False)
        assert sorted(valid_subgraphs(word, True)) == sorted(valid_subgraphs(word, False))


def test_bounds_goldens():
    assert bounds(dec(7)) == (5040, 877, 127, 64, 22)
    assert bounds((1, 2, 3, 4)) == (1, 1, 1, 1, 1)


def test_bounds_sandwich_exhaustive():
    for n in range(1, 6):
        for word in permutations(range(1, n + 1)):
            b = bounds(word)
            assert (b.single_arc_lower <= b.hs_count <= b.fibre_size
                    <= b.p2free_count <= b.product_upper)


def test_counting_helpers_match_predicates():
    for n in range(1, 6):
        for word in permutations(range(1, n + 1)):
            subs = list(enumerate_one_subgraphs(word))
            assert p2_free_count(word) == sum(1 for s in subs if is_p2_free(s))
            assert hs_count(word) == sum(1 for s in subs if is_hs(s))


def test_fibre_matches_bucketed_brute_exhaustive():
    # one sweep over all preferences per n buckets every fibre at once,
    # giving the brute oracle for every permutation of S_n, n <= 6
    from collections import defaultdict

    from mvparking.parking import outcome_mvp

    for n in range(1, 7):
        buckets: dict[tuple, list] = defaultdict(list)
        for p in all_preferences(n):
            if is_parking_function(p):
                buckets[outcome_mvp(p).outcome].append(p)
        for word in permutations(range(1, n + 1)):
            assert fibre_via_subgraphs(word) == sorted(buckets.get(word, []))


def test_dec_counts_match_bell_and_powers_of_two():
    from helpers import bell_numbers

    bells = bell_numbers(9)
    for n in range(1, 10):
        assert p2_free_count(dec(n)) == bells[n]
        assert hs_count(dec(n)) == 2 ** (n - 1)


def test_displacement_equals_arc_length_spot():
    for n in range(1, 6):
        for p in all_preferences(n):
            if not is_parking_function(p):
                continue
            assert displacement_mvp(p) == sum(i - j for j, i in pf_to_subgraph(p))


def test_counterexamples_to_matching_and_noncrossing_in_general():
    # two right-arcs at one vertex, and a crossing pair, can both be valid
    # away from the decreasing permutation
    sub = pf_to_subgraph((1, 1, 1, 2))
    assert sub == frozenset({(1, 3), (1, 4)})
    assert is_valid(sub, (3, 4, 2, 1))
    sub = pf_to_subgraph((2, 1, 2, 1, 3))
    assert sub == frozenset({(1, 4), (2, 5)})
    assert is_valid(sub, (4, 3, 5, 2, 1))


def test_arc_set_parse_format():
    assert format_arcs({(2, 4), (2, 3)}) == "2-3,2-4"
    assert format_arcs(frozenset()) == ""
    assert parse_arcs("2-3,2-4") == frozenset({(2, 3), (2, 4)})
    assert parse_arcs("") == frozenset()
    with pytest.raises(ValueError):
        parse_arcs("23")
    with pytest.raises(ValueError):
        parse_arcs("3-2")
    for word in permutations(range(1, 5)):
        for sub in enumerate_one_subgraphs(word):
            assert parse_arcs(format_arcs(sub)) == sub
