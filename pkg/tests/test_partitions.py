from fractions import Fraction as F

import pytest

from polydiag import linalg
from polydiag.partitions import (
    FILTERS,
    BTypePartition,
    basis,
    classify,
    contains,
    enumerate_btype_partitions,
    enumerate_tagged_partitions,
    from_btype,
    from_json,
    orthogonal_to_ones,
    parse_typical_element,
    relabel,
    tagged,
    to_btype,
    to_json,
    type_label,
    typical_element,
)


def running_example():
    # classes {1},{2,4},{3},{5,6}; {1}* = {2,4}; {5,6} fixed
    return tagged(6, [[1], [2, 4], [3], [5, 6]], [(0, 1)], 3)


def all_typicals(n, pred=None):
    return [typical_element(p) for p in enumerate_tagged_partitions(n, pred)]


def test_enumeration_n2_matches_table():
    assert sorted(all_typicals(2)) == sorted(
        ["(0,0)", "(a,-a)", "(0,a)", "(a,0)", "(a,a)", "(a,b)"]
    )


def test_enumeration_n3_matches_table():
    assert len(all_typicals(3)) == 24
    assert sorted(all_typicals(3, lambda c: c.synchrony)) == sorted(
        ["(a,a,a)", "(a,b,b)", "(a,b,a)", "(a,a,b)", "(a,b,c)"]
    )
    assert sorted(all_typicals(3, lambda c: c.evenly_tagged)) == sorted(
        ["(0,0,0)", "(0,a,-a)", "(a,0,-a)", "(a,-a,0)"]
    )
    fully_not_evenly = all_typicals(3, lambda c: c.fully_tagged and not c.evenly_tagged)
    assert sorted(fully_not_evenly) == sorted(["(a,-a,-a)", "(a,-a,a)", "(a,a,-a)"])
    assert len(all_typicals(3, lambda c: c.minimally_tagged)) == 10  # 9 nontrivial + (0,0,0)


def test_enumeration_n0():
    ps = list(enumerate_tagged_partitions(0))
    assert len(ps) == 1
    c = classify(ps[0])
    assert c.synchrony and c.fully_tagged and c.evenly_tagged and not c.minimally_tagged
    assert typical_element(ps[0]) == "()"


def test_enumeration_unique():
    for n in range(6):
        ps = list(enumerate_tagged_partitions(n))
        assert len(set(ps)) == len(ps)


def test_classify_examples():
    c = classify(parse_typical_element("(a,-a,0)"))
    assert c.evenly_tagged and c.fully_tagged and c.anti_synchrony and not c.freely_tagged
    c = classify(parse_typical_element("(a,a,-a)"))
    assert c.fully_tagged and not c.evenly_tagged and c.freely_tagged
    c = classify(parse_typical_element("(a,b,0)"))
    assert c.minimally_tagged and not c.fully_tagged
    assert type_label(parse_typical_element("(0,0)")) == "trivial"


def test_classify_flag_consistency():
    for n in range(6):
        for p in enumerate_tagged_partitions(n):
            c = classify(p)
            assert c.synchrony != c.anti_synchrony
            if c.evenly_tagged:
                assert c.fully_tagged
            if c.minimally_tagged and c.fully_tagged:
                assert p.dimension() == 0


def test_typical_element_running_example():
    assert typical_element(running_example()) == "(a,-a,b,-a,0,0)"


def test_parse_typical_element():
    assert parse_typical_element("(a,a)") == tagged(2, [[1, 2]])
    assert parse_typical_element("(a,-a,b,-a,0,0)") == running_example()
    for bad in ("(b,a)", "(-a,a)", "a,b", "(a,A)", "(0,-0)"):
        with pytest.raises(ValueError):
            parse_typical_element(bad)


def test_typical_round_trip_small_n():
    for n in range(6):
        for p in enumerate_tagged_partitions(n):
            assert parse_typical_element(typical_element(p)) == p


def test_basis_examples():
    vecs = basis(running_example())
    assert vecs == [
        tuple(map(F, (1, -1, 0, -1, 0, 0))),
        tuple(map(F, (0, 0, 1, 0, 0, 0))),
    ]
    assert basis(tagged(2, [[1], [2]])) == [tuple(map(F, (1, 0))), tuple(map(F, (0, 1)))]
    assert basis(tagged(2, [[1, 2]], fixed=0)) == []


def test_basis_vectors_lie_in_subspace_and_are_independent():
    for n in range(5):
        for p in enumerate_tagged_partitions(n):
            vecs = basis(p)
            assert all(contains(p, b) for b in vecs)
            if vecs:
                assert linalg.rank(linalg.matrix(vecs)) == len(vecs)
            assert len(vecs) == p.dimension()


def test_contains_examples():
    pair = parse_typical_element("(a,-a)")
    assert contains(pair, (3, -3))
    assert not contains(pair, (1, 1))
    aba = parse_typical_element("(a,b,a)")
    assert contains(aba, (1, 2, 1))
    with pytest.raises(ValueError):
        contains(pair, (1, 2, 3))


def test_orthogonal_to_ones_examples():
    assert orthogonal_to_ones(parse_typical_element("(a,-a,0)"))
    assert not orthogonal_to_ones(parse_typical_element("(a,a,-a)"))
    assert not orthogonal_to_ones(parse_typical_element("(a,b,c)"))


def test_orthodiagonal_biconditional_small():
    for n in range(5):
        for p in enumerate_tagged_partitions(n):
            assert classify(p).evenly_tagged == orthogonal_to_ones(p)


def test_distinct_partitions_give_distinct_subspaces():
    for n in range(5):
        signatures = set()
        count = 0
        for p in enumerate_tagged_partitions(n):
            count += 1
            vecs = basis(p)
            sig = linalg.rref(linalg.matrix(vecs))[0] if vecs else ("empty", n)
            signatures.add(sig)
        assert len(signatures) == count


def test_relabel_canonicalizes():
    p = parse_typical_element("(a,-a,b)")
    # 1 <-> 3: the pair moves to cells 2 and 3
    assert typical_element(relabel(p, (3, 2, 1))) == "(a,b,-b)"
    assert relabel(p, (1, 2, 3)) == p


# ---------------------------------------------------------------------------
# B-type partitions


def test_btype_running_example():
    q = to_btype(running_example())
    assert q.classes == frozenset(
        frozenset(s)
        for s in [{-4, -2, 1}, {-1, 2, 4}, {3}, {-3}, {-6, -5, 0, 5, 6}]
    )


def test_btype_empty_partition():
    q = to_btype(tagged(0, []))
    assert q.classes == frozenset({frozenset({0})})
    assert from_btype(q) == tagged(0, [])


def test_btype_round_trip_small():
    for n in range(5):
        for p in enumerate_tagged_partitions(n):
            assert from_btype(to_btype(p)) == p


def test_btype_counts_match_polydiagonals():
    assert sum(1 for _ in enumerate_btype_partitions(1)) == 2
    assert sum(1 for _ in enumerate_btype_partitions(3)) == 24


def test_btype_direct_enumeration_round_trip():
    for n in range(4):
        for q in enumerate_btype_partitions(n):
            assert to_btype(from_btype(q)) == q


def test_btype_validation():
    with pytest.raises(ValueError):
        BTypePartition(1, frozenset({frozenset({0, 1}), frozenset({-1})})).validate()


# ---------------------------------------------------------------------------
# serialization


def test_json_round_trip():
    for n in range(5):
        for p in enumerate_tagged_partitions(n):
            assert from_json(to_json(p)) == p


def test_json_matches_documented_shape():
    import json

    d = json.loads(to_json(tagged(4, [[1], [2], [3], [4]], [(0, 1)], 3)))
    assert d == {
        "n": 4,
        "classes": [[1], [2], [3], [4]],
        "involution": {"0": 1},
        "fixed": 3,
    }


def test_filters_cover_documented_names():
    assert {"synchrony", "anti-synchrony", "minimally", "fully", "evenly", "freely"} <= set(FILTERS)
