import itertools
import random

import pytest

from menergy.antichain import Antichain, AntichainError


def test_insert_dominates_existing():
    a = Antichain(["s"], 3, 2).insert_min("s", (2, 2)).insert_min("s", (1, 2))
    assert a.elements_at("s") == ((1, 2),)


def test_insert_dominated_is_noop():
    a = Antichain(["s"], 3, 2).insert_min("s", (1, 2)).insert_min("s", (2, 2))
    assert a.elements_at("s") == ((1, 2),)


def test_insert_incomparable_keeps_both():
    a = Antichain(["s"], 3, 2).insert_min("s", (1, 2)).insert_min("s", (0, 3))
    assert a.elements_at("s") == ((0, 3), (1, 2))


def test_insert_range_check():
    a = Antichain(["s"], 2, 1)
    with pytest.raises(AntichainError):
        a.insert_min("s", (3,))
    with pytest.raises(AntichainError):
        a.insert_min("s", (-1,))


def test_contains_upward():
    a = Antichain(["s", "t"], 3, 2).insert_min("s", (1, 2))
    assert a.contains_upward("s", (1, 3))
    assert not a.contains_upward("s", (0, 9))  # above the cap is fine to ask
    assert not a.contains_upward("t", (3, 3))


def test_set_equal_order_independent():
    a = Antichain(["s"], 3, 2).insert_min("s", (1, 2)).insert_min("s", (0, 3))
    b = Antichain(["s"], 3, 2).insert_min("s", (0, 3)).insert_min("s", (1, 2))
    assert a.set_equal(b)
    b.insert_min("s", (1, 1))
    assert not a.set_equal(b)


def test_set_equal_distinguishes_strict_subset():
    a = Antichain(["s"], 3, 2).insert_min("s", (1, 1))
    b = Antichain(["s"], 3, 2).insert_min("s", (1, 1)).insert_min("s", (0, 2))
    assert not a.set_equal(b) and a.subset_of(b)


def test_full_equals_all_zero_inserts():
    full = Antichain.full(["a", "b"], 2, 2)
    built = Antichain(["a", "b"], 2, 2)
    for s in ("a", "b"):
        built.insert_min(s, (0, 0))
    assert full.set_equal(built)


def test_set_equal_universe_mismatch():
    a = Antichain(["s"], 2, 1)
    b = Antichain(["t"], 2, 1)
    with pytest.raises(AntichainError):
        a.set_equal(b)
    c = Antichain(["s"], 3, 1)
    with pytest.raises(AntichainError):
        a.set_equal(c)


def test_min_elements_canonical_order():
    a = Antichain(["b", "a"], 3, 2)
    a.insert_min("b", (1, 0)).insert_min("a", (0, 3)).insert_min("a", (1, 2))
    assert a.min_elements() == [("a", (0, 3)), ("a", (1, 2)), ("b", (1, 0))]
    assert Antichain(["x"], 1, 1).min_elements() == []


def test_random_inserts_match_bitset_oracle():
    rng = random.Random(42)
    states = ["a", "b", "c", "d"]
    cap, dim = 3, 2
    vectors = list(itertools.product(range(cap + 1), repeat=dim))
    for _ in range(50):
        a = Antichain(states, cap, dim)
        closure = set()  # explicit upward closure
        for _ in range(rng.randint(0, 12)):
            s = rng.choice(states)
            e = rng.choice(vectors)
            a.insert_min(s, e)
            closure |= {(s, v) for v in vectors
                        if all(x <= y for x, y in zip(e, v))}
        for s in states:
            for v in vectors:
                assert a.contains_upward(s, v) == ((s, v) in closure)
        # pairwise incomparability of the stored representation
        for s in states:
            elems = a.elements_at(s)
            for x, y in itertools.permutations(elems, 2):
                assert not all(p <= q for p, q in zip(x, y))
        # size never exceeds the largest antichain of the credit lattice
        width = max(
            sum(1 for v in vectors if sum(v) == level)
            for level in range(cap * dim + 1))
        for s in states:
            assert len(a.elements_at(s)) <= width
