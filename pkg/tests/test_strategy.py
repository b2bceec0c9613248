import random

import pytest

from menergy import (Lasso, alternation_transform, build_memoryless,
                     cpre_fixpoint, enumerate_p2_memoryless, extract_moore,
                     format_moore, lasso_values, make_game, mp_to_energy,
                     parity_to_energy, parse_moore, pure_outcome_lasso,
                     strategy_product, verify_sure_winning)
from menergy.bench import gen_exp_family, gen_paper_fixture, gen_random_game
from menergy.randomized import mp_buchi_pure
from menergy.strategy import StrategyError
from fractions import Fraction


def test_extract_zero_loop_single_memory():
    g = make_game([("s", 1, 0)], [("s", "s", (0,))], "s", 1)
    m = extract_moore(g, cpre_fixpoint(g, 0), (0,))
    assert m.size() == 1 and m.next_action == {0: "s"}
    assert verify_sure_winning(g, m, (0,)).winning


def test_extract_requires_covered_initial_credit():
    g = make_game([("s", 1, 0)], [("s", "s", (-1,))], "s", 1)
    with pytest.raises(StrategyError, match="initial memory"):
        extract_moore(g, cpre_fixpoint(g, 2), (2,))


def test_extract_expfamily_counters_adversary():
    g, _ = alternation_transform(gen_exp_family(1))
    fp = cpre_fixpoint(g, 2)
    m = extract_moore(g, fp, (1, 1))
    prod = strategy_product(g, m)
    # the choice at t1 depends on the observed adversary move
    actions = {m.next_action[i] for s, i in prod.nodes if s == "t1"}
    assert len(actions) == 2
    assert len({i for _, i in prod.nodes}) >= 2
    assert verify_sure_winning(g, m, (1, 1)).winning
    # memory bound: machine never exceeds the fixed-point antichain
    assert m.size() <= len(fp.winning.min_elements())


def test_extract_fig1_reduced_pipeline(fig1):
    reduced, _ = parity_to_energy(fig1, 7)
    galt, amap = alternation_transform(reduced)
    fp = cpre_fixpoint(galt, 7)
    credits = fp.winning.elements_at(galt.initial)
    assert credits
    m = extract_moore(galt, fp, credits[0])
    prio = {sid: fig1.priority[amap[sid]] for sid in galt.ids}
    assert verify_sure_winning(galt, m, credits[0], priorities=prio).winning


def test_product_of_memoryless_is_pruned_game():
    g = make_game([("a", 1, 0), ("b", 2, 0)],
                  [("a", "b", (1,)), ("b", "a", (-1,)), ("b", "b", (0,))], "a", 1)
    m = build_memoryless(g, {"a": "b"})
    prod = strategy_product(g, m)
    assert {s for s, _ in prod.nodes} == {"a", "b"}
    assert len(prod.nodes) == 2
    # P1 node has exactly the strategy edge; P2 keeps both
    assert len(prod.succ[prod.initial]) == 1
    bnode = next(n for n in prod.nodes if n[0] == "b")
    assert len(prod.succ[bnode]) == 2


def test_product_expfamily_counter_cycles_are_zero():
    g, amap = alternation_transform(gen_exp_family(1))
    m = extract_moore(g, cpre_fixpoint(g, 2), (1, 1))
    for adv in enumerate_p2_memoryless(g):
        lasso = pure_outcome_lasso(g, m, adv)
        assert lasso_values(g, lasso).cycle_energy == (0, 0)


def test_product_fig7_two_phase_single_lasso(fig7):
    shifted = mp_to_energy(fig7, [Fraction(3, 5)])
    m = mp_buchi_pure(shifted, {"s2"}, Fraction(16, 5))
    prod = strategy_product(fig7, m)
    # a deterministic one-player product: one 10-edge cycle
    assert len(prod.nodes) == 10
    assert all(len(v) == 1 for v in prod.succ.values())
    lasso = pure_outcome_lasso(fig7, m, {})
    assert len(lasso.cycle) == 10 and not lasso.prefix
    assert lasso_values(fig7, lasso).mean_payoff == (Fraction(3, 5),)


def test_verify_memoryless_always_left_loses_dimension_two():
    g = gen_exp_family(1)
    m = build_memoryless(g, {"t1": "t1L", "t1L": "s1", "t1R": "s1"})
    rep = verify_sure_winning(g, m, (5, 5))
    assert rep.verdict == "losing" and rep.witness_kind == "energy"
    assert rep.witness_dimension == 1  # adversary repeats s1L
    # witness replays: running sum dips below -5 in that dimension
    path = [s for s, _ in rep.witness_path]
    run = low = 0
    for a, b in zip(path, path[1:]):
        run += g.weight[(a, b)][1]
        low = min(low, run)
    assert low < -5


def test_verify_counter_machine_wins():
    g, _ = alternation_transform(gen_exp_family(1))
    m = extract_moore(g, cpre_fixpoint(g, 2), (1, 1))
    assert verify_sure_winning(g, m, (1, 1)).winning


def test_verify_zero_loop_even_priority():
    g = make_game([("s", 1, 0)], [("s", "s", (0,))], "s", 1)
    m = build_memoryless(g, {"s": "s"})
    assert verify_sure_winning(g, m, (0,)).winning
    assert verify_sure_winning(g, m, (3,)).winning


def test_verify_catches_odd_priority_cycle():
    g = make_game([("a", 1, 1), ("b", 1, 2)],
                  [("a", "b", (0,)), ("b", "a", (0,))], "a", 1)
    m = build_memoryless(g, {"a": "b", "b": "a"})
    rep = verify_sure_winning(g, m, (0,))
    assert rep.verdict == "losing" and rep.witness_kind == "parity"
    cyc = rep.witness_cycle
    assert min(g.priority[s] for s, _ in cyc) % 2 == 1
    # the cycle replays in the product
    prod = strategy_product(g, m)
    for a, b in zip(cyc, cyc[1:] + [cyc[0]]):
        assert b in dict(prod.succ[a])


def test_verify_priority_override(fig1):
    # all-zero priorities after reduction, original parity via the map
    g = make_game([("a", 1, 0), ("b", 1, 0)],
                  [("a", "b", (0,)), ("b", "a", (0,))], "a", 1)
    m = build_memoryless(g, {"a": "b", "b": "a"})
    assert verify_sure_winning(g, m, (0,)).winning
    rep = verify_sure_winning(g, m, (0,), priorities={"a": 1, "b": 2})
    assert rep.verdict == "losing" and rep.witness_kind == "parity"


def test_enumerate_p2_counts():
    assert len(list(enumerate_p2_memoryless(gen_exp_family(1)))) == 2
    assert list(enumerate_p2_memoryless(gen_paper_fixture("fig7"))) == [{}]
    strats = list(enumerate_p2_memoryless(gen_paper_fixture("fig6")))
    assert strats == [{"s1": "s2"}, {"s1": "s3"}]


def test_enumerate_p2_limit():
    g = gen_random_game(8, 1, 1, 0.0, 0, seed=1)  # everything player 2
    with pytest.raises(StrategyError, match="limit"):
        list(enumerate_p2_memoryless(g, limit=2))


def test_pure_outcome_self_loop():
    g = make_game([("s", 1, 0)], [("s", "s", (0,))], "s", 1)
    m = build_memoryless(g, {"s": "s"})
    lasso = pure_outcome_lasso(g, m, {})
    assert lasso == Lasso((), ("s",))


def test_verifier_agrees_with_bounded_play_enumeration():
    def plays_violate(prod, v0, depth):
        stack = [(prod.initial, (0,) * len(v0), 0)]
        while stack:
            node, acc, d = stack.pop()
            if any(a < -v for a, v in zip(acc, v0)):
                return True
            if d < depth:
                for nxt, w in prod.succ[node]:
                    stack.append((nxt, tuple(a + x for a, x in zip(acc, w)), d + 1))
        return False

    rng = random.Random(7)
    checked = 0
    seed = 0
    while checked < 25:
        seed += 1
        g = gen_random_game(rng.randint(2, 6), rng.randint(1, 2),
                            rng.randint(0, 2), 0.5, rng.randint(0, 3),
                            seed=500 + seed)
        choice = {s: rng.choice([e.dst for e in g.succ[s]])
                  for s in g.ids if g.owner[s] == 1}
        m = build_memoryless(g, choice)
        prod = strategy_product(g, m)
        if len(prod.nodes) > 30:
            continue
        v0 = tuple(rng.randint(0, 3) for _ in range(g.dimension))
        rep = verify_sure_winning(g, m, v0)
        if rep.winning:
            assert not plays_violate(prod, v0, 12)
        elif plays_violate(prod, v0, 12):
            assert not rep.winning
        checked += 1


def test_moore_serialization_round_trip():
    g, _ = alternation_transform(gen_exp_family(1))
    m = extract_moore(g, cpre_fixpoint(g, 2), (1, 1))
    m2 = parse_moore(format_moore(m))
    assert m2 == m
    assert verify_sure_winning(g, m2, (1, 1)).winning


def test_parse_moore_errors():
    with pytest.raises(StrategyError):
        parse_moore("mem 0 s\n")
    with pytest.raises(StrategyError):
        parse_moore("moore states=2 init=0\nmem 0 s\n")
