from fractions import Fraction

import pytest

from menergy import (completeness_cap, depth_bound, make_game, mp_to_energy,
                     parity_to_energy)
from menergy.bench import gen_paper_fixture, gen_random_game

F = Fraction


def chain_game(n, w=1, d=1):
    """n states in a ring, all weights w, out-degree d via extra edges."""
    states = [(f"s{i}", 1, 0) for i in range(n)]
    edges = [(f"s{i}", f"s{(i + 1) % n}", (w,)) for i in range(n)]
    return make_game(states, edges, "s0", 1)


def test_depth_bound_hand_values():
    # |S|=2, d=1, W=1, k=1, c=1 -> 2^0 * 3^1
    assert depth_bound(chain_game(2), 1) == 3
    # |S|=1, d=1, W=1, k=1, c=1 -> 2^0 * 2^1
    assert depth_bound(chain_game(1), 1) == 2


def test_depth_bound_degree_one_collapses_first_factor():
    for n in (2, 3, 5):
        g = chain_game(n)
        assert depth_bound(g, 1) == (n + 1) ** 1


def test_depth_bound_treats_zero_weight_as_one():
    g = make_game([("s", 1, 0)], [("s", "s", (0,))], "s", 1)
    assert depth_bound(g, 1) == 2


def test_completeness_cap_values():
    assert completeness_cap(chain_game(1), 1) == 4
    fig7 = gen_paper_fixture("fig7")
    # |S|=2, d=2, W=1, k=1, c=1: l = 2^2*3 = 12, C = 2*12*1
    assert completeness_cap(fig7, 1) == 24


def test_completeness_cap_monotone_in_weight():
    g1 = chain_game(3, w=1)
    g2 = chain_game(3, w=2)
    assert completeness_cap(g2, 1) > completeness_cap(g1, 1)


def test_parity_to_energy_fig1_edges(fig1):
    reduced, report = parity_to_energy(fig1, 7)
    assert reduced.dimension == 4
    assert report.added_dimensions == 2
    assert report.priority_to_dimension == {1: 2, 3: 3}
    w = reduced.weight
    # p(s5)=0 is even and below both odd priorities: both new dims gain l
    assert w[("s3", "s5")] == (-2, 1, 7, 7)
    # p(s4)=3: only the priority-3 dimension decrements
    assert w[("s3", "s4")] == (1, -1, 0, -1)
    # p(s2)=1: only the priority-1 dimension decrements
    assert w[("s0", "s2")] == (0, 2, -1, 0)
    # p(s3)=2: even, below 3 but not below 1
    assert w[("s1", "s3")] == (0, 1, 0, 7)
    # priorities are dropped
    assert all(s.priority == 0 for s in reduced.states)
    assert [s.id for s in reduced.states] == [s.id for s in fig1.states]


def test_parity_to_energy_all_even_priorities_add_nothing():
    g = make_game([("a", 1, 0), ("b", 2, 0)],
                  [("a", "b", (1,)), ("b", "a", (-1,))], "a", 1)
    reduced, report = parity_to_energy(g, 5)
    assert report.added_dimensions == 0 and reduced.dimension == 1
    assert reduced.weight == g.weight


def test_parity_to_energy_rejects_bad_reward(fig1):
    with pytest.raises(ValueError):
        parity_to_energy(fig1, 0)


def simple_cycles(g):
    """All simple cycles as state lists (first state is minimal id)."""
    out = []

    def search(path, start):
        cur = path[-1]
        for e in g.succ[cur]:
            if e.dst == start:
                out.append(list(path))
            elif e.dst not in path and e.dst > start:
                search(path + [e.dst], start)

    for s in g.ids:
        search([s], s)
    return out


def test_parity_reduction_cycle_characterization():
    # On every simple cycle: non-negative added dimensions (with l >= |S|)
    # iff the minimal original priority on the cycle is even.
    for seed in range(30):
        g = gen_random_game(4, 1, 1, 0.5, priority_max=3, seed=seed)
        l = len(g.states) + 1
        reduced, report = parity_to_energy(g, l)
        for cyc in simple_cycles(g):
            closed = cyc + [cyc[0]]
            total = [0] * reduced.dimension
            for a, b in zip(closed, closed[1:]):
                total = [x + y for x, y in zip(total, reduced.weight[(a, b)])]
            added_ok = all(x >= 0 for x in total[g.dimension:])
            min_prio = min(g.priority[s] for s in cyc)
            assert added_ok == (min_prio % 2 == 0), (seed, cyc)


def test_mp_to_energy_fig7(fig7):
    shifted = mp_to_energy(fig7, [F(3, 5)])
    assert shifted.weight[("s1", "s1")] == (2,)
    assert shifted.weight[("s1", "s2")] == (-8,)
    assert shifted.weight[("s2", "s1")] == (-8,)


def test_mp_to_energy_zero_threshold_is_identity(fig7):
    assert mp_to_energy(fig7, [F(0)]).weight == fig7.weight


def test_mp_to_energy_fig5(fig5):
    shifted = mp_to_energy(fig5, [F(1), F(1)])
    assert shifted.weight[("s2", "s2")] == (1, -1)
    assert shifted.weight[("s3", "s3")] == (-1, 1)


def test_mp_to_energy_dimension_check(fig5):
    with pytest.raises(ValueError):
        mp_to_energy(fig5, [F(1)])


def test_mp_to_energy_lasso_equivalence():
    # Cycle has non-negative transformed energy in dim j iff its exact
    # mean-payoff is >= v(j).
    thresholds = [F(1, 2), F(-2, 3)]
    for seed in range(20):
        g = gen_random_game(4, 2, 2, 0.5, 0, seed=seed)
        shifted = mp_to_energy(g, thresholds)
        for cyc in simple_cycles(g):
            lasso_cycle = cyc + [cyc[0]]
            n = len(cyc)
            for j in range(2):
                mp = F(sum(g.weight[(a, b)][j]
                           for a, b in zip(lasso_cycle, lasso_cycle[1:])), n)
                shifted_sum = sum(shifted.weight[(a, b)][j]
                                  for a, b in zip(lasso_cycle, lasso_cycle[1:]))
                assert (shifted_sum >= 0) == (mp >= thresholds[j])
