"""Objective reductions: parity to extra energy dimensions, mean-payoff
thresholds to energy, and the theoretical credit caps.

The parity reduction adds one dimension per odd priority q up to the
maximal priority in the game: that dimension loses 1 whenever a state of
priority q is entered and gains the reward l whenever a state of smaller
even priority is entered.  With l at least the length of the longest
stretch avoiding a smaller even priority, keeping these dimensions
non-negative is equivalent to the parity condition.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Sequence, Tuple

from .game import Edge, GameStructure, State, game_stats


@dataclass(frozen=True)
class ReductionReport:
    added_dimensions: int
    priority_to_dimension: Dict[int, int]  # odd priority -> 0-based dim index
    reward: int                            # the increment constant l
    cap_hint: int


def depth_bound(g: GameStructure, c_const: int = 1) -> int:
    """Theoretical strategy-tree depth bound 2^((d-1)|S|) * (W|S|+1)^(c k^2).

    The constant c is not pinned down by theory and is supplied by the
    caller.  W = 0 is treated as W = 1: with all-zero weights any credit
    wins, so the bound is only ever used as a formal cap.
    """
    stats = game_stats(g)
    w = max(stats.max_abs_weight, 1)
    n = len(g.states)
    d = stats.branching
    return 2 ** ((d - 1) * n) * (w * n + 1) ** (c_const * g.dimension ** 2)


def completeness_cap(g: GameStructure, c_const: int = 1) -> int:
    """Credit threshold 2*l*W above which the fixed point is complete."""
    w = max(game_stats(g).max_abs_weight, 1)
    return 2 * depth_bound(g, c_const) * w


def default_reward(g: GameStructure) -> int:
    """Practical reward l = |S| + 1: any cycle avoiding a smaller even
    priority has length at most |S|."""
    return len(g.states) + 1


def parity_to_energy(g: GameStructure, l: int) -> Tuple[GameStructure, ReductionReport]:
    """Encode the parity condition of g into extra energy dimensions.

    The result keeps the original states and edges, has dimension k + m
    where m covers the odd priorities 1, 3, ..., up to the maximal
    priority, and drops the priority function (all priorities zero).
    Charges attach to the target state of each edge.
    """
    if l <= 0:
        raise ValueError("reward l must be positive")
    max_prio = max(s.priority for s in g.states)
    odd = list(range(1, max_prio + 1, 2))
    m = len(odd)
    prio_to_dim = {q: g.dimension + i for i, q in enumerate(odd)}
    states = tuple(State(s.id, s.owner, 0) for s in g.states)
    edges = []
    for e in g.edges:
        pt = g.priority[e.dst]
        extra = []
        for q in odd:
            if pt == q:
                extra.append(-1)
            elif pt % 2 == 0 and pt < q:
                extra.append(l)
            else:
                extra.append(0)
        edges.append(Edge(e.src, e.dst, e.weight + tuple(extra)))
    g2 = GameStructure(states, tuple(edges), g.initial, g.dimension + m)
    report = ReductionReport(m, prio_to_dim, l, completeness_cap(g2))
    return g2, report


def mp_to_energy(g: GameStructure, v: Sequence[Fraction]) -> GameStructure:
    """Shift weights so that mean-payoff >= v becomes energy at threshold 0.

    Dimension j with v(j) = n/d in lowest terms gets w'(j) = d*w(j) - n;
    a cycle then has non-negative transformed energy in dimension j iff
    its exact mean-payoff is at least v(j).
    """
    if len(v) != g.dimension:
        raise ValueError(f"threshold has length {len(v)}, expected {g.dimension}")
    thresholds = [Fraction(x) for x in v]
    edges = tuple(
        Edge(e.src, e.dst,
             tuple(t.denominator * w - t.numerator
                   for w, t in zip(e.weight, thresholds)))
        for e in g.edges)
    return GameStructure(g.states, edges, g.initial, g.dimension)
