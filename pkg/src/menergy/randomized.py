"""Randomized memoryless strategies and the constructions that trade
strategy memory for randomness.

Covers: occurrence-frequency strategies extracted from lassos, exact
Markov-chain analysis (stationary vectors, per-BSCC mean-payoffs, reach
probabilities), attractors, good-for-energy strategies, the two-phase and
mixed constructions for mean-payoff Büchi games, the recursive
construction for one-dimension mean-payoff parity games, best responses
by exhaustive adversary enumeration, and seeded Monte Carlo estimation.

Everything except Monte Carlo is exact rational arithmetic.
"""

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from . import graphs
from .game import GameStructure, Lasso, check_lasso, game_stats, make_game
from .solver import cpre_fixpoint
from .strategy import VerifyReport, _enumerate_memoryless, verify_graph


class RandomizedError(ValueError):
    pass


@dataclass(frozen=True)
class RMStrategy:
    """Randomized memoryless strategy: state -> distribution over successors."""

    dist: Dict[str, Dict[str, Fraction]]

    def __post_init__(self):
        for s, d in self.dist.items():
            if any(p < 0 for p in d.values()) or sum(d.values()) != 1:
                raise RandomizedError(f"distribution at {s} does not sum to 1")

    def support(self, s: str) -> Tuple[str, ...]:
        return tuple(t for t, p in self.dist[s].items() if p > 0)


def check_rm(g: GameStructure, rm: RMStrategy) -> None:
    for s, d in rm.dist.items():
        if s not in g.owner:
            raise RandomizedError(f"unknown state {s!r}")
        for t, p in d.items():
            if p > 0 and (s, t) not in g.weight:
                raise RandomizedError(f"support edge {s}->{t} is not a game edge")
    for s in g.player_states(1):
        if s not in rm.dist:
            raise RandomizedError(f"no distribution for player-1 state {s}")


def format_rm(rm: RMStrategy) -> str:
    lines = ["rm"]
    for s in sorted(rm.dist):
        entries = " ".join(
            f"{t}:{p.numerator}/{p.denominator}"
            for t, p in sorted(rm.dist[s].items()) if p > 0)
        lines.append(f"dist {s} {entries}")
    return "\n".join(lines) + "\n"


def parse_rm(text: str) -> RMStrategy:
    dist: Dict[str, Dict[str, Fraction]] = {}
    seen_header = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "rm":
            seen_header = True
        elif tokens[0] == "dist":
            d = {}
            for entry in tokens[2:]:
                t, _, frac = entry.partition(":")
                num, _, den = frac.partition("/")
                d[t] = Fraction(int(num), int(den) if den else 1)
            dist[tokens[1]] = d
        else:
            raise RandomizedError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if not seen_header:
        raise RandomizedError("missing rm header")
    return RMStrategy(dist)


# ---------------------------------------------------------------------------
# Markov chains with exact rationals


@dataclass
class FiniteChain:
    """Markov chain with weight vectors on edges and priorities on nodes."""

    nodes: Tuple[str, ...]
    trans: Dict[str, Dict[str, Fraction]]
    weight: Dict[Tuple[str, str], Tuple[Fraction, ...]]
    priority: Dict[str, int]
    initial: str

    def __post_init__(self):
        for s in self.nodes:
            row = self.trans.get(s, {})
            if sum(row.values()) != 1 or any(p < 0 for p in row.values()):
                raise RandomizedError(f"row at {s} does not sum to 1")

    def succ_map(self) -> Dict[str, List[str]]:
        return {s: [t for t, p in self.trans[s].items() if p > 0] for s in self.nodes}

    def bsccs(self) -> List[List[str]]:
        succ = self.succ_map()
        out = []
        for comp in graphs.sccs(self.nodes, succ):
            cs = set(comp)
            if all(t in cs for u in comp for t in succ[u]):
                out.append(sorted(comp))
        return out

    def restrict(self, keep: Iterable[str]) -> "FiniteChain":
        ks = set(keep)
        return FiniteChain(
            tuple(s for s in self.nodes if s in ks),
            {s: dict(self.trans[s]) for s in self.nodes if s in ks},
            {(u, v): w for (u, v), w in self.weight.items() if u in ks and v in ks},
            {s: p for s, p in self.priority.items() if s in ks},
            next(s for s in self.nodes if s in ks),
        )


def _solve_linear(a: List[List[Fraction]], b: List[Fraction]) -> List[Fraction]:
    """Exact Gaussian elimination; raises on singular systems."""
    n = len(b)
    m = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            raise RandomizedError("singular linear system")
        m[col], m[pivot] = m[pivot], m[col]
        inv = m[col][col]
        m[col] = [x / inv for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] for i in range(n)]


def stationary_distribution(c: FiniteChain) -> Dict[str, Fraction]:
    """The unique probability vector with nu P = nu on an irreducible chain."""
    succ = c.succ_map()
    comps = graphs.sccs(c.nodes, succ)
    if len(comps) != 1:
        raise RandomizedError("reducible input: chain is not a single BSCC")
    nodes = list(c.nodes)
    n = len(nodes)
    idx = {s: i for i, s in enumerate(nodes)}
    a = [[Fraction(0)] * n for _ in range(n)]
    b = [Fraction(0)] * n
    # n-1 balance equations, then the normalization row.
    for j in range(n - 1):
        for i, s in enumerate(nodes):
            a[j][i] += c.trans[s].get(nodes[j], Fraction(0))
        a[j][j] -= 1
    for i in range(n):
        a[n - 1][i] = Fraction(1)
    b[n - 1] = Fraction(1)
    sol = _solve_linear(a, b)
    return {s: sol[idx[s]] for s in nodes}


@dataclass
class BsccInfo:
    nodes: Tuple[str, ...]
    mean_payoff: Tuple[Fraction, ...]
    reach: Fraction


@dataclass
class ChainAnalysis:
    bsccs: List[BsccInfo]
    expectation: Tuple[Fraction, ...]


def chain_mean_payoff(c: FiniteChain) -> ChainAnalysis:
    """Per-BSCC mean-payoff vectors, reach probabilities from the initial
    state, and the reach-weighted overall expectation, all exact."""
    k = len(next(iter(c.weight.values()))) if c.weight else 0
    bs = c.bsccs()
    bscc_nodes = set()
    for comp in bs:
        bscc_nodes.update(comp)
    transient = [s for s in c.nodes if s not in bscc_nodes]
    tidx = {s: i for i, s in enumerate(transient)}

    infos = []
    expectation = tuple(Fraction(0) for _ in range(k))
    for comp in bs:
        sub = c.restrict(comp)
        nu = stationary_distribution(sub)
        mp = tuple(
            sum((nu[s] * p * c.weight[(s, t)][d]
                 for s in comp for t, p in c.trans[s].items() if p > 0),
                Fraction(0))
            for d in range(k))
        if c.initial in set(comp):
            reach = Fraction(1)
        elif c.initial not in tidx:
            reach = Fraction(0)
        elif not transient:
            reach = Fraction(0)
        else:
            n = len(transient)
            comp_set = set(comp)
            a = [[Fraction(0)] * n for _ in range(n)]
            b = [Fraction(0)] * n
            for s in transient:
                i = tidx[s]
                a[i][i] = Fraction(1)
                for t, p in c.trans[s].items():
                    if t in tidx:
                        a[i][tidx[t]] -= p
                    elif t in comp_set:
                        b[i] += p
            sol = _solve_linear(a, b)
            reach = sol[tidx[c.initial]]
        infos.append(BsccInfo(tuple(comp), mp, reach))
        expectation = tuple(e + reach * v for e, v in zip(expectation, mp))
    return ChainAnalysis(infos, expectation)


def chain_from_strategies(g: GameStructure, rm: RMStrategy,
                          adversary: Optional[Dict[str, str]] = None,
                          start: Optional[str] = None) -> FiniteChain:
    """The Markov chain induced by a randomized P1 strategy and a pure
    memoryless P2 strategy, restricted to its reachable part."""
    check_rm(g, rm)
    adversary = adversary or {}
    start = start or g.initial
    trans: Dict[str, Dict[str, Fraction]] = {}
    frontier = [start]
    order = [start]
    seen = {start}
    while frontier:
        s = frontier.pop()
        if g.owner[s] == 1:
            row = {t: Fraction(p) for t, p in rm.dist[s].items() if p > 0}
        else:
            t = adversary[s]
            if (s, t) not in g.weight:
                raise RandomizedError(f"adversary move {s}->{t} is not an edge")
            row = {t: Fraction(1)}
        trans[s] = row
        for t in row:
            if t not in seen:
                seen.add(t)
                order.append(t)
                frontier.append(t)
    weight = {(u, v): tuple(Fraction(x) for x in g.weight[(u, v)])
              for u in order for v in trans[u]}
    prio = {s: g.priority[s] for s in order}
    return FiniteChain(tuple(order), trans, weight, prio, start)


# ---------------------------------------------------------------------------
# Lasso-frequency construction


def rm_from_lasso(g: GameStructure, lasso: Lasso) -> RMStrategy:
    """Occurrence-frequency strategy of a one-player lasso.

    Cycle states receive the transition-count ratios of the cycle (with
    wrap-around); prefix-only states a uniform distribution over the
    transitions they take in the prefix; untouched states a deterministic
    first-successor choice.
    """
    if not g.is_one_player():
        raise RandomizedError("rm_from_lasso requires a one-player game")
    check_lasso(g, lasso)
    cyc = list(lasso.cycle)
    wrapped = cyc + [cyc[0]]
    occ_state = {}
    occ_trans = {}
    for s in cyc:
        occ_state[s] = occ_state.get(s, 0) + 1
    for a, b in zip(wrapped, wrapped[1:]):
        occ_trans[(a, b)] = occ_trans.get((a, b), 0) + 1
    prefix_word = list(lasso.prefix) + [cyc[0]]
    dist: Dict[str, Dict[str, Fraction]] = {}
    for s in g.ids:
        if s in occ_state:
            dist[s] = {t: Fraction(n, occ_state[s])
                       for (a, t), n in occ_trans.items() if a == s}
        elif s in lasso.prefix:
            taken = sorted({b for a, b in zip(prefix_word, prefix_word[1:]) if a == s})
            dist[s] = {t: Fraction(1, len(taken)) for t in taken}
        else:
            dist[s] = {g.succ[s][0].dst: Fraction(1)}
    return RMStrategy(dist)


# ---------------------------------------------------------------------------
# Attractors, subgames, good-for-energy


def attractor(g: GameStructure, target: Iterable[str],
              player: int) -> Tuple[Set[str], Dict[str, str]]:
    """States from which `player` forces a visit to `target`, with a
    memoryless strategy that strictly decreases the attractor rank."""
    target = set(target)
    unknown = set(g.ids) - target
    if not target <= set(g.ids):
        raise ValueError("target contains unknown states")
    rank = {s: 0 for s in target}
    level = 1
    while True:
        # Level-synchronous rounds so ranks strictly decrease along the
        # forced path (membership is checked against the previous level).
        additions = []
        for s in sorted(unknown):
            succs = [e.dst for e in g.succ[s]]
            if g.owner[s] == player:
                if any(t in rank for t in succs):
                    additions.append(s)
            else:
                if all(t in rank for t in succs):
                    additions.append(s)
        if not additions:
            break
        for s in additions:
            rank[s] = level
            unknown.discard(s)
        level += 1
    strategy = {}
    for s, r in rank.items():
        if r == 0 or g.owner[s] != player:
            continue
        best = None
        for e in g.succ[s]:
            if e.dst in rank and rank[e.dst] < r:
                if best is None or rank[e.dst] < rank[best]:
                    best = e.dst
        strategy[s] = best
    return set(rank), strategy


def restrict(g: GameStructure, keep: Iterable[str],
             priorities: Optional[Dict[str, int]] = None) -> GameStructure:
    """Subgame induced by a state set (edges inside the set only)."""
    ks = set(keep)
    states = [(s.id, s.owner,
               priorities[s.id] if priorities else s.priority)
              for s in g.states if s.id in ks]
    edges = [(e.src, e.dst, e.weight) for e in g.edges
             if e.src in ks and e.dst in ks]
    initial = g.initial if g.initial in ks else states[0][0]
    return make_game(states, edges, initial, g.dimension)


def _assert_adversary_closed(g: GameStructure, region: Set[str]) -> None:
    for s in region:
        if g.owner[s] == 2:
            for e in g.succ[s]:
                if e.dst not in region:
                    raise RandomizedError(
                        f"region not closed for the adversary: {s}->{e.dst}")


def good_for_energy(g: GameStructure, region: Iterable[str]) -> Dict[str, str]:
    """Memoryless strategy on a 1-dim region whose outcome cycles all have
    non-negative energy.

    Solves the energy game on the induced subgame at cap |S|*W and picks,
    at every P1 state, the successor minimizing the required credit; the
    telescoping rank argument then bounds every outcome cycle below by 0.
    """
    if g.dimension != 1:
        raise RandomizedError("good_for_energy expects one dimension")
    region = set(region)
    _assert_adversary_closed(g, region)
    h = restrict(g, region)
    w = max(game_stats(h).max_abs_weight, 1)
    cap = len(h.states) * w
    fp = cpre_fixpoint(h, cap)
    rank = {}
    for s in h.ids:
        elems = fp.winning.elements_at(s)
        if not elems:
            raise RandomizedError(f"region not winning at the cap: {s}")
        rank[s] = min(e[0] for e in elems)
    choice = {}
    for s in h.ids:
        if h.owner[s] != 1:
            continue
        best, best_need = None, None
        for e in h.succ[s]:
            need = max(rank[e.dst] - e.weight[0], 0)
            if best is None or need < best_need:
                best, best_need = e.dst, need
        choice[s] = best
    return choice


# ---------------------------------------------------------------------------
# Winning regions at desk scale (adversary enumeration oracles)


def _fixed_adversary_graph(g: GameStructure, adversary: Dict[str, str]):
    return {s: ([e.dst for e in g.succ[s]] if g.owner[s] == 1 else [adversary[s]])
            for s in g.ids}


def _scalar_weights(g: GameStructure, succ: Dict[str, List[str]]):
    return {s: [(t, g.weight[(s, t)][0]) for t in succ[s]] for s in succ}


def _backward_reach(g_succ: Dict[str, List[str]], targets: Set[str]) -> Set[str]:
    pred: Dict[str, List[str]] = {}
    for u, vs in g_succ.items():
        for v in vs:
            pred.setdefault(v, []).append(u)
    out = set(targets)
    stack = list(targets)
    while stack:
        v = stack.pop()
        for u in pred.get(v, ()):
            if u not in out:
                out.add(u)
                stack.append(u)
    return out


def win_mp_buchi(g: GameStructure, buchi: Iterable[str],
                 limit: int = 10 ** 5) -> Set[str]:
    """Winning region of the 1-dim mean-payoff Büchi objective (threshold
    0, limit semantics), by exhaustive adversary enumeration.

    Against each pure memoryless adversary, a state wins iff it reaches a
    strongly connected component that contains a Büchi state and a cycle
    of non-negative mean.  Pure memoryless strategies suffice for the
    adversary, so the intersection over all of them is the region.
    """
    if g.dimension != 1:
        raise RandomizedError("win_mp_buchi expects one dimension")
    fset = set(buchi)
    win = set(g.ids)
    for adversary in _enumerate_memoryless(g, 2, limit):
        succ = _fixed_adversary_graph(g, adversary)
        sw = _scalar_weights(g, succ)
        good: Set[str] = set()
        for comp in graphs.sccs(g.ids, succ):
            cs = set(comp)
            if not cs & fset:
                continue
            mean = graphs.max_cycle_mean(
                comp, {u: [(v, w) for v, w in sw[u] if v in cs] for u in comp})
            if mean is not None and mean >= 0:
                good |= cs
        win &= _backward_reach(succ, good)
        if not win:
            break
    return win


def win_mp_parity(g: GameStructure, limit: int = 10 ** 5) -> Set[str]:
    """Winning region of the 1-dim mean-payoff parity objective (threshold
    0), by exhaustive adversary enumeration.

    Against a fixed adversary, a state wins iff it can reach a strongly
    connected component of the restriction to priorities >= q, for some
    even q, containing a priority-q state and a non-negative-mean cycle.
    """
    if g.dimension != 1:
        raise RandomizedError("win_mp_parity expects one dimension")
    win = set(g.ids)
    evens = sorted({s.priority for s in g.states if s.priority % 2 == 0})
    for adversary in _enumerate_memoryless(g, 2, limit):
        succ = _fixed_adversary_graph(g, adversary)
        sw = _scalar_weights(g, succ)
        good: Set[str] = set()
        for q in evens:
            allowed = {s for s in g.ids if g.priority[s] >= q}
            sub = {s: [t for t in succ[s] if t in allowed] for s in allowed}
            for comp in graphs.sccs(sorted(allowed), sub):
                cs = set(comp)
                if not any(g.priority[s] == q for s in cs):
                    continue
                mean = graphs.max_cycle_mean(
                    comp, {u: [(v, w) for v, w in sw[u] if v in cs] for u in comp})
                if mean is not None and mean >= 0:
                    good |= cs
        win &= _backward_reach(succ, good)
        if not win:
            break
    return win


# ---------------------------------------------------------------------------
# Mean-payoff Büchi constructions


def buchi_mix_parameters(w: int, n: int, eps: Fraction):
    """Closed-form (k*, eta, gamma*) for the gfe/attractor mixture."""
    k_star = Fraction(w * (n + 1)) / eps
    eta = Fraction(w * (n + 1)) / (k_star + 1)
    gamma_star = (eta - eps) / (k_star * (eta - w))
    return k_star, eta, gamma_star


def _buchi_ingredients(g: GameStructure, buchi: Iterable[str], limit: int):
    fset = set(buchi)
    win = win_mp_buchi(g, fset, limit)
    if g.initial not in win:
        raise RandomizedError("initial state is not winning for MP-Büchi")
    h = restrict(g, win)
    gfe = good_for_energy(h, set(h.ids))
    attr, attr_strat = attractor(h, fset & win, 1)
    if attr != set(h.ids):
        raise RandomizedError("winning region is not attracted to the Büchi set")
    return h, gfe, attr_strat


def mp_buchi_pure(g: GameStructure, buchi: Iterable[str], eps) -> "MooreStrategy":
    """Cyclic two-phase machine: a good-for-energy phase of
    ceil(2W|S|/eps) - |S| steps, then an attractor phase of |S| steps.

    Every consistent play visits the Büchi set infinitely often and has
    mean-payoff at least -eps.
    """
    from .strategy import MooreStrategy

    eps = Fraction(eps)
    if eps <= 0:
        raise RandomizedError("epsilon must be positive")
    h, gfe, attr_strat = _buchi_ingredients(g, buchi, 10 ** 5)
    n = len(h.states)
    w = game_stats(h).max_abs_weight
    phase_a = max(1, math.ceil(Fraction(2 * w * n) / eps) - n)
    period = phase_a + n
    mem = []
    index = {}
    for c in range(period):
        for s in h.ids:
            index[(s, c)] = len(mem)
            mem.append((s, (c,)))
    next_action = {}
    update = {}
    for (s, c), i in index.items():
        if h.owner[s] == 1:
            if c >= phase_a and s in attr_strat:
                next_action[i] = attr_strat[s]
            else:
                next_action[i] = gfe[s]
        for e in h.succ[s]:
            update[(i, e.dst)] = index[(e.dst, (c + 1) % period)]
    return MooreStrategy(tuple(mem), index[(h.initial, 0)], next_action, update)


def mix_strategies(primary: Dict[str, str], secondary: Dict[str, str],
                   gamma: Fraction) -> Dict[str, Dict[str, Fraction]]:
    """Per-state mixture: primary choice with 1-gamma, secondary with gamma."""
    out = {}
    for s, p in primary.items():
        q = secondary.get(s)
        if q is None or q == p:
            out[s] = {p: Fraction(1)}
        else:
            out[s] = {p: 1 - gamma, q: gamma}
    return out


def mp_buchi_randomized(g: GameStructure, buchi: Iterable[str],
                        eps) -> Tuple[RMStrategy, Fraction]:
    """Randomized memoryless mixture of the good-for-energy and attractor
    strategies, with the closed-form mixing weight gamma*.

    Against every pure memoryless adversary, every BSCC of the induced
    chain contains a Büchi state and has expected mean-payoff >= -eps.
    """
    eps = Fraction(eps)
    if eps <= 0:
        raise RandomizedError("epsilon must be positive")
    h, gfe, attr_strat = _buchi_ingredients(g, buchi, 10 ** 5)
    w = game_stats(h).max_abs_weight
    if w == 0:
        gamma = Fraction(1, 2)  # mean-payoff is 0 regardless; any mix works
    else:
        _, _, gamma = buchi_mix_parameters(w, len(h.states), eps)
        if not 0 < gamma < 1:
            raise RandomizedError(
                f"gamma* = {gamma} is outside (0, 1); shrink epsilon")
    dist = mix_strategies(gfe, attr_strat, gamma)
    for s in g.player_states(1):
        if s not in dist:
            dist[s] = {g.succ[s][0].dst: Fraction(1)}  # outside the region
    return RMStrategy(dist), gamma


# ---------------------------------------------------------------------------
# Mean-payoff parity construction (one dimension)


def _pure_dist(choice: Dict[str, str]) -> Dict[str, Dict[str, Fraction]]:
    return {s: {t: Fraction(1)} for s, t in choice.items()}


def _cobuchi_pure(h: GameStructure, limit: int) -> Dict[str, Dict[str, Fraction]]:
    """Pure memoryless strategy for priorities {1, 2}: every cycle of the
    pruned graph must have even minimal priority and non-negative sum.
    Found by exhaustive enumeration."""
    for cand in _enumerate_memoryless(h, 1, limit):
        succ = {s: ([cand[s]] if h.owner[s] == 1 else [e.dst for e in h.succ[s]])
                for s in h.ids}
        odd = graphs.find_odd_priority_cycle(h.ids, succ, lambda s: h.priority[s])
        if odd is not None:
            continue
        neg = graphs.max_cycle_mean(
            h.ids, {s: [(t, -h.weight[(s, t)][0]) for t in succ[s]] for s in h.ids})
        if neg is not None and neg > 0:  # some cycle has negative real sum
            continue
        return _pure_dist(cand)
    raise RandomizedError("no pure memoryless coBüchi strategy found")


def _shift_priorities(h: GameStructure) -> GameStructure:
    mn = min(s.priority for s in h.states)
    shift = 2 * (mn // 2)
    if shift == 0:
        return h
    return restrict(h, h.ids, priorities={s.id: s.priority - shift for s in h.states})


def _mpp_recurse(h: GameStructure, eps: Fraction,
                 limit: int) -> Dict[str, Dict[str, Fraction]]:
    h = _shift_priorities(h)
    inner = win_mp_parity(h, limit)
    if inner != set(h.ids):
        raise RandomizedError("subgame is not uniformly winning")
    prios = {s.priority for s in h.states}
    if all(p % 2 == 0 for p in prios):
        # Parity is vacuous; pure good-for-energy keeps every cycle >= 0.
        return _pure_dist(good_for_energy(h, set(h.ids)))
    if prios <= {0, 1}:
        rm, _ = mp_buchi_randomized(h, {s for s in h.ids if h.priority[s] == 0}, eps)
        return {s: rm.dist[s] for s in h.player_states(1)}
    if prios <= {1, 2}:
        return _cobuchi_pure(h, limit)

    u0 = {s for s in h.ids if h.priority[s] == 0}
    u1 = {s for s in h.ids if h.priority[s] == 1}
    dist: Dict[str, Dict[str, Fraction]] = {}
    if not u0:
        a2, _ = attractor(h, u1, 2)
        b = [s for s in h.ids if s not in a2]
        if not b:
            raise RandomizedError("odd-priority attractor covers a winning subgame")
        dist.update(_mpp_recurse(restrict(h, b), eps, limit))
        a1, to_b = attractor(h, set(b), 1)
        for s in a1:
            if h.owner[s] == 1 and s not in set(b):
                dist[s] = {to_b[s]: Fraction(1)}
        c = [s for s in h.ids if s not in a1]
        if c:
            dist.update(_mpp_recurse(restrict(h, c), eps, limit))
        return dist

    a1, to_u0 = attractor(h, u0, 1)
    gfe = good_for_energy(h, set(h.ids))
    w = game_stats(h).max_abs_weight
    if w == 0:
        gamma = Fraction(1, 2)
    else:
        _, _, gamma = buchi_mix_parameters(w, len(h.states), eps)
        if not 0 < gamma < 1:
            raise RandomizedError(f"gamma* = {gamma} is outside (0, 1); shrink epsilon")
    for s in a1:
        if h.owner[s] != 1:
            continue
        mixed = mix_strategies({s: gfe[s]}, {s: to_u0[s]} if s in to_u0 else {}, gamma)
        dist[s] = mixed[s]
    b = [s for s in h.ids if s not in a1]
    if b:
        dist.update(_mpp_recurse(restrict(h, b), eps, limit))
    return dist


def mp_parity_randomized(g: GameStructure, eps,
                         limit: int = 10 ** 5) -> RMStrategy:
    """Randomized memoryless strategy for a 1-dim mean-payoff parity game,
    almost-surely winning (parity plus mean-payoff >= -eps) from every
    state of the winning region."""
    eps = Fraction(eps)
    if eps <= 0:
        raise RandomizedError("epsilon must be positive")
    if g.dimension != 1:
        raise RandomizedError("mp_parity_randomized expects one dimension")
    win = win_mp_parity(g, limit)
    if not win:
        raise RandomizedError("winning region is empty")
    dist = _mpp_recurse(restrict(g, win), eps, limit)
    for s in g.player_states(1):
        if s not in dist:
            dist[s] = {g.succ[s][0].dst: Fraction(1)}  # outside the region
    return RMStrategy(dist)


# ---------------------------------------------------------------------------
# Best responses and Monte Carlo


@dataclass
class BestResponse:
    expectation: Tuple[Fraction, ...]       # worst case by most-negative component
    witness: Dict[str, str]                 # adversary achieving it
    pareto_worst: List[Tuple[Tuple[Fraction, ...], Dict[str, str]]]

    def dominated_below(self, threshold: Sequence) -> bool:
        """True iff some adversary pushes the expectation below the
        threshold in at least one dimension."""
        t = [Fraction(x) for x in threshold]
        return any(any(e < v for e, v in zip(exp, t))
                   for exp, _ in self.pareto_worst)


def best_response_expectation(g: GameStructure, rm: RMStrategy,
                              limit: int = 10 ** 5) -> BestResponse:
    """Worst-case expected mean-payoff over all pure memoryless
    adversaries (which suffice for the adversary at this scale).

    The single reported worst case minimizes the most negative component,
    ties broken by enumeration order; the full Pareto-minimal list of
    expectations is also returned.
    """
    responses = []
    for adversary in _enumerate_memoryless(g, 2, limit):
        analysis = chain_mean_payoff(chain_from_strategies(g, rm, adversary))
        responses.append((analysis.expectation, adversary))
    if not responses:
        raise RandomizedError("no adversary strategies")
    worst = min(responses, key=lambda r: min(r[0]) if r[0] else Fraction(0))
    pareto = []
    for exp, adv in responses:
        if not any(other != exp and all(o <= e for o, e in zip(other, exp))
                   for other, _ in responses):
            if exp not in [e for e, _ in pareto]:
                pareto.append((exp, adv))
    return BestResponse(worst[0], worst[1], pareto)


@dataclass
class MonteCarloReport:
    mean: Tuple[float, ...]                 # across-episode mean of episode averages
    episode_payoffs: List[Tuple[float, ...]]
    visit_totals: Dict[str, int]
    episodes_visiting: Dict[str, int]
    tail_min_priority: List[int]            # min priority in each episode's second half
    seed: int
    generator: str = "random.Random (Mersenne Twister)"


def monte_carlo_eval(g: GameStructure, rm: RMStrategy,
                     adversary: Optional[Dict[str, str]],
                     horizon: int, episodes: int, seed: int) -> MonteCarloReport:
    """Finite-horizon empirical estimate of the induced chain behaviour.

    Deterministic given the seed: episode e uses random.Random derived
    from (seed, e).  Exact analyses should be preferred whenever feasible;
    this exists to sanity-check them on fixtures.
    """
    if horizon < 1 or episodes < 1:
        raise RandomizedError("horizon and episodes must be >= 1")
    check_rm(g, rm)
    adversary = adversary or {}
    sampler = {}
    for s, d in rm.dist.items():
        items = [(t, float(p)) for t, p in sorted(d.items()) if p > 0]
        acc, cum = 0.0, []
        for t, p in items:
            acc += p
            cum.append((acc, t))
        sampler[s] = cum
    payoffs = []
    visit_totals: Dict[str, int] = {s: 0 for s in g.ids}
    episodes_visiting: Dict[str, int] = {s: 0 for s in g.ids}
    tail_prios = []
    for ep in range(episodes):
        rng = random.Random(seed * 1_000_003 + ep)
        cur = g.initial
        totals = [0] * g.dimension
        visited = set()
        tail_min = None
        for step in range(horizon):
            visited.add(cur)
            visit_totals[cur] += 1
            if 2 * step >= horizon:
                p = g.priority[cur]
                tail_min = p if tail_min is None else min(tail_min, p)
            if g.owner[cur] == 1:
                x = rng.random()
                nxt = sampler[cur][-1][1]
                for acc, t in sampler[cur]:
                    if x <= acc:
                        nxt = t
                        break
            else:
                nxt = adversary[cur]
            w = g.weight[(cur, nxt)]
            totals = [a + b for a, b in zip(totals, w)]
            cur = nxt
        for s in visited:
            episodes_visiting[s] += 1
        payoffs.append(tuple(t / horizon for t in totals))
        tail_prios.append(tail_min if tail_min is not None else g.priority[cur])
    mean = tuple(sum(p[d] for p in payoffs) / episodes for d in range(g.dimension))
    return MonteCarloReport(mean, payoffs, visit_totals, episodes_visiting,
                            tail_prios, seed)


def rm_support_verify(g: GameStructure, rm: RMStrategy, v0: Sequence[int],
                      priorities: Optional[Dict[str, int]] = None) -> VerifyReport:
    """Sure-winning check of a randomized strategy on its support graph.

    For energy objectives almost-sure and sure winning coincide: any
    violating finite path in the support has positive probability, so the
    strategy is almost-surely winning iff no support path violates."""
    check_rm(g, rm)
    prio = priorities if priorities is not None else g.priority
    succ = {}
    for s in g.ids:
        if g.owner[s] == 1:
            succ[s] = [(t, g.weight[(s, t)]) for t in rm.support(s)]
        else:
            succ[s] = [(e.dst, e.weight) for e in g.succ[s]]
    nodes = sorted(graphs.reachable({u: [v for v, _ in vs] for u, vs in succ.items()},
                                    g.initial))
    sub = {u: succ[u] for u in nodes}
    return verify_graph(nodes, sub, g.initial, tuple(v0), lambda s: prio[s])
