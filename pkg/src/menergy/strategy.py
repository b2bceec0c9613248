"""Moore-machine strategies: extraction from the fixed point, the
strategy/game product, and an independent sure-winning verifier.

A Moore machine stores memory states (game state, annotation vector), a
next-action choice for memory states owned by player 1, and a memory
update for every move the environment can take.  Extraction follows the
fixed point: memory states are its minimal elements, actions keep the play
inside the fixed point, and updates re-minimize the tracked credit.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from . import graphs
from .antichain import leq
from .game import GameStructure, Lasso, Weight, vec_add
from .solver import FixpointResult


class StrategyError(ValueError):
    pass


@dataclass(frozen=True)
class MooreStrategy:
    """Finite-memory pure strategy <M, m0, update, next_action>."""

    memory_states: Tuple[Tuple[str, Tuple[int, ...]], ...]
    initial_memory: int
    next_action: Dict[int, str]            # P1 memory index -> chosen successor
    update: Dict[Tuple[int, str], int]     # (memory index, observed successor) -> index

    def size(self) -> int:
        return len(self.memory_states)


def check_moore(g: GameStructure, m: MooreStrategy) -> None:
    """Raise StrategyError unless m is well-formed for g."""
    n = len(m.memory_states)
    if not 0 <= m.initial_memory < n:
        raise StrategyError("initial memory out of range")
    for s, _ in m.memory_states:
        if s not in g.owner:
            raise StrategyError(f"memory references unknown state {s!r}")
    for i, succ in m.next_action.items():
        s = m.memory_states[i][0]
        if g.owner[s] != 1:
            raise StrategyError(f"next_action defined on P2 memory state {i}")
        if (s, succ) not in g.weight:
            raise StrategyError(f"next_action {s}->{succ} is not an edge")
    for (i, obs), j in m.update.items():
        if not 0 <= j < n:
            raise StrategyError("update target out of range")
        if m.memory_states[j][0] != obs:
            raise StrategyError(f"update for observation {obs} lands on wrong state")


def extract_moore(g: GameStructure, fp: FixpointResult,
                  v0: Tuple[int, ...]) -> MooreStrategy:
    """Build a winning Moore machine from the fixed point, for credit v0.

    Requires (initial, e) in the fixed point for some e <= v0.  Memory
    states are the minimal elements of the fixed point, updated on every
    single observed move, so alternation is tolerated but not required
    (the solve pipeline still transforms first).  Ties are broken towards
    the lexicographically smallest successor id and credit so the machine
    is reproducible.
    """
    elems = fp.winning.min_elements()
    index = {se: i for i, se in enumerate(elems)}
    init = None
    for u in fp.winning.elements_at(g.initial):
        if leq(u, v0):
            init = index[(g.initial, u)]
            break
    if init is None:
        raise StrategyError(f"no qualifying initial memory for credit {v0}")

    def descend(t: str, budget) -> int:
        for u in fp.winning.elements_at(t):  # sorted: lex-smallest first
            if leq(u, budget):
                return index[(t, u)]
        raise StrategyError(f"fixed point not closed under step to {t}")

    next_action: Dict[int, str] = {}
    update: Dict[Tuple[int, str], int] = {}
    for i, (s, u) in enumerate(elems):
        if g.owner[s] == 1:
            chosen = None
            for e in sorted(g.succ[s], key=lambda e: e.dst):
                if fp.winning.contains_upward(e.dst, vec_add(u, e.weight)):
                    chosen = e
                    break
            if chosen is None:
                raise StrategyError(f"no fixed-point-preserving move at {s}")
            next_action[i] = chosen.dst
            update[(i, chosen.dst)] = descend(chosen.dst, vec_add(u, chosen.weight))
        else:
            for e in g.succ[s]:
                update[(i, e.dst)] = descend(e.dst, vec_add(u, e.weight))
    return MooreStrategy(tuple(elems), init, next_action, update)


def build_memoryless(g: GameStructure, choice: Dict[str, str]) -> MooreStrategy:
    """Wrap a memoryless choice function as a Moore machine (one memory
    state per game state)."""
    mem = tuple((s, ()) for s in g.ids)
    index = {s: i for i, s in enumerate(g.ids)}
    next_action = {}
    update = {}
    for i, s in enumerate(g.ids):
        if g.owner[s] == 1:
            succ = choice[s]
            if (s, succ) not in g.weight:
                raise StrategyError(f"choice {s}->{succ} is not an edge")
            next_action[i] = succ
            update[(i, succ)] = index[succ]
        else:
            for e in g.succ[s]:
                update[(i, e.dst)] = index[e.dst]
    return MooreStrategy(mem, index[g.initial], next_action, update)


ProductNode = Tuple[str, int]


@dataclass
class Product:
    """Reachable part of the game restricted by a Moore strategy."""

    nodes: List[ProductNode]
    succ: Dict[ProductNode, List[Tuple[ProductNode, Weight]]]
    initial: ProductNode

    def state_of(self, node: ProductNode) -> str:
        return node[0]


def strategy_product(g: GameStructure, m: MooreStrategy) -> Product:
    """Product graph: P1 nodes keep only the strategy's choice, P2 nodes
    keep all game edges; memory follows the update function."""
    check_moore(g, m)
    init = (g.initial, m.initial_memory)
    if m.memory_states[m.initial_memory][0] != g.initial:
        raise StrategyError("initial memory does not sit on the initial state")
    succ: Dict[ProductNode, List[Tuple[ProductNode, Weight]]] = {}
    order: List[ProductNode] = [init]
    known = {init}
    frontier = [init]
    while frontier:
        node = frontier.pop()
        s, i = node
        if g.owner[s] == 1:
            if i not in m.next_action:
                raise StrategyError(f"next_action undefined at memory {i} ({s})")
            moves = [e for e in g.succ[s] if e.dst == m.next_action[i]]
        else:
            moves = list(g.succ[s])
        out = []
        for e in moves:
            j = m.update.get((i, e.dst))
            if j is None:
                raise StrategyError(
                    f"update undefined for reachable move {s}->{e.dst} at memory {i}")
            nxt = (e.dst, j)
            out.append((nxt, e.weight))
            if nxt not in known:
                known.add(nxt)
                order.append(nxt)
                frontier.append(nxt)
        succ[node] = out
    return Product(order, succ, init)


@dataclass
class VerifyReport:
    verdict: str  # "winning" or "losing"
    witness_kind: Optional[str] = None      # "energy" or "parity"
    witness_dimension: Optional[int] = None  # 0-based, for energy witnesses
    witness_path: Optional[List[ProductNode]] = None   # finite path from initial
    witness_cycle: Optional[List[ProductNode]] = None  # reachable odd-priority cycle

    @property
    def winning(self) -> bool:
        return self.verdict == "winning"


def verify_graph(nodes: Sequence, succ: Dict, initial,
                 v0: Sequence[int], priority_of) -> VerifyReport:
    """Core verifier on an explicit graph with weighted edges.

    Losing iff some finite path from the initial node drives the running
    sum below -v0 in some dimension (found by per-dimension shortest-sum
    relaxation with negative-cycle unrolling), or some reachable cycle has
    odd minimal priority.
    """
    k = len(v0)
    for dim in range(k):
        succ_w = {u: [(t, w[dim]) for t, w in succ.get(u, ())] for u in nodes}
        dist, parent, cyc_node = graphs.shortest_sums(nodes, succ_w, initial)
        if cyc_node is None:
            bad = [u for u in nodes if dist.get(u, 0) < -v0[dim]]
            if bad:
                target = min(bad, key=lambda u: dist[u])
                path = graphs.path_from_parents(parent, initial, target)
                return VerifyReport("losing", "energy", dim, path)
        else:
            cycle = graphs.extract_cycle(parent, cyc_node)
            path = _unroll_negative_cycle(succ_w, initial, cycle, v0[dim])
            return VerifyReport("losing", "energy", dim, path)
    cycle = graphs.find_odd_priority_cycle(
        nodes, {u: [t for t, _ in succ.get(u, ())] for u in nodes},
        priority_of, initial)
    if cycle is not None:
        return VerifyReport("losing", "parity", None, None, cycle)
    return VerifyReport("winning")


def _unroll_negative_cycle(succ_w, initial, cycle, budget):
    """Finite witness path: a stem to the cycle plus enough repetitions to
    push the running sum below -budget."""
    # BFS stem (unweighted) from initial to the cycle head.
    head = cycle[0]
    parent = {initial: None}
    queue = [initial]
    while queue and head not in parent:
        u = queue.pop(0)
        for v, _ in succ_w.get(u, ()):
            if v not in parent:
                parent[v] = u
                queue.append(v)
    if head not in parent:
        raise RuntimeError("negative cycle not reachable")
    stem = [head]
    while stem[-1] != initial:
        stem.append(parent[stem[-1]])
    stem.reverse()

    wmap = {u: dict(vs) for u, vs in succ_w.items()}
    path = list(stem)
    total = sum(wmap[a][b] for a, b in zip(stem, stem[1:]))
    low = min(0, total)
    loop = cycle[1:] + [cycle[0]]
    reps = abs(budget) + sum(abs(w) for vs in succ_w.values() for _, w in vs) + 2
    for _ in range(reps):
        if low < -budget:
            break
        for nxt in loop:
            total += wmap[path[-1]][nxt]
            path.append(nxt)
            low = min(low, total)
    assert low < -budget, "cycle unrolling failed to cross the budget"
    running = 0
    for idx in range(1, len(path)):  # trim to the first crossing point
        running += wmap[path[idx - 1]][path[idx]]
        if running < -budget:
            return path[:idx + 1]
    raise RuntimeError("unreachable")


def verify_sure_winning(g: GameStructure, m: MooreStrategy,
                        v0: Sequence[int],
                        priorities: Optional[Dict[str, int]] = None) -> VerifyReport:
    """Decide whether m surely wins PosEnergy(v0) together with parity.

    `priorities` optionally overrides the game's priority map; the solve
    pipeline uses this to check reduced games against the original parity
    condition.
    """
    prod = strategy_product(g, m)
    prio = priorities if priorities is not None else g.priority

    def priority_of(node):
        return prio[node[0]]

    return verify_graph(prod.nodes, prod.succ, prod.initial, tuple(v0), priority_of)


def enumerate_p2_memoryless(g: GameStructure,
                            limit: int = 10 ** 5) -> Iterator[Dict[str, str]]:
    """All pure memoryless strategies of player 2, in a deterministic
    order (states in declaration order, successors in edge order)."""
    yield from _enumerate_memoryless(g, 2, limit)


def _enumerate_memoryless(g: GameStructure, player: int, limit: int):
    states = [s for s in g.ids if g.owner[s] == player]
    options = [[e.dst for e in g.succ[s]] for s in states]
    count = 1
    for o in options:
        count *= len(o)
        if count > limit:
            raise StrategyError(f"memoryless enumeration exceeds limit {limit}")
    for combo in itertools.product(*options):
        yield dict(zip(states, combo))


def pure_outcome_lasso(g: GameStructure, m: MooreStrategy,
                       adversary: Dict[str, str]) -> Lasso:
    """The unique eventually-periodic play when both strategies are pure,
    decomposed with minimal (first-repetition) cycle."""
    check_moore(g, m)
    seen: Dict[Tuple[str, int], int] = {}
    trail: List[Tuple[str, int]] = []
    config = (g.initial, m.initial_memory)
    while config not in seen:
        seen[config] = len(trail)
        trail.append(config)
        s, i = config
        if g.owner[s] == 1:
            if i not in m.next_action:
                raise StrategyError(f"next_action undefined at memory {i}")
            t = m.next_action[i]
        else:
            t = adversary[s]
            if (s, t) not in g.weight:
                raise StrategyError(f"adversary move {s}->{t} is not an edge")
        j = m.update.get((i, t))
        if j is None:
            raise StrategyError(f"update undefined for move {s}->{t} at memory {i}")
        config = (t, j)
    cut = seen[config]
    prefix = tuple(s for s, _ in trail[:cut])
    cycle = tuple(s for s, _ in trail[cut:])
    return Lasso(prefix, cycle)


def format_moore(m: MooreStrategy) -> str:
    """Line-oriented strategy serialization."""
    lines = [f"moore states={len(m.memory_states)} init={m.initial_memory}"]
    for i, (s, ann) in enumerate(m.memory_states):
        lines.append(f"mem {i} {s}" + "".join(f" {x}" for x in ann))
    for i in sorted(m.next_action):
        lines.append(f"act {i} {m.next_action[i]}")
    for (i, obs), j in sorted(m.update.items(), key=lambda kv: (kv[0][0], kv[0][1])):
        lines.append(f"upd {i} {obs} {j}")
    return "\n".join(lines) + "\n"


def parse_moore(text: str) -> MooreStrategy:
    mem: List[Tuple[str, Tuple[int, ...]]] = []
    init = None
    next_action: Dict[int, str] = {}
    update: Dict[Tuple[int, str], int] = {}
    declared = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "moore":
            fields = dict(t.split("=", 1) for t in tokens[1:])
            declared = int(fields["states"])
            init = int(fields["init"])
        elif tokens[0] == "mem":
            idx = int(tokens[1])
            if idx != len(mem):
                raise StrategyError(f"line {lineno}: mem indices must be consecutive")
            mem.append((tokens[2], tuple(int(x) for x in tokens[3:])))
        elif tokens[0] == "act":
            next_action[int(tokens[1])] = tokens[2]
        elif tokens[0] == "upd":
            update[(int(tokens[1]), tokens[2])] = int(tokens[3])
        else:
            raise StrategyError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if init is None or declared is None:
        raise StrategyError("missing moore header")
    if declared != len(mem):
        raise StrategyError(f"declared {declared} memory states, found {len(mem)}")
    return MooreStrategy(tuple(mem), init, next_action, update)
