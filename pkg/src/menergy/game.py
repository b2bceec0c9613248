"""Multi-weighted two-player game structures and exact play arithmetic.

A game is a finite directed graph whose states are partitioned between
player 1 and player 2, with k-dimensional integer weights on edges and a
non-negative priority on every state.  All arithmetic here is exact:
energy levels are Python ints, mean-payoffs are `fractions.Fraction`.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, List, Sequence, Tuple

Weight = Tuple[int, ...]


class GameError(ValueError):
    """Base class for game construction and parsing problems."""


class ParseError(GameError):
    def __init__(self, lineno, message):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class ValidationError(GameError):
    """A structural invariant of the game is violated."""


@dataclass(frozen=True)
class State:
    id: str
    owner: int  # 1 or 2
    priority: int


@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    weight: Weight


@dataclass(frozen=True)
class GameStructure:
    """Immutable game graph with k-dimensional edge weights and priorities.

    Invariants checked at construction: unique state ids, every state has
    at least one outgoing edge, edge endpoints exist, all weights have
    length `dimension`.
    """

    states: Tuple[State, ...]
    edges: Tuple[Edge, ...]
    initial: str
    dimension: int

    def __post_init__(self):
        if self.dimension < 1:
            raise ValidationError("dimension must be >= 1")
        ids = [s.id for s in self.states]
        if len(set(ids)) != len(ids):
            dup = sorted({i for i in ids if ids.count(i) > 1})
            raise ValidationError(f"duplicate state id(s): {', '.join(dup)}")
        idset = set(ids)
        if self.initial not in idset:
            raise ValidationError(f"initial state {self.initial!r} not declared")
        for s in self.states:
            if s.owner not in (1, 2):
                raise ValidationError(f"state {s.id}: owner must be 1 or 2")
            if s.priority < 0:
                raise ValidationError(f"state {s.id}: negative priority")
        outgoing = {i: 0 for i in ids}
        pairs = set()
        for e in self.edges:
            if e.src not in idset or e.dst not in idset:
                raise ValidationError(f"edge {e.src}->{e.dst}: unknown endpoint")
            if len(e.weight) != self.dimension:
                raise ValidationError(
                    f"edge {e.src}->{e.dst}: weight has length {len(e.weight)}, "
                    f"expected {self.dimension}")
            if (e.src, e.dst) in pairs:
                raise ValidationError(f"parallel edge {e.src}->{e.dst}")
            pairs.add((e.src, e.dst))
            outgoing[e.src] += 1
        dead = sorted(i for i, n in outgoing.items() if n == 0)
        if dead:
            raise ValidationError(f"state(s) with no outgoing edge: {', '.join(dead)}")

    @cached_property
    def ids(self) -> Tuple[str, ...]:
        return tuple(s.id for s in self.states)

    @cached_property
    def owner(self) -> Dict[str, int]:
        return {s.id: s.owner for s in self.states}

    @cached_property
    def priority(self) -> Dict[str, int]:
        return {s.id: s.priority for s in self.states}

    @cached_property
    def succ(self) -> Dict[str, Tuple[Edge, ...]]:
        out: Dict[str, List[Edge]] = {s.id: [] for s in self.states}
        for e in self.edges:
            out[e.src].append(e)
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def weight(self) -> Dict[Tuple[str, str], Weight]:
        return {(e.src, e.dst): e.weight for e in self.edges}

    def player_states(self, player: int) -> Tuple[str, ...]:
        return tuple(s.id for s in self.states if s.owner == player)

    def is_one_player(self) -> bool:
        return not self.player_states(2)


@dataclass(frozen=True)
class Lasso:
    """A regular play prefix.cycle^omega given by state id sequences."""

    prefix: Tuple[str, ...]
    cycle: Tuple[str, ...]


def vec_add(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def vec_zero(k: int) -> Weight:
    return (0,) * k


def make_game(states: Iterable[Tuple[str, int, int]],
              edges: Iterable[Tuple[str, str, Sequence[int]]],
              initial: str, dimension: int) -> GameStructure:
    """Convenience constructor from plain tuples."""
    return GameStructure(
        states=tuple(State(i, o, p) for i, o, p in states),
        edges=tuple(Edge(s, d, tuple(int(x) for x in w)) for s, d, w in edges),
        initial=initial,
        dimension=dimension,
    )


def parse_game(text: str) -> GameStructure:
    """Parse the line-oriented game format.

    Format (UTF-8, '#' starts a comment):
        game k=<int>
        state <id> owner=<1|2> prio=<int> [init]
        edge <src> <dst> <w1> ... <wk>
    """
    dimension = None
    states = []
    edges = []
    initial = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        kind = tokens[0]
        if kind == "game":
            if dimension is not None:
                raise ParseError(lineno, "duplicate game header")
            if len(tokens) != 2 or not tokens[1].startswith("k="):
                raise ParseError(lineno, "expected 'game k=<int>'")
            try:
                dimension = int(tokens[1][2:])
            except ValueError:
                raise ParseError(lineno, f"bad dimension {tokens[1][2:]!r}") from None
        elif kind == "state":
            if dimension is None:
                raise ParseError(lineno, "state before game header")
            if len(tokens) not in (4, 5):
                raise ParseError(lineno, "expected 'state <id> owner=<1|2> prio=<int> [init]'")
            sid = tokens[1]
            if not tokens[2].startswith("owner=") or not tokens[3].startswith("prio="):
                raise ParseError(lineno, "expected owner=<1|2> prio=<int>")
            try:
                owner = int(tokens[2][6:])
                prio = int(tokens[3][5:])
            except ValueError:
                raise ParseError(lineno, "owner and prio must be integers") from None
            if len(tokens) == 5:
                if tokens[4] != "init":
                    raise ParseError(lineno, f"unexpected token {tokens[4]!r}")
                if initial is not None:
                    raise ParseError(lineno, "more than one init state")
                initial = sid
            states.append((sid, owner, prio))
        elif kind == "edge":
            if dimension is None:
                raise ParseError(lineno, "edge before game header")
            if len(tokens) != 3 + dimension:
                raise ParseError(
                    lineno, f"expected 'edge <src> <dst>' followed by {dimension} weight(s)")
            try:
                weight = tuple(int(t) for t in tokens[3:])
            except ValueError:
                raise ParseError(lineno, "weights must be integers") from None
            edges.append((tokens[1], tokens[2], weight))
        else:
            raise ParseError(lineno, f"unknown directive {kind!r}")
    if dimension is None:
        raise ParseError(1, "missing game header")
    if initial is None:
        raise ValidationError("no state marked init")
    return make_game(states, edges, initial, dimension)


def write_game(g: GameStructure) -> str:
    """Render a game in the canonical text format; parse_game round-trips."""
    lines = [f"game k={g.dimension}"]
    for s in g.states:
        init = " init" if s.id == g.initial else ""
        lines.append(f"state {s.id} owner={s.owner} prio={s.priority}{init}")
    for e in g.edges:
        lines.append(f"edge {e.src} {e.dst} " + " ".join(str(w) for w in e.weight))
    return "\n".join(lines) + "\n"


def energy_level(g: GameStructure, path: Sequence[str]) -> Weight:
    """Component-wise sum of edge weights along an edge-connected path."""
    total = vec_zero(g.dimension)
    for a, b in zip(path, path[1:]):
        w = g.weight.get((a, b))
        if w is None:
            raise GameError(f"path step {a}->{b} is not an edge")
        total = vec_add(total, w)
    return total


def check_lasso(g: GameStructure, lasso: Lasso) -> None:
    """Raise GameError unless the lasso is a valid regular play of g."""
    if not lasso.cycle:
        raise GameError("empty lasso cycle")
    first = lasso.prefix[0] if lasso.prefix else lasso.cycle[0]
    if first != g.initial:
        raise GameError(f"lasso starts at {first}, not the initial state")
    walk = list(lasso.prefix) + list(lasso.cycle) + [lasso.cycle[0]]
    for a, b in zip(walk, walk[1:]):
        if (a, b) not in g.weight:
            raise GameError(f"lasso step {a}->{b} is not an edge")


@dataclass(frozen=True)
class LassoValues:
    mean_payoff: Tuple[Fraction, ...]
    min_cycle_priority: int
    cycle_energy: Weight


def lasso_values(g: GameStructure, lasso: Lasso) -> LassoValues:
    """Exact cycle statistics of a lasso.

    The mean-payoff of a regular play equals the cycle average, computed
    here as exact rationals; cycle_energy includes the wrap-around edge.
    """
    check_lasso(g, lasso)
    cyc = list(lasso.cycle) + [lasso.cycle[0]]
    energy = energy_level(g, cyc)
    n = len(lasso.cycle)
    return LassoValues(
        mean_payoff=tuple(Fraction(x, n) for x in energy),
        min_cycle_priority=min(g.priority[s] for s in lasso.cycle),
        cycle_energy=energy,
    )


@dataclass(frozen=True)
class GameStats:
    max_abs_weight: int    # W
    branching: int         # d, the maximal out-degree
    odd_priorities: int    # number of distinct odd priorities present
    priority_range: Tuple[int, int]


def game_stats(g: GameStructure) -> GameStats:
    w = max((abs(x) for e in g.edges for x in e.weight), default=0)
    d = max(len(g.succ[s]) for s in g.ids)
    prios = [s.priority for s in g.states]
    odd = len({p for p in prios if p % 2 == 1})
    return GameStats(w, d, odd, (min(prios), max(prios)))


def alternation_transform(g: GameStructure) -> Tuple[GameStructure, Dict[str, str]]:
    """Split same-owner edges with dummy states so ownership alternates.

    Each offending edge (s, t) becomes s -> dummy -> t where the dummy is
    owned by the opposite player, carries the full weight on the first
    half-edge and zero on the second, and copies the priority of s.  The
    returned map sends every new state id to the original state it stands
    for (dummies map to the source of their edge).
    """
    states = list(g.states)
    edges = []
    state_map = {s.id: s.id for s in g.states}
    used = set(g.ids)
    counter = 0
    for e in g.edges:
        if g.owner[e.src] != g.owner[e.dst]:
            edges.append(e)
            continue
        while f"d{counter}" in used:
            counter += 1
        dummy = f"d{counter}"
        used.add(dummy)
        states.append(State(dummy, 3 - g.owner[e.src], g.priority[e.src]))
        state_map[dummy] = e.src
        edges.append(Edge(e.src, dummy, e.weight))
        edges.append(Edge(dummy, e.dst, vec_zero(g.dimension)))
    g2 = GameStructure(tuple(states), tuple(edges), g.initial, g.dimension)
    return g2, state_map


def is_alternating(g: GameStructure) -> bool:
    return all(g.owner[e.src] != g.owner[e.dst] for e in g.edges)
