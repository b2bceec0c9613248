"""Greatest-fixed-point solver for multi energy games.

The controllable predecessor of an upward-closed set V contains (s, e)
when player 1, owning s, has an edge whose weight keeps some credit of V
reachable from e, and when player 2, owning s, cannot avoid that on any
edge.  Iterating from the full universe S x {0..C}^k yields a descending
chain whose limit is the set of winning credits up to the cap C.  Sets are
represented by antichains of minimal elements; `naive_fixpoint_oracle`
recomputes the same limit over the fully materialized universe and serves
as an independent cross-check.
"""

import itertools
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .antichain import Antichain, Credit, leq
from .game import GameStructure


def _minimize(vectors):
    """Pairwise-minimal elements of a list of credit tuples."""
    out = []
    for v in vectors:
        dominated = False
        keep = []
        for u in out:
            if leq(u, v):
                dominated = True
                keep.append(u)
            elif not leq(v, u):
                keep.append(u)
        if not dominated:
            keep.append(v)
            out = keep
        else:
            out = keep
    return out


def _edge_candidates(targets, weight, cap):
    """Minimal credits e with e + weight covering some target credit."""
    out = []
    for e2 in targets:
        e1 = tuple(max(t - w, 0) for t, w in zip(e2, weight))
        if all(x <= cap for x in e1):
            out.append(e1)
    return _minimize(out)


def cpre_step(g: GameStructure, cap: int, v: Antichain) -> Antichain:
    """One application of the controllable predecessor within U(cap)."""
    if v.cap != cap:
        raise ValueError(f"antichain cap {v.cap} does not match {cap}")
    result = Antichain(g.ids, cap, g.dimension)
    for s in g.ids:
        edges = g.succ[s]
        if g.owner[s] == 1:
            for e in edges:
                for cand in _edge_candidates(v.elements_at(e.dst), e.weight, cap):
                    result.insert_min(s, cand)
        else:
            combined = [(0,) * g.dimension]
            for e in edges:
                cands = _edge_candidates(v.elements_at(e.dst), e.weight, cap)
                if not cands:
                    combined = []
                    break
                merged = []
                for a in combined:
                    for b in cands:
                        m = tuple(max(x, y) for x, y in zip(a, b))
                        if all(x <= cap for x in m):
                            merged.append(m)
                combined = _minimize(merged)
                if not combined:
                    break
            for cand in combined:
                result.insert_min(s, cand)
    return result


@dataclass
class FixpointResult:
    cap: int
    winning: Antichain            # minimal elements of the greatest fixed point
    iterations: int               # strictly shrinking applications
    wall_stats: List[int] = field(default_factory=list)  # antichain size per application


def cpre_fixpoint(g: GameStructure, cap: int) -> FixpointResult:
    """Iterate the controllable predecessor from the full universe."""
    current = Antichain.full(g.ids, cap, g.dimension)
    iterations = 0
    sizes = []
    while True:
        nxt = cpre_step(g, cap, current)
        sizes.append(nxt.size())
        if nxt.set_equal(current):
            break
        iterations += 1
        current = nxt
    return FixpointResult(cap, current, iterations, sizes)


@dataclass
class SolveOutcome:
    status: str                       # "won" or "unknown"
    cap: int                          # cap of the decision
    initial_credits: List[Credit]     # minimal winning credits at the initial state
    fixpoint: Optional[FixpointResult]
    caps_tried: List[int]

    @property
    def won(self) -> bool:
        return self.status == "won"


def incremental_solve(g: GameStructure, schedule: Sequence[int],
                      hard_cap: int, on_fixpoint=None) -> SolveOutcome:
    """Run the fixed point over an increasing cap schedule.

    Returns a won outcome at the first cap whose fixed point contains the
    initial state with some credit, otherwise unknown-up-to hard_cap.  A
    won outcome is always definitive; unknown is definitive only when
    hard_cap reaches the completeness cap 2*l*W.  The hard cap is
    appended to the schedule when not already covered; on_fixpoint, if
    given, is called with (cap, FixpointResult) after every cap.
    """
    schedule = list(schedule)
    if not schedule:
        raise ValueError("empty schedule")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError("schedule must be strictly increasing")
    if schedule[-1] > hard_cap:
        raise ValueError("schedule exceeds hard cap")
    if schedule[-1] < hard_cap:
        schedule.append(hard_cap)
    tried = []
    for cap in schedule:
        tried.append(cap)
        fp = cpre_fixpoint(g, cap)
        if on_fixpoint is not None:
            on_fixpoint(cap, fp)
        credits = list(fp.winning.elements_at(g.initial))
        if credits:
            return SolveOutcome("won", cap, credits, fp, tried)
    return SolveOutcome("unknown", hard_cap, [], None, tried)


def default_schedule(start: int, hard_cap: int) -> List[int]:
    """Powers of two from start, clipped to hard_cap."""
    out = []
    c = max(start, 1)
    while c < hard_cap:
        out.append(c)
        c *= 2
    out.append(hard_cap)
    return out


def naive_fixpoint_oracle(g: GameStructure, cap: int,
                          limit: int = 10 ** 6) -> Set[Tuple[str, Credit]]:
    """The same greatest fixed point over the fully materialized universe.

    Independent of the antichain machinery: keeps one explicit set of
    surviving credits per state and sweeps until stable.  Guarded by a
    size limit on |S| * (cap+1)^k.
    """
    size = len(g.states) * (cap + 1) ** g.dimension
    if size > limit:
        raise ValueError(f"universe size {size} exceeds safety limit {limit}")
    credits = list(itertools.product(range(cap + 1), repeat=g.dimension))
    alive: Dict[str, Set[Credit]] = {s: set(credits) for s in g.ids}

    # Per-edge lookup: credit -> credit shifted by the edge weight, clamped
    # to the cap from above; None when the shift goes negative.
    shift: Dict[Tuple[str, str], Dict[Credit, Optional[Credit]]] = {}
    for e in g.edges:
        table = {}
        for c in credits:
            moved = tuple(x + w for x, w in zip(c, e.weight))
            if any(x < 0 for x in moved):
                table[c] = None
            else:
                table[c] = tuple(min(x, cap) for x in moved)
        shift[(e.src, e.dst)] = table

    changed = True
    while changed:
        changed = False
        for s in g.ids:
            edges = [(shift[(e.src, e.dst)], alive[e.dst]) for e in g.succ[s]]
            keep = set()
            if g.owner[s] == 1:
                for c in alive[s]:
                    for table, targets in edges:
                        t = table[c]
                        if t is not None and t in targets:
                            keep.add(c)
                            break
            else:
                for c in alive[s]:
                    ok = True
                    for table, targets in edges:
                        t = table[c]
                        if t is None or t not in targets:
                            ok = False
                            break
                    if ok:
                        keep.add(c)
            if keep != alive[s]:
                alive[s] = keep
                changed = True
    return {(s, c) for s in g.ids for c in alive[s]}


def explicit_to_antichain(g: GameStructure, cap: int,
                          pairs: Set[Tuple[str, Credit]]) -> Antichain:
    """Minimize an explicit (state, credit) set into an antichain."""
    a = Antichain(g.ids, cap, g.dimension)
    per_state: Dict[str, List[Credit]] = {s: [] for s in g.ids}
    for s, c in pairs:
        per_state[s].append(c)
    for s, cs in per_state.items():
        for c in _minimize(cs):
            a.insert_min(s, c)
    return a
