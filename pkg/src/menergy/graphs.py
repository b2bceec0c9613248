"""Small exact-arithmetic utilities on weighted digraphs.

Graphs are given as a node list plus a successor map
node -> list of (target, weight) where weight is an int (one dimension at
a time) or an int tuple, depending on the caller.  Used by the strategy
verifier and the randomized constructions; all checks are exact.
"""

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

Node = Hashable


def reachable(succ: Dict[Node, Sequence[Node]], start: Node) -> set:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for v in succ.get(u, ()):
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def sccs(nodes: Iterable[Node], succ: Dict[Node, Sequence[Node]]) -> List[List[Node]]:
    """Tarjan's strongly connected components, iterative."""
    index: Dict[Node, int] = {}
    low: Dict[Node, int] = {}
    on_stack = set()
    stack: List[Node] = []
    out: List[List[Node]] = []
    counter = [0]

    for root in nodes:
        if root in index:
            continue
        work = [(root, iter(succ.get(root, ())))]
        index[root] = low[root] = counter[0]
        counter[0] += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            u, it = work[-1]
            advanced = False
            for v in it:
                if v not in index:
                    index[v] = low[v] = counter[0]
                    counter[0] += 1
                    stack.append(v)
                    on_stack.add(v)
                    work.append((v, iter(succ.get(v, ()))))
                    advanced = True
                    break
                if v in on_stack:
                    low[u] = min(low[u], index[v])
            if advanced:
                continue
            work.pop()
            if work:
                p = work[-1][0]
                low[p] = min(low[p], low[u])
            if low[u] == index[u]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == u:
                        break
                out.append(comp)
    return out


def shortest_sums(nodes: Sequence[Node],
                  succ_w: Dict[Node, Sequence[Tuple[Node, int]]],
                  source: Node):
    """Bellman-Ford minimum cumulative sums from source.

    Returns (dist, parent, cycle_node) where cycle_node is a node on a
    reachable negative cycle (None if there is none).  dist maps reachable
    nodes to the minimum path sum over simple-ish paths; with a negative
    cycle present, sums are unbounded below and dist is only a bound.
    """
    dist = {source: 0}
    parent: Dict[Node, Tuple[Node, int]] = {}
    n = len(nodes)
    for _ in range(n - 1):
        changed = False
        for u in nodes:
            if u not in dist:
                continue
            du = dist[u]
            for v, w in succ_w.get(u, ()):
                if du + w < dist.get(v, du + w + 1):
                    dist[v] = du + w
                    parent[v] = (u, w)
                    changed = True
        if not changed:
            break
    cycle_node = None
    for u in nodes:
        if u not in dist:
            continue
        for v, w in succ_w.get(u, ()):
            if dist[u] + w < dist.get(v, dist[u] + w + 1):
                parent[v] = (u, w)
                cycle_node = v
                break
        if cycle_node is not None:
            break
    return dist, parent, cycle_node


def extract_cycle(parent: Dict[Node, Tuple[Node, int]], node: Node) -> List[Node]:
    """Walk parents from a node known to sit under a relaxation cycle."""
    seen = {}
    cur = node
    while cur not in seen:
        seen[cur] = len(seen)
        cur = parent[cur][0]
    cycle = [cur]
    walk = cur
    while True:
        walk = parent[walk][0]
        if walk == cur:
            break
        cycle.append(walk)
    cycle.reverse()  # parent edges point backwards
    return cycle


def path_from_parents(parent: Dict[Node, Tuple[Node, int]], source: Node,
                      target: Node) -> List[Node]:
    path = [target]
    cur = target
    guard = 0
    while cur != source:
        cur = parent[cur][0]
        path.append(cur)
        guard += 1
        if guard > len(parent) + 1:
            raise RuntimeError("parent chain does not reach source")
    path.reverse()
    return path


def find_negative_cycle(nodes: Sequence[Node],
                        succ_w: Dict[Node, Sequence[Tuple[Node, int]]],
                        source: Node) -> Optional[List[Node]]:
    """A reachable cycle with negative total weight, or None."""
    dist, parent, cnode = shortest_sums(nodes, succ_w, source)
    if cnode is None:
        return None
    # After |V|-1 rounds any further relaxation pins cnode under a cycle of
    # parent edges; every such cycle is negative.
    return extract_cycle(parent, cnode)


def max_cycle_mean(nodes: Sequence[Node],
                   succ_w: Dict[Node, Sequence[Tuple[Node, int]]]) -> Optional[Fraction]:
    """Karp's maximum cycle mean over the whole graph; None if acyclic."""
    best = None
    for comp in sccs(nodes, {u: [v for v, _ in succ_w.get(u, ())] for u in nodes}):
        comp_set = set(comp)
        has_edge = any(v in comp_set for u in comp for v, _ in succ_w.get(u, ()))
        if not has_edge:
            continue
        m = _karp(comp, {u: [(v, w) for v, w in succ_w.get(u, ()) if v in comp_set]
                         for u in comp})
        if m is not None and (best is None or m > best):
            best = m
    return best


def _karp(comp: Sequence[Node],
          succ_w: Dict[Node, Sequence[Tuple[Node, int]]]) -> Optional[Fraction]:
    n = len(comp)
    source = comp[0]
    # D[k][v] = max weight of a k-edge walk source -> v (None = unreachable)
    prev = {v: None for v in comp}
    prev[source] = 0
    table = [prev]
    for _ in range(n):
        cur = {v: None for v in comp}
        for u in comp:
            du = table[-1][u]
            if du is None:
                continue
            for v, w in succ_w.get(u, ()):
                if cur[v] is None or du + w > cur[v]:
                    cur[v] = du + w
        table.append(cur)
    best = None
    for v in comp:
        dn = table[n][v]
        if dn is None:
            continue
        worst = None
        for k in range(n):
            dk = table[k][v]
            if dk is None:
                continue
            val = Fraction(dn - dk, n - k)
            if worst is None or val < worst:
                worst = val
        if worst is not None and (best is None or worst > best):
            best = worst
    return best


def find_cycle_through(node: Node,
                       succ: Dict[Node, Sequence[Node]],
                       allowed: set) -> Optional[List[Node]]:
    """A cycle through `node` staying inside `allowed`, or None."""
    if node not in allowed:
        return None
    parent = {}
    stack = [node]
    seen = {node}
    while stack:
        u = stack.pop()
        for v in succ.get(u, ()):
            if v not in allowed:
                continue
            if v == node:
                path = [u]
                while path[-1] != node:
                    path.append(parent[path[-1]])
                path.reverse()
                return path
            if v not in seen:
                seen.add(v)
                parent[v] = u
                stack.append(v)
    return None


def find_odd_priority_cycle(nodes: Sequence[Node],
                            succ: Dict[Node, Sequence[Node]],
                            priority_of: Callable[[Node], int],
                            start: Optional[Node] = None) -> Optional[List[Node]]:
    """A reachable cycle whose minimal priority is odd, or None.

    For each odd priority q, restrict to nodes of priority >= q reachable
    from start (all nodes when start is None) and look for a cycle through
    a priority-q node.
    """
    reach = reachable(succ, start) if start is not None else set(nodes)
    odds = sorted({priority_of(u) for u in reach if priority_of(u) % 2 == 1})
    for q in odds:
        allowed_all = {u for u in reach if priority_of(u) >= q}
        restricted = {u: [v for v in succ.get(u, ()) if v in allowed_all]
                      for u in allowed_all}
        for comp in sccs(sorted(allowed_all, key=str), restricted):
            comp_set = set(comp)
            witnesses = [u for u in comp if priority_of(u) == q]
            if not witnesses:
                continue
            for u in witnesses:
                cyc = find_cycle_through(u, restricted, comp_set)
                if cyc is not None:
                    return cyc
    return None
