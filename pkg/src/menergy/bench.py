"""Canonical fixture games and instance generators.

Fixture transcriptions are frozen as golden .game files shipped with the
package; the generators emit byte-identical text (checked by tests) so
that downstream runs are reproducible.
"""

import random
import re
from importlib import resources

from .game import GameStructure, make_game

FIXTURE_IDS = ("fig1", "fig5", "fig6", "fig7", "fig8", "mpp")


def gen_exp_family(k_gadgets: int) -> GameStructure:
    """The K-gadget family that forces exponential strategy memory.

    6K states in two mirrored rows of gadgets: the s-row belongs to the
    adversary, the t-row to player 1.  Gadget i charges +1/-1 on
    dimensions 2i-1 and 2i depending on the side chosen; connector edges
    are zero.  Countering the adversary's last choice in every gadget
    wins with initial credit (1, ..., 1) and needs 2^K memory states.
    """
    if k_gadgets < 1:
        raise ValueError("family parameter must be >= 1")
    k = 2 * k_gadgets
    states = []
    edges = []
    for prefix, owner in (("s", 2), ("t", 1)):
        for i in range(1, k_gadgets + 1):
            states += [(f"{prefix}{i}", owner, 0),
                       (f"{prefix}{i}L", owner, 0),
                       (f"{prefix}{i}R", owner, 0)]
    for prefix, other in (("s", "t"), ("t", "s")):
        for i in range(1, k_gadgets + 1):
            left = [0] * k
            left[2 * i - 2] = 1
            left[2 * i - 1] = -1
            right = [-x for x in left]
            nxt = f"{prefix}{i + 1}" if i < k_gadgets else f"{other}1"
            edges += [
                (f"{prefix}{i}", f"{prefix}{i}L", left),
                (f"{prefix}{i}", f"{prefix}{i}R", right),
                (f"{prefix}{i}L", nxt, [0] * k),
                (f"{prefix}{i}R", nxt, [0] * k),
            ]
    return make_game(states, edges, "s1", k)


def _fig1():
    return make_game(
        states=[("s0", 2, 2), ("s1", 2, 3), ("s2", 2, 1),
                ("s3", 1, 2), ("s4", 1, 3), ("s5", 1, 0)],
        edges=[("s0", "s1", (-1, 1)), ("s0", "s2", (0, 2)),
               ("s1", "s3", (0, 1)), ("s2", "s3", (0, 0)),
               ("s3", "s4", (1, -1)), ("s3", "s5", (-2, 1)),
               ("s4", "s0", (0, -1)), ("s5", "s3", (2, 0))],
        initial="s0", dimension=2)


def _fig5():
    return make_game(
        states=[("s1", 1, 0), ("s2", 1, 0), ("s3", 1, 0)],
        edges=[("s1", "s2", (0, 0)), ("s1", "s3", (0, 0)),
               ("s2", "s2", (2, 0)), ("s3", "s3", (0, 2))],
        initial="s1", dimension=2)


def _fig6():
    return make_game(
        states=[("s1", 2, 0), ("s2", 1, 0), ("s3", 1, 0),
                ("s4", 1, 0), ("s5", 1, 0), ("s6", 1, 0)],
        edges=[("s1", "s2", (1, -1)), ("s1", "s3", (-1, 1)),
               ("s2", "s4", (0, 0)), ("s3", "s4", (0, 0)),
               ("s4", "s5", (1, -1)), ("s4", "s6", (-1, 1)),
               ("s5", "s1", (0, 0)), ("s6", "s1", (0, 0))],
        initial="s1", dimension=2)


def _fig7():
    # One-player mean-payoff Büchi game; s2 is the Büchi state (priority 0).
    return make_game(
        states=[("s1", 1, 1), ("s2", 1, 0)],
        edges=[("s1", "s1", (1,)), ("s1", "s2", (-1,)), ("s2", "s1", (-1,))],
        initial="s1", dimension=1)


def _fig8():
    return make_game(
        states=[("s0", 1, 0), ("s1", 1, 0)],
        edges=[("s0", "s0", (1, -1)), ("s0", "s1", (0, 0)),
               ("s1", "s1", (-1, 1))],
        initial="s0", dimension=2)


def _mpp():
    # One-player mean-payoff Büchi game where optimal play needs infinite
    # memory; s1 is the Büchi state.
    return make_game(
        states=[("s0", 1, 1), ("s1", 1, 0)],
        edges=[("s0", "s0", (1,)), ("s0", "s1", (1,)), ("s1", "s0", (0,))],
        initial="s0", dimension=1)


def gen_paper_fixture(fixture_id: str) -> GameStructure:
    """One canonical game per fixture id; expfam<K> is the lower-bound
    family with K gadgets."""
    builders = {"fig1": _fig1, "fig5": _fig5, "fig6": _fig6,
                "fig7": _fig7, "fig8": _fig8, "mpp": _mpp}
    if fixture_id in builders:
        return builders[fixture_id]()
    m = re.fullmatch(r"expfam(\d+)", fixture_id)
    if m:
        return gen_exp_family(int(m.group(1)))
    raise ValueError(f"unknown fixture id {fixture_id!r}")


def golden_fixture_text(fixture_id: str) -> str:
    """Frozen .game file shipped with the package."""
    return (resources.files("menergy") / "fixtures" / f"{fixture_id}.game").read_text()


def gen_random_game(n_states: int, dimension: int, max_weight: int,
                    owner_ratio: float = 0.5, priority_max: int = 0,
                    seed: int = 0) -> GameStructure:
    """Seed-deterministic random game; every state gets 1 to 3 outgoing
    edges and weights uniform in [-max_weight, max_weight]."""
    if n_states < 1 or dimension < 1 or max_weight < 0:
        raise ValueError("parameters must be positive")
    rng = random.Random(seed)
    ids = [f"s{i}" for i in range(n_states)]
    states = [(sid, 1 if rng.random() < owner_ratio else 2,
               rng.randint(0, priority_max)) for sid in ids]
    edges = []
    for sid in ids:
        degree = rng.randint(1, min(3, n_states))
        for target in rng.sample(ids, degree):
            w = tuple(rng.randint(-max_weight, max_weight) for _ in range(dimension))
            edges.append((sid, target, w))
    return make_game(states, edges, ids[0], dimension)
