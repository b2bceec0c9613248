"""Antichain representation of upward-closed sets of (state, credit) pairs.

The order is (s, e) <= (s', e') iff s == s' and e <= e' component-wise.
An upward-closed subset of S x {0..C}^k is stored by its minimal elements,
kept per state as a list of pairwise-incomparable credit vectors.
Storage is linear-scan; antichains stay tiny at the scales this library
targets.
"""

from typing import Dict, Iterable, List, Tuple

Credit = Tuple[int, ...]


def leq(a: Credit, b: Credit) -> bool:
    return all(x <= y for x, y in zip(a, b))


class AntichainError(ValueError):
    pass


class Antichain:
    """Minimal elements of an upward-closed set over a fixed state universe."""

    __slots__ = ("cap", "dimension", "universe", "_elems")

    def __init__(self, universe: Iterable[str], cap: int, dimension: int):
        self.universe = tuple(universe)
        self.cap = cap
        self.dimension = dimension
        self._elems: Dict[str, List[Credit]] = {s: [] for s in self.universe}

    @classmethod
    def full(cls, universe: Iterable[str], cap: int, dimension: int) -> "Antichain":
        """The whole universe S x {0..C}^k, i.e. zero vectors everywhere."""
        a = cls(universe, cap, dimension)
        zero = (0,) * dimension
        for s in a.universe:
            a._elems[s] = [zero]
        return a

    def copy(self) -> "Antichain":
        a = Antichain(self.universe, self.cap, self.dimension)
        a._elems = {s: list(v) for s, v in self._elems.items()}
        return a

    def insert_min(self, s: str, e: Credit) -> "Antichain":
        """Add the upward closure of (s, e); returns self for chaining."""
        if s not in self._elems:
            raise AntichainError(f"state {s!r} outside universe")
        if len(e) != self.dimension:
            raise AntichainError(f"credit has length {len(e)}, expected {self.dimension}")
        if any(x < 0 or x > self.cap for x in e):
            raise AntichainError(f"credit {e} outside [0, {self.cap}]")
        kept = []
        for old in self._elems[s]:
            if leq(old, e):      # dominated: no-op
                return self
            if not leq(e, old):  # incomparable: keep
                kept.append(old)
        kept.append(e)
        self._elems[s] = kept
        return self

    def contains_upward(self, s: str, e: Credit) -> bool:
        """True iff some stored (s, e') has e' <= e; e may exceed the cap."""
        return any(leq(old, e) for old in self._elems.get(s, ()))

    def elements_at(self, s: str) -> Tuple[Credit, ...]:
        return tuple(sorted(self._elems.get(s, ())))

    def min_elements(self) -> List[Tuple[str, Credit]]:
        """All minimal elements in canonical order (state id, then credit)."""
        out = []
        for s in sorted(self._elems):
            for e in sorted(self._elems[s]):
                out.append((s, e))
        return out

    def set_equal(self, other: "Antichain") -> bool:
        """True iff both antichains represent the same upward-closed set."""
        if (self.cap, self.dimension, set(self.universe)) != \
                (other.cap, other.dimension, set(other.universe)):
            raise AntichainError("cap/universe mismatch")
        for s in self.universe:
            if set(self._elems[s]) != set(other._elems[s]):
                return False
        return True

    def subset_of(self, other: "Antichain") -> bool:
        """Upward-closure inclusion: every element of self lies in other."""
        return all(other.contains_upward(s, e)
                   for s in self.universe for e in self._elems[s])

    def size(self) -> int:
        return sum(len(v) for v in self._elems.values())

    def is_empty(self) -> bool:
        return all(not v for v in self._elems.values())

    def __eq__(self, other):
        if not isinstance(other, Antichain):
            return NotImplemented
        return self.set_equal(other)

    def __repr__(self):
        parts = [f"{s}:{sorted(v)}" for s, v in self._elems.items() if v]
        return f"Antichain(cap={self.cap}, {', '.join(parts)})"


def insert_min(a: Antichain, s: str, e: Credit) -> Antichain:
    return a.copy().insert_min(s, e)


def contains_upward(a: Antichain, s: str, e: Credit) -> bool:
    return a.contains_upward(s, e)


def set_equal(a: Antichain, b: Antichain) -> bool:
    return a.set_equal(b)


def min_elements(a: Antichain) -> List[Tuple[str, Credit]]:
    return a.min_elements()
