"""Partial orders on {1..n} over a fixed height, and their ideals.

Every related pair of the underlying structure carries the full
``height x height`` count, so a strict partial order on {1..n} together
with the height captures everything. Ideals are multisets obeying the
down-closure law: a positive count anywhere forces full count on every
element strictly below it.
"""

from __future__ import annotations

from .errors import CycleDetected, DimensionMismatch, NotAnIdeal
from .multiset import Multiset


class Pomset:
    """An immutable strict partial order on {1..n} with a height.

    ``relations`` is any iterable of pairs ``(i, j)`` meaning *i strictly
    below j* (1-based); the transitive closure is stored and a cycle in
    the closure is a construction error.
    """

    __slots__ = ("n", "height", "_below", "_above", "_pairs", "_dual")

    def __init__(self, n: int, height: int, relations=()):
        if n < 1:
            raise ValueError("ground set must have at least one element")
        if height < 1:
            raise ValueError("height must be positive")
        self.n = n
        self.height = height

        reach = [[False] * (n + 1) for _ in range(n + 1)]
        for i, j in relations:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"pair ({i}, {j}) outside 1..{n}")
            if i == j:
                raise ValueError(f"pair ({i}, {i}) relates an element to itself")
            reach[i][j] = True
        for k in range(1, n + 1):
            rk = reach[k]
            for i in range(1, n + 1):
                if reach[i][k]:
                    ri = reach[i]
                    for j in range(1, n + 1):
                        if rk[j]:
                            ri[j] = True
        for i in range(1, n + 1):
            if reach[i][i]:
                raise CycleDetected(f"element {i} lies strictly below itself")

        below = [frozenset()] * (n + 1)
        above = [frozenset()] * (n + 1)
        for j in range(1, n + 1):
            below[j] = frozenset(i for i in range(1, n + 1) if reach[i][j])
            above[j] = frozenset(i for i in range(1, n + 1) if reach[j][i])
        self._below = tuple(below)
        self._above = tuple(above)
        self._pairs = frozenset(
            (i, j) for j in range(1, n + 1) for i in below[j]
        )
        self._dual = None

    # ----- the order ------------------------------------------------------

    def is_below(self, i: int, j: int) -> bool:
        """True iff ``i`` is strictly below ``j``."""
        return i in self._below[j]

    def strictly_below(self, i: int) -> frozenset[int]:
        return self._below[i]

    def strictly_above(self, i: int) -> frozenset[int]:
        return self._above[i]

    @property
    def relation(self) -> frozenset[tuple[int, int]]:
        """All strict pairs ``(i, j)`` with i below j, transitively closed."""
        return self._pairs

    def cover_pairs(self) -> list[tuple[int, int]]:
        """The transitive reduction, sorted; empty for an antichain."""
        covers = []
        for i, j in sorted(self._pairs):
            if not any(self.is_below(i, k) and self.is_below(k, j)
                       for k in range(1, self.n + 1)):
                covers.append((i, j))
        return covers

    def dual(self) -> Pomset:
        """Same elements and height, order reversed; an involution."""
        if self._dual is None:
            d = Pomset(self.n, self.height, [(j, i) for i, j in self._pairs])
            d._dual = self
            self._dual = d
        return self._dual

    def is_chain(self) -> bool:
        return all(
            self.is_below(i, j) or self.is_below(j, i)
            for i in range(1, self.n + 1)
            for j in range(i + 1, self.n + 1)
        )

    def is_antichain(self) -> bool:
        return not self._pairs

    def maximal_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if not self._above[i])

    def minimal_indices(self) -> tuple[int, ...]:
        return tuple(i for i in range(1, self.n + 1) if not self._below[i])

    def linear_extension(self) -> tuple[int, ...]:
        # in a transitively closed order, i below j implies |below(i)| < |below(j)|
        return tuple(
            sorted(range(1, self.n + 1), key=lambda i: (len(self._below[i]), i))
        )

    # ----- multisets and ideals --------------------------------------------

    def _check_mset(self, mset: Multiset) -> None:
        if mset.n != self.n or mset.height != self.height:
            raise DimensionMismatch(
                f"multiset ({mset.n}, h={mset.height}) does not match "
                f"pomset ({self.n}, h={self.height})"
            )

    def full_mset(self) -> Multiset:
        return Multiset.full(self.n, self.height)

    def empty_mset(self) -> Multiset:
        return Multiset.empty(self.n, self.height)

    def is_ideal(self, mset: Multiset) -> bool:
        """Down-closure law: positive count at i forces full count below i."""
        self._check_mset(mset)
        h = self.height
        for i, c in enumerate(mset.counts, 1):
            if c > 0 and any(mset.count(j) != h for j in self._below[i]):
                return False
        return True

    def ideal(self, mset: Multiset) -> Ideal:
        return Ideal(self, mset)

    def generated_counts(self, counts) -> tuple[int, ...]:
        """Closure of a raw count sequence (index 0 holds element 1)."""
        h = self.height
        gen = list(counts)
        for i, c in enumerate(counts, 1):
            if c > 0:
                for j in self._below[i]:
                    gen[j - 1] = h
        return tuple(gen)

    def ideal_generated(self, mset: Multiset) -> Ideal:
        """Smallest ideal containing ``mset``: keep each count and fill
        everything strictly below a positive count up to the height."""
        self._check_mset(mset)
        return Ideal(self, Multiset(self.n, self.height,
                                    self.generated_counts(mset.counts)))

    def ideals_of_cardinality(self, t: int) -> list[Ideal]:
        """All ideals of total count ``t``, in lexicographic count order."""
        if not 0 <= t <= self.n * self.height:
            raise ValueError(f"cardinality {t} outside 0..{self.n * self.height}")
        return [Ideal(self, Multiset(self.n, self.height, counts))
                for counts in self._ideal_vectors(t)]

    def ideals(self) -> list[Ideal]:
        """Every ideal, in lexicographic count order."""
        return [Ideal(self, Multiset(self.n, self.height, counts))
                for counts in self._ideal_vectors(None)]

    def ideals_by_maximal_count(self, t: int, j: int) -> list[Ideal]:
        """The ideals of cardinality ``t`` whose root set has exactly ``j``
        maximal elements."""
        if not 1 <= j <= min(t, self.n):
            raise ValueError(f"maximal-element count {j} outside 1..min({t}, {self.n})")
        return [ideal for ideal in self.ideals_of_cardinality(t)
                if len(ideal.maximal_root()) == j]

    def _ideal_vectors(self, t: int | None) -> list[tuple[int, ...]]:
        # Assign counts along a linear extension; an element may be positive
        # only when everything strictly below it is already at full height.
        order = self.linear_extension()
        h, n = self.height, self.n
        counts = [0] * n
        out: list[tuple[int, ...]] = []

        def rec(pos: int, total: int) -> None:
            if t is not None:
                if total > t or total + h * (n - pos) < t:
                    return
            if pos == n:
                if t is None or total == t:
                    out.append(tuple(counts))
                return
            i = order[pos]
            open_above = all(counts[j - 1] == h for j in self._below[i])
            for c in range(0, h + 1 if open_above else 1):
                counts[i - 1] = c
                rec(pos + 1, total + c)
            counts[i - 1] = 0

        rec(0, 0)
        out.sort()
        return out

    # ----- housekeeping ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Pomset)
            and self.n == other.n
            and self.height == other.height
            and self._pairs == other._pairs
        )

    def __hash__(self) -> int:
        return hash((self.n, self.height, self._pairs))

    def __repr__(self) -> str:
        rel = " ".join(f"{i}<{j}" for i, j in self.cover_pairs())
        return f"Pomset(n={self.n}, height={self.height}, {rel or 'antichain'})"


def make_pomset(n: int, height: int, pairs=()) -> Pomset:
    """Convenience constructor mirroring the ``Pomset`` signature."""
    return Pomset(n, height, pairs)


class Ideal:
    """A multiset certified against a pomset's down-closure law."""

    __slots__ = ("pomset", "counts")

    def __init__(self, pomset: Pomset, counts: Multiset):
        if not pomset.is_ideal(counts):
            raise NotAnIdeal(f"{counts.literal()} violates down-closure")
        self.pomset = pomset
        self.counts = counts

    @property
    def cardinality(self) -> int:
        return self.counts.cardinality

    @property
    def root_set(self) -> frozenset[int]:
        return self.counts.root_set

    def count(self, i: int) -> int:
        return self.counts.count(i)

    def maximal_root(self) -> frozenset[int]:
        """Root elements with nothing of the ideal strictly above them."""
        root = self.counts.root_set
        return frozenset(
            i for i in root
            if not (self.pomset.strictly_above(i) & root)
        )

    def maximal_elements(self) -> Multiset:
        """The ideal's counts restricted to its maximal root elements."""
        keep = self.maximal_root()
        return Multiset(
            self.counts.n,
            self.counts.height,
            tuple(c if i in keep else 0
                  for i, c in enumerate(self.counts.counts, 1)),
        )

    def is_full_count(self) -> bool:
        h = self.counts.height
        return all(c in (0, h) for c in self.counts.counts)

    def partial_indices(self) -> tuple[int, ...]:
        """Root elements carrying less than the full height, ascending."""
        h = self.counts.height
        return tuple(i for i, c in enumerate(self.counts.counts, 1) if 0 < c < h)

    def full_indices(self) -> tuple[int, ...]:
        h = self.counts.height
        return tuple(i for i, c in enumerate(self.counts.counts, 1) if c == h)

    def complement(self) -> Ideal:
        """The complement multiset, which is an ideal of the dual order."""
        return Ideal(self.pomset.dual(), self.counts.complement())

    def shrink(self, s: int) -> Ideal:
        """A sub-ideal of cardinality ``s``; canonical witness obtained by
        repeatedly decrementing the largest maximal element."""
        if not 0 <= s <= self.cardinality:
            raise ValueError(f"target {s} outside 0..{self.cardinality}")
        current = self
        while current.cardinality > s:
            i = max(current.maximal_root())
            current = Ideal(
                current.pomset,
                current.counts.with_count(i, current.count(i) - 1),
            )
        return current

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Ideal)
            and self.pomset == other.pomset
            and self.counts == other.counts
        )

    def __hash__(self) -> int:
        return hash((self.pomset, self.counts))

    def __repr__(self) -> str:
        return f"Ideal({self.counts.literal()!r})"
