"""Z_m^N split into labelled blocks, with Lee weight and the block metrics.

A block space is Z_m^{k_1} + ... + Z_m^{k_n} together with a pomset of
height floor(m/2) on the block positions. The block support of a vector
assigns each nonzero block its maximum Lee weight; the weight of the
vector is the cardinality of the ideal generated by that support.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import (
    DimensionMismatch,
    NonUnitBlocks,
    SpaceMismatch,
    SpaceTooLarge,
)
from .multiset import Multiset
from .pomset import Pomset

#: Default guard on exhaustive space enumeration (number of vectors).
DEFAULT_CAP = 10**7


def lee_weight(x: int, m: int) -> int:
    """min(x, m - x) for the residue of ``x`` mod ``m``."""
    x %= m
    return min(x, m - x)


def block_max_lee(block, m: int) -> int:
    """Largest Lee weight among the entries; 0 iff the block is zero."""
    return max(lee_weight(x, m) for x in block)


class BlockSpace:
    """The space Z_m^N with blocks of lengths ``pi`` ordered by ``pomset``."""

    __slots__ = ("m", "pomset", "pi", "_offsets", "_dual")

    def __init__(self, m: int, pomset: Pomset, pi):
        if m < 2:
            raise ValueError("modulus must be at least 2")
        pi = tuple(int(k) for k in pi)
        if any(k < 1 for k in pi):
            raise ValueError("block lengths must be positive")
        if pomset.n != len(pi):
            raise DimensionMismatch(
                f"pomset has {pomset.n} elements but pi labels {len(pi)} blocks"
            )
        if pomset.height != m // 2:
            raise ValueError(
                f"pomset height {pomset.height} != floor({m}/2) = {m // 2}"
            )
        self.m = m
        self.pomset = pomset
        self.pi = pi
        offsets = [0]
        for k in pi:
            offsets.append(offsets[-1] + k)
        self._offsets = tuple(offsets)
        self._dual = None

    @property
    def n(self) -> int:
        return len(self.pi)

    @property
    def N(self) -> int:
        return self._offsets[-1]

    @property
    def max_lee(self) -> int:
        """The largest Lee weight of a residue, floor(m/2)."""
        return self.m // 2

    def size(self) -> int:
        return self.m ** self.N

    def block_bounds(self, i: int) -> tuple[int, int]:
        """Flat-coordinate range of block ``i`` (1-based)."""
        return self._offsets[i - 1], self._offsets[i]

    # ----- vectors ----------------------------------------------------------

    def vector(self, coords) -> BlockVector:
        return BlockVector(self, tuple(coords))

    def from_blocks(self, blocks) -> BlockVector:
        coords: list[int] = []
        for b in blocks:
            coords.extend(b)
        return BlockVector(self, tuple(coords))

    def zero(self) -> BlockVector:
        return BlockVector(self, (0,) * self.N)

    def parse_vector(self, text: str) -> BlockVector:
        toks = text.split()
        if len(toks) != self.N:
            raise DimensionMismatch(
                f"expected {self.N} coordinates, got {len(toks)}"
            )
        return BlockVector(self, tuple(int(t) for t in toks))

    def check_enumerable(self, cap: int = DEFAULT_CAP) -> None:
        if self.size() > cap:
            raise SpaceTooLarge(
                f"space has {self.size()} vectors, above the cap {cap}"
            )

    def coord_tuples(self, cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
        """All coordinate tuples in odometer order (last coordinate fastest)."""
        self.check_enumerable(cap)
        return product(range(self.m), repeat=self.N)

    def vectors(self, cap: int = DEFAULT_CAP) -> Iterator[BlockVector]:
        for coords in self.coord_tuples(cap):
            yield BlockVector(self, coords)

    # ----- metrics ----------------------------------------------------------

    def distance(self, u: BlockVector, v: BlockVector) -> int:
        """The pomset block distance, a metric on the space."""
        return (u - v).weight()

    def poset_distance(self, u: BlockVector, v: BlockVector) -> int:
        return (u - v).poset_weight()

    def dual(self) -> BlockSpace:
        """Same modulus and labels over the reversed order."""
        if self._dual is None:
            d = BlockSpace(self.m, self.pomset.dual(), self.pi)
            d._dual = self
            self._dual = d
        return self._dual

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, BlockSpace)
            and self.m == other.m
            and self.pi == other.pi
            and self.pomset == other.pomset
        )

    def __hash__(self) -> int:
        return hash((self.m, self.pi, self.pomset))

    def __repr__(self) -> str:
        return f"BlockSpace(m={self.m}, pi={self.pi}, {self.pomset!r})"


@dataclass(frozen=True)
class BlockVector:
    space: BlockSpace
    coords: tuple[int, ...]

    def __post_init__(self):
        if len(self.coords) != self.space.N:
            raise DimensionMismatch(
                f"expected {self.space.N} coordinates, got {len(self.coords)}"
            )
        # residues are reduced, not rejected
        object.__setattr__(
            self, "coords", tuple(int(x) % self.space.m for x in self.coords)
        )

    def block(self, i: int) -> tuple[int, ...]:
        lo, hi = self.space.block_bounds(i)
        return self.coords[lo:hi]

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.block(i) for i in range(1, self.space.n + 1))

    def block_max_lee(self, i: int) -> int:
        return block_max_lee(self.block(i), self.space.m)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def support(self) -> Multiset:
        """Block support: each block's maximum Lee weight (0 for zero blocks)."""
        space = self.space
        return Multiset(
            space.n,
            space.max_lee,
            tuple(self.block_max_lee(i) for i in range(1, space.n + 1)),
        )

    def weight(self) -> int:
        """Cardinality of the ideal generated by the block support."""
        return self.space.pomset.ideal_generated(self.support()).cardinality

    def poset_weight(self) -> int:
        """Number of block positions in the down-set of the nonzero blocks."""
        pomset = self.space.pomset
        root = self.support().root_set
        down = set(root)
        for i in root:
            down |= pomset.strictly_below(i)
        return len(down)

    def literal(self) -> str:
        return " ".join(str(x) for x in self.coords)

    # ----- arithmetic --------------------------------------------------------

    def _check(self, other: BlockVector) -> None:
        if self.space != other.space:
            raise SpaceMismatch("vectors live in different block spaces")

    def __add__(self, other: BlockVector) -> BlockVector:
        self._check(other)
        return BlockVector(
            self.space, tuple(a + b for a, b in zip(self.coords, other.coords))
        )

    def __sub__(self, other: BlockVector) -> BlockVector:
        self._check(other)
        return BlockVector(
            self.space, tuple(a - b for a, b in zip(self.coords, other.coords))
        )

    def __neg__(self) -> BlockVector:
        return BlockVector(self.space, tuple(-a for a in self.coords))

    def __rmul__(self, scalar: int) -> BlockVector:
        return BlockVector(self.space, tuple(scalar * a for a in self.coords))

    def __repr__(self) -> str:
        return f"BlockVector({self.literal()!r})"


def pw_weight(v: BlockVector) -> int:
    """Weighted-coordinates poset weight for unit-block spaces.

    Sums the Lee weights over the maximal elements of the down-set of the
    support and charges floor(m/2) for every non-maximal element. Agrees
    with ``BlockVector.weight`` pointwise.
    """
    space = v.space
    if any(k != 1 for k in space.pi):
        raise NonUnitBlocks("weighted-coordinates weight needs unit blocks")
    pomset = space.pomset
    root = frozenset(i for i in range(1, space.n + 1) if v.coords[i - 1])
    down = set(root)
    for i in root:
        down |= pomset.strictly_below(i)
    maximal = {i for i in down if not (pomset.strictly_above(i) & down)}
    h = space.max_lee
    return sum(lee_weight(v.coords[i - 1], space.m) for i in maximal) + h * (
        len(down) - len(maximal)
    )


def antichain_space(m: int, pi) -> BlockSpace:
    pi = tuple(pi)
    return BlockSpace(m, Pomset(len(pi), m // 2), pi)


def chain_space(m: int, pi) -> BlockSpace:
    """Blocks totally ordered 1 < 2 < ... < n."""
    pi = tuple(pi)
    n = len(pi)
    return BlockSpace(m, Pomset(n, m // 2, [(i, i + 1) for i in range(1, n)]), pi)


def space_with_order(m: int, pi, pairs) -> BlockSpace:
    pi = tuple(pi)
    return BlockSpace(m, Pomset(len(pi), m // 2, pairs), pi)
