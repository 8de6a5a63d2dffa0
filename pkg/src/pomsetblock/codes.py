"""Block codes: explicit codeword sets, distances, perfect codes, duals."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .balls import in_i_ball, in_r_ball
from .block_space import DEFAULT_CAP, BlockSpace, BlockVector
from .errors import (
    DivisibilityFails,
    NotFullCount,
    NotLinear,
    SingletonCode,
    SpaceMismatch,
    SpaceTooLarge,
)
from .pomset import Ideal


class Code:
    """A nonempty deduplicated set of vectors from one block space.

    ``linear`` is a verified property (closure scan over all codeword
    pairs; scalars follow over Z_m), computed on first use, never a trust
    flag.
    """

    __slots__ = ("space", "codewords", "_coord_set", "_linear")

    def __init__(self, space: BlockSpace, codewords):
        coords = set()
        for w in codewords:
            if isinstance(w, BlockVector):
                if w.space != space:
                    raise SpaceMismatch("codeword from a different space")
                coords.add(w.coords)
            else:
                coords.add(space.vector(w).coords)
        if not coords:
            raise ValueError("a code must contain at least one word")
        self.space = space
        self.codewords = tuple(BlockVector(space, c) for c in sorted(coords))
        self._coord_set = frozenset(coords)
        self._linear = None

    @classmethod
    def from_generators(cls, space: BlockSpace, rows) -> Code:
        """The span of the given rows: all Z_m-linear combinations."""
        gens = []
        for r in rows:
            coords = r.coords if isinstance(r, BlockVector) else tuple(r)
            gens.append(space.vector(coords).coords)
        m, N = space.m, space.N
        words = set()
        for coeffs in product(range(m), repeat=len(gens)):
            acc = [0] * N
            for a, g in zip(coeffs, gens):
                if a:
                    for idx, x in enumerate(g):
                        acc[idx] += a * x
            words.add(tuple(v % m for v in acc))
        return cls(space, words)

    @property
    def coord_set(self) -> frozenset[tuple[int, ...]]:
        return self._coord_set

    @property
    def linear(self) -> bool:
        if self._linear is None:
            m = self.space.m
            words = [w.coords for w in self.codewords]
            inside = self._coord_set
            ok = (0,) * self.space.N in inside
            if ok:
                for a in words:
                    for b in words:
                        if tuple((x + y) % m for x, y in zip(a, b)) not in inside:
                            ok = False
                            break
                    if not ok:
                        break
            self._linear = ok
        return self._linear

    def __len__(self) -> int:
        return len(self.codewords)

    def __iter__(self):
        return iter(self.codewords)

    def __contains__(self, v) -> bool:
        coords = v.coords if isinstance(v, BlockVector) else tuple(v)
        return coords in self._coord_set

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Code)
            and self.space == other.space
            and self._coord_set == other._coord_set
        )

    def __hash__(self) -> int:
        return hash((self.space, self._coord_set))

    def in_space(self, other: BlockSpace) -> Code:
        """The same coordinate set viewed in another space (same m, pi)."""
        if other.m != self.space.m or other.pi != self.space.pi:
            raise SpaceMismatch("target space has different modulus or labels")
        return Code(other, self._coord_set)

    def min_distance(self, metric: str = "pomset") -> int:
        """Least distance between distinct codewords.

        ``metric`` is "pomset" (block-support weight of the difference) or
        "poset" (order-ideal size of the nonzero block positions). Linear
        codes use the minimum nonzero weight.
        """
        if len(self.codewords) < 2:
            raise SingletonCode("minimum distance needs two codewords")
        if metric == "pomset":
            weigh = BlockVector.weight
        elif metric == "poset":
            weigh = BlockVector.poset_weight
        else:
            raise ValueError(f"unknown metric {metric!r}")
        if self.linear:
            return min(weigh(w) for w in self.codewords if not w.is_zero)
        words = self.codewords
        return min(
            weigh(words[i] - words[j])
            for i in range(len(words))
            for j in range(i + 1, len(words))
        )

    def __repr__(self) -> str:
        return f"Code(|C|={len(self.codewords)}, space={self.space!r})"


@dataclass(frozen=True)
class PerfectnessCertificate:
    """Outcome of an exhaustive disjointness-and-cover scan.

    ``parameter`` is the ideal or the radius the balls were drawn with;
    ``overlap`` holds the first vector found in two codeword balls (with
    those codewords); ``uncovered`` the first vector in none.
    """

    kind: str
    parameter: object
    disjoint: bool
    covering: bool
    overlap: tuple[BlockVector, BlockVector, BlockVector] | None
    uncovered: BlockVector | None

    @property
    def is_perfect(self) -> bool:
        return self.disjoint and self.covering


def verify_perfect(code: Code, ideal: Ideal | None = None,
                   radius: int | None = None,
                   cap: int = DEFAULT_CAP) -> PerfectnessCertificate:
    """Scan the whole space; every vector must sit in exactly one ball."""
    if (ideal is None) == (radius is None):
        raise ValueError("give exactly one of ideal= or radius=")
    space = code.space
    if ideal is not None:
        member = lambda c, v: in_i_ball(c, v, ideal)
        kind, parameter = "ideal", ideal
    else:
        if not 0 <= radius <= space.n * space.max_lee:
            raise ValueError(
                f"radius {radius} outside 0..{space.n * space.max_lee}"
            )
        member = lambda c, v: in_r_ball(c, v, radius)
        kind, parameter = "radius", radius
    overlap = None
    uncovered = None
    for v in space.vectors(cap):
        hits = []
        for c in code:
            if member(c, v):
                hits.append(c)
                if len(hits) > 1:
                    break
        if len(hits) > 1 and overlap is None:
            overlap = (v, hits[0], hits[1])
        elif not hits and uncovered is None:
            uncovered = v
        if overlap is not None and uncovered is not None:
            break
    return PerfectnessCertificate(
        kind=kind,
        parameter=parameter,
        disjoint=overlap is None,
        covering=uncovered is None,
        overlap=overlap,
        uncovered=uncovered,
    )


def construct_perfect_full(space: BlockSpace, ideal: Ideal,
                           cap: int = DEFAULT_CAP) -> Code:
    """The zero-section transversal for a full-count ideal: all vectors
    vanishing on the root blocks. One codeword per ball, hence perfect."""
    if not ideal.is_full_count():
        raise NotFullCount(f"{ideal!r} has a partial count")
    choices = {
        i: ((0,) if i in ideal.root_set else None)
        for i in range(1, space.n + 1)
    }
    return _blockwise_code(space, choices, cap)


def construct_perfect_partial(space: BlockSpace, ideal: Ideal,
                              cap: int = DEFAULT_CAP) -> Code:
    """Perfect-code centers for an ideal with partial counts.

    Blocks with a full count are pinned to zero; a block with partial
    count t draws every coordinate from the multiples of 2t+1 (which
    requires (2t+1) | m); blocks off the root are free.
    """
    m = space.m
    choices: dict[int, tuple[int, ...] | None] = {}
    partial = set(ideal.partial_indices())
    for i in range(1, space.n + 1):
        if i in partial:
            t = ideal.count(i)
            step = 2 * t + 1
            if m % step:
                raise DivisibilityFails(i, t, m)
            choices[i] = tuple(range(0, m, step))
        elif i in ideal.root_set:
            choices[i] = (0,)
        else:
            choices[i] = None
    return _blockwise_code(space, choices, cap)


def _blockwise_code(space: BlockSpace, choices, cap: int) -> Code:
    """Code of all vectors whose block i entries come componentwise from
    choices[i] (a tuple of allowed residues), or anywhere when None."""
    per_block = []
    size = 1
    for i in range(1, space.n + 1):
        k = space.pi[i - 1]
        allowed = tuple(range(space.m)) if choices[i] is None else choices[i]
        size *= len(allowed) ** k
        per_block.append(list(product(allowed, repeat=k)))
    if size > cap:
        raise SpaceTooLarge(
            f"construction would emit {size} codewords, above the cap {cap}"
        )
    words = []
    for blocks in product(*per_block):
        words.append(tuple(x for b in blocks for x in b))
    return Code(space, words)


def dual_code(code: Code, cap: int = DEFAULT_CAP) -> Code:
    """All vectors orthogonal (dot product mod m over flat coordinates)
    to every codeword, found by a full scan."""
    if not code.linear:
        raise NotLinear("dual of a non-linear code is not defined here")
    space = code.space
    m = space.m
    words = [w.coords for w in code]
    perp = []
    for coords in space.coord_tuples(cap):
        if all(sum(x * y for x, y in zip(coords, w)) % m == 0 for w in words):
            perp.append(coords)
    return Code(space, perp)


@dataclass(frozen=True)
class PerpDualityReport:
    """Both sides of the full-count perfectness duality, evaluated
    independently: the code against I, its dual against the complement
    ideal in the dual space."""

    code_perfect: bool
    dual_perfect: bool

    @property
    def holds(self) -> bool:
        return self.code_perfect == self.dual_perfect


def perp_duality_report(code: Code, ideal: Ideal,
                        cap: int = DEFAULT_CAP) -> PerpDualityReport:
    if not ideal.is_full_count():
        raise NotFullCount(f"{ideal!r} has a partial count")
    left = verify_perfect(code, ideal=ideal, cap=cap).is_perfect
    dual_space = code.space.dual()
    dualc = dual_code(code, cap).in_space(dual_space)
    right = verify_perfect(dualc, ideal=ideal.complement(), cap=cap).is_perfect
    return PerpDualityReport(code_perfect=left, dual_perfect=right)
