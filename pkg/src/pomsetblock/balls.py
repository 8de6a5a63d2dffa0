"""Balls and spheres of the block metric: membership, enumeration, counting.

For an ideal I, the I-ball around u holds every v whose difference support
fits inside I pointwise; the I-sphere holds those whose difference support
generates exactly I. Closed-form cardinalities are provided alongside
enumeration-based counterparts so each can falsify the other.
"""

from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass
from itertools import product

from .block_space import DEFAULT_CAP, BlockSpace, BlockVector, lee_weight
from .errors import NotFullCount, SpaceMismatch
from .pomset import Ideal

#: Above this many member pairs, submodule closure is spot-checked instead
#: of scanned exhaustively (scalar multiples are always scanned in full).
PAIR_SCAN_LIMIT = 6_000_000


def _check_center(u: BlockVector, v: BlockVector) -> None:
    if u.space != v.space:
        raise SpaceMismatch("center and candidate live in different spaces")


def in_i_ball(u: BlockVector, v: BlockVector, ideal: Ideal) -> bool:
    """True iff the support of u - v fits in ``ideal`` pointwise.

    Because I is down-closed this is equivalent to the generated ideal of
    the support being contained in I.
    """
    _check_center(u, v)
    return (u - v).support().is_submset(ideal.counts)


def in_r_ball(u: BlockVector, v: BlockVector, r: int) -> bool:
    _check_center(u, v)
    return (u - v).weight() <= r


def i_ball(center: BlockVector, ideal: Ideal, cap: int = DEFAULT_CAP) -> list[BlockVector]:
    """Explicit I-ball membership list, in odometer order.

    Built block by block: every entry of a difference block must have Lee
    weight at most the ideal's count there, so block i of a member is the
    center block shifted by each such small block. The per-block sets are
    found by scanning Z_m^{k_i}; ``in_i_ball`` offers the independent
    whole-space predicate.
    """
    space = center.space
    space.check_enumerable(cap)
    m = space.m
    per_block = []
    for i in range(1, space.n + 1):
        c = ideal.count(i)
        ui = center.block(i)
        vals = sorted(
            tuple((a - x) % m for a, x in zip(ui, w))
            for w in product(range(m), repeat=space.pi[i - 1])
            if max(lee_weight(x, m) for x in w) <= c
        )
        per_block.append(vals)
    return [
        BlockVector(space, tuple(x for b in blocks for x in b))
        for blocks in product(*per_block)
    ]


def i_sphere(center: BlockVector, ideal: Ideal, cap: int = DEFAULT_CAP) -> list[BlockVector]:
    """Vectors whose difference support generates exactly ``ideal``."""
    space = center.space
    pomset = space.pomset
    want = ideal.counts.counts
    out = []
    for v in space.vectors(cap):
        supp = (center - v).support()
        if pomset.generated_counts(supp.counts) == want:
            out.append(v)
    return out


def r_ball(center: BlockVector, r: int, cap: int = DEFAULT_CAP) -> list[BlockVector]:
    space = center.space
    return [v for v in space.vectors(cap) if (center - v).weight() <= r]


def r_sphere(center: BlockVector, r: int, cap: int = DEFAULT_CAP) -> list[BlockVector]:
    space = center.space
    return [v for v in space.vectors(cap) if (center - v).weight() == r]


# ----- closed forms ----------------------------------------------------------


def _max_lee_exact_count(m: int, k: int, c: int) -> int:
    """Number of blocks in Z_m^k whose maximum Lee weight is exactly c >= 1.

    Partial count c (below floor(m/2)): every entry has Lee weight <= c
    with at least one hitting c, so (2c+1)^k - (2c-1)^k. Full count: the
    top Lee weight is reached by 2 residues when m is odd and 1 when m is
    even, giving m^k - (m - that)^k.
    """
    h = m // 2
    if c == h:
        top = 2 if m % 2 else 1
        return m**k - (m - top) ** k
    return (2 * c + 1) ** k - (2 * c - 1) ** k


def i_sphere_size(space: BlockSpace, ideal: Ideal) -> int:
    """Closed-form |I-sphere|, independent of the center.

    Maximal root elements contribute blocks of exact maximum Lee weight;
    the remaining root elements (necessarily at full count) are free.
    """
    maximal = ideal.maximal_root()
    total = 1
    for i in maximal:
        total *= _max_lee_exact_count(space.m, space.pi[i - 1], ideal.count(i))
    for l in ideal.root_set - maximal:
        total *= space.m ** space.pi[l - 1]
    return total


def i_ball_size(space: BlockSpace, ideal: Ideal) -> int:
    """Closed-form |I-ball|: partial-count blocks restrict every entry to
    Lee weight <= the count, full-count blocks are free, others are zero."""
    total = 1
    for i in ideal.partial_indices():
        total *= (1 + 2 * ideal.count(i)) ** space.pi[i - 1]
    for j in ideal.full_indices():
        total *= space.m ** space.pi[j - 1]
    return total


def r_sphere_size(space: BlockSpace, r: int) -> int:
    """Closed-form |r-sphere|: ideals of cardinality r grouped by how many
    maximal elements they have."""
    if r == 0:
        return 1
    if not 1 <= r <= space.n * space.max_lee:
        raise ValueError(f"radius {r} outside 0..{space.n * space.max_lee}")
    total = 0
    for j in range(1, min(r, space.n) + 1):
        for ideal in space.pomset.ideals_by_maximal_count(r, j):
            total += i_sphere_size(space, ideal)
    return total


def r_ball_size(space: BlockSpace, r: int) -> int:
    if not 0 <= r <= space.n * space.max_lee:
        raise ValueError(f"radius {r} outside 0..{space.n * space.max_lee}")
    return 1 + sum(r_sphere_size(space, i) for i in range(1, r + 1))


# ----- enumeration-based counting --------------------------------------------


def profile_census(space: BlockSpace, cap: int = DEFAULT_CAP) -> Counter:
    """Count vectors by block-support profile via one full-space sweep.

    Every vector of the space is visited exactly once (as a combination of
    per-block values); the per-block maximum Lee weights are tabulated by
    scanning each Z_m^{k_i} directly.
    """
    space.check_enumerable(cap)
    m = space.m
    tables = []
    for k in space.pi:
        tables.append(
            [max(lee_weight(x, m) for x in block)
             for block in product(range(m), repeat=k)]
        )
    return Counter(product(*tables))


def support_census(space: BlockSpace, cap: int = DEFAULT_CAP) -> dict[tuple[int, ...], int]:
    """Count vectors by the ideal their support generates (center 0)."""
    pomset = space.pomset
    census: dict[tuple[int, ...], int] = {}
    for profile, mult in profile_census(space, cap).items():
        key = pomset.generated_counts(profile)
        census[key] = census.get(key, 0) + mult
    return census


def i_sphere_size_enumerated(space: BlockSpace, ideal: Ideal,
                             cap: int = DEFAULT_CAP) -> int:
    """Oracle for :func:`i_sphere_size`; rescans the space each call."""
    return support_census(space, cap).get(ideal.counts.counts, 0)


def i_ball_size_enumerated(space: BlockSpace, ideal: Ideal,
                           cap: int = DEFAULT_CAP) -> int:
    """Oracle for :func:`i_ball_size`; rescans the space each call."""
    want = ideal.counts.counts
    return sum(
        mult for profile, mult in profile_census(space, cap).items()
        if all(p <= w for p, w in zip(profile, want))
    )


# ----- full-count ball structure ----------------------------------------------


@dataclass(frozen=True)
class FullCountBallReport:
    """Structure verification for the ball of a full-count ideal.

    ``closure_mode`` is "exhaustive" when every member pair was added,
    "whole-space" when the ball is the entire space (closed trivially),
    and "sampled" when scalar multiples were scanned in full but pair
    sums only on a seeded sample.
    """

    ball_size: int
    expected_ball_size: int
    is_submodule: bool
    closure_mode: str
    coordinate_form: bool
    coset_count: int
    expected_coset_count: int
    translates_ok: bool
    identical_or_disjoint_ok: bool
    perp_equals_dual_ball: bool

    @property
    def ok(self) -> bool:
        return (
            self.ball_size == self.expected_ball_size
            and self.is_submodule
            and self.coordinate_form
            and self.coset_count == self.expected_coset_count
            and self.translates_ok
            and self.identical_or_disjoint_ok
            and self.perp_equals_dual_ball
        )


def _dot(a, b, m: int) -> int:
    return sum(x * y for x, y in zip(a, b)) % m


def full_count_structure(space: BlockSpace, ideal: Ideal,
                         cap: int = DEFAULT_CAP,
                         pair_limit: int = PAIR_SCAN_LIMIT,
                         seed: int = 0) -> FullCountBallReport:
    """Verify, by enumeration, the submodule structure of a full-count ball:

    * the ball is closed under addition and scalar multiples;
    * its size is m raised to the total length of the root blocks;
    * it is exactly the set of vectors vanishing off the root blocks;
    * its translates are the balls at every center, pairwise identical or
      disjoint, and they partition the space into m^(N - root length) classes;
    * its dot-product perp equals the complement ideal's ball in the dual
      space.
    """
    if not ideal.is_full_count():
        raise NotFullCount(f"{ideal!r} has a partial count")
    m, N = space.m, space.N
    zero = space.zero()
    members = [v.coords for v in i_ball(zero, ideal, cap)]
    member_set = set(members)
    size = len(members)
    root_len = sum(space.pi[i - 1] for i in ideal.root_set)
    expected_size = m**root_len

    # closure under addition; scalars follow over Z_m but are scanned anyway
    closed = True
    if size == space.size():
        mode = "whole-space"
    elif size * size <= pair_limit:
        mode = "exhaustive"
        for a in members:
            for b in members:
                if tuple((x + y) % m for x, y in zip(a, b)) not in member_set:
                    closed = False
                    break
            if not closed:
                break
    else:
        mode = "sampled"
        rng = random.Random(seed)
        for _ in range(200_000):
            a = members[rng.randrange(size)]
            b = members[rng.randrange(size)]
            if tuple((x + y) % m for x, y in zip(a, b)) not in member_set:
                closed = False
                break
    if closed and mode != "whole-space":
        for a in members:
            for c in range(m):
                if tuple(c * x % m for x in a) not in member_set:
                    closed = False
                    break
            if not closed:
                break

    # extensional identity with the coordinate set supported on root blocks
    inside = [idx for i in ideal.root_set
              for idx in range(*space.block_bounds(i))]
    outside = [idx for idx in range(N) if idx not in set(inside)]
    coordinate_form = size == expected_size and all(
        all(v[idx] == 0 for idx in outside) for v in members
    )

    # distinct translates, keyed off the free coordinates (valid once the
    # coordinate form holds); the partition count is exactly the key count
    projections = set()
    for coords in space.coord_tuples(cap):
        projections.add(tuple(coords[idx] for idx in outside))
    coset_count = len(projections)
    expected_cosets = m ** (N - root_len)

    # translate property and identical-or-disjoint, at seeded sample centers
    rng = random.Random(seed + 1)
    centers = [zero] + [
        space.vector(tuple(rng.randrange(m) for _ in range(N))) for _ in range(3)
    ]
    direct = [member_set] + [
        {v.coords for v in i_ball(u, ideal, cap)} for u in centers[1:]
    ]
    translates_ok = all(
        direct[idx]
        == {tuple((x + y) % m for x, y in zip(centers[idx].coords, b))
            for b in members}
        for idx in range(len(centers))
    )
    ident_ok = all(
        direct[a] == direct[b] or not (direct[a] & direct[b])
        for a in range(len(centers))
        for b in range(a + 1, len(centers))
    )

    # perp by brute-force dot-product scan, against the dual-space ball
    perp = set()
    for coords in space.coord_tuples(cap):
        if all(_dot(coords, y, m) == 0 for y in members):
            perp.add(coords)
    dual_space = space.dual()
    dual_ball = {
        v.coords for v in i_ball(dual_space.zero(), ideal.complement(), cap)
    }
    return FullCountBallReport(
        ball_size=size,
        expected_ball_size=expected_size,
        is_submodule=closed,
        closure_mode=mode,
        coordinate_form=coordinate_form,
        coset_count=coset_count,
        expected_coset_count=expected_cosets,
        translates_ok=translates_ok,
        identical_or_disjoint_ok=ident_ok,
        perp_equals_dual_ball=perp == dual_ball,
    )


def nonlinearity_witness(space: BlockSpace, ideal: Ideal) -> tuple[BlockVector, BlockVector]:
    """A pair u, v in the ball of a partial-count ideal with u + v outside.

    Put the partial count c and the residue 1 on the same coordinate of a
    partial block: Lee(c + 1) = c + 1 > c because c + 1 <= floor(m/2).
    The pair is verified before being returned.
    """
    partial = ideal.partial_indices()
    if not partial:
        raise ValueError("ideal has full count; its ball is closed under addition")
    i = partial[0]
    c = ideal.count(i)
    lo, _ = space.block_bounds(i)
    coords = [0] * space.N
    coords[lo] = c
    u = space.vector(tuple(coords))
    coords[lo] = 1
    v = space.vector(tuple(coords))
    zero = space.zero()
    assert in_i_ball(zero, u, ideal) and in_i_ball(zero, v, ideal)
    assert not in_i_ball(zero, u + v, ideal)
    return u, v
