"""Shared test machinery: the verification grid, cached oracles, builders."""

from __future__ import annotations

import time
from functools import lru_cache
from itertools import product

import pomsetblock as pb

# A five-element order with two incomparable chains: 1<3, 2<4, 2<5.
SAMPLE_PAIRS = ((1, 3), (2, 4), (2, 5))

# The verification grid: modulus, block lengths, order family. Orders are
# "antichain", "chain", and "sample" (SAMPLE_PAIRS restricted to the first
# n elements, which differs from the antichain only for n >= 3). One
# deliberately heavy config (7, (2,2,2), chain) exercises the budgets.
GRID = [
    (4, (1,), "antichain"),
    (4, (3,), "antichain"),
    (4, (1, 2), "chain"),
    (4, (1, 2), "antichain"),
    (4, (1, 1, 1), "chain"),
    (4, (1, 1, 1), "antichain"),
    (4, (1, 1, 1), "sample"),
    (4, (2, 2, 2), "chain"),
    (4, (2, 2, 2), "antichain"),
    (4, (2, 2, 2), "sample"),
    (5, (2,), "antichain"),
    (5, (1, 1), "chain"),
    (5, (1, 1), "antichain"),
    (5, (1, 2), "chain"),
    (5, (1, 2), "antichain"),
    (5, (1, 2, 3), "chain"),
    (5, (1, 2, 3), "antichain"),
    (5, (1, 2, 3), "sample"),
    (6, (4,), "antichain"),
    (6, (2, 2), "chain"),
    (6, (2, 2), "antichain"),
    (6, (1, 1, 2), "chain"),
    (6, (1, 1, 2), "antichain"),
    (6, (1, 1, 2), "sample"),
    (7, (2,), "antichain"),
    (7, (1, 1), "chain"),
    (7, (1, 1), "antichain"),
    (7, (1, 1, 1), "chain"),
    (7, (1, 1, 1), "antichain"),
    (7, (1, 1, 1), "sample"),
    (7, (2, 2, 2), "chain"),
]

UNIT_GRID = [cfg for cfg in GRID if set(cfg[1]) == {1}]
CHAIN_GRID = [cfg for cfg in GRID if cfg[2] == "chain"]


def order_pairs(order: str, n: int):
    if order == "antichain":
        return ()
    if order == "chain":
        return tuple((i, i + 1) for i in range(1, n))
    if order == "sample":
        return tuple((i, j) for i, j in SAMPLE_PAIRS if i <= n and j <= n)
    raise ValueError(order)


@lru_cache(maxsize=None)
def grid_space(m: int, pi: tuple[int, ...], order: str) -> pb.BlockSpace:
    return pb.space_with_order(m, pi, order_pairs(order, len(pi)))


@lru_cache(maxsize=None)
def cached_support_census(m: int, pi: tuple[int, ...], order: str):
    return pb.support_census(grid_space(m, pi, order))


@lru_cache(maxsize=None)
def weight_array(m: int, pi: tuple[int, ...], order: str) -> tuple[int, ...]:
    """Block-metric weight of every vector, in odometer order."""
    space = grid_space(m, pi, order)
    pomset = space.pomset
    tables = []
    for k in space.pi:
        tables.append([
            max(pb.lee_weight(x, m) for x in block)
            for block in product(range(m), repeat=k)
        ])
    return tuple(
        sum(pomset.generated_counts(profile))
        for profile in product(*tables)
    )


def coords_to_index(coords, m: int) -> int:
    idx = 0
    for c in coords:
        idx = idx * m + c
    return idx


def five_pomset(height: int = 3) -> pb.Pomset:
    """The five-element order 1<3, 2<4, 2<5 at the given height."""
    return pb.Pomset(5, height, SAMPLE_PAIRS)


def wide_space() -> pb.BlockSpace:
    """Z_7^18 with blocks (2,3,4,4,3,2) ordered by 1<2<4, 5<6."""
    return pb.space_with_order(
        7, (2, 3, 4, 4, 3, 2), [(1, 2), (2, 4), (1, 4), (5, 6)]
    )


def brute_force_ideal_vectors(pomset: pb.Pomset) -> list[tuple[int, ...]]:
    """Oracle: filter every count vector by the down-closure law directly."""
    h, n = pomset.height, pomset.n
    out = []
    for counts in product(range(h + 1), repeat=n):
        ok = True
        for i in range(1, n + 1):
            if counts[i - 1] > 0:
                if any(counts[j - 1] != h for j in pomset.strictly_below(i)):
                    ok = False
                    break
        if ok:
            out.append(counts)
    return out


def random_vector(space: pb.BlockSpace, rng) -> pb.BlockVector:
    return space.vector(tuple(rng.randrange(space.m) for _ in range(space.N)))


def random_code(space: pb.BlockSpace, rng, max_size: int = 8) -> pb.Code:
    size = rng.randrange(2, max_size + 1)
    words = set()
    while len(words) < min(size, space.size()):
        words.add(tuple(rng.randrange(space.m) for _ in range(space.N)))
    return pb.Code(space, words)


def acceptance_report(name: str, budget_s: float, started: float, failures: list):
    elapsed = time.perf_counter() - started
    status = "PASS" if not failures else "FAIL"
    print(f"[acceptance] {name}: {status} ({elapsed:.1f}s of {budget_s}s budget)")
    assert not failures, f"{name}: first failures: {failures[:5]}"
    assert elapsed < budget_s, f"{name} took {elapsed:.1f}s, over {budget_s}s"
