"""Code theory over chain orders: packing radius, Singleton bound, MDS,
the perfect-code bridge, duality, and repetition codes.

On a chain there is exactly one ideal of each cardinality (a filled prefix
plus a partial top count), which is what makes the closed forms below
possible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .block_space import DEFAULT_CAP, BlockSpace, chain_space
from .codes import Code, dual_code, verify_perfect
from .errors import (
    BadCardinality,
    NotAChain,
    NotLinear,
    NonUniformBlocks,
)
from .multiset import Multiset
from .pomset import Ideal, Pomset


def chain_elements(pomset: Pomset) -> tuple[int, ...]:
    """The blocks in ascending chain order; rejects non-chains."""
    if not pomset.is_chain():
        raise NotAChain("operation defined only for totally ordered blocks")
    return pomset.linear_extension()


def chain_prefix_ideal(pomset: Pomset, card: int) -> Ideal:
    """The unique chain ideal of the given cardinality: full counts on a
    bottom prefix, the remainder on the next element."""
    order = chain_elements(pomset)
    h = pomset.height
    if not 0 <= card <= pomset.n * h:
        raise ValueError(f"cardinality {card} outside 0..{pomset.n * h}")
    counts = [0] * pomset.n
    full, rest = divmod(card, h)
    for i in order[:full]:
        counts[i - 1] = h
    if rest:
        counts[order[full] - 1] = rest
    return Ideal(pomset, Multiset(pomset.n, h, tuple(counts)))


def _ceil_log(m: int, size: int) -> int:
    q = 0
    while m**q < size:
        q += 1
    return q


def packing_radius(code: Code, cap: int = DEFAULT_CAP) -> int:
    """Greatest r whose r-balls at distinct codewords are pairwise disjoint.

    Brute force over the whole space: some vector lies in two r-balls
    exactly when its two nearest codewords both sit within r, so the
    radius is one less than the smallest second-nearest distance. Works
    for any order, not just chains. A one-word code packs the whole space.
    """
    space = code.space
    top = space.n * space.max_lee
    if len(code) < 2:
        return top
    best = top + 1
    for v in space.vectors(cap):
        d1, d2 = None, None
        for c in code:
            d = (v - c).weight()
            if d1 is None or d < d1:
                d1, d2 = d, d1
            elif d2 is None or d < d2:
                d2 = d
        if d2 < best:
            best = d2
    return best - 1


def packing_radius_chain(code: Code) -> int:
    """Closed form on chains: floor(m/2) times (poset minimum distance - 1)."""
    chain_elements(code.space.pomset)
    if len(code) < 2:
        return code.space.n * code.space.max_lee
    return code.space.max_lee * (code.min_distance("poset") - 1)


@dataclass(frozen=True)
class SingletonReport:
    """The chain Singleton-style bound for the block metric.

    ``r`` counts the chain prefix blocks pinned by the minimum distance;
    the bound says their total length ``prefix_len`` is at most
    ``N - ceil(log_m |C|)``; MDS means equality. A one-word code is
    treated as attaining the bound (``d`` is None then).
    """

    d: int | None
    r: int
    prefix_len: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.prefix_len <= self.rhs

    @property
    def is_mds(self) -> bool:
        return self.prefix_len == self.rhs


def singleton_report(code: Code) -> SingletonReport:
    space = code.space
    order = chain_elements(space.pomset)
    q = _ceil_log(space.m, len(code))
    if len(code) == 1:
        d, r = None, space.n
    else:
        d = code.min_distance("pomset")
        r = (d - 1) // space.max_lee
    prefix_len = sum(space.pi[i - 1] for i in order[:r])
    return SingletonReport(d=d, r=r, prefix_len=prefix_len, rhs=space.N - q)


def is_mds(code: Code) -> bool:
    return singleton_report(code).is_mds


def poset_singleton_report(code: Code) -> SingletonReport:
    """The analogous bound for the poset block metric on a chain."""
    space = code.space
    order = chain_elements(space.pomset)
    q = _ceil_log(space.m, len(code))
    if len(code) == 1:
        d, r = None, space.n
    else:
        d = code.min_distance("poset")
        r = d - 1
    prefix_len = sum(space.pi[i - 1] for i in order[:r])
    return SingletonReport(d=d, r=r, prefix_len=prefix_len, rhs=space.N - q)


@dataclass(frozen=True)
class MetricComparisonReport:
    """Block-metric MDS versus poset-metric MDS, plus the floor inequality
    floor((d_pomset - 1) / floor(m/2)) <= d_poset - 1 that links them."""

    pomset_mds: bool
    poset_mds: bool
    floor_inequality: bool

    @property
    def implication_holds(self) -> bool:
        return (not self.pomset_mds) or self.poset_mds


def mds_metric_comparison(code: Code) -> MetricComparisonReport:
    h = code.space.max_lee
    if len(code) == 1:
        floor_ok = True
    else:
        d_pm = code.min_distance("pomset")
        d_p = code.min_distance("poset")
        floor_ok = (d_pm - 1) // h <= d_p - 1
    return MetricComparisonReport(
        pomset_mds=singleton_report(code).is_mds,
        poset_mds=poset_singleton_report(code).is_mds,
        floor_inequality=floor_ok,
    )


def _uniform_block_length(space: BlockSpace) -> int:
    k = space.pi[0]
    if any(ki != k for ki in space.pi):
        raise NonUniformBlocks("all blocks must share one length")
    return k


@dataclass(frozen=True)
class PerfectMdsBridge:
    """MDS versus perfectness at the matched full-count chain ideal.

    Both properties are evaluated independently, so either implication
    can be seen to fail rather than assumed.
    """

    ideal: Ideal
    mds: bool
    i_perfect: bool

    @property
    def mds_implies_perfect(self) -> bool:
        return (not self.mds) or self.i_perfect

    @property
    def perfect_implies_mds(self) -> bool:
        return (not self.i_perfect) or self.mds


def mds_iperfect_bridge(code: Code, cap: int = DEFAULT_CAP) -> PerfectMdsBridge:
    """Evaluate the bridge for a uniform-block chain code whose size is an
    exact power of m with exponent divisible by the block length."""
    space = code.space
    chain_elements(space.pomset)
    k = _uniform_block_length(space)
    q = _ceil_log(space.m, len(code))
    if space.m**q != len(code):
        raise BadCardinality(f"|C| = {len(code)} is not a power of {space.m}")
    if q % k:
        raise BadCardinality(f"exponent {q} is not a multiple of the block length {k}")
    target = chain_prefix_ideal(space.pomset, space.max_lee * (space.n - q // k))
    return PerfectMdsBridge(
        ideal=target,
        mds=singleton_report(code).is_mds,
        i_perfect=verify_perfect(code, ideal=target, cap=cap).is_perfect,
    )


@dataclass(frozen=True)
class DualityReport:
    """The four-way equivalence for uniform-block chain codes of size m^q:
    MDS here, perfect at the matched full-count ideal here, the dual code
    perfect at the complement ideal in the dual space, and the dual code
    MDS there. Each statement is evaluated independently."""

    mds_primal: bool
    perfect_primal: bool
    perfect_dual: bool
    mds_dual: bool

    @property
    def statements(self) -> tuple[bool, bool, bool, bool]:
        return (self.mds_primal, self.perfect_primal,
                self.perfect_dual, self.mds_dual)

    @property
    def all_equal(self) -> bool:
        return len(set(self.statements)) == 1


def duality_equivalence(code: Code, cap: int = DEFAULT_CAP) -> DualityReport:
    space = code.space
    chain_elements(space.pomset)
    k = _uniform_block_length(space)
    if not code.linear:
        raise NotLinear("the duality equivalence is about linear codes")
    q = _ceil_log(space.m, len(code))
    if space.m**q != len(code):
        raise BadCardinality(f"|C| = {len(code)} is not a power of {space.m}")
    if q % k:
        raise BadCardinality(f"exponent {q} is not a multiple of the block length {k}")
    h = space.max_lee
    ideal = chain_prefix_ideal(space.pomset, h * (space.n - q // k))
    dual_space = space.dual()
    dualc = dual_code(code, cap).in_space(dual_space)
    return DualityReport(
        mds_primal=singleton_report(code).is_mds,
        perfect_primal=verify_perfect(code, ideal=ideal, cap=cap).is_perfect,
        perfect_dual=verify_perfect(
            dualc, ideal=ideal.complement(), cap=cap
        ).is_perfect,
        mds_dual=singleton_report(dualc).is_mds,
    )


def unit_repetition_code(space: BlockSpace) -> Code:
    """The span of the all-ones vector of a chain space.

    MDS whenever every block has length one (on wider blocks the bound's
    two sides differ by k - 1).
    """
    chain_elements(space.pomset)
    return Code.from_generators(space, [(1,) * space.N])


def block_repetition_code(m: int, n: int) -> Code:
    """The span of (1 x n, 2 x n, ..., (m-1) x n) in its own unit-block
    chain space of length n(m-1); MDS for every m >= 2, n >= 1."""
    if m < 2 or n < 1:
        raise ValueError("need modulus >= 2 and n >= 1")
    space = chain_space(m, (1,) * (n * (m - 1)))
    gen = tuple(j for j in range(1, m) for _ in range(n))
    return Code.from_generators(space, [gen])


def repetition_codes(space: BlockSpace) -> tuple[Code, Code]:
    """The unit repetition code of ``space`` and the block repetition code
    built from its modulus and block count."""
    return unit_repetition_code(space), block_repetition_code(space.m, space.n)
