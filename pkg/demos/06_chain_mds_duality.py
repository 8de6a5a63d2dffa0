"""Chain-order code theory: packing radius, the Singleton bound, duality.

On a chain there is one ideal per cardinality, which buys closed forms:
the packing radius is floor(m/2) * (poset distance - 1), the Singleton
bound compares a pinned prefix against N - ceil(log_m |C|), and MDS,
perfectness, and their duals all travel together.
"""

from pomsetblock import (
    Code,
    block_repetition_code,
    chain_space,
    duality_equivalence,
    is_mds,
    mds_iperfect_bridge,
    packing_radius,
    packing_radius_chain,
    singleton_report,
    unit_repetition_code,
)

space = chain_space(5, (1, 1))
diagonal = Code.from_generators(space, [(1, 1)])
axis = Code.from_generators(space, [(1, 0)])

for name, code in [("diagonal {(a,a)}", diagonal), ("axis {(a,0)}", axis)]:
    rep = singleton_report(code)
    print(f"{name}: d = {rep.d}, prefix {rep.prefix_len} <= {rep.rhs}"
          f" -> MDS: {rep.is_mds}")
    print(f"  packing radius: brute {packing_radius(code)},"
          f" closed form {packing_radius_chain(code)}")

bridge = mds_iperfect_bridge(diagonal)
print("\nMDS <-> perfect at the matched ideal", bridge.ideal.counts.literal(),
      "->", bridge.mds, "and", bridge.i_perfect)

print("\nfour-way duality (MDS here, perfect here, dual perfect, dual MDS):")
for name, code in [("diagonal", diagonal), ("axis", axis)]:
    rep = duality_equivalence(code)
    print(f"  {name}: {rep.statements} all equal: {rep.all_equal}")

print("\nrepetition codes on chains are MDS:")
for n in (2, 3):
    unit = unit_repetition_code(chain_space(5, (1,) * n))
    print(f"  all-ones span in Z_5^{n}: d = {unit.min_distance('pomset')},"
          f" MDS: {is_mds(unit)}")
block = block_repetition_code(4, 2)
print(f"  block repetition in Z_4^{block.space.N}: |C| = {len(block)},"
      f" MDS: {is_mds(block)}")
