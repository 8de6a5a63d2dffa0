"""Complete weight distributions, three ways.

Shell r counts the vectors of weight exactly r. The closed form sums, over
the ideals of cardinality r, the per-block shell counts of the maximal
elements times full freedom on the rest; the oracle scans the space; on
chains a one-term product does the whole job.
"""

from pomsetblock import (
    antichain_space,
    block_shell_size,
    chain_shell_size,
    chain_space,
    space_with_order,
    weight_distribution,
    weight_distribution_enumerated,
)

print("per-block shells in Z_6^2 (max Lee weight r):")
for r in range(4):
    print(f"  r={r}: {block_shell_size(6, 2, r)}")
print("  total:", sum(block_shell_size(6, 2, r) for r in range(4)), "= 6^2")

configs = [
    ("chain 1<2, blocks (1,1), m=5", chain_space(5, (1, 1))),
    ("antichain, blocks (2,1), m=6", antichain_space(6, (2, 1))),
    ("1<3 on three unit blocks, m=7", space_with_order(7, (1, 1, 1), [(1, 3)])),
]
for label, space in configs:
    formula = weight_distribution(space).shells
    oracle = weight_distribution_enumerated(space).shells
    print(f"\n{label}")
    print("  closed form:", formula)
    print("  full scan:  ", oracle)
    print("  sum:", sum(formula), "= m^N =", space.size())

space = chain_space(5, (1, 2))
print("\nchain closed form on blocks (1,2), m=5:")
print("  ", [chain_shell_size(space, r) for r in range(space.n * space.max_lee + 1)])
print("  vs", list(weight_distribution(space).shells))
