"""Perfect codes for full-count and partial-count ideals.

A code is perfect for an ideal when the ideal's balls at the codewords
tile the space. Full-count ideals always admit one (pin the root blocks
to zero); partial counts need a divisibility condition to lay disjoint
translates of a non-subgroup ball.
"""

from pomsetblock import (
    DivisibilityFails,
    antichain_space,
    chain_space,
    construct_perfect_full,
    construct_perfect_partial,
    parse_ideal,
    verify_perfect,
)

space = chain_space(5, (1, 1))
ideal = parse_ideal(space, "2/1")
code = construct_perfect_full(space, ideal)
print("full count, chain 1<2, I = 2/1")
print("  codewords:", [w.literal() for w in code])
cert = verify_perfect(code, ideal=ideal)
print("  disjoint:", cert.disjoint, " covering:", cert.covering)

bad = verify_perfect(code, radius=3)
print("  same code at radius 3 ->", bad.is_perfect,
      "(overlap at", bad.overlap[0].literal() + ")")

print("\npartial count needs (2t+1) | m")
nine = antichain_space(9, (1,))
d = construct_perfect_partial(nine, parse_ideal(nine, "1/1"))
print("  m=9, t=1: centers", [w.literal() for w in d],
      "->", verify_perfect(d, ideal=parse_ideal(nine, "1/1")).is_perfect)

wide = antichain_space(9, (2,))
dd = construct_perfect_partial(wide, parse_ideal(wide, "1/1"))
print("  m=9, one block of length 2: |D| =", len(dd), "covering 81 vectors:",
      verify_perfect(dd, ideal=parse_ideal(wide, "1/1")).is_perfect)

mixed_space = chain_space(9, (1, 1))
mixed = parse_ideal(mixed_space, "4/1 1/2")
dm = construct_perfect_partial(mixed_space, mixed)
print("  mixed full/partial 4/1 1/2 on the chain: centers",
      [w.literal() for w in dm], "->",
      verify_perfect(dm, ideal=mixed).is_perfect)

seven = antichain_space(7, (1,))
try:
    construct_perfect_partial(seven, parse_ideal(seven, "1/1"))
except DivisibilityFails as exc:
    print("  m=7, t=1 is rejected:", exc)
