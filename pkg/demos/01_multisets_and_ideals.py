"""Multisets with a height cap, orders on their ground set, and ideals.

Walks the basic algebra on a five-element ground set of height 3 with the
order 1<3, 2<4, 2<5: clipped sums, floored differences, ideal generation,
maximal elements, and what happens under the dual (reversed) order.
"""

from pomsetblock import Ideal, Multiset, Pomset

p = Pomset(5, 3, [(1, 3), (2, 4), (2, 5)])
print("order, as cover pairs:", p.cover_pairs())
print("maximal elements of the order:", p.maximal_indices())

ms = lambda text: Multiset.parse(text, 5, 3)

a, b = ms("2/1"), ms("3/1 1/3")
print("\nclipped algebra at height 3")
print(f"  {a.literal()} + {b.literal()} -> {a.mset_sum(b).literal()}")
print(f"  {a.literal()} - {b.literal()} -> {a.mset_diff(b).literal()}")
c, d = ms("3/1 1/3"), ms("3/1 3/2 2/3 2/4")
print(f"  union        -> {c.union(d).literal()}")
print(f"  intersection -> {c.intersection(d).literal()}")

# an ideal fills everything strictly below a positive count up to the height
gen = p.ideal_generated(ms("2/3"))
print("\nideal generated by 2/3:", gen.counts.literal())
print("its maximal elements:", gen.maximal_elements().literal())
print("is 2/1 1/3 an ideal?", p.is_ideal(ms("2/1 1/3")), "(3 needs 1 filled)")

print("\nideals of cardinality 3:")
for ideal in p.ideals_of_cardinality(3):
    tag = "full count" if ideal.is_full_count() else "partial count"
    print(f"  {ideal.counts.literal():12s} ({tag})")

# shrinking: a canonical sub-ideal of every intermediate size
big = Ideal(p, ms("3/1 3/2 2/3 2/4"))
print("\nshrinking", big.counts.literal())
for s in (7, 4, 2):
    print(f"  to {s}: {big.shrink(s).counts.literal()}")

# complements of ideals are exactly the ideals of the dual order
dual = p.dual()
print("\ndual order minimal elements:", dual.minimal_indices())
comp = Ideal(p, ms("3/1")).complement()
print("complement of 3/1 lives in the dual:", comp.counts.literal())
print("ideal count here vs dual:", len(p.ideals()), "vs", len(dual.ideals()))
