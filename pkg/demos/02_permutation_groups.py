#!/usr/bin/env python3
"""
Walkthrough: the permutation-group engine behind the solution analysis.

Groups are expanded to full element sets (they are tiny at these degrees),
which makes orbits, block systems, primitivity and the derived series
direct set computations.
"""
from ybekit import PermGroup, Solution, solution_group

# Closure from generators; elements are plain image tuples.
c4 = PermGroup.closure([(1, 2, 3, 0)])
print("C4 order:", c4.order)
print("C4 orbits:", c4.orbits())

# Minimal block systems witness imprimitivity: gluing 0 with 2 forces the
# complementary pair, gluing 0 with 1 swallows everything.
print("block system through (0,2):", c4.minimal_block_containing(0, 2).blocks)
print("block system through (0,1):", c4.minimal_block_containing(0, 1).blocks)
print("C4 primitive?", c4.is_primitive())

c5 = PermGroup.closure([(1, 2, 3, 4, 0)])
print("\nC5 primitive?", c5.is_primitive(), "(prime degree, transitive)")

s3 = PermGroup.closure([(1, 0, 2), (1, 2, 0)])
print("\nSym(3) order:", s3.order)
print("stabilizer of 2 has order:", s3.stabilizer(2).order)
print("derived series orders:", [g.order for g in s3.derived_series()])
print("solvable?", s3.is_solvable())

# The classic non-solvable control: the alternating group on 5 points.
alt5 = PermGroup.closure([(1, 2, 0, 3, 4), (0, 1, 3, 4, 2)])
print("\nAlt(5) order:", alt5.order, "solvable?", alt5.is_solvable())

# The group of a solution is generated by its rows.
rigid = Solution.from_rows([[0, 1, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1], [1, 0, 2, 3]])
g = solution_group(rigid)
print("\ngroup of the rigid size-4 solution: order", g.order)
print("transitive?", g.is_transitive(), "primitive?", g.is_primitive())
