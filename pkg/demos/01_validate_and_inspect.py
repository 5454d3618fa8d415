#!/usr/bin/env python3
"""
Walkthrough: building candidate tables and checking the solution axioms.

A candidate on {0, ..., n-1} is just the table of its row permutations
sigma_x; the right components gamma_y are always derived from the rows, so
validity is a property of the table alone.
"""
from ybekit import (
    Solution,
    gamma,
    is_indecomposable,
    multipermutation_level,
    retract,
    validate,
)

# The trivial solution swaps coordinates: r(x, y) = (y, x).
trivial = Solution.trivial(3)
print("trivial table:", trivial.sigma)
print("validate:", validate(trivial).to_json())

# Constant-row tables ("permutation solutions") are valid for every row.
cyclic = Solution.permutation_solution((1, 2, 0))
print("\ncyclic table:", cyclic.sigma)
print("validate:", validate(cyclic).to_json())
print("gamma_0(1) =", gamma(cyclic, 0, 1), "(the inverse cycle applied to 1)")

# Not every table is a solution: making row 1 a transposition next to an
# identity row breaks non-degeneracy and the braid relation.
broken = Solution.from_rows([[0, 1], [1, 0]])
print("\nbroken table:", broken.sigma)
print("validate:", validate(broken).to_json())

# A genuinely non-retractable example found by exhaustive search: all four
# rows differ, so the retraction quotient cannot shrink it.
rigid = Solution.from_rows([[0, 1, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1], [1, 0, 2, 3]])
print("\nrigid table:", rigid.sigma)
print("validate passes:", validate(rigid).passed)
print("indecomposable:", is_indecomposable(rigid))
print("retract size:", retract(rigid).n, "(unchanged)")
print("multipermutation level:", multipermutation_level(rigid), "(None: never collapses)")

# Retractable towers collapse step by step down to a single point.
tower = Solution.from_rows([[1, 0, 2], [1, 0, 2], [0, 1, 2]])
print("\ntower table:", tower.sigma)
print("retract:", retract(tower).sigma)
print("multipermutation level:", multipermutation_level(tower))
