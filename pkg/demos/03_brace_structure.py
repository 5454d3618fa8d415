#!/usr/bin/env python3
"""
Walkthrough: the left-brace structure on the group of a solution.

The group generated by the rows carries a second, abelian operation pinned
down by the recurrence a + sigma_y = a o sigma_{a^{-1}(y)}. The lambda maps
lambda_a(b) = a*b - a then encode how far multiplication is from addition:
the brace is trivial exactly when they coincide.
"""
from ybekit import (
    Solution,
    associated_solution,
    brace_from_solution,
    decomp_check,
    is_trivial_brace,
    permutational_isomorphism_check,
    socle,
    sylow_decomposition,
    validate,
)

# Constant-row solutions give trivial braces: addition equals multiplication.
cyclic = Solution.permutation_solution((1, 2, 0))
b = brace_from_solution(cyclic)
print("cyclic solution brace: order", b.order, "trivial?", is_trivial_brace(b))

# A size-5 solution whose group is nonabelian of order 6: the smallest
# nontrivial brace in the catalog, with two Sylow parts.
mixed = Solution.from_rows(
    [[0, 1, 2, 3, 4], [0, 1, 2, 3, 4], [0, 1, 2, 3, 4], [0, 2, 1, 4, 3], [1, 0, 2, 4, 3]]
)
assert validate(mixed).passed
b6 = brace_from_solution(mixed)
print("\nmixed solution brace: order", b6.order, "trivial?", is_trivial_brace(b6))
print("socle (elements acting additively):", socle(b6))
d = sylow_decomposition(b6)
print("Sylow primes:", d.primes, "parts:", d.parts)
print("cross-part factorization agrees with lambda:", decomp_check(b6, d))

# Every brace induces a solution on its own elements via the lambda rows.
assoc = associated_solution(b6)
print("\nassociated solution size:", assoc.n, "valid?", validate(assoc).passed)

# For irretractable solutions, mapping each point to its row embeds the
# solution in the brace-associated one, and the lambda map is a
# permutational isomorphism between the two group actions.
rigid = Solution.from_rows([[0, 1, 3, 2], [2, 3, 1, 0], [3, 2, 0, 1], [1, 0, 2, 3]])
b8 = brace_from_solution(rigid)
print("\nrigid solution brace: order", b8.order, "socle:", socle(b8))
print("permutational isomorphism check:", permutational_isomorphism_check(rigid))

# Brace tables export as plain JSON.
print("\nexported keys:", sorted(b6.to_json(include_lambda=True)))
