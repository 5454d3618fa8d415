"""
Candidate solutions on a finite set, given by their table of row permutations.

A candidate is a set size n plus rows sigma[x] (one permutation per point);
the map r(x, y) = (sigma_x(y), gamma_y(x)) is then fully determined, since
for involutive solutions gamma is forced: gamma_y(x) = sigma_{sigma_x(y)}^{-1}(x).
Only the sigma table is ever stored; gamma is always derived.

`validate` decides the three defining axioms (involutivity, non-degeneracy
of the derived gamma maps, and the braid relation on every triple, checked
by direct evaluation of both sides). Everything downstream -- retraction,
multipermutation level, indecomposability, canonical forms -- assumes a
validated solution.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from . import symtab
from .errors import InvalidSolutionError
from .perms import Perm, cycle_type, is_perm
from .permgroup import PermGroup


@dataclass(frozen=True)
class Solution:
    """A set size n together with the rows sigma[x], each a degree-n permutation."""

    n: int
    sigma: tuple[Perm, ...]

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidSolutionError("set size must be >= 1")
        if len(self.sigma) != self.n:
            raise InvalidSolutionError(
                f"expected {self.n} sigma rows, got {len(self.sigma)}"
            )
        for x, row in enumerate(self.sigma):
            if len(row) != self.n or not is_perm(row):
                raise InvalidSolutionError(
                    f"sigma[{x}] = {list(row)} is not a permutation of 0..{self.n - 1}"
                )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Any) -> "Solution":
        try:
            sigma = tuple(tuple(int(v) for v in row) for row in rows)
        except (TypeError, ValueError) as exc:
            raise InvalidSolutionError(f"malformed sigma table: {exc}") from exc
        return cls(len(sigma), sigma)

    @classmethod
    def trivial(cls, n: int) -> "Solution":
        """The solution with every row the identity: r(x, y) = (y, x)."""
        row = tuple(range(n))
        return cls(n, (row,) * n)

    @classmethod
    def permutation_solution(cls, pi: Perm) -> "Solution":
        """The constant-row solution sigma_x = pi for all x."""
        pi = tuple(pi)
        return cls(len(pi), (pi,) * len(pi))

    @classmethod
    def from_json(cls, data: Any) -> "Solution":
        if not isinstance(data, dict) or "n" not in data or "sigma" not in data:
            raise InvalidSolutionError('expected an object {"n": ..., "sigma": [...]}')
        s = cls.from_rows(data["sigma"])
        if s.n != data["n"]:
            raise InvalidSolutionError(
                f'"n" is {data["n"]} but the sigma table has {s.n} rows'
            )
        return s

    def to_json(self) -> dict:
        return {"n": self.n, "sigma": [list(row) for row in self.sigma]}


def gamma(s: Solution, y: int, x: int) -> int:
    """The derived right component: gamma_y(x) = sigma_{sigma_x(y)}^{-1}(x)."""
    if not 0 <= x < s.n or not 0 <= y < s.n:
        raise ValueError(f"points ({x}, {y}) out of range for size {s.n}")
    u = s.sigma[x][y]
    return s.sigma[u].index(x)


def gamma_table(s: Solution) -> list[tuple[int, ...]]:
    """All gamma values: row y holds (gamma_y(0), ..., gamma_y(n-1)).

    Rows need not be bijections; whether they are is exactly the
    non-degeneracy axiom.
    """
    inv = [None] * s.n
    seen: dict[Perm, list[int]] = {}
    for i, row in enumerate(s.sigma):
        cached = seen.get(row)
        if cached is None:
            cached = [0] * s.n
            for j, v in enumerate(row):
                cached[v] = j
            seen[row] = cached
        inv[i] = cached
    return [
        tuple(inv[s.sigma[x][y]][x] for x in range(s.n)) for y in range(s.n)
    ]


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the three axiom checks; a solution passes iff all three hold."""

    involutive: bool
    nondegenerate: bool
    braid: bool
    braid_counterexample: tuple[int, int, int] | None = None

    @property
    def passed(self) -> bool:
        return self.involutive and self.nondegenerate and self.braid

    def to_json(self) -> dict:
        return {
            "involutive": self.involutive,
            "nondegenerate": self.nondegenerate,
            "braid": self.braid,
            "passed": self.passed,
            "braid_counterexample": (
                list(self.braid_counterexample) if self.braid_counterexample else None
            ),
        }


def validate(s: Solution) -> ValidationReport:
    """
    Decide the axioms by brute force.

    involutive: applying r twice returns every pair to itself.
    nondegenerate: every derived gamma_y is a bijection.
    braid: both sides of the relation on X^3 agree on all n^3 triples,
    evaluated literally (r on coordinates 1,2 / 2,3 three times each).
    """
    n = s.n
    gt = gamma_table(s)
    r = [[(s.sigma[x][y], gt[y][x]) for y in range(n)] for x in range(n)]

    involutive = True
    for x in range(n):
        for y in range(n):
            u, v = r[x][y]
            if r[u][v] != (x, y):
                involutive = False
                break
        if not involutive:
            break

    nondegenerate = all(is_perm(row) for row in gt)

    braid = True
    counterexample = None
    for x in range(n):
        rx = r[x]
        for y in range(n):
            ry = r[y]
            for z in range(n):
                a, b = rx[y]
                c, d = r[b][z]
                e, f = r[a][c]
                g, h = ry[z]
                i, j = r[x][g]
                k, m = r[j][h]
                if (e, f, d) != (i, k, m):
                    braid = False
                    counterexample = (x, y, z)
                    break
            if not braid:
                break
        if not braid:
            break

    return ValidationReport(involutive, nondegenerate, braid, counterexample)


def solution_group(s: Solution) -> PermGroup:
    """The permutation group generated by the rows of the sigma table."""
    return PermGroup.closure(sorted(set(s.sigma)), degree=s.n)


def is_indecomposable(s: Solution) -> bool:
    """True iff the group generated by the sigma rows is transitive."""
    if s.n == 1:
        return True
    return solution_group(s).is_transitive()


def is_irretractable(s: Solution) -> bool:
    """True iff all sigma rows are pairwise distinct."""
    return len(set(s.sigma)) == s.n


@dataclass(frozen=True)
class SigmaClassPartition:
    """Partition of the domain by equality of sigma rows.

    `generator_invariant` records whether every generator of the solution's
    group maps classes onto classes; for a validated solution this always
    holds, so False signals an upstream bug.
    """

    classes: tuple[tuple[int, ...], ...]
    generator_invariant: bool

    @property
    def class_count(self) -> int:
        return len(self.classes)


def sigma_class_blocks(s: Solution) -> SigmaClassPartition:
    """Group points by equal sigma rows and verify generator invariance."""
    by_row: dict[Perm, list[int]] = {}
    for x, row in enumerate(s.sigma):
        by_row.setdefault(row, []).append(x)
    classes = tuple(sorted((tuple(c) for c in by_row.values()), key=lambda c: c[0]))

    class_sets = [frozenset(c) for c in classes]
    invariant = True
    for g in set(s.sigma):
        for c in class_sets:
            if frozenset(g[x] for x in c) not in class_sets:
                invariant = False
    return SigmaClassPartition(classes, invariant)


def retract(s: Solution) -> Solution:
    """
    The quotient solution on sigma-classes.

    Classes are numbered by their least element; the induced table is
    sigma'_{[x]}([y]) = [sigma_x(y)], which is well defined for validated
    input (the group action permutes classes).
    """
    part = sigma_class_blocks(s)
    classes = part.classes
    index = {}
    for i, c in enumerate(classes):
        for x in c:
            index[x] = i
    m = len(classes)
    rows = []
    for c in classes:
        row = [index[s.sigma[c[0]][d[0]]] for d in classes]
        for x in c:
            for j, d in enumerate(classes):
                for y in d:
                    if index[s.sigma[x][y]] != row[j]:
                        raise AssertionError(
                            "sigma-class quotient is not well defined; "
                            "input was not a validated solution"
                        )
        rows.append(tuple(row))
    return Solution(m, tuple(rows))


def multipermutation_level(s: Solution) -> int | None:
    """
    Number of retract steps to reach the one-point solution, or None if the
    iteration stabilizes at size > 1. The one-point solution has level 0.
    """
    level = 0
    cur = s
    while cur.n > 1:
        nxt = retract(cur)
        if nxt.n == cur.n:
            return None
        cur = nxt
        level += 1
    return level


def relabel(s: Solution, f: Perm) -> Solution:
    """Transport the table along the relabeling f: row x becomes f sigma_{f^{-1}(x)} f^{-1}."""
    if len(f) != s.n:
        raise ValueError("relabeling degree mismatch")
    finv = [0] * s.n
    for i, v in enumerate(f):
        finv[v] = i
    rows = []
    for x in range(s.n):
        src = s.sigma[finv[x]]
        rows.append(tuple(f[src[finv[j]]] for j in range(s.n)))
    return Solution(s.n, tuple(rows))


def canonical_form(s: Solution) -> Solution:
    """
    The lexicographically least sigma table over all n! relabelings.

    Two solutions are isomorphic iff their canonical forms are equal; the
    sweep is exhaustive, so this is a true canonical representative.
    """
    tab = symtab.get_tables(s.n)
    return Solution(s.n, tab.min_relabeled(s.sigma))


def iso_invariants(s: Solution) -> tuple:
    """Cheap relabeling-invariants used to short-circuit isomorphism tests."""
    row_types = tuple(sorted(cycle_type(row) for row in s.sigma))
    class_profile = tuple(sorted(len(c) for c in sigma_class_blocks(s).classes))
    return (row_types, class_profile)


def is_isomorphic(a: Solution, b: Solution) -> bool:
    """Equality of canonical forms, behind an invariant pre-filter."""
    if a.n != b.n:
        return False
    if iso_invariants(a) != iso_invariants(b):
        return False
    return canonical_form(a).sigma == canonical_form(b).sigma
