"""
Finite permutation groups materialized as full element sets.

Groups here are small (they arise from sigma tables on <= 8 points), so
breadth-first closure over the generators is cheap and makes every later
query a set computation: orbits, minimal block systems, primitivity,
stabilizers, derived series. A configurable order cap turns runaway
closures into explicit errors instead of silent truncation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from .errors import BudgetExceededError
from .perms import Perm, compose, identity, inverse

DEFAULT_ORDER_CAP = 10**6


@dataclass(frozen=True)
class BlockSystem:
    """A partition of the domain into equal-size blocks preserved by a group."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"point {x} not covered")


class PermGroup:
    """A permutation group with its element set fully expanded."""

    def __init__(self, degree: int, generators: tuple[Perm, ...], elements: tuple[Perm, ...]):
        self.degree = degree
        self.generators = generators
        self.elements = elements
        self._eset = frozenset(elements)

    # -- construction -------------------------------------------------------

    @classmethod
    def closure(
        cls,
        generators: list[Perm] | tuple[Perm, ...],
        degree: int | None = None,
        cap: int = DEFAULT_ORDER_CAP,
    ) -> "PermGroup":
        """
        Expand the subgroup generated by the given permutations.

        Raises BudgetExceededError if the element count passes `cap`; an
        explicit degree is required when there are no generators.
        """
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generating set")
            degree = len(gens[0])
        for g in gens:
            if len(g) != degree:
                raise ValueError("generators must share one degree")

        e = identity(degree)
        seen: set[Perm] = {e}
        frontier = [e]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[x] for x in p)  # g o p
                    if q not in seen:
                        if len(seen) >= cap:
                            raise BudgetExceededError(
                                f"group closure exceeded order cap {cap}"
                            )
                        seen.add(q)
                        nxt.append(q)
            frontier = nxt
        elements = tuple(sorted(seen))
        dedup_gens = tuple(sorted(set(gens)))
        return cls(degree, dedup_gens, elements)

    # -- basic protocol ------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Perm) -> bool:
        return p in self._eset

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PermGroup) and self._eset == other._eset

    def __hash__(self) -> int:
        return hash((self.degree, self._eset))

    # -- orbits and transitivity ----------------------------------------------

    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbit partition of the domain, each orbit sorted, ordered by minimum."""
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            orbit = {start}
            stack = [start]
            seen[start] = True
            while stack:
                x = stack.pop()
                for g in self.generators:
                    y = g[x]
                    if y not in orbit:
                        orbit.add(y)
                        seen[y] = True
                        stack.append(y)
            out.append(tuple(sorted(orbit)))
        return tuple(out)

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def orbit(self, x: int) -> tuple[int, ...]:
        for o in self.orbits():
            if x in o:
                return o
        raise ValueError(f"point {x} out of range")

    # -- blocks and primitivity -------------------------------------------------

    def minimal_block_containing(self, a: int, b: int) -> BlockSystem:
        """
        Finest block system whose block through `a` also contains `b`.

        Union-find closure: seed a~b, then repeatedly merge the images of
        merged pairs under every generator until stable. Requires a
        transitive group and a != b.
        """
        if not self.is_transitive():
            raise ValueError("block systems are defined for transitive groups only")
        if a == b:
            raise ValueError("need two distinct points")
        n = self.degree
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        stack = [(a, b)]
        while stack:
            u, v = stack.pop()
            ru, rv = find(u), find(v)
            if ru == rv:
                continue
            parent[ru] = rv
            for g in self.generators:
                stack.append((g[u], g[v]))

        classes: dict[int, list[int]] = {}
        for x in range(n):
            classes.setdefault(find(x), []).append(x)
        blocks = tuple(sorted(tuple(sorted(c)) for c in classes.values()))

        sizes = {len(blk) for blk in blocks}
        if len(sizes) != 1 or n % len(blocks[0]) != 0:
            raise AssertionError("block closure produced unequal blocks")
        block_index = {}
        for i, blk in enumerate(blocks):
            for x in blk:
                block_index[x] = i
        for g in self.elements:
            for blk in blocks:
                images = {block_index[g[x]] for x in blk}
                if len(images) != 1:
                    raise AssertionError("computed blocks are not preserved by the group")
        return BlockSystem(blocks)

    def is_primitive(self) -> bool:
        """
        True iff the group is transitive and admits no nontrivial block system.

        Degree 1 counts as primitive. For transitive groups it suffices to
        test minimal blocks through pairs (0, b): any nontrivial system has a
        block containing 0 and some other point.
        """
        if self.degree == 1:
            return True
        if not self.is_transitive():
            return False
        for b in range(1, self.degree):
            system = self.minimal_block_containing(0, b)
            if system.block_count != 1:
                return False
        return True

    # -- stabilizers -----------------------------------------------------------

    def stabilizer(self, x: int) -> "PermGroup":
        """Point stabilizer as a full subgroup; checks |G| = |orbit| * |stab|."""
        if not 0 <= x < self.degree:
            raise ValueError(f"point {x} out of range")
        fixed = tuple(p for p in self.elements if p[x] == x)
        sub = PermGroup(self.degree, fixed, fixed)
        if len(self.orbit(x)) * len(fixed) != self.order:
            raise AssertionError("orbit-stabilizer count mismatch")
        return sub

    # -- solvability -------------------------------------------------------------

    def derived_subgroup(self) -> "PermGroup":
        """Subgroup generated by all commutators of element pairs."""
        if all(
            compose(g, h) == compose(h, g)
            for g, h in itertools.combinations_with_replacement(self.generators, 2)
        ):
            e = identity(self.degree)
            return PermGroup(self.degree, (), (e,))
        comms = {
            compose(compose(g, h), inverse(compose(h, g)))
            for g in self.elements
            for h in self.elements
        }
        return PermGroup.closure(sorted(comms), degree=self.degree, cap=self.order + 1)

    def derived_series(self) -> list["PermGroup"]:
        series = [self]
        current = self
        while current.order > 1:
            nxt = current.derived_subgroup()
            if nxt.order == current.order:
                break
            series.append(nxt)
            current = nxt
        return series

    def is_solvable(self) -> bool:
        """True iff the derived series reaches the trivial group."""
        return self.derived_series()[-1].order == 1

    # -- sanity -------------------------------------------------------------------

    def check_lagrange(self) -> bool:
        return math.factorial(self.degree) % self.order == 0
