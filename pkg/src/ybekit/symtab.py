"""
Cached per-degree tables over the full symmetric group Sym(n), n <= 8.

These back the relabeling machinery: canonical forms of sigma tables, the
minimal-conjugate bound used for symmetry breaking during enumeration, and
index-based composition for the search core. Tables are built once per
degree and shared (they are read-only after construction, so forked worker
processes inherit them copy-on-write).
"""
from __future__ import annotations

import itertools
import math
from array import array
from typing import Iterator

import numpy as np

from .errors import BudgetExceededError
from .perms import Perm, cycles

MAX_DEGREE = 8

_CACHE: dict[int, "SymTables"] = {}


def conjugate(f: Perm, p: Perm) -> Perm:
    """f p f^{-1} in image-list form: the relabeling of p along f."""
    out = [0] * len(p)
    for i, pi in enumerate(p):
        out[f[i]] = f[pi]
    return tuple(out)


class SymTables:
    """Lex-ordered list of all degree-n permutations plus derived lookup tables."""

    def __init__(self, n: int):
        if not 1 <= n <= MAX_DEGREE:
            raise BudgetExceededError(
                f"symmetric-group tables supported for degree 1..{MAX_DEGREE}, got {n}"
            )
        self.n = n
        perms = list(itertools.permutations(range(n)))  # lex order
        self.m = len(perms)
        self.perms: list[Perm] = perms
        self.pidx: dict[Perm, int] = {p: i for i, p in enumerate(perms)}
        self.np_perms = np.array(perms, dtype=np.int16)

        inv = np.empty_like(self.np_perms)
        rng = np.arange(n)
        for i, p in enumerate(perms):
            inv[i, list(p)] = rng
        self.np_inv = inv
        self.iperms: list[Perm] = [tuple(int(v) for v in row) for row in inv]
        self.invi = array("i", (self.pidx[q] for q in self.iperms))

        # Per-perm cycle data: type (descending lengths) and, per anchor
        # point, the length of the cycle through it.
        types: list[tuple[int, ...]] = []
        anchor_len: list[list[int]] = []
        lexmin_by_type_anchor: dict[tuple[tuple[int, ...], int], int] = {}
        for i, p in enumerate(perms):
            cyc = cycles(p)
            t = tuple(sorted((len(c) for c in cyc), reverse=True))
            lens = [0] * n
            for c in cyc:
                for x in c:
                    lens[x] = len(c)
            types.append(t)
            anchor_len.append(lens)
            key = (t, lens[0])
            if key not in lexmin_by_type_anchor:
                lexmin_by_type_anchor[key] = i  # first in lex order is the min
        self.types = types

        # mc[c][a]: index of the lex-least conjugate of perms[c] under
        # relabelings sending point a to 0. Equals the lex-least perm with
        # the same cycle type whose 0-cycle has the length of a's cycle.
        self.mc: list[list[int]] = [
            [lexmin_by_type_anchor[(types[c], anchor_len[c][a])] for a in range(n)]
            for c in range(self.m)
        ]
        self.mc_np = np.array(self.mc, dtype=np.int32)

        self._comp: array | None = None  # flat m*m composition index table
        self._radix = np.array([n**k for k in range(n)], dtype=np.int64)

    # -- composition on indices ------------------------------------------

    def ensure_comp(self) -> None:
        """Materialize the m*m composition table (degrees <= 7 only)."""
        if self._comp is not None or self.n > 7:
            return
        m, n = self.m, self.n
        keys = self.np_perms.astype(np.int64) @ self._radix
        key2idx = np.full(n**n, -1, dtype=np.int32)
        key2idx[keys] = np.arange(m, dtype=np.int32)
        comp16 = np.empty((m, m), dtype=np.int16)
        for i in range(m):
            composed = self.np_perms[i][self.np_perms]  # (m, n): perms[i] o perms[j]
            comp16[i] = key2idx[composed.astype(np.int64) @ self._radix]
        flat = array("h")
        flat.frombytes(comp16.tobytes())
        self._comp = flat

    def compose_idx(self, i: int, j: int) -> int:
        """Index of perms[i] o perms[j] (q applied first is perms[j])."""
        if self._comp is not None:
            return self._comp[i * self.m + j]
        p, q = self.perms[i], self.perms[j]
        return self.pidx[tuple(p[x] for x in q)]

    @property
    def comp_flat(self) -> array | None:
        return self._comp

    # -- canonical relabeling ---------------------------------------------

    def min_relabeled(self, table: list[Perm] | tuple[Perm, ...]) -> tuple[Perm, ...]:
        """
        Lexicographically least table over all n! relabelings.

        Relabeling by f sends row x to f o sigma_{f^{-1}(x)} o f^{-1}; tables
        compare row-major.
        """
        m, n = self.m, self.n
        t = np.array(table, dtype=np.int16)
        a = t[self.np_inv]  # a[f,i,j] = table[finv[i]][j]
        b = np.take_along_axis(a, self.np_inv[:, None, :], axis=2)  # ...[finv[j]]
        c = self.np_perms[np.arange(m)[:, None, None], b]  # value relabel by f
        flat = c.reshape(m, n * n)
        best = flat[np.lexsort(flat.T[::-1])[0]]
        return tuple(tuple(int(v) for v in best[i * n : (i + 1) * n]) for i in range(n))

    # -- conjugation aligners ----------------------------------------------

    def aligner_count(self, src: int, tgt: int, x0: int) -> int:
        """Number of relabelings f with f(x0)=0 and f perms[src] f^{-1} == perms[tgt]."""
        if self.types[src] != self.types[tgt]:
            return 0
        src_c = cycles(self.perms[src])
        tgt_c = cycles(self.perms[tgt])
        lx0 = next(len(c) for c in src_c if x0 in c)
        l0 = next(len(c) for c in tgt_c if 0 in c)
        if lx0 != l0:
            return 0
        count = 1
        rest_src: dict[int, int] = {}
        seen_anchor = False
        for c in src_c:
            if not seen_anchor and x0 in c:
                seen_anchor = True
                continue
            rest_src[len(c)] = rest_src.get(len(c), 0) + 1
        for length, mult in rest_src.items():
            count *= math.factorial(mult) * length**mult
        return count

    def aligners(self, src: int, tgt: int, x0: int) -> Iterator[Perm]:
        """
        Yield every relabeling f (full-domain bijection) with f(x0) == 0 and
        f perms[src] f^{-1} == perms[tgt].
        """
        if self.types[src] != self.types[tgt]:
            return
        p, q = self.perms[src], self.perms[tgt]
        src_cyc = cycles(p)
        tgt_cyc = cycles(q)
        anchor_src = next(c for c in src_cyc if x0 in c)
        anchor_tgt = next(c for c in tgt_cyc if 0 in c)
        if len(anchor_src) != len(anchor_tgt):
            return
        rest_src = [c for c in src_cyc if c is not anchor_src]
        rest_tgt = [c for c in tgt_cyc if c is not anchor_tgt]

        base = [-1] * self.n
        # anchor alignment is rigid: x0 -> 0, then follow both cycles
        i = anchor_src.index(x0)
        j = anchor_tgt.index(0)
        for k in range(len(anchor_src)):
            base[anchor_src[(i + k) % len(anchor_src)]] = anchor_tgt[(j + k) % len(anchor_tgt)]

        by_len_src: dict[int, list[tuple[int, ...]]] = {}
        by_len_tgt: dict[int, list[tuple[int, ...]]] = {}
        for c in rest_src:
            by_len_src.setdefault(len(c), []).append(c)
        for c in rest_tgt:
            by_len_tgt.setdefault(len(c), []).append(c)

        lengths = sorted(by_len_src)
        g = [base]
        for length in lengths:
            srcs = by_len_src[length]
            tgts = by_len_tgt[length]
            new_g = []
            for f in g:
                for assignment in itertools.permutations(tgts):
                    for offsets in itertools.product(range(length), repeat=len(srcs)):
                        f2 = list(f)
                        for cs, ct, off in zip(srcs, assignment, offsets):
                            for k in range(length):
                                f2[cs[k]] = ct[(k + off) % length]
                        new_g.append(f2)
            g = new_g
        for f in g:
            yield tuple(f)


def get_tables(n: int) -> SymTables:
    tab = _CACHE.get(n)
    if tab is None:
        tab = SymTables(n)
        _CACHE[n] = tab
    return tab
