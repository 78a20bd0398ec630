"""Canonical forms and exhaustive classification of doubly-even self-dual codes.

Equivalence is column permutation inside each block (S_N1 x S_N2).  The
canonical form is found by individualization-refinement: coordinates are
split into an ordered partition by invariant signatures, non-singleton cells
are individualized one point at a time, and among the discrete leaves the one
whose sorted codeword list is smallest wins.  Automorphisms found on the way
prune sibling branches.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import factorial

from .codes import (
    LinearCode,
    coset_leader,
    doubly_even_cosets,
    is_doubly_even,
    is_self_dual,
)
from .errors import CapExceeded

__all__ = [
    "CodeClass",
    "CanonicalResult",
    "canonical_search",
    "canonical_form",
    "automorphism_group_order",
    "enumerate_sdde",
    "count_sdde",
    "DEFAULT_MAX_LENGTH",
    "DEFAULT_LEAF_CAP",
]

DEFAULT_MAX_LENGTH = 16
DEFAULT_LEAF_CAP = 200_000


@dataclass(frozen=True)
class CanonicalResult:
    code: LinearCode
    perm: tuple[int, ...]  # canonical position p holds original coordinate perm[p]
    key: tuple[int, ...]
    automorphisms: tuple[tuple[int, ...], ...]  # acting on original coordinates
    leaves: int

    def canonical_automorphisms(self) -> list[tuple[int, ...]]:
        """The found automorphisms transported to the canonical code's coordinates."""
        inv = {j: p for p, j in enumerate(self.perm)}
        return [tuple(inv[g[j]] for j in self.perm) for g in self.automorphisms]


@dataclass
class CodeClass:
    representative: LinearCode
    class_size_hint: int | None = None
    automorphisms: list = field(default_factory=list, repr=False)


def _permute_word(w: int, perm, n: int) -> int:
    """Image of ``w`` under the coordinate permutation j -> perm[j]."""
    out = 0
    for j in range(n):
        if w >> (n - 1 - j) & 1:
            out |= 1 << (n - 1 - perm[j])
    return out


class _Search:
    def __init__(self, code: LinearCode, leaf_cap: int):
        self.code = code
        self.n = code.n
        self.words = [w for w in code.codewords() if w]
        self.colbit = [1 << (self.n - 1 - j) for j in range(self.n)]
        self.containing = [
            [i for i, w in enumerate(self.words) if w & b] for b in self.colbit
        ]
        self.leaf_cap = leaf_cap
        self.leaves = 0
        self.first: tuple | None = None
        self.best: tuple | None = None
        self.best_order: list[int] | None = None
        self.first_order: list[int] | None = None
        self.auts: list[tuple[int, ...]] = []

    def refine(self, cells: list[list[int]]) -> list[list[int]]:
        while True:
            masks = [sum(self.colbit[j] for j in cell) for cell in cells]
            profile = [
                tuple(bin(w & m).count("1") for m in masks) for w in self.words
            ]
            out = []
            changed = False
            for cell in cells:
                if len(cell) == 1:
                    out.append(cell)
                    continue
                sig = {}
                for j in cell:
                    cnt = Counter(profile[i] for i in self.containing[j])
                    sig[j] = tuple(sorted(cnt.items()))
                groups: dict = {}
                for j in cell:
                    groups.setdefault(sig[j], []).append(j)
                if len(groups) > 1:
                    changed = True
                    for s in sorted(groups):
                        out.append(groups[s])
                else:
                    out.append(cell)
            cells = out
            if not changed:
                return cells

    def leaf(self, order: list[int]):
        self.leaves += 1
        if self.leaves > self.leaf_cap:
            raise CapExceeded(f"canonical form search exceeded {self.leaf_cap} leaves")
        n = self.n
        inv = [0] * n
        for p, j in enumerate(order):
            inv[j] = p
        key = tuple(sorted(_permute_word(w, inv, n) for w in self.words))
        if self.first is None:
            self.first = self.best = key
            self.first_order = self.best_order = order
            return
        for ref, ref_order in ((self.first, self.first_order), (self.best, self.best_order)):
            if key == ref:
                gamma = [0] * n
                for p in range(n):
                    gamma[order[p]] = ref_order[p]
                gamma = tuple(gamma)
                if gamma not in self.auts and gamma != tuple(range(n)):
                    self.auts.append(gamma)
                return
        if key < self.best:
            self.best = key
            self.best_order = order

    def _orbit_rep(self, x: int, explored: list[int], path: list[int]) -> bool:
        """True if x lies in the orbit of an explored point under auts fixing path."""
        gens = [g for g in self.auts if all(g[p] == p for p in path)]
        if not gens:
            return False
        seen = {x}
        stack = [x]
        targets = set(explored)
        while stack:
            y = stack.pop()
            if y in targets:
                return True
            for g in gens:
                z = g[y]
                if z not in seen:
                    seen.add(z)
                    stack.append(z)
        return False

    def run(self, cells: list[list[int]], path: list[int]):
        cells = self.refine(cells)
        t = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if t is None:
            self.leaf([c[0] for c in cells])
            return
        cell = cells[t]
        explored: list[int] = []
        for x in sorted(cell):
            if explored and self._orbit_rep(x, explored, path):
                continue
            explored.append(x)
            rest = [y for y in cell if y != x]
            self.run(cells[:t] + [[x], rest] + cells[t + 1 :], path + [x])


def canonical_search(C: LinearCode, leaf_cap: int = DEFAULT_LEAF_CAP) -> CanonicalResult:
    n = C.n
    if n == 0:
        return CanonicalResult(C, (), (), (), 1)
    s = _Search(C, leaf_cap)
    cells = [list(range(C.n1)), list(range(C.n1, n))]
    s.run([c for c in cells if c], [])
    order = tuple(s.best_order)
    return CanonicalResult(C.permute(order), order, s.best, tuple(s.auts), s.leaves)


def canonical_form(C: LinearCode, leaf_cap: int = DEFAULT_LEAF_CAP) -> LinearCode:
    """Representative of C's S_N1 x S_N2 orbit; equal for equivalent codes."""
    return canonical_search(C, leaf_cap).code


def automorphism_group_order(gens, n: int) -> int:
    if not gens:
        return 1
    from sympy.combinatorics import Permutation, PermutationGroup

    return int(PermutationGroup([Permutation(list(g), size=n) for g in gens]).order())


def _orbit_representatives(leaders: list[int], C: LinearCode, auts) -> list[int]:
    n = C.n
    remaining = set(leaders)
    reps = []
    for v in leaders:
        if v not in remaining:
            continue
        reps.append(v)
        stack = [v]
        remaining.discard(v)
        while stack:
            u = stack.pop()
            for g in auts:
                w = coset_leader(_permute_word(u, g, n), C)
                if w in remaining:
                    remaining.discard(w)
                    stack.append(w)
    return reps


def _start(n1: int, n2: int, max_length: int):
    n = n1 + n2
    if n > max_length:
        raise CapExceeded(f"length {n} exceeds the search bound {max_length}")
    if n1 < 0 or n2 < 0:
        raise ValueError("lengths must be nonnegative")
    if n == 0:
        return LinearCode.zero(0, 0)
    if n % 2 or (n1 - n2) % 4:
        return None
    return LinearCode(n1, n2, ((1 << n) - 1,))


def extend_level(level: dict, leaf_cap: int = DEFAULT_LEAF_CAP) -> dict:
    """One enumeration step: all inequivalent index-2 doubly-even extensions.

    ``level`` maps canonical keys to (canonical code, automorphisms) pairs; the
    entries are independent so callers may split them across workers and
    merge the returned dicts.
    """
    nxt: dict = {}
    for code, auts in level.values():
        leaders = doubly_even_cosets(code)
        for v in _orbit_representatives(leaders, code, auts):
            res = canonical_search(code.add(v), leaf_cap)
            if res.key not in nxt:
                nxt[res.key] = (res.code, res.canonical_automorphisms())
    return nxt


def _extend_parallel(level: dict, leaf_cap: int, workers: int) -> dict:
    """extend_level over contiguous chunks, merged in chunk order.

    Merging keeps the first entry per key, exactly as the serial loop does,
    so the result (including stored automorphisms) does not depend on
    ``workers``.
    """
    items = list(level.items())
    if workers <= 1 or len(items) < 2:
        return extend_level(level, leaf_cap)
    from concurrent.futures import ProcessPoolExecutor

    k = min(workers, len(items))
    step = -(-len(items) // k)
    chunks = [dict(items[i : i + step]) for i in range(0, len(items), step)]
    merged: dict = {}
    with ProcessPoolExecutor(max_workers=k) as pool:
        for part in pool.map(extend_level, chunks, [leaf_cap] * len(chunks)):
            for key, val in part.items():
                merged.setdefault(key, val)
    return merged


def enumerate_sdde(
    n1: int,
    n2: int,
    max_length: int = DEFAULT_MAX_LENGTH,
    leaf_cap: int = DEFAULT_LEAF_CAP,
    workers: int = 1,
) -> list[CodeClass]:
    """Equivalence classes of doubly-even self-dual codes of length (n1, n2).

    Results are sorted by canonical key, so the output order is stable.
    """
    start = _start(n1, n2, max_length)
    if start is None:
        return []
    res = canonical_search(start, leaf_cap)
    level = {res.key: (res.code, res.canonical_automorphisms())}
    for _ in range(start.dim, (n1 + n2) // 2):
        level = _extend_parallel(level, leaf_cap, workers)
        if not level:
            return []
    out = []
    denom = factorial(n1) * factorial(n2)
    for key in sorted(level):
        code, auts = level[key]
        assert is_self_dual(code) and is_doubly_even(code)
        size = denom // automorphism_group_order(auts, code.n)
        out.append(CodeClass(code, size, auts))
    return out


def count_sdde(n1: int, n2: int, **kw) -> int:
    return len(enumerate_sdde(n1, n2, **kw))
