"""Binary linear codes of split length (N1, N2).

Codewords are Python ints.  Coordinate ``j`` (0-based, unbarred block first)
is stored in bit ``n - 1 - j`` so that the integer reads left to right like
the text row ``bits_unbarred|bits_barred``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from pathlib import Path
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Codeword",
    "LinearCode",
    "rref",
    "signed_weight",
    "beta",
    "dual",
    "is_self_orthogonal",
    "is_self_dual",
    "is_even",
    "is_doubly_even",
    "is_doubly_even_exhaustive",
    "contains_allones",
    "glue",
    "subspaces",
    "subcodes_with_allones",
    "mobius_subspace",
    "index2_de_extensions",
    "read_code",
    "write_code",
    "parse_code",
    "format_code",
    "codes_to_json",
]


def _popcount(x: int) -> int:
    return bin(x).count("1")


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of the span, pivots in increasing coordinate order."""
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            if v & (1 << (r.bit_length() - 1)):
                v ^= r
        if v:
            lead = 1 << (v.bit_length() - 1)
            rows = [r ^ v if r & lead else r for r in rows]
            rows.append(v)
    rows.sort(reverse=True)
    return tuple(rows)


@dataclass(frozen=True)
class Codeword:
    bits: int
    n1: int
    n2: int

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @classmethod
    def parse(cls, text: str) -> Codeword:
        left, _, right = text.strip().partition("|")
        bits = int(left + right, 2) if left + right else 0
        return cls(bits, len(left), len(right))

    def __str__(self) -> str:
        s = format(self.bits, f"0{self.n}b") if self.n else ""
        return s[: self.n1] + "|" + s[self.n1 :]


def _masks(n1: int, n2: int) -> tuple[int, int]:
    return ((1 << n1) - 1) << n2, (1 << n2) - 1


def signed_weight(c, n1: int | None = None, n2: int | None = None) -> int:
    """wt(c) = (#ones among the first N1 coordinates) - (#ones among the last N2)."""
    if isinstance(c, Codeword):
        bits, n1, n2 = c.bits, c.n1, c.n2
    else:
        bits = c
    umask, bmask = _masks(n1, n2)
    return _popcount(bits & umask) - _popcount(bits & bmask)


def beta(x, y) -> int:
    """The split bilinear form over F_2 (equal to the plain inner product mod 2)."""
    if isinstance(x, Codeword) or isinstance(y, Codeword):
        if not (isinstance(x, Codeword) and isinstance(y, Codeword)):
            raise TypeError("beta needs two Codewords or two ints")
        if (x.n1, x.n2) != (y.n1, y.n2):
            raise ValueError(f"split mismatch: {(x.n1, x.n2)} vs {(y.n1, y.n2)}")
        x, y = x.bits, y.bits
    return _popcount(x & y) & 1


@dataclass(frozen=True)
class LinearCode:
    """A subspace of F_2^(N1+N2) held as its unique RREF basis."""

    n1: int
    n2: int
    rows: tuple[int, ...] = ()

    def __post_init__(self):
        canon = rref(self.rows)
        if canon != self.rows:
            object.__setattr__(self, "rows", canon)
        if self.rows and self.rows[0].bit_length() > self.n:
            raise ValueError("basis row longer than the code length")

    @classmethod
    def span(cls, n1: int, n2: int, vectors: Iterable) -> LinearCode:
        vs = [v.bits if isinstance(v, Codeword) else int(v) for v in vectors]
        return cls(n1, n2, tuple(vs))

    @classmethod
    def zero(cls, n1: int, n2: int) -> LinearCode:
        return cls(n1, n2, ())

    @classmethod
    def full(cls, n1: int, n2: int) -> LinearCode:
        n = n1 + n2
        return cls(n1, n2, tuple(1 << (n - 1 - j) for j in range(n)))

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    @property
    def split(self) -> tuple[int, int]:
        return (self.n1, self.n2)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def size(self) -> int:
        return 1 << len(self.rows)

    @property
    def allones(self) -> int:
        return (1 << self.n) - 1

    @property
    def basis(self) -> list[Codeword]:
        return [Codeword(r, self.n1, self.n2) for r in self.rows]

    def codewords(self) -> list[int]:
        words = [0]
        for r in self.rows:
            words += [w ^ r for w in words]
        return words

    def __contains__(self, v) -> bool:
        if isinstance(v, Codeword):
            v = v.bits
        for r in self.rows:
            if v & (1 << (r.bit_length() - 1)):
                v ^= r
        return v == 0

    def __le__(self, other: LinearCode) -> bool:
        return all(r in other for r in self.rows)

    def add(self, *vectors: int) -> LinearCode:
        return LinearCode(self.n1, self.n2, self.rows + tuple(vectors))

    def wt(self, v: int) -> int:
        return signed_weight(v, self.n1, self.n2)

    def permute(self, perm: Sequence[int]) -> LinearCode:
        """Image under the coordinate map sending old coordinate ``perm[p]`` to position ``p``."""
        n = self.n
        out = []
        for r in self.rows:
            w = 0
            for p, j in enumerate(perm):
                if r >> (n - 1 - j) & 1:
                    w |= 1 << (n - 1 - p)
            out.append(w)
        return LinearCode(self.n1, self.n2, tuple(out))

    def __str__(self) -> str:
        return format_code(self)


def dual(C: LinearCode) -> LinearCode:
    n = C.n
    pivots = {r.bit_length() - 1 for r in C.rows}
    out = []
    for f in range(n):
        if f in pivots:
            continue
        v = 1 << f
        for r in C.rows:
            if r >> f & 1:
                v |= 1 << (r.bit_length() - 1)
        out.append(v)
    return LinearCode(C.n1, C.n2, tuple(out))


def is_self_orthogonal(C: LinearCode) -> bool:
    rows = C.rows
    return all(beta(x, y) == 0 for i, x in enumerate(rows) for y in rows[i:])


def is_self_dual(C: LinearCode) -> bool:
    return 2 * C.dim == C.n and is_self_orthogonal(C)


def is_even(C: LinearCode) -> bool:
    # wt(x+y) = wt(x) + wt(y) - 2 wt(x & y), so the basis decides parity
    return all(C.wt(r) % 2 == 0 for r in C.rows)


def is_doubly_even(C: LinearCode) -> bool:
    """Basis criterion: rows doubly-even and pairwise orthogonal."""
    return all(C.wt(r) % 4 == 0 for r in C.rows) and is_self_orthogonal(C)


def is_doubly_even_exhaustive(C: LinearCode) -> bool:
    return all(C.wt(w) % 4 == 0 for w in C.codewords())


def contains_allones(C: LinearCode) -> bool:
    return C.allones in C


def glue(C: LinearCode, D: LinearCode) -> LinearCode:
    """Direct sum, laid out as (C unbarred, D unbarred | C barred, D barred)."""
    n1, n2 = C.n1 + D.n1, C.n2 + D.n2
    cu, cb = _masks(C.n1, C.n2)
    du, db = _masks(D.n1, D.n2)
    rows = []
    for r in C.rows:
        u, b = (r & cu) >> C.n2, r & cb
        rows.append((u << (D.n1 + n2)) | (b << D.n2))
    for r in D.rows:
        u, b = (r & du) >> D.n2, r & db
        rows.append((u << n2) | b)
    return LinearCode(n1, n2, tuple(rows))


def _subspaces_of_basis(basis: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All subspaces of span(basis), each once, as lists of spanning vectors."""
    k = len(basis)

    def combo(coords: int) -> int:
        v = 0
        for i in range(k):
            if coords >> (k - 1 - i) & 1:
                v ^= basis[i]
        return v

    # RREF matrices over F_2^k: choose pivot set, then free entries
    for r in range(k + 1):
        for pivots in combinations(range(k), r):
            free_slots = [
                (row, col)
                for row, p in enumerate(pivots)
                for col in range(p + 1, k)
                if col not in pivots
            ]
            for bits in product((0, 1), repeat=len(free_slots)):
                rows = [1 << (k - 1 - p) for p in pivots]
                for (row, col), b in zip(free_slots, bits):
                    if b:
                        rows[row] |= 1 << (k - 1 - col)
                yield tuple(combo(x) for x in rows)


def subspaces(C: LinearCode) -> Iterator[LinearCode]:
    for vecs in _subspaces_of_basis(C.rows):
        yield LinearCode(C.n1, C.n2, vecs)


def subcodes_with_allones(C: LinearCode) -> Iterator[LinearCode]:
    """Each subspace D of C with the all-ones word in D, exactly once."""
    one = C.allones
    if C.n == 0 or one not in C:
        raise ValueError("code does not contain the all-ones word")
    # complement of <1> inside C: drop the row whose pivot is hit by 1's reduction
    comp = []
    basis = (one,)
    for r in C.rows:
        if r not in LinearCode(C.n1, C.n2, basis):
            basis += (r,)
            comp.append(r)
    for vecs in _subspaces_of_basis(comp):
        yield LinearCode(C.n1, C.n2, vecs + (one,))


def mobius_subspace(k: int) -> int:
    """Moebius function mu(C, D) of the F_2 subspace lattice, k = dim D - dim C."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (-1) ** k * 2 ** (k * (k - 1) // 2)


def coset_leader(v: int, C: LinearCode) -> int:
    """Minimum integer in the coset v + C."""
    for r in C.rows:
        if v & (1 << (r.bit_length() - 1)):
            v ^= r
    return v


def doubly_even_cosets(C: LinearCode) -> list[int]:
    """Coset leaders of C^perp / C whose words have signed weight 0 mod 4, excluding C itself."""
    D = dual(C)
    leaders = set()
    for w in D.codewords():
        if C.wt(w) % 4 == 0:
            lead = coset_leader(w, C)
            if lead:
                leaders.add(lead)
    return sorted(leaders)


def index2_de_extensions(C: LinearCode) -> list[LinearCode]:
    """All doubly-even self-orthogonal C' containing C with [C' : C] = 2."""
    return [C.add(v) for v in doubly_even_cosets(C)]


# ---------------------------------------------------------------- text format


def format_code(C: LinearCode) -> str:
    lines = [f"split {C.n1} {C.n2}"]
    lines += [str(Codeword(r, C.n1, C.n2)) for r in C.rows]
    return "\n".join(lines) + "\n"


def parse_code(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("split"):
        raise ValueError("code file must start with 'split N1 N2'")
    _, a, b = lines[0].split()
    n1, n2 = int(a), int(b)
    rows = []
    for ln in lines[1:]:
        w = Codeword.parse(ln)
        if (w.n1, w.n2) != (n1, n2):
            raise ValueError(f"row {ln!r} does not match split ({n1},{n2})")
        rows.append(w.bits)
    return LinearCode(n1, n2, tuple(rows))


def read_code(path) -> LinearCode:
    return parse_code(Path(path).read_text())


def write_code(C: LinearCode, path) -> None:
    Path(path).write_text(format_code(C))


def codes_to_json(classes, canonical: bool = True) -> str:
    items = []
    for c in classes:
        code = getattr(c, "representative", c)
        item = {
            "split": [code.n1, code.n2],
            "dim": code.dim,
            "basis": [str(w) for w in code.basis],
            "canonical": canonical,
        }
        hint = getattr(c, "class_size_hint", None)
        if hint is not None:
            item["class_size"] = hint
        items.append(item)
    return json.dumps(items, indent=2)
