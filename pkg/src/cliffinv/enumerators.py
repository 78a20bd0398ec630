"""Full and complete conjugate weight enumerators, nu_m, and MacWilliams.

A genus-m object is keyed by an m-row bit matrix M whose rows are codewords;
column j of M, read top to bottom, is the index f of the variable x_f it
contributes (xbar_f for the last N2 columns).
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd
from itertools import product

import numpy as np

from .codes import LinearCode, mobius_subspace, rref, subcodes_with_allones
from .cyclo import Cyclo8
from .errors import CapExceeded
from .polynomial import ConjMonomial, ConjPolynomial, monomials_from_columns

__all__ = [
    "FweVector",
    "fwe",
    "project_pi",
    "ccwe",
    "nu_direct",
    "nu_by_inversion",
    "macwilliams_transform",
    "DEFAULT_TERM_CAP",
]

DEFAULT_TERM_CAP = 10_000_000


class FweVector:
    """Sparse element of C[V^(m x n)], keyed by tuples of m row integers."""

    __slots__ = ("m", "n1", "n2", "terms")

    def __init__(self, m: int, n1: int, n2: int, terms=None):
        self.m, self.n1, self.n2 = m, n1, n2
        self.terms = {}
        for k, v in (terms or {}).items():
            v = v if isinstance(v, Cyclo8) else Cyclo8(v)
            if len(k) != m:
                raise ValueError("key shape does not match genus")
            if v:
                self.terms[tuple(k)] = v

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def scale(self, c) -> FweVector:
        return FweVector(self.m, self.n1, self.n2, {k: v * c for k, v in self.terms.items()})

    def __add__(self, other: FweVector) -> FweVector:
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Cyclo8()) + v
        return FweVector(self.m, self.n1, self.n2, out)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FweVector):
            return NotImplemented
        return (self.m, self.n1, self.n2, self.terms) == (
            other.m,
            other.n1,
            other.n2,
            other.terms,
        )

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"FweVector(m={self.m}, split=({self.n1},{self.n2}), terms={len(self.terms)})"


def _check_cap(count: int, cap: int):
    if count > cap:
        raise CapExceeded(f"{count} terms exceeds the cap of {cap}")


def fwe(C: LinearCode, m: int, cap: int = DEFAULT_TERM_CAP) -> FweVector:
    _check_cap(C.size**m, cap)
    one = Cyclo8(1)
    words = C.codewords()
    return FweVector(m, C.n1, C.n2, {k: one for k in product(words, repeat=m)})


def _columns(rows, n: int, m: int) -> list[int]:
    cols = []
    for j in range(n):
        shift = n - 1 - j
        f = 0
        for r in rows:
            f = (f << 1) | (r >> shift & 1)
        cols.append(f)
    return cols


def project_pi(v: FweVector) -> ConjPolynomial:
    out: dict = {}
    for rows, c in v.terms.items():
        mono = monomials_from_columns(_columns(rows, v.n, v.m), v.n1, v.m)
        out[mono] = out[mono] + c if mono in out else c
    return ConjPolynomial._trusted(v.m, (v.n1, v.n2), out)


def _bit_table(words, n: int) -> np.ndarray:
    w = np.asarray(words, dtype=np.int64)
    shifts = np.arange(n - 1, -1, -1, dtype=np.int64)
    return ((w[:, None] >> shifts) & 1).astype(np.int64)


def _monomial_counts(cols: np.ndarray, n1: int, m: int) -> dict:
    """Histogram the column-index rows of ``cols`` into monomials with multiplicity."""
    q = 1 << m
    fs = np.arange(q)
    a = (cols[:, :n1, None] == fs).sum(axis=1)
    b = (cols[:, n1:, None] == fs).sum(axis=1)
    uniq, counts = np.unique(np.hstack([a, b]), axis=0, return_counts=True)
    return {
        ConjMonomial(tuple(int(x) for x in row[:q]), tuple(int(x) for x in row[q:])): int(c)
        for row, c in zip(uniq, counts)
    }


@lru_cache(maxsize=4096)
def ccwe(C: LinearCode, m: int, cap: int = DEFAULT_TERM_CAP) -> ConjPolynomial:
    """Complete conjugate weight enumerator of C(m), the image of fwe(C, m) under pi."""
    total = C.size**m
    _check_cap(total, cap)
    if C.n == 0:
        return ConjPolynomial.constant(m)
    if m == 0:
        return ConjPolynomial(0, C.split, {ConjMonomial((C.n1,), (C.n2,)): total})
    bits = _bit_table(C.codewords(), C.n)
    cols = np.zeros((1, C.n), dtype=np.int64)
    for _ in range(m):
        cols = ((cols[:, None, :] << 1) | bits[None, :, :]).reshape(-1, C.n)
    counts = _monomial_counts(cols, C.n1, m)
    return ConjPolynomial._trusted(m, C.split, {k: Cyclo8(v) for k, v in counts.items()})


def nu_direct(D: LinearCode, m: int, cap: int = DEFAULT_TERM_CAP) -> ConjPolynomial:
    """Sum of nu_M over the m x n matrices M with span(rows of M, 1) = D."""
    zero = ConjPolynomial.zero(m, D.split)
    one = D.allones
    if D.n == 0 or one not in D or D.dim > m + 1:
        return zero
    _check_cap(D.size**m, cap)
    out: dict = {}
    words = D.codewords()
    for rows in product(words, repeat=m):
        if len(rref(rows + (one,))) != D.dim:
            continue
        mono = monomials_from_columns(_columns(rows, D.n, m), D.n1, m)
        out[mono] = out.get(mono, 0) + 1
    return ConjPolynomial._trusted(m, D.split, {k: Cyclo8(v) for k, v in out.items()})


def nu_by_inversion(D: LinearCode, m: int) -> ConjPolynomial:
    """nu_m(D) as the sum of mu(C, D) * ccwe(C(m)) over subcodes C of D containing 1.

    The partial-sum identity ccwe(C(m)) = sum nu_m(D') only holds for codes
    C containing the all-ones word, so the inversion runs over that interval.
    """
    if D.n == 0 or D.allones not in D:
        raise ValueError("nu_by_inversion needs the all-ones word in D")
    total = ConjPolynomial.zero(m, D.split)
    for C in subcodes_with_allones(D):
        mu = mobius_subspace(D.dim - C.dim)
        total = total + ccwe(C, m).scale(mu)
    return total


def _wht(a: np.ndarray) -> np.ndarray:
    """Unnormalized Walsh-Hadamard transform along a length-2^k object array."""
    a = a.copy()
    size = len(a)
    h = 1
    while h < size:
        v = a.reshape(-1, 2, h)
        x = v[:, 0, :].copy()
        y = v[:, 1, :].copy()
        v[:, 0, :] = x + y
        v[:, 1, :] = x - y
        a = v.reshape(size)
        h *= 2
    return a


def macwilliams_transform(
    v: FweVector, code_size: int, cap: int = DEFAULT_TERM_CAP
) -> FweVector:
    """Send e_u to (1/code_size) * sum_w (-1)^(beta(w, u)) e_w, one tensor slot per row.

    Applied to fwe(C, m) with code_size = |C|^m this yields fwe(dual(C), m).
    """
    n, m = v.n, v.m
    bits = n * m
    _check_cap(1 << bits, cap)
    if not v.terms:
        return FweVector(m, v.n1, v.n2)
    den = 1
    for c in v.terms.values():
        den = den * c.denominator // gcd(den, c.denominator)
    comps = [np.zeros(1 << bits, dtype=object) for _ in range(4)]
    for comp in comps:
        comp[:] = 0
    for key, c in v.terms.items():
        idx = 0
        for r in key:
            idx = (idx << n) | r
        scale = den // c.denominator
        for k in range(4):
            comps[k][idx] = c.numerators[k] * scale
    comps = [_wht(comp) for comp in comps]
    out = {}
    mask = (1 << n) - 1
    total_den = den * code_size
    nz = np.zeros(1 << bits, dtype=bool)
    for comp in comps:
        nz |= comp != 0
    for idx in np.flatnonzero(nz):
        key = tuple((int(idx) >> (n * (m - 1 - i))) & mask for i in range(m))
        out[key] = Cyclo8.from_ints([int(comp[idx]) for comp in comps], total_den)
    return FweVector(m, v.n1, v.n2, out)
