"""The complex Clifford group X_m as exact matrices, and its action on conjugate polynomials.

Matrices are stored as ``num / den`` with ``num`` an integer array of shape
(2^m, 2^m, 4) holding power-basis coefficients over Z[zeta_8]; the pair is
normalized so that gcd(all numerators, den) = 1.  Rows and columns are
indexed by v in F_2^m read as an integer with v_1 the leading bit, so
``h (x) I`` is ``kron(h, I)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

import numpy as np

from .codes import (
    LinearCode,
    contains_allones,
    index2_de_extensions,
    is_doubly_even,
    rref,
)
from .cyclo import Cyclo8
from .enumerators import FweVector, ccwe
from .errors import CapExceeded, SingularMatrix
from .polynomial import ConjMonomial, ConjPolynomial

__all__ = [
    "UnitaryMatrix",
    "GroupList",
    "gen_dS",
    "gen_perm",
    "gen_hadamard",
    "sigma_x",
    "phase_gate",
    "closure_generators",
    "definition_generators",
    "parabolic_generators",
    "bfs_closure",
    "clifford_group",
    "parabolic_subgroup",
    "act",
    "act_fwe",
    "average",
    "check_xp_lemma",
    "xp_lemma_sides",
    "DEFAULT_GROUP_CAP",
]

DEFAULT_GROUP_CAP = 200_000
_INT_GUARD = 1 << 60

# zeta^a * zeta^b = sign * zeta^c with zeta^4 = -1
_ZT = np.zeros((4, 4, 4), dtype=np.int64)
for _a, _b in product(range(4), repeat=2):
    _s = _a + _b
    _ZT[_a, _b, _s % 4] = 1 if _s < 4 else -1


def _zmatmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Product of (possibly batched) matrices over Z[zeta_8]."""
    bound = int(np.abs(A).max(initial=0)) * int(np.abs(B).max(initial=0)) * A.shape[-2] * 4
    if bound >= _INT_GUARD:
        raise OverflowError("Z[zeta_8] matrix product would overflow int64")
    return np.einsum("...ija,...jkb,abc->...ikc", A, B, _ZT)


def _normalize_batch(nums: np.ndarray, dens: np.ndarray):
    flat = nums.reshape(len(nums), -1)
    g = np.gcd.reduce(np.concatenate([flat, dens[:, None]], axis=1), axis=1)
    g[g == 0] = 1
    return nums // g[:, None, None, None], dens // g


class UnitaryMatrix:
    __slots__ = ("m", "num", "den", "_key")

    def __init__(self, m: int, num, den: int = 1):
        num = np.asarray(num, dtype=np.int64)
        q = 1 << m
        if num.shape != (q, q, 4):
            raise ValueError(f"expected shape {(q, q, 4)}, got {num.shape}")
        if den <= 0:
            num, den = -num, -den
        nums, dens = _normalize_batch(num[None], np.array([den], dtype=np.int64))
        self.m = m
        self.num = nums[0]
        self.num.setflags(write=False)
        self.den = int(dens[0])
        self._key = None

    @classmethod
    def from_entries(cls, m: int, entries) -> UnitaryMatrix:
        q = 1 << m
        den = 1
        for row in entries:
            for x in row:
                x = x if isinstance(x, Cyclo8) else Cyclo8(x)
                den = np.lcm(den, x.denominator)
        den = int(den)
        num = np.zeros((q, q, 4), dtype=np.int64)
        for i, row in enumerate(entries):
            for j, x in enumerate(row):
                x = x if isinstance(x, Cyclo8) else Cyclo8(x)
                num[i, j] = [c * (den // x.denominator) for c in x.numerators]
        return cls(m, num, den)

    @classmethod
    def identity(cls, m: int) -> UnitaryMatrix:
        q = 1 << m
        num = np.zeros((q, q, 4), dtype=np.int64)
        num[np.arange(q), np.arange(q), 0] = 1
        return cls(m, num)

    @property
    def size(self) -> int:
        return 1 << self.m

    def entry(self, i: int, j: int) -> Cyclo8:
        return Cyclo8.from_ints(self.num[i, j].tolist(), self.den)

    @property
    def entries(self) -> list[list[Cyclo8]]:
        q = self.size
        return [[self.entry(i, j) for j in range(q)] for i in range(q)]

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.num.tobytes() + self.den.to_bytes(8, "little")
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, UnitaryMatrix):
            return NotImplemented
        return self.m == other.m and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def __matmul__(self, other: UnitaryMatrix) -> UnitaryMatrix:
        return UnitaryMatrix(self.m, _zmatmul(self.num, other.num), self.den * other.den)

    def conj(self) -> UnitaryMatrix:
        """Entry-wise complex conjugate: zeta^k -> -zeta^(4-k)."""
        n = self.num
        c = np.stack([n[..., 0], -n[..., 3], -n[..., 2], -n[..., 1]], axis=-1)
        return UnitaryMatrix(self.m, c, self.den)

    def transpose(self) -> UnitaryMatrix:
        return UnitaryMatrix(self.m, self.num.transpose(1, 0, 2), self.den)

    def dagger(self) -> UnitaryMatrix:
        return self.conj().transpose()

    def is_identity(self) -> bool:
        return self == UnitaryMatrix.identity(self.m)

    def is_unitary(self) -> bool:
        return (self @ self.dagger()).is_identity()

    def monomial_data(self):
        """(perm, entries) with U[perm[f], f] = entries[f] the only nonzeros, else None."""
        nz = np.any(self.num != 0, axis=-1)
        if not (nz.sum(axis=0) == 1).all():
            return None
        perm = nz.argmax(axis=0)
        vals = [self.entry(int(perm[f]), f) for f in range(self.size)]
        return [int(p) for p in perm], vals

    def __repr__(self) -> str:
        return f"UnitaryMatrix(m={self.m}, den={self.den})"


@dataclass
class GroupList:
    """A finite matrix group held as stacked numerator arrays and denominators."""

    m: int
    nums: np.ndarray
    dens: np.ndarray
    generator_set: str = ""

    @property
    def order(self) -> int:
        return len(self.dens)

    def __len__(self) -> int:
        return len(self.dens)

    def __getitem__(self, i: int) -> UnitaryMatrix:
        return UnitaryMatrix(self.m, self.nums[i], int(self.dens[i]))

    def __iter__(self):
        for i in range(len(self)):
            yield self[i]

    def monomial_arrays(self):
        """Permutations and zeta exponents when every entry is 0 or a power of zeta."""
        nz = np.any(self.nums != 0, axis=-1)  # (N, q, q)
        if not (nz.sum(axis=1) == 1).all() or not (self.dens == 1).all():
            return None
        perm = nz.argmax(axis=1)  # row index per column
        vals = np.take_along_axis(self.nums, perm[:, None, :, None], axis=1)[:, 0]
        if not (np.abs(vals).sum(axis=-1) == 1).all():
            return None
        idx = np.abs(vals).argmax(axis=-1)
        sign = np.take_along_axis(vals, idx[..., None], axis=-1)[..., 0]
        phase = (idx + np.where(sign < 0, 4, 0)) % 8
        return perm, phase


# ------------------------------------------------------------------ generators


def _bits(v: int, m: int) -> list[int]:
    return [(v >> (m - 1 - i)) & 1 for i in range(m)]


def gen_dS(S, m: int | None = None) -> UnitaryMatrix:
    """Diagonal element e_v -> i^(v^T S v) e_v for a symmetric integer matrix S."""
    S = [list(map(int, row)) for row in S]
    m = len(S) if m is None else m
    if any(S[i][j] != S[j][i] for i in range(m) for j in range(m)):
        raise ValueError("S must be symmetric")
    q = 1 << m
    num = np.zeros((q, q, 4), dtype=np.int64)
    for v in range(q):
        b = _bits(v, m)
        e = sum(b[i] * S[i][j] * b[j] for i in range(m) for j in range(m)) % 4
        # i^e = zeta^(2e)
        num[v, v, (2 * e) % 4] = 1 if 2 * e < 4 else -1
    return UnitaryMatrix(m, num)


def _f2_invertible(g) -> bool:
    m = len(g)
    rows = [int("".join(str(int(x) & 1) for x in row), 2) for row in g]
    return len(rref(rows)) == m


def gen_perm(g, vprime=None) -> UnitaryMatrix:
    """Affine permutation e_v -> e_(g v + v') over F_2^m."""
    m = len(g)
    if not _f2_invertible(g):
        raise SingularMatrix("g is not invertible over F_2")
    vp = [0] * m if vprime is None else [int(x) & 1 for x in vprime]
    q = 1 << m
    num = np.zeros((q, q, 4), dtype=np.int64)
    for v in range(q):
        b = _bits(v, m)
        w = [(sum(int(g[i][j]) * b[j] for j in range(m)) + vp[i]) & 1 for i in range(m)]
        num[int("".join(map(str, w)), 2) if m else 0, v, 0] = 1
    return UnitaryMatrix(m, num)


def _first_factor(u: UnitaryMatrix, m: int) -> UnitaryMatrix:
    eye = np.eye(1 << (m - 1), dtype=np.int64)
    num = np.einsum("ija,kl->ikjla", u.num, eye).reshape(1 << m, 1 << m, 4)
    return UnitaryMatrix(m, num, u.den)


def gen_hadamard(m: int) -> UnitaryMatrix:
    if m < 1:
        raise ValueError("genus must be at least 1")
    r = Cyclo8(0, Fraction(1, 2), 0, Fraction(-1, 2))  # 1/sqrt(2)
    h = UnitaryMatrix.from_entries(1, [[r, r], [r, -r]])
    return _first_factor(h, m)


def sigma_x(m: int) -> UnitaryMatrix:
    return _first_factor(gen_perm([[1]], [1]), m)


def phase_gate(m: int) -> UnitaryMatrix:
    """phi (x) I, which is d_S for S = E_11."""
    S = [[0] * m for _ in range(m)]
    S[0][0] = 1
    return gen_dS(S)


def _transvections(m: int) -> list[UnitaryMatrix]:
    out = []
    for k in range(m):
        for l in range(m):
            if k != l:
                g = [[int(i == j) for j in range(m)] for i in range(m)]
                g[k][l] = 1
                out.append(gen_perm(g))
    return out


def closure_generators(m: int) -> list[UnitaryMatrix]:
    """sigma_x (x) I, h (x) I, phi (x) I, d_{S12} and generators of GL(m, 2)."""
    gens = [sigma_x(m), gen_hadamard(m), phase_gate(m)]
    if m >= 2:
        S = [[0] * m for _ in range(m)]
        S[0][1] = S[1][0] = 1
        gens.append(gen_dS(S))
    return gens + _transvections(m)


def parabolic_generators(m: int) -> list[UnitaryMatrix]:
    """Diagonal d_S for elementary S, translations and GL(m, 2) generators."""
    gens = []
    for k in range(m):
        S = [[0] * m for _ in range(m)]
        S[k][k] = 1
        gens.append(gen_dS(S))
    for k in range(m):
        for l in range(k + 1, m):
            S = [[0] * m for _ in range(m)]
            S[k][l] = S[l][k] = 1
            gens.append(gen_dS(S))
    eye = [[int(i == j) for j in range(m)] for i in range(m)]
    for k in range(m):
        gens.append(gen_perm(eye, [int(i == k) for i in range(m)]))
    return gens + _transvections(m)


def definition_generators(m: int) -> list[UnitaryMatrix]:
    """Generators as first defined: diagonal, affine permutation and Hadamard elements."""
    return parabolic_generators(m) + [gen_hadamard(m)]


# ------------------------------------------------------------------ closure


def bfs_closure(gens, cap: int = DEFAULT_GROUP_CAP, name: str = "") -> GroupList:
    """All products of ``gens``, found breadth-first with exact hash dedup."""
    gens = list(gens)
    if not gens:
        raise ValueError("need at least one generator")
    m = gens[0].m
    ident = UnitaryMatrix.identity(m)
    seen = {ident.key()}
    all_nums = [ident.num[None]]
    all_dens = [np.array([ident.den], dtype=np.int64)]
    frontier_n, frontier_d = ident.num[None], np.array([ident.den], dtype=np.int64)
    while len(frontier_d):
        new_n, new_d = [], []
        for g in gens:
            pn = _zmatmul(g.num[None], frontier_n)
            pd = frontier_d * g.den
            pn, pd = _normalize_batch(pn, pd)
            for i in range(len(pd)):
                k = pn[i].tobytes() + int(pd[i]).to_bytes(8, "little")
                if k not in seen:
                    seen.add(k)
                    new_n.append(pn[i])
                    new_d.append(pd[i])
                    if len(seen) > cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
        if not new_d:
            break
        frontier_n = np.stack(new_n)
        frontier_d = np.array(new_d, dtype=np.int64)
        all_nums.append(frontier_n)
        all_dens.append(frontier_d)
    return GroupList(m, np.concatenate(all_nums), np.concatenate(all_dens), name)


@lru_cache(maxsize=None)
def clifford_group(m: int, cap: int = DEFAULT_GROUP_CAP) -> GroupList:
    return bfs_closure(closure_generators(m), cap, "closure")


@lru_cache(maxsize=None)
def parabolic_subgroup(m: int, cap: int = DEFAULT_GROUP_CAP) -> GroupList:
    return bfs_closure(parabolic_generators(m), cap, "parabolic")


# ------------------------------------------------------------------ action


def _linear_forms(U: UnitaryMatrix, bar: bool):
    E = U.conj().entries if bar else U.entries
    q = U.size
    return [{e: E[e][f] for e in range(q) if E[e][f]} for f in range(q)]


def _half_mul(p: dict, q: dict) -> dict:
    out: dict = {}
    for k1, v1 in p.items():
        for k2, v2 in q.items():
            k = tuple(x + y for x, y in zip(k1, k2))
            c = v1 * v2
            out[k] = out[k] + c if k in out else c
    return {k: v for k, v in out.items() if v}


class _HalfExpander:
    """Expands prod_f L_f^(a_f) for the linear forms L_f of one block."""

    def __init__(self, forms, q: int):
        self.q = q
        self.lin = []
        for f, form in enumerate(forms):
            d = {}
            for e, c in form.items():
                k = [0] * q
                k[e] = 1
                d[tuple(k)] = c
            self.lin.append(d)
        self.pow_cache: dict = {}
        self.cache: dict = {}

    def power(self, f: int, k: int) -> dict:
        key = (f, k)
        if key not in self.pow_cache:
            if k == 0:
                self.pow_cache[key] = {(0,) * self.q: Cyclo8(1)}
            else:
                self.pow_cache[key] = _half_mul(self.power(f, k - 1), self.lin[f])
        return self.pow_cache[key]

    def expand(self, a: tuple) -> dict:
        if a not in self.cache:
            out = {(0,) * self.q: Cyclo8(1)}
            for f, k in enumerate(a):
                if k:
                    out = _half_mul(out, self.power(f, k))
            self.cache[a] = out
        return self.cache[a]


def act(U: UnitaryMatrix, p: ConjPolynomial) -> ConjPolynomial:
    """Substitute x_f -> sum_e U[e,f] x_e and xbar_f -> sum_e conj(U[e,f]) xbar_e."""
    if U.m != p.m:
        raise ValueError("genus mismatch")
    mono = U.monomial_data()
    if mono is not None:
        return _act_monomial(mono, p)
    q = U.size
    A = _HalfExpander(_linear_forms(U, False), q)
    B = _HalfExpander(_linear_forms(U, True), q)
    by_a: dict = {}
    for k, c in p.terms.items():
        by_a.setdefault(k.a, []).append((k.b, c))
    out: dict = {}
    for a, bs in by_a.items():
        right: dict = {}
        for b, c in bs:
            for b2, v in B.expand(b).items():
                x = c * v
                right[b2] = right[b2] + x if b2 in right else x
        for a2, u in A.expand(a).items():
            for b2, v in right.items():
                if not v:
                    continue
                key = ConjMonomial(a2, b2)
                x = u * v
                out[key] = out[key] + x if key in out else x
    return ConjPolynomial._trusted(p.m, p.degree, out)


def _act_monomial(mono, p: ConjPolynomial) -> ConjPolynomial:
    perm, vals = mono
    cvals = [v.conj() for v in vals]
    q = len(perm)
    out: dict = {}
    for k, c in p.terms.items():
        a2 = [0] * q
        b2 = [0] * q
        coef = c
        for f in range(q):
            if k.a[f]:
                a2[perm[f]] = k.a[f]
                coef = coef * vals[f] ** k.a[f]
            if k.b[f]:
                b2[perm[f]] = k.b[f]
                coef = coef * cvals[f] ** k.b[f]
        key = ConjMonomial(tuple(a2), tuple(b2))
        out[key] = out[key] + coef if key in out else coef
    return ConjPolynomial._trusted(p.m, p.degree, out)


def act_fwe(U: UnitaryMatrix, v: FweVector) -> FweVector:
    """Genus-1 action on the group algebra: e_f -> sum_e U[e,f] e_e in each slot.

    Unbarred slots use U and barred slots conj(U), so that projecting with pi
    afterwards agrees with ``act(U, project_pi(v))``.
    """
    if U.m != 1 or v.m != 1:
        raise ValueError("the slot-wise action is implemented for genus 1 only")
    n = v.n
    E = U.entries
    Ebar = [[x.conj() for x in row] for row in E]
    state = {k[0]: c for k, c in v.terms.items()}
    for j in range(n):
        M = E if j < v.n1 else Ebar
        bit = 1 << (n - 1 - j)
        nxt: dict = {}
        for word, c in state.items():
            f = 1 if word & bit else 0
            for e in (0, 1):
                x = M[e][f]
                if x:
                    w = (word | bit) if e else (word & ~bit)
                    nxt[w] = nxt[w] + c * x if w in nxt else c * x
        state = {w: c for w, c in nxt.items() if c}
    return FweVector(1, v.n1, v.n2, {(w,): c for w, c in state.items()})


def average(G: GroupList, p: ConjPolynomial) -> ConjPolynomial:
    """(1/|G|) sum_g act(g, p): the projection onto G-invariants."""
    if G.m != p.m:
        raise ValueError("genus mismatch")
    mono = G.monomial_arrays()
    if mono is not None:
        return _average_monomial(G, mono, p)
    total = ConjPolynomial.zero(p.m, p.degree)
    for g in G:
        total = total + act(g, p)
    return total.scale(Fraction(1, len(G)))


def _average_monomial(G: GroupList, mono, p: ConjPolynomial) -> ConjPolynomial:
    perm, phase = mono
    N, q = perm.shape
    out: dict = {}
    for k, c in p.terms.items():
        a = np.asarray(k.a, dtype=np.int64)
        b = np.asarray(k.b, dtype=np.int64)
        ph = (phase @ a - phase @ b) % 8
        A2 = np.zeros((N, q), dtype=np.int64)
        B2 = np.zeros((N, q), dtype=np.int64)
        np.put_along_axis(A2, perm, np.broadcast_to(a, (N, q)), axis=1)
        np.put_along_axis(B2, perm, np.broadcast_to(b, (N, q)), axis=1)
        rows, counts = np.unique(np.hstack([A2, B2, ph[:, None]]), axis=0, return_counts=True)
        acc: dict = {}
        for row, cnt in zip(rows.tolist(), counts.tolist()):
            key = (tuple(row[:q]), tuple(row[q : 2 * q]))
            acc.setdefault(key, [0] * 8)[row[-1]] += cnt
        for (a2, b2), h in acc.items():
            s = Cyclo8.from_ints([h[0] - h[4], h[1] - h[5], h[2] - h[6], h[3] - h[7]])
            if not s:
                continue
            key = ConjMonomial(a2, b2)
            x = c * s
            out[key] = out[key] + x if key in out else x
    return ConjPolynomial._trusted(p.m, p.degree, out).scale(Fraction(1, N))


# ------------------------------------------------------------------ X_P lemma


def _xp_self_coefficient(r: int, m: int, coefficient: str) -> Fraction:
    two_m = 2**m
    if coefficient == "all-overcodes":
        return (Fraction(2) ** (m - r) - 2**r) / (two_m - 1)
    if coefficient == "de-overcodes":
        # E = number of doubly-even index-2 extensions of a DE code with defect r
        e = (2**r - 1) * (2 ** (r - 1) + 1) if r else 0
        return Fraction(1, 2**r) * (1 - Fraction(e, two_m - 1))
    raise ValueError(f"unknown coefficient form {coefficient!r}")


def xp_lemma_sides(
    C: LinearCode, m: int, cap: int = DEFAULT_GROUP_CAP, coefficient: str = "all-overcodes"
):
    """Both sides of the averaged-Hadamard identity on ccwe(C(m)), plus r.

    ``coefficient="all-overcodes"`` uses (2^(m-r) - 2^r)/(2^m - 1) on ccwe(C(m)),
    which budgets for all 2^(2r) - 1 index-2 overcodes; ``"de-overcodes"`` uses 2^-r (1 - E/(2^m - 1)) where E is the number of
    doubly-even index-2 overcodes.  The two agree at r = 0.
    """
    if not (is_doubly_even(C) and contains_allones(C)):
        raise ValueError("C must be doubly-even self-orthogonal and contain 1")
    r = C.n // 2 - C.dim
    P = parabolic_subgroup(m, cap)
    base = ccwe(C, m)
    lhs = average(P, act(gen_hadamard(m), base))
    c_ext = Fraction(1, 2**r * (2**m - 1))
    rhs = base.scale(_xp_self_coefficient(r, m, coefficient))
    for D in index2_de_extensions(C):
        rhs = rhs + ccwe(D, m).scale(c_ext)
    return lhs, rhs, r


def check_xp_lemma(
    C: LinearCode, m: int, cap: int = DEFAULT_GROUP_CAP, coefficient: str = "all-overcodes"
) -> bool:
    lhs, rhs, _ = xp_lemma_sides(C, m, cap, coefficient)
    return lhs == rhs
