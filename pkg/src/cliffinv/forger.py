"""Bivariate Molien-type (Forger) series of a finite matrix group.

The coefficient of t^N1 tb^N2 is the dimension of the degree-(N1, N2)
conjugate invariants:

    (1/|G|) sum_g [t^N1] 1/det(I - t g) * conj([tb^N2] 1/det(I - tb g)).

Group elements sharing a characteristic polynomial contribute identically,
so the sum runs over distinct characteristic polynomials with multiplicity.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from itertools import permutations

import numpy as np

from .clifford import GroupList, UnitaryMatrix, _zmatmul
from .cyclo import Cyclo8, as_rational

__all__ = [
    "BiSeries",
    "char_poly",
    "char_polys_batched",
    "series_reciprocal",
    "forger_series",
    "compare_with_codes",
    "ComparisonReport",
    "golden_series",
]


@dataclass
class BiSeries:
    truncation: tuple[int, int]
    coeff: list[list[Fraction]]

    @classmethod
    def zeros(cls, T1: int, T2: int) -> BiSeries:
        return cls((T1, T2), [[Fraction(0)] * (T2 + 1) for _ in range(T1 + 1)])

    @classmethod
    def from_terms(cls, terms: dict, T1: int, T2: int) -> BiSeries:
        s = cls.zeros(T1, T2)
        for (a, b), c in terms.items():
            if a <= T1 and b <= T2:
                s.coeff[a][b] = Fraction(c)
        return s

    def __getitem__(self, idx: tuple[int, int]) -> Fraction:
        a, b = idx
        return self.coeff[a][b]

    def terms(self) -> dict[tuple[int, int], Fraction]:
        T1, T2 = self.truncation
        return {
            (a, b): self.coeff[a][b]
            for a in range(T1 + 1)
            for b in range(T2 + 1)
            if self.coeff[a][b]
        }

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiSeries):
            return NotImplemented
        return self.truncation == other.truncation and self.coeff == other.coeff

    def is_integral(self) -> bool:
        return all(c.denominator == 1 and c >= 0 for row in self.coeff for c in row)

    def is_hermitian(self) -> bool:
        T1, T2 = self.truncation
        k = min(T1, T2)
        return all(self.coeff[a][b] == self.coeff[b][a] for a in range(k + 1) for b in range(k + 1))

    def to_csv(self) -> str:
        T1, T2 = self.truncation
        rows = ["N1,N2,coefficient"]
        for a in range(T1 + 1):
            for b in range(T2 + 1):
                rows.append(f"{a},{b},{self.coeff[a][b]}")
        return "\n".join(rows) + "\n"

    def render(self) -> str:
        """Diagonal terms by degree, then t^a tb^b with a != b; e.g. ``1 + t*tb + t^8 + tb^8``."""
        items = sorted(self.terms().items(), key=lambda kv: _term_order(*kv[0]))
        parts = []
        for (a, b), c in items:
            mono = "*".join(
                [p for p in (_pow("t", a), _pow("tb", b)) if p]
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts) if parts else "0"

    @classmethod
    def parse(cls, text: str, T1: int, T2: int) -> BiSeries:
        terms: dict = {}
        for part in text.strip().split(" + "):
            coef = Fraction(1)
            a = b = 0
            for factor in part.strip().split("*"):
                m = _FACTOR_RE.fullmatch(factor)
                if m is None:
                    coef *= Fraction(factor)
                    continue
                e = int(m.group(2) or 1)
                if m.group(1) == "tb":
                    b += e
                else:
                    a += e
            terms[(a, b)] = terms.get((a, b), 0) + coef
        return cls.from_terms(terms, T1, T2)


_FACTOR_RE = re.compile(r"(tb|t)(?:\^(\d+))?")


def _term_order(a: int, b: int):
    return (a != b, a + b, -a)


def _pow(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


# ------------------------------------------------------------------ kernels


def char_poly(U: UnitaryMatrix) -> list[Cyclo8]:
    """Coefficients of det(I - tU) in t, by Leibniz expansion over Cyclo8."""
    q = U.size
    E = U.entries
    total = [Cyclo8()] * (q + 1)
    for perm in permutations(range(q)):
        sign = _perm_sign(perm)
        poly = [Cyclo8(sign)]
        for i in range(q):
            j = perm[i]
            factor = [Cyclo8(1 if i == j else 0), -E[i][j]]
            poly = _poly_mul(poly, factor)
        total = [x + y for x, y in zip(total, poly + [Cyclo8()] * (q + 1 - len(poly)))]
    return total


def _perm_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                sign = -sign
    return sign


def _poly_mul(p, q):
    out = [Cyclo8()] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return out


def char_polys_batched(nums: np.ndarray) -> np.ndarray:
    """Integer coefficients of det(I - tA) for a stack of Z[zeta_8] matrices.

    Faddeev-LeVerrier: returns shape (N, q+1, 4); every division is exact
    because the coefficients are algebraic integers of Q(zeta_8).
    """
    N, q = nums.shape[0], nums.shape[1]
    M = np.zeros_like(nums)
    M[:, np.arange(q), np.arange(q), 0] = 1
    out = np.zeros((N, q + 1, 4), dtype=np.int64)
    out[:, 0, 0] = 1
    for k in range(1, q + 1):
        AM = _zmatmul(nums, M)
        tr = AM[:, np.arange(q), np.arange(q), :].sum(axis=1)
        if (tr % k).any():
            raise ArithmeticError("non-integral characteristic coefficient")
        ck = -tr // k
        out[:, k] = ck
        M = AM
        M[:, np.arange(q), np.arange(q), :] += ck[:, None, :]
    return out


def series_reciprocal(p, T: int) -> list[Cyclo8]:
    """Power series q with p*q = 1 mod t^(T+1); requires p[0] = 1."""
    p = [x if isinstance(x, Cyclo8) else Cyclo8(x) for x in p]
    if p[0] != 1:
        raise ValueError("constant term must be 1")
    q = [Cyclo8(1)]
    for k in range(1, T + 1):
        acc = Cyclo8()
        for j in range(1, min(k, len(p) - 1) + 1):
            acc = acc + p[j] * q[k - j]
        q.append(-acc)
    return q


def forger_series(G: GroupList, T1: int = 8, T2: int = 8) -> BiSeries:
    cp = char_polys_batched(G.nums)
    keys = np.concatenate([G.dens[:, None], cp.reshape(len(G), -1)], axis=1)
    uniq, counts = np.unique(keys, axis=0, return_counts=True)
    T = max(T1, T2)
    acc = [[Cyclo8()] * (T2 + 1) for _ in range(T1 + 1)]
    for row, cnt in zip(uniq.tolist(), counts.tolist()):
        den = row[0]
        coeffs = np.asarray(row[1:]).reshape(-1, 4)
        p = [Cyclo8.from_ints(c, den**k) for k, c in enumerate(coeffs.tolist())]
        s = series_reciprocal(p, T)
        sbar = [x.conj() for x in s]
        for a in range(T1 + 1):
            if not s[a]:
                continue
            sa = s[a] * cnt
            for b in range(T2 + 1):
                acc[a][b] = acc[a][b] + sa * sbar[b]
    N = len(G)
    out = BiSeries.zeros(T1, T2)
    for a in range(T1 + 1):
        for b in range(T2 + 1):
            out.coeff[a][b] = as_rational(acc[a][b]) / N
    return out


# ------------------------------------------------------------------ comparison


@dataclass
class ComparisonReport:
    m: int
    violations: list[str] = field(default_factory=list)
    equalities: list[tuple[int, int]] = field(default_factory=list)
    observations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def compare_with_codes(
    series: BiSeries, counts: dict, m: int, next_series: BiSeries | None = None
) -> ComparisonReport:
    """Check alpha_m <= a, equality when m+1 >= (N1+N2)/2, and alpha_m <= alpha_(m+1)."""
    rep = ComparisonReport(m)
    T1, T2 = series.truncation
    for a in range(T1 + 1):
        for b in range(T2 + 1):
            alpha = series[a, b]
            if (a, b) in counts:
                code_count = counts[(a, b)]
                if alpha > code_count:
                    rep.violations.append(f"alpha_{m}({a},{b}) = {alpha} > a = {code_count}")
                if 2 * (m + 1) >= a + b:
                    if alpha != code_count:
                        rep.violations.append(
                            f"alpha_{m}({a},{b}) = {alpha} != a = {code_count} in the basis range"
                        )
                    else:
                        rep.equalities.append((a, b))
                elif alpha == code_count and code_count:
                    rep.observations.append(
                        f"alpha_{m}({a},{b}) = a = {code_count} outside the basis range"
                    )
            if next_series is not None and alpha > next_series[a, b]:
                rep.violations.append(
                    f"alpha_{m}({a},{b}) = {alpha} > alpha_{m + 1} = {next_series[a, b]}"
                )
    return rep


def golden_series(m: int) -> BiSeries:
    """Reference (8,8)-window series for genus 1 or 2, shipped as package data."""
    text = resources.files("cliffinv").joinpath("data").joinpath(f"forger_x{m}.txt").read_text()
    return BiSeries.parse(text, 8, 8)
