"""Sparse conjugate polynomials in x_f, xbar_f (f in F_2^m) over Q(zeta_8)."""
from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

from .cyclo import Cyclo8

__all__ = ["ConjMonomial", "ConjPolynomial"]


class ConjMonomial(NamedTuple):
    """Exponents of x_f (``a``) and xbar_f (``b``), indexed by f as an integer.

    f's bitstring of length m has row 1 as its leading character.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def degree(self) -> tuple[int, int]:
        return (sum(self.a), sum(self.b))

    @property
    def genus(self) -> int:
        return max(len(self.a).bit_length() - 1, 0)

    def __str__(self) -> str:
        m = self.genus
        parts = [f"x[{_fstr(f, m)}]^{e}" for f, e in enumerate(self.a) if e]
        parts += [f"xbar[{_fstr(f, m)}]^{e}" for f, e in enumerate(self.b) if e]
        return " ".join(parts)


def _fstr(f: int, m: int) -> str:
    return format(f, f"0{m}b") if m else ""


def _scalar(c) -> Cyclo8:
    return c if isinstance(c, Cyclo8) else Cyclo8(c)


class ConjPolynomial:
    __slots__ = ("m", "degree", "terms")

    def __init__(self, m: int, degree: tuple[int, int], terms: Mapping | None = None):
        self.m = m
        self.degree = tuple(degree)
        clean = {}
        for mono, c in (terms or {}).items():
            c = _scalar(c)
            if c:
                if mono.degree != self.degree:
                    raise ValueError(f"monomial {mono} not of degree {self.degree}")
                clean[mono] = c
        self.terms: dict[ConjMonomial, Cyclo8] = clean

    @classmethod
    def _trusted(cls, m, degree, terms) -> ConjPolynomial:
        obj = cls.__new__(cls)
        obj.m, obj.degree = m, tuple(degree)
        obj.terms = {k: v for k, v in terms.items() if v}
        return obj

    @classmethod
    def constant(cls, m: int, c=1) -> ConjPolynomial:
        z = (0,) * (1 << m)
        return cls(m, (0, 0), {ConjMonomial(z, z): c})

    @classmethod
    def zero(cls, m: int, degree=(0, 0)) -> ConjPolynomial:
        return cls(m, degree, {})

    @classmethod
    def variable(cls, m: int, f: int, bar: bool = False) -> ConjPolynomial:
        e = [0] * (1 << m)
        e[f] = 1
        z = (0,) * (1 << m)
        mono = ConjMonomial(z, tuple(e)) if bar else ConjMonomial(tuple(e), z)
        return cls(m, mono.degree, {mono: 1})

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, mono: ConjMonomial) -> Cyclo8:
        return self.terms.get(mono, Cyclo8())

    def coefficient_sum(self) -> Cyclo8:
        return sum(self.terms.values(), Cyclo8())

    def items(self):
        return sorted(self.terms.items())

    def _check(self, other: ConjPolynomial):
        if self.m != other.m:
            raise ValueError("genus mismatch")
        if self.degree != other.degree and self.terms and other.terms:
            raise ValueError(f"degree mismatch {self.degree} vs {other.degree}")

    def __add__(self, other):
        if not isinstance(other, ConjPolynomial):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out[k] + v if k in out else v
        deg = self.degree if self.terms else other.degree
        return ConjPolynomial._trusted(self.m, deg, out)

    def __neg__(self):
        return ConjPolynomial._trusted(
            self.m, self.degree, {k: -v for k, v in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> ConjPolynomial:
        c = _scalar(c)
        return ConjPolynomial._trusted(
            self.m, self.degree, {k: v * c for k, v in self.terms.items()}
        )

    def __mul__(self, other):
        if isinstance(other, ConjPolynomial):
            if self.m != other.m:
                raise ValueError("genus mismatch")
            out: dict = {}
            for k1, v1 in self.terms.items():
                for k2, v2 in other.terms.items():
                    k = ConjMonomial(
                        tuple(x + y for x, y in zip(k1.a, k2.a)),
                        tuple(x + y for x, y in zip(k1.b, k2.b)),
                    )
                    p = v1 * v2
                    out[k] = out[k] + p if k in out else p
            deg = (self.degree[0] + other.degree[0], self.degree[1] + other.degree[1])
            return ConjPolynomial._trusted(self.m, deg, out)
        if isinstance(other, (int, Fraction, Cyclo8)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, Cyclo8)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, e: int):
        out = ConjPolynomial.constant(self.m)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, ConjPolynomial):
            return NotImplemented
        return self.m == other.m and self.terms == other.terms

    def __repr__(self) -> str:
        return f"ConjPolynomial(m={self.m}, degree={self.degree}, terms={len(self.terms)})"

    # ------------------------------------------------------------ text / json

    def to_text(self) -> str:
        lines = []
        for mono, c in self.items():
            s = str(mono)
            lines.append(f"{c.short_str()} * {s}" if s else c.short_str())
        return "\n".join(lines) + ("\n" if lines else "")

    @classmethod
    def from_text(cls, text: str, m: int) -> ConjPolynomial:
        terms: dict = {}
        degree = None
        for line in text.splitlines():
            line = line.strip()
            if not line:
                continue
            coef_s, _, mono_s = line.partition(" * ")
            coef = _parse_coef(coef_s)
            a = [0] * (1 << m)
            b = [0] * (1 << m)
            for name, f, e in _VAR_RE.findall(mono_s):
                idx = int(f, 2) if f else 0
                (b if name == "xbar" else a)[idx] += int(e)
            mono = ConjMonomial(tuple(a), tuple(b))
            degree = mono.degree
            terms[mono] = terms.get(mono, Cyclo8()) + coef
        return cls(m, degree or (0, 0), terms)

    def to_json(self) -> str:
        rows = []
        for mono, c in self.items():
            rows.append(
                {
                    "coef": c.short_str(),
                    "x": {_fstr(f, self.m): e for f, e in enumerate(mono.a) if e},
                    "xbar": {_fstr(f, self.m): e for f, e in enumerate(mono.b) if e},
                }
            )
        return json.dumps(
            {"genus": self.m, "degree": list(self.degree), "terms": rows}, indent=2
        )

    @classmethod
    def from_json(cls, text: str) -> ConjPolynomial:
        data = json.loads(text)
        m = data["genus"]
        terms = {}
        for row in data["terms"]:
            a = [0] * (1 << m)
            b = [0] * (1 << m)
            for f, e in row["x"].items():
                a[int(f, 2) if f else 0] = e
            for f, e in row["xbar"].items():
                b[int(f, 2) if f else 0] = e
            terms[ConjMonomial(tuple(a), tuple(b))] = _parse_coef(row["coef"])
        return cls(m, tuple(data["degree"]), terms)


_VAR_RE = re.compile(r"(xbar|x)\[([01]*)\]\^(\d+)")


def _parse_coef(s: str) -> Cyclo8:
    s = s.strip()
    if s.startswith("("):
        return Cyclo8.parse(s[1:-1])
    return Cyclo8(Fraction(s))


def monomials_from_columns(cols: Iterable[int], n1: int, m: int) -> ConjMonomial:
    a = [0] * (1 << m)
    b = [0] * (1 << m)
    for j, f in enumerate(cols):
        if j < n1:
            a[f] += 1
        else:
            b[f] += 1
    return ConjMonomial(tuple(a), tuple(b))
