"""Property suites shared by the CLI and the acceptance tests.

Each suite returns a :class:`SuiteResult` listing one labelled check per
(code, generator, genus) or similar case, so failures can be reported
individually rather than as a single boolean.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .classify import enumerate_sdde
from .clifford import act, check_xp_lemma, closure_generators
from .codes import LinearCode, dual, subcodes_with_allones
from .enumerators import ccwe, fwe, macwilliams_transform, nu_by_inversion, nu_direct

__all__ = [
    "SuiteResult",
    "SUITES",
    "run_suite",
    "invariance_suite",
    "macwilliams_suite",
    "mobius_suite",
    "xp_lemma_suite",
    "random_code",
]


@dataclass
class SuiteResult:
    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    @property
    def failures(self) -> list[str]:
        return [label for label, ok in self.checks if not ok]

    def add(self, label: str, ok: bool):
        self.checks.append((label, bool(ok)))

    def to_text(self) -> str:
        lines = [f"{'PASS' if ok else 'FAIL'} {self.name}: {label}" for label, ok in self.checks]
        passed = sum(ok for _, ok in self.checks)
        lines.append(f"{self.name}: {passed}/{len(self.checks)} passed")
        return "\n".join(lines) + "\n"

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "passed": sum(ok for _, ok in self.checks),
            "total": len(self.checks),
            "ok": self.ok,
            "failures": self.failures,
        }


def _label(C: LinearCode) -> str:
    return f"({C.n1},{C.n2}) dim {C.dim} [" + " ".join(str(w) for w in C.basis) + "]"


def invariance_suite(splits=((1, 1), (2, 2), (3, 3), (4, 4)), genera=(1, 2)) -> SuiteResult:
    res = SuiteResult("invariance")
    for m in genera:
        gens = closure_generators(m)
        for n1, n2 in splits:
            for k, cls in enumerate(enumerate_sdde(n1, n2)):
                p = ccwe(cls.representative, m)
                for gi, g in enumerate(gens):
                    res.add(f"m={m} ({n1},{n2}) class {k} generator {gi}", act(g, p) == p)
    return res


def random_code(rng: random.Random, n_max: int = 8) -> LinearCode:
    n = rng.randint(1, n_max)
    n1 = rng.randint(0, n)
    k = rng.randint(0, n)
    return LinearCode.span(n1, n - n1, [rng.getrandbits(n) for _ in range(k)])


def macwilliams_suite(samples: int = 40, seed: int = 2024, genera=(1, 2)) -> SuiteResult:
    res = SuiteResult("macwilliams")
    rng = random.Random(seed)
    corpus = [random_code(rng) for _ in range(samples)]
    for i, C in enumerate(corpus):
        D = dual(C)
        for m in genera:
            v = fwe(C, m)
            w = macwilliams_transform(v, C.size**m)
            res.add(f"code {i} {_label(C)} m={m} dual", w == fwe(D, m))
            back = macwilliams_transform(w, D.size**m)
            res.add(f"code {i} m={m} involution", back == v)
    return res


def mobius_suite(splits=((4, 4), (5, 5)), genera=(1, 2)) -> SuiteResult:
    res = SuiteResult("mobius")
    for n1, n2 in splits:
        for k, cls in enumerate(enumerate_sdde(n1, n2)):
            for D in subcodes_with_allones(cls.representative):
                for m in genera:
                    res.add(
                        f"({n1},{n2}) class {k} {_label(D)} m={m}",
                        nu_by_inversion(D, m) == nu_direct(D, m),
                    )
    return res


def xp_lemma_suite(
    splits=((4, 4),), genera=(1, 2), coefficient: str = "all-overcodes"
) -> SuiteResult:
    """All doubly-even self-orthogonal codes between <1> and each class."""
    res = SuiteResult(f"xp-lemma[{coefficient}]")
    for n1, n2 in splits:
        for k, cls in enumerate(enumerate_sdde(n1, n2)):
            for C in subcodes_with_allones(cls.representative):
                r = C.n // 2 - C.dim
                for m in genera:
                    res.add(
                        f"({n1},{n2}) class {k} {_label(C)} r={r} m={m}",
                        check_xp_lemma(C, m, coefficient=coefficient),
                    )
    return res


SUITES = {
    "invariance": invariance_suite,
    "macwilliams": macwilliams_suite,
    "mobius": mobius_suite,
    "xp-lemma": xp_lemma_suite,
}


def run_suite(name: str, **kw) -> list[SuiteResult]:
    if name == "all":
        return [run_suite(s, **(kw if s == "xp-lemma" else {}))[0] for s in SUITES]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name](**kw)]


def results_to_json(results: list[SuiteResult]) -> str:
    return json.dumps([r.to_dict() for r in results], indent=2)
