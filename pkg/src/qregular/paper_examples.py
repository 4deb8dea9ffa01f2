"""Built-in regression table of the published examples and remarks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .ballintegrals import UNIT_BALL
from .criterion import (TYPE_II, TYPE_III, TYPE_IV, classify, matrix_A)
from .parser import parse_function
from .qpolynomial import jacobian_complex, matrix_rank_at
from .regularity import check_holomorphic_p, check_psi

F = Fraction


@dataclass
class CaseResult:
    name: str
    passed: bool
    failures: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        detail = "" if self.passed else "  (" + "; ".join(self.failures) + ")"
        return f"[{status}] {self.name}{detail}"


class _Recorder:
    def __init__(self):
        self.failures: list[str] = []

    def expect(self, label: str, expected, computed):
        if expected != computed:
            self.failures.append(f"{label}: expected {expected}, computed {computed}")


def _matrix(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


def _energy_case(text, energy, a, kind, direction=None):
    def run(rec: _Recorder):
        f = parse_function(text)
        em = matrix_A(f, UNIT_BALL)
        rec.expect("energy", F(energy), em.energy)
        rec.expect("matrix A", _matrix(a), em.A)
        cls = classify(f, UNIT_BALL, em)
        rec.expect("type", kind, cls.type)
        if direction is not None:
            rec.expect("direction", direction, cls.directions[0] if cls.directions else None)
            rec.expect("Hol_p direct check", True, check_holomorphic_p(f, direction).holds)
    return run


def _odd_rank(rec: _Recorder):
    g = parse_function("z1 + conj(z1) + conj(z2)*j")
    rec.expect("psi-regular", True, check_psi(g).holds)
    rec.expect("rank of J_C", 3, matrix_rank_at(jacobian_complex(g)))
    rec.expect("type", TYPE_IV, classify(g).type)


def _remark_1(rec: _Recorder):
    ident = parse_function("z1 + z2*j")
    for w, expected in (((1, 0, 0), True), ((0, 1, 0), True), ((0, 0, 1), False)):
        rec.expect(f"identity in Hol{w}", expected, check_holomorphic_p(ident, w).holds)


def _remark_2(rec: _Recorder):
    for text, ws in (("z1 + z2*j", [(1, 0, 0), (0, 0, 1), (1, 2, 3)]),
                     ("conj(z1) + (z1 + conj(z2))*j", [(1, 0, 2), (2, 0, 1)])):
        f = parse_function(text)
        for w in ws:
            neg = tuple(-x for x in w)
            rec.expect(f"Hol{w} == Hol{neg} for {text}",
                       check_holomorphic_p(f, w).holds, check_holomorphic_p(f, neg).holds)


def _remark_3(rec: _Recorder):
    ident = parse_function("z1 + z2*j")
    for w in ((1, 1, 0), (3, -2, 0), (1, 5, 0)):
        rec.expect(f"identity in Hol{w}", True, check_holomorphic_p(ident, w).holds)


def _remark_4(rec: _Recorder):
    f = parse_function("conj(z1) + conj(z2)*j")
    rec.expect("Hol_j", True, check_holomorphic_p(f, (0, 1, 0)).holds)
    rec.expect("Hol_k", True, check_holomorphic_p(f, (0, 0, 1)).holds)
    rec.expect("type", TYPE_II, classify(f).type)
    g = parse_function("conj(z1)")
    rec.expect("conj(z1) psi-regular", False, check_psi(g).holds)


PAPER_CASES: list[tuple[str, Callable[[_Recorder], None]]] = [
    ("example 1: z1+z2+conj(z1)+(z1+z2+conj(z2))j",
     _energy_case("z1 + z2 + conj(z1) + (z1 + z2 + conj(z2))*j", 6,
                  [[2, 0, 0], [0, 2, 0], [0, 0, 2]], TYPE_IV)),
    ("positive example: h = conj(z1)+(z1+conj(z2))j",
     _energy_case("conj(z1) + (z1 + conj(z2))*j", 3,
                  [[-1, 0, 2], [0, 2, 0], [2, 0, 2]], TYPE_III, (1, 0, 2))),
    ("quadratic example: |z1|^2-|z2|^2+conj(z1)conj(z2)j",
     _energy_case("z1*conj(z1) - z2*conj(z2) + conj(z1)*conj(z2)*j", 2,
                  [[F(-2, 3), 0, 0], [0, F(4, 3), 0], [0, 0, F(4, 3)]], TYPE_IV)),
    ("odd-rank example: z1+conj(z1)+conj(z2)j", _odd_rank),
    ("remark 1: identity in Hol_i and Hol_j, not Hol_k", _remark_1),
    ("remark 2: Hol_{-p} = Hol_p", _remark_2),
    ("remark 3: identity in Hol_p for p in span(i, j)", _remark_3),
    ("remark 4: conj(z1)+conj(z2)j in Hol_j and Hol_k; conj(z1) not psi-regular", _remark_4),
]


def run_paper_examples() -> list[CaseResult]:
    results = []
    for name, case in PAPER_CASES:
        rec = _Recorder()
        try:
            case(rec)
        except Exception as exc:  # a crash is a failed case, not an aborted run
            rec.failures.append(f"error: {exc}")
        results.append(CaseResult(name, not rec.failures, rec.failures))
    return results
