"""Analysis driver and the exact, serializable analysis report."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from .ballintegrals import UNIT_BALL, DomainSpec
from .criterion import (Classification, classify, invariant_I, invariant_K, matrix_A)
from .parser import parse_function
from .qpolynomial import QFunction
from .regularity import check_fueter, check_harmonic, check_psi

SCHEMA_VERSION = 1


def _rat(x: Fraction) -> str:
    return str(Fraction(x))


@dataclass(frozen=True)
class AnalysisReport:
    input: str
    normal_form: str
    domain: str
    fueter_regular: bool
    psi_regular: bool
    harmonic: bool
    energy: Fraction
    A: tuple[tuple[Fraction, ...], ...]
    trace: Fraction
    shifted_det: Fraction
    K: Fraction
    I: Fraction
    identity_residual: Fraction
    classification: str
    structure_set: str
    directions: tuple[tuple[int, int, int], ...]
    normal: tuple[int, int, int] | None
    description: str
    approximations: dict | None = field(default=None, compare=True)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["schema_version"] = SCHEMA_VERSION
        for key in ("energy", "trace", "shifted_det", "K", "I", "identity_residual"):
            d[key] = _rat(d[key])
        d["A"] = [[_rat(x) for x in row] for row in self.A]
        d["directions"] = [list(v) for v in self.directions]
        d["normal"] = list(self.normal) if self.normal is not None else None
        if self.approximations is None:
            del d["approximations"]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "AnalysisReport":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        d = dict(d)
        d.pop("schema_version")
        for key in ("energy", "trace", "shifted_det", "K", "I", "identity_residual"):
            d[key] = Fraction(d[key])
        d["A"] = tuple(tuple(Fraction(x) for x in row) for row in d["A"])
        d["directions"] = tuple(tuple(v) for v in d["directions"])
        d["normal"] = tuple(d["normal"]) if d["normal"] is not None else None
        return cls(**d)

    @classmethod
    def from_json(cls, text: str) -> "AnalysisReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        width = max(len(_rat(x)) for row in self.A for x in row)
        lines = [
            f"function      : {self.input}",
            f"normal form   : {self.normal_form}",
            f"domain        : {self.domain}",
            f"Fueter-regular: {'yes' if self.fueter_regular else 'no'}",
            f"psi-regular   : {'yes' if self.psi_regular else 'no'}",
            f"harmonic      : {'yes' if self.harmonic else 'no'}",
            f"energy E      : {_rat(self.energy)}",
            "matrix A      :",
        ]
        lines += ["    [ " + "  ".join(_rat(x).rjust(width) for x in row) + " ]" for row in self.A]
        lines += [
            f"tr A          : {_rat(self.trace)}",
            f"det(A - trA I): {_rat(self.shifted_det)}",
            f"K(f)          : {_rat(self.K)}",
            f"I(f)          : {_rat(self.I)}",
            f"E + K - I/4   : {_rat(self.identity_residual)}",
            f"type          : {self.classification}",
            f"J(f)          : {self.description}",
        ]
        if self.approximations:
            lines.append("approximations (floating point, not exact):")
            for key, value in self.approximations.items():
                lines.append(f"    {key} ~ {value}")
        return "\n".join(lines)


def analyze(function: QFunction | str, domain: DomainSpec = UNIT_BALL,
            approximate: bool = False) -> AnalysisReport:
    """Run every check and the classification on one function."""
    if isinstance(function, str):
        source, f = function, parse_function(function)
    else:
        source, f = function.to_string(), function
    em = matrix_A(f, domain)
    cls: Classification = classify(f, domain, em)
    k, i = invariant_K(f, domain), invariant_I(f, domain)
    approx = None
    if approximate:
        approx = {
            "energy": float(em.energy),
            "eigenvalues": [round(float(x), 12) for x in em.eigenvalues()],
        }
    return AnalysisReport(
        input=source,
        normal_form=f.to_string(),
        domain=domain.describe(),
        fueter_regular=check_fueter(f).holds,
        psi_regular=check_psi(f).holds,
        harmonic=check_harmonic(f).holds,
        energy=em.energy,
        A=em.A,
        trace=em.trace,
        shifted_det=em.shifted_det,
        K=k,
        I=i,
        identity_residual=em.energy + k - i / 4,
        classification=cls.type,
        structure_set=cls.structure_set,
        directions=cls.directions,
        normal=cls.normal,
        description=cls.describe(),
        approximations=approx,
    )
