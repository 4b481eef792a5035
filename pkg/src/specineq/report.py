"""Machine-readable report documents."""
from __future__ import annotations

import datetime as _dt
import json
import math
from dataclasses import dataclass, field
from typing import Optional, Union

from .harness.cases import CaseId
from .harness.scan import CheckReport
from .series import Approximation

SCHEMA_VERSION = "1"


@dataclass(frozen=True)
class EvalRecord:
    """One function evaluation and its enclosure."""

    function: str
    t: float
    tol: float
    approximation: Approximation
    params: dict[str, float] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "type": "evaluation",
            "function": self.function,
            "params": dict(self.params),
            "t": self.t,
            "tol": self.tol,
            "value": self.approximation.value,
            "error_bound": self.approximation.error_bound,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "EvalRecord":
        return cls(d["function"], d["t"], d["tol"],
                   Approximation(d["value"], d["error_bound"]), dict(d["params"]))


@dataclass
class CaseSection:
    """All reports produced for one catalog case."""

    case: CaseId
    citation: str
    reports: list[CheckReport]

    def to_dict(self) -> dict:
        return {
            "type": "case",
            "case": self.case.value,
            "citation": self.citation,
            "reports": [r.to_dict() for r in self.reports],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CaseSection":
        return cls(CaseId.parse(d["case"]), d["citation"],
                   [CheckReport.from_dict(r) for r in d["reports"]])


Record = Union[EvalRecord, CaseSection]
_RECORD_TYPES = {"evaluation": EvalRecord, "case": CaseSection}


def utc_now() -> str:
    return _dt.datetime.now(_dt.timezone.utc).isoformat(timespec="seconds").replace("+00:00", "Z")


@dataclass
class ReportDocument:
    invocation: list[str]
    results: list[Record] = field(default_factory=list)
    timestamp: str = field(default_factory=utc_now)
    schema_version: str = SCHEMA_VERSION

    def to_dict(self) -> dict:
        return {
            "schema_version": self.schema_version,
            "timestamp": self.timestamp,
            "invocation": list(self.invocation),
            "results": [r.to_dict() for r in self.results],
        }

    def dumps(self) -> str:
        # repr-based float output is the shortest string that round-trips,
        # never more than 17 significant digits
        return json.dumps(self.to_dict(), indent=2, allow_nan=False) + "\n"

    @classmethod
    def from_dict(cls, d: dict) -> "ReportDocument":
        if d.get("schema_version") != SCHEMA_VERSION:
            raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
        results = [_RECORD_TYPES[r["type"]].from_dict(r) for r in d["results"]]
        return cls(list(d["invocation"]), results, d["timestamp"], d["schema_version"])

    @classmethod
    def loads(cls, text: str) -> "ReportDocument":
        return cls.from_dict(json.loads(text))

    def check_reports(self) -> list[CheckReport]:
        return [r for s in self.results if isinstance(s, CaseSection) for r in s.reports]


def exit_status(reports: list[CheckReport]) -> int:
    """0 when nothing is Violated and something is Certified (or nothing ran),
    2 when anything is Violated, 3 when everything evaluated is Inconclusive."""
    violated = sum(r.violated for r in reports)
    certified = sum(r.certified for r in reports)
    inconclusive = sum(r.inconclusive for r in reports)
    if violated:
        return 2
    if inconclusive and not certified:
        return 3
    return 0


def fmt(x: Optional[float]) -> str:
    """Decimal rendering with 17 significant digits."""
    if x is None:
        return ""
    if math.isnan(x) or math.isinf(x):
        return repr(x)
    return "%.17g" % x
