"""Grid scans, monotonicity scans and counterexample search."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from ..series import DEFAULT_TOL
from .cases import CaseId, get_case, check_point, member_value
from .grid import GridSpec
from .verdict import Constituent, Direction, Outcome, Verdict, judge

DEFAULT_WITNESS_CAP = 100


@dataclass
class CheckReport:
    case: CaseId
    grid: GridSpec
    tol: float
    direction: Direction = Direction.AS_STATED
    counts: dict[Outcome, int] = field(default_factory=lambda: {o: 0 for o in Outcome})
    skipped_hypothesis_failures: int = 0
    worst_margin: Optional[float] = None
    worst_point: Optional[dict[str, float]] = None
    witnesses: list[tuple[dict[str, float], float]] = field(default_factory=list)
    witness_cap: int = DEFAULT_WITNESS_CAP
    witnesses_dropped: int = 0
    kind: str = "points"

    @property
    def evaluated(self) -> int:
        return sum(self.counts.values())

    @property
    def violated(self) -> int:
        return self.counts[Outcome.VIOLATED]

    @property
    def certified(self) -> int:
        return self.counts[Outcome.CERTIFIED]

    @property
    def inconclusive(self) -> int:
        return self.counts[Outcome.INCONCLUSIVE]

    def record(self, point: dict[str, float], verdict: Optional[Verdict]) -> None:
        if verdict is None:
            self.skipped_hypothesis_failures += 1
            return
        self.counts[verdict.tag] += 1
        if self.worst_margin is None or verdict.margin < self.worst_margin:
            self.worst_margin = verdict.margin
            self.worst_point = dict(point)
        if verdict.tag is Outcome.VIOLATED:
            if len(self.witnesses) < self.witness_cap:
                self.witnesses.append((dict(point), verdict.margin))
            else:
                self.witnesses_dropped += 1

    def to_dict(self) -> dict:
        return {
            "case": self.case.value,
            "kind": self.kind,
            "direction": self.direction.value,
            "tol": self.tol,
            "grid": self.grid.to_dict(),
            "lattice_size": self.grid.size,
            "counts": {o.value: n for o, n in self.counts.items()},
            "skipped_hypothesis_failures": self.skipped_hypothesis_failures,
            "worst_margin": self.worst_margin,
            "worst_point": self.worst_point,
            "witnesses": [{"params": p, "margin": m} for p, m in self.witnesses],
            "witness_cap": self.witness_cap,
            "witnesses_dropped": self.witnesses_dropped,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            case=CaseId.parse(d["case"]),
            grid=GridSpec.from_dict(d["grid"]),
            tol=d["tol"],
            direction=Direction(d["direction"]),
            counts={Outcome(k): v for k, v in d["counts"].items()},
            skipped_hypothesis_failures=d["skipped_hypothesis_failures"],
            worst_margin=d["worst_margin"],
            worst_point=d["worst_point"],
            witnesses=[(w["params"], w["margin"]) for w in d["witnesses"]],
            witness_cap=d["witness_cap"],
            witnesses_dropped=d["witnesses_dropped"],
            kind=d.get("kind", "points"),
        )


def _resolve(case, grid: Optional[GridSpec]):
    c = get_case(case)
    grid = c.default_grid if grid is None else grid
    return c, grid


def iter_points(case: CaseId | str, grid: Optional[GridSpec] = None, tol: float = DEFAULT_TOL,
                direction: Direction = Direction.AS_STATED,
                budget: Optional[int] = None) -> Iterator[tuple[int, dict[str, float], Optional[Verdict]]]:
    """Yield (lattice index, point, verdict or None) in lattice order."""
    c, grid = _resolve(case, grid)
    grid.check_budget(budget)
    for i, point in enumerate(grid.lattice()):
        yield i, point, check_point(c.id, point, tol, direction)


def scan_grid(case: CaseId | str, grid: Optional[GridSpec] = None, tol: float = DEFAULT_TOL,
              direction: Direction = Direction.AS_STATED, budget: Optional[int] = None,
              witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Check every lattice point of ``grid`` (the case's default if omitted)."""
    c, grid = _resolve(case, grid)
    report = CheckReport(c.id, grid, tol, direction, witness_cap=witness_cap)
    for _, point, verdict in iter_points(c.id, grid, tol, direction, budget):
        report.record(point, verdict)
    return report


def search_counterexample(case: CaseId | str, direction: Direction = Direction.AS_STATED,
                          grid: Optional[GridSpec] = None, tol: float = DEFAULT_TOL,
                          budget: Optional[int] = None) -> Optional[tuple[dict[str, float], float]]:
    """First lattice point whose verdict is Violated, with its margin."""
    for _, point, verdict in iter_points(case, grid, tol, direction, budget):
        if verdict is not None and verdict.tag is Outcome.VIOLATED:
            return point, verdict.margin
    return None


def scan_monotonicity(case: CaseId | str, grid: Optional[GridSpec] = None, tol: float = DEFAULT_TOL,
                      budget: Optional[int] = None,
                      witness_cap: int = DEFAULT_WITNESS_CAP) -> CheckReport:
    """Check that a chain's underlying function is monotone along the t axis.

    The lattice of the remaining axes is scanned; at each of its points the
    function is evaluated at every t sample and consecutive samples are
    compared in the direction the statement asserts.  A point is skipped if
    the hypotheses fail at any t sample.
    """
    c, grid = _resolve(case, grid)
    if c.member is None:
        raise ValueError(f"{c.id.value} has no monotone member function")
    grid.check_budget(budget)
    ts = sorted(set(grid.axis("t").points()))
    reduced = GridSpec(tuple((n, ax) for n, ax in grid.axes if n != "t"))
    report = CheckReport(c.id, reduced, tol, witness_cap=witness_cap, kind="monotonicity")
    for point in reduced.lattice():
        values = [member_value(c.id, point, s, tol) for s in ts]
        if any(v is None for v in values):
            report.record(point, None)
            continue
        claims = []
        for (s0, v0), (s1, v1) in zip(zip(ts, values), zip(ts[1:], values[1:])):
            lhs, rhs = (v0, v1) if c.increasing else (v1, v0)
            claims.append(Constituent(lhs, rhs, f"t={s0!r} vs t={s1!r}"))
        report.record(point, judge(claims) if claims else Verdict(Outcome.CERTIFIED, 0.0))
    return report
