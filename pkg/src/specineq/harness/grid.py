"""Parameter lattices for grid scans."""
from __future__ import annotations

import itertools
import math
import os
import re
from dataclasses import dataclass, field
from typing import Iterator, Mapping

import numpy as np

DEFAULT_BUDGET = 10 ** 6
BUDGET_ENV = "SPECINEQ_BUDGET"


class GridError(ValueError):
    """Malformed grid description."""


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"lattice has {required} points, budget is {budget}; "
                         f"raise {BUDGET_ENV} to at least {required}")
        self.required = required
        self.budget = budget


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(float(raw))
    except ValueError:
        raise GridError(f"{BUDGET_ENV} must be a number, got {raw!r}") from None
    if value < 1:
        raise GridError(f"{BUDGET_ENV} must be >= 1, got {raw!r}")
    return value


@dataclass(frozen=True)
class Axis:
    """Closed range sampled uniformly, or an explicit list of values."""

    lo: float
    hi: float
    count: int = 1
    values: tuple[float, ...] | None = field(default=None)

    def __post_init__(self):
        if self.values is not None:
            if not self.values:
                raise GridError("explicit axis needs at least one value")
            return
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise GridError("axis bounds must be finite")
        if self.lo > self.hi:
            raise GridError(f"axis lower bound {self.lo} exceeds upper bound {self.hi}")
        if self.count < 1:
            raise GridError("axis count must be >= 1")
        if self.count == 1 and self.lo != self.hi:
            raise GridError("a single-sample axis needs lo == hi")

    @classmethod
    def of(cls, *values: float) -> "Axis":
        vals = tuple(float(v) for v in values)
        return cls(min(vals), max(vals), len(vals), vals)

    def points(self) -> tuple[float, ...]:
        if self.values is not None:
            return self.values
        if self.count == 1:
            return (float(self.lo),)
        return tuple(float(v) for v in np.linspace(self.lo, self.hi, self.count))

    def __len__(self) -> int:
        return len(self.values) if self.values is not None else self.count

    def to_dict(self) -> dict:
        if self.values is not None:
            return {"values": list(self.values)}
        return {"lo": self.lo, "hi": self.hi, "count": self.count}

    @classmethod
    def from_dict(cls, d: Mapping) -> "Axis":
        if "values" in d:
            return cls.of(*d["values"])
        return cls(float(d["lo"]), float(d["hi"]), int(d["count"]))


@dataclass(frozen=True)
class GridSpec:
    axes: tuple[tuple[str, Axis], ...]

    @classmethod
    def build(cls, **axes: Axis) -> "GridSpec":
        return cls(tuple(axes.items()))

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.axes)

    def axis(self, name: str) -> Axis:
        for n, ax in self.axes:
            if n == name:
                return ax
        raise KeyError(name)

    @property
    def size(self) -> int:
        return math.prod(len(ax) for _, ax in self.axes)

    def check_budget(self, budget: int | None = None) -> None:
        budget = default_budget() if budget is None else budget
        if self.size > budget:
            raise BudgetExceeded(self.size, budget)

    def lattice(self) -> Iterator[dict[str, float]]:
        """Lattice points in index order (last axis varies fastest)."""
        names = self.names
        for combo in itertools.product(*(ax.points() for _, ax in self.axes)):
            yield dict(zip(names, combo))

    def replace(self, overrides: Mapping[str, Axis]) -> "GridSpec":
        unknown = set(overrides) - set(self.names)
        if unknown:
            raise GridError(f"unknown grid parameter(s): {', '.join(sorted(unknown))}; "
                            f"expected one of {', '.join(self.names)}")
        return GridSpec(tuple((n, overrides.get(n, ax)) for n, ax in self.axes))

    def to_dict(self) -> dict:
        return {name: ax.to_dict() for name, ax in self.axes}

    @classmethod
    def from_dict(cls, d: Mapping) -> "GridSpec":
        return cls(tuple((name, Axis.from_dict(ax)) for name, ax in d.items()))


_NUM = r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?"
_RANGE = re.compile(rf"^\s*({_NUM})\s*:\s*({_NUM})\s*:\s*(\d+)\s*$")


def parse_override(text: str) -> tuple[str, Axis]:
    """Parse ``name=lo:hi:count`` or ``name=v1,v2,...``."""
    name, sep, spec = text.partition("=")
    name = name.strip()
    if not sep or not name.isidentifier():
        raise GridError(f"grid override must look like name=lo:hi:count, got {text!r}")
    m = _RANGE.match(spec)
    if m:
        lo, hi, count = float(m.group(1)), float(m.group(2)), int(m.group(3))
        if count == 1 and lo != hi:
            raise GridError(f"{text!r}: a single-sample axis needs lo == hi")
        return name, Axis(lo, hi, count)
    parts = [s.strip() for s in spec.split(",")]
    if parts and all(re.fullmatch(_NUM, s) for s in parts):
        return name, Axis.of(*(float(s) for s in parts))
    raise GridError(f"grid override must look like name=lo:hi:count, got {text!r}")
