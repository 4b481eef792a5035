"""Interval verdicts for non-strict inequalities between enclosed values."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from ..series import EPS, Approximation


class Outcome(enum.Enum):
    CERTIFIED = "certified"
    VIOLATED = "violated"
    INCONCLUSIVE = "inconclusive"


class Direction(enum.Enum):
    AS_STATED = "as-stated"
    NEGATED = "negated"


@dataclass(frozen=True)
class Verdict:
    tag: Outcome
    margin: float


@dataclass(frozen=True)
class Constituent:
    """The claim ``lhs <= rhs``.

    ``identical`` marks the two sides as the same expression at the same
    arguments, so the claim holds with zero slack whatever the bounds are.
    """

    lhs: Approximation
    rhs: Approximation
    label: str = ""
    identical: bool = False

    def slack(self, direction: Direction = Direction.AS_STATED) -> tuple[float, float]:
        """(pessimistic, optimistic) slack of the claim after widening."""
        if self.identical:
            return 0.0, 0.0
        lhs, rhs = self.lhs, self.rhs
        if direction is Direction.NEGATED:
            lhs, rhs = rhs, lhs
        d = rhs.value - lhs.value
        r = lhs.error_bound + rhs.error_bound + EPS * (abs(lhs.value) + abs(rhs.value))
        return d - r, d + r


def judge(constituents: Iterable[Constituent], direction: Direction = Direction.AS_STATED) -> Verdict:
    """Combine constituent claims into one verdict.

    Certified when every claim survives widening against it, Violated when
    some claim fails even when widened in its favour, else Inconclusive.  The
    margin is the smallest pessimistic slack.
    """
    margin = float("inf")
    certified = True
    violated = False
    for c in constituents:
        pess, opt = c.slack(direction)
        margin = min(margin, pess)
        if pess < 0.0:
            certified = False
        if opt < 0.0:
            violated = True
    if violated:
        return Verdict(Outcome.VIOLATED, margin)
    if certified:
        return Verdict(Outcome.CERTIFIED, margin)
    return Verdict(Outcome.INCONCLUSIVE, margin)
