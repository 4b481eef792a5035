"""Error-bounded values and adaptively truncated series summation.

Every numerical result in the package is an :class:`Approximation`: a float
together with an absolute error bound that encloses the true value.  The
arithmetic helpers on it propagate bounds outward (first-order terms plus the
cross term plus one rounding of the result), so a chain of operations keeps a
rigorous enclosure as long as each input's enclosure is rigorous.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

EPS = 2.0 ** -52
EULER_GAMMA = 0.57721566490153286061  # OEIS A001620
DEFAULT_TOL = 1e-12
DEFAULT_N_MAX = 10 ** 8

# float(EULER_GAMMA) is within half an ulp of the constant
_GAMMA_ERR = 0.5 * EPS * EULER_GAMMA


class SeriesEvaluationError(ArithmeticError):
    """A series term evaluated to a non-finite number."""

    def __init__(self, index: int, value: float):
        super().__init__(f"non-finite series term at index {index}: {value!r}")
        self.index = index
        self.value = value


_SUBNORMAL_ULP = 2.0 ** -1074


def _round(x: float) -> float:
    # one rounding of a correctly rounded (or 1-ulp) elementary result; the
    # absolute term covers results in the subnormal range
    return EPS * abs(x) + _SUBNORMAL_ULP


@dataclass(frozen=True)
class Approximation:
    value: float
    error_bound: float = 0.0

    def __post_init__(self):
        if not math.isfinite(self.value):
            raise ValueError(f"value must be finite, got {self.value!r}")
        if not (self.error_bound >= 0.0 and math.isfinite(self.error_bound)):
            raise ValueError(f"error_bound must be finite and >= 0, got {self.error_bound!r}")

    @classmethod
    def exact(cls, value: float) -> "Approximation":
        return cls(float(value), 0.0)

    @property
    def lo(self) -> float:
        return self.value - self.error_bound

    @property
    def hi(self) -> float:
        return self.value + self.error_bound

    def contains(self, x: float) -> bool:
        return abs(x - self.value) <= self.error_bound

    def widen(self, extra: float) -> "Approximation":
        return Approximation(self.value, self.error_bound + extra)

    def certainly_positive(self) -> bool:
        return self.value - self.error_bound > 0.0

    # -- arithmetic with outward bound propagation --------------------------

    def __neg__(self) -> "Approximation":
        return Approximation(-self.value, self.error_bound)

    def __add__(self, other) -> "Approximation":
        other = _coerce(other)
        v = self.value + other.value
        return Approximation(v, self.error_bound + other.error_bound + _round(v))

    __radd__ = __add__

    def __sub__(self, other) -> "Approximation":
        other = _coerce(other)
        if other is self:
            return Approximation(0.0, 0.0)
        v = self.value - other.value
        return Approximation(v, self.error_bound + other.error_bound + _round(v))

    def __rsub__(self, other) -> "Approximation":
        return _coerce(other) - self

    def __mul__(self, other) -> "Approximation":
        other = _coerce(other)
        v = self.value * other.value
        err = (abs(self.value) * other.error_bound + abs(other.value) * self.error_bound
               + self.error_bound * other.error_bound)
        return Approximation(v, err + _round(v))

    __rmul__ = __mul__

    def __truediv__(self, other) -> "Approximation":
        other = _coerce(other)
        gap = abs(other.value) - other.error_bound
        if gap <= 0.0:
            raise ZeroDivisionError("divisor interval contains zero")
        v = self.value / other.value
        err = (self.error_bound + abs(v) * other.error_bound) / gap
        return Approximation(v, err + _round(v))

    def __rtruediv__(self, other) -> "Approximation":
        return _coerce(other) / self

    def exp(self) -> "Approximation":
        v = math.exp(self.value)
        return Approximation(v, v * math.expm1(self.error_bound) + _round(v))

    def log(self) -> "Approximation":
        if not self.certainly_positive():
            raise ValueError("log of an interval not certainly positive")
        v = math.log(self.value)
        err = -math.log1p(-self.error_bound / self.value)
        return Approximation(v, err + _round(v))

    def power(self, exponent: float) -> "Approximation":
        """``self ** exponent`` for a real exponent, via exp(exponent * log)."""
        return (self.log() * exponent).exp()


def _coerce(x) -> Approximation:
    if isinstance(x, Approximation):
        return x
    return Approximation(float(x), 0.0)


def euler_gamma() -> Approximation:
    return Approximation(EULER_GAMMA, _GAMMA_ERR)


@dataclass(frozen=True)
class TailBound:
    """Enclosure of the remainder ``sum(term(n) for n >= N)``.

    ``upper(N)`` must dominate the absolute remainder and be non-increasing in
    ``N``.  If ``lower`` is given the remainder is known to lie in
    ``[lower(N), upper(N)]``; the summation then adds the point
    ``lower + weight * (upper - lower)`` of that bracket and charges the
    distance to the farther end to the error bound.
    """

    upper: Callable[[int], float]
    lower: Optional[Callable[[int], float]] = None
    weight: float = 0.5

    def __call__(self, n: int) -> float:
        return self.upper(n)

    def enclose(self, n: int) -> tuple[float, float]:
        """Return (estimate, radius) of the remainder from index ``n``."""
        hi = self.upper(n)
        if self.lower is None:
            return 0.0, hi
        lo = self.lower(n)
        w = self.weight
        return lo + w * (hi - lo), max(w, 1.0 - w) * (hi - lo) + 2 * EPS * (abs(lo) + abs(hi))

    @classmethod
    def convex(cls, integral: Callable[[float], float], term: Callable[[float], float]) -> "TailBound":
        """Two-sided integral-test bracket for a positive, decreasing, convex term.

        ``integral(x)`` must return the improper integral of the term from ``x``
        to infinity.  Convexity gives ``f(n) <= int_{n-1/2}^{n+1/2} f`` (midpoint)
        and ``int_n^{n+1} f <= (f(n) + f(n+1))/2`` (trapezoid), hence::

            integral(N) + f(N)/2 <= sum_{n>=N} f(n) <= integral(N - 1/2)

        For smooth terms the remainder sits about two thirds of the way up
        this bracket (the gap to the lower end is ~|f'|/12 against a width
        of ~|f'|/8), so that point is used as the estimate.
        """
        return cls(upper=lambda n: integral(n - 0.5),
                   lower=lambda n: integral(float(n)) + 0.5 * term(float(n)),
                   weight=2.0 / 3.0)


def compensated_sum(terms) -> float:
    """Sum of ``terms`` rounded once (Shewchuk's exact accumulation)."""
    values = terms.tolist() if isinstance(terms, np.ndarray) else list(terms)
    for i, v in enumerate(values):
        if not math.isfinite(v):
            raise SeriesEvaluationError(i, v)
    return math.fsum(values)


def _first_index(radius: Callable[[int], float], start: int, tol: float, n_max: int) -> int:
    """Smallest N in (start, n_max] with radius(N) <= tol, else n_max."""
    lo, step = start, 1
    hi = start + step
    while radius(hi) > tol:
        if hi >= n_max:
            return n_max
        lo = hi
        step *= 2
        hi = min(start + step, n_max)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if radius(mid) <= tol:
            hi = mid
        else:
            lo = mid
    return hi


_CHUNK = 1 << 20


def sum_tail_bounded(
    term: Callable[[np.ndarray], np.ndarray],
    tail: TailBound,
    tol: float = DEFAULT_TOL,
    n_max: int = DEFAULT_N_MAX,
    *,
    start: int = 0,
    term_error: Optional[Callable[[np.ndarray, np.ndarray], np.ndarray]] = None,
    rel_term_error: float = 4 * EPS,
) -> Approximation:
    """Sum ``term(n)`` for ``n >= start`` with a certified truncation bound.

    ``term`` is called with integer index arrays and must return float arrays.
    Summation stops at the first ``N`` whose tail radius is at most ``tol``
    (terms ``start .. N-1`` are summed) or at ``n_max`` with whatever bound the
    tail gives there.  Per-term evaluation error defaults to ``rel_term_error``
    relative to each term; ``term_error(n, values)`` overrides it.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    if n_max <= start:
        raise ValueError("n_max must exceed start")

    n_stop = _first_index(lambda n: tail.enclose(n)[1], start, tol, n_max)

    partials: list[float] = []
    abs_total = 0.0
    term_err_total = 0.0
    for lo in range(start, n_stop, _CHUNK):
        idx = np.arange(lo, min(lo + _CHUNK, n_stop), dtype=np.float64)
        vals = np.asarray(term(idx), dtype=np.float64)
        bad = ~np.isfinite(vals)
        if bad.any():
            k = int(np.argmax(bad))
            raise SeriesEvaluationError(lo + k, float(vals[k]))
        partials.append(math.fsum(vals.tolist()))
        abs_total += float(np.abs(vals).sum())
        if term_error is not None:
            term_err_total += float(np.sum(term_error(idx, vals)))

    estimate, radius = tail.enclose(n_stop)
    value = math.fsum(partials + [estimate])
    # the float sums above carry their own small relative error; double them
    # and let the bound ride on the magnitude of the whole series so it does
    # not grow as more terms are taken
    magnitude = abs_total + abs(tail.upper(n_stop))
    if term_error is None:
        term_err_total = rel_term_error * magnitude
    rounding = 2 * term_err_total + 4 * EPS * magnitude + EPS * abs(value)
    return Approximation(value, radius + rounding)
