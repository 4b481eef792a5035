"""Gamma, psi and polygamma functions plus their k-, p- and q-analogues.

Every function returns an :class:`~specineq.series.Approximation` whose error
bound encloses the true value.  The digamma and polygamma functions are
evaluated from their defining series (``-gamma - 1/t + sum t/(n(n+t))`` and
``(-1)^(m+1) m! sum 1/(n+t)^(m+1)``) with two-sided integral-test tails;
ln Gamma uses the Stirling series, whose truncation error on the positive
real axis is bounded by the first omitted term.

Results are memoized; the cache only ever returns the value that a fresh
evaluation with the same arguments would produce.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .series import (
    DEFAULT_N_MAX,
    DEFAULT_TOL,
    EPS,
    Approximation,
    TailBound,
    euler_gamma,
    sum_tail_bounded,
)

__all__ = [
    "ContractError",
    "DomainError",
    "FunctionId",
    "RangeError",
    "digamma",
    "evaluate",
    "gamma",
    "k_digamma",
    "k_gamma",
    "log_gamma",
    "log_k_gamma",
    "log_p_gamma",
    "log_q_gamma",
    "p_digamma",
    "p_gamma",
    "polygamma",
    "q_digamma",
    "q_gamma",
]

_CACHE = 1 << 16

HALF_LOG_2PI = 0.91893853320467274178  # ln(2*pi)/2
# t above which Gamma(t) no longer fits in a double
GAMMA_OVERFLOW_T = 171.6243769563027
_LOG_DBL_MAX = math.log(np.finfo(float).max)


class DomainError(ValueError):
    """An argument lies outside the domain on which the function is defined."""


class RangeError(OverflowError):
    """The result does not fit in a double."""


class ContractError(ValueError):
    """The call violates the documented calling convention."""


class FunctionId(enum.Enum):
    GAMMA = "gamma"
    LOG_GAMMA = "log_gamma"
    DIGAMMA = "digamma"
    POLYGAMMA = "polygamma"
    K_GAMMA = "k_gamma"
    K_DIGAMMA = "k_digamma"
    P_GAMMA = "p_gamma"
    P_DIGAMMA = "p_digamma"
    Q_GAMMA = "q_gamma"
    Q_DIGAMMA = "q_digamma"

    @property
    def parameter(self) -> str | None:
        """Name of the family parameter this function needs, if any."""
        return _FAMILY_PARAM.get(self)


_FAMILY_PARAM = {
    FunctionId.POLYGAMMA: "m",
    FunctionId.K_GAMMA: "k",
    FunctionId.K_DIGAMMA: "k",
    FunctionId.P_GAMMA: "p",
    FunctionId.P_DIGAMMA: "p",
    FunctionId.Q_GAMMA: "q",
    FunctionId.Q_DIGAMMA: "q",
}


# -- argument checks ---------------------------------------------------------

def _check_t(t: float) -> float:
    t = float(t)
    if not (math.isfinite(t) and t > 0.0):
        raise DomainError(f"t must be a finite positive number, got {t!r}")
    return t


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not (tol > 0.0 and math.isfinite(tol)):
        raise DomainError(f"tol must be a finite positive number, got {tol!r}")
    return tol


def _check_k(k: float) -> float:
    k = float(k)
    if not (math.isfinite(k) and k > 0.0):
        raise DomainError(f"k must be a finite positive number, got {k!r}")
    return k


def _check_q(q: float) -> float:
    q = float(q)
    if not 0.0 < q < 1.0:
        raise DomainError(f"q must lie in (0, 1), got {q!r}")
    return q


def _check_int(name: str, v, minimum: int) -> int:
    if isinstance(v, float):
        if not v.is_integer():
            raise DomainError(f"{name} must be an integer, got {v!r}")
        v = int(v)
    if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or v < minimum:
        raise DomainError(f"{name} must be an integer >= {minimum}, got {v!r}")
    return int(v)


# -- ln Gamma ------------------------------------------------------------------

# Stirling coefficients B_2j / (2j (2j-1)) from the Bernoulli numbers B_2..B_18
_BERNOULLI = [Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
              Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
              Fraction(43867, 798)]
_STIRLING = [float(b / ((2 * j) * (2 * j - 1))) for j, b in enumerate(_BERNOULLI, start=1)]
_STIRLING_TERMS = _STIRLING[:-1]
_STIRLING_NEXT = abs(_STIRLING[-1])
_STIRLING_X0 = 10.0


def _log_gamma_stirling(x: float) -> Approximation:
    # for real x > 0 the remainder after any number of Stirling terms has the
    # sign of, and is smaller than, the first omitted term
    lx = math.log(x)
    inv = 1.0 / x
    inv2 = inv * inv
    parts = [(x - 0.5) * lx, -x, HALF_LOG_2PI]
    p = inv
    for c in _STIRLING_TERMS:
        parts.append(c * p)
        p *= inv2
    value = math.fsum(parts)
    rounding = 4 * EPS * math.fsum(abs(v) for v in parts) + EPS * abs(value)
    return Approximation(value, _STIRLING_NEXT * p + rounding)


def _log_gamma_raw(t: float) -> Approximation:
    if t >= _STIRLING_X0:
        return _log_gamma_stirling(t)
    # ln Gamma(t) = ln Gamma(t + n) - ln(t (t+1) ... (t+n-1))
    n = math.ceil(_STIRLING_X0 - t)
    prod = t
    for j in range(1, n):
        prod *= t + j
    x = t + n
    shifted = _log_gamma_stirling(x)
    # x is t + n rounded once; d/dx ln Gamma = psi(x) <= ln x
    arg_err = 0.5 * EPS * x * math.log(x)
    lp = math.log(prod)
    value = shifted.value - lp
    err = shifted.error_bound + arg_err + 2 * n * EPS + EPS * abs(lp) + EPS * abs(value)
    return Approximation(value, err)


@lru_cache(maxsize=_CACHE)
def log_gamma(t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """ln Gamma(t) for t > 0.

    Stirling's series with eight Bernoulli terms after shifting the argument
    to at least 10 by the functional equation; the bound is dominated by
    rounding, so ``tol`` only needs to be accepted, not met.
    """
    t = _check_t(t)
    _check_tol(tol)
    res = _log_gamma_raw(t)
    if not math.isfinite(res.value):
        raise RangeError(f"ln Gamma({t!r}) is not representable")
    return res


@lru_cache(maxsize=_CACHE)
def gamma(t: float, tol: float = DEFAULT_TOL) -> Approximation:
    lg = log_gamma(t, tol)
    if lg.hi >= _LOG_DBL_MAX:
        raise RangeError(f"Gamma(t) overflows a double for t > {GAMMA_OVERFLOW_T}, got t={t!r}")
    return lg.exp()


# -- digamma -------------------------------------------------------------------

_SHIFT_MAX = 64.0


def _digamma_tail(t: float) -> TailBound:
    # sum_{n>=N} t/(n(n+t)): integral from x is ln(1 + t/x)
    return TailBound.convex(lambda x: math.log1p(t / x), lambda x: t / (x * (x + t)))


def _digamma_series(t: float, tol: float, n_max: int = DEFAULT_N_MAX) -> Approximation:
    s = sum_tail_bounded(lambda n: t / (n * (n + t)), _digamma_tail(t), tol, n_max, start=1)
    inv = 1.0 / t
    return s - euler_gamma() - Approximation(inv, 0.5 * EPS * inv)


@lru_cache(maxsize=_CACHE)
def digamma(t: float, tol: float = DEFAULT_TOL, method: str = "auto") -> Approximation:
    """psi(t) for t > 0 from the series -gamma - 1/t + sum_{n>=1} t/(n(n+t)).

    With ``method="auto"`` arguments in (2, 64] are first reduced into [1, 2)
    by psi(t) = psi(t - 1) + 1/(t - 1), since the series converges faster
    for small t.  ``method="series"`` always sums the series at t itself.
    """
    t = _check_t(t)
    tol = _check_tol(tol)
    if method not in ("auto", "series"):
        raise ContractError(f"unknown method {method!r}")
    if method == "series" or t <= 2.0 or t > _SHIFT_MAX:
        return _digamma_series(t, tol)
    n = math.floor(t) - 1
    t0 = t - n  # exact: both t and t - n lie on the grid of ulp(t)
    base = _digamma_series(t0, tol)
    recips = [1.0 / (t0 + j) for j in range(n)]
    h = math.fsum(recips)
    return base + Approximation(h, EPS * h)


@lru_cache(maxsize=_CACHE)
def polygamma(m: int, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """psi^(m)(t) = (-1)^(m+1) m! sum_{n>=0} 1/(n+t)^(m+1) for m >= 1."""
    if m == 0:
        raise ContractError("polygamma of order 0 is the digamma function; call digamma()")
    m = _check_int("m", m, 1)
    t = _check_t(t)
    tol = _check_tol(tol)
    fact = float(math.factorial(m))
    if not math.isfinite(fact):
        raise RangeError(f"m! overflows a double for m={m}")
    e = -(m + 1)
    tail = TailBound.convex(lambda x: (x + t) ** -m / m, lambda x: (x + t) ** e)
    s = sum_tail_bounded(lambda n: (n + t) ** e, tail, tol / fact, start=0,
                         rel_term_error=(m + 3) * EPS)
    sign = 1.0 if m % 2 == 1 else -1.0
    res = Approximation(sign * fact, 0.5 * EPS * fact) * s
    if not math.isfinite(res.value):
        raise RangeError(f"polygamma({m}, {t!r}) overflows a double")
    return res


# -- k-analogues ---------------------------------------------------------------

def _psi_abs_bound(u: float) -> float:
    # ln u - 1/u <= psi(u) <= ln u for u > 0
    return abs(math.log(u)) + 1.0 / u


@lru_cache(maxsize=_CACHE)
def log_k_gamma(k: float, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """ln Gamma_k(t) = (t/k - 1) ln k + ln Gamma(t/k).

    The identity follows from substituting u = x^k / k in the defining
    integral of Gamma_k.
    """
    k = _check_k(k)
    t = _check_t(t)
    if k == 1.0:
        return log_gamma(t, tol)
    u = t / k
    lk = math.log(k)
    a = u - 1.0
    lin = a * lk
    lin_err = EPS * (abs(lk) * (2 * abs(u) + abs(a)) + 2 * abs(lin))
    # ln Gamma evaluated at the rounded quotient
    arg_err = 0.5 * EPS * u * _psi_abs_bound(u)
    return log_gamma(u, tol) + Approximation(lin, lin_err + arg_err)


@lru_cache(maxsize=_CACHE)
def k_gamma(k: float, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    lg = log_k_gamma(k, t, tol)
    if lg.hi >= _LOG_DBL_MAX:
        raise RangeError(f"Gamma_k({t!r}) with k={k!r} overflows a double")
    return lg.exp()


def _k_digamma_series(k: float, t: float, tol: float) -> Approximation:
    tail = TailBound.convex(lambda x: math.log1p(t / (k * x)) / k,
                            lambda x: t / (x * k * (x * k + t)))
    s = sum_tail_bounded(lambda n: t / (n * k * (n * k + t)), tail, tol, start=1,
                         rel_term_error=6 * EPS)
    lk = math.log(k)
    head = (lk - euler_gamma()) / k
    inv = 1.0 / t
    return head - Approximation(inv, 0.5 * EPS * inv) + s


@lru_cache(maxsize=_CACHE)
def k_digamma(k: float, t: float, tol: float = DEFAULT_TOL, method: str = "auto") -> Approximation:
    """psi_k(t) = (ln k - gamma)/k - 1/t + sum_{n>=1} t/(nk(nk+t)).

    The sum equals (1/k) * sum u/(n(n+u)) with u = t/k, i.e. the digamma
    series at u, so by default psi_k(t) = ln(k)/k + psi(t/k)/k is returned.
    ``method="series"`` sums the k-series term by term instead.
    """
    k = _check_k(k)
    t = _check_t(t)
    tol = _check_tol(tol)
    if method == "series":
        return _k_digamma_series(k, t, tol)
    if method != "auto":
        raise ContractError(f"unknown method {method!r}")
    if k == 1.0:
        return digamma(t, tol)
    u = t / k
    psi = digamma(u, tol * k)
    # psi evaluated at the rounded quotient; psi'(u) <= 1/u + 1/u^2
    arg_err = 0.5 * EPS * u * (1.0 / u + 1.0 / (u * u))
    lk = math.log(k)
    return (psi.widen(arg_err) + Approximation(lk, EPS * abs(lk))) / k


# -- p-analogues ---------------------------------------------------------------

@lru_cache(maxsize=256)
def _log_factorial(p: int) -> Approximation:
    logs = np.log(np.arange(2, p + 1, dtype=np.float64))
    v = math.fsum(logs.tolist())
    return Approximation(v, EPS * float(logs.sum()) + EPS * abs(v))


@lru_cache(maxsize=_CACHE)
def log_p_gamma(p: int, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """ln Gamma_p(t) = ln p! + t ln p - sum_{i=0}^{p} ln(t + i)."""
    p = _check_int("p", p, 1)
    t = _check_t(t)
    logs = np.log(t + np.arange(p + 1, dtype=np.float64))
    s = math.fsum(logs.tolist())
    # t + i rounds once (relative eps/2 -> absolute eps/2 after the log)
    s_err = EPS * float(np.sum(1.0 + np.abs(logs))) + EPS * abs(s)
    lp = math.log(p)
    tl = t * lp
    return _log_factorial(p) + Approximation(tl, 2 * EPS * abs(tl)) - Approximation(s, s_err)


@lru_cache(maxsize=_CACHE)
def p_gamma(p: int, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """Gamma_p(t) = p! p^t / (t (t+1) ... (t+p))."""
    lg = log_p_gamma(p, t, tol)
    if lg.hi >= _LOG_DBL_MAX:
        raise RangeError(f"Gamma_p({t!r}) with p={p} overflows a double")
    return lg.exp()


@lru_cache(maxsize=_CACHE)
def p_digamma(p: int, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """psi_p(t) = ln p - sum_{i=0}^{p} 1/(t + i), the log-derivative of Gamma_p."""
    p = _check_int("p", p, 1)
    t = _check_t(t)
    recips = 1.0 / (t + np.arange(p + 1, dtype=np.float64))
    s = math.fsum(recips.tolist())
    lp = math.log(p)
    return Approximation(lp, EPS * lp) - Approximation(s, 2 * EPS * s)


# -- q-analogues ---------------------------------------------------------------

def _log_one_minus_qpow(y: np.ndarray, lq: float) -> tuple[np.ndarray, np.ndarray]:
    """ln(1 - q^y) and an absolute error bound for each entry."""
    u = y * lq
    x = np.exp(u)
    near = x >= 0.5
    with np.errstate(divide="ignore"):
        vals = np.where(near, np.log(-np.expm1(u)), np.log1p(-x))
    err = EPS * (np.where(near, 4.0, 2.0 * x * (2.0 * np.abs(u) + 1.0)) + np.abs(vals))
    return vals, 2.0 * err


def _geometric_tail(q: float, c: float, scale: float = 1.0):
    # sum_{n>=N} q^(n+c) / (1 - q^(n+c)) <= q^(N+c) / ((1-q)(1-q^(N+c)))
    def bound(n: int) -> float:
        x = q ** (n + c)
        return scale * x / ((1.0 - q) * (1.0 - x))
    return TailBound(bound)


@lru_cache(maxsize=_CACHE)
def log_q_gamma(q: float, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """ln Gamma_q(t) = (1-t) ln(1-q) + sum_{n>=0} [ln(1-q^(n+1)) - ln(1-q^(n+t))].

    The remainder after N factors is bounded geometrically since
    |ln(1-x)| <= x/(1-x).
    """
    q = _check_q(q)
    t = _check_t(t)
    tol = _check_tol(tol)
    lq = math.log(q)

    def term(n):
        return _log_one_minus_qpow(n + 1.0, lq)[0] - _log_one_minus_qpow(n + t, lq)[0]

    def term_error(n, _vals):
        return _log_one_minus_qpow(n + 1.0, lq)[1] + _log_one_minus_qpow(n + t, lq)[1]

    s = sum_tail_bounded(term, _geometric_tail(q, min(1.0, t)), tol, term_error=term_error)
    l1q = math.log1p(-q)
    a = 1.0 - t
    head = a * l1q
    head_err = EPS * (abs(l1q) * (abs(t) + abs(a)) + 2 * abs(head))
    return s + Approximation(head, head_err)


@lru_cache(maxsize=_CACHE)
def q_gamma(q: float, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    lg = log_q_gamma(q, t, tol)
    if lg.hi >= _LOG_DBL_MAX:
        raise RangeError(f"Gamma_q({t!r}) with q={q!r} overflows a double")
    return lg.exp()


@lru_cache(maxsize=_CACHE)
def q_digamma(q: float, t: float, tol: float = DEFAULT_TOL) -> Approximation:
    """psi_q(t) = -ln(1-q) + ln q * sum_{n>=0} q^(n+t) / (1 - q^(n+t))."""
    q = _check_q(q)
    t = _check_t(t)
    tol = _check_tol(tol)
    lq = math.log(q)
    scale = max(1.0, abs(lq))

    def term(n):
        return 1.0 / np.expm1(-(n + t) * lq)

    def term_error(n, vals):
        return EPS * (4.0 + 2.0 * (n + t) * abs(lq)) * vals

    s = sum_tail_bounded(term, _geometric_tail(q, t), tol / scale, term_error=term_error)
    l1q = math.log1p(-q)
    return Approximation(lq, EPS * abs(lq)) * s - Approximation(l1q, EPS * abs(l1q))


# -- dispatch ------------------------------------------------------------------

def evaluate(fid: FunctionId | str, t: float, tol: float = DEFAULT_TOL, *,
             m: int | None = None, k: float | None = None,
             p: int | None = None, q: float | None = None) -> Approximation:
    """Evaluate the function named by ``fid`` at ``t``.

    The family parameter (``m``, ``k``, ``p`` or ``q``) required by ``fid``
    must be supplied; others are ignored.
    """
    fid = FunctionId(fid)
    params = {"m": m, "k": k, "p": p, "q": q}
    need = fid.parameter
    if need is not None and params[need] is None:
        raise ContractError(f"{fid.value} requires parameter {need}")
    if fid is FunctionId.GAMMA:
        return gamma(t, tol)
    if fid is FunctionId.LOG_GAMMA:
        return log_gamma(t, tol)
    if fid is FunctionId.DIGAMMA:
        return digamma(t, tol)
    if fid is FunctionId.POLYGAMMA:
        return polygamma(_check_int("m", m, 0), t, tol)
    if fid is FunctionId.K_GAMMA:
        return k_gamma(k, t, tol)
    if fid is FunctionId.K_DIGAMMA:
        return k_digamma(k, t, tol)
    if fid is FunctionId.P_GAMMA:
        return p_gamma(_check_int("p", p, 1), t, tol)
    if fid is FunctionId.P_DIGAMMA:
        return p_digamma(_check_int("p", p, 1), t, tol)
    if fid is FunctionId.Q_GAMMA:
        return q_gamma(q, t, tol)
    return q_digamma(q, t, tol)
