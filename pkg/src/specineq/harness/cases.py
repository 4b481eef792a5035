"""Catalog of checkable inequality statements.

Each case owns a parameter schema, a hypothesis validator, and a function that
turns a parameter point into constituent claims ``lhs <= rhs``.  Chains
``A <= B <= C`` become two claims.  Statements about ratios and products of
positive quantities are compared through their logarithms, which is the same
ordering and keeps the enclosures tight.

Arguments formed from grid parameters (``a + b*t`` and the like) are rounded
once; each function value is widened by a bound on its derivative times that
rounding error, so the enclosures refer to the exact lattice point.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Callable, Mapping, Optional

from ..series import DEFAULT_TOL, EPS, Approximation, SeriesEvaluationError, euler_gamma
from ..specfun import (
    DomainError,
    RangeError,
    digamma,
    k_digamma,
    log_gamma,
    log_k_gamma,
    log_p_gamma,
    log_q_gamma,
    polygamma,
)
from .grid import Axis, GridSpec
from .verdict import Constituent, Direction, Verdict, judge


class CaseId(enum.Enum):
    L2_1 = "L2_1"
    L2_2 = "L2_2"
    T2_3 = "T2_3"
    R2_4 = "R2_4"
    R2_5 = "R2_5"
    L2_7 = "L2_7"
    L2_8 = "L2_8"
    T2_9 = "T2_9"
    R2_10 = "R2_10"
    KrasniqiP = "KrasniqiP"
    KrasniqiQ = "KrasniqiQ"
    L3_1 = "L3_1"
    T3_2 = "T3_2"
    R3_3 = "R3_3"
    L3_4 = "L3_4"
    L3_5 = "L3_4"  # alias: the two-argument form of L3_4
    L3_6 = "L3_6"
    T3_7 = "T3_7"
    R3_8 = "R3_8"
    R3_9 = "R3_9"
    GJMA_Erratum = "GJMA_Erratum"

    @classmethod
    def parse(cls, text: str) -> "CaseId":
        try:
            return cls[text]
        except KeyError:
            pass
        for member in cls:
            if member.value.lower() == text.lower():
                return member
        raise ValueError(f"unknown case {text!r}")


class CaseEvaluationError(RuntimeError):
    """A function evaluation inside a case failed."""

    def __init__(self, case: CaseId, expression: str, cause: Exception):
        super().__init__(f"{case.value}: evaluating {expression} failed: {cause}")
        self.case = case
        self.expression = expression
        self.cause = cause


class _Skip(Exception):
    """The point does not satisfy the statement's hypotheses."""


@dataclass(frozen=True)
class Param:
    name: str
    kind: str = "real"  # real | int | odd
    note: str = ""


@dataclass(frozen=True)
class Case:
    id: CaseId
    params: tuple[Param, ...]
    citation: str
    statement: str
    default_grid: GridSpec
    validate: Callable  # (params, ctx) -> None, raises _Skip
    claims: Callable  # (ctx, params) -> list[Constituent]
    # log of the monotone function of t behind a chain: (ctx, params, s)
    member: Optional[Callable] = None
    increasing: bool = True

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.params)


# -- evaluation helpers ----------------------------------------------------------

_ERRORS = (DomainError, RangeError, SeriesEvaluationError, ZeroDivisionError, ValueError, OverflowError)


class _Ctx:
    """Evaluation context: the case being checked and the requested tol."""

    def __init__(self, case: CaseId, tol: float):
        self.case = case
        self.tol = tol

    def _call(self, label, fn, *args) -> Approximation:
        try:
            return fn(*args)
        except _ERRORS as exc:
            raise CaseEvaluationError(self.case, label, exc) from exc

    def psi(self, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"psi({x!r})", digamma, x, self.tol)
        if err:
            lo = x - err
            v = v.widen(err * (1.0 / lo + 1.0 / (lo * lo)))
        return v

    def poly(self, m: int, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"psi^({m})({x!r})", polygamma, m, x, self.tol)
        if err:
            lo = x - err
            slope = math.factorial(m + 1) * (lo ** -(m + 2) + lo ** -(m + 1) / (m + 1))
            v = v.widen(err * slope)
        return v

    def kpsi(self, k: float, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"psi_k({x!r}; k={k!r})", k_digamma, k, x, self.tol)
        if err:
            lo = x - err
            v = v.widen(err * (1.0 / (k * lo) + 1.0 / (lo * lo)))
        return v

    def lgam(self, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"lnGamma({x!r})", log_gamma, x, self.tol)
        if err:
            lo, hi = x - err, x + err
            v = v.widen(err * (max(abs(math.log(lo)), abs(math.log(hi))) + 1.0 / lo))
        return v

    def lgam_k(self, k: float, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"lnGamma_k({x!r}; k={k!r})", log_k_gamma, k, x, self.tol)
        if err:
            lo, hi = x - err, x + err
            lu = max(abs(math.log(lo / k)), abs(math.log(hi / k)))
            v = v.widen(err * (abs(math.log(k)) / k + (lu + k / lo) / k))
        return v

    def lgam_p(self, p: int, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"lnGamma_p({x!r}; p={p})", log_p_gamma, p, x, self.tol)
        if err:
            lo = x - err
            v = v.widen(err * (math.log(p) + 1.0 / lo + math.log1p(p / lo)))
        return v

    def lgam_q(self, q: float, x: float, err: float = 0.0) -> Approximation:
        v = self._call(f"lnGamma_q({x!r}; q={q!r})", log_q_gamma, q, x, self.tol)
        if err:
            lo = x - err
            ql = q ** lo
            v = v.widen(err * (abs(math.log1p(-q)) + abs(math.log(q)) * ql / ((1 - ql) * (1 - q))))
        return v


def _lin(c0: float, c1: float, s: float) -> tuple[float, float]:
    """c0 + c1*s and a bound on its rounding error."""
    if c1 == 0.0 or s == 0.0:
        return c0, 0.0
    x = c0 + c1 * s
    return x, EPS * (abs(c1 * s) + abs(x))


def _require(cond: bool) -> None:
    if not cond:
        raise _Skip


def _positive(v: Approximation) -> Approximation:
    _require(v.certainly_positive())
    return v


def _int(p: Mapping[str, float], name: str, minimum: int = 1) -> int:
    v = float(p[name])
    _require(v.is_integer() and v >= minimum)
    return int(v)


def _odd(p: Mapping[str, float], name: str = "m") -> int:
    m = _int(p, name)
    _require(m % 2 == 1)
    return m


def _exp_rate(x: float) -> Approximation:
    return Approximation(x, EPS * abs(x))


# -- section 2: psi and polygamma ------------------------------------------------

def _l2_1_validate(p):
    _require(0.0 < p["s"] <= p["t"])


def _l2_1(ctx: _Ctx, p):
    s, t = p["s"], p["t"]
    return [Constituent(ctx.psi(s), ctx.psi(t), "psi(s) <= psi(t)", identical=s == t)]


def _l2_2(ctx: _Ctx, p):
    s, t = p["s"], p["t"]
    return [Constituent(ctx.poly(1, t), ctx.poly(1, s), "psi'(t) <= psi'(s)", identical=s == t)]


def _u_params(p):
    return p["a"], p["b"], p["c"], p["d"], p["alpha"], p["beta"]


def _t2_3_common(p):
    a, b, c, d, al, be = _u_params(p)
    _require(min(a, b, c, d, al, be) > 0.0)
    _require(a <= c and b <= d and be * d <= al * b)


def _t2_3_validate(p, ctx: _Ctx):
    _t2_3_common(p)
    _require(0.0 <= p["t"] <= 1.0)
    # psi increases, so positivity at s = 0 covers all s >= 0
    _positive(ctx.psi(p["a"]))
    _positive(ctx.psi(p["c"]))


def _r2_5_validate(p, ctx: _Ctx):
    _t2_3_common(p)
    _require(p["t"] >= 1.0)
    a, b, c, d, _, _ = _u_params(p)
    _positive(ctx.psi(*_lin(a, b, 1.0)))
    _positive(ctx.psi(*_lin(c, d, 1.0)))


def _log_u(ctx: _Ctx, p, s: float) -> Approximation:
    a, b, c, d, al, be = _u_params(p)
    if (a, b, al) == (c, d, be):
        return Approximation(0.0)
    num = _positive(ctx.psi(*_lin(a, b, s)))
    den = _positive(ctx.psi(*_lin(c, d, s)))
    return num.log() * al - den.log() * be


def _t2_3(ctx: _Ctx, p):
    t = p["t"]
    lo, mid, hi = _log_u(ctx, p, 0.0), _log_u(ctx, p, t), _log_u(ctx, p, 1.0)
    return [Constituent(lo, mid, "U(0) <= U(t)", identical=t == 0.0),
            Constituent(mid, hi, "U(t) <= U(1)", identical=t == 1.0)]


def _r2_5(ctx: _Ctx, p):
    t = p["t"]
    return [Constituent(_log_u(ctx, p, 1.0), _log_u(ctx, p, t), "U(1) <= U(t)", identical=t == 1.0)]


def _r2_4_validate(p):
    _require(0.0 <= p["t"] <= 1.0)


def _r2_4(ctx: _Ctx, p):
    t = p["t"]
    mid = ctx.psi(*_lin(1.0, 1.0, t))
    return [Constituent(ctx.psi(1.0), mid, "psi(1) <= psi(1+t)", identical=t == 0.0),
            Constituent(mid, ctx.psi(2.0), "psi(1+t) <= psi(2)", identical=t == 1.0)]


def _l2_7_validate(p):
    _odd(p)
    _require(p["t"] > 0.0)


def _l2_7(ctx: _Ctx, p):
    m, t = _odd(p), p["t"]
    d1, d2, d3 = ctx.poly(m, t), ctx.poly(m + 1, t), ctx.poly(m + 2, t)
    turan = d1 * d3 - d2 * d2
    return [Constituent(Approximation(0.0), turan, "psi^(m+1)^2 <= psi^(m) psi^(m+2)")]


def _l2_8_validate(p):
    _odd(p)
    _require(0.0 < p["s"] <= p["t"])


def _ratio(ctx: _Ctx, m: int, x: float) -> Approximation:
    return ctx.poly(m + 1, x) / ctx.poly(m, x)


def _l2_8(ctx: _Ctx, p):
    m, s, t = _odd(p), p["s"], p["t"]
    return [Constituent(_ratio(ctx, m, s), _ratio(ctx, m, t), "Q(s) <= Q(t)", identical=s == t)]


def _v_common(p):
    _odd(p)
    _require(0.0 < p["alpha"] <= p["beta"])


def _t2_9_validate(p):
    _v_common(p)
    _require(0.0 <= p["t"] <= 1.0)


def _r2_10_validate(p):
    _v_common(p)
    _require(p["t"] >= 1.0)


def _log_v(ctx: _Ctx, p, s: float) -> Approximation:
    m, al, be = _odd(p), p["alpha"], p["beta"]
    if al == be:
        return Approximation(0.0)
    num = _positive(ctx.poly(m, *_lin(al, 1.0, s)))
    den = _positive(ctx.poly(m, *_lin(be, 1.0, s)))
    return num.log() - den.log()


def _t2_9(ctx: _Ctx, p):
    t = p["t"]
    v0, vt, v1 = _log_v(ctx, p, 0.0), _log_v(ctx, p, t), _log_v(ctx, p, 1.0)
    return [Constituent(v1, vt, "V(1) <= V(t)", identical=t == 1.0),
            Constituent(vt, v0, "V(t) <= V(0)", identical=t == 0.0)]


def _r2_10(ctx: _Ctx, p):
    t = p["t"]
    return [Constituent(_log_v(ctx, p, t), _log_v(ctx, p, 1.0), "V(t) <= V(1)", identical=t == 1.0)]


def _erratum_validate(p):
    _v_common(p)
    _require(p["t"] >= 0.0)


def _erratum(ctx: _Ctx, p):
    m, al, be, t = _odd(p), p["alpha"], p["beta"], p["t"]
    if al == be:
        zero = Approximation(0.0)
        return [Constituent(zero, zero, "D <= 0", identical=True)]
    x, ex = _lin(al, 1.0, t)
    y, ey = _lin(be, 1.0, t)
    d = ctx.poly(m + 1, x, ex) * ctx.poly(m, y, ey) - ctx.poly(m + 1, y, ey) * ctx.poly(m, x, ex)
    return [Constituent(d, Approximation(0.0), "D <= 0")]


# -- section 3: p-, q- and k-analogues ---------------------------------------------

def _krasniqi_validate(p):
    _require(p["alpha"] > 0.0 and 0.0 < p["t"] < 1.0)
    _require(p["alpha"] + p["t"] > 1.0)


def _krasniqi_p_validate(p):
    _int(p, "p")
    _krasniqi_validate(p)


def _krasniqi_q_validate(p):
    _require(0.0 < p["q"] < 1.0)
    _krasniqi_validate(p)


def _log_wp(ctx: _Ctx, p, s: float) -> Approximation:
    # ln of p^s e^(gamma s) Gamma(alpha+s)/Gamma_p(alpha+s)
    pp = _int(p, "p")
    x, ex = _lin(p["alpha"], 1.0, s)
    rate = _exp_rate(math.log(pp)) + euler_gamma()
    return rate * s + ctx.lgam(x, ex) - ctx.lgam_p(pp, x, ex)


def _log_wq(ctx: _Ctx, p, s: float) -> Approximation:
    # ln of (1-q)^(-s) e^(gamma s) Gamma(alpha+s)/Gamma_q(alpha+s)
    q = p["q"]
    x, ex = _lin(p["alpha"], 1.0, s)
    rate = euler_gamma() - _exp_rate(math.log1p(-q))
    return rate * s + ctx.lgam(x, ex) - ctx.lgam_q(q, x, ex)


def _chain_up(member):
    def claims(ctx: _Ctx, p):
        t = p["t"]
        lo, mid, hi = member(ctx, p, 0.0), member(ctx, p, t), member(ctx, p, 1.0)
        return [Constituent(lo, mid, "W(0) <= W(t)", identical=t == 0.0),
                Constituent(mid, hi, "W(t) <= W(1)", identical=t == 1.0)]
    return claims


def _l3_1_validate(p):
    _require(p["k"] >= 1.0 and p["alpha"] > 0.0 and p["alpha"] + p["t"] > 0.0)


def _l3_1(ctx: _Ctx, p):
    k = p["k"]
    if k == 1.0:
        # gamma + (0 - gamma)/1 + psi(x) - psi_1(x) vanishes identically
        zero = Approximation(0.0)
        return [Constituent(zero, zero, "0 <= gap", identical=True)]
    x, ex = _lin(p["alpha"], 1.0, p["t"])
    g = euler_gamma()
    head = g + (_exp_rate(math.log(k)) - g) / k
    gap = head + ctx.psi(x, ex) - ctx.kpsi(k, x, ex)
    return [Constituent(Approximation(0.0), gap, "0 <= gap")]


def _t3_2_validate(p):
    _require(p["k"] >= 1.0 and p["alpha"] > 0.0 and 0.0 <= p["t"] <= 1.0)


def _r3_3_validate(p):
    _require(p["k"] >= 1.0 and p["alpha"] > 0.0 and p["t"] >= 1.0)


def _log_wk(ctx: _Ctx, p, s: float) -> Approximation:
    # ln of k^(s/k) e^(s (k gamma - gamma)/k) Gamma(alpha+s)/Gamma_k(alpha+s)
    k = p["k"]
    if k == 1.0:
        return Approximation(0.0)
    x, ex = _lin(p["alpha"], 1.0, s)
    rate = (_exp_rate(math.log(k)) + euler_gamma() * (k - 1.0)) / k
    return rate * s + ctx.lgam(x, ex) - ctx.lgam_k(k, x, ex)


def _r3_3(ctx: _Ctx, p):
    t = p["t"]
    return [Constituent(_log_wk(ctx, p, 1.0), _log_wk(ctx, p, t), "W(1) <= W(t)", identical=t == 1.0)]


def _two_point_validate(p):
    _require(p["k"] > 0.0)
    _require(0.0 < p["s"] <= p["t"])


def _l3_4(ctx: _Ctx, p):
    k, s, t = p["k"], p["s"], p["t"]
    return [Constituent(ctx.kpsi(k, s), ctx.kpsi(k, t), "psi_k(s) <= psi_k(t)", identical=s == t)]


def _l3_6_args(p):
    x = _lin(p["alpha"], p["a"], p["t"])
    y = _lin(p["beta"], p["b"], p["t"])
    return x, y


def _l3_6_validate(p, ctx: _Ctx):
    k, a, b = p["k"], p["a"], p["b"]
    _require(k > 0.0 and 0.0 < a <= b)
    (x, ex), (y, ey) = _l3_6_args(p)
    _require(x > 0.0 and y > 0.0 and x <= y)
    _positive(ctx.kpsi(k, x, ex))


def _l3_6(ctx: _Ctx, p):
    k, a, b = p["k"], p["a"], p["b"]
    (x, ex), (y, ey) = _l3_6_args(p)
    same = (a, p["alpha"]) == (b, p["beta"])
    return [Constituent(ctx.kpsi(k, x, ex) * a, ctx.kpsi(k, y, ey) * b,
                        "a psi_k(at+alpha) <= b psi_k(bt+beta)", identical=same)]


def _shifts(p) -> tuple[list[float], list[float]]:
    alphas, betas = [], []
    i = 1
    while f"alpha{i}" in p:
        alphas.append(p[f"alpha{i}"])
        betas.append(p[f"beta{i}"])
        i += 1
    if not alphas:
        raise KeyError("alpha1")
    return alphas, betas


def _x_common(p):
    _require(p["k"] > 0.0)
    alphas, betas = _shifts(p)
    _require(min(alphas + betas) > 0.0)
    return alphas, betas


def _t3_7_validate(p, ctx: _Ctx):
    alphas, betas = _x_common(p)
    k, a, b = p["k"], p["a"], p["b"]
    _require(0.0 < a <= b and 0.0 <= p["t"] <= 1.0)
    for al, be in zip(alphas, betas):
        # both arguments are linear in s; checking s = 0 and s = 1 covers [0, 1]
        _require(al <= be and a + al <= b + be)
        _positive(ctx.kpsi(k, al))


def _r3_8_validate(p, ctx: _Ctx):
    alphas, betas = _x_common(p)
    k, a, b, t = p["k"], p["a"], p["b"], p["t"]
    _require(0.0 < a <= b and t >= 1.0)
    for al, be in zip(alphas, betas):
        _require(a + al <= b + be)
        _require(_lin(al, a, t)[0] <= _lin(be, b, t)[0])
        _positive(ctx.kpsi(k, *_lin(al, a, 1.0)))


def _r3_9_validate(p, ctx: _Ctx):
    alphas, betas = _x_common(p)
    k, a, b = p["k"], p["a"], p["b"]
    _require(0.0 < b <= a and 0.0 <= p["t"] <= 1.0)
    for al, be in zip(alphas, betas):
        _require(al >= be and a + al >= b + be)
        _positive(ctx.kpsi(k, be))


def _log_x(ctx: _Ctx, p, s: float) -> Approximation:
    k, a, b = p["k"], p["a"], p["b"]
    alphas, betas = _shifts(p)
    total = Approximation(0.0)
    for al, be in zip(alphas, betas):
        if (a, al) == (b, be):
            continue
        total = total + ctx.lgam_k(k, *_lin(al, a, s)) - ctx.lgam_k(k, *_lin(be, b, s))
    return total


def _t3_7(ctx: _Ctx, p):
    t = p["t"]
    x0, xt, x1 = _log_x(ctx, p, 0.0), _log_x(ctx, p, t), _log_x(ctx, p, 1.0)
    return [Constituent(x1, xt, "X(1) <= X(t)", identical=t == 1.0),
            Constituent(xt, x0, "X(t) <= X(0)", identical=t == 0.0)]


def _r3_8(ctx: _Ctx, p):
    t = p["t"]
    return [Constituent(_log_x(ctx, p, t), _log_x(ctx, p, 1.0), "X(t) <= X(1)", identical=t == 1.0)]


def _r3_9(ctx: _Ctx, p):
    t = p["t"]
    x0, xt, x1 = _log_x(ctx, p, 0.0), _log_x(ctx, p, t), _log_x(ctx, p, 1.0)
    return [Constituent(x0, xt, "X(0) <= X(t)", identical=t == 0.0),
            Constituent(xt, x1, "X(t) <= X(1)", identical=t == 1.0)]


# -- catalog -------------------------------------------------------------------------

def _ax(lo, hi, n):
    return Axis(float(lo), float(hi), n)


_ST_GRID = GridSpec.build(s=_ax(0.1, 20, 150), t=_ax(0.1, 20, 150))
_U_AXES = dict(a=_ax(1.5, 6, 4), b=_ax(0.25, 2, 4), c=_ax(1.5, 6, 4), d=_ax(0.25, 2, 4),
               alpha=_ax(0.5, 3, 4), beta=_ax(0.5, 3, 4))
_V_AXES = dict(m=_ax(1, 7, 7), alpha=_ax(0.25, 5, 20), beta=_ax(0.25, 5, 20))
_X_AXES = dict(k=_ax(0.5, 3, 4), a=_ax(0.5, 2, 3), b=_ax(0.5, 2, 3),
               alpha1=_ax(0.5, 3, 5), alpha2=_ax(0.5, 3, 5), beta1=_ax(0.5, 3, 5), beta2=_ax(0.5, 3, 5))
_KRASNIQI_AXES = dict(alpha=_ax(0.5, 3, 26), t=_ax(0.05, 0.95, 19))

_S, _T = Param("s"), Param("t")
_U_PARAMS = tuple(Param(n) for n in ("a", "b", "c", "d", "alpha", "beta", "t"))
_V_PARAMS = (Param("m", "odd"), Param("alpha"), Param("beta"), Param("t"))
_X_PARAMS = (Param("k"), Param("a"), Param("b"), Param("alpha1"), Param("alpha2"),
             Param("beta1"), Param("beta2"), Param("t"))


def _plain(validate, claims):
    """Adapt (p) validators and (ctx, p) claim builders to the Case protocol."""
    return (lambda p, ctx: validate(p)), claims


_REGISTRY: dict[CaseId, tuple] = {
    CaseId.L2_1: ((_S, _T), "lemma: digamma is increasing", "psi(s) <= psi(t) for 0 < s <= t", _ST_GRID,
                  *_plain(_l2_1_validate, _l2_1), None, True),
    CaseId.L2_2: ((_S, _T), "lemma: trigamma is decreasing", "psi'(s) >= psi'(t) for 0 < s <= t", _ST_GRID,
                  *_plain(_l2_1_validate, _l2_2), None, True),
    CaseId.T2_3: (_U_PARAMS, "theorem: digamma ratio chain",
                  "[psi(a)]^alpha/[psi(c)]^beta <= [psi(a+bt)]^alpha/[psi(c+dt)]^beta "
                  "<= [psi(a+b)]^alpha/[psi(c+d)]^beta for t in [0,1]",
                  GridSpec.build(**_U_AXES, t=_ax(0, 1, 6)),
                  _t2_3_validate, _t2_3, _log_u, True),
    CaseId.R2_4: ((_T,), "remark: digamma on [1, 2]",
                  "psi(1) <= psi(1+t) <= psi(2) for t in [0,1] (the bound behind "
                  "(-gamma)^(alpha-beta) <= [psi(1+t)]^(alpha-beta) <= (1-gamma)^(alpha-beta))",
                  GridSpec.build(t=_ax(0, 1, 1001)), *_plain(_r2_4_validate, _r2_4), None, True),
    CaseId.R2_5: (_U_PARAMS, "remark: digamma ratio beyond t = 1", "U(t) >= U(1) for t > 1",
                  GridSpec.build(**_U_AXES, t=_ax(1, 5, 9)), _r2_5_validate, _r2_5, None, True),
    CaseId.L2_7: ((Param("m", "odd"), _T), "lemma: Turan-type polygamma inequality",
                  "psi^(m)(t) psi^(m+2)(t) - [psi^(m+1)(t)]^2 >= 0 for odd m, t > 0",
                  GridSpec.build(m=_ax(1, 9, 9), t=_ax(0.1, 20, 2000)),
                  *_plain(_l2_7_validate, _l2_7), None, True),
    CaseId.L2_8: ((Param("m", "odd"), _S, _T), "lemma: polygamma ratio monotonicity",
                  "psi^(m+1)(s)/psi^(m)(s) <= psi^(m+1)(t)/psi^(m)(t) for odd m, 0 < s <= t",
                  GridSpec.build(m=_ax(1, 5, 5), s=_ax(0.1, 20, 90), t=_ax(0.1, 20, 90)),
                  *_plain(_l2_8_validate, _l2_8), None, True),
    CaseId.T2_9: (_V_PARAMS, "theorem: polygamma ratio chain",
                  "psi^(m)(alpha)/psi^(m)(beta) >= psi^(m)(alpha+t)/psi^(m)(beta+t) "
                  ">= psi^(m)(alpha+1)/psi^(m)(beta+1) for odd m, 0 < alpha <= beta, t in [0,1]",
                  GridSpec.build(**_V_AXES, t=_ax(0, 1, 11)),
                  *_plain(_t2_9_validate, _t2_9), _log_v, False),
    CaseId.R2_10: (_V_PARAMS, "remark: polygamma ratio beyond t = 1", "V(t) < V(1) for t > 1 (checked non-strictly)",
                   GridSpec.build(**_V_AXES, t=_ax(1, 5, 9)),
                   *_plain(_r2_10_validate, _r2_10), None, True),
    CaseId.KrasniqiP: ((Param("p", "int"), Param("alpha"), _T), "p-analogue chain",
                       "p^(-t) e^(-gamma t) Gamma(alpha)/Gamma_p(alpha) < Gamma(alpha+t)/Gamma_p(alpha+t) "
                       "< p^(1-t) e^(gamma(1-t)) Gamma(alpha+1)/Gamma_p(alpha+1), t in (0,1), alpha+t > 1",
                       GridSpec.build(p=Axis.of(1, 5, 50), **_KRASNIQI_AXES),
                       *_plain(_krasniqi_p_validate, _chain_up(_log_wp)), _log_wp, True),
    CaseId.KrasniqiQ: ((Param("q"), Param("alpha"), _T), "q-analogue chain",
                       "(1-q)^t e^(-gamma t) Gamma(alpha)/Gamma_q(alpha) < Gamma(alpha+t)/Gamma_q(alpha+t) "
                       "< (1-q)^(t-1) e^(gamma(1-t)) Gamma(alpha+1)/Gamma_q(alpha+1), t in (0,1), alpha+t > 1",
                       GridSpec.build(q=Axis.of(0.2, 0.5, 0.9), **_KRASNIQI_AXES),
                       *_plain(_krasniqi_q_validate, _chain_up(_log_wq)), _log_wq, True),
    CaseId.L3_1: ((Param("k"), Param("alpha"), _T), "lemma: k-digamma bound",
                  "gamma + (ln k - gamma)/k + psi(alpha+t) - psi_k(alpha+t) >= 0 for k >= 1",
                  GridSpec.build(k=_ax(1, 10, 20), alpha=_ax(0.1, 5, 25), t=_ax(0, 2, 21)),
                  *_plain(_l3_1_validate, _l3_1), None, True),
    CaseId.T3_2: ((Param("k"), Param("alpha"), _T), "theorem: k-Gamma chain",
                  "k^(-t/k) e^(-t(k gamma - gamma)/k) Gamma(alpha)/Gamma_k(alpha) <= "
                  "Gamma(alpha+t)/Gamma_k(alpha+t) <= k^((1-t)/k) e^((1-t)(k gamma - gamma)/k) "
                  "Gamma(alpha+1)/Gamma_k(alpha+1) for k >= 1, t in (0,1)",
                  GridSpec.build(k=_ax(1, 5, 9), alpha=_ax(0.2, 5, 25), t=_ax(0, 1, 11)),
                  *_plain(_t3_2_validate, _chain_up(_log_wk)), _log_wk, True),
    CaseId.R3_3: ((Param("k"), Param("alpha"), _T), "remark: k-Gamma chain beyond t = 1", "W(1) <= W(t) for t >= 1",
                  GridSpec.build(k=_ax(1, 5, 9), alpha=_ax(0.2, 5, 25), t=_ax(1, 5, 9)),
                  *_plain(_r3_3_validate, _r3_3), None, True),
    CaseId.L3_4: ((Param("k"), _S, _T), "lemma: k-digamma monotonicity (L3_5 is an alias)",
                  "psi_k(s) <= psi_k(t) for k > 0, 0 < s <= t",
                  GridSpec.build(k=_ax(0.5, 5, 10), s=_ax(0.1, 10, 45), t=_ax(0.1, 10, 45)),
                  *_plain(_two_point_validate, _l3_4), None, True),
    CaseId.L3_6: ((Param("k"), Param("a"), Param("b"), Param("alpha"), Param("beta"), _T), "lemma: k-Gamma ratio monotonicity",
                  "a psi_k(at+alpha) <= b psi_k(bt+beta) for 0 < a <= b, at+alpha <= bt+beta, "
                  "psi_k(at+alpha) > 0",
                  GridSpec.build(k=_ax(0.5, 3, 4), a=_ax(0.5, 2, 6), b=_ax(0.5, 2, 6),
                                 alpha=_ax(0.5, 6, 8), beta=_ax(0.5, 6, 8), t=_ax(0, 2, 5)),
                  _l3_6_validate, _l3_6, None, True),
    CaseId.T3_7: (_X_PARAMS, "theorem: k-Gamma product ratio chain",
                  "prod Gamma_k(a+alpha_i)/Gamma_k(b+beta_i) <= prod Gamma_k(at+alpha_i)/Gamma_k(bt+beta_i) "
                  "<= prod Gamma_k(alpha_i)/Gamma_k(beta_i) for t in [0,1]",
                  GridSpec.build(**_X_AXES, t=_ax(0, 1, 6)), _t3_7_validate, _t3_7, _log_x, False),
    CaseId.R3_8: (_X_PARAMS, "remark: product ratio beyond t = 1", "X(t) <= X(1) for t > 1",
                  GridSpec.build(**_X_AXES, t=_ax(1, 5, 9)), _r3_8_validate, _r3_8, None, True),
    CaseId.R3_9: (_X_PARAMS, "remark: reversed product ratio chain",
                  "with 0 < b <= a, at+alpha_i >= bt+beta_i and psi_k(bt+beta_i) > 0 the chain of "
                  "the T3_7 chain reverses",
                  GridSpec.build(**_X_AXES, t=_ax(0, 1, 6)), _r3_9_validate, _r3_9, None, True),
    CaseId.GJMA_Erratum: (_V_PARAMS, "erratum: corrected polygamma cross-difference sign",
                          "D = psi^(m+1)(alpha+t) psi^(m)(beta+t) - psi^(m+1)(beta+t) psi^(m)(alpha+t) <= 0 "
                          "for odd m, 0 < alpha <= beta, t >= 0 (the retracted claim was D >= 0)",
                          GridSpec.build(m=_ax(1, 7, 7), alpha=_ax(1, 5, 5), beta=_ax(1, 5, 5),
                                         t=_ax(0, 2, 9)),
                          *_plain(_erratum_validate, _erratum), None, True),
}


def _make(cid: CaseId) -> Case:
    params, citation, statement, grid, validate, claims, member, increasing = _REGISTRY[cid]
    return Case(cid, params, citation, statement, grid, validate, claims, member, increasing)


CASES: dict[CaseId, Case] = {cid: _make(cid) for cid in CaseId}


def get_case(case: CaseId | str) -> Case:
    if isinstance(case, str):
        case = CaseId.parse(case)
    return CASES[case]


def list_cases() -> list[tuple[CaseId, tuple[Param, ...], str]]:
    """(id, parameter schema, citation) for every case, in catalog order."""
    return [(c.id, c.params, c.citation) for c in CASES.values()]


# -- point evaluation ------------------------------------------------------------------

def _check_keys(case: Case, params: Mapping[str, float]) -> None:
    if case.id in (CaseId.T3_7, CaseId.R3_8, CaseId.R3_9):
        required = {"k", "a", "b", "t"}
        alphas = {n for n in params if n.startswith("alpha")}
        betas = {n for n in params if n.startswith("beta")}
        n = len(alphas)
        expected = {f"alpha{i}" for i in range(1, n + 1)} | {f"beta{i}" for i in range(1, n + 1)}
        if n == 0 or alphas | betas != expected or not required <= set(params) \
                or set(params) - required - expected:
            raise ValueError(f"{case.id.value} expects k, a, b, alpha1..alphaN, beta1..betaN, t; "
                             f"got {sorted(params)}")
        return
    if set(params) != set(case.param_names):
        raise ValueError(f"{case.id.value} expects parameters {list(case.param_names)}, "
                         f"got {sorted(params)}")


def check_point(case: CaseId | str, params: Mapping[str, float], tol: float = DEFAULT_TOL,
                direction: Direction = Direction.AS_STATED) -> Optional[Verdict]:
    """Verdict for one parameter point, or None if its hypotheses fail."""
    c = get_case(case)
    _check_keys(c, params)
    p = {k: float(v) for k, v in params.items()}
    ctx = _Ctx(c.id, tol)
    try:
        c.validate(p, ctx)
        claims = c.claims(ctx, p)
    except _Skip:
        return None
    return judge(claims, direction)


def member_value(case: CaseId | str, params: Mapping[str, float], s: float,
                 tol: float = DEFAULT_TOL) -> Optional[Approximation]:
    """Log of the monotone function behind a chain case, at t = s.

    None when the hypotheses fail at ``params`` (with t = s).
    """
    c = get_case(case)
    if c.member is None:
        raise ValueError(f"{c.id.value} has no monotone member function")
    p = {k: float(v) for k, v in params.items()}
    p["t"] = float(s)
    ctx = _Ctx(c.id, tol)
    try:
        c.validate(p, ctx)
        return c.member(ctx, p, float(s))
    except _Skip:
        return None


CHAIN_CASES = (CaseId.T2_3, CaseId.T2_9, CaseId.T3_2, CaseId.T3_7,
               CaseId.KrasniqiP, CaseId.KrasniqiQ)


def chain_members(case: CaseId | str, params: Mapping[str, float],
                  tol: float = DEFAULT_TOL) -> Optional[tuple[Approximation, Approximation, Approximation]]:
    """Left, middle and right members of a chain statement, in natural scale.

    The members come out in the order the chain is written, so for the
    decreasing cases (T2_9, T3_7) the left member is the largest.
    """
    c = get_case(case)
    if c.id not in CHAIN_CASES:
        raise ValueError(f"{c.id.value} is not a chain statement")
    _check_keys(c, params)
    p = {k: float(v) for k, v in params.items()}
    ctx = _Ctx(c.id, tol)
    try:
        c.validate(p, ctx)
        at0, att, at1 = (c.member(ctx, p, s) for s in (0.0, p["t"], 1.0))
    except _Skip:
        return None
    if c.id is CaseId.T3_7:
        return at1.exp(), att.exp(), at0.exp()
    if c.id is CaseId.T2_9:
        return at0.exp(), att.exp(), at1.exp()
    # increasing cases: the outer members carry the factor that makes the
    # monotone function; strip it back out at each end
    return _natural_chain(c.id, ctx, p, at0, att, at1)


def _natural_chain(cid: CaseId, ctx: _Ctx, p, at0, att, at1):
    t = p["t"]
    if cid is CaseId.T2_3:
        return at0.exp(), att.exp(), at1.exp()
    if cid is CaseId.T3_2:
        k = p["k"]
        rate = Approximation(0.0) if k == 1.0 else \
            (_exp_rate(math.log(k)) + euler_gamma() * (k - 1.0)) / k
    elif cid is CaseId.KrasniqiP:
        rate = _exp_rate(math.log(_int(p, "p"))) + euler_gamma()
    else:
        rate = euler_gamma() - _exp_rate(math.log1p(-p["q"]))
    # middle member is Gamma(alpha+t)/Gamma_x(alpha+t) = W(t) / e^(rate t)
    return ((at0 - rate * t).exp(), (att - rate * t).exp(), (at1 - rate * t).exp())
