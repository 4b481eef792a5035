import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from specineq import series
from specineq.series import (
    EPS,
    EULER_GAMMA,
    Approximation,
    SeriesEvaluationError,
    TailBound,
    compensated_sum,
    euler_gamma,
    sum_tail_bounded,
)

mpmath.mp.dps = 50

ZETA2 = math.pi ** 2 / 6


def inv_sq(n):
    return 1.0 / (n + 1.0) ** 2


# sum_{n>=N} 1/(n+1)^2 lies between the integral from N and from N - 1/2
INV_SQ_BRACKET = TailBound.convex(lambda x: 1.0 / (x + 1.0), lambda x: 1.0 / (x + 1.0) ** 2)


# -- Approximation ------------------------------------------------------------------

def test_approximation_rejects_bad_bounds():
    with pytest.raises(ValueError):
        Approximation(1.0, -1e-3)
    with pytest.raises(ValueError):
        Approximation(1.0, math.inf)
    with pytest.raises(ValueError):
        Approximation(math.nan, 0.0)


def test_self_subtraction_is_exact():
    a = Approximation(3.0, 1e-6)
    d = a - a
    assert d.value == 0.0 and d.error_bound == 0.0


def test_division_by_interval_containing_zero():
    with pytest.raises(ZeroDivisionError):
        Approximation(1.0) / Approximation(1e-9, 1e-8)


def test_log_needs_certain_positivity():
    with pytest.raises(ValueError):
        Approximation(1e-9, 1e-8).log()


finite = st.floats(-1e6, 1e6, allow_nan=False)
radius = st.floats(0, 1e-3)


@given(finite, radius, finite, radius, st.floats(-1, 1), st.floats(-1, 1))
def test_arithmetic_encloses(x, rx, y, ry, ux, uy):
    a, b = Approximation(x, rx), Approximation(y, ry)
    tx, ty = mpmath.mpf(x) + mpmath.mpf(ux * rx), mpmath.mpf(y) + mpmath.mpf(uy * ry)
    for got, want in ((a + b, tx + ty), (a - b, tx - ty), (a * b, tx * ty)):
        assert abs(mpmath.mpf(got.value) - want) <= got.error_bound
    if b.lo > 0 or b.hi < 0:
        q = a / b
        assert abs(mpmath.mpf(q.value) - tx / ty) <= q.error_bound


@given(st.floats(-20, 20), st.floats(0, 1e-6), st.floats(-1, 1))
def test_exp_log_enclose(x, r, u):
    a = Approximation(x, r)
    true = mpmath.mpf(x) + mpmath.mpf(u * r)
    e = a.exp()
    assert abs(mpmath.mpf(e.value) - mpmath.exp(true)) <= e.error_bound
    assert abs(mpmath.mpf(e.log().value) - true) <= e.log().error_bound


def test_euler_gamma_constant():
    assert EULER_GAMMA == float(mpmath.euler)
    g = euler_gamma()
    assert g.contains(float(mpmath.euler))
    assert abs(mpmath.mpf(g.value) - mpmath.euler) <= g.error_bound


# -- compensated_sum ----------------------------------------------------------------

def test_compensated_sum_empty():
    assert compensated_sum([]) == 0.0


def test_compensated_sum_keeps_residual():
    assert compensated_sum([1.0, -1.0, 1e-17]) == 1e-17


def test_compensated_sum_many_tenths():
    assert abs(compensated_sum([0.1] * 10 ** 6) - 100000.0) <= 1e-9


def test_compensated_sum_rejects_nonfinite():
    with pytest.raises(SeriesEvaluationError):
        compensated_sum([1.0, math.inf])


# -- sum_tail_bounded -------------------------------------------------------------

def test_zeta2_bracketed_tail():
    a = sum_tail_bounded(inv_sq, INV_SQ_BRACKET, tol=1e-10)
    assert a.error_bound <= 1e-10
    assert abs(mpmath.mpf(a.value) - mpmath.zeta(2)) <= a.error_bound


def test_upper_only_tail_reports_honest_bound():
    # sum_{n>=N} 1/(n+1)^2 <= 1/N needs N = 1e10 for 1e-10; capped runs must say so
    tail = TailBound(lambda n: 1.0 / n if n > 0 else math.inf)
    a = sum_tail_bounded(inv_sq, tail, tol=1e-10, n_max=10 ** 6)
    assert a.error_bound > 1e-10
    assert a.error_bound == pytest.approx(1e-6, rel=1e-3)
    assert abs(a.value - ZETA2) <= a.error_bound


def test_zero_series():
    a = sum_tail_bounded(lambda n: np.zeros_like(n), TailBound(lambda n: 0.0))
    assert a.value == 0.0 and a.error_bound == 0.0


def test_telescoping_series():
    tail = TailBound(lambda n: 1.0 / (n + 1.0), lambda n: 1.0 / (n + 1.0))
    a = sum_tail_bounded(lambda n: 1.0 / ((n + 1.0) * (n + 2.0)), tail, tol=1e-12)
    assert abs(a.value - 1.0) <= a.error_bound


def test_nonfinite_term_reports_index():
    with np.errstate(divide="ignore"):
        with pytest.raises(SeriesEvaluationError) as info:
            sum_tail_bounded(lambda n: 1.0 / (n - 7.0), TailBound(lambda n: 1.0 / max(n, 1)),
                             n_max=100)
    assert info.value.index == 7


def test_rejects_bad_tol():
    with pytest.raises(ValueError):
        sum_tail_bounded(inv_sq, INV_SQ_BRACKET, tol=0.0)


def test_halving_tol_never_loosens_bound():
    tol = 1e-4
    prev = sum_tail_bounded(inv_sq, INV_SQ_BRACKET, tol=tol).error_bound
    for _ in range(25):
        tol /= 2
        cur = sum_tail_bounded(inv_sq, INV_SQ_BRACKET, tol=tol).error_bound
        assert cur <= prev
        prev = cur


@pytest.mark.parametrize("chunk", [1, 7, 1000, 2 ** 20])
def test_chunking_does_not_change_value(monkeypatch, chunk):
    ref = sum_tail_bounded(inv_sq, INV_SQ_BRACKET, tol=1e-7)
    monkeypatch.setattr(series, "_CHUNK", chunk)
    got = sum_tail_bounded(inv_sq, INV_SQ_BRACKET, tol=1e-7)
    n = 2000  # more terms than this run takes
    assert abs(got.value - ref.value) <= 4 * EPS * n


def test_brute_force_to_ten_times_truncation():
    # psi(t) + gamma + 1/t = sum_{n>=1} t/(n(n+t)), compared to a 10x longer fsum
    t = 0.75
    tail = TailBound.convex(lambda x: math.log1p(t / x), lambda x: t / (x * (x + t)))
    a = sum_tail_bounded(lambda n: t / (n * (n + t)), tail, tol=1e-9, start=1)
    n_used = series._first_index(lambda n: tail.enclose(n)[1], 1, 1e-9, 10 ** 8)
    n = np.arange(1, 10 * n_used, dtype=np.float64)
    brute = math.fsum((t / (n * (n + t))).tolist())
    rest = mpmath.psi(0, t) + mpmath.euler + 1 / mpmath.mpf(t) - brute
    assert abs(a.value - brute - float(rest)) <= a.error_bound
    assert abs(a.value - brute) <= a.error_bound + float(rest)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 50.0), st.integers(2, 6), st.sampled_from([1e-6, 1e-9, 1e-12]))
def test_hurwitz_tail_encloses(t, s, tol):
    tail = TailBound.convex(lambda x: 1.0 / ((s - 1) * (x + t) ** (s - 1)),
                            lambda x: 1.0 / (x + t) ** s)
    a = sum_tail_bounded(lambda n: 1.0 / (n + t) ** s, tail, tol=tol)
    # truncation meets tol; what is left is rounding relative to the sum
    assert a.error_bound <= tol + 16 * EPS * abs(a.value)
    assert abs(mpmath.mpf(a.value) - mpmath.zeta(s, t)) <= a.error_bound


@given(st.integers(1, 10 ** 6))
def test_convex_tail_is_monotone(n):
    assert INV_SQ_BRACKET(n + 1) <= INV_SQ_BRACKET(n)
    lo, hi = INV_SQ_BRACKET.lower(n), INV_SQ_BRACKET.upper(n)
    true = mpmath.zeta(2, n + 1)
    assert lo <= true <= hi
