"""Special functions: the monopole self-energy series, terminating
hypergeometric polynomials and an adaptive quadrature rule."""
from __future__ import annotations

import functools
import heapq
import math
from dataclasses import dataclass

import numpy as np
from scipy.special import polygamma

from .errors import DomainError, InvalidParameterError, NonConvergenceError, ToleranceNotReachedError

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class SeriesValue:
    value: float
    error_bound: float
    terms_used: int


def _series_terms(beta, L):
    """Terms l = 0..L-1 of S, written as 1/sqrt(1-x) - 1 with x = beta/(2l+1)^2.

    The rationalised form x / (sqrt(1-x) (1 + sqrt(1-x))) avoids the cancellation
    in (2l+1)/sqrt(4l(l+1)+alpha^2) - 1 once the terms become small.
    """
    odd = 2.0 * np.arange(L, dtype=float) + 1.0
    x = beta / odd**2
    s = np.sqrt(1.0 - x)
    return x / (s * (1.0 + s))


@functools.lru_cache(maxsize=1024)
def monopole_series_S(alpha: float, tolerance: float = 1e-10, max_terms: int = 10**7) -> SeriesValue:
    """Self-energy sum S(alpha) = sum_l [(2l+1)/sqrt(4l(l+1)+alpha^2) - 1].

    Explicit terms up to a cutoff L are summed, and the tail beyond L is
    replaced by its leading asymptotic form beta/(2(2l+1)^2), beta = 1-alpha^2,
    summed in closed form through the trigamma function. What is left over is
    positive and bounded by the next order, (3/8) beta^2 / (2l+1)^4, inflated
    by the Lagrange remainder factor. L doubles until that bound meets
    ``tolerance``.
    """
    if not (math.isfinite(alpha) and 0.0 < alpha <= 1.0):
        raise InvalidParameterError(f"alpha must lie in (0,1], got {alpha!r}")
    if not tolerance > 0:
        raise InvalidParameterError("tolerance must be positive")
    if max_terms < 10:
        raise InvalidParameterError("max_terms must be at least 10")

    beta = (1.0 - alpha) * (1.0 + alpha)
    if beta == 0.0:
        return SeriesValue(0.0, 0.0, 1)

    L = min(64, max_terms)
    while True:
        explicit = math.fsum(_series_terms(beta, L))
        # sum_{l>=L} 1/(2l+1)^2 = psi'(L+1/2)/4 ;  sum_{l>=L} 1/(2l+1)^4 = psi'''(L+1/2)/96
        tail = 0.5 * beta * float(polygamma(1, L + 0.5)) / 4.0
        x_max = beta / (2.0 * L + 1.0) ** 2
        remainder = 0.375 * beta**2 / (1.0 - x_max) ** 2.5 * float(polygamma(3, L + 0.5)) / 96.0
        value = explicit + tail
        bound = remainder + 8.0 * _EPS * abs(value)
        if bound <= tolerance:
            return SeriesValue(float(value), float(bound), L)
        if L >= max_terms:
            raise ToleranceNotReachedError(
                f"S({alpha}) error bound {bound:.3e} > {tolerance:.3e} after {L} terms"
            )
        L = min(2 * L, max_terms)


def _check_degree(n):
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 0:
        raise DomainError(f"degree must be a non-negative integer, got {n!r}")
    return int(n)


def _is_nonpositive_integer(v):
    return v <= 0 and float(v).is_integer()


def hyp1f1_terminating(n: int, b: float, x):
    """1F1(-n; b; x) as a degree-n polynomial, accumulated term by term.

    Accepts scalar or array ``x``.
    """
    n = _check_degree(n)
    if _is_nonpositive_integer(b):
        raise DomainError(f"b must not be a non-positive integer, got {b!r}")
    x = np.asarray(x, dtype=float)
    term = np.ones_like(x)
    total = np.ones_like(x)
    for p in range(n):
        term = term * ((p - n) / ((b + p) * (p + 1))) * x
        total = total + term
    return total[()] if total.ndim == 0 else total


def hyp2f1_terminating(n: int, b: float, c: float, y):
    """2F1(-n, b; c; y) summed from the Frobenius recurrence

        a_{p+1} = [p (p + eta1 + eta2) + eta1 eta2] / ((p + 1)(p + eta3)) a_p

    with eta1 = -n, eta2 = b, eta3 = c and a_0 = 1, stopping at degree n.
    """
    n = _check_degree(n)
    y = np.asarray(y, dtype=float)
    if np.any((y < 0.0) | (y > 1.0)):
        raise DomainError("y must lie in [0, 1]")
    eta1, eta2, eta3 = -n, b, c
    coeff = 1.0
    total = np.ones_like(y)
    power = np.ones_like(y)
    for p in range(n):
        if p + eta3 == 0:
            raise DomainError(f"c = {c!r} hits a non-positive integer before termination")
        coeff *= (p * (p + eta1 + eta2) + eta1 * eta2) / ((p + 1) * (p + eta3))
        power = power * y
        total = total + coeff * power
    return total[()] if total.ndim == 0 else total


def _simpson(fa, fm, fb, width):
    return width * (fa + 4.0 * fm + fb) / 6.0


def integrate_radial(f, r_min: float, r_max: float, rel_tol: float = 1e-10,
                     initial_panels: int = 16, max_panels: int = 200_000) -> float:
    """Globally adaptive composite Simpson quadrature of ``f`` on [r_min, r_max].

    The panel with the largest error estimate is bisected until the summed
    estimate drops below ``rel_tol`` times the magnitude of the integral.
    """
    if not r_min < r_max:
        raise DomainError("r_min must be smaller than r_max")
    if not rel_tol > 0:
        raise InvalidParameterError("rel_tol must be positive")

    def evaluate(r):
        v = float(f(r))
        if not math.isfinite(v):
            raise DomainError(f"integrand is not finite at r={r!r}")
        return v

    def make_panel(a, b, fa, fm, fb):
        m = 0.5 * (a + b)
        fl, fr = evaluate(0.5 * (a + m)), evaluate(0.5 * (m + b))
        coarse = _simpson(fa, fm, fb, b - a)
        fine = _simpson(fa, fl, fm, m - a) + _simpson(fm, fr, fb, b - m)
        err = abs(fine - coarse) / 15.0
        return (-err, a, b, fa, fl, fm, fr, fb, fine + (fine - coarse) / 15.0)

    edges = np.linspace(r_min, r_max, initial_panels + 1)
    values = [evaluate(r) for r in edges]
    heap = []
    for i in range(initial_panels):
        a, b = edges[i], edges[i + 1]
        heap.append(make_panel(a, b, values[i], evaluate(0.5 * (a + b)), values[i + 1]))
    heapq.heapify(heap)

    total = sum(p[-1] for p in heap)
    err = sum(-p[0] for p in heap)
    while err > rel_tol * abs(total) and err > 1e-300:
        if len(heap) >= max_panels:
            raise NonConvergenceError(
                f"quadrature error estimate {err:.3e} not below {rel_tol:.1e}*|I| after {len(heap)} panels"
            )
        neg_err, a, b, fa, fl, fm, fr, fb, value = heapq.heappop(heap)
        m = 0.5 * (a + b)
        left = make_panel(a, m, fa, fl, fm)
        right = make_panel(m, b, fm, fr, fb)
        heapq.heappush(heap, left)
        heapq.heappush(heap, right)
        total += left[-1] + right[-1] - value
        err += neg_err - left[0] - right[0]
        if len(heap) % 4096 == 0:
            # resum to stop drift in the running totals
            total = math.fsum(p[-1] for p in heap)
            err = math.fsum(-p[0] for p in heap)
    return math.fsum(p[-1] for p in heap)
