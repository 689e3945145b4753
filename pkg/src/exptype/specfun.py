"""Laguerre polynomials, log-gamma, terminating hypergeometric sums and
half-line quadrature.

All functions accept scalars; ``laguerre``, ``laguerre_derivative`` and
``hyp1f1_poly`` also broadcast over numpy arrays in ``x``/``xi``.
"""

from __future__ import annotations

import math
import warnings
from typing import Callable

import numpy as np
from scipy import integrate

from .core import DomainError


class QuadratureError(ArithmeticError):
    """Quadrature failed to reach its tolerance; ``estimate`` holds the best value."""

    def __init__(self, message, estimate, error):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


def laguerre(n, alpha, x):
    """Generalized Laguerre polynomial L_n^alpha(x) by upward recurrence.

    Parameters
    ----------
    n : int
        degree; negative degrees return zero (convenient for derivative
        identities)
    alpha : float
        superscript
    x : float or numpy.ndarray
        argument

    Returns
    -------
    float or numpy.ndarray
    """
    x = np.asarray(x, dtype=float)
    if n < 0:
        return np.zeros_like(x)[()]
    prev = np.ones_like(x)
    if n == 0:
        return prev[()]
    cur = 1.0 + alpha - x
    for k in range(1, n):
        prev, cur = cur, ((2 * k + alpha + 1 - x) * cur - (k + alpha) * prev) / (k + 1)
    return cur[()]


def laguerre_derivative(n, alpha, x, order=1):
    """d^k/dx^k L_n^alpha(x) = (-1)^k L_{n-k}^{alpha+k}(x)."""
    return (-1) ** order * laguerre(n - order, alpha + order, x)


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


def log_gamma(x: float) -> float:
    """ln Gamma(x) for x > 0."""
    if not x > 0:
        raise DomainError(f"log_gamma needs x > 0, got {x!r}")
    return math.lgamma(x)


def _gamma_sign(x: float) -> int:
    if x > 0:
        return 1
    if _is_nonpositive_integer(x):
        raise DomainError(f"Gamma has a pole at {x!r}")
    return -1 if math.floor(-x) % 2 == 0 else 1


def gamma_ratio(num, den) -> float:
    """prod Gamma(num_i) / prod Gamma(den_j) through log-gamma, with sign.

    Poles in the numerator raise; poles in the denominator give zero.
    """
    if any(_is_nonpositive_integer(d) for d in den):
        for a in num:
            _gamma_sign(a)
        return 0.0
    sign = 1
    log = 0.0
    for a in num:
        sign *= _gamma_sign(a)
        log += math.lgamma(a)
    for b in den:
        sign *= _gamma_sign(b)
        log -= math.lgamma(b)
    return sign * math.exp(log)


def hyp1f1_poly(n: int, sigma: float, xi):
    """Terminating confluent series 1F1(-n; sigma; xi).

    Terms are built by running products, term_{m+1}/term_m =
    -(n - m) xi / ((m + 1)(sigma + m)), so no gamma function is formed.

    Raises
    ------
    DomainError
        If sigma + m is a non-positive integer for some m <= n.
    """
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    for m in range(n + 1):
        if _is_nonpositive_integer(sigma + m):
            raise DomainError(f"pole: sigma + {m} = {sigma + m}")
    xi = np.asarray(xi, dtype=float)
    term = np.ones_like(xi)
    total = term.copy()
    for m in range(n):
        term = term * (-(n - m) * xi / ((m + 1) * (sigma + m)))
        total = total + term
    return total[()]


def hyp3f2_unit(m: int, a: float, b: float, d: float, e: float) -> float:
    """Terminating 3F2(-m, a, b; d, e; 1) as a finite Pochhammer sum."""
    if m < 0:
        raise DomainError(f"degree must be >= 0, got {m}")
    term = 1.0
    total = 1.0
    for k in range(m):
        den = (d + k) * (e + k) * (k + 1)
        if d + k == 0 or e + k == 0:
            raise DomainError(f"denominator Pochhammer vanishes at k={k}")
        term *= (-m + k) * (a + k) * (b + k) / den
        total += term
    return total


def laguerre_weighted_integral(m: int, n: int, alpha: float, lam: float,
                               betap: float, delta: float) -> float:
    """Closed form of int_0^inf t^(alpha-1) e^(-delta t) L_m^lam(delta t) L_n^betap(delta t) dt.

    Evaluated as a gamma prefactor times a terminating 3F2 at unit argument.
    When ``lam == betap`` the integrand is symmetric in (m, n) and the pair is
    reordered so the 3F2 stays finite.
    """
    if not (alpha > 0 and delta > 0):
        raise DomainError("need alpha > 0 and delta > 0")
    if lam == betap and m > n:
        m, n = n, m
    c = alpha - betap
    pre = gamma_ratio([alpha, n - alpha + betap + 1, m + lam + 1],
                      [m + 1, n + 1, 1 - alpha + betap, 1 + lam])
    if pre == 0.0 and c != 0:
        # Gamma(1 - alpha + betap) pole; only finite through the 3F2 limit
        raise DomainError("closed form degenerate for these parameters")
    return delta ** (-alpha) * pre * hyp3f2_unit(m, alpha, c, -n + c, lam + 1)


def integrate_halfline(f: Callable[[float], float], scale: float, rtol: float = 1e-10,
                       atol: float = 0.0, max_panels: int = 4000):
    """Integrate f over [0, inf) for f decaying at least like exp(-scale t).

    The half-line is cut into panels of width 2/scale, each integrated by
    adaptive Gauss-Kronrod, until the running sum stops changing; the rest
    goes to a final infinite panel.

    Returns
    -------
    value, error : float
        integral and absolute error estimate

    Raises
    ------
    QuadratureError
        If the error estimate exceeds ``max(rtol*|value|, atol)`` or the panel
        cap is hit.
    """
    if not scale > 0:
        raise DomainError(f"scale must be positive, got {scale!r}")
    with warnings.catch_warnings():
        # roundoff warnings on negligible panels; the error estimate is kept
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        return _panel_integrate(f, scale, rtol, atol, max_panels)


def _panel_integrate(f, scale, rtol, atol, max_panels):
    width = 2.0 / scale
    total = 0.0
    err = 0.0
    quiet = 0
    lo = 0.0
    for _ in range(max_panels):
        val, e = integrate.quad(f, lo, lo + width, epsabs=0.0, epsrel=max(rtol * 1e-2, 1e-13), limit=200)
        total += val
        err += e
        lo += width
        if total != 0.0 and abs(val) <= 1e-17 * abs(total):
            quiet += 1
            if quiet >= 3:
                break
        else:
            quiet = 0
    else:
        raise QuadratureError("panel cap reached before the integrand decayed", total, err)
    val, e = integrate.quad(f, lo, np.inf, epsabs=1e-300, epsrel=max(rtol, 1e-13), limit=200)
    total += val
    err += e
    if not math.isfinite(total) or err > max(rtol * abs(total), atol, 1e-300):
        raise QuadratureError(f"error estimate {err:.3g} exceeds target", total, err)
    return total, err
