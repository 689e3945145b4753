"""Eigenfunctions phi_n(z) = N z^eps exp(-a1 z) L_n^{2 eps}(2 a1 z), z = exp(beta x).

Derivatives are analytic: the envelope w = z^eps exp(-a1 z) and the
Laguerre factor are differentiated separately and combined by Leibniz.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .core import DerivedParams, DomainError, epsilon_of
from .specfun import (hyp1f1_poly, integrate_halfline, laguerre, laguerre_derivative,
                      laguerre_weighted_integral, log_gamma)


class Convention(str, enum.Enum):
    PHYSICAL = "physical"     # eps = eps_n from the quantization condition
    FIXED_EPS = "fixed_eps"   # eps supplied, shared across n


class DivergentNormError(DomainError):
    """Normalization requested for a state with eps <= 0."""


@dataclass(frozen=True)
class BoundState:
    n: int
    epsilon: float
    a1: float
    norm: float = 1.0
    convention: Convention = Convention.PHYSICAL

    @property
    def formal(self) -> bool:
        """True when eps <= 0, i.e. the state is not square integrable."""
        return self.epsilon <= 0

    def with_norm(self, norm: float) -> "BoundState":
        return BoundState(self.n, self.epsilon, self.a1, norm, self.convention)


def squared_norm_quadrature(state: BoundState, beta: float) -> float:
    """int |phi(x)|^2 dx = int_0^inf |phi(z)|^2 dz / (beta z), by quadrature."""
    if state.formal:
        raise DivergentNormError(f"eps = {state.epsilon:.6g} <= 0: norm integral diverges at z -> 0")
    unit = state.with_norm(1.0)
    # rescale by the envelope maximum so the integrand is O(1) near its peak
    z_peak = state.epsilon / state.a1
    log_peak = 2 * (state.epsilon * math.log(z_peak) - state.a1 * z_peak)

    def integrand(z):
        if z == 0.0:
            return 0.0
        return math.exp(-log_peak) * float(eval_state(unit, z)) ** 2 / z

    value, _ = integrate_halfline(integrand, 2 * state.a1, rtol=1e-12)
    return state.norm ** 2 * value * math.exp(log_peak) / beta


def build_state(params: DerivedParams, n: int, convention: Convention | str = Convention.PHYSICAL,
                *, eps: float | None = None, normalize: bool = True) -> BoundState:
    """Construct phi_n in the requested convention.

    The normalization constant comes from quadrature in x. Formal states
    (eps <= 0) get ``norm = 1`` unless ``normalize`` is set explicitly, in
    which case ``DivergentNormError`` is raised.
    """
    if n < 0:
        raise DomainError(f"level index must be >= 0, got {n}")
    convention = Convention(convention)
    if convention is Convention.PHYSICAL:
        if eps is not None and eps != epsilon_of(params, n):
            raise DomainError("physical convention fixes eps = (A - 2n - 1)/2")
        eps = epsilon_of(params, n)
    elif eps is None:
        raise DomainError("fixed_eps convention needs eps")
    state = BoundState(n=n, epsilon=float(eps), a1=params.a1, convention=convention)
    if not normalize:
        return state
    return state.with_norm(1.0 / math.sqrt(squared_norm_quadrature(state, params.beta)))


def build_physical(params: DerivedParams, n: int) -> BoundState:
    """Physical state, normalized when eps > 0 and left raw (formal) otherwise."""
    eps = epsilon_of(params, n)
    return build_state(params, n, Convention.PHYSICAL, normalize=eps > 0)


def _log_envelope(state: BoundState, z):
    return state.epsilon * np.log(z) - state.a1 * z


def eval_state(state: BoundState, z):
    """norm * z^eps exp(-a1 z) L_n^{2eps}(2 a1 z), evaluated in the log domain."""
    z = np.asarray(z, dtype=float)
    if np.any(z <= 0):
        raise DomainError("z must be positive")
    out = state.norm * np.exp(_log_envelope(state, z)) * laguerre(state.n, 2 * state.epsilon, 2 * state.a1 * z)
    return out[()]


def eval_state_x(state: BoundState, x, beta: float):
    """phi at z = exp(beta x). Pass -beta for the Morse-oriented coordinate."""
    x = np.asarray(x, dtype=float)
    z = np.exp(beta * x)
    out = np.zeros_like(z)
    ok = z > 0
    out[ok] = eval_state(state, z[ok])
    return out[()]


def state_derivatives(state: BoundState, z, order: int = 2) -> list[np.ndarray]:
    """[phi, phi', ..., phi^(order)] in z, analytic, order <= 3."""
    if not 0 <= order <= 3:
        raise DomainError("order must be in 0..3")
    z = np.asarray(z, dtype=float)
    eps, a1, n = state.epsilon, state.a1, state.n
    w = state.norm * np.exp(_log_envelope(state, z))
    # w^(k) = w * B_k with u = eps/z - a1, u' = -eps/z^2, u'' = 2 eps/z^3
    u = eps / z - a1
    du = -eps / z ** 2
    ddu = 2 * eps / z ** 3
    env = [w, u * w, (u * u + du) * w, (u ** 3 + 3 * u * du + ddu) * w]
    x = 2 * a1 * z
    lag = [laguerre_derivative(n, 2 * eps, x, k) * (2 * a1) ** k if k else laguerre(n, 2 * eps, x)
           for k in range(order + 1)]
    out = []
    for j in range(order + 1):
        out.append(sum(math.comb(j, k) * env[j - k] * lag[k] for k in range(j + 1)))
    return out


def default_z_grid(state: BoundState, params: DerivedParams | None = None, points: int = 200):
    """Geometric grid over [1e-3 z_peak, 3 z_turn].

    z_peak is where |phi| is largest on a fine scan; z_turn is the outer root
    of a1^2 z^2 + a2^2 z + eps^2 = 0 when real, otherwise the Laguerre
    envelope edge (4n + 2|eps| + 2)/(2 a1). Formal states have no interior
    peak, so their grid starts at 0.1 |eps|/a1 instead; for small eps the
    lower end is also held above 1e-2 max(|eps|, sqrt|eps|)/a1.
    """
    eps, a1, n = state.epsilon, state.a1, state.n
    z_edge = (4 * n + 2 * abs(eps) + 2) / (2 * a1)
    z_turn = z_edge
    if params is not None:
        disc = params.a2sq ** 2 - 4 * a1 ** 2 * eps ** 2
        if params.a2sq < 0 and disc >= 0:
            z_turn = max((-params.a2sq + math.sqrt(disc)) / (2 * a1 ** 2), z_edge / 4)
    if state.formal:
        # |phi| grows without bound as z -> 0; start where eps^2/z^2 = 100 a1^2
        return np.geomspace(0.1 * max(abs(eps), 0.5) / a1, 3 * z_turn, points)
    scan = np.geomspace(1e-4 * z_turn, 3 * z_turn, 4000)
    vals = np.abs(eval_state(state.with_norm(1.0), scan))
    z_peak = scan[int(np.argmax(vals))]
    # keep eps/z^2 and eps^2/z^2 within 1e4 a1^2 so the terms of the
    # equation do not cancel far below the a1^2 phi scale
    z_floor = 1e-2 * max(abs(eps), math.sqrt(abs(eps))) / a1
    return np.geomspace(max(1e-3 * z_peak, z_floor), 3 * z_turn, points)


def ode_residual(state: BoundState, params: DerivedParams, z_grid=None) -> float:
    """Max relative residual of phi'' + phi'/z - (a1^2 + a2^2/z + eps^2/z^2) phi.

    Normalized by max |a1^2 phi| over grid points where |phi| exceeds 1e-12 of
    its maximum.
    """
    if z_grid is None:
        z_grid = default_z_grid(state, params)
    z = np.asarray(z_grid, dtype=float)
    phi, d1, d2 = state_derivatives(state, z, 2)
    eps = state.epsilon
    res = d2 + d1 / z - (params.a1 ** 2 + params.a2sq / z + eps ** 2 / z ** 2) * phi
    mask = np.abs(phi) > 1e-12 * np.max(np.abs(phi))
    return float(np.max(np.abs(res[mask])) / np.max(np.abs(params.a1 ** 2 * phi[mask])))


def norm_closed_form(state: BoundState, beta: float) -> float:
    """Squared norm int |phi(x)|^2 dx from the Laguerre product integral.

    Uses alpha -> 2 eps, delta -> 2 a1 and superscripts 2 eps, with the
    1/(beta z) measure.
    """
    if state.formal:
        raise DivergentNormError(f"eps = {state.epsilon:.6g} <= 0")
    two_eps = 2 * state.epsilon
    core = laguerre_weighted_integral(state.n, state.n, two_eps, two_eps, two_eps, 2 * state.a1)
    return state.norm ** 2 * core / beta


def cross_integral_closed_form(m: int, n: int, eps: float, a1: float) -> float:
    """int_0^inf z^(2eps-1) e^(-2 a1 z) L_m^{2eps}(2a1 z) L_n^{2eps}(2a1 z) dz."""
    two_eps = 2 * eps
    return laguerre_weighted_integral(m, n, two_eps, two_eps, two_eps, 2 * a1)


def cross_integral_quadrature(m: int, n: int, eps: float, a1: float, weight_shift: int = -1) -> float:
    """Same integral by quadrature; ``weight_shift`` selects z^(2eps + shift)."""
    p = 2 * eps + weight_shift
    z_peak = max(p, 0.5) / (2 * a1)
    log_peak = p * math.log(z_peak) - 2 * a1 * z_peak

    def integrand(z):
        if z == 0.0:
            return 0.0
        return (math.exp(p * math.log(z) - 2 * a1 * z - log_peak)
                * float(laguerre(m, 2 * eps, 2 * a1 * z)) * float(laguerre(n, 2 * eps, 2 * a1 * z)))

    size, _ = integrate_halfline(lambda z: abs(integrand(z)), 2 * a1, rtol=1e-11)
    value, _ = integrate_halfline(integrand, 2 * a1, rtol=1e-11, atol=1e-11 * size)
    return value * math.exp(log_peak)


def _series_eq10(n: int, eps: float, xi):
    """sum_k (-1)^k C(n, k) Gamma(2eps+1)/Gamma(2eps+1+k) xi^k, term by term via log-gamma."""
    xi = np.asarray(xi, dtype=float)
    lg0 = log_gamma(2 * eps + 1)
    terms = []
    for k in range(n + 1):
        ratio = math.exp(lg0 - log_gamma(2 * eps + 1 + k))
        terms.append((-1) ** k * math.comb(n, k) * ratio * xi ** k)
    terms = np.array(terms)
    return terms.sum(axis=0), np.abs(terms).sum(axis=0)


def series_identity_check(n: int, eps: float, a1: float, z_grid) -> float:
    """Max pairwise deviation between the explicit finite sum, 1F1(-n; 2eps+1; 2a1 z)
    and n! Gamma(2eps+1)/Gamma(n+2eps+1) L_n^{2eps}(2a1 z).

    Deviations are scaled by the sum of absolute series terms, the natural
    size of the rounding error of any of the three evaluations.
    """
    sigma = 2 * eps + 1
    for k in range(n + 1):
        if sigma + k <= 0:
            raise DomainError(f"Gamma pole or negative argument at 2eps+1+{k} = {sigma + k}")
    xi = 2 * a1 * np.asarray(z_grid, dtype=float)
    direct, scale = _series_eq10(n, eps, xi)
    confluent = np.asarray(hyp1f1_poly(n, sigma, xi))
    pref = math.exp(log_gamma(n + 1) + log_gamma(sigma) - log_gamma(n + sigma))
    lag = pref * np.asarray(laguerre(n, 2 * eps, xi))
    devs = [np.abs(direct - confluent), np.abs(direct - lag), np.abs(confluent - lag)]
    return float(max(np.max(d / scale) for d in devs))


def laplace_transform(eps: float, a1: float, a2sq: float, t):
    """f(t) = (t + a1)^(-(2eps+1)) ((t - a1)/(t + a1))^(-a2^2/(2a1) - (2eps+1)/2) for t > a1."""
    t = np.asarray(t, dtype=float)
    p = -a2sq / (2 * a1) - (2 * eps + 1) / 2
    return np.exp(-(2 * eps + 1) * np.log(t + a1) + p * (np.log(t - a1) - np.log(t + a1)))[()]


def laplace_solution_check(eps: float, a1: float, a2sq: float, t_grid, coefficient: float | None = None) -> float:
    """Residual of (t^2 - a1^2) f' + (c t + a2^2) f = 0 for the closed-form f.

    ``c`` defaults to 2 eps + 1. The pointwise residual is divided by |f| and
    by the size of the two terms, so the result is a relative measure.
    """
    t = np.asarray(t_grid, dtype=float)
    if np.any(t - a1 < 0.1 * a1):
        raise DomainError("t grid must satisfy t >= 1.1 a1 (away from the branch points)")
    c = 2 * eps + 1 if coefficient is None else coefficient
    p = -a2sq / (2 * a1) - (2 * eps + 1) / 2
    # f'/f from the log-derivative
    dlog = -(2 * eps + 1) / (t + a1) + p * 2 * a1 / (t ** 2 - a1 ** 2)
    term1 = (t ** 2 - a1 ** 2) * dlog
    term2 = c * t + a2sq
    return float(np.max(np.abs(term1 + term2) / (np.abs(term1) + np.abs(term2))))


def squared_norm_trapezoid(state: BoundState, beta: float, points: int = 20001) -> float:
    """int |phi(x)|^2 dx by the trapezoid rule on a uniform grid in ln z.

    Independent of ``integrate_halfline``; the integrand decays
    super-exponentially at both ends so the rule converges spectrally.
    """
    if state.formal:
        raise DivergentNormError(f"eps = {state.epsilon:.6g} <= 0")
    eps, a1, n = state.epsilon, state.a1, state.n
    z_peak = eps / a1
    u_lo = math.log(z_peak) - 40.0 / eps
    u_hi = math.log((4 * n + 2 * eps + 80.0) / a1)
    u = np.linspace(u_lo, u_hi, points)
    phi = eval_state(state, np.exp(u))
    return float(np.trapezoid(phi ** 2, u) / beta)
