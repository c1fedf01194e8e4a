"""Dirichlet (area) integrals and the closed forms built around them.

``Delta(r, g)`` is the area, counted with multiplicity, of the image of
``|z| < r`` under ``g``:

    Delta(r, g) = iint_{|z|<r} |g'(z)|^2 dx dy.

Three independent engines compute it: a contour rule on ``|z| = r``
(:func:`area_green`), Parseval's identity on Taylor coefficients
(:func:`concave_dirichlet.series.dirichlet_parseval`) and a polar 2-D rule
(:func:`area_grid2d`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .hypergeom import as_unit
from .series import TruncatedSeries, evaluate, series_derivative

ArrayFn = Callable[[np.ndarray], np.ndarray]


class SingularParameterError(ArithmeticError):
    """A closed form was evaluated on its singular set."""

    def __init__(self, message: str, **params):
        super().__init__(message)
        self.params = params


@dataclass(frozen=True)
class AnalyticMap:
    """Pointwise handle ``(g, g')`` for an analytic function on the disk."""

    value: ArrayFn
    deriv: ArrayFn
    name: str = ""
    series: TruncatedSeries | None = None

    def __call__(self, z):
        return self.value(z)

    @classmethod
    def from_series(cls, s: TruncatedSeries, name: str = ""):
        d = series_derivative(s)
        return cls(lambda z: evaluate(s, z), lambda z: evaluate(d, z), name, s)


@dataclass(frozen=True)
class AreaResult:
    value: float
    method: str
    nodes: int
    est_error: float
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.value < -1e-12:
            raise ValueError("area must be nonnegative")
        if self.est_error < 0:
            raise ValueError("error estimate must be nonnegative")


def area_green(g: AnalyticMap, r: float, nodes: int = 1024) -> AreaResult:
    """Area from the boundary integral over ``|z| = r``.

    Evaluates ``(1/2) int_0^{2 pi} |g|^2 Re(-z g'/g) d theta`` with the
    periodic trapezoid rule.  That integral equals minus the area for a
    positively oriented image, so the magnitude is returned as ``value``
    and the signed integral is kept in ``meta["signed"]``.
    """
    if not 0 < r < 1:
        raise ValueError(f"radius must lie in (0, 1), got {r}")
    theta = 2 * math.pi * np.arange(nodes) / nodes
    z = r * np.exp(1j * theta)
    gv = g.value(z)
    if np.any(np.abs(gv) < 1e-12):
        raise ZeroDivisionError("g vanishes on the contour")
    gp = g.deriv(z)
    # |g|^2 Re(-z g'/g) = -Re(z g' conj(g))
    integrand = -np.real(z * gp * np.conj(gv))
    signed = 0.5 * integrand.mean() * 2 * math.pi
    # half-grid comparison as a cheap error estimate
    half = 0.5 * integrand[::2].mean() * 2 * math.pi if nodes % 2 == 0 else signed
    return AreaResult(abs(signed), "green", nodes, abs(signed - half), {"signed": signed})


def _midpoint_polar(gprime: ArrayFn, r: float, n_r: int, n_theta: int) -> float:
    rho = (np.arange(n_r) + 0.5) * (r / n_r)
    theta = (np.arange(n_theta) + 0.5) * (2 * math.pi / n_theta)
    z = rho[:, None] * np.exp(1j * theta)[None, :]
    vals = np.abs(gprime(z)) ** 2
    return float((vals.sum(axis=1) * rho).sum() * (r / n_r) * (2 * math.pi / n_theta))


def area_grid2d(
    gprime: ArrayFn | AnalyticMap,
    r: float,
    grid: tuple[int, int] = (512, 256),
    extrapolate: bool = True,
) -> AreaResult:
    """Midpoint polar rule for ``iint_{|z|<r} |g'|^2``.

    ``grid = (n_r, n_theta)``.  The angular midpoint rule is spectrally
    accurate; the radial one is second order, so by default the result
    is Richardson-extrapolated from ``n_r`` and ``2 n_r`` radial cells.
    """
    if not 0 < r < 1:
        raise ValueError(f"radius must lie in (0, 1), got {r}")
    fn = gprime.deriv if isinstance(gprime, AnalyticMap) else gprime
    n_r, n_t = grid
    coarse = _midpoint_polar(fn, r, n_r, n_t)
    if not extrapolate:
        return AreaResult(max(coarse, 0.0), "grid2d", n_r * n_t, 0.0)
    fine = _midpoint_polar(fn, r, 2 * n_r, n_t)
    value = (4 * fine - coarse) / 3
    return AreaResult(max(value, 0.0), "grid2d", 3 * n_r * n_t, abs(fine - coarse) / 3,
                      {"coarse": coarse, "fine": fine})


# -- Yamashita's maxima --------------------------------------------------------

def yamashita_max(kind: str, r: float) -> float:
    """Maxima of ``Delta(r, f/z)`` and ``Delta(r, z/f)`` over normalized univalent ``f``.

    ``kind`` is ``"f_over_z"`` (``2 pi r^2 (r^2+2) / (1-r^2)^4``, needs
    ``r < 1``) or ``"z_over_f"`` (``2 pi r^2 (r^2 + 2)``).
    """
    if not 0 < r <= 1:
        raise ValueError(f"radius must lie in (0, 1], got {r}")
    base = 2 * math.pi * r * r * (r * r + 2)
    if kind == "z_over_f":
        return base
    if kind == "f_over_z":
        if r == 1:
            raise ValueError("Delta(1, f/z) diverges for the Koebe function")
        return base / (1 - r * r) ** 4
    raise ValueError(f"unknown kind {kind!r}")


def convex_max(r: float) -> float:
    """``pi r^2``: the value of ``Delta(r, z/f)`` for ``f(z) = z/(1-z)``."""
    return math.pi * r * r


# -- closed forms around D(x) --------------------------------------------------

def power_of_minus_conj(alpha: float, x) -> complex:
    """``(-conj(x))**alpha = exp(i alpha Arg(-conj(x)))`` with ``Arg`` in ``(-pi, pi]``."""
    x = as_unit(x)
    w = -x.conjugate()
    return complex(np.exp(1j * alpha * math.atan2(w.imag, w.real)))


def _one_minus_power(alpha: float, x) -> complex:
    # 1 - e^{i th} = -2i sin(th/2) e^{i th/2}, without cancellation near th = 0
    w = -as_unit(x).conjugate()
    th = alpha * math.atan2(w.imag, w.real)
    return complex(-2j * math.sin(th / 2) * np.exp(0.5j * th))


def half_identity_residual(alpha: float, x) -> float:
    """``Re(1/(1 - (-conj x)^alpha)) - 1/2``; zero off the singular set."""
    q = _one_minus_power(alpha, x)
    if abs(q) < 1e-14:
        raise SingularParameterError("(-conj x)^alpha = 1", alpha=alpha, x=as_unit(x))
    return (1 / q).real - 0.5


def D_of_x(alpha: float, x) -> complex:
    """``D(x) = 1 / ((1 + x)(1 - (-conj x)^alpha))``."""
    xc = as_unit(x)
    q = _one_minus_power(alpha, xc)
    if abs(1 + xc) < 1e-14:
        raise SingularParameterError("x = -1", alpha=alpha, x=xc)
    if abs(q) < 1e-12:
        raise SingularParameterError("(-conj x)^alpha = 1", alpha=alpha, x=xc)
    return 1 / ((1 + xc) * q)


def closed_area(alpha: float, x, b: complex, r: float) -> float:
    """``(pi r^2 / (alpha |b|^2)) ((alpha - 1)/4 + Re D(x))``."""
    d = D_of_x(alpha, x)
    return math.pi * r * r / (alpha * abs(b) ** 2) * ((alpha - 1) / 4 + d.real)


def _reduced(alpha: float, gamma: float):
    g = abs(float(gamma))
    if g >= math.pi:
        raise SingularParameterError("|gamma| must be < pi", alpha=alpha, gamma=gamma)
    u = (math.pi - g) * alpha / 2
    s = math.sin(u)
    if abs(s) < 1e-14:
        raise SingularParameterError(
            "sin((pi - |gamma|) alpha / 2) = 0", alpha=alpha, gamma=gamma
        )
    return g, u, s


def E_gamma(alpha: float, gamma: float) -> float:
    """``tan(|gamma|/2) / (4 tan((pi - |gamma|) alpha / 2))``; even in ``gamma``.

    Written with ``cot`` so that ``tan((pi - |gamma|) alpha/2) = inf`` gives
    the limiting value 0 instead of an error.
    """
    g, u, s = _reduced(alpha, gamma)
    return math.tan(g / 2) * math.cos(u) / (4 * s)


def E_prime(alpha: float, gamma: float) -> float:
    """Derivative of :func:`E_gamma` in ``gamma`` (odd in ``gamma``)."""
    g, u, s = _reduced(alpha, gamma)
    num = math.sin((math.pi - g) * alpha) + alpha * math.sin(g)
    val = num / (16 * math.cos(g / 2) ** 2 * s * s)
    return val if gamma >= 0 else -val


E_KOEBE_LIMIT = -0.125  # lim_{gamma -> 0} E(gamma) at alpha = 2


def gamma0(alpha: float, b_abs: float) -> float:
    """Largest admissible ``|Arg x|`` given ``|b|``.

    ``pi - arctan(sqrt(4 a^2 b^2 - 1) / |2 a^2 b^2 - 1|)`` when
    ``2 a^2 b^2 >= 1`` and ``arctan(...)`` otherwise.
    """
    lo = 1 / (2 * alpha)
    if not (lo - 1e-15 <= b_abs <= 1 + 1e-15):
        raise ValueError(f"|b| must lie in [1/(2 alpha), 1], got {b_abs}")
    q = 2 * alpha * alpha * b_abs * b_abs
    num = math.sqrt(max(2 * q - 1, 0.0))
    den = abs(q - 1)
    ang = math.atan2(num, den)
    return math.pi - ang if q >= 1 else ang


@dataclass(frozen=True)
class BoundResult:
    alpha: float
    b_abs: float
    gamma0: float
    E0_scan: float
    E0_endpoint: float | None
    argmax: float
    M: float
    skipped: tuple = ()


def M_bound(alpha: float, b, nodes: int = 4097) -> BoundResult:
    """``M = (1/(alpha |b|^2)) ((alpha - 1)/4 + 1/4 + E_0)`` with ``E_0 = max E``.

    ``E_0`` is taken from a dense scan of ``E`` over ``[-gamma0, gamma0]``
    polished by golden-section search around the best node.  Nodes where
    ``E`` is singular are skipped and listed.  The endpoint value
    ``E(gamma0)`` is recorded alongside for comparison.
    """
    b_abs = abs(b)
    g0 = gamma0(alpha, b_abs)
    grid = np.linspace(-g0, g0, nodes) if g0 > 0 else np.array([0.0])
    vals = np.full(grid.size, -np.inf)
    skipped = []
    for i, g in enumerate(grid):
        try:
            vals[i] = E_gamma(alpha, g)
        except SingularParameterError:
            skipped.append(float(g))
    if not np.any(np.isfinite(vals)):
        raise SingularParameterError("E is singular on the whole scan range", alpha=alpha)
    k = int(np.argmax(vals))
    best, arg = float(vals[k]), float(grid[k])
    if grid.size > 1:
        lo, hi = grid[max(k - 1, 0)], grid[min(k + 1, grid.size - 1)]
        polished = _golden_max(lambda g: _safe_E(alpha, g), lo, hi)
        if polished[1] > best:
            arg, best = polished
    try:
        endpoint = E_gamma(alpha, g0)
    except SingularParameterError:
        endpoint = None
    m = (1 / (alpha * b_abs**2)) * ((alpha - 1) / 4 + 0.25 + best)
    return BoundResult(alpha, b_abs, g0, best, endpoint, arg, m, tuple(skipped))


def _safe_E(alpha, g):
    try:
        return E_gamma(alpha, g)
    except SingularParameterError:
        return -math.inf


def _golden_max(fn, lo, hi, iters=80):
    phi = (math.sqrt(5) - 1) / 2
    a, b = lo, hi
    c, d = b - phi * (b - a), a + phi * (b - a)
    fc, fd = fn(c), fn(d)
    for _ in range(iters):
        if fc >= fd:
            b, d, fd = d, c, fc
            c = b - phi * (b - a)
            fc = fn(c)
        else:
            a, c, fc = c, d, fd
            d = a + phi * (b - a)
            fd = fn(d)
    return (c, fc) if fc >= fd else (d, fd)
