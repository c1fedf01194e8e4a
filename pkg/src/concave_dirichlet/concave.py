"""Concave univalent maps with opening angle ``pi alpha`` at infinity.

The basic object is the extremal map

    F(z) = -b ((1 + x z) / (1 - z))**alpha + b,      |x| = 1, x != -1,

normalized so that ``F(0) = 0`` and ``(F o phi)'(0) = 1``, i.e.
``b = -1 / ((1 + x) alpha phi'(0))``.  Averaging rotated copies of the
kernel against a finite point-mass measure on the circle gives the
Herglotz-type maps whose Taylor coefficients are
``a_n = B_n(alpha, x) sum_j w_j y_j**(n-1)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .hypergeom import UnitModulusParameter, coefficient_A, coefficient_B
from .report import VerificationReport
from .series import TruncatedSeries, series_compose, series_pow_real, DEFAULT_ORDER

BOUNDARY_ARC_EPS = 1e-3
DEFAULT_SEED = 20240611


class BranchCutError(ArithmeticError):
    """The base of the principal power landed on the negative real axis."""


@dataclass(frozen=True)
class DiscreteCircleMeasure:
    """Probability measure ``sum_j w_j delta_{y_j}`` on the unit circle."""

    points: np.ndarray
    weights: np.ndarray

    def __post_init__(self):
        y = np.atleast_1d(np.asarray(self.points, dtype=complex))
        w = np.atleast_1d(np.asarray(self.weights, dtype=float))
        if y.shape != w.shape or y.ndim != 1 or y.size == 0:
            raise ValueError("points and weights must be nonempty 1-d arrays of equal length")
        if np.any(w < 0):
            raise ValueError("weights must be nonnegative")
        if abs(w.sum() - 1) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {w.sum()!r}")
        if np.any(np.abs(np.abs(y) - 1) > 1e-12):
            raise ValueError("atoms must lie on the unit circle")
        y.setflags(write=False)
        w.setflags(write=False)
        object.__setattr__(self, "points", y)
        object.__setattr__(self, "weights", w)

    @classmethod
    def dirac(cls, y: complex = 1.0):
        return cls(np.array([y]), np.array([1.0]))

    @classmethod
    def from_angles(cls, angles: Sequence[float], weights: Sequence[float]):
        return cls(np.exp(1j * np.asarray(angles, dtype=float)), np.asarray(weights, dtype=float))

    @classmethod
    def random(cls, n_atoms: int, rng: np.random.Generator):
        """Uniform atoms, flat-Dirichlet weights."""
        angles = rng.uniform(0.0, 2 * math.pi, n_atoms)
        weights = rng.dirichlet(np.ones(n_atoms))
        # renormalize so the 1e-12 invariant holds after floating point
        weights = weights / weights.sum()
        return cls.from_angles(angles, weights)

    def moments(self, n_max: int) -> np.ndarray:
        """``[sum_j w_j y_j**k for k = 0 .. n_max]``."""
        k = np.arange(n_max + 1)[:, None]
        return (self.weights[None, :] * self.points[None, :] ** k).sum(axis=1)


@dataclass(frozen=True)
class SchwarzSpec:
    """Schwarz function ``phi(z) = (1 - t) z + t z**2`` with ``0 <= t <= 1/3``.

    ``t = 0`` is the identity.  For ``t <= 1/3`` the map is univalent on the
    disk, fixes 0 and 1, and maps the disk into itself.
    """

    t: float = 0.0

    def __post_init__(self):
        if not 0 <= self.t <= 1 / 3:
            raise ValueError(f"t must lie in [0, 1/3], got {self.t}")

    @property
    def kind(self) -> str:
        return "identity" if self.t == 0 else "quadratic"

    @property
    def derivative_at_zero(self) -> float:
        return 1.0 - self.t

    def __call__(self, z):
        return (1 - self.t) * z + self.t * z * z

    def deriv(self, z):
        return (1 - self.t) + 2 * self.t * z

    def series(self, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs([0.0, 1 - self.t, self.t], order)


@dataclass(frozen=True)
class ConcaveMapSpec:
    """Parameters ``(alpha, x, b)`` of ``F o phi`` plus an optional measure.

    Leaving ``b`` as ``None`` selects the normalization ``(F o phi)'(0) = 1``.
    """

    alpha: float
    x: UnitModulusParameter
    b: complex | None = None
    measure: DiscreteCircleMeasure | None = None
    schwarz: SchwarzSpec = field(default_factory=SchwarzSpec)

    def __post_init__(self):
        if not 1 < self.alpha <= 2:
            raise ValueError(f"alpha must lie in (1, 2], got {self.alpha}")
        if not isinstance(self.x, UnitModulusParameter):
            object.__setattr__(self, "x", UnitModulusParameter(float(self.x)))
        if self.b is None:
            b = -1.0 / ((1 + self.xc) * self.alpha * self.schwarz.derivative_at_zero)
            object.__setattr__(self, "b", complex(b))
            tol = 1e-12
            if not (1 / (2 * self.alpha) - tol <= abs(b) <= 1 + tol):
                raise ValueError(
                    f"normalized |b| = {abs(b):.6g} outside [1/(2 alpha), 1]; "
                    "this (alpha, x) pair admits no normalized map"
                )
        else:
            object.__setattr__(self, "b", complex(self.b))

    @property
    def xc(self) -> complex:
        return self.x.x

    @property
    def normalized(self) -> bool:
        target = -1.0 / ((1 + self.xc) * self.alpha * self.schwarz.derivative_at_zero)
        return abs(self.b - target) <= 1e-14 * abs(target)

    @classmethod
    def koebe(cls):
        """``alpha = 2``, ``x = 1``: the Koebe function ``z/(1-z)^2``."""
        return cls(2.0, UnitModulusParameter(0.0))


def admissible_gamma_max(alpha: float, t: float = 0.0) -> float:
    """Largest ``|gamma|`` for which the normalized ``|b|`` stays ``<= 1``."""
    c = 1.0 / (2 * alpha * (1 - t))
    return 2 * math.acos(min(c, 1.0))


def kernel(alpha: float, x: complex, z):
    """Principal branch of ``((1 + x z) / (1 - z))**alpha``."""
    z = np.asarray(z, dtype=complex)
    base = (1 + x * z) / (1 - z)
    if np.any((base.imag == 0) & (base.real < 0)):
        raise BranchCutError("base of the power lies on the negative real axis")
    out = base**alpha
    return out[()] if out.ndim == 0 else out


def _check_pole(z):
    if np.any(np.asarray(z) == 1):
        raise ZeroDivisionError("z = 1 is the pole of the extremal map")


def extremal_F(spec: ConcaveMapSpec, z):
    """``-b ((1 + x z)/(1 - z))**alpha + b`` (no Schwarz function applied)."""
    _check_pole(z)
    return -spec.b * kernel(spec.alpha, spec.xc, z) + spec.b


def extremal_F_prime(spec: ConcaveMapSpec, z):
    _check_pole(z)
    z = np.asarray(z, dtype=complex)
    x = spec.xc
    out = -spec.b * spec.alpha * kernel(spec.alpha - 1, x, z) * (1 + x) / (1 - z) ** 2
    return out[()] if out.ndim == 0 else out


def concave_map(spec: ConcaveMapSpec, z):
    """``f = F o phi``."""
    return extremal_F(spec, spec.schwarz(np.asarray(z, dtype=complex)))


def concave_map_prime(spec: ConcaveMapSpec, z):
    z = np.asarray(z, dtype=complex)
    return extremal_F_prime(spec, spec.schwarz(z)) * spec.schwarz.deriv(z)


def extremal_series(spec: ConcaveMapSpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Taylor series of ``F`` (identity Schwarz function)."""
    num = TruncatedSeries.from_coeffs([1.0, spec.xc], order)
    den = TruncatedSeries.from_coeffs([1.0, -1.0], order)
    k = series_pow_real(num / den, spec.alpha)
    return -spec.b * k + spec.b


def concave_series(spec: ConcaveMapSpec, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Taylor series of ``F o phi``."""
    s = extremal_series(spec, order)
    if spec.schwarz.t == 0:
        return s
    return series_compose(s, spec.schwarz.series(order))


def f_theta(theta: float, z):
    """``(z - (1 - e^{i theta}) z^2 / 2) / (1 - z)^2``; ``theta = pi`` gives ``z/(1-z)``."""
    z = np.asarray(z, dtype=complex)
    out = (z - 0.5 * (1 - np.exp(1j * theta)) * z * z) / (1 - z) ** 2
    return out[()] if out.ndim == 0 else out


def f_theta_series(theta: float, order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Exact coefficients ``a_n = n - (n - 1)(1 - e^{i theta})/2``."""
    n = np.arange(order + 1)
    c = n - 0.5 * (1 - np.exp(1j * theta)) * np.maximum(n - 1, 0)
    c[0] = 0
    return TruncatedSeries(c)


def coeffs_from_measure(spec: ConcaveMapSpec, n_max: int) -> np.ndarray:
    """``[a_1, ..., a_{n_max}]`` with ``a_n = B_n(alpha, x) int y^(n-1) dmu``."""
    if spec.measure is None:
        raise ValueError("spec carries no measure")
    mom = spec.measure.moments(n_max - 1)
    b = np.array([coefficient_B(n, spec.alpha, spec.xc) for n in range(1, n_max + 1)])
    out = b * mom
    out[0] = 1.0  # B_1 = 1 and the zeroth moment is the total mass
    return out


def herglotz_eval(spec: ConcaveMapSpec, z):
    """``1/((1+x) alpha) sum_j (w_j / y_j) [kernel(y_j z) - 1]``."""
    if spec.measure is None:
        raise ValueError("spec carries no measure")
    z = np.asarray(z, dtype=complex)
    y, w = spec.measure.points, spec.measure.weights
    yz = np.multiply.outer(z, y)
    if np.any(yz == 1):
        raise ZeroDivisionError("z hits the pole 1/y of an atom")
    vals = (kernel(spec.alpha, spec.xc, yz) - 1) * (w / y)
    out = vals.sum(axis=-1) / ((1 + spec.xc) * spec.alpha)
    return out[()] if np.ndim(out) == 0 else out


# -- geometry ---------------------------------------------------------------

_GOLDEN = (math.sqrt(5) - 1) / 2


def _golden_min(func, lo, hi, iters=80):
    a, b = lo, hi
    c = b - _GOLDEN * (b - a)
    d = a + _GOLDEN * (b - a)
    fc, fd = func(c), func(d)
    for _ in range(iters):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _GOLDEN * (b - a)
            fc = func(c)
        else:
            a, c, fc = c, d, fd
            d = a + _GOLDEN * (b - a)
            fd = func(d)
    return min(fc, fd)


def boundary_distance(
    spec: ConcaveMapSpec,
    w: complex,
    n_samples: int = 2**14,
    arc_eps: float = BOUNDARY_ARC_EPS,
    max_refine: int = 8,
) -> float:
    """Distance from ``w`` to the boundary curve ``F(e^{i theta})``.

    The circle is sampled on ``[arc_eps, 2 pi - arc_eps]`` (the prevertex
    ``theta = 0`` is sent to infinity); the best few local minima of the
    sampled distance are then polished by golden-section search.
    """
    theta = np.linspace(arc_eps, 2 * math.pi - arc_eps, n_samples)
    dist = np.abs(w - extremal_F(spec, np.exp(1j * theta)))
    best = float(dist.min())
    left = np.r_[np.inf, dist[:-1]]
    right = np.r_[dist[1:], np.inf]
    minima = np.flatnonzero((dist <= left) & (dist <= right))
    minima = minima[np.argsort(dist[minima])][:max_refine]

    def objective(th):
        return abs(w - complex(extremal_F(spec, complex(math.cos(th), math.sin(th)))))

    for i in minima:
        lo = theta[max(i - 1, 0)]
        hi = theta[min(i + 1, n_samples - 1)]
        if hi > lo:
            best = min(best, _golden_min(objective, lo, hi))
    return best


def hyperbolic_product(spec: ConcaveMapSpec, a: complex, n_samples: int = 2**14) -> float:
    """``d(F(a), boundary) / ((1 - |a|^2) |F'(a)|)``, which lies in ``[1/(2 alpha), 1]``."""
    a = complex(a)
    if abs(a) >= 1:
        raise ValueError("a must lie in the open unit disk")
    d = boundary_distance(spec, complex(extremal_F(spec, a)), n_samples)
    return d / ((1 - abs(a) ** 2) * abs(complex(extremal_F_prime(spec, a))))


# -- coefficient bounds ------------------------------------------------------

@dataclass(frozen=True)
class CoefficientSample:
    """Taylor coefficients ``[a_1, ..., a_N]`` of one member of a family."""

    label: str
    alpha: float
    coeffs: np.ndarray


def sample_from_spec(spec: ConcaveMapSpec, n_max: int, label: str = "") -> CoefficientSample:
    return CoefficientSample(label or f"alpha={spec.alpha:g},gamma={spec.x.gamma:.6g}",
                             spec.alpha, coeffs_from_measure(spec, n_max))


def sample_f_theta(theta: float, n_max: int) -> CoefficientSample:
    return CoefficientSample(f"f_theta(theta={theta:.6g})", 2.0,
                             f_theta_series(theta, n_max).coeffs[1:])


def random_specs(alpha: float, trials: int, n_atoms: int = 4, seed: int = DEFAULT_SEED,
                 random_x: bool = True) -> list[ConcaveMapSpec]:
    """Seeded normalized specs with random atoms and (optionally) random ``x``."""
    rng = np.random.default_rng(seed)
    gmax = admissible_gamma_max(alpha)
    out = []
    for _ in range(trials):
        mu = DiscreteCircleMeasure.random(n_atoms, rng)
        g = rng.uniform(-gmax, gmax) if random_x else 0.0
        g = float(np.clip(g, -(math.pi - 1e-6), math.pi - 1e-6))
        out.append(ConcaveMapSpec(alpha, UnitModulusParameter(g), measure=mu))
    return out


def growth_ratios(sample: CoefficientSample) -> np.ndarray:
    """``|a_n| 2 alpha / A_n(alpha)`` for ``n = 1 .. N``."""
    n = np.arange(1, sample.coeffs.size + 1)
    bound = np.array([coefficient_A(k, sample.alpha, 1.0).real for k in n]) / (2 * sample.alpha)
    return np.abs(sample.coeffs) / bound


def disc_ratios(sample: CoefficientSample) -> np.ndarray:
    """``|a_n - (n+1)/2| / ((n-1)/2)`` for ``n = 2 .. N``."""
    n = np.arange(2, sample.coeffs.size + 1)
    return np.abs(sample.coeffs[1:] - (n + 1) / 2) / ((n - 1) / 2)


def coefficient_bound_report(
    family: Iterable[CoefficientSample],
    bound: str = "growth",
    tolerance: float = 1e-10,
    claim_id: str | None = None,
    params: dict | None = None,
    expect_equality: bool = False,
) -> VerificationReport:
    """Worst coefficient ratio over a family.

    ``bound="growth"`` checks ``|a_n| <= A_n(alpha)/(2 alpha)`` and
    ``bound="disc"`` checks ``|a_n - (n+1)/2| <= (n-1)/2`` (``alpha = 2``
    only).  With ``expect_equality`` the report passes only if every ratio
    is within ``tolerance`` of one.
    """
    if bound not in ("growth", "disc"):
        raise ValueError(f"unknown bound {bound!r}")
    ratio_fn = growth_ratios if bound == "growth" else disc_ratios
    first_n = 1 if bound == "growth" else 2
    worst, worst_point, lowest = -math.inf, None, math.inf
    count = 0
    for s in family:
        if bound == "disc" and s.alpha != 2:
            raise ValueError("the disc bound is stated for alpha = 2 only")
        r = ratio_fn(s)
        k = int(np.argmax(r))
        if r[k] > worst:
            worst, worst_point = float(r[k]), {"member": s.label, "n": k + first_n}
        lowest = min(lowest, float(r.min()))
        count += 1
    if expect_equality:
        dev = max(abs(worst - 1), abs(lowest - 1))
        passed = dev <= tolerance
    else:
        passed = worst <= 1 + tolerance
    p = dict(params or {})
    p.update({"members": count, "min_ratio": lowest, "expect_equality": expect_equality})
    return VerificationReport(
        claim_id=claim_id or f"coefficients.{bound}",
        params=p, value=worst, bound=1.0, worst_ratio=worst, worst_point=worst_point,
        passed=bool(passed), tolerance=tolerance,
        kind="equality" if expect_equality else "bound",
    )
