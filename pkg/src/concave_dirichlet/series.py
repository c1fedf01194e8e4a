"""Truncated complex power series on the unit disk.

A :class:`TruncatedSeries` holds the Taylor coefficients ``c_0 .. c_N`` of
an analytic function.  All operations truncate at the common order ``N``;
nothing here tracks convergence radii, so callers are responsible for
choosing ``N`` large enough for the radius they evaluate at.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

DEFAULT_ORDER = 64


@dataclass(frozen=True)
class TruncatedSeries:
    """Coefficients ``c_0 .. c_N`` of ``sum c_n z**n``."""

    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size == 0:
            raise ValueError("a series needs at least the constant term")
        if not np.all(np.isfinite(c)):
            raise ValueError("series coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, n):
        return self.coeffs[n]

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            _check_orders(self, other)
            return TruncatedSeries(self.coeffs + other.coeffs)
        c = self.coeffs.copy()
        c[0] += other
        return TruncatedSeries(c)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_mul(self, other)
        return TruncatedSeries(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return series_div(self, other)
        return TruncatedSeries(self.coeffs / other)

    def __pow__(self, alpha):
        return series_pow_real(self, alpha)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[complex], order: int | None = None):
        """Build a series, zero padding (or truncating) to ``order``."""
        c = np.asarray(coeffs, dtype=complex).ravel()
        if order is None:
            return cls(c)
        out = np.zeros(order + 1, dtype=complex)
        k = min(order + 1, c.size)
        out[:k] = c[:k]
        return cls(out)

    @classmethod
    def constant(cls, value: complex, order: int = DEFAULT_ORDER):
        return cls.from_coeffs([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER):
        """The series of ``z``."""
        return cls.from_coeffs([0.0, 1.0], order)

    @classmethod
    def from_function(cls, coeff: Callable[[int], complex], order: int = DEFAULT_ORDER):
        """Build a series from a coefficient rule ``n -> c_n``."""
        return cls(np.array([coeff(n) for n in range(order + 1)], dtype=complex))


def _check_orders(a: TruncatedSeries, b: TruncatedSeries):
    if a.order != b.order:
        raise ValueError(
            f"truncation orders differ ({a.order} != {b.order}); pad or truncate first"
        )


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product of two series of equal order, truncated to that order."""
    _check_orders(a, b)
    n = a.order
    return TruncatedSeries(np.convolve(a.coeffs, b.coeffs)[: n + 1])


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Series of ``1/a``; needs ``a(0) != 0``."""
    c = a.coeffs
    if c[0] == 0:
        raise ZeroDivisionError("reciprocal of a series vanishing at the origin")
    n = a.order
    out = np.zeros(n + 1, dtype=complex)
    out[0] = 1.0 / c[0]
    for k in range(1, n + 1):
        out[k] = -np.dot(c[1 : k + 1], out[k - 1 :: -1][:k]) / c[0]
    return TruncatedSeries(out)


def series_div(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return series_mul(a, series_reciprocal(b))


def series_shift_down(a: TruncatedSeries) -> TruncatedSeries:
    """Divide by ``z`` a series whose constant term vanishes.

    The result keeps the same order; the new top coefficient is zero, so
    only ``c_0 .. c_{N-1}`` of the result are meaningful.
    """
    if abs(a.coeffs[0]) > 0:
        raise ValueError("series has a nonzero constant term; cannot divide by z")
    c = np.zeros_like(a.coeffs)
    c[:-1] = a.coeffs[1:]
    return TruncatedSeries(c)


def series_pow_real(f: TruncatedSeries, alpha: float) -> TruncatedSeries:
    """Principal-branch power ``f**alpha`` for real ``alpha``.

    Uses the power recurrence obtained from ``f g' = alpha f' g`` with
    ``g = f**alpha``::

        n c_0 g_n = sum_{k=1}^{n} (alpha k - (n - k)) c_k g_{n-k}

    and ``g_0 = exp(alpha Log c_0)``.
    """
    c = f.coeffs
    c0 = c[0]
    if c0 == 0:
        raise ValueError("power of a series vanishing at the origin (branch point)")
    alpha = float(alpha)
    n = f.order
    g = np.zeros(n + 1, dtype=complex)
    g[0] = np.exp(alpha * np.log(c0))
    if alpha == 0.0:
        return TruncatedSeries(g)
    for m in range(1, n + 1):
        k = np.arange(1, m + 1)
        g[m] = np.sum((alpha * k - (m - k)) * c[1 : m + 1] * g[m - 1 :: -1][:m]) / (m * c0)
    return TruncatedSeries(g)


def series_exp(f: TruncatedSeries) -> TruncatedSeries:
    """``exp(f)`` by the recurrence ``g' = f' g``."""
    c = f.coeffs
    n = f.order
    g = np.zeros(n + 1, dtype=complex)
    g[0] = np.exp(c[0])
    for m in range(1, n + 1):
        k = np.arange(1, m + 1)
        g[m] = np.sum(k * c[1 : m + 1] * g[m - 1 :: -1][:m]) / m
    return TruncatedSeries(g)


def series_log(f: TruncatedSeries) -> TruncatedSeries:
    """Principal ``Log f``; needs ``f(0) != 0``."""
    c = f.coeffs
    if c[0] == 0:
        raise ValueError("logarithm of a series vanishing at the origin")
    d = series_derivative(f)
    q = series_div(TruncatedSeries.from_coeffs(d.coeffs, f.order), f)
    out = np.zeros(f.order + 1, dtype=complex)
    out[0] = np.log(c[0])
    out[1:] = q.coeffs[:-1] / np.arange(1, f.order + 1)
    return TruncatedSeries(out)


def series_compose(f: TruncatedSeries, phi: TruncatedSeries) -> TruncatedSeries:
    """Coefficients of ``f(phi(z))``; ``phi`` must vanish at the origin."""
    _check_orders(f, phi)
    if phi.coeffs[0] != 0:
        raise ValueError("inner series must vanish at the origin")
    n = f.order
    acc = np.zeros(n + 1, dtype=complex)
    acc[0] = f.coeffs[n]
    p = phi.coeffs
    # Horner in the series ring
    for k in range(n - 1, -1, -1):
        acc = np.convolve(acc, p)[: n + 1]
        acc[0] += f.coeffs[k]
    return TruncatedSeries(acc)


def series_derivative(f: TruncatedSeries) -> TruncatedSeries:
    """Term-by-term derivative; the result has order ``N - 1``."""
    if f.order < 1:
        return TruncatedSeries([0.0])
    n = np.arange(1, f.order + 1)
    return TruncatedSeries(n * f.coeffs[1:])


def evaluate(f: TruncatedSeries, z):
    """Horner evaluation at a scalar or array ``z``."""
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1):
        warnings.warn("evaluating a truncated series outside the unit disk", stacklevel=2)
    acc = np.zeros_like(z)
    for c in f.coeffs[::-1]:
        acc = acc * z + c
    return acc[()] if acc.ndim == 0 else acc


def dirichlet_parseval(g: TruncatedSeries, r: float) -> float:
    """Area ``pi sum n |c_n|^2 r^(2n)`` of the image of ``|z| < r``.

    Only the stored coefficients contribute; bound the omitted tail with
    :func:`parseval_tail_bound` when ``g`` is not a polynomial.
    """
    if not 0 < r <= 1:
        raise ValueError(f"radius must lie in (0, 1], got {r}")
    n = np.arange(1, g.order + 1)
    terms = n * np.abs(g.coeffs[1:]) ** 2 * r ** (2 * n)
    return float(math.pi * math.fsum(terms))


def parseval_tail_bound(
    coeff_bound: Callable[[int], float],
    order: int,
    r: float,
    rtol: float = 1e-18,
    max_terms: int = 100_000,
) -> float:
    """Upper bound for ``pi sum_{n>order} n |c_n|^2 r^(2n)``.

    ``coeff_bound(n)`` must dominate ``|c_n|``.  Summation stops once
    terms fall below ``rtol`` times the partial sum and are decreasing;
    this is a certificate only for coefficient bounds of polynomial growth,
    which is the only case used here.
    """
    if not 0 < r < 1:
        raise ValueError("tail bounds need r < 1")
    total = 0.0
    prev = math.inf
    for n in range(order + 1, order + 1 + max_terms):
        term = n * coeff_bound(n) ** 2 * r ** (2 * n)
        total += term
        if term < prev and term <= rtol * max(total, 1e-300):
            # geometric majorant for the rest: ratio of consecutive terms
            ratio = ((n + 1) / n) * (coeff_bound(n + 1) / max(coeff_bound(n), 1e-300)) ** 2 * r**2
            if ratio < 1:
                return math.pi * (total + term * ratio / (1 - ratio))
        prev = term
    raise RuntimeError("tail bound did not converge")
