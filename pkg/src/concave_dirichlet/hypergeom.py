"""Gauss hypergeometric polynomials and the coefficients ``A_n``, ``B_n``.

The coefficients are defined through the expansion

    ((1 + x z) / (1 - z))**alpha = 1 + sum_{n>=1} A_n(alpha, x) z**n,

with ``|x| = 1``, ``x != -1``, and ``A_n = alpha (1 + x) B_n`` where
``B_n(alpha, x) = F(1 - n, 1 - alpha; 2; 1 + x)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy import special

from .report import VerificationReport

EPS_EXCL = 1e-9


@dataclass(frozen=True)
class UnitModulusParameter:
    """Point ``x = exp(i gamma)`` of the unit circle other than ``-1``."""

    gamma: float

    def __post_init__(self):
        g = float(self.gamma)
        if not math.isfinite(g) or abs(g) >= math.pi - EPS_EXCL:
            raise ValueError(f"gamma must satisfy |gamma| < pi - {EPS_EXCL:g}, got {g!r}")
        object.__setattr__(self, "gamma", g)

    @property
    def x(self) -> complex:
        return complex(math.cos(self.gamma), math.sin(self.gamma))

    @classmethod
    def from_complex(cls, x: complex, tol: float = 1e-12):
        if abs(abs(x) - 1) > tol:
            raise ValueError(f"|x| must be 1, got {abs(x)!r}")
        return cls(math.atan2(x.imag, x.real))


def as_unit(x) -> complex:
    """Accept a :class:`UnitModulusParameter` or a complex number."""
    if isinstance(x, UnitModulusParameter):
        return x.x
    return complex(x)


def gamma_grid(count: int, margin: float = EPS_EXCL) -> np.ndarray:
    """Uniform angles in ``[-pi + margin, pi - margin]``."""
    return np.linspace(-math.pi + margin, math.pi - margin, count)


def pochhammer(a, n: int):
    """Rising factorial ``(a)_n = a (a+1) ... (a+n-1)`` with ``(a)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    out = 1 if isinstance(a, (int, np.integer)) else 1.0 + 0.0 * a
    for k in range(n):
        out = out * (a + k)
    return out


def _terms_ratio_sum(m, b, c, z):
    # sum_{k=0}^m (-m)_k (b)_k / ((c)_k k!) z^k, plus the sum of |terms|
    z = np.asarray(z, dtype=complex)
    term = np.ones_like(z)
    total = np.ones_like(z)
    size = np.ones(z.shape)
    for k in range(m):
        term = term * ((-m + k) * (b + k)) / ((c + k) * (k + 1)) * z
        total = total + term
        size = size + np.abs(term)
    return total, size


def _has_pole(m: int, c) -> bool:
    # (c)_k for k <= m vanishes iff c is in {0, -1, ..., -(m-1)}
    c = complex(c)
    if c.imag != 0 or c.real > 0 or c.real != round(c.real):
        return False
    return -c.real <= m - 1


def hyp2f1_terminating(m: int, b, c, z, method: str = "auto"):
    """Terminating ``F(-m, b; c; z)`` as an exact finite sum.

    Parameters
    ----------
    m : int
        Degree of the polynomial; the first parameter is ``-m``.
    b, c : complex
        Remaining parameters.  ``c`` may not be one of ``0, -1, ..., 1-m``.
    z : complex or array_like
    method : {"auto", "direct", "reflected"}
        ``"direct"`` sums the defining series.  ``"reflected"`` sums the
        same polynomial written around ``z = 1``,

            F(-m, b; c; z) = (c-b)_m / (c)_m F(-m, b; b-c-m+1; 1-z),

        which avoids catastrophic cancellation when ``|z|`` is large and
        ``|1 - z|`` is not.  ``"auto"`` evaluates both (when the
        reflected form is pole free) and keeps, pointwise, the one whose
        terms have the smaller absolute sum.

    Returns
    -------
    complex or ndarray
    """
    m = int(m)
    if m < 0:
        raise ValueError("m must be a nonnegative integer")
    if _has_pole(m, c):
        raise ZeroDivisionError(f"c = {c} is a pole of F(-{m}, b; c; z)")
    z_arr = np.asarray(z, dtype=complex)
    if m == 0:
        out = np.ones_like(z_arr)
        return out[()] if out.ndim == 0 else out
    c_ref = b - c - m + 1
    can_reflect = not _has_pole(m, c_ref)
    if method == "direct" or (method == "auto" and not can_reflect):
        out = _terms_ratio_sum(m, b, c, z_arr)[0]
    elif method == "reflected":
        if not can_reflect:
            raise ZeroDivisionError("reflected form has a pole for these parameters")
        out = _reflected(m, b, c, z_arr)[0]
    elif method == "auto":
        d_val, d_size = _terms_ratio_sum(m, b, c, z_arr)
        r_val, r_size = _reflected(m, b, c, z_arr)
        out = np.where(r_size < d_size, r_val, d_val)
    else:
        raise ValueError(f"unknown method {method!r}")
    return out[()] if out.ndim == 0 else out


def _reflected(m, b, c, z):
    pref = 1.0 + 0.0j
    for k in range(m):
        pref *= (c - b + k) / (c + k)
    val, size = _terms_ratio_sum(m, b, b - c - m + 1, 1 - z)
    return pref * val, abs(pref) * size


def hyp2f1_euler(a, b: float, c: float, z, nodes: int = 256):
    """``F(a, b; c; z)`` from the Euler integral by Gauss-Jacobi quadrature.

    The weight ``t**(b-1) (1-t)**(c-b-1)`` is absorbed into the Jacobi rule,
    so the only integrand left is ``(1 - t z)**(-a)``.  Needs ``c > b > 0``.
    For non-integer ``-a`` the point ``z`` may not lie on ``[1, inf)``.
    """
    b = float(b)
    c = float(c)
    if not c > b > 0:
        raise ValueError(f"Euler integral needs c > b > 0, got b={b}, c={c}")
    z = complex(z)
    a_c = complex(a)
    polynomial = a_c.imag == 0 and a_c.real <= 0 and a_c.real == round(a_c.real)
    if not polynomial and z.imag == 0 and z.real >= 1:
        raise ValueError("z lies on the branch cut [1, inf)")
    if a_c == 0:
        return 1.0 + 0.0j
    if polynomial:
        # Gauss is exact for degree -a with this many nodes; more only adds
        # rounding in the nodes when b - 1 is close to -1
        nodes = min(nodes, int(-a_c.real) // 2 + 1)
    # t = (1 + u) / 2 maps the Jacobi weight (1-u)^(c-b-1) (1+u)^(b-1) onto [0, 1]
    u, w = special.roots_jacobi(nodes, c - b - 1, b - 1)
    t = 0.5 * (1 + u)
    if polynomial:
        vals = (1 - t * z) ** int(-a_c.real)
    else:
        vals = np.exp(-a_c * np.log(1 - t * z))
    integral = np.dot(w, vals) * 2.0 ** (1 - c)
    lognorm = special.gammaln(c) - special.gammaln(b) - special.gammaln(c - b)
    return complex(math.exp(lognorm) * integral)


def coefficient_B(n: int, alpha: float, x):
    """``B_n(alpha, x) = F(1 - n, 1 - alpha; 2; 1 + x)``.

    ``x`` may be a :class:`UnitModulusParameter`, a complex number or an
    array of unit complex numbers.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if isinstance(x, UnitModulusParameter):
        x = x.x
    return hyp2f1_terminating(n - 1, 1.0 - alpha, 2.0, 1.0 + np.asarray(x, dtype=complex))


def coefficient_A(n: int, alpha: float, x):
    """``A_n(alpha, x) = alpha (1 + x) F(1 - n, 1 - alpha; 2; 1 + x)``."""
    if isinstance(x, UnitModulusParameter):
        x = x.x
    x = np.asarray(x, dtype=complex)
    out = alpha * (1 + x) * coefficient_B(n, alpha, x)
    return out[()] if np.ndim(out) == 0 else out


def coefficients_A(n_max: int, alpha: float, x) -> np.ndarray:
    """``[A_1, ..., A_{n_max}]`` for a single ``x``."""
    return np.array([coefficient_A(n, alpha, x) for n in range(1, n_max + 1)])


def domination_ratios(alpha: float, n_max: int, gammas: Sequence[float]) -> np.ndarray:
    """``max_gamma |B_n(alpha, e^{i gamma})| / |B_n(alpha, 1)|`` for ``n = 1..n_max``.

    A vanishing ``B_n(alpha, 1)`` gives ``inf`` unless the whole row vanishes.
    """
    xs = np.exp(1j * np.asarray(gammas, dtype=float))
    out = np.empty(n_max)
    for n in range(1, n_max + 1):
        top = np.max(np.abs(coefficient_B(n, alpha, xs)))
        ref = abs(coefficient_B(n, alpha, 1.0))
        if ref == 0:
            out[n - 1] = 0.0 if top == 0 else math.inf
        else:
            out[n - 1] = top / ref
    return out


def domination_check(
    alpha: float,
    n_max: int,
    gammas: Iterable[float],
    tolerance: float = 1e-12,
) -> VerificationReport:
    """Sweep ``|B_n(alpha, x)| <= |B_n(alpha, 1)|`` over a grid of angles.

    ``alpha = 1`` makes every ``B_n`` identically one; the check then passes
    trivially and the report says so.
    """
    gammas = np.asarray(list(gammas), dtype=float)
    if np.any(np.abs(gammas) >= math.pi - EPS_EXCL):
        raise ValueError("angle grid must stay away from +-pi")
    claim = "domination.B_n.alpha_gt_1" if alpha > 1 else "domination.B_n.alpha_lt_1"
    params = {"alpha": float(alpha), "n_max": int(n_max), "gamma_count": int(gammas.size)}
    if alpha == 1:
        return VerificationReport(
            claim_id=claim, params=params, value=1.0, bound=1.0, worst_ratio=1.0,
            worst_point={"n": 1, "gamma": 0.0}, passed=True, tolerance=tolerance,
            notes="alpha = 1: B_n is identically 1",
        )
    xs = np.exp(1j * gammas)
    worst = -1.0
    worst_point = None
    value = bound = None
    for n in range(1, n_max + 1):
        vals = np.abs(coefficient_B(n, alpha, xs))
        ref = abs(coefficient_B(n, alpha, 1.0))
        k = int(np.argmax(vals))
        ratio = vals[k] / ref if ref > 0 else (0.0 if vals[k] == 0 else math.inf)
        if ratio > worst:
            worst = ratio
            worst_point = {"n": n, "gamma": float(gammas[k])}
            value, bound = float(vals[k]), float(ref)
    return VerificationReport(
        claim_id=claim, params=params, value=value, bound=bound, worst_ratio=float(worst),
        worst_point=worst_point, passed=bool(worst <= 1 + tolerance), tolerance=tolerance,
    )
