"""
Coefficients of the extremal concave maps
=========================================

The kernel ((1 + x z)/(1 - z))**alpha expands as 1 + sum A_n z^n, and the
A_n are terminating hypergeometric polynomials in 1 + x. This script
compares the two routes, looks at how |B_n| varies around the circle,
and prints a case where the small-alpha domination fails.
"""

import math

import numpy as np

from concave_dirichlet.hypergeom import coefficient_A, coefficient_B, gamma_grid
from concave_dirichlet.series import TruncatedSeries, series_pow_real

# Koebe case: alpha = 2, x = 1 gives A_n = 4n
print("A_n(2, 1):", [float(coefficient_A(n, 2.0, 1.0).real) for n in range(1, 9)])

# the same numbers from the power-series recurrence, at a generic point
alpha, gamma = 1.6, 0.9
x = complex(math.cos(gamma), math.sin(gamma))
base = TruncatedSeries.from_coeffs([1, x], 40) / TruncatedSeries.from_coeffs([1, -1], 40)
series = series_pow_real(base, alpha).coeffs[1:]
closed = np.array([coefficient_A(n, alpha, x) for n in range(1, 41)])
print("max relative gap, 2F1 vs recurrence:", np.max(np.abs(closed - series) / np.abs(series)))

# |B_n(alpha, x)| over the circle, alpha > 1: the peak sits at x = 1
gammas = gamma_grid(513, 1e-3)
xs = np.exp(1j * gammas)
for n in (2, 5, 12):
    vals = np.abs(coefficient_B(n, 1.5, xs))
    print(f"n={n:2d}  max |B_n| = {vals.max():.6f} at gamma = {gammas[vals.argmax()]:+.4f}"
          f"  B_n(1) = {coefficient_B(n, 1.5, 1.0).real:.6f}")

# for 0 < alpha < 1 the same comparison breaks already at n = 2:
# B_2(alpha, x) = 1 - (1 - alpha)(1 + x)/2, which tends to 1 as x -> -1
a = 0.5
print("B_2(0.5, 1) =", coefficient_B(2, a, 1.0).real)
print("|B_2(0.5, e^{3i})| =", abs(coefficient_B(2, a, np.exp(3j))))
