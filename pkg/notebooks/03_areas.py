"""
Area of the image of |z| < r under z/F
======================================

Three engines (boundary integral, coefficient sum, polar grid) measure
the same area. We check them on the Koebe quotient, then tabulate the
closed-form area and the upper bound M pi r^2 against the computed value.
The table is written as CSV for plotting elsewhere.
"""

import math

from concave_dirichlet import area as ar
from concave_dirichlet.harness import GridSpec, all_methods, koebe_quotient, bound_table
from concave_dirichlet.report import rows_to_csv

g = koebe_quotient()
for r in (0.25, 0.5, 0.9):
    vals = all_methods(g, r)
    print(f"r={r}: " + "  ".join(f"{k}={v:.12f}" for k, v in vals.items()),
          f" exact={2 * math.pi * r * r * (r * r + 2):.12f}")

rows, skipped = bound_table(GridSpec(table_t_values=(0.0,)))
print(f"\n{'alpha':>6} {'gamma':>8} {'r':>5} {'computed':>10} {'closed':>10} {'M pi r^2':>10}")
for row in rows:
    print(f"{row['alpha']:6.2f} {row['gamma']:8.4f} {row['r']:5.2f} {row['quadrature']:10.6f}"
          f" {row['closed_form']:10.6f} {row['M_pi_r2']:10.6f}"
          f"{'  above bound' if row['exceeds_bound'] else ''}")
print("skipped:", skipped)

# small-r check: the computed area behaves like pi r^2 |a_2|^2, the closed form does not
alpha, gamma = 1.5, math.pi / 4
x = complex(math.cos(gamma), math.sin(gamma))
a2 = 1 + (alpha - 1) * (1 + x) / 2
b = -1 / ((1 + x) * alpha)
print("\n|a_2|^2 =", abs(a2) ** 2,
      " closed form / (pi r^2) =", ar.closed_area(alpha, x, b, 1.0) / math.pi)

with open("bound_table.csv", "w", newline="") as fh:
    fh.write(rows_to_csv(rows))
print("wrote bound_table.csv")
