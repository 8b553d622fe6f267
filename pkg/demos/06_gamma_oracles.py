"""
Three independent routes to Gamma(z)
====================================

The kernel (series near 1 and 2, Lanczos elsewhere, reflection for z < 0)
against the Euler limit and quadrature of the defining integral.
"""

import math

from gammaprod import gamma_kernel as gk

print("     z      kernel                 quadrature             Euler limit (m=1e6)")
for z in (0.1, 0.5, 1.5, 4.0, 7.3, 20.0, -2.5):
    quad = gk.gamma_integral_quadrature(z, 1e-12).value if z > 0 else float("nan")
    print(f"{z:6}   {gk.gamma(z):.16e}  {quad:.16e}  {gk.gamma_euler_limit(z, 10**6):.16e}")

# The Euler limit converges like 1/m
print("\n       m   Euler(0.5)/sqrt(pi) - 1")
for m in (10, 100, 1000, 10_000, 100_000):
    print(f"{m:8d}   {gk.gamma_euler_limit(0.5, m) / math.sqrt(math.pi) - 1:+.3e}")

print("\nPochhammer (1/3)_5 =", gk.pochhammer(1 / 3, 5), "=", gk.gamma_ratio((1 / 3 + 5,), (1 / 3,)))
