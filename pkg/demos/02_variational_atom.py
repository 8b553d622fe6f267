"""
Variational energies for r^ell exp(-alpha r^b) trial states
===========================================================

The energy expectation is a quadratic in u = (2 alpha)^(1/b), so the
optimum is available in closed form. b = 1 reproduces the exact levels,
other exponents give strict upper bounds.
"""

import numpy as np

from gammaprod import variational_atom as va

print("ground state (ell = 0, N = 3) for several exponents")
print("   b     E_min          E_exact   alpha*")
for b in (0.5, 1.0, 1.5, 2.0, 3.0, 6.0):
    e, alpha = va.min_energy_analytic(b, 0)
    print(f"{b:4.1f}  {e:+.10f}  {-0.5:+.4f}  {alpha:.6f}")

# The closed form against brute-force radial quadrature, scanning alpha.
b, ell = 2.0, 1
print(f"\n<H>(alpha) for b={b}, ell={ell}: closed form vs quadrature")
for alpha in np.geomspace(0.02, 2.0, 6):
    p = va.TrialParams(float(alpha), b, ell)
    q = va.expectation_H_quadrature(p, tol=1e-9)
    print(f"  alpha={alpha:7.4f}   {va.expectation_H(p):+.12f}   {q.value:+.12f}")

# Golden-section search lands on the analytic optimum.
e_num, a_num = va.min_energy_numeric(b, ell)
e_an, a_an = va.min_energy_analytic(b, ell)
print(f"\nnumeric min {e_num:.14f} at alpha={a_num:.8f}")
print(f"analytic    {e_an:.14f} at alpha={a_an:.8f}")

# Same machinery in other dimensions.
print("\n N   ell   E_min(b=1)      exact")
for N in (3, 4, 5, 9):
    for ell in (0, 2):
        e, _ = va.min_energy_analytic(1.0, ell, N)
        print(f"{N:2d}   {ell:3d}   {e:+.12f}  {va.exact_energy(va.ExactLevel(0, ell, N)):+.12f}")

# Relative spread of r^2 shrinks with ell: the state becomes a thin shell.
print("\n  ell   sqrt(<r^4>/<r^2>^2 - 1), b = 2")
for ell in (0, 1, 10, 100, 10_000):
    print(f"{ell:6d}   {va.uncertainty_r2(va.TrialParams(1.0, 2.0, ell)):.6f}")
