"""
Siegel modular forms of degree 2 as symmetric formal Fourier-Jacobi polynomials
===============================================================================

A family (phi_0, ..., phi_B) of Jacobi forms whose assembled coefficients obey
c(t) = det(u)^k c(u^T t u) is computed as the nullspace of a linear system.
For large enough B its dimension is that of the space of Siegel modular forms.
"""

from fjsolve.formal import coefficient, fj_mul, phi_operator, vanishing_order
from fjsolve.solver import default_precision, dim_check, symmetric_basis

# dimensions against Igusa's table
for k in range(0, 21, 2):
    result = dim_check(k)
    print(f"k = {k:2d}, B = {default_precision(k)}: computed {result.computed}, reference {result.reference}")

# the weight-4 element is the Siegel Eisenstein series; Phi recovers E_4
(F4,) = symmetric_basis(4)
F4 = F4.scaled(1 / coefficient(F4, (0, 0, 0)))
print("Phi(F4):", [int(c) for c in phi_operator(F4).list()])
print("c(F4; 1, 1, 1) =", coefficient(F4, (1, 1, 1)))

# weight 10 contains a cusp form of vanishing order 1, the truncation of chi_10
basis10 = symmetric_basis(10)
print("orders in weight 10:", [str(vanishing_order(f)) for f in basis10])

# products of Siegel modular forms stay symmetric
F6 = symmetric_basis(6)[0]
print("weight of F4 * F6:", fj_mul(F4, F6).weight)
