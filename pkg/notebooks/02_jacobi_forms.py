"""
Jacobi forms from the weak generators
=====================================

Every weak Jacobi form of even weight is a polynomial in phi_{-2,1} and
phi_{0,1} over modular forms; holomorphic forms are cut out by the
discriminant condition 4nm - r^2 >= 0.
"""

from fjsolve.jacobi import jacobi_basis, theta_decompose, theta_recompose, weak_generators

N = 4
phi_m2, phi_0 = weak_generators(N)
print("phi_{-2,1} at n = 0, 1:", [int(phi_m2.coeff(n, r)) for n in (0, 1) for r in (-2, -1, 0, 1, 2)])
print("phi_{0,1}  at n = 0, 1:", [int(phi_0.coeff(n, r)) for n in (0, 1) for r in (-2, -1, 0, 1, 2)])

# the space J_{4,1} is spanned by the Jacobi Eisenstein series E_{4,1}
(E41,) = jacobi_basis(4, 1, N)
print("E_{4,1}: c(0,0) =", E41.coeff(0, 0), " c(1,1) =", E41.coeff(1, 1), " c(1,0) =", E41.coeff(1, 0))

# coefficients depend only on 4nm - r^2 and r mod 2m
print("elliptic law: c(1,1) == c(3,3)?", E41.coeff(1, 1) == E41.coeff(3, 3))

# dimensions of J_{k,m} for a few weights and indices
for k in (4, 6, 8, 10, 12):
    print(f"k = {k:2d}:", [len(jacobi_basis(k, m, N)) for m in range(1, 5)])

# theta decomposition: phi = sum_mu h_mu theta_{m,mu}
d = theta_decompose(E41)
for mu, h in enumerate(d.components):
    print(f"h_{mu}:", {e: int(c) for e, c in sorted(h.coeffs.items())[:4]}, "(exponents in units of q^(1/4))")
print("round trip exact:", theta_recompose(d, 4, N) == E41)
