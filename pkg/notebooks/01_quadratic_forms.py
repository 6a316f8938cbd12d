"""
Binary quadratic forms and GL2(Z)
=================================

Fourier coefficients of a genus-2 form are indexed by half-integral matrices
t = [[n, r/2], [r/2, m]], which we store as triples (n, r, m).
"""

from fjsolve.arith import FLIP, SWAP, act, min_represented, reduce

# GL2(Z) acts on the right by t -> u^T t u; swap exchanges n and m, flip negates r
t = (2, 1, 1)
print("swap:", act(SWAP, t), " flip:", act(FLIP, t))

# Gauss reduction picks the orbit representative with 0 <= r <= n <= m
reduced, u = reduce((9, 13, 5))
print("reduced form:", reduced, " via u =", tuple(u))
print("check:", act(u, (9, 13, 5)) == reduced)

# the vanishing order of a Fourier expansion uses the minimum represented value
for form in [(1, 0, 1), (5, 4, 5), (1, 2, 1), (0, 0, 3)]:
    print(form, "represents at least", min_represented(form))
