"""
Slopes and the truncation precision
===================================

A nonzero Jacobi form of weight k, index m vanishing to order m must have
m <= 4k / (3 slope), so components beyond that index are determined by the
lower ones.
"""

from fjsolve.bounds import eichler_blichfeldt_interval, slope, truncation_precision

for g in range(1, 9):
    s = slope(g)
    lo, hi = eichler_blichfeldt_interval(g)
    exact = s.exact if s.exact is not None else "unknown"
    print(f"genus {g}: exact {exact}, certified lower bound in [{float(lo):.6f}, {float(hi):.6f}]")

print("truncation precision in genus 1:", {k: truncation_precision(k, 1) for k in range(0, 40, 4)})
