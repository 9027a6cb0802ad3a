"""Parity in surgery triangles, Euler characteristic propagation and degrees.

Run: python3 demos/surgery_triangles.py
"""

from foxchi import CobordismInvariants, TriangleChi, chi_sharp_decompose, cobordism_degree, surgery_parity, triangle_solve
from foxchi.triangle import ALL_ODD, compose

for dots in [(0, 1, -1), (1, 1, -2), (1, -2, 1), (3, -5, 2)]:
    print(f"dots {dots}: f{surgery_parity(dots)} is odd")

t = TriangleChi((None, -3, -4), surgery_parity((-7, 3, 4)))
print("\nsolid torus triangle with chi(Y2) = -3, chi(Y3) = -4 gives chi(Y1) =", triangle_solve(t))
print("all maps odd, chi = 5, -2, ? gives", triangle_solve(TriangleChi((5, -2, None), ALL_ODD)))

handle = CobordismInvariants(1, 0, 0, 1)
print("\n2-handle degree:", cobordism_degree(handle))
twice = compose(handle, CobordismInvariants(1, -1, 1, 1))
print("composite degree:", cobordism_degree(twice))

print("\nsurgery on a knot in an integral homology sphere, q/p with q = 5:")
r = chi_sharp_decompose(1, 5, h1_order=5)
print(f"  pieces {r.pieces}, total {r.total}: {r.verdict}")
r = chi_sharp_decompose(2, 2, h1_order=2)
print(f"  chi = 2, q = 2, |H_1| = 2: {r.verdict}")
