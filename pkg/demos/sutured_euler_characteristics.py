"""Graded Euler characteristics read off from Alexander polynomials.

For a link the characteristic is Delta_L times prod (t_j - 1); for a knot
whose meridian has class t^k it is Delta times (t^k - 1)/(t - 1); the minus
version is the series -Delta * (1 + t^-1 + t^-2 + ...).

Run: python3 demos/sutured_euler_characteristics.py
"""

from foxchi import chi_khi_minus, chi_knot, chi_link, diagram_delta, parse_braid, symmetrize_knot_delta

hopf = parse_braid("1 1", 2)
unlink = parse_braid("", 2)
print("links")
print("  Hopf    :", chi_link(diagram_delta(hopf), 2))
print("  unlink  :", chi_link(diagram_delta(unlink), 2), "(split links have vanishing chi)")

trefoil = symmetrize_knot_delta(diagram_delta(parse_braid("1 1 1", 2)))
print("\nknots with meridian class t^k (trefoil Delta = %s)" % trefoil)
for k in (1, 2, 3, -2, 0):
    print(f"  k = {k:2d}: {chi_knot(trefoil, k)}")

print("\nminus version, depth 10")
for name, word, strands in [("trefoil", "1 1 1", 2), ("figure-eight", "1 -2 1 -2", 3)]:
    delta = symmetrize_knot_delta(diagram_delta(parse_braid(word, strands)))
    s = chi_khi_minus(delta, 10)
    coeffs = s.stable_coefficients()
    shown = ", ".join(f"{d}:{c}" for d, c in list(coeffs.items())[:5])
    print(f"  {name:13s} stable down to degree {s.stable_floor}: {shown}, ...")
