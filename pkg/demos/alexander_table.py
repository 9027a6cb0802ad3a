"""Alexander polynomials of small knots and links, from braids and PD codes.

Run: python3 demos/alexander_table.py
"""

from foxchi import alexander_matrix, diagram_delta, parse_braid, parse_pd, symmetrize_knot_delta, wirtinger

KNOTS = [
    ("unknot", parse_braid("", 1)),
    ("trefoil (braid)", parse_braid("1 1 1", 2)),
    ("trefoil (PD)", parse_pd("X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)")),
    ("figure-eight (braid)", parse_braid("1 -2 1 -2", 3)),
    ("figure-eight (PD)", parse_pd("X[4,2,5,1],X[8,6,1,5],X[6,3,7,4],X[2,7,3,8]")),
    ("cinquefoil", parse_braid("1 1 1 1 1", 2)),
]

LINKS = [
    ("Hopf link", parse_braid("1 1", 2)),
    ("2-component unlink", parse_braid("1 -1", 2)),
    ("5-crossing 2-component", parse_braid("1 1 -2 1 -2", 3)),
    ("3-chain", parse_braid("1 1 2 2", 3)),
]

print("Knots: the symmetrized polynomial, normalised so Delta(1) = 1")
for name, d in KNOTS:
    delta = symmetrize_knot_delta(diagram_delta(d))
    print(f"  {name:22s} {d.num_crossings:2d} crossings   {delta}")

# the matrix behind one entry
W = wirtinger(KNOTS[1][1])
A = alexander_matrix(W.presentation, W.abelianization)
print("\nWirtinger presentation of the trefoil closure:")
print("  " + W.presentation.to_text().replace("\n", "\n  "))
print("Alexander matrix rows:")
for row in A.entries:
    print("  [" + ", ".join(str(p) for p in row) + "]")

print("\nLinks: multivariable Delta, one variable per component, up to units")
for name, d in LINKS:
    print(f"  {name:22s} {d.num_components} components   {diagram_delta(d)}")
