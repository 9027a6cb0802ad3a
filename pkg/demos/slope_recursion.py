"""The solid torus with a slope suture: bypass triangles and the recursion chi = -y.

Run: python3 demos/slope_recursion.py
"""

import math
import time

from foxchi import Slope, bypass_decompose, ncf, ncf_eval, unknot_chi


def show_tree(s, depth=0):
    pad = "  " * depth
    print(f"{pad}{s.y}/{s.x}: chi = {unknot_chi(s)}")
    if s.y > 1:
        for child in bypass_decompose(s):
            show_tree(child, depth + 1)


print("negative continued fraction of -7/5:", ncf(7, 5), "=", ncf_eval(ncf(7, 5)))
print("\nbypass tree for the slope 7/(-5):")
show_tree(Slope(-5, 7))

start = time.perf_counter()
count = 0
for y in range(1, 201):
    for x in range(-y, y + 1):
        if math.gcd(x, y) == 1:
            assert unknot_chi(Slope(x, y)) == -y
            count += 1
print(f"\nrecursion matches -y on all {count} slopes with y <= 200 ({time.perf_counter() - start:.2f}s)")
