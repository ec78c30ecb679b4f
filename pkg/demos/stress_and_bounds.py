"""Random stress test plus a look at the worst-case bound.

Every random cloud is solved twice: once with the cone-based loop and once
by brute force. The table at the end shows how the scalarization budget
U(n+d, d) grows with the number of nondominated points.
"""

import random

from tropfront import cross_check, upper_bound

rng = random.Random(7)

print("random cross-checks (solver vs brute force):")
worst_ratio = 0.0
for trial in range(200):
    d = rng.randint(1, 4)
    size = rng.randint(1, 30)
    cloud = [tuple(rng.randint(-15, 15) for _ in range(d)) for _ in range(size)]
    report = cross_check(cloud)
    assert report.passed, (d, cloud)
    n = len(report.nondominated)
    m = len(report.bounds)
    if n:
        worst_ratio = max(worst_ratio, m / upper_bound(n + d, d))
print("   200 instances, all passed")
print(f"   largest observed m / U(n+d, d): {worst_ratio:.2f}")

print("\nscalarization budget U(n+d, d) by dimension:")
header = "      n " + "".join(f"  d={d:<8}" for d in (2, 3, 4, 5))
print(header)
for n in (5, 10, 20, 40, 80):
    row = f"   {n:>4} "
    for d in (2, 3, 4, 5):
        row += f"  {upper_bound(n + d, d):<8}"
    print(row)

print("\nfor fixed d the bound grows like n**(d // 2):")
for d in (2, 3, 4):
    ratios = [upper_bound(n + d, d) / n ** (d // 2) for n in range(50, 201, 50)]
    print(f"   d={d}: U(n+d,d) / n^{d // 2} -> {[round(r, 2) for r in ratios]}")
