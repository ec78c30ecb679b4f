"""The two cones behind a two-objective front, drawn in ASCII.

A point cloud spans a max-tropical cone (everything weakly dominated by
some member). The closed complement is a min-tropical cone, and its
extremal generators are the apices of the maximal empty orthants, the
local upper bounds. The picture below marks cloud members "o", dominated
region "#", and the apices "A".
"""

from tropfront import (
    INF,
    GeneratorSet,
    complementary_apices,
    embed_outcome,
)

cloud = [(0, 0), (-3, 2)]
gens = GeneratorSet(2, [embed_outcome(z) for z in cloud])

apices = complementary_apices(gens)
nontrivial = [a[1:] for a in apices.nontrivial()]
print("cloud:", cloud)
print("local upper bounds:", nontrivial)

lo, hi = -5, 5
rows = []
for y in range(hi, lo - 1, -1):
    row = []
    for x in range(lo, hi + 1):
        if (x, y) in cloud:
            row.append("o")
        elif (x, y) in nontrivial:
            row.append("A")
        elif gens.contains(embed_outcome((x, y))):
            row.append("#")
        else:
            row.append(".")
    rows.append(" ".join(row))
print("\n".join(rows))

# Duality in action: a point is outside the dominated region exactly when
# it sits strictly below one of the apices (inf coordinates are no bound).
probe = (-4, 1)
inside = gens.contains(embed_outcome(probe))
below = [
    a
    for a in nontrivial
    if all(p < b for p, b in zip(probe, a))
]
print(f"\nprobe {probe}: dominated region? {inside}; strictly below {below}")
assert inside != bool(below)

# Apices with an INF coordinate escape the picture; they bound nothing in
# that direction, like (-3, inf) above the leftmost cloud point.
print("apex coordinates may be inf:", [a for a in nontrivial if INF in a])
