"""Monomial ideals through the same duality.

Reading exponent vectors of monomial generators as cloud points, the
staircase of the ideal is the dominated region, and the local upper bounds
with all-positive entries are exactly the irreducible components.
"""

from tropfront import INF, irreducible_components


def show(name, generators):
    comps = sorted(irreducible_components(generators))
    pretty = []
    for comp in comps:
        factors = [
            f"x{j + 1}^{e}" for j, e in enumerate(comp) if e != INF
        ]
        pretty.append("<" + ", ".join(factors) + ">")
    print(f"{name}:")
    print("   generators:", sorted(generators))
    print("   components:", " ∩ ".join(pretty) if pretty else "(unit ideal)")
    print()


# <x1 x2, x2 x3> = <x2> ∩ <x1, x3>
show("square-free ideal", {(1, 1, 0), (0, 1, 1)})

# a fatter staircase in two variables
show("thick staircase", {(4, 0), (2, 1), (1, 3), (0, 5)})

# one variable: a single power is its own decomposition
show("principal power", {(3,)})

# the unit ideal covers everything and has no proper components
show("unit ideal", {(0, 0)})
