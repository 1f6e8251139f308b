"""Posets, bound sets, and what stops them from being lattices.

Builds a few small orders, inspects their common upper and lower bounds,
and shows the two bound properties that carve out the orders a partial
lattice can induce.
"""

from partlat import (
    is_distributive,
    is_modular,
    is_plos,
    lower_bounds,
    make_poset,
    named_lattice,
    upper_bounds,
    validate_lattice,
)

###############################################################################
# A poset is a set of labels plus any relation; the constructor closes it
# reflexively and transitively and rejects cycles.

hexagon = make_poset(
    "0 a b c d 1".split(),
    [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"),
     ("c", "1"), ("d", "1")],
)
print("hexagon carrier:", hexagon.labels)

###############################################################################
# a and b have three common upper bounds but no least one: c and d sit side
# by side. That breaks the upper bound property, so this poset cannot carry
# partial lattice operations.

a, b = hexagon.index("a"), hexagon.index("b")
ups = upper_bounds(hexagon, a, b)
print("U(a, b) =", sorted(hexagon.labels[i] for i in ups))
report = is_plos(hexagon)
print("bound properties:", "ok" if report else
      f"fail at {tuple(hexagon.labels[i] for i in report.witness)} ({report.side})")

###############################################################################
# Orders that do satisfy both properties may still have empty bound sets;
# a total lattice needs every pair to have a sup and an inf.

vee = make_poset("a c b".split(), [("a", "c")])
print("V-shape bound sets:", sorted(lower_bounds(vee, 0, 2)), "(empty: no meet)")
print("V-shape is partially lattice-ordered:", bool(is_plos(vee)))

pentagon_poset = make_poset(
    "0 a c b 1".split(),
    [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
)
pentagon = validate_lattice(pentagon_poset)
print("pentagon join of a and b:",
      pentagon.labels[pentagon.join[pentagon.index("a"), pentagon.index("b")]])

###############################################################################
# Named lattices cover the classical shapes. The pentagon fails modularity;
# the diamond M3 is modular but not distributive.

for name, lat in [
    ("N5", named_lattice("N5")),
    ("M3", named_lattice("M", 3)),
    ("boolean 2", named_lattice("boolean", 2)),
    ("chain 4", named_lattice("chain", 4)),
]:
    print(f"{name}: distributive={is_distributive(lat)} modular={is_modular(lat)}")
