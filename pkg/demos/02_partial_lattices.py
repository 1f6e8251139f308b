"""Partial lattices and the correspondence with their induced orders.

A partial lattice is a pair of partial operation tables obeying strong
idempotency, commutativity, associativity, and the duality conditions.
Validation, the induced order, and the two roundtrips are shown on the
bundled gallery structures.
"""

from partlat import (
    AxiomViolation,
    UNDEF,
    build,
    check_absorption,
    from_plos,
    induced_order,
    is_total,
    lp_roundtrip,
    parse,
    pl_roundtrip,
    validate_partial_lattice,
)
from partlat.figures import FIG4_TEXT, FIG9_TEXT

###############################################################################
# Structures are written in a small text format; parsing validates the
# axioms. fig4 is a two-element chain plus an isolated point.

fig4 = build(parse(FIG4_TEXT))
print("fig4:", fig4)
print("totality:", is_total(fig4))

###############################################################################
# Operations determine the order: x <= y exactly when x v y = y. Converting
# back through sup/inf recovers the same tables, and starting from an order
# recovers the same order.

order4 = induced_order(fig4)
print("induced covers:", [
    (order4.labels[i], order4.labels[j])
    for i in range(order4.n) for j in range(order4.n) if order4.covers[i, j]
])
print("tables -> order -> tables identity:", lp_roundtrip(fig4))
print("order -> tables -> order identity:", pl_roundtrip(order4))

###############################################################################
# Dropping a single cell breaks the duality conditions: once a v c = c is
# present, a ^ c must be a.

import numpy as np

jt, mt = np.array(fig4.join), np.array(fig4.meet)
a, c = fig4.index("a"), fig4.index("c")
mt[a, c] = mt[c, a] = UNDEF
try:
    validate_partial_lattice(fig4.labels, jt, mt)
except AxiomViolation as err:
    print("after deleting a ^ c:", err)

###############################################################################
# Absorption holds weakly in every partial lattice: whenever (x v y) ^ x is
# defined it equals x. Requiring the strong form forces totality.

fig9 = build(parse(FIG9_TEXT))
print("fig9 weak absorption:", check_absorption(fig9, "weak").holds)
strong = check_absorption(fig9, "strong")
print("fig9 strong absorption:", strong.holds,
      "witness:", tuple(fig9.labels[i] for i in strong.witness))

###############################################################################
# from_plos is the inverse construction: sup and inf where the bound sets
# allow, undefined elsewhere.

again = from_plos(induced_order(fig9))
print("fig9 reconstructed exactly:", again == fig9)
