"""Homomorphisms, kernels, and the exchange law for quotients.

Definedness makes morphism theory subtler than for total algebras: a map
may transport every defined operation yet fail to reflect definedness back.
Closed maps are the ones that extend to the two-point completions.
"""

from partlat import (
    build,
    canonical_projection,
    check_hom,
    extend_hom,
    hom_theorem_check,
    kernel,
    parse,
    parse_partition,
    quotient_extension_iso,
    restrict_hom,
)
from partlat.figures import FIG2_TEXT, FIG3_TEXT, FIG4_TEXT, FIG9_TEXT

fig2 = build(parse(FIG2_TEXT))
fig3 = build(parse(FIG3_TEXT))

###############################################################################
# fig2 sits inside the diamond fig3. The inclusion transports every defined
# operation, but fig3 defines l v r while fig2 does not: a homomorphism
# that is not closed.

inclusion = tuple(fig3.index(lbl) for lbl in fig2.labels)
print("inclusion fig2 -> fig3:", check_hom(inclusion, fig2, fig3))

###############################################################################
# Closed maps extend to the completions and restrict back to themselves.
# Canonical projections are closed exactly when no adjoined bound gets
# identified with a carrier element.

fig4 = build(parse(FIG4_TEXT))
e = parse_partition("a c|b", fig4.labels)
proj = canonical_projection(fig4, e)
print("projection fig4 -> fig4/E:", check_hom(proj.mapping, proj.source, proj.target).kind)
print("kernel is E again:", kernel(proj) == e)

star_map = extend_hom(proj)
print("extend then restrict returns the projection:",
      restrict_hom(star_map, fig4, proj.target).mapping == proj.mapping)

###############################################################################
# The homomorphism theorem: the image of a closed map is a partial lattice
# isomorphic to the quotient by its kernel.

report = hom_theorem_check(proj)
print("image carrier:", report.image.labels)
print("quotient carrier:", report.quotient.labels)
print("isomorphism verified:",
      report.iso.backward.mapping[report.iso.forward.mapping[0]] == 0)

###############################################################################
# The construction is sound: extending a quotient gives the same lattice as
# quotienting the extension, via an explicit verified isomorphism.

fig9 = build(parse(FIG9_TEXT))
e9 = parse_partition("a|b d|c", fig9.labels)
iso = quotient_extension_iso(fig9, e9)
print("exchange law on fig9:",
      iso.forward.source.labels, "~", iso.forward.target.labels)

###############################################################################
# Non-closed projections exist and are expected: the same congruence that
# defined [a] v [d] downstairs cannot extend, because definedness does not
# reflect.

proj9 = canonical_projection(fig9, e9)
print("projection fig9 -> fig9/E:", check_hom(proj9.mapping, proj9.source, proj9.target).kind)
