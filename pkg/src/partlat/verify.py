"""Corpus-wide verification of the laws the library promises.

Runs every universally quantified claim over the enumerated corpus of small
partial lattices. Failures carry the offending structure serialized in the
input format so they can be replayed from the command line.
"""

import numpy as np

from . import fmt
from .congruence import (
    all_partial_congruences,
    con_is_closed_under_meets,
    is_congruence_on_partial,
    quotient,
    quotient_join_case,
)
from .enumeration import enumerate_partial_lattices
from .extension import star_join, star_meet, two_point_extension
from .morphism import (
    CLOSED_HOM,
    NOT_HOM,
    canonical_projection,
    check_hom,
    extend_hom,
    kernel,
    quotient_extension_iso,
    restrict_hom,
)
from .order import is_plos, lower_bounds, upper_bounds
from .plattice import (
    BOTH_TOTAL,
    UNDEF,
    check_absorption,
    from_lattice,
    induced_order,
    is_total,
    lp_roundtrip,
    pl_roundtrip,
)


def serialize(lat):
    """The structure in replayable input format."""
    return fmt.format_document(fmt.to_document(lat))


def _check_extension(lat):
    """Extension is a lattice, reflects the source exactly, and obeys the
    bound-set case law on every pair."""
    ext = two_point_extension(lat)
    base = induced_order(lat)
    star_order = ext.star.poset
    for i in range(lat.n):
        for j in range(lat.n):
            if star_order.leq[ext.embed[i], ext.embed[j]] != base.leq[i, j]:
                return False, f"order not preserved at ({i}, {j})"
    for name, bound, row in (("bottom", ext.added_bottom, True), ("top", ext.added_top, False)):
        if bound is None:
            continue
        for s in range(ext.star.n):
            if s == bound:
                continue
            ok = star_order.leq[bound, s] if row else star_order.leq[s, bound]
            if not ok:
                return False, f"adjoined {name} is not extremal"
    for a in range(lat.n):
        for b in range(lat.n):
            sj = star_join(ext, ext.embed[a], ext.embed[b])
            sm = star_meet(ext, ext.embed[a], ext.embed[b])
            if upper_bounds(base, a, b):
                if lat.join[a, b] == UNDEF or sj != ext.embed[lat.join[a, b]]:
                    return False, f"join case law broken at ({a}, {b})"
            elif sj != ext.added_top:
                return False, f"empty U({a}, {b}) must join to the adjoined top"
            if lat.join[a, b] == UNDEF and ext.source_index(sj) is not None:
                return False, f"undefined join reflected into the carrier at ({a}, {b})"
            if lower_bounds(base, a, b):
                if lat.meet[a, b] == UNDEF or sm != ext.embed[lat.meet[a, b]]:
                    return False, f"meet case law broken at ({a}, {b})"
            elif sm != ext.added_bottom:
                return False, f"empty L({a}, {b}) must meet to the adjoined bottom"
            if lat.meet[a, b] == UNDEF and ext.source_index(sm) is not None:
                return False, f"undefined meet reflected into the carrier at ({a}, {b})"
    embed_hom = check_hom(ext.embed, lat, from_lattice(ext.star))
    if embed_hom.kind == NOT_HOM:
        return False, "carrier is not a weak subalgebra of the extension"
    return True, ""


def _check_congruence(lat, e):
    """Quotient machinery for a single congruence."""
    w = is_congruence_on_partial(lat, e)
    if not w.is_congruence:
        return False, f"enumerated congruence not recognized: {e!r}"
    quot = quotient(lat, e, witness=w)

    # Case analysis agrees with the quotient tables across all representatives.
    for p, block_p in enumerate(e.blocks):
        for q, block_q in enumerate(e.blocks):
            cell = int(quot.join[p, q])
            expected = None if cell == UNDEF else cell
            blocks_seen = set()
            for a in block_p:
                for b in block_q:
                    case = quotient_join_case(lat, e, a, b, witness=w)
                    blocks_seen.add(case.block)
                    if case.block != expected:
                        return False, f"join case disagrees with table at [{a}],[{b}]"
            if len(blocks_seen) != 1:
                return False, f"join case depends on representatives at blocks ({p}, {q})"

    # Undefined quotient joins come from undefined source joins.
    base = induced_order(lat)
    qorder = induced_order(quot)
    for a in range(lat.n):
        for b in range(lat.n):
            pa, pb = e.block_of[a], e.block_of[b]
            if not upper_bounds(qorder, pa, pb) and upper_bounds(base, a, b):
                return False, f"quotient lost an upper bound at ({a}, {b})"

    proj = canonical_projection(lat, e, witness=w)
    rep = check_hom(proj.mapping, proj.source, proj.target)
    if rep.kind == NOT_HOM:
        return False, f"projection is not a homomorphism for {e!r}"
    if kernel(proj) != e:
        return False, f"projection kernel differs from {e!r}"
    ext = w.extension
    bounds_singleton = all(
        len(w.theta.block_containing(bound)) == 1
        for bound in (ext.added_bottom, ext.added_top)
        if bound is not None
    )
    if (rep.kind == CLOSED_HOM) != bounds_singleton:
        return False, f"projection closedness mismatches bound classes for {e!r}"
    if rep.kind == CLOSED_HOM:
        hstar = extend_hom(proj)
        if restrict_hom(hstar, lat, quot).mapping != proj.mapping:
            return False, f"extension does not restrict back for {e!r}"
    quotient_extension_iso(lat, e, witness=w)
    return True, ""


def structure_checks(lat):
    """Run every per-structure law; yields (name, ok, detail) triples."""
    results = []

    def run(name, fn):
        try:
            ok, detail = fn()
        except Exception as exc:  # record and keep sweeping
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append((name, ok, detail))

    def plain(predicate, message):
        return lambda: (bool(predicate()), message)

    run("weak_absorption", plain(lambda: check_absorption(lat, "weak").holds,
                                 "weak absorption failed"))
    run("strong_absorption_iff_total",
        plain(lambda: check_absorption(lat, "strong").holds == (is_total(lat) == BOTH_TOTAL),
              "strong absorption must characterize total structures"))
    run("roundtrip_structure", plain(lambda: lp_roundtrip(lat), "structure roundtrip failed"))
    run("roundtrip_order", plain(lambda: pl_roundtrip(induced_order(lat)),
                                 "order roundtrip failed"))
    run("order_coincidence", plain(
        lambda: bool(((lat.join == np.arange(lat.n)[None, :])
                      == (lat.meet == np.arange(lat.n)[:, None])).all()),
        "join and meet induce different orders"))
    run("induced_order_plos", plain(lambda: bool(is_plos(induced_order(lat))),
                                    "induced order fails a bound property"))
    run("extension", lambda: _check_extension(lat))

    def congruence_sweep():
        cons = all_partial_congruences(lat)
        for e in cons:
            ok, detail = _check_congruence(lat, e)
            if not ok:
                return False, detail
        if not con_is_closed_under_meets(lat):
            return False, "congruence set not closed under refinement"
        return True, ""

    run("congruences", congruence_sweep)
    return results


def verify_corpus(n_max):
    """Sweep the enumerated corpus; returns (checked, failures)."""
    checked = 0
    failures = []
    for lat in enumerate_partial_lattices(n_max):
        checked += 1
        for name, ok, detail in structure_checks(lat):
            if not ok:
                failures.append(f"{name}: {detail}\n{serialize(lat)}")
    return checked, failures
