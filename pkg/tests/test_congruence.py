import pytest

from partlat import (
    UNDEF,
    BadParameter,
    NotACongruence,
    Partition,
    all_congruences,
    all_partial_congruences,
    con_is_closed_under_meets,
    generate_congruence,
    is_congruence_on_partial,
    is_total,
    lattice_quotient,
    named_lattice,
    quotient,
    quotient_join_case,
    two_point_extension,
)
from partlat import figures as figs
from partlat.congruence import ALPHA, DEFINED, UNDEFINED_TOP_SINGLETON

from oracles import (
    all_congruences_bruteforce,
    least_congruence_bruteforce,
    partition_to_comparable,
)


def label_blocks(partition, labels):
    return sorted(tuple(sorted(labels[i] for i in block)) for block in partition.blocks)


class TestPartition:
    def test_canonical_block_order(self):
        p = Partition([2, 0, 2, 1])
        assert p.blocks == ((0, 2), (1,), (3,))
        assert p.block_of == (0, 1, 0, 2)

    def test_from_blocks_fills_singletons(self):
        p = Partition.from_blocks(4, [(1, 3)])
        assert p.blocks == ((0,), (1, 3), (2,))

    def test_from_blocks_rejects_overlap(self):
        with pytest.raises(BadParameter):
            Partition.from_blocks(3, [(0, 1), (1, 2)])

    def test_meet_is_common_refinement(self):
        p = Partition([0, 0, 1, 1])
        q = Partition([0, 1, 1, 1])
        assert p.meet(q) == Partition([0, 1, 2, 2])
        assert p.meet(q).refines(p)
        assert p.meet(q).refines(q)

    def test_union_closure(self):
        p = Partition([0, 0, 1, 2])
        q = Partition([0, 1, 1, 2])
        assert Partition.union_closure(p, q) == Partition([0, 0, 0, 1])

    def test_restrict_reindexes(self):
        p = Partition([0, 1, 0, 2])
        assert p.restrict((0, 2, 3)) == Partition([0, 0, 1])

    def test_render(self):
        p = Partition.from_blocks(3, [(0, 2)])
        assert p.render(("a", "b", "c")) == "a c|b"

    def test_total_order(self):
        # lexicographic on block_of: the one-block partition sorts first
        assert sorted([Partition.identity(2), Partition.full(2)]) == [
            Partition.full(2),
            Partition.identity(2),
        ]


class TestGenerateCongruence:
    def test_pentagon_seed_already_congruence(self, fig4):
        ext = two_point_extension(fig4)
        a, c = fig4.index("a"), fig4.index("c")
        seed = Partition.from_blocks(ext.star.n, [(ext.embed[a], ext.embed[c])])
        theta = generate_congruence(ext.star, seed)
        assert theta == seed

    def test_identity_seed(self):
        lat = named_lattice("M", 3)
        assert generate_congruence(lat, Partition.identity(lat.n)) == Partition.identity(lat.n)

    def test_fig10_single_pair_against_oracle(self, fig9):
        ext = two_point_extension(fig9)
        star = ext.star
        a, b = ext.embed[fig9.index("a")], ext.embed[fig9.index("b")]
        theta = generate_congruence(star, Partition.from_blocks(star.n, [(a, b)]))
        assert partition_to_comparable(theta) == least_congruence_bruteforce(star, a, b)
        # merging a and b drags c along via a v b = c
        assert theta.relates(a, ext.embed[fig9.index("c")])

    def test_compatibility(self, fig9):
        star = two_point_extension(fig9).star
        for a in range(star.n):
            for b in range(a + 1, star.n):
                theta = generate_congruence(star, Partition.from_blocks(star.n, [(a, b)]))
                for x, y in ((a, b), (b, a)):
                    for c in range(star.n):
                        assert theta.relates(int(star.join[x, c]), int(star.join[y, c]))
                        assert theta.relates(int(star.meet[x, c]), int(star.meet[y, c]))


class TestIsCongruence:
    def test_fig9_bd_partition(self, fig9):
        e = figs.congruence_of(fig9, "a|b d|c")
        w = is_congruence_on_partial(fig9, e)
        assert w.is_congruence
        star_labels = w.extension.star.labels
        assert label_blocks(w.theta, star_labels) == [
            ("a",), ("b", "d"), ("c", "⊤*"), ("⊥*",),
        ]

    def test_identity_is_congruence(self, fig9):
        assert is_congruence_on_partial(fig9, Partition.identity(fig9.n)).is_congruence

    def test_fig9_ab_is_not(self, fig9):
        e = figs.congruence_of(fig9, "a b|c|d")
        w = is_congruence_on_partial(fig9, e)
        assert not w.is_congruence
        # closure merges c with the ab block via a v b = c
        assert w.restriction.relates(fig9.index("a"), fig9.index("c"))


class TestAllCongruences:
    def test_two_chain(self):
        lat = named_lattice("chain", 2)
        assert len(all_congruences(lat)) == 2

    def test_pentagon_star_matches_oracle(self, fig4):
        star = two_point_extension(fig4).star
        got = {partition_to_comparable(p) for p in all_congruences(star)}
        want = {
            tuple(sorted(blocks)) for blocks in map(
                lambda bs: tuple(tuple(sorted(b)) for b in bs),
                all_congruences_bruteforce(star),
            )
        }
        assert got == want
        a, c = fig4.index("a"), fig4.index("c")
        assert Partition.from_blocks(star.n, [(a, c)]) in set(all_congruences(star))

    def test_m3_is_simple(self):
        lat = named_lattice("M", 3)
        cons = all_congruences(lat)
        assert len(cons) == 2
        oracle = all_congruences_bruteforce(lat)
        assert len(oracle) == 2


class TestAllPartialCongruences:
    def test_fig4(self, fig4):
        cons = all_partial_congruences(fig4)
        assert len(cons) == 3
        rendered = {e.render(fig4.labels) for e in cons}
        assert "a c|b" in rendered
        assert Partition.identity(3) in set(cons)

    def test_singleton(self):
        from partlat import antichain

        assert len(all_partial_congruences(antichain(1))) == 1

    def test_fig9_contains_the_worked_examples(self, fig9):
        cons = set(all_partial_congruences(fig9))
        for classes in ("a|b d|c", "a c|b|d", "a|b c|d"):
            assert figs.congruence_of(fig9, classes) in cons

    def test_every_member_is_recognized(self, fig9):
        for e in all_partial_congruences(fig9):
            assert is_congruence_on_partial(fig9, e).is_congruence


class TestMeetClosure:
    def test_fig9(self, fig9):
        assert con_is_closed_under_meets(fig9)

    def test_tiny(self):
        from partlat import antichain

        assert con_is_closed_under_meets(antichain(2))


class TestQuotient:
    def test_fig4_two_element_antichain(self, fig4):
        e = figs.congruence_of(fig4, "a c|b")
        q = quotient(fig4, e)
        assert q.labels == ("[a]", "[b]")
        assert q.join[0, 1] == UNDEF and q.meet[0, 1] == UNDEF

    def test_fig9_bd_quotient_shape(self, fig9):
        e = figs.congruence_of(fig9, "a|b d|c")
        q = quotient(fig9, e)
        assert q.labels == ("[a]", "[b]", "[c]")
        # [a] v [b] = [c] is defined although a v d is not
        assert q.join[0, 1] == 2
        assert q.meet[0, 1] == UNDEF
        assert fig9.join[fig9.index("a"), fig9.index("d")] == UNDEF

    def test_fig9_bc_quotient_is_chain(self, fig9):
        e = figs.congruence_of(fig9, "a|b c|d")
        q = quotient(fig9, e)
        assert is_total(q) == "both_total"
        assert q.join[0, 1] == 1 and q.join[1, 2] == 2 and q.join[0, 2] == 2

    def test_rejects_non_congruence(self, fig9):
        e = figs.congruence_of(fig9, "a b|c|d")
        with pytest.raises(NotACongruence):
            quotient(fig9, e)


class TestQuotientJoinCase:
    def test_fig4_undefined_top_singleton(self, fig4):
        e = figs.congruence_of(fig4, "a c|b")
        case = quotient_join_case(fig4, e, fig4.index("a"), fig4.index("b"))
        assert case.kind == UNDEFINED_TOP_SINGLETON

    def test_fig9_alpha_case(self, fig9):
        e = figs.congruence_of(fig9, "a|b d|c")
        case = quotient_join_case(fig9, e, fig9.index("a"), fig9.index("d"))
        assert case.kind == ALPHA
        assert case.alpha == fig9.index("c")
        assert case.block == e.block_of[fig9.index("c")]

    def test_fig9_defined_case(self, fig9):
        e = figs.congruence_of(fig9, "a|b d|c")
        case = quotient_join_case(fig9, e, fig9.index("a"), fig9.index("b"))
        assert case.kind == DEFINED
        assert case.block == e.block_of[fig9.index("c")]

    def test_branches_may_differ_but_blocks_agree(self, fig9):
        # (a, b) and (a, d) are representative pairs of the same classes
        e = figs.congruence_of(fig9, "a|b d|c")
        via_b = quotient_join_case(fig9, e, fig9.index("a"), fig9.index("b"))
        via_d = quotient_join_case(fig9, e, fig9.index("a"), fig9.index("d"))
        assert via_b.kind == DEFINED and via_d.kind == ALPHA
        assert via_b.block == via_d.block


class TestLatticeQuotient:
    def test_fig10_by_theta(self, fig9):
        e = figs.congruence_of(fig9, "a|b d|c")
        w = is_congruence_on_partial(fig9, e)
        q = lattice_quotient(w.extension.star, w.theta)
        assert q.n == 4
        from partlat import find_isomorphism

        assert find_isomorphism(q, named_lattice("boolean", 2)) is not None

    def test_identity_theta_copies_shape(self):
        lat = named_lattice("N5")
        q = lattice_quotient(lat, Partition.identity(lat.n))
        assert q.n == lat.n
        assert (q.poset.leq == lat.poset.leq).all()
