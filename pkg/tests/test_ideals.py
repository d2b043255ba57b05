import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import FIG_LEFT_SETS, U4, chain, fig_left, fig_right, free, m
from orthantgeo.geometry import ConvexGeometry, is_downset_alignment
from orthantgeo.ideals import (
    IdealOfGeometry,
    check_bouquet,
    check_c6,
    check_c7,
    check_ideal,
    check_locally_union_closed,
    check_median,
    embed_bouquet,
    ideal_from_positive_circuits,
    maximal_members,
    median,
    minimal_positive_circuits,
    positive_circuits,
)
from orthantgeo.oracles import enumerate_ideals, oracle_positive_circuits, random_median_system
from orthantgeo.sets import SetFamily, Universe, popcount, trace, vc_dimension


def drop(geometry, *sets):
    return geometry.family.with_members(x for x in geometry.family.members if x not in {m(s) for s in sets})


def support(family):
    out = 0
    for x in family.members:
        out |= x
    return out


class TestCheckIdeal:
    def test_self(self):
        g = fig_left()
        assert check_ideal(g, g.family)

    def test_drop_top(self):
        g = fig_left()
        assert check_ideal(g, drop(g, "1234"))

    def test_not_downward_closed(self):
        g = fig_left()
        assert not check_ideal(g, drop(g, "12"))

    def test_not_a_subfamily(self):
        assert not check_ideal(fig_left(), fig_right())

    def test_fig_right_has_no_host(self, corpus4):
        hosts = [g for g in corpus4 if g.n == 4]
        assert len(hosts) == 485
        assert not any(check_ideal(g, fig_right()) for g in hosts)

    def test_ideal_type_validates(self):
        g = fig_left()
        with pytest.raises(ValueError):
            IdealOfGeometry(g, drop(g, "12"))
        with pytest.raises(ValueError):
            IdealOfGeometry(g, drop(g, "1234"), sub_universe=m("123"))
        assert IdealOfGeometry(g, drop(g, "1234", "234", "34", "4")).sub_universe == m("123")


class TestBouquet:
    def test_examples(self):
        assert check_bouquet(fig_right())
        assert check_bouquet(fig_left().family)
        assert not check_bouquet(SetFamily.from_sets(2, [[], "12"]))
        assert not check_bouquet(SetFamily.from_sets(2, ["1"]))

    def test_maximal_members(self):
        assert maximal_members(fig_right()) == sorted([m("14"), m("123"), m("234")])


class TestPositiveCircuits:
    def test_host(self):
        g = fig_left()
        assert positive_circuits(IdealOfGeometry(g, g.family)) == []

    def test_drop_top(self):
        g = fig_left()
        assert positive_circuits(IdealOfGeometry(g, drop(g, "1234"))) == [m("14")]

    def test_drop_top_and_234(self):
        # frozen from oracle_positive_circuits
        g = fig_left()
        ideal = IdealOfGeometry(g, drop(g, "1234", "234"))
        assert positive_circuits(ideal) == [m("14"), m("24")]
        assert {U4.mask(sorted(p)) for p in oracle_positive_circuits(ideal)} == {m("14"), m("24")}

    def test_elements_outside_sub_universe_are_singletons(self):
        g = chain(3)
        ideal = IdealOfGeometry(g, g.family.with_members([0, m("1")]))
        assert m("2") in positive_circuits(ideal) and m("3") in positive_circuits(ideal)

    def test_minimal(self):
        g = chain(3)
        ideal = IdealOfGeometry(g, g.family.with_members([0]))
        assert positive_circuits(ideal) == [m("1"), m("2"), m("3")]
        g = free(2)
        ideal = IdealOfGeometry(g, g.family.with_members([0, 1, 2]))
        assert minimal_positive_circuits(ideal) == [3]

    def test_reconstruction(self):
        g = fig_left()
        assert ideal_from_positive_circuits(g, []) == g.family
        assert ideal_from_positive_circuits(g, [m("14")]) == drop(g, "1234")


class TestMedian:
    def test_chain(self):
        fam = chain(3).family
        assert check_median(fam) and check_locally_union_closed(fam)

    def test_fig_right_is_not_locally_union_closed(self):
        # {1} and {3} lie in {1,2,3} but {1,3} is not a member
        assert not check_locally_union_closed(fig_right())

    def test_two_points(self):
        fam = SetFamily.from_sets(2, [[], "1", "2"])
        assert check_c6(fam) and check_c7(fam) and check_locally_union_closed(fam)
        assert check_median(fam)

    def test_c6_fails(self):
        assert not check_c6(SetFamily.from_sets(2, [[], "12"]))

    def test_c7_fails(self):
        # pairwise unions fit in members, the triple does not
        fam = SetFamily.from_sets(3, [[], "1", "2", "3", "12", "13", "23"])
        assert not check_c7(fam)

    def test_median_op(self):
        assert median(m("12"), m("23"), m("13")) == m("123")
        assert median(0, m("1"), m("2")) == 0


class TestEmbed:
    def test_two_points(self):
        emb = embed_bouquet(SetFamily.from_sets(2, [[], "1", "2"]))
        assert emb.host.family == SetFamily.power_set(Universe.of_size(2))
        assert emb.maximal_count == 2
        assert emb.steps[0].meet == 0 and emb.steps[0].added == (3,)

    def test_downset_alignment_is_identity(self):
        g = chain(3)
        emb = embed_bouquet(g.family)
        assert emb.host == g and emb.steps == [] and emb.completion == ()

    def test_rejects_non_bouquet(self):
        with pytest.raises(ValueError):
            embed_bouquet(SetFamily.from_sets(2, [[], "12"]))

    def test_rejects_c8_failure(self):
        fam = fig_right()
        assert check_bouquet(fam)
        with pytest.raises(ValueError):
            embed_bouquet(fam)

    def test_merge_keeps_local_unions(self):
        # two old members {1} and {2} end up below the merged top; {1,2} must be added
        fam = SetFamily.from_sets(U4, [[], "1", "2", "3", "23", "4", "14", "24", "34", "234"])
        emb = embedding_holds(fam)
        assert m("12") in emb.host.family
        assert emb.steps[0].meet == m("4")


def brute_ideal_count(g):
    ms = g.family.members
    count = 0
    for pick in range(1, 1 << len(ms)):
        sub = g.family.with_members(x for j, x in enumerate(ms) if pick >> j & 1)
        count += check_ideal(g, sub)
    return count


def test_ideal_enumeration_matches_brute_force(corpus4):
    for g in corpus4:
        if g.n <= 3:
            assert len(list(enumerate_ideals(g))) == brute_ideal_count(g)


def test_corpus_ideals(corpus4):
    total = 0
    for g in corpus4:
        for ideal in enumerate_ideals(g):
            total += g.n == 4
            assert check_bouquet(ideal.family)
            pcs = positive_circuits(ideal)
            assert ideal_from_positive_circuits(g, pcs) == ideal.family
            assert {frozenset(g.universe.names(p)) for p in pcs} == oracle_positive_circuits(ideal)
    assert total == 13709


def embedding_holds(bouquet):
    # the VC bound needs the bouquet on its own support, see the README
    sup = support(bouquet)
    local = trace(bouquet, sup)
    emb = embed_bouquet(local)
    host = emb.host
    assert is_downset_alignment(host)
    assert check_ideal(host, local)
    assert vc_dimension(host.family) <= emb.maximal_count * vc_dimension(local)
    return emb


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(0, 10**6))
def test_median_systems(n, seed):
    fam = random_median_system(n, seed)
    assert check_median(fam)
    ms = fam.members
    for a in ms:
        for b in ms:
            for c in ms:
                assert median(a, b, c) in fam
    assert check_bouquet(fam) and check_locally_union_closed(fam)
    embedding_holds(fam)
