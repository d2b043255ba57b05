import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import FIG_RIGHT_SETS, U4, chain, fig_left, free, m
from orthantgeo.geometry import (
    ConvexGeometry,
    RootedCircuit,
    check_anti_exchange,
    check_axioms,
    check_c4,
    check_dietrich,
    circuits_via_cubes,
    closure,
    convex_dimension,
    copoints,
    critical_rooted_circuits,
    extreme_points,
    generate_from_orders,
    generating_orders,
    is_downset_alignment,
    reconstruct_from_rooted_sets,
    rooted_circuits,
)
from orthantgeo.oracles import (
    enumerate_convex_geometries,
    enumerate_convex_geometries_plain,
    oracle_cdim,
    oracle_critical_circuits,
    oracle_meet_irreducibles,
    oracle_rooted_circuits,
    random_geometry,
)
from orthantgeo.sets import SetFamily, Universe, bits, maximal_cubes, complement_family, vc_dimension


def rc(stem, root):
    return RootedCircuit(m(stem), m(root).bit_length() - 1)


def as_labels(geometry, circuits):
    u = geometry.universe
    return {(frozenset(u.names(c.stem)), u.labels[c.root]) for c in circuits}


class TestAxioms:
    def test_fig_left(self):
        rep = check_axioms(fig_left().family)
        assert rep.ok and rep.witnesses == {}

    def test_fig_right(self):
        rep = check_axioms(SetFamily.from_sets(U4, FIG_RIGHT_SETS))
        assert (rep.c1, rep.c2, rep.c3) == (False, True, False)
        assert rep.witnesses["c1"] == (U4.full,)
        # {1,2,3} has no one-element extension inside the family
        assert rep.witnesses["c3"] == (m("123"),)

    def test_two_sets_on_two_points(self):
        rep = check_axioms(SetFamily.from_sets(2, [[], "12"]))
        assert rep.c1 and rep.c2 and not rep.c3
        assert rep.witnesses["c3"] == (0,)

    def test_c2_witness(self):
        rep = check_axioms(SetFamily.from_sets(2, [[], "1", "2", "12"]))
        assert rep.c2
        rep = check_axioms(SetFamily.from_sets(3, [[], "12", "23", "123"]))
        assert not rep.c2 and rep.witnesses["c2"] == (m("12"), m("23"))

    def test_constructor_rejects(self):
        with pytest.raises(ValueError):
            ConvexGeometry(SetFamily.from_sets(U4, FIG_RIGHT_SETS))

    @pytest.mark.parametrize("g", [fig_left(), free(3), chain(3)])
    def test_c4_c5_on_geometries(self, g):
        assert check_anti_exchange(g.family) and check_c4(g.family)

    def test_c4_c5_small_family(self):
        # {∅,1,2,12,123} satisfies (C1)-(C3), so (C4) and (C5) hold by brute force too
        fam = SetFamily.from_sets(3, [[], "1", "2", "12", "123"])
        assert check_axioms(fam).ok
        assert check_anti_exchange(fam) and check_c4(fam)

    def test_c4_c5_negative(self):
        fam = SetFamily.from_sets(2, [[], "12"])
        assert not check_anti_exchange(fam) and not check_c4(fam)

    def test_c4_needs_c1_c2(self):
        with pytest.raises(ValueError):
            check_c4(SetFamily.from_sets(U4, FIG_RIGHT_SETS))
        with pytest.raises(ValueError):
            check_anti_exchange(SetFamily.from_sets(2, [[], "1"]))


def test_axiom_equivalence_exhaustive():
    # for every family with (C1),(C2) on n <= 3, (C3) <=> (C4) <=> (C5)
    for n in range(4):
        u = Universe.of_size(n)
        full = u.full
        middle = list(range(1, full))
        for pick in range(1 << len(middle)):
            fam = {0, full} | {x for j, x in enumerate(middle) if pick >> j & 1}
            if any((a & b) not in fam for a in fam for b in fam):
                continue
            f = SetFamily(u, fam)
            c3 = check_axioms(f).c3
            assert c3 == check_c4(f) == check_anti_exchange(f)


def test_axiom_equivalence_n4_sampled():
    rng = random.Random(3)
    full = 15
    seen = 0
    while seen < 400:
        fam = {0, full} | {x for x in range(1, full) if rng.random() < 0.5}
        # close under meets to satisfy (C2)
        changed = True
        while changed:
            new = {a & b for a in fam for b in fam} - fam
            fam |= new
            changed = bool(new)
        f = SetFamily(U4, fam)
        assert check_axioms(f).c3 == check_c4(f) == check_anti_exchange(f)
        seen += 1


class TestClosureAndExtreme:
    def test_closure(self):
        g = fig_left()
        assert closure(g, m("13")) == m("123")
        assert closure(g, m("14")) == U4.full
        for x in g.family.members:
            assert closure(g, x) == x

    def test_extreme(self):
        g = fig_left()
        assert extreme_points(g, 0) == 0
        assert extreme_points(g, m("123")) == m("13")
        assert extreme_points(g, U4.full) == m("14")
        with pytest.raises(ValueError):
            extreme_points(g, m("13"))


class TestRootedCircuits:
    def test_fig_left(self):
        g = fig_left()
        assert rooted_circuits(g) == sorted([rc("123", "2"), rc("124", "2"), rc("134", "3"), rc("234", "3")])

    def test_fig_left_critical(self):
        assert critical_rooted_circuits(fig_left()) == [rc("123", "2"), rc("234", "3")]

    def test_free(self):
        assert rooted_circuits(free(4)) == []
        assert critical_rooted_circuits(free(4)) == []
        assert circuits_via_cubes(free(3)) == []

    def test_chain(self):
        # frozen from oracle_rooted_circuits / oracle_critical_circuits
        g = chain(3)
        assert rooted_circuits(g) == [rc("12", "1"), rc("13", "1"), rc("23", "2")]
        assert critical_rooted_circuits(g) == [rc("12", "1"), rc("23", "2")]
        assert as_labels(g, rooted_circuits(g)) == oracle_rooted_circuits(g)

    def test_canonical_order(self):
        cs = rooted_circuits(fig_left())
        assert cs == sorted(cs, key=lambda c: (c.stem, c.root))

    def test_root_must_be_in_stem(self):
        with pytest.raises(ValueError):
            RootedCircuit(0b011, 2)

    def test_cube_encoding(self):
        assert str(rc("123", "2").cube(4)) == "+,-,+,0"

    def test_via_cubes(self):
        for g in (fig_left(), chain(3), chain(4)):
            assert circuits_via_cubes(g) == rooted_circuits(g)


class TestReconstruction:
    def test_empty(self):
        assert reconstruct_from_rooted_sets(U4, []) == SetFamily.power_set(U4)

    def test_fig_left(self):
        g = fig_left()
        assert reconstruct_from_rooted_sets(U4, rooted_circuits(g)) == g.family

    def test_from_criticals_is_a_superset(self):
        g = fig_left()
        fam = reconstruct_from_rooted_sets(U4, critical_rooted_circuits(g))
        assert set(g.family.members) < set(fam.members)
        # only {1,4} avoids both critical patterns without being convex
        assert set(fam.members) - set(g.family.members) == {m("14")}

    def test_dietrich(self):
        assert check_dietrich([])
        assert check_dietrich(rooted_circuits(fig_left()))
        assert not check_dietrich([rc("12", "2"), rc("23", "3")])

    def test_dietrich_axiom_one(self):
        assert not check_dietrich([rc("12", "2"), rc("123", "2")])


class TestLattice:
    def test_copoints_free(self):
        g = free(3)
        assert copoints(g) == sorted((7 & ~(1 << e), e) for e in range(3))

    def test_copoints_chain(self):
        assert copoints(chain(3)) == [(0, 0), (m("1"), 1), (m("12"), 2)]

    def test_copoints_fig_left(self):
        # frozen from the Hasse diagram of the 11 sets
        expected = [("1", "2"), ("12", "3"), ("123", "4"), ("4", "3"), ("34", "2"), ("234", "1")]
        got = copoints(fig_left())
        assert sorted(got) == sorted((m(s), m(p).bit_length() - 1) for s, p in expected)
        assert {fig_left().universe.format(x) for x, _ in got} == {
            fig_left().universe.format(x) for x in (
                U4.mask(sorted(s)) for s in oracle_meet_irreducibles(fig_left())
            )
        }

    def test_cdim(self):
        assert convex_dimension(chain(4)) == 1
        assert convex_dimension(free(4)) == 4
        assert convex_dimension(fig_left()) == 2 == oracle_cdim(fig_left())

    def test_orders_chain(self):
        assert generating_orders(chain(3)) == [(2, 1, 0)]

    def test_orders_free(self):
        assert sorted(generating_orders(free(2))) == [(0, 1), (1, 0)]

    def test_orders_fig_left(self):
        g = fig_left()
        orders = generating_orders(g)
        assert len(orders) == 2
        assert generate_from_orders(U4, orders) == g.family

    def test_generate_single_order(self):
        fam = generate_from_orders(U4, [(0, 1, 2, 3)])
        assert fam.members == tuple(sorted([0, m("4"), m("34"), m("234"), m("1234")]))

    def test_generate_reversed_pair(self):
        assert generate_from_orders(Universe.of_size(2), [(0, 1), (1, 0)]) == SetFamily.power_set(Universe.of_size(2))

    def test_generate_rejects(self):
        with pytest.raises(ValueError):
            generate_from_orders(U4, [])
        with pytest.raises(ValueError):
            generate_from_orders(U4, [(0, 1, 2, 2)])

    def test_downset_alignment(self):
        assert is_downset_alignment(chain(3))
        assert is_downset_alignment(free(3))
        assert not is_downset_alignment(fig_left())


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 10**6))
def test_generated_families_are_geometries(n, k, seed):
    g = random_geometry(n, k, seed)
    assert check_axioms(g.family).ok
    orders = generating_orders(g)
    assert len(orders) == convex_dimension(g)
    assert generate_from_orders(g.universe, orders) == g.family


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 6), st.integers(1, 4), st.integers(0, 10**6))
def test_circuit_invariants(n, k, seed):
    g = random_geometry(n, k, seed)
    circuits = rooted_circuits(g)
    assert reconstruct_from_rooted_sets(g.universe, circuits) == g.family
    assert set(critical_rooted_circuits(g)) <= set(circuits)
    assert check_dietrich(circuits)
    assert circuits_via_cubes(g) == circuits
    for c in circuits:
        assert closure(g, c.base) >> c.root & 1


def test_circuit_cubes_are_the_maximal_cubes(corpus4):
    for g in corpus4:
        cubes = set(maximal_cubes(complement_family(g.family)))
        assert cubes == {c.cube(g.n) for c in rooted_circuits(g)}


def test_enumeration_counts():
    counts = [len(list(enumerate_convex_geometries(n))) for n in range(5)]
    assert counts == [1, 1, 3, 22, 485]
    assert [len(enumerate_convex_geometries_plain(n)) for n in range(5)] == counts


def test_corpus_oracles(corpus4):
    for g in corpus4:
        assert as_labels(g, rooted_circuits(g)) == oracle_rooted_circuits(g)
        assert as_labels(g, critical_rooted_circuits(g)) == oracle_critical_circuits(g)
        assert convex_dimension(g) == oracle_cdim(g)
        assert reconstruct_from_rooted_sets(g.universe, rooted_circuits(g)) == g.family
        assert check_c4(g.family) and check_anti_exchange(g.family)


def test_downset_alignments_cdim_equals_vc(corpus4):
    count = 0
    for g in corpus4:
        if g.n and is_downset_alignment(g):
            count += 1
            assert convex_dimension(g) == vc_dimension(g.family)
    assert count > 0
