import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthantgeo.lp import (
    StrictRow,
    StrictSystem,
    format_rational,
    fourier_motzkin_feasible,
    homogeneous_strictly_feasible,
    in_convex_hull,
    max_slack,
    parse_rational,
    separating_hyperplane,
    solve_standard_lp,
    strictly_feasible,
    to_rational,
)


def system(d, rows):
    return StrictSystem(d, [StrictRow(tuple(a), b, rel) for a, b, rel in rows])


def fig_left_orthant_14(circuit_rows):
    # x1 > 0, x2 < 0, x3 < 0, x4 > 0 plus circuit rows in "<" form
    rows = [((1, 0, 0, 0), 0, ">"), ((0, 1, 0, 0), 0, "<"), ((0, 0, 1, 0), 0, "<"), ((0, 0, 0, 1), 0, ">")]
    return system(4, rows + [(r, 0, "<") for r in circuit_rows])


CRITICAL_ROWS = [(1, -4, 1, 0), (0, 1, -4, 1)]
ALL_ROWS = CRITICAL_ROWS + [(1, -4, 0, 1), (1, 0, -4, 1)]


class TestRationals:
    def test_format(self):
        assert format_rational(0) == "0/1"
        assert format_rational(Fraction(6, -4)) == "-3/2"
        assert format_rational(5) == "5/1"

    def test_parse(self):
        assert parse_rational("-3/2") == Fraction(-3, 2)
        assert parse_rational("7") == 7
        with pytest.raises(ValueError):
            parse_rational("x")
        with pytest.raises(ValueError):
            parse_rational("1/0")

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            to_rational(0.5)


class TestStrictFeasible:
    def test_contradictory_line(self):
        s = system(1, [((1,), 0, ">"), ((-1,), 0, ">")])
        assert strictly_feasible(s) is None
        assert homogeneous_strictly_feasible(s) is None

    def test_simple_cone(self):
        s = system(3, [((1, 0, 0), 0, ">"), ((0, 1, 0), 0, ">"), ((-1, 4, -1), 0, ">"), ((0, 0, 1), 0, "<")])
        for solver in (strictly_feasible, homogeneous_strictly_feasible):
            w = solver(s)
            assert w is not None and s.satisfied_by(w)
        assert s.satisfied_by((1, 1, -1))

    def test_tope_123_of_fig_left(self):
        rows = [((1, 0, 0, 0), 0, ">"), ((0, 1, 0, 0), 0, ">"), ((0, 0, 1, 0), 0, ">"), ((0, 0, 0, 1), 0, "<")]
        s = system(4, rows + [(r, 0, "<") for r in ALL_ROWS])
        w = strictly_feasible(s)
        assert w is not None and s.satisfied_by(w)

    def test_orthant_14_against_critical_rows(self):
        s = fig_left_orthant_14(CRITICAL_ROWS)
        assert homogeneous_strictly_feasible(s) is None
        assert strictly_feasible(s) is None
        assert not fourier_motzkin_feasible(s)

    def test_orthant_14_against_all_rows(self):
        s = fig_left_orthant_14(ALL_ROWS)
        assert homogeneous_strictly_feasible(s) is None
        assert strictly_feasible(s) is None

    def test_homogeneous_rejects_affine(self):
        with pytest.raises(ValueError):
            homogeneous_strictly_feasible(system(1, [((1,), 1, ">")]))

    def test_single_positive(self):
        assert homogeneous_strictly_feasible(system(1, [((1,), 0, ">")])) == [1]

    def test_affine_open_interval(self):
        s = system(1, [((1,), 2, ">"), ((1,), 3, "<")])
        w = strictly_feasible(s)
        assert 2 < w[0] < 3
        assert fourier_motzkin_feasible(s)
        assert strictly_feasible(system(1, [((1,), 3, ">"), ((1,), 3, "<")])) is None

    def test_slack_capped_at_one(self):
        t, _ = max_slack(system(1, [((1,), 0, ">")]))
        assert t == 1

    def test_empty_system(self):
        assert strictly_feasible(StrictSystem(2, [])) is not None

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            system(2, [((1,), 0, ">")])


class TestStandardLP:
    def test_optimum(self):
        # min -y1 - y2 s.t. y1 + 2 y2 + s = 4, 3 y1 + y2 + s' = 6
        res = solve_standard_lp([-1, -1, 0, 0], [[1, 2, 1, 0], [3, 1, 0, 1]], [4, 6])
        assert res.status == "optimal" and res.value == Fraction(-14, 5)

    def test_infeasible(self):
        assert solve_standard_lp([0], [[1]], [-1]).status == "infeasible"

    def test_unbounded(self):
        assert solve_standard_lp([-1, 0], [[1, -1]], [0]).status == "unbounded"

    def test_degenerate_cycling_example(self):
        # a degenerate instance in the style of Beale's; Bland's rule must terminate at x1 = x3 = 1
        c = [Fraction(-3, 4), 20, Fraction(-1, 2), 6, 0, 0, 0]
        a = [
            [Fraction(1, 4), -8, -1, 9, 1, 0, 0],
            [Fraction(1, 2), -12, Fraction(-1, 2), 3, 0, 1, 0],
            [0, 0, 1, 0, 0, 0, 1],
        ]
        res = solve_standard_lp(c, a, [0, 0, 1])
        assert res.status == "optimal" and res.value == Fraction(-5, 4)


class TestConvexHull:
    def test_member(self):
        assert in_convex_hull([1, 2], [[1, 2], [3, 4]])

    def test_interval(self):
        assert in_convex_hull([0], [[-1], [1]])
        assert not in_convex_hull([2], [[-1], [1]])

    def test_empty_vertex_set(self):
        assert not in_convex_hull([0], [])

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            in_convex_hull([0, 0], [[1]])

    def test_separator(self):
        w, c = separating_hyperplane([2], [[-1], [1]])
        assert w[0] * 2 > c > max(w[0] * -1, w[0] * 1)
        assert separating_hyperplane([0], [[-1], [1]]) is None


def random_homogeneous(rng, d, m):
    rows = []
    for _ in range(m):
        a = tuple(rng.randint(-3, 3) for _ in range(d))
        rows.append((a, 0, rng.choice("<>")))
    return system(d, rows)


def test_random_paths_agree_small():
    rng = random.Random(7)
    for _ in range(150):
        d = rng.randint(1, 4)
        s = random_homogeneous(rng, d, rng.randint(1, 7))
        a = strictly_feasible(s)
        b = homogeneous_strictly_feasible(s)
        assert (a is None) == (b is None)
        assert (a is not None) == fourier_motzkin_feasible(s)


@settings(max_examples=120, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda d: st.lists(
            st.tuples(st.tuples(*[st.integers(-4, 4)] * d), st.integers(-3, 3), st.sampled_from("<>")),
            min_size=1,
            max_size=6,
        ).map(lambda rows: (d, rows))
    )
)
def test_affine_matches_fourier_motzkin(data):
    d, rows = data
    s = system(d, rows)
    w = strictly_feasible(s)
    assert (w is not None) == fourier_motzkin_feasible(s)
    if w is not None:
        assert s.satisfied_by(w)


@settings(max_examples=80, deadline=None)
@given(
    st.integers(1, 3).flatmap(
        lambda d: st.tuples(
            st.lists(st.tuples(*[st.integers(-3, 3)] * d), min_size=1, max_size=5),
            st.tuples(*[st.integers(-3, 3)] * d),
        )
    )
)
def test_hull_iff_no_separator(data):
    vertices, point = data
    inside = in_convex_hull(point, vertices)
    assert inside == (separating_hyperplane(point, vertices) is None)
