from fractions import Fraction

import pytest

from conftest import complete_coloured
from modules.bounds import (
    bound_suite, chapprox_forces_rainbow, check_goodman, check_ls_stability,
    check_majority_bound, claim_neighbourhood_bound, goodman_lower_bound,
    level_infeasible, ls_stability_bound, majority_infeasible, triangle_count,
    triangle_count_matrix,
)
from modules.coloured_graph import SimpleGraph
from modules.colouring_oracle import iter_rainbow_free_colourings
from modules.constructions import build_H
from modules.errors import PreconditionError
from modules.graph_enumerator import isomorphism_classes


class TestTriangleCount:
    def test_k4(self):
        assert triangle_count(complete_coloured(4)) == 4

    def test_k33(self):
        g = SimpleGraph.build(6, [(u, v) for u in range(3) for v in range(3, 6)])
        assert triangle_count(g) == 0

    def test_wheel(self, wheel5):
        assert triangle_count(wheel5) == 4
        assert triangle_count_matrix(wheel5) == 4

    def test_matrix_agrees(self):
        for graph in isomorphism_classes(5):
            assert triangle_count(graph) == triangle_count_matrix(graph)


class TestMajority:
    def test_wheel_equality(self, wheel5):
        report = check_majority_bound(wheel5, 2)
        assert report.lhs == 4 and report.rhs == 4
        assert report.holds
        assert report.context["rainbow_free"]
        assert report.context["refined_holds"]

    def test_k1_forces_triangle_free(self):
        g = build_H(3, 3, 1)
        report = check_majority_bound(g, 1)
        assert report.rhs == 0 and report.lhs == 0 and report.holds

    def test_k5_pruning(self):
        assert majority_infeasible(10, 10, 2)
        assert not majority_infeasible(4, 8, 2)

    def test_class_size_precondition(self, wheel5):
        with pytest.raises(PreconditionError):
            check_majority_bound(wheel5, 1)

    def test_violation_reported_not_raised(self, rainbow_k3):
        report = check_majority_bound(rainbow_k3, 1)
        assert report.holds is False
        assert "refined_holds" not in report.context

    @pytest.mark.parametrize("n", [3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
    def test_every_enumerated_colouring(self, n):
        """k ≤ 3 의 무지개 없는 색칠에서 t ≤ Σ C(|C_i|,2) ≤ ½m(k-1)"""
        for graph in isomorphism_classes(n):
            for k in range(1, 4):
                for colouring in iter_rainbow_free_colourings(graph, k, limit=25):
                    report = check_majority_bound(colouring, k)
                    assert report.holds
                    assert report.context["refined_holds"]


class TestGoodman:
    def test_values(self):
        assert goodman_lower_bound(4, 6) == 4
        assert goodman_lower_bound(5, 8) == Fraction(56, 15)
        assert goodman_lower_bound(6, 9) == 0

    def test_negative_below_mantel(self):
        assert goodman_lower_bound(6, 3) < 0

    def test_n_zero(self):
        with pytest.raises(PreconditionError):
            goodman_lower_bound(0, 0)

    def test_wheel(self, wheel5):
        report = check_goodman(wheel5)
        assert report.holds and report.rhs == Fraction(56, 15)

    def test_level_pruning(self):
        assert level_infeasible(5, 10, 2)
        assert level_infeasible(5, 9, 2)
        assert not level_infeasible(5, 8, 2)


class TestChapprox:
    def test_condition_one(self):
        verdict = chapprox_forces_rainbow(24, 27, 8)
        assert verdict.condition_1 and verdict.forced

    def test_condition_two(self):
        verdict = chapprox_forces_rainbow(20, 20, 8)
        assert verdict.condition_2 and not verdict.condition_1

    def test_neither(self):
        assert not chapprox_forces_rainbow(20, 20, 7).forced

    def test_invalid(self):
        with pytest.raises(PreconditionError):
            chapprox_forces_rainbow(0, 1, 1)


class TestStability:
    def test_values(self):
        assert ls_stability_bound(6, 10).rhs == 3
        assert ls_stability_bound(6, 9).rhs == 0

    def test_without_graph(self):
        report = ls_stability_bound(6, 10)
        assert report.lhs is None and report.holds is None

    def test_not_applicable(self):
        with pytest.raises(PreconditionError):
            ls_stability_bound(6, 12)

    def test_h332(self):
        report = check_ls_stability(build_H(3, 3, 2))
        assert report.lhs == 3 and report.holds


class TestClaim:
    def test_empty_set(self, wheel5):
        report = claim_neighbourhood_bound(wheel5, 4, [], 2)
        assert (report.lhs, report.rhs, report.holds) == (0, 0, True)

    def test_h_family(self):
        for k in range(1, 6):
            g = build_H(1, k, k)
            report = claim_neighbourhood_bound(g, 0, range(1, k + 1), k)
            assert report.lhs == k * (k - 1) // 2
            assert report.holds

    def test_wheel_centre(self, wheel5):
        report = claim_neighbourhood_bound(wheel5, 4, [0, 1, 2, 3], 2)
        assert (report.lhs, report.rhs) == (4, 4)
        assert report.context["refined_bound"] == 4

    def test_not_neighbourhood(self, wheel5):
        with pytest.raises(PreconditionError):
            claim_neighbourhood_bound(wheel5, 0, [2], 2)


def test_report_to_dict(wheel5):
    data = check_goodman(wheel5).to_dict()
    assert data["name"] == "goodman"
    assert data["relation"] == ">="
    assert data["context"] == {"n": 5, "m": 8}


def test_bound_suite_small():
    summary = bound_suite(max_n=5)
    assert summary["violations"] == []
    assert [summary["per_n"][n]["classes"] for n in range(1, 6)] == [1, 2, 4, 11, 34]


@pytest.mark.slow
def test_bound_suite_seven():
    summary = bound_suite(max_n=7)
    assert summary["violations"] == []
    assert summary["per_n"][7]["classes"] == 1044
    assert all(stats["ls_checked"] > 0 for n, stats in summary["per_n"].items() if n >= 2)
