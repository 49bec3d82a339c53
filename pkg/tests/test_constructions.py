import pytest

from modules.coloured_graph import degree
from modules.constructions import (
    CyclePower, HFamily, WheelExample, ZVertex, build, build_cycle_power, build_H,
    build_wheel_example, build_z_vertex, h_cliques, merge_to_exact_k,
)
from modules.errors import PreconditionError
from modules.g_search import best_h, h_edge_count
from modules.rainbow_detector import find_rainbow_cycle_upto, find_rainbow_triangle


class TestHFamily:
    @pytest.mark.parametrize("a, b, k, m", [(2, 3, 2, 7), (3, 3, 2, 10), (1, 4, 2, 6)])
    def test_edge_counts(self, a, b, k, m):
        assert build_H(a, b, k).m == m

    def test_turan(self):
        for n in range(2, 10):
            assert build_H(n // 2, n - n // 2, 1).m == (n // 2) * (n - n // 2)

    def test_cliques(self):
        assert h_cliques(2, 5, 2) == [[2, 3], [4, 5], [6]]

    def test_sweep(self):
        """a+b ≤ 40, k ≤ 5 전수"""
        for k in range(1, 6):
            for a in range(1, 40):
                for b in range(1, 41 - a):
                    g = build_H(a, b, k)
                    assert g.max_class_size <= k
                    assert g.m == h_edge_count(a, b, k)
                    assert not find_rainbow_triangle(g).found

    def test_invalid(self):
        with pytest.raises(PreconditionError):
            build_H(0, 3, 2)


class TestCyclePower:
    def test_c4(self):
        g = build_cycle_power(1, 3)
        assert (g.n, g.m, g.class_sizes) == (4, 4, [1, 1, 1, 1])

    def test_k2_r3(self):
        g = build_cycle_power(2, 3)
        assert (g.n, g.m, g.p) == (7, 14, 7)
        assert set(g.class_sizes) == {2}

    def test_sharpness_r3(self):
        for k in range(1, 10):
            g = build_cycle_power(k, 3)
            assert g.n == 3 * k + 1
            assert g.class_sizes == [k] * g.n
            assert not find_rainbow_triangle(g).found

    @pytest.mark.parametrize("limit", [12, pytest.param(30, marks=pytest.mark.slow)])
    def test_no_short_rainbow_cycle(self, limit):
        for k in range(1, limit // 3 + 1):
            for r in range(3, limit // k + 1):
                assert not find_rainbow_cycle_upto(build_cycle_power(k, r), r).found

    def test_invalid_r(self):
        with pytest.raises(PreconditionError):
            build_cycle_power(2, 2)


class TestZVertex:
    def test_k2_r3(self):
        g = build_z_vertex(2, 3)
        assert (g.n, g.p) == (8, 7)
        assert set(g.class_sizes) == {3}

    def test_smallest(self):
        g = build_z_vertex(1, 3)
        assert (g.n, g.p, g.class_sizes) == (5, 4, [2, 2, 2, 2])

    def test_z_is_last_and_joined_to_cycle(self):
        for k, r in [(1, 3), (2, 3), (3, 4)]:
            g = build_z_vertex(k, r)
            assert degree(g, g.n - 1) == g.n - 1

    def test_sharpness_r3(self):
        for k in range(1, 10):
            g = build_z_vertex(k, 3)
            assert g.p == g.n - 1
            assert set(g.class_sizes) == {k + 1}
            assert not find_rainbow_triangle(g).found

    @pytest.mark.parametrize("limit", [12, pytest.param(30, marks=pytest.mark.slow)])
    def test_no_short_rainbow_cycle(self, limit):
        for k in range(1, limit // 3 + 1):
            for r in range(3, limit // k + 1):
                assert not find_rainbow_cycle_upto(build_z_vertex(k, r), r).found


class TestWheel:
    def test_five_wheel(self, wheel5):
        assert build_wheel_example(2) == wheel5

    def test_counts(self):
        for k in range(2, 7):
            g = build_wheel_example(k)
            assert g.n == 3 * k - 1
            assert g.m == 3 * k * k - 2 * k
            assert g.max_class_size == k
            assert not find_rainbow_triangle(g).found

    def test_beats_h_family(self):
        for k in range(2, 7):
            h = best_h(3 * k - 1, k).max_edges
            assert h == 3 * k * k - 3 * k + 1
            assert build_wheel_example(k).m > h

    def test_invalid(self):
        with pytest.raises(PreconditionError):
            build_wheel_example(1)


class TestMerge:
    def test_h142(self):
        g = merge_to_exact_k(1, 4, 2)
        assert g.class_sizes == [2, 2, 2]
        assert g.colour_of(1, 2) == g.colour_of(3, 4)

    def test_all_classes_exact(self):
        for k in range(1, 5):
            for a in range(1, 4):
                for b in range(2 * k, 6 * k + 1, 2 * k):
                    g = merge_to_exact_k(a, b, k)
                    assert set(g.class_sizes) == {k}
                    assert g.m == build_H(a, b, k).m
                    assert not find_rainbow_triangle(g).found

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            merge_to_exact_k(1, 3, 2)


def test_build_dispatch():
    assert build(HFamily(2, 3, 2)) == build_H(2, 3, 2)
    assert build(CyclePower(2, 3)) == build_cycle_power(2, 3)
    assert build(ZVertex(2, 3)) == build_z_vertex(2, 3)
    assert build(WheelExample(3)) == build_wheel_example(3)
    with pytest.raises(PreconditionError):
        build("H")
