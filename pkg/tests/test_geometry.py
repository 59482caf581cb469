import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from trinn.geometry import NodeGrid, Segment, Triangle


class TestContains:
    @pytest.mark.parametrize("pt,expected", [((0.2, 0.3), True), ((0.6, 0.6), False), ((0, 1), True),
                                             ((-0.1, 0.5), False), ((0.5, -1e-3), False)])
    def test_examples(self, pt, expected):
        assert Triangle(1.0).contains(*pt) is expected

    def test_tolerance_scales_with_a(self):
        tri = Triangle(1000.0)
        assert tri.contains(500.0, 500.0 + 1e-10)
        assert not tri.contains(500.0, 500.0 + 1e-8)

    def test_vectorised(self):
        got = Triangle(1.0).contains(np.array([0.1, 0.9]), np.array([0.1, 0.9]))
        np.testing.assert_array_equal(got, [True, False])

    def test_nonpositive_a_rejected(self):
        with pytest.raises(ValueError):
            Triangle(0.0)


class TestBoundarySamples:
    def test_g1(self):
        np.testing.assert_array_equal(Triangle(1.0).boundary_samples(Segment.G1, 3), [[0, 0], [0.5, 0], [1, 0]])

    def test_g3_endpoints(self):
        np.testing.assert_array_equal(Triangle(1.0).boundary_samples(Segment.G3, 2), [[1, 0], [0, 1]])

    def test_g2_scaled(self):
        np.testing.assert_array_equal(Triangle(2.0).boundary_samples(Segment.G2, 3), [[0, 0], [0, 1], [0, 2]])

    def test_count_validated(self):
        with pytest.raises(ValueError):
            Triangle(1.0).boundary_samples(Segment.G1, 1)

    @given(st.floats(0.01, 100), st.integers(2, 600), st.sampled_from(list(Segment)))
    def test_points_on_their_segment(self, a, count, seg):
        tri = Triangle(a)
        pts = tri.boundary_samples(seg, count)
        assert np.all(tri.contains(pts[:, 0], pts[:, 1]))
        assert np.all(tri.on_segment(seg, pts[:, 0], pts[:, 1]))
        if seg is Segment.G3:
            assert np.max(np.abs(pts.sum(axis=1) - a)) <= 1e-12 * a


class TestInteriorGrid:
    def test_vertices(self):
        np.testing.assert_array_equal(Triangle(1.0).interior_grid(1), [[0, 0], [0, 1], [1, 0]])

    def test_counts(self):
        assert len(Triangle(1.0).interior_grid(2)) == 6
        assert len(Triangle(1.0).interior_grid(300)) == 45451

    def test_lexicographic_order(self):
        pts = Triangle(1.0).interior_grid(7) * 7
        keys = [tuple(np.rint(p).astype(int)) for p in pts]
        assert keys == sorted(keys)

    @given(st.floats(0.01, 100), st.integers(1, 80))
    def test_inside(self, a, n):
        tri = Triangle(a)
        pts = tri.interior_grid(n)
        assert len(pts) == (n + 1) * (n + 2) // 2
        assert np.all(tri.contains(pts[:, 0], pts[:, 1]))


class TestNodeGrid:
    @given(st.floats(0.01, 100), st.integers(1, 200))
    def test_last_node_at_y_zero_is_a(self, a, n):
        assert NodeGrid(Triangle(a), n, n).x_nodes(0.0)[-1] == a
        assert NodeGrid(Triangle(a), n, n).y_nodes(0.0)[-1] == a

    def test_endpoints_follow_chord(self):
        g = NodeGrid(Triangle(1.0), 4, 3)
        xs = g.x_nodes(0.25)
        assert xs[0] == 0 and xs[-1] == pytest.approx(0.75)
        assert len(g.y_nodes(0.5)) == 4
