"""Set representations: constructors, hulls, dimension, Minkowski sums."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperconvex import (
    Flat,
    HyperconvexError,
    Polytope,
    Subspace,
    affine_hull,
    dimension,
    gap,
    minkowski_sum,
    translate,
    zero_subspace,
)

from conftest import flat, poly, seg, span


class TestConstructors:
    def test_polytope_rejects_empty(self):
        with pytest.raises(HyperconvexError):
            Polytope(np.zeros((0, 2)))

    def test_polytope_rejects_non_finite(self):
        with pytest.raises(HyperconvexError):
            Polytope(np.array([[np.nan, 0.0]]))

    def test_subspace_rejects_non_orthonormal(self):
        with pytest.raises(HyperconvexError):
            Subspace(np.array([[2.0, 0.0]]))

    def test_subspace_rejects_overfull_basis(self):
        with pytest.raises(HyperconvexError):
            Subspace(np.array([[1.0, 0.0], [0.0, 1.0], [1.0, 0.0]]))

    def test_flat_rejects_mismatched_base(self):
        with pytest.raises(HyperconvexError):
            Flat(np.array([0.0, 1.0, 2.0]), np.array([[1.0, 0.0]]))

    def test_flat_rejects_dependent_basis(self):
        with pytest.raises(HyperconvexError):
            Flat(np.zeros(2), np.array([[1.0, 0.0], [1.0, 0.0]]))

    def test_zero_subspace(self):
        z = zero_subspace(3)
        assert z.ambient_dim == 3
        assert z.basis.shape == (0, 3)

    def test_values_are_immutable(self):
        p = seg((0, 0), (1, 0))
        with pytest.raises(ValueError):
            p.points[0, 0] = 5.0


class TestAffineHull:
    def test_segment(self):
        f = affine_hull(seg((0, 0), (1, 0)))
        assert np.allclose(f.base, [0, 0])
        assert abs(abs(f.basis[0, 0]) - 1.0) < 1e-12

    def test_singleton(self):
        f = affine_hull(poly((3, 4)))
        assert f.basis.shape == (0, 2)
        assert np.allclose(f.base, [3, 4])

    def test_plane_at_height_one(self):
        # hull of three points in {z = 1}: direction span{e1, e2}
        f = affine_hull(poly((0, 0, 1), (1, 0, 1), (0, 1, 1)))
        assert f.basis.shape == (2, 3)
        assert np.max(np.abs(f.basis[:, 2])) < 1e-9
        for g in [(0, 0, 1), (1, 0, 1), (0, 1, 1)]:
            rel = np.array(g, dtype=float) - f.base
            residual = rel - f.basis.T @ (f.basis @ rel)
            assert np.linalg.norm(residual) < 1e-9

    def test_generators_lie_on_hull(self, rng):
        pts = rng.normal(size=(5, 4))
        pts[:, 3] = 2.0
        f = affine_hull(Polytope(pts))
        assert f.basis.shape[0] == 3
        rel = pts - f.base
        residual = rel - rel @ f.basis.T @ f.basis
        assert np.max(np.abs(residual)) < 1e-9


class TestDimension:
    @pytest.mark.parametrize(
        "s, k",
        [
            (poly((2, 5)), 0),
            (seg((0, 0), (1, 0)), 1),
            (poly((0, 0), (1, 0), (0, 1)), 2),
            (flat((0, 1), (1, 0)), 1),
            (span((1, 1)), 1),
            (zero_subspace(2), 0),
        ],
    )
    def test_examples(self, s, k):
        assert dimension(s) == k

    def test_collinear_triple_is_one_dimensional(self):
        assert dimension(poly((0, 0), (1, 0), (2, 0))) == 1


class TestMinkowskiSum:
    def test_unit_square(self):
        out = minkowski_sum(seg((0, 0), (1, 0)), seg((0, 0), (0, 1)))
        got = {tuple(p) for p in np.round(out.points, 12).tolist()}
        assert {(0, 0), (1, 0), (0, 1), (1, 1)} <= got

    def test_singleton_is_identity(self):
        p = poly((1, 1), (2, 1))
        out = minkowski_sum(p, poly((0, 0)))
        assert np.allclose(np.sort(out.points, axis=0), np.sort(p.points, axis=0))

    def test_flat_plus_singleton_translates(self):
        out = minkowski_sum(flat((0, 1), (1, 0)), poly((0, 2)))
        assert isinstance(out, Flat)
        assert np.allclose(out.base, [0, 3])
        assert gap(Subspace(out.basis), span((1, 0))) < 1e-12

    def test_unsupported_pair(self):
        with pytest.raises(HyperconvexError):
            minkowski_sum(span((1, 0)), seg((0, 0), (1, 0)))

    def test_dimension_mismatch(self):
        with pytest.raises(HyperconvexError):
            minkowski_sum(seg((0, 0), (1, 0)), Polytope(np.zeros((1, 3))))


coords = st.floats(-50, 50, allow_nan=False, width=32)


@settings(max_examples=60, deadline=None)
@given(
    pts=st.lists(st.tuples(coords, coords, coords), min_size=1, max_size=5),
    shift=st.tuples(coords, coords, coords),
)
def test_dimension_is_translation_invariant(pts, shift):
    p = Polytope(np.array(pts, dtype=float))
    q = translate(p, np.array(shift, dtype=float))
    assert dimension(p) == dimension(q)


@settings(max_examples=60, deadline=None)
@given(
    a=st.lists(st.tuples(coords, coords), min_size=1, max_size=4),
    b=st.lists(st.tuples(coords, coords), min_size=1, max_size=4),
)
def test_minkowski_sum_generators_are_pairwise_sums(a, b):
    pa, pb = np.array(a, dtype=float), np.array(b, dtype=float)
    out = minkowski_sum(Polytope(pa), Polytope(pb))
    want = {tuple(x + y) for x in pa for y in pb}
    assert {tuple(p) for p in out.points.tolist()} <= want
