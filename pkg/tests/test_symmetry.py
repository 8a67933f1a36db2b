"""Finite orthogonal groups, configuration stabilizers, and verdicts."""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ssb_lab.symmetry import (FiniteGroup, OrthoTransform, PointConfig,
                              SSBKind, classify_ssb, compose, config_equal,
                              cyclic_group, dihedral_group, identity_transform,
                              is_invariant, orbit, reflection2d, rotation2d,
                              same_transform, sign_flip_group, stabilizer,
                              total_edge_length, transform_config,
                              verify_group_axioms)


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

def test_rotation_matrix_entries():
    r = rotation2d(math.pi / 2.0)
    np.testing.assert_allclose(r.matrix, [[0.0, -1.0], [1.0, 0.0]],
                               atol=1e-15)
    assert r.dim == 2


def test_rotation_moves_points_counterclockwise():
    r = rotation2d(math.pi / 2.0)
    np.testing.assert_allclose(r.apply(np.array([[1.0, 0.0]])),
                               [[0.0, 1.0]], atol=1e-15)


def test_reflection_across_x_axis():
    m = reflection2d(0.0)
    np.testing.assert_allclose(m.matrix, [[1.0, 0.0], [0.0, -1.0]],
                               atol=1e-15)
    assert m.apply(np.array([[2.0, 3.0]]))[0, 1] == -3.0


def test_non_orthogonal_matrix_rejected():
    with pytest.raises(ValueError):
        OrthoTransform(np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_non_square_matrix_rejected():
    with pytest.raises(ValueError):
        OrthoTransform(np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0]]))


def test_transform_matrix_is_read_only():
    r = rotation2d(0.3)
    with pytest.raises(ValueError):
        r.matrix[0, 0] = 5.0


def test_compose_dim_mismatch():
    with pytest.raises(ValueError):
        compose(identity_transform(2), identity_transform(3))


@settings(derandomize=True, deadline=None)
@given(st.floats(-10.0, 10.0), st.floats(-10.0, 10.0))
def test_rotations_compose_by_adding_angles(a, b):
    lhs = compose(rotation2d(a), rotation2d(b))
    assert same_transform(lhs, rotation2d(a + b), tol=1e-9)


def test_two_reflections_make_a_rotation():
    # mirrors at angles s and t compose to a rotation by 2(s - t)
    s, t = 0.7, 0.2
    got = compose(reflection2d(s), reflection2d(t))
    assert same_transform(got, rotation2d(2.0 * (s - t)), tol=1e-12)


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("group,order", [
    (dihedral_group(3), 6),
    (dihedral_group(4), 8),
    (cyclic_group(5), 5),
    (sign_flip_group(), 2),
])
def test_standard_groups_satisfy_axioms(group, order):
    assert group.order == order
    check = verify_group_axioms(group)
    assert check.ok, check.violations


def test_dropping_an_element_breaks_closure():
    d4 = dihedral_group(4)
    broken = FiniteGroup(d4.elements[:-1])
    check = verify_group_axioms(broken)
    assert not check.ok
    assert any("closure" in v or "inverse" in v for v in check.violations)


def test_group_without_identity_fails():
    flip = sign_flip_group()
    only_flip = FiniteGroup((flip.elements[1],))
    assert not verify_group_axioms(only_flip).ok


def test_dihedral_contains_expected_elements():
    d4 = dihedral_group(4)
    assert d4.find(rotation2d(math.pi / 2.0)) is not None
    assert d4.find(reflection2d(math.pi / 4.0)) is not None
    assert d4.find(rotation2d(math.pi / 3.0)) is None


def test_cyclic_group_has_no_reflections():
    c4 = cyclic_group(4)
    assert all(np.linalg.det(t.matrix) > 0 for t in c4.elements)


def test_sign_flip_group_is_one_dimensional():
    z2 = sign_flip_group()
    assert z2.dim == 1
    assert verify_group_axioms(z2).ok


# ---------------------------------------------------------------------------
# configurations
# ---------------------------------------------------------------------------

def _square_config(edges=((0, 1), (1, 2), (2, 3), (0, 3))):
    pts = np.array([[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]])
    return PointConfig(pts, edges)


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        PointConfig(np.array([[0.0, 0.0], [0.0, 0.0]]))


def test_edges_are_normalized_and_deduplicated():
    c = PointConfig(np.array([[0.0, 0.0], [1.0, 0.0]]), ((1, 0), (0, 1)))
    assert c.edges == ((0, 1),)


def test_self_edge_rejected():
    with pytest.raises(ValueError):
        PointConfig(np.array([[0.0, 0.0], [1.0, 0.0]]), ((0, 0),))


def test_edge_index_out_of_range():
    with pytest.raises(ValueError):
        PointConfig(np.array([[0.0, 0.0], [1.0, 0.0]]), ((0, 2),))


def test_total_edge_length_of_unit_square():
    assert total_edge_length(_square_config()) == pytest.approx(4.0)


def test_config_equal_ignores_point_order():
    c = _square_config()
    perm = [2, 0, 3, 1]
    pts = np.asarray(c.points)[perm]
    remap = {old: new for new, old in enumerate(perm)}
    edges = tuple(tuple(sorted((remap[a], remap[b]))) for a, b in c.edges)
    assert config_equal(c, PointConfig(pts, edges))


def test_config_equal_sees_edge_differences():
    a = _square_config()
    b = _square_config(edges=((0, 1), (1, 2), (2, 3), (0, 2)))
    assert not config_equal(a, b)


def test_transform_config_keeps_edge_structure():
    c = _square_config()
    moved = transform_config(rotation2d(0.4), c)
    assert moved.edges == c.edges
    assert total_edge_length(moved) == pytest.approx(4.0, rel=1e-12)


# ---------------------------------------------------------------------------
# stabilizers and orbits
# ---------------------------------------------------------------------------

def test_square_is_invariant_under_full_dihedral_group():
    d4 = dihedral_group(4)
    stab = stabilizer(d4, _square_config())
    assert stab.order == 8


def test_stabilizer_of_axis_point():
    d4 = dihedral_group(4)
    c = PointConfig(np.array([[1.0, 0.0]]))
    stab = stabilizer(d4, c)
    assert stab.order == 2  # identity and the x-axis mirror


def test_orbit_stabilizer_product_is_group_order():
    d4 = dihedral_group(4)
    for point in ([0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.3, 0.7]):
        c = PointConfig(np.array([point]))
        n_orbit = len(orbit(d4, c))
        n_stab = stabilizer(d4, c).order
        assert n_orbit * n_stab == d4.order


def test_generic_point_has_full_orbit():
    d4 = dihedral_group(4)
    c = PointConfig(np.array([[0.3, 0.7]]))
    assert len(orbit(d4, c)) == 8


def test_is_invariant_dim_mismatch_raises():
    with pytest.raises(ValueError):
        is_invariant(identity_transform(3), _square_config())


# ---------------------------------------------------------------------------
# verdicts
# ---------------------------------------------------------------------------

def test_fully_symmetric_solution_set_is_unbroken():
    d4 = dihedral_group(4)
    verdict = classify_ssb(d4, [_square_config()])
    assert verdict.kind is SSBKind.UNBROKEN
    assert verdict.invariant_solution == 0


def test_mixed_solutions_are_general_breaking():
    d4 = dihedral_group(4)
    origin = PointConfig(np.array([[0.0, 0.0]]))
    off_axis = PointConfig(np.array([[0.3, 0.7]]))
    verdict = classify_ssb(d4, [off_axis, origin])
    assert verdict.kind is SSBKind.GENERAL
    assert verdict.invariant_solution == 1
    assert [w.order for w in verdict.witnesses] == [1, 8]


def test_no_invariant_solution_is_narrow_breaking():
    z2 = sign_flip_group()
    left = PointConfig(np.array([[-1.0]]))
    right = PointConfig(np.array([[1.0]]))
    verdict = classify_ssb(z2, [left, right])
    assert verdict.kind is SSBKind.NARROW
    assert verdict.invariant_solution is None


def test_classify_requires_solutions():
    with pytest.raises(ValueError):
        classify_ssb(dihedral_group(4), [])
