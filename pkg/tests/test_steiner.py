"""Shortest-network optimization and its residual symmetry.

Frozen reference values, all with exact closed forms:
  square, side 1:   best length 1 + sqrt(3), junctions at distance
                    1/2 - 1/(2 sqrt(3)) from the center on a symmetry axis
  diagonal pairing: collapses to the center X, length sqrt(8)
  triangle, side 1: single junction at the centroid, length sqrt(3)
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from ssb_lab.steiner import (DEFAULT_SETTINGS, OptimizerSettings,
                             SteinerNetwork, SteinerTopology,
                             check_fermat_condition, enumerate_topologies,
                             optimize_all, optimize_topology,
                             residual_symmetry, select_minima, solve_steiner,
                             square_terminals, triangle_terminals)
from ssb_lab.symmetry import (PointConfig, classify_ssb, config_equal,
                              dihedral_group, rotation2d, transform_config,
                              SSBKind)

SQRT3 = math.sqrt(3.0)
Y0 = 0.5 - 1.0 / (2.0 * SQRT3)  # junction offset for the unit square


# ---------------------------------------------------------------------------
# topologies
# ---------------------------------------------------------------------------

def test_three_terminal_topologies():
    topos = enumerate_topologies(3)
    assert len(topos) == 4
    assert topos[0].n_steiner == 1  # the full topology comes first
    assert all(t.n_steiner == 0 for t in topos[1:])


def test_four_terminal_topologies():
    topos = enumerate_topologies(4)
    assert len(topos) == 19
    full = [t for t in topos if t.n_steiner == 2]
    spanning = [t for t in topos if t.n_steiner == 0]
    assert len(full) == 3
    assert len(spanning) == 16  # Cayley: 4^2 labeled trees


def test_unsupported_terminal_counts():
    with pytest.raises(ValueError):
        enumerate_topologies(5)
    with pytest.raises(ValueError):
        enumerate_topologies(2)


def test_topology_rejects_cycles():
    with pytest.raises(ValueError):
        SteinerTopology(3, 0, ((0, 1), (1, 2), (0, 2)))


def test_topology_rejects_disconnected_trees():
    with pytest.raises(ValueError):
        SteinerTopology(4, 0, ((0, 1), (2, 3)))


def test_topology_junction_degree_must_be_three():
    # star with a degree-4 junction: only valid once flagged as merged
    edges = ((0, 4), (1, 4), (2, 4), (3, 4))
    with pytest.raises(ValueError):
        SteinerTopology(4, 1, edges)
    merged = SteinerTopology(4, 1, edges, merged=True)
    assert merged.degrees()[4] == 4


def test_neighbours_are_sorted():
    t = SteinerTopology(3, 1, ((0, 3), (1, 3), (2, 3)))
    assert t.neighbours(3) == [0, 1, 2]


# ---------------------------------------------------------------------------
# square
# ---------------------------------------------------------------------------

@pytest.fixture(scope="module")
def square_solutions():
    return solve_steiner(square_terminals(1.0))


def test_square_has_two_shortest_networks(square_solutions):
    assert len(square_solutions) == 2


def test_square_length(square_solutions):
    for net in square_solutions:
        assert net.total_length == pytest.approx(1.0 + SQRT3, abs=1e-9)


def test_square_junction_positions(square_solutions):
    expected_sets = (
        {(0.0, Y0), (0.0, -Y0)},   # junctions on the y axis
        {(Y0, 0.0), (-Y0, 0.0)},   # junctions on the x axis
    )
    seen = set()
    for net in square_solutions:
        pts = np.asarray(net.steiner_points)
        for want in expected_sets:
            ok = all(min(math.hypot(p[0] - w[0], p[1] - w[1])
                         for w in want) < 1e-7 for p in pts)
            if ok:
                seen.add(tuple(sorted(want)))
    assert len(seen) == 2  # one solution per axis


def test_square_fermat_condition(square_solutions):
    for net in square_solutions:
        check = check_fermat_condition(net, tol=1e-9)
        assert check.is_full
        assert check.ok, check.max_residual


def test_square_solutions_are_quarter_turn_partners(square_solutions):
    a, b = square_solutions
    turned = transform_config(rotation2d(math.pi / 2.0), a.config())
    assert config_equal(turned, b.config(), tol=1e-8)


def test_square_residual_symmetry_order(square_solutions):
    d4 = dihedral_group(4)
    for net in square_solutions:
        stab = residual_symmetry(net, d4)
        assert stab.order == 4
        assert stab.find(rotation2d(math.pi)) is not None


def test_square_verdict_is_narrow(square_solutions):
    d4 = dihedral_group(4)
    verdict = classify_ssb(d4, [n.config() for n in square_solutions],
                           tol=1e-8)
    assert verdict.kind is SSBKind.NARROW


def test_diagonal_pairing_collapses_to_an_x(square_solutions):
    nets = optimize_all(square_terminals(1.0))
    crosses = [n for n in nets if n.topology.merged and n.topology.n_steiner == 1]
    assert len(crosses) == 1
    x_net = crosses[0]
    assert x_net.total_length == pytest.approx(math.sqrt(8.0), abs=1e-12)
    np.testing.assert_allclose(x_net.steiner_points, [[0.0, 0.0]], atol=1e-9)
    assert not check_fermat_condition(x_net).is_full
    # the X is a strict local optimum of its own topology, not global
    assert x_net.total_length > square_solutions[0].total_length + 0.09


def test_square_scales_linearly():
    nets = solve_steiner(square_terminals(2.5))
    assert nets[0].total_length == pytest.approx(2.5 * (1.0 + SQRT3),
                                                 abs=1e-8)


def test_more_restarts_do_not_find_anything_shorter():
    base = solve_steiner(square_terminals(1.0))
    more = solve_steiner(square_terminals(1.0),
                         OptimizerSettings(restarts=64, seed=5))
    assert more[0].total_length == pytest.approx(base[0].total_length,
                                                 abs=1e-9)


def test_rotated_square_keeps_the_length():
    rng = np.random.default_rng(3)
    base = solve_steiner(square_terminals(1.0))[0].total_length
    for theta in rng.uniform(0.0, 2.0 * math.pi, size=10):
        rot = rotation2d(float(theta))
        terminals = rot.apply(square_terminals(1.0))
        nets = solve_steiner(terminals)
        assert nets[0].total_length == pytest.approx(base, abs=1e-8)


# ---------------------------------------------------------------------------
# triangle and degenerate inputs
# ---------------------------------------------------------------------------

def test_equilateral_triangle_meets_at_the_centroid():
    nets = solve_steiner(triangle_terminals(1.0))
    assert len(nets) == 1
    net = nets[0]
    assert net.total_length == pytest.approx(SQRT3, abs=1e-9)
    np.testing.assert_allclose(net.steiner_points, [[0.0, 0.0]], atol=1e-8)
    assert check_fermat_condition(net).ok


def test_triangle_network_is_fully_symmetric():
    d3 = dihedral_group(3)
    nets = solve_steiner(triangle_terminals(1.0))
    verdict = classify_ssb(d3, [n.config() for n in nets], tol=1e-7)
    assert verdict.kind is SSBKind.UNBROKEN


def test_collinear_terminals_merge_onto_the_middle():
    terminals = np.array([[-1.0, 0.0], [0.0, 0.0], [1.0, 0.0]])
    nets = solve_steiner(terminals)
    assert len(nets) == 1
    assert nets[0].total_length == pytest.approx(2.0, abs=1e-9)
    assert nets[0].topology.n_steiner == 0 or nets[0].topology.merged


def test_duplicate_terminals_rejected():
    with pytest.raises(ValueError):
        optimize_all(np.array([[0.0, 0.0], [0.0, 0.0], [1.0, 0.0]]))


def test_terminal_shape_validated():
    with pytest.raises(ValueError):
        optimize_all(np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]))


def test_select_minima_requires_networks():
    with pytest.raises(ValueError):
        select_minima([])


# ---------------------------------------------------------------------------
# network objects
# ---------------------------------------------------------------------------

def test_network_length_is_validated():
    topo = SteinerTopology(3, 0, ((0, 1), (1, 2)))
    terminals = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0]])
    with pytest.raises(ValueError):
        SteinerNetwork(terminals=terminals,
                       steiner_points=np.zeros((0, 2)),
                       topology=topo, total_length=5.0,
                       fermat_residual=0.0)


def test_segments_match_edges(square_solutions):
    net = square_solutions[0]
    segs = net.segments()
    assert len(segs) == len(net.topology.edges)
    total = sum(math.hypot(x2 - x1, y2 - y1) for x1, y1, x2, y2 in segs)
    assert total == pytest.approx(net.total_length, rel=1e-12)


def test_fermat_check_rejects_zero_length_edges():
    topo = SteinerTopology(3, 1, ((0, 3), (1, 3), (2, 3)))
    terminals = np.array([[0.0, 0.0], [2.0, 0.0], [0.0, 2.0]])
    junction = np.array([[0.0, 0.0]])  # sits exactly on terminal 0
    net = SteinerNetwork(terminals=terminals, steiner_points=junction,
                         topology=topo, total_length=4.0,
                         fermat_residual=0.0)
    with pytest.raises(ValueError):
        check_fermat_condition(net)


def test_single_topology_optimization_is_deterministic():
    topo = enumerate_topologies(4)[0]
    terminals = square_terminals(1.0)
    rng_a = np.random.default_rng(42)
    rng_b = np.random.default_rng(42)
    net_a = optimize_topology(topo, terminals, DEFAULT_SETTINGS, rng_a)
    net_b = optimize_topology(topo, terminals, DEFAULT_SETTINGS, rng_b)
    assert net_a.total_length == net_b.total_length
    np.testing.assert_array_equal(net_a.steiner_points, net_b.steiner_points)
