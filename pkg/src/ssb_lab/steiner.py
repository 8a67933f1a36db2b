"""Shortest connecting networks (Steiner minimal trees) for 3 or 4 terminals.

For a fixed tree topology the total edge length is a convex function of the
free junction coordinates, so every candidate topology is minimized
independently and the global optima are collected afterwards.  Candidates are
the full Steiner topologies (every junction of degree 3; for four terminals
these are the three ways of pairing the terminals) plus all spanning trees on
the terminals alone.  Junction coordinates are found by a damped fixed-point
iteration that generalizes Weiszfeld's geometric-median update: each junction
moves to the inverse-distance-weighted average of its neighbours.  When an
edge collapses, the junction is merged onto its neighbour and the degenerate
network re-optimized; that is how the square's X-shaped crossing (total
length sqrt 8) arises from the diagonal pairing, losing to the two optimal
networks of length 1 + sqrt 3 whose middle edge is vertical or horizontal.
A quarter turn (90 degrees) about the square's center exchanges those two.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass

import numpy as np

from .symmetry import FiniteGroup, PointConfig, config_equal, stabilizer

_ZERO_EDGE_TOL = 1e-14
_DEDUPE_MATCH_TOL = 1e-8


@dataclass(frozen=True)
class OptimizerSettings:
    max_iters: int = 20000
    move_tol: float = 1e-12
    merge_tol: float = 1e-9
    degeneracy_tol: float = 1e-9
    restarts: int = 16
    seed: int = 0
    damping: float = 1.0


DEFAULT_SETTINGS = OptimizerSettings()


# ---------------------------------------------------------------------------
# topologies
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SteinerTopology:
    """A tree on terminals 0..n_terminals-1 plus junction vertices above.

    Enumerated topologies are strict: every junction has degree exactly 3.
    Topologies produced by merge handling carry ``merged=True`` and may hold
    one degree-4 junction (two collapsed degree-3 junctions).
    """

    n_terminals: int
    n_steiner: int
    edges: tuple[tuple[int, int], ...]
    merged: bool = False

    def __post_init__(self) -> None:
        m, s = self.n_terminals, self.n_steiner
        if m < 2:
            raise ValueError(f"need at least 2 terminals, got {m}")
        if s < 0:
            raise ValueError(f"negative junction count {s}")
        n_vertices = m + s
        norm = []
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-edge at vertex {i}")
            if not (0 <= i < n_vertices and 0 <= j < n_vertices):
                raise ValueError(f"edge ({i}, {j}) out of range")
            norm.append((min(i, j), max(i, j)))
        norm_t = tuple(sorted(set(norm)))
        if len(norm_t) != len(norm):
            raise ValueError("duplicate edges")
        object.__setattr__(self, "edges", norm_t)
        if len(norm_t) != n_vertices - 1 or not self._connected(n_vertices):
            raise ValueError("edge set is not a spanning tree")
        deg = self.degrees()
        for v in range(m):
            if deg[v] < 1:
                raise ValueError(f"terminal {v} is isolated")
        allowed = {3, 4} if self.merged else {3}
        for v in range(m, n_vertices):
            if deg[v] not in allowed:
                raise ValueError(f"junction {v} has degree {deg[v]}, "
                                 f"allowed {sorted(allowed)}")

    def _connected(self, n_vertices: int) -> bool:
        parent = list(range(n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for i, j in self.edges:
            parent[find(i)] = find(j)
        return len({find(v) for v in range(n_vertices)}) == 1

    def degrees(self) -> list[int]:
        deg = [0] * (self.n_terminals + self.n_steiner)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def neighbours(self, v: int) -> list[int]:
        out = []
        for i, j in self.edges:
            if i == v:
                out.append(j)
            elif j == v:
                out.append(i)
        return sorted(out)


def _tree_from_pruefer(seq: tuple[int, ...], n: int) -> tuple[tuple[int, int], ...]:
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for v in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            heapq.heappush(leaves, v)
    u = heapq.heappop(leaves)
    w = heapq.heappop(leaves)
    edges.append((u, w))
    return tuple(sorted((min(i, j), max(i, j)) for i, j in edges))


def enumerate_topologies(n_terminals: int) -> list[SteinerTopology]:
    """Full Steiner topologies first, then every spanning tree on the
    terminals (3^1 = 3 of them for n=3, 4^2 = 16 for n=4, by Cayley)."""
    if n_terminals not in (3, 4):
        raise ValueError(f"supported terminal counts are 3 and 4, "
                         f"got {n_terminals}")
    topologies: list[SteinerTopology] = []
    if n_terminals == 3:
        topologies.append(SteinerTopology(3, 1, ((0, 3), (1, 3), (2, 3))))
    else:
        pairings = (((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2)))
        for (a1, a2), (b1, b2) in pairings:
            edges = ((a1, 4), (a2, 4), (b1, 5), (b2, 5), (4, 5))
            topologies.append(SteinerTopology(4, 2, edges))
    spanning = {_tree_from_pruefer(seq, n_terminals)
                for seq in np.ndindex(*([n_terminals] * (n_terminals - 2)))}
    for edges in sorted(spanning):
        topologies.append(SteinerTopology(n_terminals, 0, edges))
    return topologies


# ---------------------------------------------------------------------------
# embedded networks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SteinerNetwork:
    """A topology embedded in the plane with its measured total length."""

    terminals: np.ndarray
    steiner_points: np.ndarray
    topology: SteinerTopology
    total_length: float
    fermat_residual: float

    def __post_init__(self) -> None:
        term = np.array(self.terminals, dtype=float)
        stein = np.array(self.steiner_points, dtype=float).reshape(-1, 2)
        if term.shape != (self.topology.n_terminals, 2):
            raise ValueError(f"terminals shape {term.shape} does not match "
                             f"topology")
        if stein.shape[0] != self.topology.n_steiner:
            raise ValueError(f"{stein.shape[0]} junction coordinates for "
                             f"{self.topology.n_steiner} junctions")
        term.flags.writeable = False
        stein.flags.writeable = False
        object.__setattr__(self, "terminals", term)
        object.__setattr__(self, "steiner_points", stein)
        recomputed = sum(
            float(np.linalg.norm(self.points[i] - self.points[j]))
            for i, j in self.topology.edges)
        if abs(recomputed - self.total_length) > 1e-12 * max(1.0, recomputed):
            raise ValueError(f"stored length {self.total_length!r} does not "
                             f"match edges ({recomputed!r})")

    @property
    def points(self) -> np.ndarray:
        return np.vstack([self.terminals, self.steiner_points])

    def config(self) -> PointConfig:
        return PointConfig(self.points, self.topology.edges)

    def segments(self) -> list[tuple[float, float, float, float]]:
        pts = self.points
        return [(float(pts[i, 0]), float(pts[i, 1]),
                 float(pts[j, 0]), float(pts[j, 1]))
                for i, j in self.topology.edges]


class SteinerConvergenceError(RuntimeError):
    """Raised when the iteration stalls; carries the best iterate found."""

    def __init__(self, message: str, network: SteinerNetwork | None,
                 max_move: float) -> None:
        super().__init__(message)
        self.network = network
        self.max_move = max_move


@dataclass(frozen=True)
class FermatCheck:
    """120-degree condition report: applicable only at degree-3 junctions."""

    is_full: bool
    ok: bool
    max_residual: float


# ---------------------------------------------------------------------------
# optimization core (plain floats: the problems are tiny and the inner loop
# runs thousands of times)
# ---------------------------------------------------------------------------

def _positions(topology: SteinerTopology, terminals: list[tuple[float, float]],
               steiner: list[tuple[float, float]], v: int) -> tuple[float, float]:
    m = topology.n_terminals
    return terminals[v] if v < m else steiner[v - m]


def _total_length(topology: SteinerTopology,
                  terminals: list[tuple[float, float]],
                  steiner: list[tuple[float, float]]) -> float:
    total = 0.0
    for i, j in topology.edges:
        xi, yi = _positions(topology, terminals, steiner, i)
        xj, yj = _positions(topology, terminals, steiner, j)
        total += math.hypot(xi - xj, yi - yj)
    return total


def _contract(topology: SteinerTopology, steiner: list[tuple[float, float]],
              junction: int, onto: int) -> tuple[SteinerTopology,
                                                 list[tuple[float, float]]]:
    """Merge a junction vertex onto an adjacent vertex, reindexing."""
    m = topology.n_terminals

    def new_id(v: int) -> int:
        return v - 1 if v > junction else v

    edges = set()
    for i, j in topology.edges:
        i2 = onto if i == junction else i
        j2 = onto if j == junction else j
        if i2 == j2:
            continue
        edges.add((min(new_id(i2), new_id(j2)), max(new_id(i2), new_id(j2))))
    new_steiner = [p for k, p in enumerate(steiner) if k != junction - m]
    new_topology = SteinerTopology(m, topology.n_steiner - 1,
                                   tuple(sorted(edges)), merged=True)
    return new_topology, new_steiner


def _gradient_step(topology: SteinerTopology,
                   terminals: list[tuple[float, float]],
                   steiner: list[tuple[float, float]]) -> float:
    """One backtracking subgradient step on all junctions; returns movement."""
    m = topology.n_terminals
    grads = []
    for k, (x, y) in enumerate(steiner):
        gx = gy = 0.0
        for v in topology.neighbours(m + k):
            qx, qy = _positions(topology, terminals, steiner, v)
            d = math.hypot(x - qx, y - qy)
            if d > _ZERO_EDGE_TOL:
                gx += (x - qx) / d
                gy += (y - qy) / d
        grads.append((gx, gy))
    base = _total_length(topology, terminals, steiner)
    step = 0.1
    for _ in range(60):
        trial = [(x - step * gx, y - step * gy)
                 for (x, y), (gx, gy) in zip(steiner, grads)]
        if _total_length(topology, terminals, trial) < base:
            move = max(math.hypot(step * gx, step * gy) for gx, gy in grads)
            steiner[:] = trial
            return move
        step *= 0.5
    return 0.0


def _weiszfeld_sweep(topology: SteinerTopology,
                     terminals: list[tuple[float, float]],
                     steiner: list[tuple[float, float]],
                     adjacency: list[list[int]],
                     settings: OptimizerSettings
                     ) -> tuple[tuple[int, int] | None, float]:
    """One Gauss-Seidel sweep of Weiszfeld updates over all junctions.

    Returns (edge to merge, movement).  A merge is signalled as soon as a
    junction sits within ``merge_tol`` of one of its neighbours, before any
    inverse distance is formed.
    """
    m = topology.n_terminals
    max_move = 0.0
    for k, (x, y) in enumerate(steiner):
        wsum = wx = wy = 0.0
        for v in adjacency[k]:
            qx, qy = _positions(topology, terminals, steiner, v)
            d = math.hypot(x - qx, y - qy)
            if d < settings.merge_tol:
                return (m + k, v), max_move
            w = 1.0 / d
            wsum += w
            wx += w * qx
            wy += w * qy
        nx, ny = wx / wsum, wy / wsum
        if settings.damping != 1.0:
            nx = x + settings.damping * (nx - x)
            ny = y + settings.damping * (ny - y)
        move = math.hypot(nx - x, ny - y)
        if move > max_move:
            max_move = move
        steiner[k] = (nx, ny)
    return None, max_move


def _short_junction_edge(topology: SteinerTopology,
                         terminals: list[tuple[float, float]],
                         steiner: list[tuple[float, float]],
                         tol: float) -> tuple[int, int] | None:
    """An edge of length < tol with at least one junction endpoint,
    junction listed first; None if there is none."""
    m = topology.n_terminals
    for i, j in topology.edges:
        if i < m and j < m:
            continue
        xi, yi = _positions(topology, terminals, steiner, i)
        xj, yj = _positions(topology, terminals, steiner, j)
        if math.hypot(xi - xj, yi - yj) < tol:
            return (j, i) if j >= m else (i, j)
    return None


def _optimize_embedded(topology: SteinerTopology,
                       terminals: list[tuple[float, float]],
                       steiner: list[tuple[float, float]],
                       settings: OptimizerSettings
                       ) -> tuple[SteinerTopology, list[tuple[float, float]]]:
    """Damped fixed-point iteration with merge handling.

    The first half of the iteration budget runs Weiszfeld sweeps; if those
    have not converged, the second half falls back to backtracking
    subgradient descent.  Whenever an edge collapses below ``merge_tol`` the
    junction is contracted onto its neighbour and optimization continues on
    the merged topology.  Returns the final topology and junction positions;
    raises SteinerConvergenceError when the budget runs out.
    """
    m = topology.n_terminals
    adjacency = [topology.neighbours(m + k) for k in range(len(steiner))]
    iters_left = settings.max_iters
    fallback_after = settings.max_iters // 2
    last_move = math.inf
    while steiner and iters_left > 0:
        iters_left -= 1
        if iters_left > fallback_after:
            merge_edge, last_move = _weiszfeld_sweep(
                topology, terminals, steiner, adjacency, settings)
        else:
            last_move = _gradient_step(topology, terminals, steiner)
            merge_edge = _short_junction_edge(topology, terminals, steiner,
                                              settings.merge_tol)
        if merge_edge is not None:
            junction, onto = merge_edge
            if onto >= m and onto > junction:  # contract higher id onto lower
                junction, onto = onto, junction
            topology, steiner = _contract(topology, steiner, junction, onto)
            adjacency = [topology.neighbours(m + k)
                         for k in range(len(steiner))]
            continue
        if last_move < settings.move_tol:
            return topology, steiner
    if not steiner:
        return topology, steiner
    raise SteinerConvergenceError(
        f"no convergence after {settings.max_iters} iterations "
        f"(last movement {last_move:.3e})",
        _assemble(topology, terminals, steiner), last_move)


def _fermat_residual(topology: SteinerTopology,
                     terminals: list[tuple[float, float]],
                     steiner: list[tuple[float, float]]) -> float:
    m = topology.n_terminals
    deg = topology.degrees()
    worst = 0.0
    for k, (x, y) in enumerate(steiner):
        if deg[m + k] != 3:
            continue
        sx = sy = 0.0
        for v in topology.neighbours(m + k):
            qx, qy = _positions(topology, terminals, steiner, v)
            d = math.hypot(qx - x, qy - y)
            if d > _ZERO_EDGE_TOL:
                sx += (qx - x) / d
                sy += (qy - y) / d
        worst = max(worst, math.hypot(sx, sy))
    return worst


def _assemble(topology: SteinerTopology,
              terminals: list[tuple[float, float]],
              steiner: list[tuple[float, float]]) -> SteinerNetwork:
    return SteinerNetwork(
        terminals=np.array(terminals, dtype=float),
        steiner_points=np.array(steiner, dtype=float).reshape(-1, 2),
        topology=topology,
        total_length=_total_length(topology, terminals, steiner),
        fermat_residual=_fermat_residual(topology, terminals, steiner),
    )


def _initial_guesses(topology: SteinerTopology,
                     terminals: list[tuple[float, float]],
                     settings: OptimizerSettings,
                     rng: np.random.Generator) -> list[list[tuple[float, float]]]:
    m = topology.n_terminals
    xs = [p[0] for p in terminals]
    ys = [p[1] for p in terminals]
    lo = (min(xs), min(ys))
    hi = (max(xs), max(ys))
    # deterministic start: each junction at the centroid of its terminal
    # neighbours (its own best guess before the middle edge is accounted for)
    det = []
    for k in range(topology.n_steiner):
        nbr_terms = [v for v in topology.neighbours(m + k) if v < m]
        det.append((sum(terminals[v][0] for v in nbr_terms) / len(nbr_terms),
                    sum(terminals[v][1] for v in nbr_terms) / len(nbr_terms)))
    guesses = [det]
    for _ in range(settings.restarts):
        guesses.append([(float(rng.uniform(lo[0], hi[0])),
                         float(rng.uniform(lo[1], hi[1])))
                        for _ in range(topology.n_steiner)])
    return guesses


def optimize_topology(topology: SteinerTopology,
                      terminals: np.ndarray,
                      settings: OptimizerSettings = DEFAULT_SETTINGS,
                      rng: np.random.Generator | None = None) -> SteinerNetwork:
    """Minimize total length for one topology (convex: restarts agree)."""
    term_list = [(float(x), float(y)) for x, y in np.asarray(terminals,
                                                             dtype=float)]
    if topology.n_terminals != len(term_list):
        raise ValueError("terminal count does not match topology")
    if topology.n_steiner == 0:
        return _assemble(topology, term_list, [])
    if rng is None:
        rng = np.random.default_rng(settings.seed)
    best: SteinerNetwork | None = None
    for guess in _initial_guesses(topology, term_list, settings, rng):
        final_topo, final_steiner = _optimize_embedded(
            topology, term_list, list(guess), settings)
        net = _assemble(final_topo, term_list, final_steiner)
        if best is None or net.total_length < best.total_length:
            best = net
    assert best is not None
    return best


def optimize_all(terminals: np.ndarray,
                 settings: OptimizerSettings = DEFAULT_SETTINGS
                 ) -> list[SteinerNetwork]:
    """Optimize every candidate topology, in enumeration order."""
    term = np.asarray(terminals, dtype=float)
    if term.ndim != 2 or term.shape[1] != 2:
        raise ValueError(f"terminals must be (m, 2), got shape {term.shape}")
    PointConfig(term)  # rejects duplicate terminals
    nets = []
    for idx, topology in enumerate(enumerate_topologies(term.shape[0])):
        rng = np.random.default_rng([settings.seed, idx])
        nets.append(optimize_topology(topology, term, settings, rng))
    return nets


def select_minima(nets: list[SteinerNetwork],
                  degeneracy_tol: float = DEFAULT_SETTINGS.degeneracy_tol
                  ) -> list[SteinerNetwork]:
    """Keep the networks within ``degeneracy_tol`` of the shortest length,
    geometrically deduplicated, preserving input order."""
    if not nets:
        raise ValueError("no networks to select from")
    best = min(net.total_length for net in nets)
    winners: list[SteinerNetwork] = []
    for net in nets:
        if net.total_length > best + degeneracy_tol:
            continue
        cfg = net.config()
        if any(config_equal(cfg, w.config(), _DEDUPE_MATCH_TOL)
               for w in winners):
            continue
        winners.append(net)
    return winners


def solve_steiner(terminals: np.ndarray,
                  settings: OptimizerSettings = DEFAULT_SETTINGS
                  ) -> list[SteinerNetwork]:
    """All global minimizers (within ``degeneracy_tol`` of the best length),
    geometrically deduplicated, in topology enumeration order."""
    return select_minima(optimize_all(terminals, settings),
                         settings.degeneracy_tol)


# ---------------------------------------------------------------------------
# checks and symmetry hooks
# ---------------------------------------------------------------------------

def check_fermat_condition(net: SteinerNetwork,
                           tol: float = 1e-9) -> FermatCheck:
    """Verify the 120-degree condition at every degree-3 junction.

    Junctions of other degrees (merge products) make the network non-full;
    the condition is then not applicable to them.  A zero-length edge means
    merge handling was skipped and is rejected outright.
    """
    pts = net.points
    for i, j in net.topology.edges:
        if float(np.linalg.norm(pts[i] - pts[j])) < _ZERO_EDGE_TOL:
            raise ValueError(f"zero-length edge ({i}, {j}): merge unresolved")
    m = net.topology.n_terminals
    deg = net.topology.degrees()
    is_full = net.topology.n_steiner > 0 and all(
        deg[m + k] == 3 for k in range(net.topology.n_steiner))
    term_list = [tuple(p) for p in net.terminals]
    stein_list = [tuple(p) for p in net.steiner_points]
    residual = _fermat_residual(net.topology, term_list, stein_list)
    return FermatCheck(is_full=is_full, ok=residual <= tol,
                       max_residual=residual)


def residual_symmetry(net: SteinerNetwork, group: FiniteGroup,
                      tol: float = 1e-8) -> FiniteGroup:
    """Stabilizer of the embedded network (terminals + junctions + edges)."""
    return stabilizer(group, net.config(), tol)


def square_terminals(side: float = 1.0) -> np.ndarray:
    """Corners of a side-``side`` square centered at the origin, so the
    dihedral symmetry machinery (which acts about the origin) applies."""
    if side <= 0:
        raise ValueError(f"side must be positive, got {side}")
    h = side / 2.0
    return np.array([[-h, -h], [h, -h], [h, h], [-h, h]])


def triangle_terminals(side: float = 1.0) -> np.ndarray:
    """Equilateral triangle centered at the origin with a vertex on the
    positive x-axis (matching the reflection axes of dihedral_group(3))."""
    if side <= 0:
        raise ValueError(f"side must be positive, got {side}")
    r = side / math.sqrt(3.0)
    angles = [0.0, 2.0 * math.pi / 3.0, 4.0 * math.pi / 3.0]
    return np.array([[r * math.cos(a), r * math.sin(a)] for a in angles])
