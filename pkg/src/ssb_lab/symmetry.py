"""Finite symmetry groups of orthogonal matrices and what they do to solutions.

Group elements are explicit n x n orthogonal matrices acting linearly about
the origin.  Configurations meant to be analysed for symmetry should therefore
be positioned with their symmetry center at the origin (the square and
triangle helpers elsewhere in this package already are).  Equality of group
elements is max-norm matrix distance below a tolerance; invariance of a point
configuration is a greedy nearest-neighbour matching that is then verified to
be a bijection and, if edges are present, to permute the edge set.

The classification at the bottom turns a problem group and a list of solution
configurations into a verdict: unbroken symmetry (every solution keeps the
full group), general breaking (solutions lose symmetry but a fully symmetric
solution exists), or narrow breaking (no solution retains the full group).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum

import numpy as np

# Tolerances: orthogonality is validated tightly at construction time, while
# element identification and point matching run at a looser scale so that
# composed floating-point matrices still match their exact counterparts.
ORTHO_TOL = 1e-12
MATCH_TOL = 1e-10
_ASSOCIATIVITY_MAX_ORDER = 16


# ---------------------------------------------------------------------------
# transforms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class OrthoTransform:
    """An orthogonal matrix with an optional human-readable label."""

    matrix: np.ndarray
    label: str | None = None

    def __post_init__(self) -> None:
        m = np.array(self.matrix, dtype=float)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError(f"matrix must be square, got shape {m.shape}")
        n = m.shape[0]
        if n == 0:
            raise ValueError("matrix must be at least 1x1")
        defect = np.max(np.abs(m.T @ m - np.eye(n)))
        if defect > ORTHO_TOL:
            raise ValueError(f"matrix is not orthogonal (defect {defect:.3e})")
        det = float(np.linalg.det(m))
        if abs(abs(det) - 1.0) > ORTHO_TOL:
            raise ValueError(f"determinant must be +-1, got {det!r}")
        m.flags.writeable = False
        object.__setattr__(self, "matrix", m)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def apply(self, points: np.ndarray) -> np.ndarray:
        """Apply the transform to an (m, n) array of row points."""
        pts = np.asarray(points, dtype=float)
        return pts @ self.matrix.T

    def __repr__(self) -> str:  # labels keep group dumps readable
        name = self.label if self.label is not None else "?"
        return f"OrthoTransform({name}, dim={self.dim})"


def identity_transform(n_dim: int) -> OrthoTransform:
    return OrthoTransform(np.eye(n_dim), label="e")


def rotation2d(theta: float, label: str | None = None) -> OrthoTransform:
    """Counterclockwise rotation of the plane by ``theta`` radians."""
    c, s = np.cos(theta), np.sin(theta)
    return OrthoTransform(np.array([[c, -s], [s, c]]), label=label)


def reflection2d(axis_theta: float, label: str | None = None) -> OrthoTransform:
    """Reflection of the plane across the line at angle ``axis_theta``."""
    c, s = np.cos(2.0 * axis_theta), np.sin(2.0 * axis_theta)
    return OrthoTransform(np.array([[c, s], [s, -c]]), label=label)


def compose(a: OrthoTransform, b: OrthoTransform) -> OrthoTransform:
    """The transform 'apply b, then a' (matrix product a @ b)."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    label = None
    if a.label is not None and b.label is not None:
        label = f"{a.label}*{b.label}"
    return OrthoTransform(a.matrix @ b.matrix, label=label)


def same_transform(a: OrthoTransform, b: OrthoTransform,
                   tol: float = MATCH_TOL) -> bool:
    if a.dim != b.dim:
        return False
    return float(np.max(np.abs(a.matrix - b.matrix))) <= tol


# ---------------------------------------------------------------------------
# groups
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    """A finite set of orthogonal transforms, expected to form a group.

    Construction only normalizes the element tuple; whether the set actually
    satisfies the group axioms is checked separately by
    :func:`verify_group_axioms`, so that deliberately broken element sets can
    be built and diagnosed in tests.
    """

    elements: tuple[OrthoTransform, ...]

    def __post_init__(self) -> None:
        elems = tuple(self.elements)
        if not elems:
            raise ValueError("a group needs at least one element")
        dims = {t.dim for t in elems}
        if len(dims) != 1:
            raise ValueError(f"mixed element dimensions: {sorted(dims)}")
        object.__setattr__(self, "elements", elems)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def dim(self) -> int:
        return self.elements[0].dim

    def find(self, t: OrthoTransform, tol: float = MATCH_TOL) -> int | None:
        """Index of the element matching ``t`` within ``tol``, else None."""
        for i, e in enumerate(self.elements):
            if same_transform(e, t, tol):
                return i
        return None


@dataclass(frozen=True)
class GroupCheck:
    """Result of a group-axiom verification: overall flag plus violations."""

    ok: bool
    violations: tuple[str, ...]

    def __bool__(self) -> bool:
        return self.ok


def verify_group_axioms(g: FiniteGroup, tol: float = MATCH_TOL) -> GroupCheck:
    """Check identity, closure, inverses and (for small groups) associativity.

    Closure and inverse checks match products against the element list at
    max-norm tolerance ``tol``.  Associativity of matrix products holds up to
    rounding, so it is only re-checked exhaustively (all triples) for groups
    of order <= 16 where that is cheap.
    """
    violations: list[str] = []
    eye = identity_transform(g.dim)
    if g.find(eye, tol) is None:
        violations.append("identity: no element matches the identity matrix")

    mats = [t.matrix for t in g.elements]
    for i, j in itertools.product(range(g.order), repeat=2):
        prod = mats[i] @ mats[j]
        if not any(np.max(np.abs(prod - m)) <= tol for m in mats):
            violations.append(f"closure: product of elements {i} and {j} "
                              "is not in the group")

    for i, m in enumerate(mats):
        if not any(np.max(np.abs(m @ m2 - np.eye(g.dim))) <= tol for m2 in mats):
            violations.append(f"inverses: element {i} has no inverse "
                              "in the group")

    if g.order <= _ASSOCIATIVITY_MAX_ORDER:
        for a, b, c in itertools.product(mats, repeat=3):
            if np.max(np.abs((a @ b) @ c - a @ (b @ c))) > tol:
                violations.append("associativity: a triple product differs "
                                  "between bracketings")
                break

    return GroupCheck(ok=not violations, violations=tuple(violations))


def _checked(elements: list[OrthoTransform]) -> FiniteGroup:
    g = FiniteGroup(tuple(elements))
    check = verify_group_axioms(g)
    if not check.ok:  # constructors below always produce genuine groups
        raise RuntimeError(f"constructed element set fails group axioms: "
                           f"{check.violations}")
    return g


def dihedral_group(k: int) -> FiniteGroup:
    """Rotations by multiples of 2*pi/k plus k reflections (order 2k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    elements = []
    for j in range(k):
        deg = 360.0 * j / k
        elements.append(rotation2d(2.0 * np.pi * j / k, label=f"r{deg:g}"))
    for j in range(k):
        deg = 180.0 * j / k
        elements.append(reflection2d(np.pi * j / k, label=f"m{deg:g}"))
    return _checked(elements)


def cyclic_group(k: int) -> FiniteGroup:
    """Rotations by multiples of 2*pi/k (order k)."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    elements = [rotation2d(2.0 * np.pi * j / k, label=f"r{360.0 * j / k:g}")
                for j in range(k)]
    return _checked(elements)


def sign_flip_group() -> FiniteGroup:
    """The two-element group {+1, -1} acting on the real line."""
    return _checked([
        OrthoTransform(np.array([[1.0]]), label="e"),
        OrthoTransform(np.array([[-1.0]]), label="flip"),
    ])


# ---------------------------------------------------------------------------
# configurations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointConfig:
    """A finite set of labelled points, optionally wired by undirected edges.

    Edges are index pairs into ``points`` and are stored normalized (each pair
    sorted, the whole tuple sorted) so two configs with the same wiring compare
    deterministically.  An empty edge tuple means "no edge structure".
    """

    points: np.ndarray
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        pts = np.array(self.points, dtype=float)
        if pts.ndim != 2:
            raise ValueError(f"points must be an (m, n) array, got shape "
                             f"{pts.shape}")
        m = pts.shape[0]
        if m >= 2:
            # duplicate points make matching ill-defined
            diff = pts[:, None, :] - pts[None, :, :]
            dist = np.sqrt(np.sum(diff * diff, axis=-1))
            dist[np.diag_indices(m)] = np.inf
            if float(dist.min()) <= MATCH_TOL:
                raise ValueError("configuration contains duplicate points")
        norm_edges = []
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-edge at index {i}")
            if not (0 <= i < m and 0 <= j < m):
                raise ValueError(f"edge ({i}, {j}) out of range for {m} points")
            norm_edges.append((min(i, j), max(i, j)))
        pts.flags.writeable = False
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "edges", tuple(sorted(set(norm_edges))))

    @property
    def n_points(self) -> int:
        return self.points.shape[0]

    @property
    def dim(self) -> int:
        return self.points.shape[1]


def transform_config(t: OrthoTransform, c: PointConfig) -> PointConfig:
    if t.dim != c.dim:
        raise ValueError(f"dimension mismatch: transform is {t.dim}-d, "
                         f"config is {c.dim}-d")
    return PointConfig(t.apply(c.points), c.edges)


def total_edge_length(c: PointConfig) -> float:
    return float(sum(np.linalg.norm(c.points[i] - c.points[j])
                     for i, j in c.edges))


def _match_points(src: np.ndarray, dst: np.ndarray,
                  tol: float) -> np.ndarray | None:
    """Greedy nearest-neighbour map src[i] -> dst[perm[i]], verified bijective.

    Valid because configs forbid near-duplicate points, so within scope any
    matching below tol is unique.  Returns the permutation or None.
    """
    m = src.shape[0]
    if m == 0:
        return np.zeros(0, dtype=int)
    diff = src[:, None, :] - dst[None, :, :]
    dist = np.sqrt(np.sum(diff * diff, axis=-1))
    perm = np.argmin(dist, axis=1)
    if float(np.max(dist[np.arange(m), perm])) > tol:
        return None
    if len(set(perm.tolist())) != m:
        return None
    return perm


def config_equal(a: PointConfig, b: PointConfig, tol: float = MATCH_TOL) -> bool:
    """Same point set (within tol) and, under the matching, same edge set."""
    if a.n_points != b.n_points or a.dim != b.dim:
        return False
    perm = _match_points(a.points, b.points, tol)
    if perm is None:
        return False
    mapped = {(min(perm[i], perm[j]), max(perm[i], perm[j]))
              for i, j in a.edges}
    return mapped == set(b.edges)


def is_invariant(t: OrthoTransform, c: PointConfig,
                 tol: float = MATCH_TOL) -> bool:
    """Whether ``t`` maps the configuration onto itself.

    The transformed point set must match the original as a set, and the
    induced index permutation must map the edge set onto itself.  An empty
    configuration is invariant under everything.
    """
    if t.dim != c.dim:
        raise ValueError(f"dimension mismatch: transform is {t.dim}-d, "
                         f"config is {c.dim}-d")
    perm = _match_points(t.apply(c.points), c.points, tol)
    if perm is None:
        return False
    mapped = {(min(perm[i], perm[j]), max(perm[i], perm[j]))
              for i, j in c.edges}
    return mapped == set(c.edges)


def stabilizer(g: FiniteGroup, c: PointConfig,
               tol: float = MATCH_TOL) -> FiniteGroup:
    """The subgroup of elements leaving the configuration invariant."""
    kept = tuple(t for t in g.elements if is_invariant(t, c, tol))
    return FiniteGroup(kept)


def orbit(g: FiniteGroup, c: PointConfig,
          tol: float = MATCH_TOL) -> list[PointConfig]:
    """Deduplicated images of the configuration under every group element."""
    images: list[PointConfig] = []
    for t in g.elements:
        image = transform_config(t, c)
        if not any(config_equal(image, seen, tol) for seen in images):
            images.append(image)
    return images


# ---------------------------------------------------------------------------
# classification
# ---------------------------------------------------------------------------

class SSBKind(Enum):
    UNBROKEN = "Unbroken"
    GENERAL = "GeneralSSB"
    NARROW = "NarrowSSB"


@dataclass(frozen=True)
class SSBVerdict:
    """Outcome of comparing solution symmetries against the problem group.

    ``witnesses`` holds one stabilizer per solution, in input order.
    ``invariant_solution`` is the index of a fully symmetric solution when one
    exists (None for narrow breaking).
    """

    kind: SSBKind
    witnesses: tuple[FiniteGroup, ...]
    invariant_solution: int | None

    def __post_init__(self) -> None:
        object.__setattr__(self, "witnesses", tuple(self.witnesses))


def classify_ssb(problem_group: FiniteGroup,
                 solutions: list[PointConfig] | tuple[PointConfig, ...],
                 tol: float = MATCH_TOL) -> SSBVerdict:
    """Classify how much of the problem symmetry the solutions retain.

    Unbroken: every solution keeps the full group.  Narrow breaking: no
    solution does.  General breaking: mixed, and the index of the first fully
    symmetric solution is reported.
    """
    sols = list(solutions)
    if not sols:
        raise ValueError("need at least one solution to classify")
    stabs = tuple(stabilizer(problem_group, c, tol) for c in sols)
    full = [st.order == problem_group.order for st in stabs]
    if all(full):
        kind = SSBKind.UNBROKEN
    elif not any(full):
        kind = SSBKind.NARROW
    else:
        kind = SSBKind.GENERAL
    invariant = full.index(True) if any(full) else None
    return SSBVerdict(kind=kind, witnesses=stabs, invariant_solution=invariant)
