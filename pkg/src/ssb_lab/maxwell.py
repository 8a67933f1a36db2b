"""Vacuum electrodynamics packaged as one complex vector field F = E + iB.

In this form the vacuum equations read div F = 0 and dF/dt = -i curl F, and
multiplying a solution by any nonzero complex number z = a + ib gives another
solution (the real/imaginary parts mix as E' = aE - bB, B' = aB + bE).  The
zero field is the unique fixed point of that rescaling.

Everything lives on a periodic cube [0, 2pi)^3 sampled on N points per axis
and is discretized with collocated central differences, so every stencil is
exactly linear in the field values and residuals of an exact solution vanish
at second order in the spacing.  The bundled exact solution is a circularly
polarized plane wave: for a right-handed frame (e1, e2, k/|k|) the
polarization eps = (e1 + i e2)/sqrt 2 satisfies k x eps = -i |k| eps, which
is precisely the helicity needed for amp * eps * exp(i(k.x - |k|t)) to solve
dF/dt = -i curl F.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_TRANSVERSALITY_TOL = 1e-12
_MIN_GRID = 4
BOX_LENGTH = 2.0 * np.pi
DEFAULT_GRID = 32
DEFAULT_DT_RATIO = 0.1  # dt = ratio * h keeps time error subdominant


# ---------------------------------------------------------------------------
# data types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexFieldGrid:
    """A 3-component complex field on an N^3 periodic grid at one instant."""

    values: np.ndarray
    spacing: float
    time: float

    def __post_init__(self) -> None:
        v = np.array(self.values, dtype=complex)
        if v.ndim != 4 or v.shape[3] != 3:
            raise ValueError(f"values must be (N, N, N, 3), got {v.shape}")
        n = v.shape[0]
        if v.shape[0] != v.shape[1] or v.shape[1] != v.shape[2]:
            raise ValueError(f"grid must be cubic, got {v.shape[:3]}")
        if n < _MIN_GRID:
            raise ValueError(f"need at least {_MIN_GRID} points per axis, "
                             f"got {n}")
        if self.spacing <= 0:
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    @property
    def n_grid(self) -> int:
        return self.values.shape[0]


@dataclass(frozen=True)
class PlaneWaveSpec:
    """Wave vector, polarization and amplitude of a helicity eigenwave.

    The wave vector must have integer components (commensurate with the
    2pi-periodic box).  The polarization must be transverse and satisfy
    k x eps = -i |k| eps, the eigenvalue compatible with the evolution law
    for a wave with phase k.x - |k| t.
    """

    k: np.ndarray
    polarization: np.ndarray
    amplitude: complex = 1.0 + 0.0j

    def __post_init__(self) -> None:
        k = np.array(self.k, dtype=float)
        eps = np.array(self.polarization, dtype=complex)
        if k.shape != (3,) or eps.shape != (3,):
            raise ValueError("k and polarization must be 3-vectors")
        if np.max(np.abs(k - np.round(k))) > 0:
            raise ValueError(f"wave vector {k} is not commensurate with the "
                             f"periodic box (integer components required)")
        omega = float(np.linalg.norm(k))
        if omega == 0.0:
            raise ValueError("k = 0 is not a wave")
        if abs(np.vdot(k.astype(complex), eps)) > _TRANSVERSALITY_TOL:
            raise ValueError("polarization is not transverse to k")
        helicity_defect = np.max(np.abs(np.cross(k, eps) + 1j * omega * eps))
        if helicity_defect > _TRANSVERSALITY_TOL:
            raise ValueError(f"polarization is not the k x eps = -i|k| eps "
                             f"helicity eigenstate (defect {helicity_defect:.3e})")
        k.flags.writeable = False
        eps.flags.writeable = False
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "polarization", eps)
        object.__setattr__(self, "amplitude", complex(self.amplitude))

    @property
    def omega(self) -> float:
        return float(np.linalg.norm(self.k))


def make_helicity_wave(k, amplitude: complex = 1.0 + 0.0j) -> PlaneWaveSpec:
    """Construct the circularly polarized plane wave for wave vector ``k``.

    Builds a right-handed orthonormal frame (e1, e2, k/|k|) and returns the
    polarization (e1 + i e2)/sqrt 2.
    """
    k = np.asarray(k, dtype=float)
    if k.shape != (3,):
        raise ValueError("k must be a 3-vector")
    if np.max(np.abs(k - np.round(k))) > 0:
        raise ValueError(f"wave vector {k} is not commensurate with the "
                         f"periodic box (integer components required)")
    if not np.any(k):
        raise ValueError("k = 0 is not a wave")
    khat = k / np.linalg.norm(k)
    # start from the axis least aligned with k for a stable frame
    axis = np.zeros(3)
    axis[int(np.argmin(np.abs(khat)))] = 1.0
    e1 = axis - np.dot(axis, khat) * khat
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(khat, e1)
    eps = (e1 + 1j * e2) / np.sqrt(2.0)
    return PlaneWaveSpec(k=k, polarization=eps, amplitude=amplitude)


def sample_plane_wave(spec: PlaneWaveSpec, n_grid: int = DEFAULT_GRID,
                      time: float = 0.0) -> ComplexFieldGrid:
    """Evaluate amp * eps * exp(i(k.x - |k| t)) on the periodic grid."""
    h = BOX_LENGTH / n_grid
    coords = h * np.arange(n_grid)
    x, y, z = np.meshgrid(coords, coords, coords, indexing="ij", sparse=True)
    phase = (spec.k[0] * x + spec.k[1] * y + spec.k[2] * z
             - spec.omega * time)
    wave = spec.amplitude * np.exp(1j * phase)
    values = wave[..., None] * spec.polarization[None, None, None, :]
    return ComplexFieldGrid(values=values, spacing=h, time=time)


def wave_snapshots(spec: PlaneWaveSpec, n_grid: int = DEFAULT_GRID,
                   time: float = 0.0,
                   dt_ratio: float = DEFAULT_DT_RATIO
                   ) -> tuple[ComplexFieldGrid, ComplexFieldGrid,
                              ComplexFieldGrid, float]:
    """Three consecutive snapshots (t, t+dt, t-dt) plus dt, with dt tied to
    the spacing so the time error stays subdominant to the space error."""
    dt = dt_ratio * BOX_LENGTH / n_grid
    f_t = sample_plane_wave(spec, n_grid, time)
    f_plus = sample_plane_wave(spec, n_grid, time + dt)
    f_minus = sample_plane_wave(spec, n_grid, time - dt)
    return f_t, f_plus, f_minus, dt


# ---------------------------------------------------------------------------
# stencils
# ---------------------------------------------------------------------------

def _ddx(values: np.ndarray, axis: int, h: float) -> np.ndarray:
    return (np.roll(values, -1, axis=axis) - np.roll(values, 1, axis=axis)) / (2.0 * h)


def discrete_div(f: ComplexFieldGrid) -> np.ndarray:
    """Central-difference divergence, an (N, N, N) complex field."""
    v, h = f.values, f.spacing
    return (_ddx(v[..., 0], 0, h) + _ddx(v[..., 1], 1, h)
            + _ddx(v[..., 2], 2, h))


def discrete_curl(f: ComplexFieldGrid) -> np.ndarray:
    """Central-difference curl, an (N, N, N, 3) complex field."""
    v, h = f.values, f.spacing
    out = np.empty_like(v)
    out[..., 0] = _ddx(v[..., 2], 1, h) - _ddx(v[..., 1], 2, h)
    out[..., 1] = _ddx(v[..., 0], 2, h) - _ddx(v[..., 2], 0, h)
    out[..., 2] = _ddx(v[..., 1], 0, h) - _ddx(v[..., 0], 1, h)
    return out


def maxwell_residual(f_t: ComplexFieldGrid, f_plus: ComplexFieldGrid,
                     f_minus: ComplexFieldGrid,
                     dt: float) -> tuple[float, float]:
    """(divergence norm, evolution norm) of the discretized vacuum equations.

    The divergence norm is max |div F| over the grid; the evolution norm is
    max over the grid of the vector magnitude of
    (F(t+dt) - F(t-dt)) / (2 dt) + i curl F(t), which vanishes for an exact
    solution up to O(h^2) + O(dt^2).
    """
    if dt <= 0:
        raise ValueError(f"dt must be positive, got {dt}")
    for other in (f_plus, f_minus):
        if other.values.shape != f_t.values.shape:
            raise ValueError("snapshot grids differ in shape")
        if other.spacing != f_t.spacing:
            raise ValueError("snapshot grids differ in spacing")
    div_norm = float(np.max(np.abs(discrete_div(f_t))))
    evolution = ((f_plus.values - f_minus.values) / (2.0 * dt)
                 + 1j * discrete_curl(f_t))
    evolution_norm = float(np.max(np.sqrt(
        np.sum(np.abs(evolution) ** 2, axis=-1))))
    return div_norm, evolution_norm


# ---------------------------------------------------------------------------
# the scaling symmetry
# ---------------------------------------------------------------------------

def scale_field(f: ComplexFieldGrid, z: complex) -> ComplexFieldGrid:
    """Multiply the field by a nonzero complex number.

    z = i swaps the roles of the real and imaginary parts up to sign,
    (E, B) -> (-B, E); a general z = a + ib mixes them linearly.  z = 0 is
    rejected because it is not a symmetry (it forgets the solution).
    """
    z = complex(z)
    if z == 0:
        raise ValueError("z = 0 does not act on solutions invertibly")
    return ComplexFieldGrid(values=z * f.values, spacing=f.spacing,
                            time=f.time)


def electric_magnetic(f: ComplexFieldGrid) -> tuple[np.ndarray, np.ndarray]:
    """The physical pair (E, B) = (Re F, Im F)."""
    return np.real(f.values), np.imag(f.values)


def zero_field(n_grid: int = DEFAULT_GRID, time: float = 0.0) -> ComplexFieldGrid:
    h = BOX_LENGTH / n_grid
    return ComplexFieldGrid(values=np.zeros((n_grid, n_grid, n_grid, 3),
                                            dtype=complex),
                            spacing=h, time=time)


def convergence_study(k, n_grids: list[int] | tuple[int, ...],
                      dt_ratio: float = DEFAULT_DT_RATIO
                      ) -> list[tuple[int, float, float, float]]:
    """Residual norms of the helicity wave over a list of grid sizes.

    Returns rows (n_grid, spacing, div_norm, evolution_norm); under grid
    doubling both norms should fall by a factor of about 4.
    """
    spec = make_helicity_wave(k)
    rows = []
    for n in n_grids:
        f_t, f_plus, f_minus, dt = wave_snapshots(spec, n)
        div_norm, evo_norm = maxwell_residual(f_t, f_plus, f_minus, dt)
        rows.append((int(n), BOX_LENGTH / n, div_norm, evo_norm))
    return rows
