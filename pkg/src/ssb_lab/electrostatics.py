"""A point charge in n >= 2 spatial dimensions: potential, field, scaling.

With the charge at the origin, the radial field in n dimensions is
E(r) = q / (O_{n-1} r^{n-1}) where O_{n-1} = 2 pi^{n/2} / Gamma(n/2) is the
area of the unit (n-1)-sphere, and for n > 2 the potential is
Phi(r) = q / ((n-2) O_{n-1} r^{n-2}), which obeys the exact scaling identity
lambda^{n-2} Phi(lambda r) = Phi(r).

n = 2 is special: the potential is logarithmic and needs a reference radius
mu where it vanishes, Phi_mu(r) = -(q / 2 pi) log(r / mu).  Rescaling then no
longer maps the potential to itself; it shifts it by the constant
-(q / 2 pi) log lambda (equivalently, it moves the reference to mu / lambda).
The field magnitude q / (2 pi r) still scales like every other dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_AREA_TOL = 1e-13
_LAPLACIAN_MIN_R_OVER_H = 10.0
DEFAULT_QUAD_POINTS_2D = 1000
DEFAULT_QUAD_POINTS_3D = 64  # Gauss-Legendre nodes in cos(theta); phi gets 2x


# ---------------------------------------------------------------------------
# gamma via Lanczos (g = 7, 9 coefficients): one uniform code path accurate
# to ~1e-15 relative for real arguments >= 0.5, which covers every n/2 here
# ---------------------------------------------------------------------------

_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_half_line(x: float) -> float:
    """Gamma(x) for real x >= 0.5 by the Lanczos approximation."""
    if x < 0.5:
        raise ValueError(f"argument must be >= 0.5, got {x}")
    z = x - 1.0
    acc = _LANCZOS_COEFFS[0]
    for i, c in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * acc


def unit_sphere_area(n: int) -> float:
    """Area of the unit (n-1)-sphere in n dimensions: 2 pi^{n/2} / Gamma(n/2)."""
    if int(n) != n or n < 2:
        raise ValueError(f"dimension must be an integer >= 2, got {n}")
    n = int(n)
    return 2.0 * math.pi ** (n / 2.0) / gamma_half_line(n / 2.0)


# ---------------------------------------------------------------------------
# problem and solution types
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PointChargeProblem:
    """Charge q at the origin of n-dimensional space."""

    n: int
    q: float

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, "
                             f"got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "q", float(self.q))

    def solution(self, mu: float | None = None) -> PotentialSolution:
        return PotentialSolution(n=self.n, q=self.q, mu=mu)


@dataclass(frozen=True)
class PotentialSolution:
    """The radial potential of a point charge.

    ``mu`` is the reference radius of the logarithmic two-dimensional
    potential: required exactly when n = 2 (defaulting to 1.0 if omitted)
    and meaningless otherwise (rejected for n > 2).
    """

    n: int
    q: float
    mu: float | None = None

    def __post_init__(self) -> None:
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"dimension must be an integer >= 2, "
                             f"got {self.n}")
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "q", float(self.q))
        if self.n == 2:
            mu = 1.0 if self.mu is None else float(self.mu)
            if not mu > 0:
                raise ValueError(f"reference radius must be positive, "
                                 f"got {mu}")
            object.__setattr__(self, "mu", mu)
        elif self.mu is not None:
            raise ValueError("a reference radius only exists for n = 2")


@dataclass(frozen=True)
class ScalingTransform:
    """x -> lambda x with lambda > 0."""

    lam: float

    def __post_init__(self) -> None:
        if not self.lam > 0:
            raise ValueError(f"scale factor must be positive, got {self.lam}")
        object.__setattr__(self, "lam", float(self.lam))


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def potential(sol: PotentialSolution, r: float) -> float:
    """Phi(r); logarithmic for n = 2, power law for n > 2."""
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    if sol.n == 2:
        if sol.mu is None:  # unreachable through the constructor
            raise ValueError("n = 2 requires a reference radius mu")
        return -(sol.q / (2.0 * math.pi)) * math.log(r / sol.mu)
    area = unit_sphere_area(sol.n)
    return sol.q / ((sol.n - 2) * area * r ** (sol.n - 2))


def field_magnitude(sol: PotentialSolution, r: float) -> float:
    """Radial field q / (O_{n-1} r^{n-1}), one formula for every n >= 2.

    Signed like q: a negative charge points the field inward.
    """
    if not r > 0:
        raise ValueError(f"r must be positive, got {r}")
    return sol.q / (unit_sphere_area(sol.n) * r ** (sol.n - 1))


def field_vector(sol: PotentialSolution, x: np.ndarray) -> np.ndarray:
    """E(x) = q x / (O_{n-1} r^n), the radial field as a vector."""
    x = np.asarray(x, dtype=float)
    if x.shape != (sol.n,):
        raise ValueError(f"point must be an {sol.n}-vector, got {x.shape}")
    r = float(np.linalg.norm(x))
    if not r > 0:
        raise ValueError("the field is singular at the origin")
    return sol.q * x / (unit_sphere_area(sol.n) * r ** sol.n)


def apply_scaling(sol: PotentialSolution,
                  transform: ScalingTransform) -> tuple[PotentialSolution, float]:
    """The solution seen through x -> lambda x, plus the induced gauge shift.

    For n > 2 the potential maps exactly onto itself (shift 0).  For n = 2
    the reference radius moves to mu / lambda, which shifts the potential by
    the constant -(q / 2 pi) log lambda.
    """
    if sol.n > 2:
        return sol, 0.0
    lam = transform.lam
    shift = -(sol.q / (2.0 * math.pi)) * math.log(lam)
    return PotentialSolution(n=2, q=sol.q, mu=sol.mu / lam), shift


# ---------------------------------------------------------------------------
# numerical checks: Laplacian stencil and Gauss flux
# ---------------------------------------------------------------------------

def _potential_at(sol: PotentialSolution, x: np.ndarray) -> float:
    return potential(sol, float(np.linalg.norm(x)))


def laplacian_residual(sol: PotentialSolution, point: np.ndarray,
                       h: float) -> float:
    """(2n+1)-point central-difference Laplacian of Phi at an off-origin
    point, which converges to 0 at O(h^2) away from the charge."""
    x = np.asarray(point, dtype=float)
    if x.shape != (sol.n,):
        raise ValueError(f"point must be an {sol.n}-vector, got {x.shape}")
    if h <= 0:
        raise ValueError(f"step must be positive, got {h}")
    r = float(np.linalg.norm(x))
    if r <= _LAPLACIAN_MIN_R_OVER_H * h:
        raise ValueError(f"need r > {_LAPLACIAN_MIN_R_OVER_H} h to stay away "
                         f"from the singularity (r={r}, h={h})")
    center = _potential_at(sol, x)
    acc = 0.0
    for j in range(sol.n):
        step = np.zeros(sol.n)
        step[j] = h
        acc += (_potential_at(sol, x + step) - 2.0 * center
                + _potential_at(sol, x - step)) / (h * h)
    return acc


def flux_integral(sol: PotentialSolution, radius: float,
                  quad_points: int | None = None) -> float:
    """Numerical flux of E through the origin-centered sphere of ``radius``.

    n = 2 uses the trapezoid rule on the circle (spectrally accurate for the
    smooth periodic integrand); n = 3 uses Gauss-Legendre in cos(theta) times
    a uniform phi grid.  Either way the result equals the enclosed charge q.
    Other dimensions are not quadratured here; use the exact identity
    O_{n-1} r^{n-1} |E(r)| = q (enclosed_charge) instead.
    """
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    if sol.n == 2:
        m = DEFAULT_QUAD_POINTS_2D if quad_points is None else int(quad_points)
        if m < 4:
            raise ValueError(f"need at least 4 quadrature points, got {m}")
        theta = 2.0 * math.pi * np.arange(m) / m
        nodes = radius * np.stack([np.cos(theta), np.sin(theta)], axis=1)
        integrand = np.array([
            float(np.dot(field_vector(sol, p), p / radius)) for p in nodes])
        return float(np.sum(integrand) * (2.0 * math.pi * radius / m))
    if sol.n == 3:
        m = DEFAULT_QUAD_POINTS_3D if quad_points is None else int(quad_points)
        if m < 2:
            raise ValueError(f"need at least 2 quadrature points, got {m}")
        u, w = np.polynomial.legendre.leggauss(m)  # u = cos(theta)
        n_phi = 2 * m
        phi = 2.0 * math.pi * np.arange(n_phi) / n_phi
        total = 0.0
        for ui, wi in zip(u, w):
            s = math.sqrt(max(0.0, 1.0 - ui * ui))
            for ph in phi:
                p = radius * np.array([s * math.cos(ph), s * math.sin(ph), ui])
                total += float(np.dot(field_vector(sol, p), p / radius)) * wi
        return total * radius ** 2 * (2.0 * math.pi / n_phi)
    raise ValueError(
        f"no quadrature for n = {sol.n}; use enclosed_charge(), the exact "
        f"identity O_(n-1) r^(n-1) |E(r)| = q, instead")


def enclosed_charge(sol: PotentialSolution, radius: float) -> float:
    """O_{n-1} r^{n-1} E(r), the analytic flux identity for every n >= 2."""
    if not radius > 0:
        raise ValueError(f"radius must be positive, got {radius}")
    return (unit_sphere_area(sol.n) * radius ** (sol.n - 1)
            * field_magnitude(sol, radius))
