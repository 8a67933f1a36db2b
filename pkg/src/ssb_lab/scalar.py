"""Polynomial problems with a sign-flip symmetry.

A real polynomial equation p(x) = 0 (or the minimization of p) whose
coefficients contain only even powers is symmetric under x -> -x.  Its
solution set may or may not retain that symmetry: x^2 - 1 = 0 has only the
asymmetric pair {-1, +1}, while x^4 - x^2 = 0 also has the symmetric root 0.
Filtering the quartic's critical points for stability (keeping minima only)
removes the symmetric candidate again.  This module finds roots and critical
points and hands the resulting solution sets to the symmetry classifier.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .symmetry import PointConfig, SSBVerdict, classify_ssb, sign_flip_group

DEFAULT_TOL = 1e-10
_SCAN_POINTS = 4001
_DEDUPE_TOL = 1e-4  # resolution limit; nearer candidates merge into one root
_CLASSIFY_TOL = 1e-9


@dataclass(frozen=True)
class Polynomial:
    """Real polynomial with coefficients in ascending order of power."""

    coefficients: tuple[float, ...]

    def __post_init__(self) -> None:
        coeffs = [float(c) for c in self.coefficients]
        while coeffs and coeffs[-1] == 0.0:
            coeffs.pop()
        if not coeffs:
            raise ValueError("the zero polynomial has no normalized form")
        object.__setattr__(self, "coefficients", tuple(coeffs))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __call__(self, x):
        """Horner evaluation; works on scalars and numpy arrays."""
        acc = np.zeros_like(np.asarray(x, dtype=float))
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc if acc.ndim else float(acc)

    def derivative(self) -> Polynomial:
        if self.degree == 0:
            raise ValueError("derivative of a constant is the zero polynomial")
        return Polynomial(tuple(i * c for i, c in
                                enumerate(self.coefficients) if i >= 1))

    def coefficient_scale(self) -> float:
        return max(abs(c) for c in self.coefficients)

    def cauchy_root_bound(self) -> float:
        """All real roots lie in [-R, R] with R = 1 + max|c_i| / |c_lead|."""
        lead = abs(self.coefficients[-1])
        rest = max((abs(c) for c in self.coefficients[:-1]), default=0.0)
        return 1.0 + rest / lead


@dataclass(frozen=True)
class PolyRoot:
    location: float
    multiplicity: int


class CriticalKind(Enum):
    MINIMUM = "min"
    MAXIMUM = "max"
    SADDLE = "saddle"


@dataclass(frozen=True)
class CriticalPoint:
    location: float
    kind: CriticalKind
    value: float


def _derivative_chain(p: Polynomial) -> list[Polynomial]:
    chain = [p]
    while chain[-1].degree >= 1:
        chain.append(chain[-1].derivative())
    return chain


def _multiplicity(chain: list[Polynomial], x: float, tol: float) -> int:
    """Number of leading derivatives vanishing at x (relative to each
    derivative's own coefficient scale), at least 1 for a root."""
    m = 0
    for q in chain:
        if abs(q(x)) <= tol * max(q.coefficient_scale(), 1.0):
            m += 1
        else:
            break
    return max(m, 1)


def _bisect(p: Polynomial, lo: float, hi: float) -> float:
    flo = p(lo)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if mid == lo or mid == hi:
            break
        fmid = p(mid)
        if fmid == 0.0:
            return mid
        if (flo < 0.0) == (fmid < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def _newton_polish(p: Polynomial, dp: Polynomial, x: float) -> float:
    best_x, best_val = x, abs(p(x))
    for _ in range(30):
        d = dp(x)
        if d == 0.0:
            break
        x = x - p(x) / d
        val = abs(p(x))
        if val < best_val:
            best_x, best_val = x, val
        if val == 0.0:
            break
    return best_x


def real_roots(p: Polynomial, bracket: tuple[float, float],
               tol: float = DEFAULT_TOL,
               scan_points: int = _SCAN_POINTS) -> list[PolyRoot]:
    """All real roots of p inside the bracket, sorted, with multiplicities.

    Sign changes on a fine scan are bisected and Newton-polished.  Roots of
    even multiplicity never change sign, so critical points of p (roots of p')
    where |p| falls below tol * coefficient scale are added as well.

    Near a multiple root the polynomial is flat and rounding noise limits
    how precisely any candidate can be located, so candidates closer than
    1e-4 are treated as one root (the one with the smallest residual wins).
    Genuinely distinct roots closer than that are reported merged.
    """
    lo, hi = float(bracket[0]), float(bracket[1])
    if not lo < hi:
        raise ValueError(f"empty bracket ({lo}, {hi})")
    if p.degree < 1:
        raise ValueError("constant polynomials have no roots to find")

    dp = p.derivative()
    scale = p.coefficient_scale()
    grid = np.linspace(lo, hi, scan_points)
    vals = p(grid)

    candidates: list[float] = []
    for i in range(scan_points - 1):
        a, b = float(vals[i]), float(vals[i + 1])
        if a == 0.0:
            candidates.append(float(grid[i]))
        elif (a < 0.0) != (b < 0.0):
            root = _bisect(p, float(grid[i]), float(grid[i + 1]))
            candidates.append(_newton_polish(p, dp, root))
    if float(vals[-1]) == 0.0:
        candidates.append(float(grid[-1]))

    # even-multiplicity roots hide at critical points
    if dp.degree >= 1:
        for cp in real_roots(dp, bracket, tol, scan_points):
            x = cp.location
            if abs(p(x)) <= tol * max(scale, 1.0):
                candidates.append(x)

    chain = _derivative_chain(p)
    roots: list[PolyRoot] = []
    cluster: list[float] = []

    def flush_cluster() -> None:
        if not cluster:
            return
        # rounding can zero p at near-root points too; the candidate where
        # the most derivatives vanish is the actual root, residual breaks ties
        best_mult, best = max(
            ((_multiplicity(chain, c, tol), c) for c in cluster),
            key=lambda mc: (mc[0], -abs(p(mc[1]))))
        if lo - _DEDUPE_TOL <= best <= hi + _DEDUPE_TOL:
            roots.append(PolyRoot(location=best, multiplicity=best_mult))

    for x in sorted(candidates):
        if cluster and x - cluster[-1] > _DEDUPE_TOL:
            flush_cluster()
            cluster = []
        cluster.append(x)
    flush_cluster()
    return roots


def critical_points(p: Polynomial, tol: float = DEFAULT_TOL) -> list[CriticalPoint]:
    """Stationary points of p, classified by the first non-vanishing
    derivative (sign of p'' when it is clearly nonzero)."""
    if p.degree < 2:
        raise ValueError("need degree >= 2 for meaningful critical points")
    dp = p.derivative()
    bound = dp.cauchy_root_bound() + 1.0
    chain = _derivative_chain(p)
    out: list[CriticalPoint] = []
    for root in real_roots(dp, (-bound, bound), tol):
        x = root.location
        kind: CriticalKind | None = None
        for m in range(2, len(chain)):
            q = chain[m]
            val = q(x)
            if abs(val) > tol * max(q.coefficient_scale(), 1.0):
                if m % 2 == 1:
                    kind = CriticalKind.SADDLE
                else:
                    kind = CriticalKind.MINIMUM if val > 0 else CriticalKind.MAXIMUM
                break
        if kind is None:
            # all higher derivatives vanish: p is locally constant (cannot
            # happen for degree >= 2 after normalization)
            kind = CriticalKind.SADDLE
        out.append(CriticalPoint(location=x, kind=kind, value=p(x)))
    return out


def stable_minima(p: Polynomial, tol: float = DEFAULT_TOL) -> list[float]:
    """Locations of the local minima of p (the dynamically stable vacua)."""
    return [cp.location for cp in critical_points(p, tol)
            if cp.kind is CriticalKind.MINIMUM]


# ---------------------------------------------------------------------------
# the bundled sign-flip problems
# ---------------------------------------------------------------------------

SQUARE_POLY = Polynomial((-1.0, 0.0, 1.0))              # x^2 - 1
DOUBLE_WELL = Polynomial((0.0, 0.0, -1.0, 0.0, 1.0))    # x^4 - x^2


class SignFlipProblem(Enum):
    """The bundled x -> -x symmetric problems.

    SQUARE_ROOTS     roots of x^2 - 1 = 0
    QUARTIC_ROOTS    roots of x^4 - x^2 = 0 (includes the symmetric root 0)
    QUARTIC_MINIMA   stable minima of x^4 - x^2 (the unstable symmetric
                     stationary point at 0 is filtered out)
    """

    SQUARE_ROOTS = "square_roots"
    QUARTIC_ROOTS = "quartic_roots"
    QUARTIC_MINIMA = "quartic_minima"


def _line_configs(xs: list[float]) -> list[PointConfig]:
    return [PointConfig(np.array([[x]])) for x in xs]


def z2_solutions(problem: SignFlipProblem,
                 tol: float = DEFAULT_TOL) -> list[float]:
    """The solution set of the given problem as plain real numbers."""
    if problem is SignFlipProblem.SQUARE_ROOTS:
        p, bound = SQUARE_POLY, SQUARE_POLY.cauchy_root_bound() + 1.0
        return [r.location for r in real_roots(p, (-bound, bound), tol)]
    if problem is SignFlipProblem.QUARTIC_ROOTS:
        p, bound = DOUBLE_WELL, DOUBLE_WELL.cauchy_root_bound() + 1.0
        return [r.location for r in real_roots(p, (-bound, bound), tol)]
    if problem is SignFlipProblem.QUARTIC_MINIMA:
        return stable_minima(DOUBLE_WELL, tol)
    raise ValueError(f"unknown problem {problem!r}")


def z2_verdict(problem: SignFlipProblem,
               tol: float = DEFAULT_TOL) -> SSBVerdict:
    """Classify the problem's solution set under the sign-flip group."""
    xs = z2_solutions(problem, tol)
    return classify_ssb(sign_flip_group(), _line_configs(xs),
                        tol=_CLASSIFY_TOL)
