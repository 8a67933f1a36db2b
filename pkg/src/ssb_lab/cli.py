"""Command line entry point: run the laboratory's demonstrations end to end.

Subcommands
-----------
steiner    shortest networks on a square (or on terminals from a JSON file)
scalar     sign-flip polynomial problems: roots, minima, breaking verdicts
ode        translation action on the exponential solution family
maxwell    plane-wave residuals, O(h^2) convergence, complex rescaling
potential  point charge in n dimensions: scaling, gauge shift, flux, stencil
classify   symmetry-breaking verdicts for the bundled example problems
all        every subcommand in sequence, one combined manifest

Each run writes ``manifest_<subcommand>.json`` plus a deterministic set of
plot-data files into the output directory (``--out``, else the SSB_LAB_OUT
environment variable, else ./ssb_lab_out).  Settings resolve in the order
command line flags > --config JSON file > built-in defaults.  The process
exits 0 if every check passed, 1 if any failed (the manifest is still
written), and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from datetime import datetime, timezone
from typing import Any

import numpy as np

from . import __version__
from . import electrostatics as es
from . import maxwell as mx
from . import ode
from . import scalar as sc
from . import steiner as st
from . import symmetry as sym
from .report import (RunManifest, make_check, manifest_json, write_csv,
                     write_segments, write_text_atomic)

DEFAULT_OUT = "ssb_lab_out"
ENV_OUT = "SSB_LAB_OUT"

DEFAULTS: dict[str, dict[str, Any]] = {
    "steiner": {"side": 1.0, "terminals": None, "seed": 0, "restarts": 16},
    "scalar": {},
    "ode": {"trials": 1000, "seed": 0},
    "maxwell": {"grid": 32, "k": [1, 2, 2]},
    "potential": {"n": 3, "q": 1.0, "mu": 1.0, "lam": 2.0},
    "classify": {"seed": 0, "restarts": 16},
}

SUBCOMMANDS = ("steiner", "scalar", "ode", "maxwell", "potential",
               "classify", "all")


# ---------------------------------------------------------------------------
# runners: each returns (checks, artifact file names) and writes plot data
# ---------------------------------------------------------------------------

def _emit(out_dir: str, name: str, writer, *args) -> str:
    writer(os.path.join(out_dir, name), *args)
    return name


def _run_steiner(cfg: dict[str, Any], out_dir: str) -> tuple[list, list[str]]:
    settings = st.OptimizerSettings(seed=int(cfg["seed"]),
                                    restarts=int(cfg["restarts"]))
    custom = cfg.get("terminals") is not None
    if custom:
        terminals = np.asarray(cfg["terminals"], dtype=float)
    else:
        terminals = st.square_terminals(float(cfg["side"]))
    nets = st.optimize_all(terminals, settings)
    winners = st.select_minima(nets, settings.degeneracy_tol)
    best = min(net.total_length for net in nets)

    checks = []
    artifacts = []
    for i, net in enumerate(winners, start=1):
        artifacts.append(_emit(out_dir, f"steiner_solution_{i}.seg",
                               write_segments, net.segments()))
    fermat_ok = all(st.check_fermat_condition(w, tol=1e-9).ok
                    for w in winners)
    checks.append(make_check("steiner.fermat_condition",
                             "steiner.junction_angles",
                             fermat_ok, True))

    if custom:
        checks.append(make_check("steiner.solution_count_positive",
                                 "steiner.minimizers",
                                 len(winners) >= 1, True))
        return checks, artifacts

    side = float(cfg["side"])
    checks.append(make_check("steiner.solution_count", "steiner.minimizers",
                             len(winners), 2))
    checks.append(make_check("steiner.best_length", "steiner.square.length",
                             best, side * (1.0 + math.sqrt(3.0)), 1e-9))
    cross = [net for net in nets
             if net.topology.merged and net.topology.n_steiner == 1]
    if cross:
        artifacts.append(_emit(out_dir, "steiner_guess_x.seg",
                               write_segments, cross[0].segments()))
        checks.append(make_check("steiner.x_guess_length",
                                 "steiner.square.diagonal_cross",
                                 cross[0].total_length,
                                 side * math.sqrt(8.0), 1e-12))
    else:
        checks.append(make_check("steiner.x_guess_found",
                                 "steiner.square.diagonal_cross",
                                 False, True))
    d4 = sym.dihedral_group(4)
    orders = sorted(st.residual_symmetry(w, d4).order for w in winners)
    checks.append(make_check("steiner.stabilizer_orders",
                             "steiner.square.residual_symmetry",
                             orders, [4, 4]))
    if len(winners) == 2:
        quarter = sym.rotation2d(math.pi / 2.0, label="r90")
        mapped = sym.transform_config(quarter, winners[0].config())
        swapped = sym.config_equal(mapped, winners[1].config(), tol=1e-8)
        checks.append(make_check("steiner.quarter_turn_swaps_solutions",
                                 "steiner.square.rotation_between_optima",
                                 swapped, True))
    return checks, artifacts


def _run_scalar(cfg: dict[str, Any], out_dir: str) -> tuple[list, list[str]]:
    inv_sqrt2 = 1.0 / math.sqrt(2.0)
    checks = []

    xs = sc.z2_solutions(sc.SignFlipProblem.SQUARE_ROOTS)
    err = max(abs(a - b) for a, b in zip(sorted(xs), (-1.0, 1.0)))
    checks.append(make_check("scalar.square_roots", "scalar.square.roots",
                             err if len(xs) == 2 else math.inf, 0.0, 1e-10))

    bound = sc.DOUBLE_WELL.cauchy_root_bound() + 1.0
    roots = sc.real_roots(sc.DOUBLE_WELL, (-bound, bound))
    locs = [r.location for r in roots]
    err = max(abs(a - b) for a, b in zip(locs, (-1.0, 0.0, 1.0)))
    checks.append(make_check("scalar.quartic_roots", "scalar.quartic.roots",
                             err if len(locs) == 3 else math.inf, 0.0, 1e-10))
    mult = [r.multiplicity for r in roots]
    checks.append(make_check("scalar.quartic_root_multiplicity",
                             "scalar.quartic.double_root", mult, [1, 2, 1]))

    minima = sc.stable_minima(sc.DOUBLE_WELL)
    err = max(abs(a - b) for a, b in zip(sorted(minima),
                                         (-inv_sqrt2, inv_sqrt2)))
    checks.append(make_check("scalar.quartic_minima", "scalar.quartic.minima",
                             err if len(minima) == 2 else math.inf,
                             0.0, 1e-10))
    values = [cp.value for cp in sc.critical_points(sc.DOUBLE_WELL)
              if cp.kind is sc.CriticalKind.MINIMUM]
    err = max(abs(v + 0.25) for v in values) if values else math.inf
    checks.append(make_check("scalar.quartic_minimum_value",
                             "scalar.quartic.well_depth", err, 0.0, 1e-12))

    for problem, expected in (
            (sc.SignFlipProblem.SQUARE_ROOTS, sym.SSBKind.NARROW),
            (sc.SignFlipProblem.QUARTIC_ROOTS, sym.SSBKind.GENERAL),
            (sc.SignFlipProblem.QUARTIC_MINIMA, sym.SSBKind.NARROW)):
        verdict = sc.z2_verdict(problem)
        checks.append(make_check(f"scalar.verdict.{problem.value}",
                                 f"scalar.{problem.value}.verdict",
                                 verdict.kind.value, expected.value))
        if problem is sc.SignFlipProblem.QUARTIC_ROOTS:
            xs = sc.z2_solutions(problem)
            idx = verdict.invariant_solution
            witness = xs[idx] if idx is not None else math.inf
            checks.append(make_check("scalar.symmetric_witness",
                                     "scalar.quartic.invariant_root",
                                     witness, 0.0, 1e-9))

    grid = np.linspace(-1.5, 1.5, 301)
    rows = [(float(x), float(sc.DOUBLE_WELL(x)), float(sc.SQUARE_POLY(x)))
            for x in grid]
    artifacts = [_emit(out_dir, "polynomial_samples.csv", write_csv,
                       ["x", "double_well", "square_poly"], rows)]
    return checks, artifacts


def _run_ode(cfg: dict[str, Any], out_dir: str) -> tuple[list, list[str]]:
    rng = np.random.default_rng(int(cfg["seed"]))
    trials = int(cfg["trials"])
    worst = 0.0
    for _ in range(trials):
        c, a, b = rng.uniform(-5.0, 5.0, size=3)
        two_step = ode.translate_solution(ode.translate_solution(c, a), b)
        one_step = ode.translate_solution(c, a + b)
        scale = max(abs(one_step), 1e-300)
        worst = max(worst, abs(two_step - one_step) / scale)
    checks = [make_check("ode.composition_law", "ode.translation_group",
                         worst, 0.0, 1e-12)]

    checks.append(make_check("ode.doubling_shift", "ode.log2_translation",
                             ode.translate_solution(1.0, math.log(2.0)),
                             2.0, 1e-12))

    fixed = []
    for c in np.linspace(-5.0, 5.0, 41):
        c = float(c)
        if all(abs(ode.translate_solution(c, a) - c) <= 1e-14
               for a in (1.0, -1.0, 0.1, -0.1)):
            fixed.append(c)
    checks.append(make_check("ode.unique_fixed_point", "ode.vacuum",
                             fixed, [0.0]))
    checks.append(make_check("ode.vacuum_flag", "ode.vacuum",
                             ode.is_vacuum(0.0) and not ode.is_vacuum(0.5),
                             True))

    xs = np.linspace(-2.0, 2.0, 81)
    rows = [(float(x), float(-math.exp(x)), 0.0, float(math.exp(x)))
            for x in xs]
    artifacts = [_emit(out_dir, "ode_family.csv", write_csv,
                       ["x", "c_minus_1", "c_0", "c_1"], rows)]
    return checks, artifacts


def _run_maxwell(cfg: dict[str, Any], out_dir: str) -> tuple[list, list[str]]:
    n_grid = int(cfg["grid"])
    k = [int(v) for v in cfg["k"]]
    ns = sorted({max(4, n_grid // 4), max(4, n_grid // 2), n_grid})
    rows = mx.convergence_study(k, ns)

    checks = []
    div_ratio = rows[-2][2] / rows[-1][2]
    evo_ratio = rows[-2][3] / rows[-1][3]
    checks.append(make_check("maxwell.divergence_convergence",
                             "maxwell.second_order", div_ratio, 4.0, 0.6))
    checks.append(make_check("maxwell.evolution_convergence",
                             "maxwell.second_order", evo_ratio, 4.0, 0.6))
    monotone = all(rows[i][2] > rows[i + 1][2] and rows[i][3] > rows[i + 1][3]
                   for i in range(len(rows) - 1))
    checks.append(make_check("maxwell.residuals_decrease",
                             "maxwell.refinement", monotone, True))

    spec = mx.make_helicity_wave(k)
    f_t, f_plus, f_minus, dt = mx.wave_snapshots(spec, n_grid)
    base = mx.maxwell_residual(f_t, f_plus, f_minus, dt)
    worst = 0.0
    for z in (1j, 2.0 - 3.0j):
        scaled = mx.maxwell_residual(mx.scale_field(f_t, z),
                                     mx.scale_field(f_plus, z),
                                     mx.scale_field(f_minus, z), dt)
        for b, s in zip(base, scaled):
            worst = max(worst, abs(s - abs(z) * b) / (abs(z) * b))
    checks.append(make_check("maxwell.rescaling_linearity",
                             "maxwell.complex_symmetry", worst, 0.0, 1e-12))

    zero = mx.zero_field(max(4, n_grid // 4))
    vacuum = mx.maxwell_residual(zero, zero, zero, dt)
    checks.append(make_check("maxwell.vacuum_residual", "maxwell.vacuum",
                             max(vacuum), 0.0, 0.0))

    table = [(n, float(h), float(d), float(e)) for n, h, d, e in rows]
    artifacts = [_emit(out_dir, "maxwell_convergence.csv", write_csv,
                       ["n_grid", "h", "div_norm", "evolution_norm"], table)]
    return checks, artifacts


def _run_potential(cfg: dict[str, Any], out_dir: str) -> tuple[list, list[str]]:
    n = int(cfg["n"])
    q = float(cfg["q"])
    mu = float(cfg["mu"])
    lam = float(cfg["lam"])
    checks = []

    four_pi = 4.0 * math.pi
    two_pi_sq = 2.0 * math.pi ** 2
    checks.append(make_check("potential.sphere_area_3d", "geometry.O2",
                             es.unit_sphere_area(3), four_pi,
                             1e-13 * four_pi))
    checks.append(make_check("potential.sphere_area_4d", "geometry.O3",
                             es.unit_sphere_area(4), two_pi_sq,
                             1e-13 * two_pi_sq))

    worst = 0.0
    for nn in (3, 4, 5, 6):
        sol = es.PotentialSolution(n=nn, q=q)
        for lam_ in (0.5, 2.0, 10.0):
            for r in (0.1, 1.0, 7.0):
                lhs = lam_ ** (nn - 2) * es.potential(sol, lam_ * r)
                rhs = es.potential(sol, r)
                worst = max(worst, abs(lhs - rhs) / abs(rhs))
    checks.append(make_check("potential.scaling_identity",
                             "potential.power_law_scaling", worst, 0.0, 1e-12))

    sol2 = es.PotentialSolution(n=2, q=q, mu=mu)
    worst = 0.0
    for lam_ in (0.5, 2.0, math.e, 10.0):
        expected_shift = -(q / (2.0 * math.pi)) * math.log(lam_)
        for r in (0.3, 1.0, 4.7):
            shift = es.potential(sol2, lam_ * r) - es.potential(sol2, r)
            worst = max(worst, abs(shift - expected_shift))
    checks.append(make_check("potential.log_anomaly",
                             "potential.2d_gauge_shift", worst, 0.0, 1e-13))

    scaled_sol, gauge_shift = es.apply_scaling(sol2, es.ScalingTransform(lam))
    measured_shift = es.potential(sol2, lam * 1.3) - es.potential(sol2, 1.3)
    checks.append(make_check("potential.gauge_shift",
                             "potential.2d_reference_rescale",
                             measured_shift, gauge_shift, 1e-13))
    checks.append(make_check("potential.reference_moves",
                             "potential.2d_reference_rescale",
                             scaled_sol.mu, mu / lam, 1e-13 * mu / lam))

    worst = 0.0
    for nn in (2, 3, 4, 6):
        sol = es.PotentialSolution(n=nn, q=q)
        for r in (0.5, 1.0, 3.0):
            lhs = es.field_magnitude(sol, lam * r)
            rhs = lam ** (-(nn - 1)) * es.field_magnitude(sol, r)
            worst = max(worst, abs(lhs - rhs) / abs(rhs))
    checks.append(make_check("potential.field_scaling",
                             "potential.field_power_law", worst, 0.0, 1e-13))

    worst2 = worst3 = 0.0
    for qq in (1.0, 3.0, -2.0):
        for r in (0.5, 1.0, 5.0):
            flux2 = es.flux_integral(es.PotentialSolution(n=2, q=qq), r)
            flux3 = es.flux_integral(es.PotentialSolution(n=3, q=qq), r)
            worst2 = max(worst2, abs(flux2 - qq))
            worst3 = max(worst3, abs(flux3 - qq))
    checks.append(make_check("potential.flux_2d", "potential.gauss_2d",
                             worst2, 0.0, 1e-9))
    checks.append(make_check("potential.flux_3d", "potential.gauss_3d",
                             worst3, 0.0, 1e-6))

    worst = 0.0
    for nn in range(2, 9):
        sol = es.PotentialSolution(n=nn, q=q)
        for r in (0.5, 1.0, 5.0):
            worst = max(worst, abs(es.enclosed_charge(sol, r) - q))
    checks.append(make_check("potential.flux_identity",
                             "potential.gauss_analytic", worst, 0.0,
                             1e-13 * max(1.0, abs(q))))

    worst_ratio_err = 0.0
    directions = {2: np.array([3.0, 4.0]) / 5.0,
                  3: np.array([2.0, 3.0, 6.0]) / 7.0,
                  4: np.array([1.0, 2.0, 2.0, 4.0]) / 5.0}
    for nn in (2, 3, 4):
        sol = es.PotentialSolution(n=nn, q=q)
        x = directions[nn]
        res_h = abs(es.laplacian_residual(sol, x, 1e-2))
        res_h2 = abs(es.laplacian_residual(sol, x, 5e-3))
        worst_ratio_err = max(worst_ratio_err, abs(res_h / res_h2 - 4.0))
    checks.append(make_check("potential.laplacian_convergence",
                             "potential.off_origin_harmonic",
                             worst_ratio_err, 0.0, 0.5))
    res = abs(es.laplacian_residual(es.PotentialSolution(n=3, q=four_pi),
                                    np.array([1.0, 0.0, 0.0]), 1e-3))
    checks.append(make_check("potential.laplacian_residual_small",
                             "potential.off_origin_harmonic", res, 0.0, 1e-4))

    sol = es.PotentialSolution(n=n, q=q, mu=mu if n == 2 else None)
    rs = sorted(set(float(r) for r in np.geomspace(0.05, 20.0, 61))
                | ({mu} if n == 2 else set()))
    rows = [(r, es.potential(sol, r), es.field_magnitude(sol, r))
            for r in rs]
    artifacts = [_emit(out_dir, f"phi_vs_r_n{n}.csv", write_csv,
                       ["r", "phi", "field"], rows)]
    return checks, artifacts


def _run_classify(cfg: dict[str, Any], out_dir: str) -> tuple[list, list[str]]:
    checks = []
    d4 = sym.dihedral_group(4)
    settings = st.OptimizerSettings(seed=int(cfg["seed"]),
                                    restarts=int(cfg["restarts"]))
    winners = st.solve_steiner(st.square_terminals(1.0), settings)
    verdict = sym.classify_ssb(d4, [w.config() for w in winners], tol=1e-8)
    checks.append(make_check("classify.steiner_square",
                             "classify.square_networks",
                             verdict.kind.value, sym.SSBKind.NARROW.value))
    checks.append(make_check("classify.steiner_square_witnesses",
                             "classify.square_networks",
                             sorted(w.order for w in verdict.witnesses),
                             [4, 4]))

    square_cfg = sym.PointConfig(st.square_terminals(1.0),
                                 ((0, 1), (1, 2), (2, 3), (0, 3)))
    unbroken = sym.classify_ssb(d4, [square_cfg])
    checks.append(make_check("classify.square_itself", "classify.control",
                             unbroken.kind.value, sym.SSBKind.UNBROKEN.value))

    for problem, expected in (
            (sc.SignFlipProblem.SQUARE_ROOTS, sym.SSBKind.NARROW),
            (sc.SignFlipProblem.QUARTIC_ROOTS, sym.SSBKind.GENERAL),
            (sc.SignFlipProblem.QUARTIC_MINIMA, sym.SSBKind.NARROW)):
        verdict = sc.z2_verdict(problem)
        checks.append(make_check(f"classify.{problem.value}",
                                 f"classify.{problem.value}",
                                 verdict.kind.value, expected.value))
    return checks, []


_RUNNERS = {
    "steiner": _run_steiner,
    "scalar": _run_scalar,
    "ode": _run_ode,
    "maxwell": _run_maxwell,
    "potential": _run_potential,
    "classify": _run_classify,
}


def run_subcommand(name: str, config: dict[str, Any] | None = None,
                   out_dir: str = DEFAULT_OUT) -> RunManifest:
    """Run one subcommand (or 'all'), emit its plot data, return the manifest."""
    if name == "all":
        merged_cfg: dict[str, Any] = {}
        checks: list = []
        artifacts: list[str] = []
        for sub in SUBCOMMANDS[:-1]:
            sub_cfg = resolve_config(sub, config or {})
            merged_cfg[sub] = sub_cfg
            sub_checks, sub_artifacts = _RUNNERS[sub](sub_cfg, out_dir)
            checks.extend(sub_checks)
            artifacts.extend(sub_artifacts)
        seed = int((config or {}).get("seed", 0))
        return RunManifest(subcommand="all", config=merged_cfg, seed=seed,
                           version=__version__, reports=tuple(checks),
                           artifacts=tuple(sorted(artifacts)))
    if name not in _RUNNERS:
        raise ValueError(f"unknown subcommand {name!r}")
    cfg = resolve_config(name, config or {})
    os.makedirs(out_dir, exist_ok=True)
    checks, artifacts = _RUNNERS[name](cfg, out_dir)
    return RunManifest(subcommand=name, config=cfg,
                       seed=int(cfg.get("seed", 0)), version=__version__,
                       reports=tuple(checks),
                       artifacts=tuple(sorted(artifacts)))


def resolve_config(name: str, overrides: dict[str, Any]) -> dict[str, Any]:
    """Defaults overlaid with any recognized override keys."""
    cfg = dict(DEFAULTS[name])
    for key, value in overrides.items():
        if key in cfg and value is not None:
            cfg[key] = value
    return cfg


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None,
                        help="seed for every randomized piece (default 0)")
    common.add_argument("--out", default=None,
                        help=f"output directory (default ${ENV_OUT} "
                             f"or ./{DEFAULT_OUT})")
    common.add_argument("--config", default=None,
                        help="JSON file with settings (flags win over it)")
    common.add_argument("--json", action="store_true",
                        help="print the manifest JSON to stdout")

    parser = argparse.ArgumentParser(
        prog="ssb-lab",
        description="numerical laboratory for spontaneous symmetry breaking")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("steiner", parents=[common],
                       help="shortest networks and their residual symmetry")
    p.add_argument("--square", type=float, default=None, metavar="SIDE",
                   help="side of the centered square (default 1)")
    p.add_argument("--terminals", default=None, metavar="FILE",
                   help="JSON file [[x, y], ...] of 3 or 4 terminals")

    sub.add_parser("scalar", parents=[common],
                   help="polynomial roots, minima and verdicts")
    sub.add_parser("ode", parents=[common],
                   help="translation action on exponential solutions")

    p = sub.add_parser("maxwell", parents=[common],
                       help="plane-wave residuals and complex rescaling")
    p.add_argument("--grid", type=int, default=None, metavar="N",
                   help="points per axis (default 32)")

    p = sub.add_parser("potential", parents=[common],
                       help="point charge in n dimensions")
    p.add_argument("-n", "--dim", type=int, default=None,
                   help="spatial dimension (default 3)")
    p.add_argument("-q", "--charge", type=float, default=None,
                   help="charge (default 1)")
    p.add_argument("--mu", type=float, default=None,
                   help="n=2 reference radius (default 1)")
    p.add_argument("--lambda", dest="lam", type=float, default=None,
                   help="scale factor for the rescaling checks (default 2)")

    sub.add_parser("classify", parents=[common],
                   help="verdicts for the bundled problems")
    sub.add_parser("all", parents=[common],
                   help="run everything into one manifest")
    return parser


def _overrides_from_args(args: argparse.Namespace) -> dict[str, Any]:
    overrides: dict[str, Any] = {}
    if args.seed is not None:
        overrides["seed"] = args.seed
    if getattr(args, "square", None) is not None:
        overrides["side"] = args.square
    if getattr(args, "terminals", None) is not None:
        with open(args.terminals) as handle:
            overrides["terminals"] = json.load(handle)
    if getattr(args, "grid", None) is not None:
        overrides["grid"] = args.grid
    if getattr(args, "dim", None) is not None:
        overrides["n"] = args.dim
    if getattr(args, "charge", None) is not None:
        overrides["q"] = args.charge
    if getattr(args, "mu", None) is not None:
        overrides["mu"] = args.mu
    if getattr(args, "lam", None) is not None:
        overrides["lam"] = args.lam
    return overrides


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    out_dir = args.out or os.environ.get(ENV_OUT) or DEFAULT_OUT

    config: dict[str, Any] = {}
    if args.config is not None:
        with open(args.config) as handle:
            loaded = json.load(handle)
        if not isinstance(loaded, dict):
            print("config file must hold a JSON object", file=sys.stderr)
            return 2
        config.update(loaded)
    config.update(_overrides_from_args(args))

    manifest = run_subcommand(args.subcommand, config, out_dir)
    stamp = datetime.now(timezone.utc).isoformat()
    text = manifest_json(manifest, generated_at=stamp)
    manifest_path = os.path.join(out_dir,
                                 f"manifest_{args.subcommand}.json")
    write_text_atomic(manifest_path, text)

    if args.json:
        print(text, end="")
    else:
        for report in manifest.reports:
            status = "PASS" if report.passed else "FAIL"
            detail = f"measured={report.measured!r} expected={report.expected!r}"
            if report.tolerance is not None:
                detail += f" tol={report.tolerance:g}"
            print(f"[{status}] {report.name}: {detail}")
        failed = sum(1 for r in manifest.reports if not r.passed)
        print(f"{len(manifest.reports)} checks, {failed} failed; "
              f"manifest: {manifest_path}")
    return 0 if manifest.all_passed() else 1


def console_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_entry()
