"""Command-line driver: verification suites, grid enumeration, coupling maps.

Subcommands
-----------
verify {basis,inertia,density,fock,reduction,all}
    Run one named suite and report pass/fail per check.
enumerate
    Exhaust a raw parameter grid, predicting (and optionally brute-forcing)
    the fixed-subspace dimension per cell.
couplings
    Map ansatz parameters to Sutherland couplings (a, b, c), the additive
    constant, and the root-multiplicity triple.

Exit status: 0 all checks pass, 1 a check failed or parameters are
inadmissible, 2 usage or configuration error.  Reports can be written as
JSON (--json) or CSV (--csv); identical configurations produce byte-identical
JSON apart from the wall-clock field.  Worker count comes from --threads,
else the BCN_VERIFY_WORKERS environment variable, else the CPU count.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import algebra, fock, polar, reduction
from .algebra import AlgebraPair, Scheme
from .reduction import (
    CaseIParams,
    CaseIIParams,
    CaseIIIParams,
    DEFAULT_SEED,
    RawParams,
)

SCHEMA_VERSION = 1
WORKERS_ENV = "BCN_VERIFY_WORKERS"

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    """Bad flags or inconsistent configuration; maps to exit status 2."""


@dataclass
class Check:
    name: str
    status: str  # pass | fail | skip
    max_abs_err: Optional[float] = None
    tol: Optional[float] = None
    detail: str = ""


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def resolve_workers(flag: Optional[int]) -> int:
    if flag is not None:
        value = flag
    elif os.environ.get(WORKERS_ENV):
        try:
            value = int(os.environ[WORKERS_ENV])
        except ValueError as exc:
            raise UsageError(f"bad {WORKERS_ENV} value") from exc
    else:
        value = os.cpu_count() or 1
    if value < 1:
        raise UsageError("worker count must be >= 1")
    return value


def write_report(report: dict, json_path: Optional[str], csv_path: Optional[str]):
    payload = json.dumps(_jsonable(report), sort_keys=True, indent=1)
    if json_path:
        with open(json_path, "w") as fh:
            fh.write(payload + "\n")
    if csv_path:
        rows = report.get("rows")
        if rows is None:
            rows = report.get("checks", [])
        rows = [_jsonable(r) for r in rows]
        with open(csv_path, "w", newline="") as fh:
            if rows:
                writer = csv.DictWriter(fh, fieldnames=sorted(rows[0]))
                writer.writeheader()
                for row in rows:
                    writer.writerow(row)
    if not json_path and not csv_path:
        print(payload)


def _print_checks(checks: list[Check]) -> None:
    for c in checks:
        err = "" if c.max_abs_err is None else f" max_err={c.max_abs_err:.3e}"
        tol = "" if c.tol is None else f" tol={c.tol:g}"
        detail = f" ({c.detail})" if c.detail else ""
        print(f"[{c.status.upper():4s}] {c.name}{err}{tol}{detail}", file=sys.stderr)


# ---------------------------------------------------------------------------
# verification suites


def suite_basis(scheme: Scheme, rng: np.random.Generator) -> list[Check]:
    basis = polar.build_kperp_basis(scheme)
    checks = []

    gram_err = float(np.abs(basis.gram() - np.eye(len(basis))).max())
    checks.append(
        Check("basis.gram_identity", "pass" if gram_err <= 1e-12 else "fail",
              gram_err, 1e-12)
    )

    n, r, s = scheme.n, scheme.r, scheme.s
    counts = basis.family_counts()
    want = {
        "V": n * (2 * r - 1),
        "W": n * (2 * r - 1),
        "Vt": 2 * n * (s - n),
        "Wt": 2 * n * (s - n),
        "Z0": 2 * (r - n) * (s - n),
        "hatL": scheme.dim_centralizer,
    }
    ok = counts == want and len(basis) == scheme.dim_g - scheme.dim_centralizer
    checks.append(
        Check("basis.family_counts", "pass" if ok else "fail",
              detail=f"got {counts}, want {want}")
    )

    m_basis = polar.build_m_basis(scheme)
    worst = 0.0
    for lmat in m_basis:
        diag = AlgebraPair(lmat, lmat)
        for i in range(len(basis)):
            worst = max(worst, abs(algebra.pair_inner(diag, basis.pair(i))))
    checks.append(
        Check("basis.centralizer_orthogonality", "pass" if worst <= 1e-12 else "fail",
              worst, 1e-12)
    )

    worst = 0.0
    for _ in range(5):
        q = polar.sample_alcove(scheme.n, rng)
        bfq = algebra.radial_embed(scheme, q)
        for lmat in m_basis:
            worst = max(worst, float(np.abs(lmat @ bfq - bfq @ lmat).max()))
    checks.append(
        Check("basis.centralizer_commutes_with_radial",
              "pass" if worst <= 1e-13 else "fail", worst, 1e-13)
    )

    # squared radial bracket multiplies each root vector by -root(q)^2, and
    # the mixed families rotate into each other under a single bracket
    worst_e = worst_t = 0.0
    for _ in range(3):
        q = polar.sample_alcove(scheme.n, rng)
        bfq = algebra.radial_embed(scheme, q)
        ad = lambda x: bfq @ x - x @ bfq
        for i, lab in enumerate(basis.labels):
            if lab.family == "V":
                e = basis.left[i] * polar.SQ2
                resid = ad(ad(e)) + lab.root.at(q) ** 2 * e
                worst_e = max(worst_e, float(np.abs(resid).max()))
            elif lab.family == "Vt":
                e = basis.left[i] * polar.SQ2
                f = basis.right[i] * polar.SQ2
                qj = lab.root.at(q)
                worst_t = max(worst_t, float(np.abs(ad(e) - qj * f).max()))
                worst_t = max(worst_t, float(np.abs(ad(f) + qj * e).max()))
    checks.append(
        Check("basis.radial_bracket_squared", "pass" if worst_e <= 1e-12 else "fail",
              worst_e, 1e-12)
    )
    checks.append(
        Check("basis.radial_bracket_mixing", "pass" if worst_t <= 1e-13 else "fail",
              worst_t, 1e-13)
    )
    return checks


def suite_inertia(scheme: Scheme, rng: np.random.Generator, samples: int) -> list[Check]:
    basis = polar.build_kperp_basis(scheme)
    dim = len(basis)
    worst_col = worst_sym = worst_det = 0.0
    pd = True
    for _ in range(samples):
        q = polar.sample_alcove(scheme.n, rng)
        jmat = polar.inertia_matrix(scheme, basis, q)
        lam = polar.inertia_eigenvalues(basis, q)
        resid = jmat - np.diag(lam)
        worst_col = max(worst_col, float(np.linalg.norm(resid, axis=0).max()))
        worst_sym = max(worst_sym, float(np.abs(jmat - jmat.T).max()))
        det = np.linalg.det(jmat)
        worst_det = max(worst_det, abs(det - np.prod(lam)) / abs(det))
        try:
            np.linalg.cholesky(jmat)
        except np.linalg.LinAlgError:
            pd = False
    checks = [
        Check("inertia.diagonalization", "pass" if worst_col <= 1e-10 else "fail",
              worst_col, 1e-10, f"{samples} points, dim {dim}"),
        Check("inertia.symmetry", "pass" if worst_sym <= 1e-12 else "fail",
              worst_sym, 1e-12),
        Check("inertia.determinant_vs_eigenvalues",
              "pass" if worst_det <= 1e-10 else "fail", worst_det, 1e-10),
        Check("inertia.positive_definite", "pass" if pd else "fail"),
    ]
    return checks


def suite_density(scheme: Scheme, rng: np.random.Generator, samples: int) -> list[Check]:
    checks = []
    worst = 0.0
    for _ in range(samples):
        q = polar.sample_alcove(scheme.n, rng)
        closed = polar.measure_factor(scheme, q)
        fd = polar.measure_factor_fd(scheme, q)
        worst = max(worst, abs(closed - fd) / max(1.0, abs(closed)))
    checks.append(
        Check("density.measure_factor_fd", "pass" if worst <= 1e-5 else "fail",
              worst, 1e-5, f"{samples} points, h=1e-4")
    )

    basis = polar.build_kperp_basis(scheme)
    ratios = []
    for _ in range(samples):
        q = polar.sample_alcove(scheme.n, rng)
        det = np.linalg.det(polar.inertia_matrix(scheme, basis, q))
        ratios.append(polar.density_sqrt(scheme, q) ** 4 / det)
    spread = (max(ratios) - min(ratios)) / abs(np.mean(ratios))
    checks.append(
        Check("density.fourth_power_tracks_det", "pass" if spread <= 1e-9 else "fail",
              spread, 1e-9)
    )

    worst = 0.0
    for _ in range(5):
        nus = rng.uniform(0.3, 2.0, size=3)
        q = polar.sample_alcove(scheme.n, rng)
        _, _, rel = polar.sutherland_identity(*nus, q)
        worst = max(worst, rel)
    checks.append(
        Check("density.log_laplacian_identity", "pass" if worst <= 1e-4 else "fail",
              worst, 1e-4, "5 random exponent triples")
    )
    return checks


def suite_fock(modes: int, level: int) -> list[Check]:
    checks = []
    space = fock.fock_space(modes, level)
    want = math.comb(level + modes - 1, modes - 1)
    checks.append(
        Check("fock.dimension", "pass" if space.dim == want else "fail",
              detail=f"dim {space.dim}, binomial {want}")
    )

    ok = all(fock.weight_space(space, st) == [st] for st in space.states)
    ok = ok and len(set(space.states)) == space.dim
    checks.append(Check("fock.weight_spaces_one_dimensional", "pass" if ok else "fail"))

    top = space.state_vector((level,) + (0,) * (modes - 1))
    worst = 0.0
    for i in range(modes - 1):
        worst = max(worst, float(np.abs(fock.gl_action(space, i, i + 1) @ top).max()))
    checks.append(
        Check("fock.highest_weight_annihilated", "pass" if worst == 0.0 else "fail",
              worst, 0.0)
    )

    worst = 0.0
    up = fock.fock_space(modes, level + 1)
    down = fock.fock_space(modes, level - 1) if level else None
    for i in range(modes):
        for j in range(modes):
            comm = fock.annihilation_op(up, i) @ fock.creation_op(space, j)
            if down is not None:
                comm = comm - fock.creation_op(down, j) @ fock.annihilation_op(space, i)
            want_op = np.eye(space.dim) if i == j else np.zeros((space.dim, space.dim))
            worst = max(worst, float(np.abs(comm.toarray() - want_op).max()))
    checks.append(
        Check("fock.canonical_commutators", "pass" if worst <= 1e-12 else "fail",
              worst, 1e-12)
    )
    return checks


def _case1_spin_check(scheme: Scheme, raw: RawParams,
                      rng: np.random.Generator) -> Check:
    params = reduction.params_from_raw(scheme, raw)
    contraction = reduction.SpinContraction(scheme, raw)
    worst = 0.0
    for _ in range(10):
        q = polar.sample_alcove(scheme.n, rng)
        num = contraction.at(q)
        closed = reduction.case1_spin_closed(scheme.n, params, q)
        worst = max(worst, abs(num - closed) / max(1.0, abs(closed)))
    return Check("reduction.case1_spin_closed_form",
                 "pass" if worst <= 1e-9 else "fail", worst, 1e-9)


def suite_reduction(scheme: Scheme, raw: RawParams, samples: int, tol: float,
                    seed: int) -> tuple[list[Check], Optional[dict]]:
    checks = []
    pred = reduction.vk_predicted(scheme, raw)
    if pred.dimension != 1:
        checks.append(
            Check("reduction.admissible", "fail", detail=pred.reason or "")
        )
        return checks, None
    brute = reduction.vk_bruteforce(scheme, raw)
    ok = brute.dimension == 1 and brute.states == pred.states
    checks.append(
        Check("reduction.admissible", "pass" if ok else "fail",
              detail=f"state {pred.states[0]}")
    )

    report = reduction.verify_reduction(scheme, raw, samples=samples, tol=tol,
                                        seed=seed)
    checks.append(
        Check("reduction.identity_residual",
              "pass" if report.passed else "fail", report.max_rel_err, tol,
              f"{samples} samples")
    )
    if raw.case == "I":
        checks.append(_case1_spin_check(scheme, raw, np.random.default_rng(seed)))

    coup = report.couplings
    extra = {
        "couplings": {"a": coup.a, "b": coup.b, "c": coup.c,
                      "constant": coup.constant},
        "mu": _mu_dict(coup),
        "samples": [
            {"q": list(s.q), "lhs": s.lhs, "rhs": s.rhs, "rel_err": s.rel_err}
            for s in report.samples
        ],
    }
    return checks, extra


def _mu_dict(coup: reduction.Couplings) -> dict:
    mu = reduction.mu_params(coup)
    return {"pair": mu.pair, "short": mu.short, "long": mu.long}


# ---------------------------------------------------------------------------
# argument handling


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", metavar="PATH", help="write the JSON report here")
    p.add_argument("--csv", metavar="PATH", help="write a CSV report here")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--threads", type=int, default=None,
                   help=f"worker count (default: ${WORKERS_ENV} or CPU count)")


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--gamma", type=int)
    p.add_argument("--gamma-tilde", type=int, dest="gamma_tilde")
    p.add_argument("--gamma-hat", type=int, dest="gamma_hat")
    p.add_argument("--k", type=int)
    p.add_argument("--kl1", type=int)
    p.add_argument("--kl2", type=int)
    p.add_argument("--kr1", type=int)
    p.add_argument("--kr2", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcn-verify",
        description="verify reductions of the U(N) radial Laplacian to the "
                    "BC_n Sutherland operator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run a verification suite")
    pv.add_argument("kind",
                    choices=["basis", "inertia", "density", "fock",
                             "reduction", "all"])
    pv.add_argument("--case", choices=["I", "II", "III"])
    pv.add_argument("--n", type=int)
    pv.add_argument("--samples", type=int, default=20)
    pv.add_argument("--tol", type=float, default=1e-8)
    pv.add_argument("--modes", type=int, default=2, help="fock suite mode count")
    pv.add_argument("--level", type=int, default=6, help="fock suite level")
    _add_params(pv)
    _add_common(pv)

    pe = sub.add_parser("enumerate", help="exhaust an admissibility grid")
    pe.add_argument("--case", choices=["I", "II", "III"], required=True)
    pe.add_argument("--n", type=int, required=True)
    pe.add_argument("--gamma-max", type=int, default=2, dest="gamma_max")
    pe.add_argument("--k-bound", type=int, default=1, dest="k_bound")
    pe.add_argument("--brute", action="store_true",
                    help="also brute-force every cell")
    pe.add_argument("--cap", type=int, default=1_000_000,
                    help="refuse grids with more cells than this")
    _add_common(pe)

    pc = sub.add_parser("couplings", help="map parameters to couplings")
    pc.add_argument("--case", choices=["I", "II", "III"], required=True)
    pc.add_argument("--n", type=int, required=True)
    _add_params(pc)
    _add_common(pc)

    return parser


def _require(args, names: list[str], case: str) -> list[int]:
    vals = []
    for name in names:
        v = getattr(args, name)
        if v is None:
            raise UsageError(f"case {case} requires --{name.replace('_', '-')}")
        vals.append(v)
    return vals


def params_from_args(args) -> "reduction.KKSParams":
    """Build case parameters from flags, validating any dependent powers.

    Raises UsageError for missing flags and InadmissibleError (ValueError)
    when explicitly supplied dependent determinant powers violate the
    admissibility conditions.
    """
    case = args.case
    if case == "I":
        gamma, kl1, kl2, kr1 = _require(args, ["gamma", "kl1", "kl2", "kr1"], case)
        params = CaseIParams(gamma, kl1, kl2, kr1)
        if args.kr2 is not None and kl1 + kl2 + kr1 + args.kr2 != 0:
            raise InadmissibleError(
                "determinant powers must sum to zero: "
                f"k_l1+k_l2+k_r1+k_r2 = {kl1 + kl2 + kr1 + args.kr2}"
            )
        return params
    if case == "II":
        gamma, gt, kr1, kr2 = _require(
            args, ["gamma", "gamma_tilde", "kr1", "kr2"], case)
        params = CaseIIParams(gamma, gt, kr1, kr2)
        raw = params.to_raw(args.n)
        for flag, want in (("kl1", raw.k_l1), ("kl2", raw.k_l2)):
            got = getattr(args, flag)
            if got is not None and got != want:
                raise InadmissibleError(
                    f"--{flag} must equal {want} for these occupation "
                    "parameters (weight and central-character conditions)"
                )
        return params
    gamma, gt, gh, k = _require(
        args, ["gamma", "gamma_tilde", "gamma_hat", "k"], case)
    params = CaseIIIParams(gamma, gt, gh, k)
    raw = params.to_raw(args.n)
    for flag, want in (("kl2", raw.k_l2), ("kr1", raw.k_r1), ("kr2", raw.k_r2)):
        got = getattr(args, flag)
        if got is not None and got != want:
            raise InadmissibleError(
                f"--{flag} must equal {want} for these occupation parameters"
            )
    return params


class InadmissibleError(ValueError):
    """Parameters violate an admissibility condition; maps to exit 1."""


def _params_dict(params) -> dict:
    out = {"case": params.case}
    for f in ("gamma", "gamma_tilde", "gamma_hat", "k", "k_l1", "k_l2",
              "k_r1", "k_r2"):
        if hasattr(params, f):
            out[f] = getattr(params, f)
    return out


def _scheme_dict(s: Scheme) -> dict:
    return {"m": s.m, "n": s.n, "r": s.r, "s": s.s, "N": s.N,
            "case": s.case_tag}


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    checks: list[Check] = []
    extra: dict = {}
    scheme = None

    needs_scheme = args.kind in ("basis", "inertia", "density", "reduction", "all")
    if needs_scheme:
        if args.case is None or args.n is None:
            raise UsageError(f"verify {args.kind} requires --case and --n")
        scheme = reduction.scheme_for(args.case, args.n)

    rng = np.random.default_rng(args.seed)
    if args.kind in ("basis", "all"):
        checks += suite_basis(scheme, rng)
    if args.kind in ("inertia", "all"):
        checks += suite_inertia(scheme, rng, args.samples)
    if args.kind in ("density", "all"):
        checks += suite_density(scheme, rng, args.samples)
    if args.kind == "fock" or args.kind == "all":
        modes = args.modes if args.kind == "fock" else reduction.big_modes(scheme)
        level = args.level
        checks += suite_fock(modes, level)
    if args.kind in ("reduction", "all"):
        has_params = args.gamma is not None
        if not has_params and args.kind == "all":
            checks.append(Check("reduction", "skip",
                                detail="no parameters given"))
        else:
            params = params_from_args(args)
            raw = params.to_raw(args.n)
            red_checks, red_extra = suite_reduction(
                scheme, raw, args.samples, args.tol, args.seed)
            checks += red_checks
            if red_extra:
                extra.update(red_extra)
            extra["params"] = _params_dict(params)

    status = "pass" if all(c.status != "fail" for c in checks) else "fail"
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": f"verify {args.kind}",
        "scheme": _scheme_dict(scheme) if scheme else None,
        "seed": args.seed,
        "checks": [vars(c) for c in checks],
        "status": status,
        **extra,
        "wall_clock_s": time.perf_counter() - t0,
    }
    write_report(report, args.json, args.csv)
    _print_checks(checks)
    return EXIT_PASS if status == "pass" else EXIT_FAIL


def cmd_enumerate(args) -> int:
    t0 = time.perf_counter()
    size = reduction.grid_size(args.case, args.n, args.gamma_max, args.k_bound)
    if size > args.cap:
        raise UsageError(f"grid has {size} cells, cap is {args.cap}")
    workers = resolve_workers(args.threads)
    cells = reduction.enumerate_grid(
        args.case, args.n, args.gamma_max, args.k_bound,
        brute=args.brute, workers=workers)
    rows = []
    mismatches = 0
    for cell in cells:
        row = {
            "a1": cell.raw.a1,
            "k_l1": cell.raw.k_l1, "k_l2": cell.raw.k_l2,
            "k_r1": cell.raw.k_r1, "k_r2": cell.raw.k_r2,
            "predicted_dim": cell.predicted.dimension,
            "state": list(cell.predicted.states[0]) if cell.predicted.states else None,
        }
        if args.brute:
            row["brute_dim"] = cell.brute_dimension
            if cell.brute_dimension != cell.predicted.dimension:
                mismatches += 1
        if cell.couplings:
            row.update(a=cell.couplings.a, b=cell.couplings.b, c=cell.couplings.c,
                       constant=cell.couplings.constant)
        rows.append(row)
    admissible = sum(1 for c in cells if c.predicted.dimension == 1)
    status = "pass" if mismatches == 0 else "fail"
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "enumerate",
        "scheme": _scheme_dict(reduction.scheme_for(args.case, args.n)),
        "grid": {"gamma_max": args.gamma_max, "k_bound": args.k_bound,
                 "cells": size, "admissible": admissible,
                 "brute_mismatches": mismatches if args.brute else None},
        "seed": args.seed,
        "rows": rows,
        "status": status,
        "wall_clock_s": time.perf_counter() - t0,
    }
    write_report(report, args.json, args.csv)
    print(f"{size} cells, {admissible} admissible"
          + (f", {mismatches} brute-force mismatches" if args.brute else ""),
          file=sys.stderr)
    return EXIT_PASS if status == "pass" else EXIT_FAIL


def cmd_couplings(args) -> int:
    t0 = time.perf_counter()
    params = params_from_args(args)
    coup = reduction.couplings(args.n, params)
    report = {
        "schema_version": SCHEMA_VERSION,
        "command": "couplings",
        "scheme": _scheme_dict(reduction.scheme_for(args.case, args.n)),
        "params": _params_dict(params),
        "couplings": {"a": coup.a, "b": coup.b, "c": coup.c,
                      "constant": coup.constant},
        "mu": _mu_dict(coup),
        "seed": args.seed,
        "status": "pass",
        "wall_clock_s": time.perf_counter() - t0,
    }
    write_report(report, args.json, args.csv)
    return EXIT_PASS


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "enumerate":
            return cmd_enumerate(args)
        if args.command == "couplings":
            return cmd_couplings(args)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InadmissibleError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
