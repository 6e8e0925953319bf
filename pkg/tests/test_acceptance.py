"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance is pinned here.
"""

import math
import time
from fractions import Fraction
from itertools import product

import numpy as np

from bcn_reduction.fock import fock_space, gl_action, weight_space
from bcn_reduction.polar import (
    build_kperp_basis,
    inertia_eigenvalues,
    inertia_matrix,
    measure_factor,
    measure_factor_fd,
    sample_alcove,
    sutherland_identity,
)
from bcn_reduction.reduction import (
    CaseIParams,
    CaseIIParams,
    CaseIIIParams,
    SpinContraction,
    attainable_couplings,
    case1_spin_closed,
    enumerate_grid,
    scheme_for,
    verify_reduction,
    vk_bruteforce,
)

CASES = ("I", "II", "III")


def _report(num, name, ok, detail):
    print(f"\nACCEPTANCE {num} ({name}): {'PASS' if ok else 'FAIL'} — {detail}")
    assert ok, f"criterion {num} failed: {detail}"


def test_criterion_1_inertia_diagonalization():
    t0 = time.perf_counter()
    rng = np.random.default_rng(101)
    worst = 0.0
    for case in CASES:
        for n in (1, 2, 3):
            scheme = scheme_for(case, n)
            basis = build_kperp_basis(scheme)
            eye = np.eye(len(basis))
            for _ in range(20):
                q = sample_alcove(n, rng)
                jmat = inertia_matrix(scheme, basis, q)
                lam = inertia_eigenvalues(basis, q)
                resid = jmat @ eye - lam[None, :] * eye
                worst = max(worst, float(np.linalg.norm(resid, axis=0).max()))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed <= 30.0
    _report(1, "inertia diagonalization", ok,
            f"max |J v - lambda v| = {worst:.3e} (tol 1e-10), {elapsed:.1f}s")


def test_criterion_2_basis_health():
    worst_gram = 0.0
    counts_ok = True
    detail = []
    for case in CASES:
        for n in (1, 2, 3):
            scheme = scheme_for(case, n)
            basis = build_kperp_basis(scheme)
            worst_gram = max(
                worst_gram,
                float(np.abs(basis.gram() - np.eye(len(basis))).max()),
            )
            counts = basis.family_counts()
            r, s = scheme.r, scheme.s
            ok = (
                counts["V"] == counts["W"] == n * (2 * r - 1)
                and counts["Vt"] == counts["Wt"] == 2 * n * (s - n)
                and counts["Vt"] + counts["Z0"] == 2 * r * (s - n)
            )
            if not ok:
                counts_ok = False
                detail.append(f"{case}/n={n}: {counts}")
    ok = worst_gram <= 1e-12 and counts_ok
    _report(2, "basis health", ok,
            f"max |Gram - I| = {worst_gram:.3e} (tol 1e-12), "
            f"family counts {'exact' if counts_ok else detail}")


def test_criterion_3_measure_factor():
    rng = np.random.default_rng(103)
    worst_mes = 0.0
    for case in CASES:
        for n in (1, 2, 3):
            scheme = scheme_for(case, n)
            for _ in range(10):
                q = sample_alcove(n, rng)
                closed = measure_factor(scheme, q)
                fd = measure_factor_fd(scheme, q, h=1e-4)
                worst_mes = max(worst_mes, abs(closed - fd) / max(1, abs(closed)))
    worst_id = 0.0
    for _ in range(5):
        nus = rng.uniform(0.3, 2.0, 3)
        q = sample_alcove(2, rng)
        _, _, rel = sutherland_identity(*nus, q)
        worst_id = max(worst_id, rel)
    ok = worst_mes <= 1e-5 and worst_id <= 1e-4
    _report(3, "measure factor", ok,
            f"closed-vs-FD rel {worst_mes:.3e} (tol 1e-5), "
            f"exponent identity rel {worst_id:.3e} (tol 1e-4)")


def test_criterion_4_admissibility_exhaustion():
    t0 = time.perf_counter()
    mismatches = 0
    bad_states = 0
    multi = 0
    cells_total = 0
    admissible_total = 0
    spot_cells = []
    rng = np.random.default_rng(104)
    for case in CASES:
        for n in (1, 2):
            cells = enumerate_grid(case, n, gamma_max=3, k_bound=3, brute=True)
            cells_total += len(cells)
            for cell in cells:
                if cell.predicted.dimension != cell.brute_dimension:
                    mismatches += 1
                if cell.brute_dimension and cell.brute_dimension > 1:
                    multi += 1
                if cell.predicted.dimension == 1:
                    admissible_total += 1
                    if cell.predicted.states != cell.brute_states:
                        bad_states += 1
            for idx in rng.choice(len(cells), size=12, replace=False):
                spot_cells.append((scheme_for(case, n), cells[idx]))
    # seeded subsample re-checked against the per-cell SVD oracle
    svd_mismatch = 0
    for scheme, cell in spot_cells:
        got = vk_bruteforce(scheme, cell.raw, method="svd")
        if (got.dimension, got.states) != (cell.brute_dimension, cell.brute_states):
            svd_mismatch += 1
    elapsed = time.perf_counter() - t0
    ok = (
        mismatches == 0 and bad_states == 0 and multi == 0
        and svd_mismatch == 0 and elapsed <= 300.0
    )
    _report(4, "admissibility exhaustion", ok,
            f"{cells_total} cells, {admissible_total} admissible, "
            f"{mismatches} dim mismatches, {bad_states} state mismatches, "
            f"{multi} multi-dimensional, {svd_mismatch} SVD spot-check "
            f"mismatches, {elapsed:.1f}s")


def test_criterion_5_case1_spin_term():
    rng = np.random.default_rng(105)
    sets = [
        CaseIParams(1, 1, 0, 0),
        CaseIParams(2, -1, 2, 1),
        CaseIParams(0, 3, -2, 0),
        CaseIParams(3, 0, 0, -2),
        CaseIParams(1, -2, -1, 3),
    ]
    worst = 0.0
    for params in sets:
        for n in (1, 2):
            scheme = scheme_for("I", n)
            con = SpinContraction(scheme, params.to_raw(n))
            for _ in range(10):
                q = sample_alcove(n, rng)
                closed = case1_spin_closed(n, params, q)
                worst = max(worst, abs(con.at(q) - closed) / max(1, abs(closed)))
    ok = worst <= 1e-9
    _report(5, "case-I spin term", ok,
            f"5 parameter sets x 10 points, max rel err {worst:.3e} (tol 1e-9)")


def test_criterion_6_end_to_end_reduction():
    worst = 0.0
    runs = 0
    checked_constants = []
    for n in (1, 2, 3):
        scheme = scheme_for("I", n)
        for a, b, c in product(range(3), repeat=3):
            report = verify_reduction(
                scheme, CaseIParams(a, b, -c, 0), samples=5, tol=1e-8)
            worst = max(worst, report.max_rel_err)
            runs += 1
            got = report.couplings
            assert (got.a, got.b, got.c) == (a, b, c)
    for n in (1, 2):
        for params in [
            CaseIIParams(0, 1, 0, 0),
            CaseIIParams(1, 0, 0, 0),
            CaseIIParams(1, 2, 1, -1),
            CaseIIParams(2, 1, -2, 3),
            CaseIIParams(0, 3, 2, 1),
        ]:
            report = verify_reduction(scheme_for("II", n), params, samples=5,
                                      tol=1e-8)
            worst = max(worst, report.max_rel_err)
            runs += 1
        for params in [
            CaseIIIParams(0, 0, 0, 0),
            CaseIIIParams(1, 0, 2, 0),
            CaseIIIParams(1, 1, 1, 0),
            CaseIIIParams(2, 1, 0, -1),
            CaseIIIParams(0, 2, 1, 2),
        ]:
            report = verify_reduction(scheme_for("III", n), params, samples=5,
                                      tol=1e-8)
            worst = max(worst, report.max_rel_err)
            runs += 1
    # worked instances pin the additive constants
    for case, params, const in [
        ("I", CaseIParams(1, 1, 0, 0), Fraction(0)),
        ("II", CaseIIParams(0, 1, 0, 0), Fraction(-2)),
        ("III", CaseIIIParams(0, 0, 0, 0), Fraction(-9, 2)),
    ]:
        rep = verify_reduction(scheme_for(case, 1), params, samples=5, tol=1e-8)
        checked_constants.append(rep.couplings.constant == const)
        worst = max(worst, rep.max_rel_err)
        runs += 1
    ok = worst <= 1e-8 and all(checked_constants)
    _report(6, "end-to-end reduction", ok,
            f"{runs} parameter sets, max rel err {worst:.3e} (tol 1e-8), "
            f"constants 0, -2, -9/2 {'confirmed' if all(checked_constants) else 'WRONG'}")


def test_criterion_7_fock_suite():
    dims_ok = True
    for modes in range(1, 7):
        for level in range(0, 13):
            space = fock_space(modes, level)
            if space.dim != math.comb(level + modes - 1, modes - 1):
                dims_ok = False

    weights_ok = True
    for modes in (2, 3, 4):
        space = fock_space(modes, 6)
        for st in space.states:
            if weight_space(space, st) != [st]:
                weights_ok = False

    hw_err = 0.0
    for modes in (2, 3, 4, 5):
        space = fock_space(modes, 7)
        top = space.state_vector((7,) + (0,) * (modes - 1))
        for i in range(modes - 1):
            hw_err = max(hw_err, float(np.abs(gl_action(space, i, i + 1) @ top).max()))

    from bcn_reduction.fock import annihilation_op, creation_op

    ccr_err = 0.0
    for modes, level in [(2, 3), (3, 2), (4, 1)]:
        space = fock_space(modes, level)
        up = fock_space(modes, level + 1)
        down = fock_space(modes, level - 1) if level else None
        for i in range(modes):
            for j in range(modes):
                comm = annihilation_op(up, i) @ creation_op(space, j)
                if down is not None:
                    comm = comm - creation_op(down, j) @ annihilation_op(space, i)
                want = np.eye(space.dim) if i == j else 0.0
                ccr_err = max(ccr_err, float(np.abs(comm.toarray() - want).max()))

    ex_err = 0.0
    for g in range(5):
        for modes in (2, 3):
            space = fock_space(modes, g * modes)
            v = space.state_vector((g,) * modes)
            for k in range(modes):
                for l in range(modes):
                    if k != l:
                        w = gl_action(space, k, l) @ (gl_action(space, l, k) @ v)
                        ex_err = max(ex_err, float(np.abs(w - g * (g + 1) * v).max()))

    ok = dims_ok and weights_ok and hw_err == 0.0 and ccr_err <= 1e-12 \
        and ex_err <= 1e-12 * 20
    _report(7, "oscillator suite", ok,
            f"dims {'exact' if dims_ok else 'WRONG'}, weight spaces "
            f"{'1-dim' if weights_ok else 'WRONG'}, highest-weight {hw_err:.1e}, "
            f"commutators {ccr_err:.3e}, exchange eigenvalue {ex_err:.3e}")


def test_criterion_8_coupling_ranges():
    box = set(product(range(4), repeat=3))
    results = {}
    ok = True
    for case, predicate in [
        ("I", lambda t: True),
        ("II", lambda t: t[1] >= t[0] + 1),
        ("III", lambda t: t[1] >= t[0] + 1 and t[2] >= t[0] + 1),
    ]:
        want = {t for t in box if predicate(t)}
        for n in (1, 2):
            got = attainable_couplings(case, n, gamma_max=3, k_bound=3) & box
            results[(case, n)] = (len(got), len(want))
            if got != want:
                ok = False
    _report(8, "coupling ranges", ok,
            "attained-in-box sizes " + ", ".join(
                f"{c}/n={n}: {g}/{w}" for (c, n), (g, w) in results.items()))
