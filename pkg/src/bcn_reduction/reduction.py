"""The three representation-ansatz cases and the reduced-Hamiltonian identity.

Each case attaches to its scheme a family of symmetry-group representations
built from one symmetric power on the largest unitary factor and determinant
powers on the rest.  For admissible parameter values the centralizer-fixed
subspace is one-dimensional, the spin contraction collapses to a scalar
potential, and the reduced radial operator must equal the trigonometric
BC_n Sutherland Hamiltonian up to an additive constant:

    measure_factor(q) - spin_term(q) = bc_potential(q) + constant

pointwise on the alcove (the kinetic parts agree identically).  This module
hosts the parameter bookkeeping, closed-form and brute-force admissibility,
the spin contraction, the coupling maps, and the end-to-end verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Union

import numpy as np
from scipy import sparse

from .algebra import AlgebraPair, Scheme, factor_split, _angles
from .fock import FockSpace, fock_space, gl_matrix
from .polar import (
    KPerpBasis,
    build_kperp_basis,
    build_m_basis,
    inertia_eigenvalues,
    measure_factor,
    sample_alcove,
)

DEFAULT_SEED = 7

#: relative singular-value threshold for kernel detection
KERNEL_RTOL = 1e-9

#: refuse brute-force kernels beyond this representation dimension
BRUTE_FORCE_DIM_GUARD = 100_000


@dataclass(frozen=True)
class RawParams:
    """Bare representation labels: symmetric-power degree a1 plus the four
    determinant powers, one per unitary factor."""

    case: str
    a1: int
    k_l1: int
    k_l2: int
    k_r1: int
    k_r2: int

    def __post_init__(self) -> None:
        if self.case not in ("I", "II", "III"):
            raise ValueError(f"unknown case {self.case!r}")
        if self.a1 < 0:
            raise ValueError("a1 must be non-negative")

    @property
    def k_sum(self) -> int:
        return self.k_l1 + self.k_l2 + self.k_r1 + self.k_r2


@dataclass(frozen=True)
class CaseIParams:
    """Free parameters of the N = 2n ansatz; the fourth determinant power is
    fixed by the zero-sum condition."""

    gamma: int
    k_l1: int
    k_l2: int
    k_r1: int
    case = "I"

    def __post_init__(self) -> None:
        if self.gamma < 0:
            raise ValueError("gamma must be non-negative")

    def to_raw(self, n: int) -> RawParams:
        return RawParams(
            "I",
            a1=self.gamma * n,
            k_l1=self.k_l1,
            k_l2=self.k_l2,
            k_r1=self.k_r1,
            k_r2=-(self.k_l1 + self.k_l2 + self.k_r1),
        )


@dataclass(frozen=True)
class CaseIIParams:
    """Free parameters of the N = 2n+1 ansatz (two occupation numbers and the
    two right determinant powers)."""

    gamma: int
    gamma_tilde: int
    k_r1: int
    k_r2: int
    case = "II"

    def __post_init__(self) -> None:
        if self.gamma < 0 or self.gamma_tilde < 0:
            raise ValueError("occupation parameters must be non-negative")

    def to_raw(self, n: int) -> RawParams:
        diff = self.gamma_tilde - self.gamma
        rem = diff % (n + 1)  # unique non-negative remainder
        quo = (diff - rem) // (n + 1)
        return RawParams(
            "II",
            a1=self.gamma * n + self.gamma_tilde,
            k_l1=quo - diff - self.k_r1,
            k_l2=diff - self.k_r2,
            k_r1=self.k_r1,
            k_r2=self.k_r2,
        )


@dataclass(frozen=True)
class CaseIIIParams:
    """Free parameters of the N = 2n+2 ansatz (three occupation numbers and
    one determinant power)."""

    gamma: int
    gamma_tilde: int
    gamma_hat: int
    k: int
    case = "III"

    def __post_init__(self) -> None:
        if min(self.gamma, self.gamma_tilde, self.gamma_hat) < 0:
            raise ValueError("occupation parameters must be non-negative")

    def to_raw(self, n: int) -> RawParams:
        a1 = self.gamma * n + self.gamma_tilde + self.gamma_hat
        rem = a1 % (n + 2)
        quo = (a1 - rem) // (n + 2)
        return RawParams(
            "III",
            a1=a1,
            k_l1=self.k,
            k_l2=self.gamma_tilde - self.gamma_hat + self.k,
            k_r1=quo - self.gamma_tilde - self.k,
            k_r2=self.gamma_hat - self.gamma - self.k,
        )


KKSParams = Union[CaseIParams, CaseIIParams, CaseIIIParams]


@dataclass(frozen=True)
class VKResult:
    """Dimension of the centralizer-fixed subspace plus the occupation
    states spanning it (reported when they align with basis states)."""

    dimension: int
    states: tuple[tuple[int, ...], ...] = ()
    reason: Optional[str] = None  # violated condition when dimension is 0


@dataclass(frozen=True)
class Couplings:
    """Sutherland couplings (a, b, c) and the additive constant."""

    a: int
    b: int
    c: int
    constant: Fraction


@dataclass(frozen=True)
class MuParams:
    """Root-multiplicity parameters: pair roots a+1, short roots b-c, long
    roots c+1/2."""

    pair: Fraction
    short: Fraction
    long: Fraction


def scheme_for(case: str, n: int) -> Scheme:
    return Scheme.of_case(case, n)


def big_modes(scheme: Scheme) -> int:
    """Mode count of the oscillator realization: the largest factor size."""
    case = scheme.case_tag
    if case == "I":
        return scheme.n
    if case == "II":
        return scheme.n + 1
    if case == "III":
        return scheme.n + 2
    raise ValueError("representation ansatz defined only for cases I, II, III")


def _big_slot(case: str) -> int:
    # index inside factor_split output: cases I/II use the first left factor,
    # case III the first right factor
    return 0 if case in ("I", "II") else 2


def to_raw(scheme: Scheme, params: "KKSParams | RawParams") -> RawParams:
    if isinstance(params, RawParams):
        raw = params
    else:
        raw = params.to_raw(scheme.n)
    if raw.case != scheme.case_tag:
        raise ValueError(f"params are case {raw.case}, scheme is {scheme.case_tag}")
    return raw


def rep_space(scheme: Scheme, raw: RawParams) -> FockSpace:
    return fock_space(big_modes(scheme), raw.a1)


def rho_prime_pair(
    scheme: Scheme, raw: RawParams, pair: AlgebraPair
) -> sparse.csr_matrix:
    """Derived representation of one symmetry-algebra pair.

    The largest factor acts through the oscillator realization of its
    traceless part; all four factors contribute trace scalars weighted by
    their determinant powers, with the congruence label correcting the large
    factor.  Linear in the pair and anti-Hermitian on anti-Hermitian input.
    """
    raw = to_raw(scheme, raw)
    blocks = factor_split(scheme, pair)
    modes = big_modes(scheme)
    space = rep_space(scheme, raw)
    slot = _big_slot(raw.case)
    big = blocks[slot]
    mu = raw.a1 % modes
    traces = [np.trace(b) for b in blocks]
    ks = (raw.k_l1, raw.k_l2, raw.k_r1, raw.k_r2)
    scalar = sum(k * t for k, t in zip(ks, traces)) + mu * traces[slot] / modes
    op = gl_matrix(space, big - (traces[slot] / modes) * np.eye(modes))
    eye = sparse.identity(space.dim, dtype=complex, format="csr")
    return (op + scalar * eye).tocsr()


def vk_predicted(scheme: Scheme, raw: RawParams) -> VKResult:
    """Closed-form admissibility test, evaluated exactly over the integers.

    Returns the predicted fixed-subspace dimension (0 or 1) and, when 1, the
    unique occupation state; `reason` names the first violated condition
    otherwise.
    """
    raw = to_raw(scheme, raw)
    n = scheme.n
    if raw.case == "I":
        if raw.a1 % n != 0:
            return VKResult(0, reason="a1 must be a multiple of n")
        if raw.k_sum != 0:
            return VKResult(0, reason="determinant powers must sum to zero")
        gamma = raw.a1 // n
        return VKResult(1, ((gamma,) * n,))
    if raw.case == "II":
        p = n + 1
        kap1 = raw.k_l1 + raw.k_r1
        kap2 = raw.k_l2 + raw.k_r2
        if (raw.a1 - kap2) % p != 0:
            return VKResult(0, reason="a1 - (k_l2 + k_r2) must be divisible by n+1")
        gamma = (raw.a1 - kap2) // p
        gamma_t = gamma + kap2
        if gamma < 0 or gamma_t < 0:
            return VKResult(0, reason="occupation numbers would be negative")
        if raw.a1 % p + p * kap1 + n * kap2 != 0:
            return VKResult(0, reason="central-character balance fails")
        return VKResult(1, ((gamma,) * n + (gamma_t,),))
    # case III
    p = n + 2
    num = raw.a1 + n * (raw.k_l1 + raw.k_r2) - raw.k_l2 + raw.k_l1
    if num % p != 0:
        return VKResult(0, reason="weight equation has no integer solution")
    gamma_h = num // p
    gamma = gamma_h - raw.k_l1 - raw.k_r2
    gamma_t = gamma_h + raw.k_l2 - raw.k_l1
    if min(gamma, gamma_t, gamma_h) < 0:
        return VKResult(0, reason="occupation numbers would be negative")
    if raw.a1 % p + p * raw.k_r1 + (n + 1) * (raw.k_l1 + raw.k_l2) + n * raw.k_r2 != 0:
        return VKResult(0, reason="central-character balance fails")
    return VKResult(1, ((gamma,) * n + (gamma_t, gamma_h),))


def _stack_centralizer_ops(scheme: Scheme, raw: RawParams) -> list[np.ndarray]:
    """Dense operators of the diagonally embedded centralizer basis."""
    ops = []
    for lmat in build_m_basis(scheme):
        op = rho_prime_pair(scheme, raw, AlgebraPair(lmat, lmat))
        ops.append(op.toarray())
    return ops


def vk_bruteforce(scheme: Scheme, raw: RawParams, method: str = "auto") -> VKResult:
    """Fixed-subspace dimension by direct kernel computation.

    Stacks the derived-representation operators of a centralizer basis and
    counts singular values below KERNEL_RTOL times the largest one (floored
    at 1).  With method="auto" the singular values are read off as column
    norms whenever every operator is diagonal in the occupation basis (exact
    for these; the stacked matrix then has orthogonal columns); otherwise,
    and always with method="svd", a dense SVD is used.
    """
    raw = to_raw(scheme, raw)
    modes = big_modes(scheme)
    dim = math.comb(raw.a1 + modes - 1, modes - 1)
    if dim > BRUTE_FORCE_DIM_GUARD:
        raise ValueError(f"representation dimension {dim} exceeds guard")
    space = rep_space(scheme, raw)
    ops = _stack_centralizer_ops(scheme, raw)
    stacked = np.vstack(ops)

    use_columns = False
    if method == "auto":
        offdiag = max(
            np.abs(op - np.diag(np.diagonal(op))).max() for op in ops
        )
        scale = max(1.0, np.abs(stacked).max())
        use_columns = offdiag <= 1e-13 * scale
    elif method != "svd":
        raise ValueError(f"unknown method {method!r}")

    if use_columns:
        svals = np.sqrt((np.abs(stacked) ** 2).sum(axis=0))
        tol = KERNEL_RTOL * max(float(svals.max()), 1.0)
        null_idx = np.flatnonzero(svals <= tol)
        states = tuple(space.states[i] for i in null_idx)
        return VKResult(len(null_idx), states)

    svals = np.linalg.svd(stacked, compute_uv=False)
    tol = KERNEL_RTOL * max(float(svals.max()), 1.0) if svals.size else 1.0
    rank = int(np.sum(svals > tol))
    nullity = space.dim - rank
    states = []
    if nullity:
        _, _, vh = np.linalg.svd(stacked)
        for row in vh[rank:]:
            i = int(np.argmax(np.abs(row)))
            if abs(abs(row[i]) - 1.0) <= 1e-9:
                states.append(space.states[i])
    return VKResult(nullity, tuple(sorted(states)))


class SpinContraction:
    """Spin term of one admissible representation, ready to evaluate.

    The inertia-weighted contraction over the orbit-direction basis
    collapses, for the diagonalizing basis, to

        sum_alpha <v, rho'(T_alpha)^2 v> / lambda_alpha(q)

    with v the unit vector spanning the fixed subspace.  The state-dependent
    weights are computed once; only the eigenvalues depend on q.
    """

    def __init__(self, scheme: Scheme, raw: RawParams):
        raw = to_raw(scheme, raw)
        vk = vk_predicted(scheme, raw)
        if vk.dimension != 1:
            raise ValueError(f"parameters are not admissible: {vk.reason}")
        self.scheme = scheme
        self.raw = raw
        self.state = vk.states[0]
        self.basis: KPerpBasis = build_kperp_basis(scheme)
        space = rep_space(scheme, raw)
        v = space.state_vector(self.state)
        weights = np.empty(len(self.basis))
        for i in range(len(self.basis)):
            op = rho_prime_pair(scheme, raw, self.basis.pair(i))
            u = op @ v
            # <v, op^2 v> = -|op v|^2 for anti-Hermitian op
            weights[i] = -float(np.vdot(u, u).real)
        self.weights = weights

    def at(self, pt) -> float:
        lam = inertia_eigenvalues(self.basis, pt)
        return float(np.sum(self.weights / lam))


def spin_term(scheme: Scheme, params: "KKSParams | RawParams", pt) -> float:
    """Scalar spin term at one alcove point; see SpinContraction for sweeps."""
    return SpinContraction(scheme, to_raw(scheme, params)).at(pt)


def case1_spin_closed(n: int, params: CaseIParams, pt) -> float:
    """Closed form of the case-I spin term as a function of the angles."""
    q = _angles(pt)
    g = params.gamma
    kl1, kl2, kr1 = params.k_l1, params.k_l2, params.k_r1
    val = -0.5 * n * (kl1 + kl2) ** 2
    pair = 0.0
    for k in range(n):
        for l in range(k + 1, n):
            pair += 1.0 / math.sin(q[k] - q[l]) ** 2
            pair += 1.0 / math.sin(q[k] + q[l]) ** 2
    val -= g * (g + 1) * pair
    val -= ((kl1 + kr1) ** 2 - (kl2 + kr1) ** 2) / 2.0 * float(
        np.sum(1.0 / np.sin(q) ** 2)
    )
    val -= 2.0 * (kl2 + kr1) ** 2 * float(np.sum(1.0 / np.sin(2.0 * q) ** 2))
    return val


def couplings(n: int, params: KKSParams) -> Couplings:
    """Sutherland couplings and additive constant of an admissible family."""
    if params.case == "I":
        const = Fraction(n * (params.k_l1 + params.k_l2) ** 2, 2) - Fraction(
            n * (2 * n - 1) * (2 * n + 1), 6
        )
        return Couplings(
            a=params.gamma,
            b=abs(params.k_l1 + params.k_r1),
            c=abs(params.k_l2 + params.k_r1),
            constant=const,
        )
    if params.case == "II":
        const = (
            Fraction(n * (params.k_r1 + params.k_r2) ** 2, 2)
            + params.k_r1**2
            - Fraction(n * (n + 1) * (2 * n + 1), 3)
        )
        return Couplings(
            a=params.gamma,
            b=params.gamma + params.gamma_tilde + 1,
            c=abs(params.gamma_tilde - params.gamma + params.k_r1 - params.k_r2),
            constant=const,
        )
    if params.case == "III":
        gt, gh, k = params.gamma_tilde, params.gamma_hat, params.k
        const = (
            -Fraction(n * (4 * n**2 + 12 * n + 11), 6)
            + Fraction(n * (2 * k + gt - gh) ** 2, 2)
            + (gt + k) * (gt + k + 1)
            + (gh - k) * (gh - k + 1)
        )
        return Couplings(
            a=params.gamma,
            b=params.gamma + gt + 1,
            c=params.gamma + gh + 1,
            constant=const,
        )
    raise ValueError(f"unknown case {params.case!r}")


def params_from_raw(scheme: Scheme, raw: RawParams) -> KKSParams:
    """Recover the free parametrization of an admissible raw label set."""
    vk = vk_predicted(scheme, raw)
    if vk.dimension != 1:
        raise ValueError(f"parameters are not admissible: {vk.reason}")
    state = vk.states[0]
    n = scheme.n
    if raw.case == "I":
        return CaseIParams(state[0], raw.k_l1, raw.k_l2, raw.k_r1)
    if raw.case == "II":
        return CaseIIParams(state[0], state[n], raw.k_r1, raw.k_r2)
    return CaseIIIParams(state[0], state[n], state[n + 1], raw.k_l1)


def mu_params(coup: Couplings) -> MuParams:
    return MuParams(
        pair=Fraction(coup.a + 1),
        short=Fraction(coup.b - coup.c),
        long=coup.c + Fraction(1, 2),
    )


def couplings_from_mu(mu: MuParams, constant: Fraction = Fraction(0)) -> Couplings:
    c = mu.long - Fraction(1, 2)
    b = mu.short + c
    a = mu.pair - 1
    for name, val in (("a", a), ("b", b), ("c", c)):
        if val.denominator != 1:
            raise ValueError(f"coupling {name} is not an integer: {val}")
    return Couplings(int(a), int(b), int(c), constant)


def bc_potential(coup: "Couplings | tuple[int, int, int]", pt) -> float:
    """Trigonometric Sutherland potential with couplings (a, b, c).

    Pair terms a(a+1)/sin^2(q_k -+ q_l) over k < l, plus half of
    (b^2 - 1/4)/sin^2(q_j) and (c^2 - 1/4)/cos^2(q_j) per angle.
    """
    if isinstance(coup, Couplings):
        a, b, c = coup.a, coup.b, coup.c
    else:
        a, b, c = coup
    q = _angles(pt)
    n = len(q)
    val = 0.0
    for k in range(n):
        for l in range(k + 1, n):
            val += a * (a + 1) / math.sin(q[k] - q[l]) ** 2
            val += a * (a + 1) / math.sin(q[k] + q[l]) ** 2
    val += 0.5 * (b**2 - 0.25) * float(np.sum(1.0 / np.sin(q) ** 2))
    val += 0.5 * (c**2 - 0.25) * float(np.sum(1.0 / np.cos(q) ** 2))
    return val


@dataclass(frozen=True)
class SampleResidual:
    q: tuple[float, ...]
    lhs: float  # measure factor minus spin term
    rhs: float  # potential plus constant
    rel_err: float


@dataclass(frozen=True)
class ReductionReport:
    scheme: Scheme
    raw: RawParams
    couplings: Couplings
    samples: tuple[SampleResidual, ...]
    tol: float
    seed: int

    @property
    def max_rel_err(self) -> float:
        return max(s.rel_err for s in self.samples)

    @property
    def passed(self) -> bool:
        return self.max_rel_err <= self.tol


def verify_reduction(
    scheme: Scheme,
    params: "KKSParams | RawParams",
    samples: int = 20,
    tol: float = 1e-8,
    seed: int = DEFAULT_SEED,
) -> ReductionReport:
    """Check the reduced-Hamiltonian identity at seeded random alcove points.

    At every sample q the measure factor minus the spin term must equal the
    Sutherland potential plus the case constant; the kinetic parts agree
    identically and are not sampled.  Sample points keep a 0.05 margin from
    all alcove walls.
    """
    raw = to_raw(scheme, params)
    free = params_from_raw(scheme, raw)
    coup = couplings(scheme.n, free)
    contraction = SpinContraction(scheme, raw)
    rng = np.random.default_rng(seed)
    rows = []
    for _ in range(samples):
        q = sample_alcove(scheme.n, rng)
        lhs = measure_factor(scheme, q) - contraction.at(q)
        rhs = bc_potential(coup, q) + float(coup.constant)
        rel = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
        rows.append(SampleResidual(tuple(q.tolist()), lhs, rhs, rel))
    return ReductionReport(scheme, raw, coup, tuple(rows), tol, seed)


# ---------------------------------------------------------------------------
# grid enumeration


@dataclass(frozen=True)
class GridCell:
    raw: RawParams
    predicted: VKResult
    brute_dimension: Optional[int] = None
    brute_states: Optional[tuple[tuple[int, ...], ...]] = None
    couplings: Optional[Couplings] = None


def _a1_values(case: str, n: int, gamma_max: int) -> list[int]:
    gs = range(gamma_max + 1)
    if case == "I":
        vals = {g * n for g in gs}
    elif case == "II":
        vals = {g * n + gt for g in gs for gt in gs}
    else:
        vals = {g * n + gt + gh for g in gs for gt in gs for gh in gs}
    return sorted(vals)


def grid_size(case: str, n: int, gamma_max: int, k_bound: int) -> int:
    return len(_a1_values(case, n, gamma_max)) * (2 * k_bound + 1) ** 4


def _grid_nullity_batch(
    scheme: Scheme, a1: int, kgrid: np.ndarray
) -> tuple[np.ndarray, list[tuple[int, ...]]]:
    """Brute-force nullities for every determinant-power tuple at fixed a1.

    Builds the same centralizer operators as `vk_bruteforce` (which are
    diagonal in the occupation basis for these cases, so the stacked
    operator has orthogonal columns and its singular values are the column
    norms), then sweeps the scalar offsets over the whole k-grid at once.
    Returns the nullity per cell and, per cell, the kernel states.
    """
    modes = big_modes(scheme)
    space = fock_space(modes, a1)
    occ = space.occupations.astype(float)
    mu = a1 % modes
    slot = _big_slot(scheme.case_tag)
    bases = []
    traces = []
    for lmat in build_m_basis(scheme):
        blocks = factor_split(scheme, AlgebraPair(lmat, lmat))
        big = blocks[slot]
        off = np.abs(big - np.diag(np.diagonal(big))).max() if big.size else 0.0
        if off > 1e-13:
            raise AssertionError("centralizer basis is not diagonal; use vk_bruteforce")
        w = np.diagonal(big).imag
        t = np.array([np.trace(b).imag for b in blocks])
        bases.append(occ @ w - (w.sum() / modes) * a1 + mu * t[slot] / modes)
        traces.append(t)
    base = np.array(bases)  # (n_ops, dim)
    tmat = np.array(traces)  # (n_ops, 4)
    offsets = kgrid @ tmat.T  # (cells, n_ops)
    diag = offsets[:, :, None] + base[None, :, :]
    svals = np.sqrt((diag**2).sum(axis=1))  # per-state singular values
    tol = KERNEL_RTOL * np.maximum(svals.max(axis=1), 1.0)
    null_mask = svals <= tol[:, None]
    return null_mask.sum(axis=1), [
        tuple(space.states[i] for i in np.flatnonzero(row)) for row in null_mask
    ]


def enumerate_grid(
    case: str,
    n: int,
    gamma_max: int = 3,
    k_bound: int = 3,
    brute: bool = False,
    workers: int = 1,
) -> list[GridCell]:
    """Exhaust the raw parameter grid of one case.

    a1 runs over the values reachable from occupation parameters up to
    gamma_max; each determinant power runs over [-k_bound, k_bound].  Cells
    are returned sorted by (a1, k_l1, k_l2, k_r1, k_r2).  With brute=True
    every cell also carries the brute-force kernel dimension and states.
    """
    scheme = scheme_for(case, n)
    ks = range(-k_bound, k_bound + 1)
    ktuples = list(product(ks, ks, ks, ks))
    kgrid = np.array(ktuples, dtype=float)

    def cells_for(a1: int) -> list[GridCell]:
        brute_dims = brute_states = None
        if brute:
            brute_dims, brute_states = _grid_nullity_batch(scheme, a1, kgrid)
        out = []
        for idx, (kl1, kl2, kr1, kr2) in enumerate(ktuples):
            raw = RawParams(case, a1, kl1, kl2, kr1, kr2)
            pred = vk_predicted(scheme, raw)
            coup = None
            if pred.dimension == 1:
                coup = couplings(n, params_from_raw(scheme, raw))
            out.append(
                GridCell(
                    raw,
                    pred,
                    int(brute_dims[idx]) if brute else None,
                    brute_states[idx] if brute else None,
                    coup,
                )
            )
        return out

    a1s = _a1_values(case, n, gamma_max)
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(cells_for, a1s))
    else:
        chunks = [cells_for(a1) for a1 in a1s]
    return [cell for chunk in chunks for cell in chunk]


def attainable_couplings(
    case: str, n: int, gamma_max: int = 3, k_bound: int = 3
) -> set[tuple[int, int, int]]:
    """Coupling triples realized by the free-parameter grid of one case."""
    ks = range(-k_bound, k_bound + 1)
    gs = range(gamma_max + 1)
    out: set[tuple[int, int, int]] = set()
    if case == "I":
        for g, kl1, kl2, kr1 in product(gs, ks, ks, ks):
            c = couplings(n, CaseIParams(g, kl1, kl2, kr1))
            out.add((c.a, c.b, c.c))
    elif case == "II":
        for g, gt, kr1, kr2 in product(gs, gs, ks, ks):
            c = couplings(n, CaseIIParams(g, gt, kr1, kr2))
            out.add((c.a, c.b, c.c))
    elif case == "III":
        for g, gt, gh, k in product(gs, gs, gs, ks):
            c = couplings(n, CaseIIIParams(g, gt, gh, k))
            out.add((c.a, c.b, c.c))
    else:
        raise ValueError(f"unknown case {case!r}")
    return out


__all__ = [
    "BRUTE_FORCE_DIM_GUARD",
    "CaseIParams",
    "CaseIIParams",
    "CaseIIIParams",
    "Couplings",
    "DEFAULT_SEED",
    "GridCell",
    "KKSParams",
    "MuParams",
    "RawParams",
    "ReductionReport",
    "SampleResidual",
    "SpinContraction",
    "attainable_couplings",
    "bc_potential",
    "big_modes",
    "case1_spin_closed",
    "couplings",
    "couplings_from_mu",
    "enumerate_grid",
    "grid_size",
    "mu_params",
    "params_from_raw",
    "rep_space",
    "rho_prime_pair",
    "scheme_for",
    "spin_term",
    "to_raw",
    "verify_reduction",
    "vk_bruteforce",
    "vk_predicted",
]
