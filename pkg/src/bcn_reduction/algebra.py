"""Matrix algebra for u(N) under a commuting pair of block involutions.

Everything downstream is organized around a quadruple (m, n, r, s) of block
sizes with m >= r >= s >= n and m + n = r + s = N.  The quadruple fixes two
commuting conjugations of u(N): a "left" one by diag(1_r, -1_s) and a "right"
one by diag(1_m, -1_n).  Their joint eigenspaces give a Z2 x Z2 gradation of
u(N), and the partition N = n + (r-n) + (s-n) + n gives a 4x4 block layout
in which all the distinguished subspaces are block-sparse.

This module provides the gradation, the trace-form inner products, pairs of
algebra elements for the two-sided symmetry, and the explicit radial torus
(the flat section of the group action) with its closed-form exponential.

All matrices are dense complex numpy arrays; N never exceeds ~16 in the
supported schemes, so dense storage is both simplest and fastest.  Every
function here is pure and all values are immutable after construction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

# Anti-Hermiticity / block-structure tolerance used across the package.
ANTIHERM_TOL = 1e-12

_CASE_SHAPES = {
    "I": lambda n: (n, n, n, n),
    "II": lambda n: (n + 1, n, n + 1, n),
    "III": lambda n: (n + 2, n, n + 1, n + 1),
}


class AlcoveError(ValueError):
    """Raised when a radial point violates the required alcove constraints."""


@dataclass(frozen=True)
class Scheme:
    """Block-size quadruple (m, n, r, s) selecting one reduction scheme.

    Invariants: m >= r >= s >= n >= 0 and m + n = r + s = N >= 1.  The three
    distinguished families are

    * case I   : (m, r, s) = (n, n, n),         N = 2n
    * case II  : (m, r, s) = (n+1, n+1, n),     N = 2n+1
    * case III : (m, r, s) = (n+2, n+1, n+1),   N = 2n+2

    anything else is tagged "generic".
    """

    m: int
    n: int
    r: int
    s: int

    def __post_init__(self) -> None:
        m, n, r, s = self.m, self.n, self.r, self.s
        if not (m >= r >= s >= n >= 0):
            raise ValueError(f"need m >= r >= s >= n >= 0, got {(m, n, r, s)}")
        if m + n != r + s:
            raise ValueError(f"need m + n = r + s, got {(m, n, r, s)}")
        if m + n < 1:
            raise ValueError("N must be positive")

    @classmethod
    def of_case(cls, case: str, n: int) -> "Scheme":
        """Build the scheme for one of the tagged cases at rank n >= 1."""
        if case not in _CASE_SHAPES:
            raise ValueError(f"unknown case {case!r}")
        if n < 1:
            raise ValueError("rank n must be >= 1")
        m, nn, r, s = _CASE_SHAPES[case](n)
        return cls(m=m, n=nn, r=r, s=s)

    @property
    def N(self) -> int:
        return self.m + self.n

    @property
    def case_tag(self) -> str:
        for tag, shape in _CASE_SHAPES.items():
            if (self.m, self.n, self.r, self.s) == shape(self.n):
                return tag
        return "generic"

    @property
    def block_sizes(self) -> tuple[int, int, int, int]:
        """Sizes (n, r-n, s-n, n) of the 4x4 block partition; some may be 0."""
        return (self.n, self.r - self.n, self.s - self.n, self.n)

    def block_slices(self) -> tuple[slice, slice, slice, slice]:
        edges = np.cumsum((0,) + self.block_sizes)
        return tuple(slice(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]))

    def left_signs(self) -> np.ndarray:
        """Diagonal of the left involution matrix diag(1_r, -1_s)."""
        return np.concatenate([np.ones(self.r), -np.ones(self.s)])

    def right_signs(self) -> np.ndarray:
        """Diagonal of the right involution matrix diag(1_m, -1_n)."""
        return np.concatenate([np.ones(self.m), -np.ones(self.n)])

    @property
    def dim_g(self) -> int:
        """Real dimension of the two-sided symmetry algebra."""
        return self.r**2 + self.s**2 + self.m**2 + self.n**2

    @property
    def dim_centralizer(self) -> int:
        """Real dimension of the section centralizer, n + (r-n)^2 + (s-n)^2."""
        return self.n + (self.r - self.n) ** 2 + (self.s - self.n) ** 2


def involution_matrix(p: int, q: int) -> np.ndarray:
    """Return diag(1_p, -1_q), the unitary implementing the (p, q) involution.

    Parameters
    ----------
    p, q : int
        Block sizes with p >= q >= 0.  The result is its own inverse.
    """
    if not (p >= q >= 0):
        raise ValueError(f"need p >= q >= 0, got {(p, q)}")
    return np.diag(np.concatenate([np.ones(p), -np.ones(q)]))


def apply_involution(inv: np.ndarray, x: np.ndarray) -> np.ndarray:
    """Conjugate x by a diagonal sign matrix (which equals its own inverse)."""
    d = np.diagonal(inv)
    return d[:, None] * x * d[None, :]


def to_antiherm(x: np.ndarray, tol: float = ANTIHERM_TOL) -> np.ndarray:
    """Validate anti-Hermiticity of x within tol and return (x - x†)/2.

    The symmetrization guards against drift accumulated by composed
    operations; inputs further than tol from anti-Hermitian are rejected.
    """
    x = np.asarray(x, dtype=complex)
    defect = np.abs(x + x.conj().T).max() if x.size else 0.0
    scale = max(1.0, np.abs(x).max()) if x.size else 1.0
    if defect > tol * scale:
        raise ValueError(f"matrix is not anti-Hermitian (defect {defect:.3e})")
    return (x - x.conj().T) / 2


def random_antiherm(n: int, rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    """Random element of u(n) with entries of the given scale."""
    a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return scale * (a - a.conj().T) / 2


def grade_project(scheme: Scheme, x: np.ndarray, block: str) -> np.ndarray:
    """Project onto one of the four joint eigenspaces of the two involutions.

    `block` is two characters from {+, -}; the first is the left sign, the
    second the right sign.  The four projections are mutually orthogonal for
    the trace form and sum to x.
    """
    if block not in ("++", "+-", "-+", "--"):
        raise ValueError(f"bad block {block!r}")
    x = np.asarray(x, dtype=complex)
    if x.shape != (scheme.N, scheme.N):
        raise ValueError(f"expected {scheme.N}x{scheme.N} matrix, got {x.shape}")
    sl, sr = scheme.left_signs(), scheme.right_signs()
    a = 1.0 if block[0] == "+" else -1.0
    b = 1.0 if block[1] == "+" else -1.0
    mask_l = (sl[:, None] * sl[None, :]) == a
    mask_r = (sr[:, None] * sr[None, :]) == b
    return np.where(mask_l & mask_r, x, 0.0)


def inner_y(x: np.ndarray, z: np.ndarray) -> float:
    """Positive-definite invariant form -tr(xz) on u(N); real for u(N) inputs."""
    val = -np.trace(x @ z)
    return float(val.real)


@dataclass(frozen=True)
class AlgebraPair:
    """Element (left, right) of the two-sided symmetry algebra.

    `left` is fixed by the left involution (block-diagonal for the (r, s)
    split) and `right` by the right one (block-diagonal for (m, n)).
    """

    left: np.ndarray
    right: np.ndarray

    def __add__(self, other: "AlgebraPair") -> "AlgebraPair":
        return AlgebraPair(self.left + other.left, self.right + other.right)


def check_pair(scheme: Scheme, pair: AlgebraPair, tol: float = ANTIHERM_TOL) -> None:
    """Reject pairs whose components leak outside the fixed-point subalgebras."""
    for mat, (p, q), side in (
        (pair.left, (scheme.r, scheme.s), "left"),
        (pair.right, (scheme.m, scheme.n), "right"),
    ):
        mat = np.asarray(mat)
        off = max(
            np.abs(mat[:p, p:]).max() if p and q else 0.0,
            np.abs(mat[p:, :p]).max() if p and q else 0.0,
        )
        scale = max(1.0, np.abs(mat).max()) if mat.size else 1.0
        if off > tol * scale:
            raise ValueError(
                f"{side} component has off-block contamination {off:.3e}"
            )


def factor_split(
    scheme: Scheme, pair: AlgebraPair
) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Split a symmetry pair into its four unitary-factor blocks.

    Returns (x_l1, x_l2, x_r1, x_r2) where x_l1 is the leading r x r block of
    the left component, x_l2 the trailing s x s block, x_r1 the leading
    m x m block of the right component and x_r2 the trailing n x n block.
    """
    check_pair(scheme, pair)
    r, m = scheme.r, scheme.m
    return (
        pair.left[:r, :r],
        pair.left[r:, r:],
        pair.right[:m, :m],
        pair.right[m:, m:],
    )


def pair_inner(p1: AlgebraPair, p2: AlgebraPair) -> float:
    """Invariant form on the symmetry algebra: sum of the two trace forms."""
    return inner_y(p1.left, p2.left) + inner_y(p1.right, p2.right)


@dataclass(frozen=True)
class RadialPoint:
    """Point of the open radial alcove 0 < q_1 < ... < q_n < pi/2."""

    q: tuple[float, ...]

    def __post_init__(self) -> None:
        q = tuple(float(v) for v in self.q)
        object.__setattr__(self, "q", q)
        arr = np.asarray(q)
        if arr.ndim != 1 or arr.size < 1:
            raise AlcoveError("need at least one angle")
        if not (arr[0] > 0.0 and arr[-1] < math.pi / 2 and np.all(np.diff(arr) > 0)):
            raise AlcoveError(f"angles {q} violate 0 < q_1 < ... < q_n < pi/2")

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.q)


def _angles(pt) -> np.ndarray:
    if isinstance(pt, RadialPoint):
        return pt.array
    return np.asarray(pt, dtype=float)


def radial_embed(scheme: Scheme, pt) -> np.ndarray:
    """Antisymmetric generator of the radial torus for the given angles.

    The angles sit as +diag(q) in the (1, 4) block and -diag(q) in the
    (4, 1) block of the 4x4 partition; everything else is zero.
    """
    q = _angles(pt)
    if q.shape != (scheme.n,):
        raise ValueError(f"expected {scheme.n} angles, got {q.shape}")
    out = np.zeros((scheme.N, scheme.N), dtype=complex)
    b1, _, _, b4 = scheme.block_slices()
    out[b1, b4] = np.diag(q)
    out[b4, b1] = -np.diag(q)
    return out


def radial_exp(scheme: Scheme, pt) -> np.ndarray:
    """Closed-form exponential of `radial_embed`: a real orthogonal matrix.

    Blocks (1,1) and (4,4) carry diag(cos q), (1,4) carries diag(sin q),
    (4,1) carries -diag(sin q); the middle blocks are identities.  Closed
    alcove points (including the walls) are accepted.
    """
    q = _angles(pt)
    if q.shape != (scheme.n,):
        raise ValueError(f"expected {scheme.n} angles, got {q.shape}")
    out = np.eye(scheme.N, dtype=complex)
    b1, _, _, b4 = scheme.block_slices()
    out[b1, b1] = np.diag(np.cos(q))
    out[b4, b4] = np.diag(np.cos(q))
    out[b1, b4] = np.diag(np.sin(q))
    out[b4, b1] = -np.diag(np.sin(q))
    return out


def u_basis(p: int) -> list[np.ndarray]:
    """Orthonormal basis of u(p) for the form -tr(xz).

    Order: the diagonal generators i E_aa for a = 1..p, then for each pair
    a < b (lexicographic) the real rotation (E_ab - E_ba)/sqrt(2) followed by
    the imaginary reflection i(E_ab + E_ba)/sqrt(2).  Empty for p = 0.
    """
    out = []
    for a in range(p):
        e = np.zeros((p, p), dtype=complex)
        e[a, a] = 1j
        out.append(e)
    for a in range(p):
        for b in range(a + 1, p):
            e = np.zeros((p, p), dtype=complex)
            e[a, b], e[b, a] = 1.0, -1.0
            out.append(e / math.sqrt(2))
            e = np.zeros((p, p), dtype=complex)
            e[a, b], e[b, a] = 1j, 1j
            out.append(e / math.sqrt(2))
    return out
