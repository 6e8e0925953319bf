"""Orbit-direction basis, inertia operator, and radial density.

For a scheme (m, n, r, s) the centralizer of the radial torus inside the
two-sided symmetry group has Lie algebra of dimension n + (r-n)^2 + (s-n)^2
(diagonally embedded).  Its orthogonal complement carries the inertia
operator J(q), whose eigenvalues produce the trigonometric potentials.  This
module constructs an explicit labeled orthonormal basis that diagonalizes
J(q) at every interior alcove point, evaluates J both from its definition
and from the closed-form eigenvalues, and provides the orbit-volume density
together with the "measure factor" (the radial Laplacian of the square-root
density divided by it).

Basis ordering is a public contract:

* families in the order hatL, V, W, Vt, Wt, Z0;
* within V and W the roots run over pairs (k, l), k < l, lexicographically,
  each contributing the difference root q_k - q_l before the sum root
  q_k + q_l; then the long roots 2 q_j for j ascending; then the short roots
  q_j for j ascending (present only when r > n);
* for each root the real flavor precedes the imaginary one, and within a
  flavor the degeneracy indices d (and (c, d) for Z0) ascend;
* hatL vectors follow the centralizer basis order: torus directions
  j = 1..n, then the u(r-n) block basis, then the u(s-n) block basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import (
    AlcoveError,
    AlgebraPair,
    Scheme,
    _angles,
    radial_exp,
    u_basis,
)

SQ2 = math.sqrt(2.0)

FAMILIES = ("hatL", "V", "W", "Vt", "Wt", "Z0")

#: interior margin (radians) required by the finite-difference operators
WALL_MARGIN = 0.05


@dataclass(frozen=True)
class Root:
    """Linear functional of the radial angles attached to a basis vector.

    kind is one of "diff" (q_k - q_l), "sum" (q_k + q_l), "short" (q_j),
    "long" (2 q_j) or "zero"; indices are 1-based.
    """

    kind: str
    k: int = 0
    l: int = 0

    def at(self, q: np.ndarray) -> float:
        if self.kind == "diff":
            return float(q[self.k - 1] - q[self.l - 1])
        if self.kind == "sum":
            return float(q[self.k - 1] + q[self.l - 1])
        if self.kind == "short":
            return float(q[self.k - 1])
        if self.kind == "long":
            return float(2.0 * q[self.k - 1])
        if self.kind == "zero":
            return 0.0
        raise ValueError(f"bad root kind {self.kind!r}")

    def __str__(self) -> str:
        names = {
            "diff": f"e{self.k}-e{self.l}",
            "sum": f"e{self.k}+e{self.l}",
            "short": f"e{self.k}",
            "long": f"2e{self.k}",
            "zero": "0",
        }
        return names[self.kind]


@dataclass(frozen=True)
class BasisLabel:
    """Identity of one orbit-direction basis vector."""

    family: str
    root: Root
    flavor: str = ""  # "r", "i", or "" when not applicable
    block: tuple[int, ...] = ()  # degeneracy indices, 1-based

    def __str__(self) -> str:
        parts = [self.family, str(self.root)]
        if self.flavor:
            parts.append(self.flavor)
        if self.block:
            parts.append(",".join(map(str, self.block)))
        return ":".join(parts)


class KPerpBasis:
    """Ordered orthonormal basis of the orbit directions for one scheme.

    Attributes
    ----------
    scheme : Scheme
    labels : tuple of BasisLabel
    left, right : ndarray, shape (dim, N, N)
        Stacked components of the basis pairs, in label order.
    """

    def __init__(self, scheme: Scheme, labels, left, right):
        self.scheme = scheme
        self.labels = tuple(labels)
        self.left = np.asarray(left)
        self.right = np.asarray(right)
        self.left.flags.writeable = False
        self.right.flags.writeable = False

    def __len__(self) -> int:
        return len(self.labels)

    def pair(self, i: int) -> AlgebraPair:
        return AlgebraPair(self.left[i], self.right[i])

    def gram(self) -> np.ndarray:
        """Gram matrix under the symmetry-algebra form; identity if healthy."""
        g = -(
            np.einsum("iab,jba->ij", self.left, self.left)
            + np.einsum("iab,jba->ij", self.right, self.right)
        )
        return g.real

    def family_counts(self) -> dict[str, int]:
        counts = {f: 0 for f in FAMILIES}
        for lab in self.labels:
            counts[lab.family] += 1
        return counts


def _embed(scheme: Scheme, bi: int, bj: int, small: np.ndarray) -> np.ndarray:
    out = np.zeros((scheme.N, scheme.N), dtype=complex)
    sl = scheme.block_slices()
    out[sl[bi], sl[bj]] = small
    return out


def _unit(p: int, q: int, a: int, b: int) -> np.ndarray:
    e = np.zeros((p, q), dtype=complex)
    e[a, b] = 1.0
    return e


def build_m_basis(scheme: Scheme) -> list[np.ndarray]:
    """Orthonormal basis of the centralizer Lie algebra inside u(N).

    Torus directions first: for j = 1..n the matrix with (i/sqrt 2) E_jj in
    both the first and the last diagonal block.  Then a u(r-n) basis in the
    second block and a u(s-n) basis in the third.  Every element commutes
    with the radial generators.
    """
    n = scheme.n
    out = []
    for j in range(n):
        e = _embed(scheme, 0, 0, 1j * _unit(n, n, j, j)) + _embed(
            scheme, 3, 3, 1j * _unit(n, n, j, j)
        )
        out.append(e / SQ2)
    for bi, p in ((1, scheme.r - n), (2, scheme.s - n)):
        for small in u_basis(p):
            out.append(_embed(scheme, bi, bi, small))
    return out


def _pair_root_list(n: int) -> list[Root]:
    roots = []
    for k in range(1, n + 1):
        for l in range(k + 1, n + 1):
            roots.append(Root("diff", k, l))
            roots.append(Root("sum", k, l))
    return roots


def _e_family(scheme: Scheme) -> list[tuple[Root, str, tuple[int, ...], np.ndarray]]:
    """Labeled orthonormal basis of the centralizer complement inside the
    (+,+) gradation block; one entry per (root, flavor, degeneracy)."""
    n, rn = scheme.n, scheme.r - scheme.n
    ent = []
    for root in _pair_root_list(n):
        k, l = root.k - 1, root.l - 1
        asym = _unit(n, n, k, l) - _unit(n, n, l, k)
        sym = _unit(n, n, k, l) + _unit(n, n, l, k)
        if root.kind == "diff":
            mr = (_embed(scheme, 0, 0, asym) + _embed(scheme, 3, 3, asym)) / 2
            mi = (_embed(scheme, 0, 0, 1j * sym) + _embed(scheme, 3, 3, 1j * sym)) / 2
        else:
            mr = (_embed(scheme, 0, 0, asym) - _embed(scheme, 3, 3, asym)) / 2
            mi = (_embed(scheme, 0, 0, 1j * sym) - _embed(scheme, 3, 3, 1j * sym)) / 2
        ent.append((root, "r", (), mr))
        ent.append((root, "i", (), mi))
    for j in range(1, n + 1):
        diag = 1j * _unit(n, n, j - 1, j - 1)
        m = (_embed(scheme, 0, 0, diag) - _embed(scheme, 3, 3, diag)) / SQ2
        ent.append((Root("long", j), "i", (), m))
    for j in range(1, n + 1):
        for flavor in ("r", "i"):
            for d in range(1, rn + 1):
                ejd = _unit(n, rn, j - 1, d - 1)
                edj = _unit(rn, n, d - 1, j - 1)
                if flavor == "r":
                    m = (_embed(scheme, 0, 1, ejd) - _embed(scheme, 1, 0, edj)) / SQ2
                else:
                    m = (
                        _embed(scheme, 0, 1, 1j * ejd) + _embed(scheme, 1, 0, 1j * edj)
                    ) / SQ2
                ent.append((Root("short", j), flavor, (d,), m))
    return ent


def _tilde_e(scheme: Scheme, j: int, d: int, flavor: str) -> np.ndarray:
    """Basis matrix of the (+,-) gradation block at short root q_j."""
    n, sn = scheme.n, scheme.s - scheme.n
    edj = _unit(sn, n, d - 1, j - 1)
    ejd = _unit(n, sn, j - 1, d - 1)
    if flavor == "r":
        return (_embed(scheme, 2, 3, edj) - _embed(scheme, 3, 2, ejd)) / SQ2
    return (_embed(scheme, 2, 3, 1j * edj) + _embed(scheme, 3, 2, 1j * ejd)) / SQ2


def _tilde_f(scheme: Scheme, j: int, d: int, flavor: str) -> np.ndarray:
    """Partner matrix of `_tilde_e` inside the (-,+) gradation block."""
    n, sn = scheme.n, scheme.s - scheme.n
    ejd = _unit(n, sn, j - 1, d - 1)
    edj = _unit(sn, n, d - 1, j - 1)
    if flavor == "r":
        return (-_embed(scheme, 0, 2, ejd) + _embed(scheme, 2, 0, edj)) / SQ2
    return (_embed(scheme, 0, 2, 1j * ejd) + _embed(scheme, 2, 0, 1j * edj)) / SQ2


def _tilde_f0(scheme: Scheme, c: int, d: int, flavor: str) -> np.ndarray:
    """Radially inert directions of the (-,+) block, indexed by (c, d)."""
    rn, sn = scheme.r - scheme.n, scheme.s - scheme.n
    ecd = _unit(rn, sn, c - 1, d - 1)
    edc = _unit(sn, rn, d - 1, c - 1)
    if flavor == "r":
        return (_embed(scheme, 1, 2, ecd) - _embed(scheme, 2, 1, edc)) / SQ2
    return (_embed(scheme, 1, 2, 1j * ecd) + _embed(scheme, 2, 1, 1j * edc)) / SQ2


def build_kperp_basis(scheme: Scheme) -> KPerpBasis:
    """Construct the labeled orthonormal basis of the orbit directions.

    The basis diagonalizes the inertia operator at every interior alcove
    point; see the module docstring for the ordering contract.
    """
    n = scheme.n
    zero = np.zeros((scheme.N, scheme.N), dtype=complex)
    labels: list[BasisLabel] = []
    lefts: list[np.ndarray] = []
    rights: list[np.ndarray] = []

    for j, lmat in enumerate(build_m_basis(scheme), start=1):
        labels.append(BasisLabel("hatL", Root("zero"), "", (j,)))
        lefts.append(lmat / SQ2)
        rights.append(-lmat / SQ2)

    e_entries = _e_family(scheme)
    for family, sign in (("V", 1.0), ("W", -1.0)):
        for root, flavor, block, mat in e_entries:
            labels.append(BasisLabel(family, root, flavor, block))
            lefts.append(mat / SQ2)
            rights.append(sign * mat / SQ2)

    sn, rn = scheme.s - n, scheme.r - n
    for family, sign in (("Vt", 1.0), ("Wt", -1.0)):
        for j in range(1, n + 1):
            for flavor in ("r", "i"):
                for d in range(1, sn + 1):
                    labels.append(BasisLabel(family, Root("short", j), flavor, (d,)))
                    lefts.append(_tilde_e(scheme, j, d, flavor) / SQ2)
                    rights.append(sign * _tilde_f(scheme, j, d, flavor) / SQ2)

    for flavor in ("r", "i"):
        for c in range(1, rn + 1):
            for d in range(1, sn + 1):
                labels.append(BasisLabel("Z0", Root("zero"), flavor, (c, d)))
                lefts.append(zero)
                rights.append(_tilde_f0(scheme, c, d, flavor))

    expected = scheme.dim_g - scheme.dim_centralizer
    if len(labels) != expected:
        raise AssertionError(
            f"basis size {len(labels)} != dim G - dim K = {expected}"
        )
    return KPerpBasis(scheme, labels, np.array(lefts), np.array(rights))


def inertia_matrix(scheme: Scheme, basis: KPerpBasis, pt) -> np.ndarray:
    """Inertia operator evaluated from its definition, as a matrix in basis order.

    Entry (i, j) is the trace-form inner product of the tangent
    representatives right_i - g^-1 left_i g and right_j - g^-1 left_j g,
    where g is the closed-form radial exponential at the given point.
    """
    q = _angles(pt)
    g = radial_exp(scheme, q)
    ginv = g.conj().T
    moved = np.einsum("ab,kbc,cd->kad", ginv, basis.left, g)
    u = basis.right - moved
    mat = -np.einsum("iab,jba->ij", u, u)
    return mat.real


def inertia_eigenvalues(basis: KPerpBasis, pt) -> np.ndarray:
    """Closed-form inertia eigenvalue for every basis vector, in basis order.

    hatL -> 2;  V at root a -> 2 sin^2(a(q)/2);  W at root a -> 2 cos^2(a(q)/2);
    Vt at q_j -> 1 + sin(q_j);  Wt at q_j -> 1 - sin(q_j);  Z0 -> 1.
    All are strictly positive on the open alcove.
    """
    q = _angles(pt)
    out = np.empty(len(basis))
    for idx, lab in enumerate(basis.labels):
        if lab.family == "hatL":
            out[idx] = 2.0
        elif lab.family == "V":
            out[idx] = 2.0 * math.sin(lab.root.at(q) / 2.0) ** 2
        elif lab.family == "W":
            out[idx] = 2.0 * math.cos(lab.root.at(q) / 2.0) ** 2
        elif lab.family == "Vt":
            out[idx] = 1.0 + math.sin(lab.root.at(q))
        elif lab.family == "Wt":
            out[idx] = 1.0 - math.sin(lab.root.at(q))
        elif lab.family == "Z0":
            out[idx] = 1.0
        else:
            raise ValueError(f"bad family {lab.family!r}")
    return out


def nu_triple(scheme: Scheme) -> tuple[float, float, float]:
    """Density exponents (1, r - s, s - n + 1/2) of the scheme."""
    return (1.0, float(scheme.r - scheme.s), scheme.s - scheme.n + 0.5)


def _check_alcove(q: np.ndarray) -> None:
    if not (q[0] > 0.0 and q[-1] < math.pi / 2 and np.all(np.diff(q) > 0)):
        raise AlcoveError(f"angles {q.tolist()} are not interior alcove points")


def radial_density(nu: float, nu1: float, nu2: float, pt) -> float:
    """Product-form density with exponents (nu, nu1, nu2).

    Pair factors sin(q_l - q_k) sin(q_k + q_l) over k < l enter with power
    nu, the single-angle factors sin(q_j) with power nu1 and sin(2 q_j) with
    power nu2.  All bases are positive on the open alcove; evaluation
    elsewhere raises AlcoveError.
    """
    q = _angles(pt)
    _check_alcove(q)
    n = len(q)
    val = 1.0
    for k in range(n):
        for l in range(k + 1, n):
            val *= (math.sin(q[l] - q[k]) * math.sin(q[k] + q[l])) ** nu
    for j in range(n):
        val *= math.sin(q[j]) ** nu1 * math.sin(2.0 * q[j]) ** nu2
    return val


def density_sqrt(scheme: Scheme, pt) -> float:
    """Square root of the orbit-volume density, normalized to the product form.

    The orbit volume itself is only defined up to a point-independent
    constant; this function fixes that constant by returning exactly the
    product `radial_density(*nu_triple(scheme), pt)`.  The fourth power is
    proportional to det J with a q-independent ratio.
    """
    return radial_density(*nu_triple(scheme), pt)


def measure_factor(scheme: Scheme, pt) -> float:
    """Closed form of the radial quantum correction term.

    Equals (m-n)(r-s)/2 * sum_j 1/sin^2(q_j)
         + (4(s-n)^2 - 1)/2 * sum_j 1/sin^2(2 q_j)
         - n (3 m^2 + n^2 - 1)/6.
    """
    q = _angles(pt)
    m, n, r, s = scheme.m, scheme.n, scheme.r, scheme.s
    t1 = (m - n) * (r - s) / 2.0 * float(np.sum(1.0 / np.sin(q) ** 2))
    t2 = (4.0 * (s - n) ** 2 - 1.0) / 2.0 * float(np.sum(1.0 / np.sin(2.0 * q) ** 2))
    return t1 + t2 - n * (3.0 * m**2 + n**2 - 1.0) / 6.0


def interior_margin(q: np.ndarray) -> float:
    """Distance of q from the alcove walls (the two ends and all gaps)."""
    q = np.asarray(q, dtype=float)
    gaps = [q[0], math.pi / 2 - q[-1]]
    if len(q) > 1:
        gaps.append(float(np.min(np.diff(q))))
    return min(gaps)


def _fd_radial_sum(func, q: np.ndarray, h: float) -> float:
    """Sum of central second differences of func over each angle."""
    center = func(q)
    acc = 0.0
    for k in range(len(q)):
        qp, qm = q.copy(), q.copy()
        qp[k] += h
        qm[k] -= h
        acc += (func(qp) - 2.0 * center + func(qm)) / h**2
    return acc


def measure_factor_fd(scheme: Scheme, pt, h: float = 1e-4) -> float:
    """Finite-difference oracle for `measure_factor`.

    Applies half the sum of second differences to the square-root density
    and divides by its value; requires the point to sit at least
    WALL_MARGIN from every alcove wall so the stencil stays interior.
    """
    q = _angles(pt)
    if interior_margin(q) < WALL_MARGIN:
        raise AlcoveError(
            f"point within {WALL_MARGIN} of an alcove wall; move inward"
        )
    f = lambda qq: density_sqrt(scheme, qq)
    return 0.5 * _fd_radial_sum(f, q, h) / f(q)


def sutherland_rhs(nu: float, nu1: float, nu2: float, pt) -> float:
    """Closed form for the log-Laplacian of the product density.

    This is the Sutherland-type differential identity: the sum of second
    derivatives of the product density divided by the density equals

        2 nu(nu-1) sum_{k<l} [1/sin^2(q_k - q_l) + 1/sin^2(q_k + q_l)]
      + nu1(nu1 + 2 nu2 - 1) sum_j 1/sin^2(q_j)
      + 4 nu2(nu2 - 1)       sum_j 1/sin^2(2 q_j)
      - n [ (nu1 + 2 nu2)^2 + 2 nu (nu1 + 2 nu2)(n - 1)
            + (2/3) nu^2 (n - 1)(2n - 1) ].

    The pair coefficient 2 nu(nu-1) counts each unordered pair once; each
    pair factor contributes second derivatives through two angles.
    """
    q = _angles(pt)
    n = len(q)
    pair = 0.0
    for k in range(n):
        for l in range(k + 1, n):
            pair += 1.0 / math.sin(q[k] - q[l]) ** 2
            pair += 1.0 / math.sin(q[k] + q[l]) ** 2
    val = 2.0 * nu * (nu - 1.0) * pair
    val += nu1 * (nu1 + 2.0 * nu2 - 1.0) * float(np.sum(1.0 / np.sin(q) ** 2))
    val += 4.0 * nu2 * (nu2 - 1.0) * float(np.sum(1.0 / np.sin(2.0 * q) ** 2))
    ss = nu1 + 2.0 * nu2
    val -= n * (ss**2 + 2.0 * nu * ss * (n - 1) + (2.0 / 3.0) * nu**2 * (n - 1) * (2 * n - 1))
    return val


def sutherland_identity(
    nu: float, nu1: float, nu2: float, pt, h: float = 1e-4
) -> tuple[float, float, float]:
    """Check the Sutherland-type identity at one point.

    Returns (lhs, rhs, rel_err): lhs is the finite-difference log-Laplacian
    of the product density, rhs the closed form, and rel_err their relative
    difference |lhs - rhs| / max(1, |lhs|, |rhs|).
    """
    q = _angles(pt)
    f = lambda qq: radial_density(nu, nu1, nu2, qq)
    lhs = _fd_radial_sum(f, q, h) / f(q)
    rhs = sutherland_rhs(nu, nu1, nu2, q)
    rel = abs(lhs - rhs) / max(1.0, abs(lhs), abs(rhs))
    return lhs, rhs, rel


def sample_alcove(
    n: int, rng: np.random.Generator, margin: float = WALL_MARGIN
) -> np.ndarray:
    """Draw one interior alcove point with the given margin from all walls."""
    lo, hi = margin, math.pi / 2 - margin
    if hi - lo < (n - 1) * margin:
        raise ValueError(f"margin {margin} leaves no room for {n} angles")
    while True:
        q = np.sort(rng.uniform(lo, hi, size=n))
        if n == 1 or np.min(np.diff(q)) >= margin:
            return q


__all__ = [
    "BasisLabel",
    "FAMILIES",
    "KPerpBasis",
    "Root",
    "WALL_MARGIN",
    "build_kperp_basis",
    "build_m_basis",
    "density_sqrt",
    "inertia_eigenvalues",
    "inertia_matrix",
    "interior_margin",
    "measure_factor",
    "measure_factor_fd",
    "nu_triple",
    "radial_density",
    "sample_alcove",
    "sutherland_identity",
    "sutherland_rhs",
]
