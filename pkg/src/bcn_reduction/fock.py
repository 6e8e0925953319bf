"""Bosonic oscillator realization of the symmetric-power representations.

The level-m subspace of an n-mode bosonic Fock space carries the u(n)
irreducible representation with highest weight m times the first fundamental
weight; every weight space is one-dimensional and is spanned by a single
occupation state.  Central characters of U(n) representations are tracked by
an integer pair (k, a1) with the congruence label mu = a1 mod n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np
from scipy import sparse


def fock_states(modes: int, level: int) -> list[tuple[int, ...]]:
    """All occupation tuples with the given mode count and total, in
    ascending lexicographic order."""
    if modes < 1:
        raise ValueError("need at least one mode")
    if level < 0:
        raise ValueError("level must be non-negative")
    out = []
    for bars in combinations(range(level + modes - 1), modes - 1):
        edges = (-1,) + bars + (level + modes - 1,)
        out.append(tuple(edges[i + 1] - edges[i] - 1 for i in range(modes)))
    return out


class FockSpace:
    """Fixed-level bosonic Fock space with an indexed occupation basis.

    Instances are immutable after construction (operator caches aside) and
    are safe for concurrent reads.  Use `fock_space` to get cached instances.
    """

    def __init__(self, modes: int, level: int):
        self.modes = modes
        self.level = level
        self.states = tuple(fock_states(modes, level))
        self.index = {st: i for i, st in enumerate(self.states)}
        self.occupations = np.array(self.states, dtype=np.int64).reshape(
            len(self.states), modes
        )
        self.occupations.flags.writeable = False
        self._gl_cache: dict[tuple[int, int], sparse.csr_matrix] = {}

    @property
    def dim(self) -> int:
        return len(self.states)

    def __repr__(self) -> str:
        return f"FockSpace(modes={self.modes}, level={self.level}, dim={self.dim})"

    def state_vector(self, state: tuple[int, ...]) -> np.ndarray:
        v = np.zeros(self.dim, dtype=complex)
        v[self.index[tuple(state)]] = 1.0
        return v


@lru_cache(maxsize=None)
def fock_space(modes: int, level: int) -> FockSpace:
    return FockSpace(modes, level)


def annihilation_op(space: FockSpace, mode: int) -> sparse.csr_matrix:
    """Mode annihilator as a map from `space` down one level.

    Matrix shape is (dim of level-1 space, dim of space); coefficients are
    sqrt(l_mode).  The level-0 source gives an empty-row matrix.
    """
    if not 0 <= mode < space.modes:
        raise ValueError(f"mode {mode} out of range")
    if space.level == 0:
        return sparse.csr_matrix((0, space.dim))
    target = fock_space(space.modes, space.level - 1)
    rows, cols, vals = [], [], []
    for j, st in enumerate(space.states):
        if st[mode] == 0:
            continue
        lowered = st[:mode] + (st[mode] - 1,) + st[mode + 1 :]
        rows.append(target.index[lowered])
        cols.append(j)
        vals.append(math.sqrt(st[mode]))
    return sparse.csr_matrix((vals, (rows, cols)), shape=(target.dim, space.dim))


def creation_op(space: FockSpace, mode: int) -> sparse.csr_matrix:
    """Mode creator from `space` up one level; the adjoint of `annihilation_op`
    of the level above."""
    target = fock_space(space.modes, space.level + 1)
    return annihilation_op(target, mode).conj().T.tocsr()


def gl_action(space: FockSpace, i: int, j: int) -> sparse.csr_matrix:
    """Level-preserving operator b_i† b_j realizing the elementary matrix E_ij."""
    if not (0 <= i < space.modes and 0 <= j < space.modes):
        raise ValueError("mode index out of range")
    key = (i, j)
    cached = space._gl_cache.get(key)
    if cached is not None:
        return cached
    rows, cols, vals = [], [], []
    for col, st in enumerate(space.states):
        if st[j] == 0:
            continue
        if i == j:
            rows.append(col)
            cols.append(col)
            vals.append(float(st[j]))
            continue
        moved = list(st)
        moved[j] -= 1
        moved[i] += 1
        rows.append(space.index[tuple(moved)])
        cols.append(col)
        vals.append(math.sqrt(st[j] * (st[i] + 1)))
    op = sparse.csr_matrix((vals, (rows, cols)), shape=(space.dim, space.dim))
    space._gl_cache[key] = op
    return op


def gl_matrix(space: FockSpace, z: np.ndarray) -> sparse.csr_matrix:
    """Operator realizing an arbitrary complex matrix z through E_ij -> b_i† b_j."""
    z = np.asarray(z, dtype=complex)
    if z.shape != (space.modes, space.modes):
        raise ValueError(f"expected {space.modes}x{space.modes} matrix")
    acc = sparse.csr_matrix((space.dim, space.dim), dtype=complex)
    for i in range(space.modes):
        for j in range(space.modes):
            if z[i, j] != 0:
                acc = acc + z[i, j] * gl_action(space, i, j)
    return acc.tocsr()


def weight_space(space: FockSpace, coeffs) -> list[tuple[int, ...]]:
    """Occupation states of the given weight; at most one exists.

    `coeffs` are the integer coefficients of the weight over the coordinate
    functionals; any negative entry or a total different from the level
    gives the empty list.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if len(coeffs) != space.modes:
        raise ValueError("coefficient count must equal the mode count")
    if any(c < 0 for c in coeffs) or sum(coeffs) != space.level:
        return []
    return [coeffs]


def mu_label(n: int, a1: int) -> int:
    """Congruence label in {0, ..., n-1} of the highest weight a1 * (first
    fundamental weight): a1 mod n."""
    if n < 1:
        raise ValueError("n must be positive")
    if a1 < 0:
        raise ValueError("a1 must be non-negative")
    return a1 % n


@dataclass(frozen=True)
class RepLabel:
    """U(n) representation label (k, a1): symmetric power a1 twisted by the
    k-th determinant power."""

    modes: int
    k: int
    a1: int

    def __post_init__(self) -> None:
        if self.modes < 1:
            raise ValueError("modes must be positive")
        if self.a1 < 0:
            raise ValueError("a1 must be non-negative")

    @property
    def mu(self) -> int:
        return mu_label(self.modes, self.a1)

    def space(self) -> FockSpace:
        return fock_space(self.modes, self.a1)


def rho_prime_u(label: RepLabel, z: np.ndarray) -> sparse.csr_matrix:
    """Derived representation of u(n) for the label (k, a1).

    Acts by the traceless part of z through the oscillator realization plus
    the scalar (mu + n k) tr(z)/n; anti-Hermitian for anti-Hermitian z.
    """
    z = np.asarray(z, dtype=complex)
    n = label.modes
    if z.shape != (n, n):
        raise ValueError(f"expected {n}x{n} matrix")
    space = label.space()
    tr = np.trace(z)
    op = gl_matrix(space, z - (tr / n) * np.eye(n))
    scalar = (label.mu + n * label.k) * tr / n
    return (op + scalar * sparse.identity(space.dim, dtype=complex, format="csr")).tocsr()


__all__ = [
    "FockSpace",
    "RepLabel",
    "annihilation_op",
    "creation_op",
    "fock_space",
    "fock_states",
    "gl_action",
    "gl_matrix",
    "mu_label",
    "rho_prime_u",
    "weight_space",
]
