"""Chevalley-Eilenberg cochain complex and cohomology.

A cochain of degree n is stored by its values on basis wedges
``e_t1 ^ ... ^ e_tn`` with ``t1 < ... < tn``; tuples are enumerated in
lexicographic order and each value is a vector of the module, so the
coordinate of (tuple t, module coordinate a) is ``t * dim V + a``.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .errors import AmbientMismatch, ContractViolation, DegreeOutOfRange, NotACocycle, NotAnIdeal
from .exactlin import (
    ZERO, EchelonReducer, Matrix, kernel_rows, rank, solve, unit_vec,
)
from .liealg import LieAlgebra, Subspace, is_ideal, quotient, subalgebra_restrict
from .rep import Representation, restrict, validate_rep


@lru_cache(maxsize=None)
def basis_tuples(dim: int, n: int) -> tuple:
    if n < 0 or n > dim:
        return ()
    return tuple(combinations(range(dim), n))


@lru_cache(maxsize=None)
def _tuple_index(dim: int, n: int) -> dict:
    return {t: i for i, t in enumerate(basis_tuples(dim, n))}


def _insert_sorted(rest: tuple, k: int):
    """Insert k into a sorted tuple; returns (tuple, sign) or None if k repeats."""
    pos = bisect_left(rest, k)
    if pos < len(rest) and rest[pos] == k:
        return None
    return rest[:pos] + (k,) + rest[pos:], (-1 if pos % 2 else 1)


@dataclass(frozen=True)
class CochainSpace:
    algebra: LieAlgebra
    module: Representation
    degree: int

    @property
    def index(self) -> tuple:
        return basis_tuples(self.algebra.dim, self.degree)

    @property
    def dim(self) -> int:
        return len(self.index) * self.module.dim

    def coordinate(self, t: tuple, a: int) -> int:
        return _tuple_index(self.algebra.dim, self.degree)[tuple(t)] * self.module.dim + a


@dataclass(frozen=True)
class Cochain:
    space: CochainSpace
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.space.dim:
            raise ValueError("cochain coordinate length does not match its space")

    @property
    def degree(self) -> int:
        return self.space.degree

    def value(self, t: tuple) -> tuple:
        """Module vector assigned to the sorted basis tuple ``t``."""
        m = self.space.module.dim
        i = _tuple_index(self.space.algebra.dim, self.degree)[tuple(t)]
        return self.coords[i * m:(i + 1) * m]

    def is_zero(self) -> bool:
        return not any(self.coords)


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    dim_Z: int
    dim_B: int
    dim_H: int
    representatives: tuple
    coboundary_basis: tuple


def _check_degree(L: LieAlgebra, n: int) -> None:
    if n < 0 or n > L.dim:
        raise DegreeOutOfRange(f"degree {n} outside 0..{L.dim}")


def _check_module(L: LieAlgebra, V: Representation) -> None:
    if V.algebra is not L and V.algebra != L:
        raise AmbientMismatch("module is over a different algebra")


@lru_cache(maxsize=512)
def differential_matrix(L: LieAlgebra, V: Representation, n: int) -> Matrix:
    """Matrix of ``d: C^n(L, V) -> C^{n+1}(L, V)``.

    ``(d w)(x_0..x_n) = sum_i (-1)^i x_i . w(..^x_i..)
    + sum_{i<j} (-1)^{i+j} w([x_i, x_j], ..^x_i..^x_j..)``
    """
    _check_degree(L, n)
    _check_module(L, V)
    d, m = L.dim, V.dim
    src = _tuple_index(d, n)
    targets = basis_tuples(d, n + 1)
    ncols = len(src) * m
    rows = []
    for T in targets:
        block = [[ZERO] * ncols for _ in range(m)]
        for i, t in enumerate(T):
            col0 = src[T[:i] + T[i + 1:]] * m
            rho = V.action[t]
            sgn = -1 if i % 2 else 1
            for a in range(m):
                r = rho.row(a)
                row = block[a]
                for b in range(m):
                    if r[b]:
                        row[col0 + b] += sgn * r[b]
        for i, j in combinations(range(len(T)), 2):
            rest = T[:i] + T[i + 1:j] + T[j + 1:]
            sgn = -1 if (i + j) % 2 else 1
            for k, c in enumerate(L.bracket_basis(T[i], T[j])):
                if not c:
                    continue
                ins = _insert_sorted(rest, k)
                if ins is None:
                    continue
                S, s = ins
                col0 = src[S] * m
                coeff = sgn * s * c
                for a in range(m):
                    block[a][col0 + a] += coeff
        rows.extend(block)
    return Matrix.from_rows(rows, ncols)


def _column_vectors(M: Matrix) -> list[tuple]:
    return [M.col(j) for j in range(M.cols)]


@lru_cache(maxsize=512)
def cohomology(L: LieAlgebra, V: Representation, n: int) -> CohomologyResult:
    """``H^n(L, V)`` with deterministic representatives.

    Representatives: kernel basis vectors of ``d_n`` in order, each reduced
    against the echelon basis of the coboundaries (and of the earlier
    representatives); the nonzero remainders are kept.
    """
    _check_degree(L, n)
    _check_module(L, V)
    space = CochainSpace(L, V, n)
    dn = differential_matrix(L, V, n)
    if n + 1 <= L.dim and not (differential_matrix(L, V, n + 1) @ dn).is_zero():
        raise ContractViolation(f"d_{n + 1} d_{n} != 0")
    Z = kernel_rows(dn.to_rows(), dn.cols)
    if n > 0:
        dprev = differential_matrix(L, V, n - 1)
        if not (dn @ dprev).is_zero():
            raise ContractViolation(f"d_{n} d_{n - 1} != 0")
        B_span = _column_vectors(dprev)
    else:
        B_span = []
    red = EchelonReducer(space.dim, B_span)
    dim_B = len(red)
    coboundary_basis = tuple(Cochain(space, r) for r in red.rows)
    reps = []
    for z in Z:
        w = red.reduce(z)
        if any(w):
            red.add(w)
            reps.append(Cochain(space, w))
    if len(reps) != len(Z) - dim_B:
        raise ContractViolation("coboundaries are not contained in the cocycles")
    return CohomologyResult(n, len(Z), dim_B, len(Z) - dim_B, tuple(reps), coboundary_basis)


def h_dim(L: LieAlgebra, V: Representation, n: int) -> int:
    """``dim H^n``, taking the zero complex outside degrees 0..dim L."""
    if n < 0 or n > L.dim:
        return 0
    return cohomology(L, V, n).dim_H


def is_cocycle(w: Cochain) -> bool:
    L, V, n = w.space.algebra, w.space.module, w.degree
    if n == L.dim:
        return True
    return not any(differential_matrix(L, V, n).apply(w.coords))


def coboundary(phi: Cochain) -> Cochain:
    L, V, n = phi.space.algebra, phi.space.module, phi.degree
    return Cochain(CochainSpace(L, V, n + 1), differential_matrix(L, V, n).apply(phi.coords))


def is_coboundary(L: LieAlgebra, V: Representation, w: Cochain) -> Cochain | None:
    """A preimage ``phi`` with ``d phi = w``, or None when w is not a coboundary.

    The "no" answer is exact: the linear system is inconsistent, i.e.
    appending w raises the rank of ``d_{n-1}``.
    """
    n = w.degree
    _check_degree(L, n)
    if not is_cocycle(w):
        raise NotACocycle("cochain is not a cocycle")
    if n == 0:
        return Cochain(CochainSpace(L, V, -1), ()) if w.is_zero() else None
    x = solve(differential_matrix(L, V, n - 1), w.coords)
    if x is None:
        return None
    return Cochain(CochainSpace(L, V, n - 1), x)


# -- actions on the cohomology of an ideal ---------------------------------

def cochain_action_matrix(L: LieAlgebra, I: Subspace, V: Representation, n: int,
                          x: Sequence) -> Matrix:
    """Action of ``x`` (normalizing I) on ``C^n(I, V)``, I in its echelon basis.

    ``(x.w)(a_1..a_n) = x.w(a_1..a_n) - sum_i w(a_1..[x, a_i]..a_n)``
    """
    di, m = I.dim, V.dim
    ad_cols = [I.coords(L.bracket_vec(x, v)) for v in I.vectors]
    rho = V.act(x)
    idx = _tuple_index(di, n)
    size = len(idx) * m
    rows = []
    for S in basis_tuples(di, n):
        block = [[ZERO] * size for _ in range(m)]
        c0 = idx[S] * m
        for a in range(m):
            r = rho.row(a)
            for b in range(m):
                if r[b]:
                    block[a][c0 + b] += r[b]
        for p, s in enumerate(S):
            rest = S[:p] + S[p + 1:]
            for k, coef in enumerate(ad_cols[s]):
                if not coef:
                    continue
                ins = _insert_sorted(rest, k)
                if ins is None:
                    continue
                T, sgn = ins
                # moving k from slot p to its sorted slot: sign of the insertion
                # relative to slot p is sgn * (-1)^p
                sign = sgn * (-1 if p % 2 else 1)
                col0 = idx[T] * m
                for a in range(m):
                    block[a][col0 + a] -= sign * coef
        rows.extend(block)
    return Matrix.from_rows(rows, size)


def _ideal_setup(L: LieAlgebra, I: Subspace, V: Representation):
    if I.ambient is not L and I.ambient != L:
        raise NotAnIdeal("subspace is not in this algebra")
    if not is_ideal(I):
        raise NotAnIdeal("subspace is not an ideal")
    Ialg, _ = subalgebra_restrict(I)
    return Ialg, restrict(V, I)


def element_action_on_cohomology(L: LieAlgebra, I: Subspace, V: Representation, n: int,
                                 x: Sequence) -> Matrix:
    """Matrix of the endomorphism of ``H^n(I, V)`` induced by ``x``.

    Column j holds the coordinates of ``x . r_j`` in the representative
    basis ``r_1..r_h`` (modulo coboundaries).
    """
    x = tuple(getattr(x, "coords", x))
    Ialg, VI = _ideal_setup(L, I, V)
    res = cohomology(Ialg, VI, n)
    X = cochain_action_matrix(L, I, V, n, x)
    reps = [r.coords for r in res.representatives]
    cob = [b.coords for b in res.coboundary_basis]
    cob_red = EchelonReducer(X.cols, cob)
    for b in cob:
        if any(cob_red.reduce(X.apply(b))):
            raise ContractViolation("action does not preserve coboundaries")
    h = len(reps)
    if h == 0:
        return Matrix.zeros(0, 0)
    basis = Matrix.from_columns(reps + cob, X.cols)
    cols = []
    for r in reps:
        y = X.apply(r)
        if n < Ialg.dim and any(differential_matrix(Ialg, VI, n).apply(y)):
            raise ContractViolation("action does not preserve cocycles")
        c = solve(basis, y)
        if c is None:
            raise ContractViolation("image of a cocycle left the cocycle space")
        cols.append(c[:h])
    return Matrix.from_columns(cols, h)


def invariant_cohomology_dim(L: LieAlgebra, I: Subspace, V: Representation, n: int,
                             x: Sequence) -> int:
    """``dim H^n(I, V)^x``; zero outside degrees 0..dim I."""
    if n < 0 or n > I.dim:
        return 0
    M = element_action_on_cohomology(L, I, V, n, x)
    return M.cols - rank(M)


def cohomology_as_quotient_module(L: LieAlgebra, I: Subspace, V: Representation,
                                  q: int) -> Representation:
    """``H^q(I, V)`` as a module over ``L / I`` (coset representatives act)."""
    Q, _ = quotient(L, I)
    if q < 0 or q > I.dim:
        return Representation(Q, 0, tuple(Matrix.zeros(0, 0) for _ in range(Q.dim)))
    reps = I.complement_basis()
    action = tuple(element_action_on_cohomology(L, I, V, q, r) for r in reps)
    h = action[0].rows if action else cohomology(*_ideal_setup(L, I, V), q).dim_H
    W = Representation(Q, h, action)
    if validate_rep(W) is not None:
        raise ContractViolation("induced action on cohomology is not a representation")
    return W


def subalgebra_module_on_cohomology(L: LieAlgebra, I: Subspace, V: Representation, n: int,
                                    A: Subspace) -> Representation:
    """``H^n(I, V)`` as a module over a subalgebra A (in A's echelon basis)."""
    Aalg, _ = subalgebra_restrict(A)
    Ialg, VI = _ideal_setup(L, I, V)
    h = cohomology(Ialg, VI, n).dim_H
    action = tuple(element_action_on_cohomology(L, I, V, n, a) for a in A.vectors)
    W = Representation(Aalg, h, action)
    if validate_rep(W) is not None:
        raise ContractViolation("induced action on cohomology is not a representation")
    return W


def cochain_from_values(L: LieAlgebra, V: Representation, n: int, values: dict) -> Cochain:
    """Cochain from ``{sorted tuple: module vector}``; missing tuples are zero."""
    space = CochainSpace(L, V, n)
    coords = [ZERO] * space.dim
    for t, vals in values.items():
        for a, c in enumerate(vals):
            coords[space.coordinate(t, a)] = c
    return Cochain(space, tuple(coords))


def wedge_functional(L: LieAlgebra, V: Representation, t: tuple, a: int = 0) -> Cochain:
    """The cochain ``e_t* (x) v_a`` (one wedge of dual basis vectors)."""
    space = CochainSpace(L, V, len(t))
    return Cochain(space, unit_vec(space.dim, space.coordinate(t, a)))
