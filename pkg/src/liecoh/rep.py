"""Finite-dimensional representations given by action matrices."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

from .errors import AmbientMismatch, InvalidInput
from .exactlin import ZERO, Matrix, echelon_basis, kron, kernel_rows
from .liealg import LieAlgebra, LinearMap, Subspace, subalgebra_restrict


@dataclass(frozen=True)
class Representation:
    algebra: LieAlgebra
    dim: int
    action: tuple  # one dim x dim Matrix per basis element of the algebra

    def __post_init__(self):
        if len(self.action) != self.algebra.dim:
            raise InvalidInput("need one action matrix per basis element")
        for m in self.action:
            if m.shape != (self.dim, self.dim):
                raise InvalidInput("action matrix has wrong shape")

    def act(self, x: Sequence) -> Matrix:
        """Matrix of the element with coordinates ``x``."""
        out = Matrix.zeros(self.dim, self.dim)
        for a, m in zip(x, self.action):
            if a:
                out = out + m.scale(a)
        return out

    def is_trivial(self) -> bool:
        return all(m.is_zero() for m in self.action)


def trivial(L: LieAlgebra, dim: int = 1) -> Representation:
    return Representation(L, dim, tuple(Matrix.zeros(dim, dim) for _ in range(L.dim)))


def adjoint(L: LieAlgebra) -> Representation:
    return Representation(L, L.dim, tuple(L.ad_basis(i) for i in range(L.dim)))


def dual(V: Representation) -> Representation:
    return Representation(V.algebra, V.dim, tuple(-m.transpose() for m in V.action))


def _same_algebra(a: LieAlgebra, b: LieAlgebra) -> None:
    if a is not b and a != b:
        raise AmbientMismatch("modules are over different algebras")


def tensor(V: Representation, W: Representation) -> Representation:
    """``V (x) W`` with basis ``(a, b) -> a * W.dim + b``."""
    _same_algebra(V.algebra, W.algebra)
    iv, iw = Matrix.identity(V.dim), Matrix.identity(W.dim)
    action = tuple(kron(a, iw) + kron(iv, b) for a, b in zip(V.action, W.action))
    return Representation(V.algebra, V.dim * W.dim, action)


def outer_tensor(V: Representation, W: Representation, algebra: LieAlgebra) -> Representation:
    """Module over ``algebra = A (+) B``: A acts on the first factor, B on the second."""
    if algebra.dim != V.algebra.dim + W.algebra.dim:
        raise InvalidInput("algebra is not the direct sum of the module algebras")
    iv, iw = Matrix.identity(V.dim), Matrix.identity(W.dim)
    action = [kron(a, iw) for a in V.action] + [kron(iv, b) for b in W.action]
    return Representation(algebra, V.dim * W.dim, tuple(action))


def restrict(V: Representation, I: Subspace) -> Representation:
    """V as a module over the subalgebra I (in I's echelon basis)."""
    _same_algebra(V.algebra, I.ambient)
    S, _ = subalgebra_restrict(I)
    return Representation(S, V.dim, tuple(V.act(v) for v in I.vectors))


def restrict_along(V: Representation, incl: LinearMap) -> Representation:
    """Pull back along an algebra map into ``V.algebra`` (e.g. an inclusion)."""
    _same_algebra(V.algebra, incl.target)
    m = incl.matrix
    return Representation(incl.source, V.dim,
                          tuple(V.act(m.col(j)) for j in range(incl.source.dim)))


def inflate(V: Representation, projection: LinearMap) -> Representation:
    """Pull a module of ``L/I`` back to L; the ideal acts by zero."""
    _same_algebra(V.algebra, projection.target)
    return restrict_along(V, projection)


def invariants(V: Representation, A: Subspace | None = None) -> list[tuple]:
    """Echelon basis of the joint kernel of the action of A (default: whole algebra)."""
    if A is None:
        mats = list(V.action)
    else:
        _same_algebra(V.algebra, A.ambient)
        mats = [V.act(v) for v in A.vectors]
    rows = [r for m in mats for r in m.to_rows()]
    if not rows:
        return echelon_basis([tuple(1 if i == j else 0 for j in range(V.dim))
                              for i in range(V.dim)], V.dim)
    return echelon_basis(kernel_rows(rows, V.dim), V.dim)


def validate_rep(V: Representation) -> tuple | None:
    """Check ``[rho_i, rho_j] = sum_k c_ijk rho_k``; return the first bad pair or None."""
    L = V.algebra
    for i, j in combinations(range(L.dim), 2):
        a, b = V.action[i], V.action[j]
        lhs = a @ b - b @ a
        if lhs != V.act(L.bracket_basis(i, j)):
            return (i, j)
    return None


def same_matrices(V: Representation, W: Representation) -> bool:
    return V.dim == W.dim and V.action == W.action


def character(L: LieAlgebra, weights: Sequence) -> Representation:
    """One-dimensional module where ``e_i`` acts by ``weights[i]``.

    Only a representation when the weights vanish on ``[L, L]``.
    """
    return Representation(L, 1, tuple(Matrix.from_rows([[w]]) for w in weights))


def ideal_module(I: Subspace) -> Representation:
    """An ideal of L as an L-module under ``ad``, in I's echelon basis."""
    L = I.ambient
    mats = []
    for i in range(L.dim):
        e = tuple(ZERO if k != i else 1 for k in range(L.dim))
        cols = [I.coords(L.bracket_vec(e, v)) for v in I.vectors]
        mats.append(Matrix.from_columns(cols, I.dim) if I.dim else Matrix.zeros(0, 0))
    return Representation(L, I.dim, tuple(mats))
