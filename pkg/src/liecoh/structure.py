"""Killing form, radical, central/derived series and Levi decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cohomology import is_coboundary, Cochain, CochainSpace
from .errors import ContractViolation
from .exactlin import ZERO, Matrix, combine, kernel_rows, solve
from .liealg import (
    Element, LieAlgebra, Subspace, derived_algebra, is_ideal, is_subalgebra,
    product_space, quotient, subalgebra_restrict,
)
from .rep import Representation


@dataclass(frozen=True)
class KillingForm:
    matrix: Matrix

    def __call__(self, x, y) -> Fraction:
        return sum((a * b for a, b in zip(x, self.matrix.apply(y))), ZERO)


def killing(L: LieAlgebra) -> KillingForm:
    ads = [L.ad_basis(i) for i in range(L.dim)]
    rows = [[_trace(ads[i] @ ads[j]) for j in range(L.dim)] for i in range(L.dim)]
    return KillingForm(Matrix.from_rows(rows, L.dim))


def _trace(m: Matrix) -> Fraction:
    return sum((m[i, i] for i in range(m.rows)), ZERO)


def determinant(m: Matrix) -> Fraction:
    """Exact determinant by elimination on rationals."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    a = [list(r) for r in m.to_rows()]
    n = m.rows
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return ZERO
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def derived_series(L: LieAlgebra) -> list[Subspace]:
    """``L, [L,L], [[L,L],[L,L]], ...`` up to the first term that no longer shrinks."""
    return _series_of(L.whole(), lower=False)


def lower_central_series(L: LieAlgebra) -> list[Subspace]:
    """``L, [L,L], [L,[L,L]], ...`` up to the first term that no longer shrinks."""
    return _series_of(L.whole(), lower=True)


def _series_of(A: Subspace, lower: bool) -> list[Subspace]:
    series = [A]
    while True:
        nxt = product_space(A if lower else series[-1], series[-1])
        if nxt.dim == series[-1].dim:
            return series
        series.append(nxt)


def subspace_is_solvable(A: Subspace) -> bool:
    return _series_of(A, lower=False)[-1].dim == 0


def subspace_is_nilpotent(A: Subspace) -> bool:
    return _series_of(A, lower=True)[-1].dim == 0


def is_solvable(L: LieAlgebra) -> bool:
    return derived_series(L)[-1].dim == 0


def is_nilpotent(L: LieAlgebra) -> bool:
    return lower_central_series(L)[-1].dim == 0


def radical(L: LieAlgebra) -> Subspace:
    """Solvable radical: the Killing-orthogonal complement of ``[L, L]``."""
    D = derived_algebra(L)
    K = killing(L).matrix
    rows = [K.apply(y) for y in D.vectors]  # K symmetric: row = kappa(y, -)
    R = Subspace.span(L, kernel_rows(rows, L.dim)) if rows else L.whole()
    if not is_ideal(R) or not subspace_is_solvable(R):
        raise ContractViolation("Killing-orthogonal of [L,L] is not a solvable ideal")
    return R


def is_semisimple(L: LieAlgebra) -> bool:
    """Nonzero Killing determinant; cross-checked against the radical."""
    nondeg = determinant(killing(L).matrix) != 0
    if nondeg != (radical(L).dim == 0):
        raise ContractViolation("Killing determinant disagrees with the radical")
    return nondeg


def center(L: LieAlgebra) -> Subspace:
    rows = [r for i in range(L.dim) for r in L.ad_basis(i).to_rows()]
    return Subspace.span(L, kernel_rows(rows, L.dim)) if rows else L.whole()


# -- Levi decomposition ----------------------------------------------------

@dataclass(frozen=True)
class LeviDecomposition:
    S: Subspace
    R: Subspace
    section: tuple  # element of S over each complement representative of R


def _finish(L: LieAlgebra, S: Subspace, R: Subspace) -> LeviDecomposition:
    reps = R.complement_basis()
    basis = list(S.vectors) + list(R.vectors)
    M = Matrix.from_columns(basis, L.dim) if basis else Matrix.zeros(L.dim, 0)
    section = []
    for e in reps:
        c = solve(M, e)
        if c is None:
            raise ContractViolation("S + R does not span L")
        section.append(combine(c[:S.dim], list(S.vectors), L.dim))
    levi_check(LeviDecomposition(S, R, tuple(section)))
    return LeviDecomposition(S, R, tuple(section))


def levi_check(dec: LeviDecomposition) -> None:
    S, R = dec.S, dec.R
    L = S.ambient
    if S.dim + R.dim != L.dim or (S + R).dim != L.dim:
        raise ContractViolation("S and R are not complementary")
    if not is_subalgebra(S):
        raise ContractViolation("Levi factor is not a subalgebra")
    if not is_ideal(R) or not subspace_is_solvable(R):
        raise ContractViolation("radical is not a solvable ideal")
    Salg, _ = subalgebra_restrict(S)
    if determinant(killing(Salg).matrix) == 0:
        raise ContractViolation("Levi factor is not semisimple")


def _lift(v, reps, n: int) -> tuple:
    return combine(v, reps, n)


def levi(L: LieAlgebra) -> LeviDecomposition:
    """A Levi subalgebra S with ``L = S (+) Rad(L)``, fixed deterministically.

    Abelian radical: correct the complement-representative section by a
    1-cochain solving ``d phi = omega`` for the defect cocycle.  Otherwise
    split ``L / [R, R]`` first and recurse on the preimage of its Levi
    factor, whose radical is ``[R, R]``.
    """
    R = radical(L)
    if R.dim == 0:
        return _finish(L, L.whole(), R)
    if R.dim == L.dim:
        return _finish(L, L.zero(), R)
    RR = product_space(R, R)
    if RR.dim == 0:
        return _finish(L, _split_abelian(L, R), R)
    Lbar, proj = quotient(L, RR)
    Sbar = levi(Lbar).S
    reps = RR.complement_basis()
    P = Subspace.span(L, [_lift(v, reps, L.dim) for v in Sbar.vectors] + list(RR.vectors))
    Palg, incl = subalgebra_restrict(P)
    Sp = levi(Palg).S
    S = Subspace.span(L, [incl(v) for v in Sp.vectors])
    return _finish(L, S, R)


def _split_abelian(L: LieAlgebra, R: Subspace) -> Subspace:
    Q, _ = quotient(L, R)
    reps = R.complement_basis()
    m, r = Q.dim, R.dim
    # R as a Q-module: coset of rep a acts by ad(rep a), in R's echelon basis
    action = []
    for e in reps:
        cols = [R.coords(L.bracket_vec(e, v)) for v in R.vectors]
        action.append(Matrix.from_columns(cols, r))
    M = Representation(Q, r, tuple(action))
    # defect w(a, b) = [s a, s b] - s[a, b]_Q, a 2-cochain with values in R
    space = CochainSpace(Q, M, 2)
    coords = []
    for a, b in space.index:
        lhs = L.bracket_vec(reps[a], reps[b])
        rhs = _lift(Q.bracket_basis(a, b), reps, L.dim)
        coords.extend(R.coords(tuple(x - y for x, y in zip(lhs, rhs))))
    phi = is_coboundary(Q, M, Cochain(space, tuple(coords)))
    if phi is None:
        raise ContractViolation("defect cocycle is not a coboundary")
    vectors = []
    for a, e in enumerate(reps):
        corr = combine(phi.coords[a * r:(a + 1) * r], list(R.vectors), L.dim)
        vectors.append(tuple(x - y for x, y in zip(e, corr)))
    return Subspace.span(L, vectors)


def codim1_ideal_containing_derived(L: LieAlgebra) -> tuple[Subspace, Element] | None:
    """Hyperplane ideal ``[L,L] + (all but the last complement vector)`` and that last vector."""
    D = derived_algebra(L)
    if D.dim == L.dim:
        return None
    reps = D.complement_basis()
    I = Subspace.span(L, list(D.vectors) + reps[:-1])
    return I, L.element(reps[-1])


def derived_length(A: Subspace) -> int:
    return len(_series_of(A, lower=False)) - 1

