"""Lie algebras given by structure constants over the rationals."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from .errors import AmbientMismatch, InvalidInput, NotAnIdeal, NotClosed
from .exactlin import (
    ZERO, Matrix, combine, coordinates, echelon_basis, in_span, is_zero_vec,
    pivot_columns, quotient_basis, unit_vec, zero_vec,
)


def _pair_index(i: int, j: int, n: int) -> int:
    # position of (i, j), i < j, in combinations(range(n), 2)
    return i * n - i * (i + 1) // 2 + (j - i - 1)


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``[e_i, e_j] = sum_k c[i][j][k] e_k``.

    Only pairs ``i < j`` are stored (in ``combinations`` order); the rest
    follows from antisymmetry, so antisymmetry cannot be violated.  The
    Jacobi identity is checked by :func:`validate`.
    """

    dim: int
    constants: tuple  # one dim-tuple of Fractions per pair i < j
    name: str = field(default="", compare=False)
    basis_names: tuple = field(default=(), compare=False)

    def __post_init__(self):
        npairs = self.dim * (self.dim - 1) // 2
        if len(self.constants) != npairs:
            raise InvalidInput("wrong number of bracket pairs")
        for v in self.constants:
            if len(v) != self.dim:
                raise InvalidInput("bracket vector has wrong length")
        if not self.basis_names:
            object.__setattr__(self, "basis_names", tuple(f"e{i}" for i in range(self.dim)))
        elif len(self.basis_names) != self.dim:
            raise InvalidInput("basis label count does not match dim")

    @classmethod
    def from_brackets(cls, dim: int, brackets: Mapping[tuple[int, int], Mapping[int, object]],
                      name: str = "", basis_names: Sequence[str] = ()) -> "LieAlgebra":
        """Build from ``{(i, j): {k: c}}``; pairs with ``i > j`` are flipped with a sign."""
        table = {pair: [ZERO] * dim for pair in combinations(range(dim), 2)}
        for (i, j), terms in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise InvalidInput(f"basis index out of range in pair ({i}, {j})")
            if i == j:
                if any(Fraction(c) for c in terms.values()):
                    raise InvalidInput(f"nonzero self-bracket at {i}")
                continue
            sign = 1 if i < j else -1
            row = table[(min(i, j), max(i, j))]
            for k, c in terms.items():
                if not 0 <= k < dim:
                    raise InvalidInput(f"basis index {k} out of range")
                row[k] += sign * Fraction(c)
        return cls(dim, tuple(tuple(table[p]) for p in combinations(range(dim), 2)),
                   name, tuple(basis_names))

    @classmethod
    def abelian(cls, n: int, name: str | None = None) -> "LieAlgebra":
        return cls.from_brackets(n, {}, name if name is not None else f"abelian{n}")

    def bracket_basis(self, i: int, j: int) -> tuple:
        if i == j:
            return zero_vec(self.dim)
        if i < j:
            return self.constants[_pair_index(i, j, self.dim)]
        return tuple(-a for a in self.constants[_pair_index(j, i, self.dim)])

    def c(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket_basis(i, j)[k]

    def bracket_vec(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                ab = a * b
                for k, c in enumerate(self.bracket_basis(i, j)):
                    if c:
                        out[k] += ab * c
        return tuple(out)

    def ad(self, x: Sequence) -> Matrix:
        """Matrix of ``ad x`` in the standard basis (columns are images)."""
        cols = [self.bracket_vec(x, unit_vec(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def ad_basis(self, i: int) -> Matrix:
        cols = [self.bracket_basis(i, j) for j in range(self.dim)]
        return Matrix.from_columns(cols, self.dim)

    def is_abelian(self) -> bool:
        return all(is_zero_vec(v) for v in self.constants)

    def element(self, coords: Sequence) -> "Element":
        return Element(self, tuple(Fraction(a) for a in coords))

    def basis_element(self, i: int) -> "Element":
        return Element(self, unit_vec(self.dim, i))

    def whole(self) -> "Subspace":
        return Subspace.span(self, [unit_vec(self.dim, i) for i in range(self.dim)])

    def zero(self) -> "Subspace":
        return Subspace(self, ())

    def __repr__(self) -> str:
        return f"LieAlgebra({self.name or '?'}, dim={self.dim})"


@dataclass(frozen=True)
class Element:
    ambient: LieAlgebra
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.ambient.dim:
            raise InvalidInput("coordinate length does not match algebra dimension")


@dataclass(frozen=True)
class Subspace:
    """Subspace of a Lie algebra, stored as a reduced echelon basis."""

    ambient: LieAlgebra
    vectors: tuple

    @classmethod
    def span(cls, ambient: LieAlgebra, vectors: Sequence[Sequence]) -> "Subspace":
        for v in vectors:
            if len(v) != ambient.dim:
                raise InvalidInput("vector length does not match algebra dimension")
        return cls(ambient, tuple(echelon_basis(list(vectors), ambient.dim)))

    @property
    def dim(self) -> int:
        return len(self.vectors)

    @property
    def codim(self) -> int:
        return self.ambient.dim - self.dim

    @property
    def pivots(self) -> list[int]:
        return pivot_columns(self.vectors, self.ambient.dim)

    def contains(self, v: Sequence) -> bool:
        return in_span(v, self.vectors, self.ambient.dim)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.vectors)

    def coords(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` in this subspace's echelon basis."""
        if not self.contains(v):
            raise InvalidInput("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def complement_basis(self) -> list[tuple]:
        return quotient_basis(self.vectors, self.ambient.dim)

    def __add__(self, other: "Subspace") -> "Subspace":
        _check_same(self.ambient, other.ambient)
        return Subspace.span(self.ambient, list(self.vectors) + list(other.vectors))


# -- validity --------------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    kind: str  # "jacobi" | "antisymmetry"
    indices: tuple
    value: tuple

    def __str__(self) -> str:
        return f"{self.kind} violated at {self.indices}: {self.value}"


def validate(L: LieAlgebra) -> Violation | None:
    """Check the Jacobi identity on every basis triple; None means valid."""
    n = L.dim
    for i, j, l in combinations(range(n), 3):
        s = [ZERO] * n
        for a, b, c in ((i, j, l), (j, l, i), (l, i, j)):
            ab = L.bracket_basis(a, b)
            for k, x in enumerate(ab):
                if x:
                    for m, y in enumerate(L.bracket_basis(k, c)):
                        if y:
                            s[m] += x * y
        if any(s):
            return Violation("jacobi", (i, j, l), tuple(s))
    return None


# -- operations ------------------------------------------------------------

def _check_same(a: LieAlgebra, b: LieAlgebra) -> None:
    if a is not b and a != b:
        raise AmbientMismatch("elements belong to different algebras")


def bracket(x: Element, y: Element) -> Element:
    _check_same(x.ambient, y.ambient)
    return Element(x.ambient, x.ambient.bracket_vec(x.coords, y.coords))


def product_space(A: Subspace, B: Subspace) -> Subspace:
    """Span of ``[a, b]`` over basis vectors of A and B."""
    _check_same(A.ambient, B.ambient)
    L = A.ambient
    return Subspace.span(L, [L.bracket_vec(a, b) for a in A.vectors for b in B.vectors])


def derived_algebra(L: LieAlgebra) -> Subspace:
    W = L.whole()
    return product_space(W, W)


def is_ideal(I: Subspace) -> bool:
    L = I.ambient
    return all(I.contains(L.bracket_vec(unit_vec(L.dim, i), v))
               for i in range(L.dim) for v in I.vectors)


def is_subalgebra(A: Subspace) -> bool:
    L = A.ambient
    return all(A.contains(L.bracket_vec(u, v)) for u, v in combinations(A.vectors, 2))


@dataclass(frozen=True)
class LinearMap:
    """Linear map between algebras; ``matrix`` acts on source coordinates."""

    source: LieAlgebra
    target: LieAlgebra
    matrix: Matrix

    def __call__(self, v: Sequence) -> tuple:
        return self.matrix.apply(v)


def quotient(L: LieAlgebra, I: Subspace) -> tuple[LieAlgebra, LinearMap]:
    """``L / I`` on the complement representatives of I, with the projection.

    Basis element ``q`` of the quotient is the coset of the ``q``-th
    complement representative (a standard basis vector of L).
    """
    _check_same(L, I.ambient)
    if not is_ideal(I):
        raise NotAnIdeal("quotient requires an ideal")
    reps = I.complement_basis()
    rep_idx = [next(k for k, a in enumerate(r) if a) for r in reps]
    m = len(reps)
    pivots = I.pivots

    def project(v):
        # subtract the I-component: in echelon form, v - sum v[p] * I_p has
        # zeros at every pivot column; what remains lives on rep columns
        w = list(v)
        for row, p in zip(I.vectors, pivots):
            c = w[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        w[k] -= c * a
        return tuple(w[r] for r in rep_idx)

    brackets = {}
    for a, b in combinations(range(m), 2):
        img = project(L.bracket_basis(rep_idx[a], rep_idx[b]))
        terms = {k: c for k, c in enumerate(img) if c}
        if terms:
            brackets[(a, b)] = terms
    names = [L.basis_names[r] for r in rep_idx]
    Q = LieAlgebra.from_brackets(m, brackets, f"{L.name}/I" if L.name else "", names)
    proj_cols = [project(unit_vec(L.dim, j)) for j in range(L.dim)]
    return Q, LinearMap(L, Q, Matrix.from_columns(proj_cols, m))


def direct_sum(A: LieAlgebra, B: LieAlgebra, name: str | None = None) -> LieAlgebra:
    n = A.dim + B.dim
    brackets = {}
    for i, j in combinations(range(A.dim), 2):
        brackets[(i, j)] = {k: c for k, c in enumerate(A.bracket_basis(i, j)) if c}
    for i, j in combinations(range(B.dim), 2):
        brackets[(A.dim + i, A.dim + j)] = {A.dim + k: c
                                            for k, c in enumerate(B.bracket_basis(i, j)) if c}
    if name is None:
        name = f"{A.name}+{B.name}" if A.name and B.name else ""
    return LieAlgebra.from_brackets(n, brackets, name,
                                    list(A.basis_names) + list(B.basis_names))


def subalgebra_restrict(A: Subspace) -> tuple[LieAlgebra, LinearMap]:
    """The subalgebra A as an algebra in its echelon basis, with the inclusion."""
    if not is_subalgebra(A):
        raise NotClosed("subspace is not closed under the bracket")
    L = A.ambient
    brackets = {}
    for a, b in combinations(range(A.dim), 2):
        img = A.coords(L.bracket_vec(A.vectors[a], A.vectors[b]))
        terms = {k: c for k, c in enumerate(img) if c}
        if terms:
            brackets[(a, b)] = terms
    S = LieAlgebra.from_brackets(A.dim, brackets, f"{L.name}|sub" if L.name else "")
    incl = Matrix.from_columns(list(A.vectors), L.dim) if A.dim else Matrix.zeros(L.dim, 0)
    return S, LinearMap(S, L, incl)


def express(v: Sequence, basis: Sequence[Sequence]) -> tuple:
    """Coordinates of ``v`` in an arbitrary linearly independent list, or raise."""
    c = coordinates(v, list(basis))
    if c is None:
        raise InvalidInput("vector is not in the span of the given basis")
    return c


def lin_comb(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
    return combine(coeffs, vectors, n)
