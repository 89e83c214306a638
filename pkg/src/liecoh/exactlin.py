"""Exact linear algebra over the rationals.

Everything else in the package reduces to rank computations done here.
Matrices are dense and immutable; vectors are plain tuples of ``Fraction``.

Elimination is fraction-free: rows are scaled to integers, combined by
integer cross-multiplication and divided by their content, and only the
final echelon rows are turned back into reduced rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction
Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


def parse_rational(text) -> Fraction:
    """Parse the interchange form ``"p"`` or ``"p/q"`` (ints are accepted too)."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"not a rational: {text!r}")
    s = text.strip()
    num, sep, den = s.partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational: {text!r}") from None
    if q <= 0:
        raise ValueError(f"denominator must be positive: {text!r}")
    return Fraction(p, q)


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def _frac(a) -> Fraction:
    return a if type(a) is Fraction else Fraction(a)


def vec(values: Iterable) -> tuple:
    return tuple(Fraction(v) for v in values)


def zero_vec(n: int) -> tuple:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> tuple:
    v = [ZERO] * n
    v[i] = ONE
    return tuple(v)


def is_zero_vec(v: Sequence) -> bool:
    return not any(v)


def add_vec(u: Sequence, v: Sequence) -> tuple:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub_vec(u: Sequence, v: Sequence) -> tuple:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def scale_vec(c, v: Sequence) -> tuple:
    return tuple(c * a for a in v)


def combine(coeffs: Sequence, vectors: Sequence[Sequence], n: int) -> tuple:
    """Linear combination ``sum(c_i * v_i)``; ``n`` is the length of the result."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors, strict=True):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged rows")
        return cls(len(rows), cols, tuple(_frac(a) for r in rows for a in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], rows: int) -> "Matrix":
        return cls.from_rows([[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, (ZERO,) * (rows * cols))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def col(self, j: int) -> tuple:
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self) -> list[tuple]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows,
                      tuple(self.entries[i * self.cols + j]
                            for j in range(self.cols) for i in range(self.rows)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols,
                      tuple(a - b for a, b in zip(self.entries, other.entries)))

    def __neg__(self) -> "Matrix":
        return Matrix(self.rows, self.cols, tuple(-a for a in self.entries))

    def scale(self, c) -> "Matrix":
        c = Fraction(c)
        return Matrix(self.rows, self.cols, tuple(c * a for a in self.entries))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        # sparse row-by-row accumulation; CE matrices are mostly zeros
        onz = [[(j, b) for j, b in enumerate(other.row(k)) if b] for k in range(other.rows)]
        out = []
        for i in range(self.rows):
            acc = [ZERO] * other.cols
            for k, a in enumerate(self.row(i)):
                if a:
                    for j, b in onz[k]:
                        acc[j] += a * b
            out.extend(acc)
        return Matrix(self.rows, other.cols, tuple(out))

    def apply(self, v: Sequence) -> tuple:
        if len(v) != self.cols:
            raise ValueError("vector length does not match matrix")
        nz = [(k, a) for k, a in enumerate(v) if a]
        return tuple(sum((self.entries[i * self.cols + k] * a for k, a in nz), ZERO)
                     for i in range(self.rows))

    def __str__(self) -> str:
        return "\n".join("[" + " ".join(format_rational(a) for a in self.row(i)) + "]"
                         for i in range(self.rows))


def kron(a: Matrix, b: Matrix) -> Matrix:
    """Kronecker product, index order ``(i, k) -> i * b.rows + k``."""
    rows = []
    for i in range(a.rows):
        for k in range(b.rows):
            rows.append([a[i, j] * b[k, l] for j in range(a.cols) for l in range(b.cols)])
    return Matrix.from_rows(rows, a.cols * b.cols)


def hstack(blocks: Sequence[Matrix]) -> Matrix:
    n = blocks[0].rows
    return Matrix.from_rows([[x for b in blocks for x in b.row(i)] for i in range(n)],
                            sum(b.cols for b in blocks))


# -- elimination core ------------------------------------------------------

def _integer_row(row: Sequence) -> list[int]:
    row = [_frac(a) for a in row]
    den = 1
    for a in row:
        if a.denominator != 1:
            den = lcm(den, a.denominator)
    out = [a.numerator * (den // a.denominator) for a in row]
    g = gcd(*out)
    if g > 1:
        out = [x // g for x in out]
    return out


def _eliminate(rows: Sequence[Sequence], ncols: int, reduce_above: bool):
    """Fraction-free elimination.

    Returns integer rows in echelon form (reduced above the pivots too when
    ``reduce_above``) and the pivot column list.  The pivot row for a column
    is the first remaining row with a nonzero entry there.
    """
    work = [r for r in (_integer_row(r) for r in rows) if any(r)]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        p = next((i for i in range(r, len(work)) if work[i][c]), None)
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        a = prow[c]
        targets = range(len(work)) if reduce_above else range(r + 1, len(work))
        for i in targets:
            if i == r:
                continue
            b = work[i][c]
            if not b:
                continue
            g = gcd(a, b)
            ma, mb = a // g, b // g
            new = [ma * x - mb * y for x, y in zip(work[i], prow)]
            h = gcd(*new)
            if h > 1:
                new = [x // h for x in new]
            work[i] = new
        pivots.append(c)
        r += 1
    return work[:r], pivots


def _rref_rows(rows: Sequence[Sequence], ncols: int) -> tuple[list[tuple], list[int]]:
    work, pivots = _eliminate(rows, ncols, reduce_above=True)
    out = []
    for row, c in zip(work, pivots):
        p = row[c]
        out.append(tuple(Fraction(x, p) for x in row))
    return out, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (zero rows kept at the bottom) and pivot columns."""
    rows, pivots = _rref_rows(m.to_rows(), m.cols)
    full = rows + [zero_vec(m.cols)] * (m.rows - len(rows))
    return Matrix(m.rows, m.cols, tuple(a for r in full for a in r)), pivots


def rank_rows(rows: Sequence[Sequence], ncols: int) -> int:
    return len(_eliminate(rows, ncols, reduce_above=False)[1])


def rank(m: Matrix) -> int:
    return rank_rows(m.to_rows(), m.cols)


def _kernel_from_rref(rows: list[tuple], pivots: list[int], ncols: int) -> list[tuple]:
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def kernel_rows(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Null space of the matrix with the given rows; one vector per free column."""
    r, pivots = _rref_rows(rows, ncols)
    return _kernel_from_rref(r, pivots, ncols)


def kernel_basis(m: Matrix) -> list[tuple]:
    return kernel_rows(m.to_rows(), m.cols)


def solve(m: Matrix, b: Sequence) -> tuple | None:
    """A particular solution of ``m x = b`` with free variables zero, or None."""
    if len(b) != m.rows:
        raise ValueError("right-hand side length does not match matrix rows")
    aug = [list(m.row(i)) + [Fraction(b[i])] for i in range(m.rows)]
    rows, pivots = _rref_rows(aug, m.cols + 1)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for row, p in zip(rows, pivots):
        x[p] = row[m.cols]
    return tuple(x)


def echelon_basis(vectors: Sequence[Sequence], n: int) -> list[tuple]:
    """Reduced echelon basis of the span of ``vectors`` in dimension ``n``."""
    return _rref_rows(vectors, n)[0]


def pivot_columns(vectors: Sequence[Sequence], n: int) -> list[int]:
    return _rref_rows(vectors, n)[1]


def quotient_basis(subspace: Sequence[Sequence], ambient_dim: int) -> list[tuple]:
    """Standard basis vectors at the non-pivot columns of the subspace's echelon form."""
    pivots = set(pivot_columns(subspace, ambient_dim))
    return [unit_vec(ambient_dim, j) for j in range(ambient_dim) if j not in pivots]


def in_span(v: Sequence, basis: Sequence[Sequence], n: int) -> bool:
    return rank_rows(list(basis) + [v], n) == rank_rows(basis, n)


def coordinates(v: Sequence, basis: Sequence[Sequence]) -> tuple | None:
    """Coordinates of ``v`` in the (linearly independent) ``basis``, or None."""
    if not basis:
        return () if is_zero_vec(v) else None
    return solve(Matrix.from_columns(basis, len(v)), v)


class EchelonReducer:
    """Incrementally maintained reduced echelon basis.

    ``reduce`` returns the remainder of a vector after clearing every
    pivot column of the current basis; ``add`` inserts a vector (if it is
    independent) keeping the basis fully reduced.
    """

    def __init__(self, n: int, vectors: Iterable[Sequence] = ()):
        self.n = n
        self.rows: list[tuple] = []
        self.pivots: list[int] = []
        for v in echelon_basis(list(vectors), n):
            self.rows.append(v)
            self.pivots.append(next(i for i, a in enumerate(v) if a))

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> tuple:
        w = list(v)
        for row, p in zip(self.rows, self.pivots):
            c = w[p]
            if c:
                for k, a in enumerate(row):
                    if a:
                        w[k] -= c * a
        return tuple(w)

    def add(self, v: Sequence) -> bool:
        w = self.reduce(v)
        p = next((i for i, a in enumerate(w) if a), None)
        if p is None:
            return False
        w = tuple(a / w[p] for a in w)
        for idx, row in enumerate(self.rows):
            c = row[p]
            if c:
                self.rows[idx] = tuple(a - c * b for a, b in zip(row, w))
        self.rows.append(w)
        self.pivots.append(p)
        return True
