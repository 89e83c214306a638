"""Dimension identities, Whitehead batteries and the 2-triviality classifier.

``classify`` follows the structure of the proof that an algebra with
vanishing second cohomology in every finite-dimensional module is one
dimensional, semisimple, or semisimple plus a line.  Whenever a branch
concludes "not 2-trivial" the classifier builds an explicit module and a
2-cocycle that is not a coboundary, and re-checks it before returning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import prod

from .cohomology import (
    Cochain, CochainSpace, cohomology, cohomology_as_quotient_module,
    differential_matrix, h_dim, invariant_cohomology_dim, is_coboundary,
    subalgebra_module_on_cohomology,
)
from .errors import ContractViolation, InvalidInput
from .exactlin import ZERO, Matrix, kernel_rows, solve, unit_vec
from .liealg import (
    LieAlgebra, LinearMap, Subspace, derived_algebra, direct_sum, is_ideal,
    is_subalgebra, quotient, subalgebra_restrict, validate,
)
from .rep import (
    Representation, adjoint, character, dual, ideal_module, inflate, outer_tensor,
    restrict_along, same_matrices, tensor, trivial, validate_rep,
)
from .structure import (
    codim1_ideal_containing_derived, is_semisimple, levi, radical,
    subspace_is_nilpotent, is_nilpotent,
)

ONE_DIMENSIONAL = "one_dimensional"
SEMISIMPLE = "semisimple"
SEMISIMPLE_PLUS_LINE = "semisimple_plus_line"
WITNESS = "witness"
ZERO_DIMENSIONAL = "zero_dimensional"

PROVENANCES = ("abelian-trivial-K", "codim1-nonsplit", "nilradical-dual", "kunneth-lift")


# -- reports ---------------------------------------------------------------

@dataclass(frozen=True)
class IdentityReport:
    """Both sides of a dimension identity, computed independently."""

    name: str
    lhs: int
    rhs: int
    terms: dict
    params: dict = field(default_factory=dict)

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class BatteryRow:
    name: str
    dim: int
    h1: int
    h2: int


@dataclass(frozen=True)
class BatteryReport:
    rows: tuple

    @property
    def holds(self) -> bool:
        return all(r.h1 == 0 and r.h2 == 0 for r in self.rows)


@dataclass(frozen=True)
class NilpotentReport:
    h_dims: tuple  # dim H^n(L, K) for n = 0..dim L
    bound_ge2: dict  # n -> dim H^n >= 2, for 0 < n <= dim L

    @property
    def h2(self) -> int:
        return self.h_dims[2]

    @property
    def holds(self) -> bool:
        return self.h2 >= 1


@dataclass(frozen=True)
class WitnessCertificate:
    module: Representation
    cocycle: Cochain
    h2_dim: int
    provenance: str


@dataclass(frozen=True)
class Verdict:
    case: str
    decomposition: dict | None = None
    witness: WitnessCertificate | None = None

    def __post_init__(self):
        if (self.case == WITNESS) != (self.witness is not None):
            raise ContractViolation("witness present iff case is witness")

    @property
    def two_trivial(self) -> bool:
        return self.case != WITNESS


@dataclass(frozen=True)
class CertificateCheck:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ProbeResult:
    found: bool
    tried: tuple
    name: str = ""
    module: Representation | None = None
    cocycle: Cochain | None = None
    h1_dim: int = 0


# -- dimension identities --------------------------------------------------

def verify_dixmier(L: LieAlgebra, I: Subspace, x, V: Representation, n: int) -> IdentityReport:
    """``dim H^n(L,V) = dim H^n(I,V)^x + dim H^{n-1}(I,V)^x`` for a codim-1 ideal I."""
    x = tuple(getattr(x, "coords", x))
    if not is_ideal(I):
        raise InvalidInput("I is not an ideal")
    if I.codim != 1:
        raise InvalidInput("I does not have codimension 1")
    if I.contains(x):
        raise InvalidInput("x lies in I")
    top = invariant_cohomology_dim(L, I, V, n, x)
    low = invariant_cohomology_dim(L, I, V, n - 1, x)
    return IdentityReport("dixmier", h_dim(L, V, n), top + low,
                          {"H^n(I,V)^x": top, "H^{n-1}(I,V)^x": low}, {"n": n})


def _check_split(L: LieAlgebra, S: Subspace, I: Subspace) -> None:
    if not is_subalgebra(S):
        raise InvalidInput("S is not a subalgebra")
    if not is_ideal(I):
        raise InvalidInput("I is not an ideal")
    if S.dim + I.dim != L.dim or (S + I).dim != L.dim:
        raise InvalidInput("L is not S + I as a vector space")


def verify_hs_degeneration(L: LieAlgebra, S: Subspace, I: Subspace, V: Representation,
                           degree: int = 2) -> IdentityReport:
    """``dim H^n(L,V) = sum_{p+q=n} dim H^p(L/I, H^q(I,V))`` for ``L = S (+) I``."""
    _check_split(L, S, I)
    terms = {}
    for q in range(degree, -1, -1):
        p = degree - q
        M = cohomology_as_quotient_module(L, I, V, q)
        terms[f"E2[{p},{q}]"] = h_dim(M.algebra, M, p)
    return IdentityReport("hs", h_dim(L, V, degree), sum(terms.values()), terms,
                          {"n": degree})


def verify_kunneth(A: LieAlgebra, B: LieAlgebra, VA: Representation, VB: Representation,
                   n: int) -> IdentityReport:
    """``dim H^n(A+B, VA#VB) = sum_{p+q=n} dim H^p(A,VA) dim H^q(B,VB)``."""
    L = direct_sum(A, B)
    V = outer_tensor(VA, VB, L)
    terms = {}
    for p in range(n + 1):
        terms[f"H^{p}(A)*H^{n - p}(B)"] = h_dim(A, VA, p) * h_dim(B, VB, n - p)
    return IdentityReport("kunneth", h_dim(L, V, n), sum(terms.values()), terms, {"n": n})


def check_nilpotent_h2(L: LieAlgebra) -> NilpotentReport:
    if L.dim <= 1:
        raise InvalidInput("needs dimension > 1")
    if not is_nilpotent(L):
        raise InvalidInput("algebra is not nilpotent")
    K = trivial(L)
    dims = tuple(h_dim(L, K, n) for n in range(L.dim + 1))
    if dims[2] < 1:
        raise ContractViolation("nilpotent algebra of dimension > 1 with H^2(L,K) = 0")
    return NilpotentReport(dims, {n: dims[n] >= 2 for n in range(1, L.dim + 1)})


# -- module batteries ------------------------------------------------------

def _add_unique(pool: list, name: str, V: Representation, cap: int) -> None:
    if V.dim > cap or V.dim == 0:
        return
    if any(same_matrices(V, W) for _, W in pool):
        return
    pool.append((name, V))


def battery(L: LieAlgebra, max_module_dim: int = 16, extra=()) -> list[tuple[str, Representation]]:
    """Trivial, adjoint and any extra modules with their duals, plus tensor words.

    Tensor words are multisets of up to three nontrivial seeds; modules are
    deduplicated by matrix equality and capped at ``max_module_dim``.
    """
    level0: list = []
    seeds = [("K", trivial(L)), ("ad", adjoint(L))] + list(extra)
    for name, V in seeds:
        _add_unique(level0, name, V, max_module_dim)
        _add_unique(level0, f"{name}*", dual(V), max_module_dim)
    pool = list(level0)
    nontrivial = [(n, V) for n, V in level0 if not V.is_trivial()]
    for length in (2, 3):
        for word in combinations_with_replacement(range(len(nontrivial)), length):
            if prod(nontrivial[i][1].dim for i in word) > max_module_dim:
                continue
            name, V = nontrivial[word[0]]
            for i in word[1:]:
                name, V = f"{name}(x){nontrivial[i][0]}", tensor(V, nontrivial[i][1])
            _add_unique(pool, name, V, max_module_dim)
    return pool


def whitehead_battery(L: LieAlgebra, max_module_dim: int = 16, extra=()) -> BatteryReport:
    if not is_semisimple(L):
        raise InvalidInput("algebra is not semisimple")
    if L.dim == 0:
        return BatteryReport(())
    rows = []
    for name, V in battery(L, max_module_dim, extra):
        rows.append(BatteryRow(name, V.dim, h_dim(L, V, 1), h_dim(L, V, 2)))
    return BatteryReport(tuple(rows))


def _probe_candidates(L: LieAlgebra, max_module_dim: int, extra) -> list:
    cands = [("K", trivial(L))]
    D = derived_algebra(L)
    # characters: functionals vanishing on [L, L]
    functionals = (kernel_rows(list(D.vectors), L.dim) if D.dim
                   else [unit_vec(L.dim, j) for j in range(L.dim)])
    for k, f in enumerate(functionals):
        cands.append((f"chi{k}", character(L, f)))
    R = radical(L)
    if 0 < R.dim:
        cands.append(("rad", ideal_module(R)))
        cands.append(("rad*", dual(ideal_module(R))))
    if 0 < D.dim < L.dim:
        cands.append(("[L,L]", ideal_module(D)))
    if 0 < R.dim < L.dim:
        Q, proj = quotient(L, R)
        cands.append(("infl ad(L/rad)", inflate(adjoint(Q), proj)))
    cands.extend(battery(L, max_module_dim, extra))
    out: list = []
    for name, V in cands:
        _add_unique(out, name, V, max_module_dim)
    return out


def first_whitehead_probe(L: LieAlgebra, max_module_dim: int = 16, extra=()) -> ProbeResult:
    """Search a finite family of modules for one with ``H^1(L, V) != 0``.

    Not finding one is not a refutation of anything; the family is finite.
    """
    if is_semisimple(L):
        raise InvalidInput("algebra is semisimple")
    tried = []
    for name, V in _probe_candidates(L, max_module_dim, extra):
        tried.append(name)
        res = cohomology(L, V, 1)
        if res.dim_H:
            return ProbeResult(True, tuple(tried), name, V, res.representatives[0], res.dim_H)
    return ProbeResult(False, tuple(tried))


# -- certificates ----------------------------------------------------------

def verify_certificate(L: LieAlgebra, w: WitnessCertificate) -> CertificateCheck:
    """Re-check a witness from scratch (no cached differentials)."""
    V = w.module
    if V.algebra != L:
        return CertificateCheck(False, "module is over a different algebra")
    if validate(L) is not None:
        return CertificateCheck(False, "algebra fails the Jacobi identity")
    if validate_rep(V) is not None:
        return CertificateCheck(False, "module action is not a representation")
    sp = w.cocycle.space
    if sp.degree != 2 or sp.algebra != L or not same_matrices(sp.module, V):
        return CertificateCheck(False, "cocycle is not a 2-cochain with values in the module")
    if L.dim < 2:
        return CertificateCheck(False, "no nonzero 2-cochains on an algebra of dim < 2")
    build = differential_matrix.__wrapped__
    if L.dim > 2 and any(build(L, V, 2).apply(w.cocycle.coords)):
        return CertificateCheck(False, "cochain is not a cocycle")
    if solve(build(L, V, 1), w.cocycle.coords) is not None:
        return CertificateCheck(False, "cocycle is a coboundary")
    if w.h2_dim < 1:
        return CertificateCheck(False, "reported dim H^2 is zero")
    if w.provenance not in PROVENANCES:
        return CertificateCheck(False, f"unknown provenance {w.provenance!r}")
    return CertificateCheck(True)


# -- classifier ------------------------------------------------------------

def _projection(L: LieAlgebra, keep: list, drop: list, target: LieAlgebra) -> LinearMap:
    """Linear map ``L -> target`` reading off coordinates on ``keep`` in basis keep + drop."""
    M = Matrix.from_columns(keep + drop, L.dim)
    cols = []
    for i in range(L.dim):
        c = solve(M, unit_vec(L.dim, i))
        if c is None:
            raise ContractViolation("basis does not span the algebra")
        cols.append(c[:len(keep)])
    return LinearMap(L, target, Matrix.from_columns(cols, len(keep)))


def pullback_cocycle(w: Cochain, pi: LinearMap, V: Representation) -> Cochain:
    """``(pi^* w)(u, v) = w(pi u, pi v)`` for a 2-cochain w on ``pi.target``."""
    L, m = pi.source, V.dim
    P = pi.matrix
    space = CochainSpace(L, V, 2)
    coords = []
    src_pairs = w.space.index
    for i, j in space.index:
        val = [ZERO] * m
        for (k, l) in src_pairs:
            c = P[k, i] * P[l, j] - P[l, i] * P[k, j]
            if c:
                for a, y in enumerate(w.value((k, l))):
                    val[a] += c * y
        coords.extend(val)
    return Cochain(space, tuple(coords))


def _emit(L: LieAlgebra, V: Representation, provenance: str, cocycle: Cochain | None = None
          ) -> Verdict:
    res = cohomology(L, V, 2)
    if res.dim_H < 1:
        raise ContractViolation(f"{provenance}: expected H^2(L, V) != 0")
    w = WitnessCertificate(V, cocycle if cocycle is not None else res.representatives[0],
                           res.dim_H, provenance)
    check = verify_certificate(L, w)
    if not check:
        raise ContractViolation(f"{provenance}: certificate rejected: {check.reason}")
    return Verdict(WITNESS, None, w)


def classify(L: LieAlgebra) -> Verdict:
    """Decide 2-triviality, returning the shape or a checked witness."""
    bad = validate(L)
    if bad is not None:
        raise InvalidInput(f"not a Lie algebra: {bad}")
    return _classify(L)


def _classify(L: LieAlgebra) -> Verdict:
    if L.dim == 0:
        return Verdict(ZERO_DIMENSIONAL)
    if L.dim == 1:
        return Verdict(ONE_DIMENSIONAL)
    R = radical(L)
    if R.dim == 0:
        return Verdict(SEMISIMPLE, {"semisimple": list(L.whole().vectors)})
    if derived_algebra(L).dim == L.dim:
        return _perfect_branch(L, R)
    return _codim1_branch(L)


def _perfect_branch(L: LieAlgebra, R: Subspace) -> Verdict:
    # perfect with nonzero radical: Rad(L) is nilpotent of dim > 1, H^2(Rad, K) != 0
    if not subspace_is_nilpotent(R):
        raise ContractViolation("radical of a perfect algebra is not nilpotent")
    if R.dim < 2:
        raise ContractViolation("radical of a perfect algebra is one-dimensional")
    Ralg, _ = subalgebra_restrict(R)
    if cohomology(Ralg, trivial(Ralg), 2).dim_H < 1:
        raise ContractViolation("H^2(Rad(L), K) vanishes for a nilpotent radical")
    S = levi(L).S
    Salg, _ = subalgebra_restrict(S)
    W = subalgebra_module_on_cohomology(L, R, trivial(L), 2, S)
    pi = _projection(L, list(S.vectors), list(R.vectors), Salg)
    V = restrict_along(dual(W), pi)
    if validate_rep(V) is not None:
        raise ContractViolation("extension of the dual module to L is not a representation")
    return _emit(L, V, "nilradical-dual")


def _codim1_branch(L: LieAlgebra) -> Verdict:
    found = codim1_ideal_containing_derived(L)
    if found is None:
        raise ContractViolation("non-perfect algebra without a codimension-1 ideal")
    I, xe = found
    x = xe.coords
    Ialg, incl = subalgebra_restrict(I)
    adI = adjoint(Ialg)
    omega = Cochain(CochainSpace(Ialg, adI, 1),
                    tuple(c for v in I.vectors for c in I.coords(L.bracket_vec(x, v))))
    phi = is_coboundary(Ialg, adI, omega)
    if phi is None:
        # ad x gives a nonzero x-invariant class in H^1(I, I) inside H^2(L, I)
        return _emit(L, ideal_module(I), "codim1-nonsplit")
    # [x + phi, I] = 0, so L = I (+) K x'
    xp = tuple(a + b for a, b in zip(x, incl(phi.coords)))
    if any(any(L.bracket_vec(xp, v)) for v in I.vectors):
        raise ContractViolation("corrected x does not centralize I")
    sub = _classify(Ialg)
    if sub.case == ONE_DIMENSIONAL:
        return _emit(L, trivial(L), "abelian-trivial-K")
    if sub.case == SEMISIMPLE:
        return Verdict(SEMISIMPLE_PLUS_LINE,
                       {"line": [xp], "semisimple": list(I.vectors)})
    if sub.case == SEMISIMPLE_PLUS_LINE:
        return _emit(L, trivial(L), "abelian-trivial-K")
    if sub.case == WITNESS:
        pi = _projection(L, list(I.vectors), [xp], Ialg)
        wI = sub.witness
        V = restrict_along(wI.module, pi)
        cocycle = pullback_cocycle(wI.cocycle, pi, V)
        return _emit(L, V, "kunneth-lift", cocycle)
    raise ContractViolation(f"unexpected sub-verdict {sub.case}")
