from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from conftest import alg
from liecoh import catalog
from liecoh.cohomology import (
    Cochain, CochainSpace, basis_tuples, coboundary, cochain_from_values, cohomology,
    cohomology_as_quotient_module, differential_matrix, element_action_on_cohomology,
    invariant_cohomology_dim, is_coboundary, is_cocycle, wedge_functional,
)
from liecoh.errors import AmbientMismatch, DegreeOutOfRange, NotACocycle, NotAnIdeal
from liecoh.exactlin import Matrix, rank
from liecoh.liealg import LieAlgebra, Subspace
from liecoh.rep import adjoint, character, dual, invariants, tensor, trivial


def _sort_sign(idx):
    idx = list(idx)
    if len(set(idx)) < len(idx):
        return None, 0
    sign = 1
    for i in range(len(idx)):
        for j in range(len(idx) - 1 - i):
            if idx[j] > idx[j + 1]:
                idx[j], idx[j + 1] = idx[j + 1], idx[j]
                sign = -sign
    return tuple(idx), sign


def d_by_definition(L, V, n, coords):
    """Evaluate d(w) straight from the defining formula on every basis tuple."""
    m = V.dim
    tuples = basis_tuples(L.dim, n)
    pos = {t: i for i, t in enumerate(tuples)}

    def w(args):
        t, s = _sort_sign(args)
        if t is None:
            return [F(0)] * m
        base = pos[t] * m
        return [s * coords[base + a] for a in range(m)]

    out = []
    for T in basis_tuples(L.dim, n + 1):
        val = [F(0)] * m
        for i, t in enumerate(T):
            inner = w(T[:i] + T[i + 1:])
            act = V.action[t].apply(inner)
            for a in range(m):
                val[a] += (-1) ** i * act[a]
        for i in range(len(T)):
            for j in range(i + 1, len(T)):
                rest = T[:i] + T[i + 1:j] + T[j + 1:]
                for k, c in enumerate(L.bracket_basis(T[i], T[j])):
                    if c:
                        inner = w((k,) + rest)
                        for a in range(m):
                            val[a] += (-1) ** (i + j) * c * inner[a]
        out.extend(val)
    return tuple(out)


SETUPS = [
    ("aff1", "trivial"), ("aff1", "adjoint"), ("heisenberg3", "adjoint"), ("sl2", "natural"),
    ("solvable3", "adjoint"), ("sl2_semidirect_natural", "trivial"), ("n4", "adjoint"),
]


def module(name, kind):
    L = alg(name)
    if kind == "trivial":
        return L, trivial(L)
    if kind == "adjoint":
        return L, adjoint(L)
    return L, catalog.get(name).modules[kind]


class TestDifferential:
    def test_abelian_zero(self):
        L = LieAlgebra.abelian(3)
        for n in range(4):
            assert differential_matrix(L, trivial(L), n).is_zero()

    def test_aff1_degree1(self):
        L = alg("aff1")
        K = trivial(L)
        d = differential_matrix(L, K, 1)
        assert d.apply(wedge_functional(L, K, (1,)).coords) == (-1,)
        assert d.apply(wedge_functional(L, K, (0,)).coords) == (0,)

    def test_h3_degree1(self):
        L = alg("heisenberg3")
        K = trivial(L)
        dz = coboundary(wedge_functional(L, K, (2,)))
        assert dz.coords == tuple(-c for c in wedge_functional(L, K, (0, 1)).coords)

    def test_shape_and_index(self):
        L, V = module("sl2", "natural")
        d = differential_matrix(L, V, 1)
        assert d.shape == (comb(3, 2) * 2, 3 * 2)
        space = CochainSpace(L, V, 2)
        assert space.index == ((0, 1), (0, 2), (1, 2))
        assert space.coordinate((0, 2), 1) == 3

    def test_degree_out_of_range(self):
        L = alg("aff1")
        with pytest.raises(DegreeOutOfRange):
            differential_matrix(L, trivial(L), 3)
        with pytest.raises(DegreeOutOfRange):
            cohomology(L, trivial(L), -1)

    def test_module_mismatch(self):
        with pytest.raises(AmbientMismatch):
            cohomology(alg("sl2"), trivial(alg("so3")), 1)

    @pytest.mark.parametrize("name,kind", SETUPS)
    def test_matches_definition(self, name, kind):
        L, V = module(name, kind)
        for n in range(L.dim):
            d = differential_matrix(L, V, n)
            for j in range(d.cols):
                e = tuple(F(int(i == j)) for i in range(d.cols))
                assert d.apply(e) == d_by_definition(L, V, n, e)

    @pytest.mark.parametrize("name,kind", SETUPS)
    def test_d_squared(self, name, kind):
        L, V = module(name, kind)
        for n in range(L.dim - 1):
            assert (differential_matrix(L, V, n + 1) @ differential_matrix(L, V, n)).is_zero()


class TestCohomology:
    def test_examples(self):
        A2 = LieAlgebra.abelian(2)
        assert cohomology(A2, trivial(A2), 2).dim_H == 1
        h3 = alg("heisenberg3")
        assert cohomology(h3, trivial(h3), 1).dim_H == 2
        assert cohomology(h3, trivial(h3), 2).dim_H == 2
        sl2 = alg("sl2")
        assert cohomology(sl2, trivial(sl2), 1).dim_H == 0
        assert cohomology(sl2, trivial(sl2), 2).dim_H == 0

    def test_result_invariants(self):
        L, V = module("heisenberg3", "adjoint")
        for n in range(L.dim + 1):
            r = cohomology(L, V, n)
            assert r.dim_H == r.dim_Z - r.dim_B == len(r.representatives)
            assert len(r.coboundary_basis) == r.dim_B
            for rep in r.representatives:
                assert is_cocycle(rep)
                assert is_coboundary(L, V, rep) is None
            # independent modulo coboundaries
            rows = [c.coords for c in r.representatives + r.coboundary_basis]
            if rows:
                assert rank(Matrix.from_rows(rows, CochainSpace(L, V, n).dim)) == len(rows)

    def test_representatives_deterministic(self):
        L, V = module("n4", "adjoint")
        cohomology.cache_clear()
        differential_matrix.cache_clear()
        a = cohomology(L, V, 2).representatives
        cohomology.cache_clear()
        differential_matrix.cache_clear()
        b = cohomology(L, V, 2).representatives
        assert [c.coords for c in a] == [c.coords for c in b]

    @pytest.mark.parametrize("name,kind", SETUPS)
    def test_h0_is_invariants(self, name, kind):
        L, V = module(name, kind)
        assert cohomology(L, V, 0).dim_H == len(invariants(V))

    @pytest.mark.parametrize("name,kind", SETUPS)
    def test_euler_characteristic(self, name, kind):
        L, V = module(name, kind)
        assert sum((-1) ** n * cohomology(L, V, n).dim_H for n in range(L.dim + 1)) == 0

    @pytest.mark.parametrize("n", range(1, 5))
    def test_abelian_binomials(self, n):
        L = LieAlgebra.abelian(n)
        assert [cohomology(L, trivial(L), k).dim_H for k in range(n + 1)] == \
            [comb(n, k) for k in range(n + 1)]


class TestCoboundary:
    def test_h3_xz_not_coboundary(self):
        L = alg("heisenberg3")
        K = trivial(L)
        w = wedge_functional(L, K, (0, 2))
        assert is_cocycle(w)
        assert is_coboundary(L, K, w) is None

    def test_zero_is_coboundary(self):
        L = alg("sl2")
        V = adjoint(L)
        w = Cochain(CochainSpace(L, V, 2), (F(0),) * CochainSpace(L, V, 2).dim)
        phi = is_coboundary(L, V, w)
        assert phi is not None and coboundary(phi) == w

    def test_degree_zero(self):
        L = alg("aff1")
        K = trivial(L)
        assert is_coboundary(L, K, wedge_functional(L, K, ())) is None

    def test_not_a_cocycle(self):
        L = alg("aff1")
        with pytest.raises(NotACocycle):
            is_coboundary(L, trivial(L), wedge_functional(L, trivial(L), (1,)))

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(SETUPS), st.data())
    def test_image_of_d_is_coboundary(self, setup, data):
        L, V = module(*setup)
        n = data.draw(st.integers(0, L.dim - 1))
        dim = CochainSpace(L, V, n).dim
        coords = data.draw(st.lists(st.integers(-3, 3), min_size=dim, max_size=dim))
        phi = Cochain(CochainSpace(L, V, n), tuple(F(c) for c in coords))
        w = coboundary(phi)
        psi = is_coboundary(L, V, w)
        assert psi is not None and coboundary(psi) == w

    def test_cochain_from_values(self):
        L = alg("heisenberg3")
        K = trivial(L)
        w = cochain_from_values(L, K, 2, {(0, 2): (1,)})
        assert w == wedge_functional(L, K, (0, 2))
        assert w.value((0, 2)) == (1,)


class TestActions:
    def setup_method(self):
        self.L = alg("aff1")
        self.I = Subspace.span(self.L, [(0, 1)])
        self.K = trivial(self.L)

    def test_aff1_h1_minus_one(self):
        M = element_action_on_cohomology(self.L, self.I, self.K, 1, (1, 0))
        assert M.to_rows() == [(-1,)]

    def test_invariant_dims(self):
        assert invariant_cohomology_dim(self.L, self.I, self.K, 0, (1, 0)) == 1
        assert invariant_cohomology_dim(self.L, self.I, self.K, 1, (1, 0)) == 0

    def test_degree_zero_trivial_module(self):
        M = element_action_on_cohomology(self.L, self.I, self.K, 0, (1, 0))
        assert M.is_zero()

    @pytest.mark.parametrize("name,kind,ideal", [
        ("aff1", "adjoint", [(0, 1)]),
        ("sl2_semidirect_natural", "trivial", [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]),
        ("sl2_semidirect_natural", "adjoint", [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)]),
        ("heisenberg3", "adjoint", [(0, 1, 0), (0, 0, 1)]),
        ("solvable3", "trivial", [(0, 1, 0), (0, 0, 1)]),
    ])
    def test_inner_action_vanishes(self, name, kind, ideal):
        L, V = module(name, kind)
        I = Subspace.span(L, ideal)
        for n in range(I.dim + 1):
            for v in I.vectors:
                assert element_action_on_cohomology(L, I, V, n, v).is_zero()
                h = cohomology_as_quotient_module(L, I, V, n).dim
                assert invariant_cohomology_dim(L, I, V, n, v) == h

    def test_not_an_ideal(self):
        with pytest.raises(NotAnIdeal):
            element_action_on_cohomology(self.L, Subspace.span(self.L, [(1, 0)]), self.K, 0,
                                         (0, 1))

    def test_semidirect_quotient_modules(self):
        L = alg("sl2_semidirect_natural")
        I = Subspace.span(L, [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)])
        K = trivial(L)
        W2 = cohomology_as_quotient_module(L, I, K, 2)
        assert W2.dim == 1 and W2.is_trivial()
        assert W2.algebra == alg("sl2")
        W1 = cohomology_as_quotient_module(L, I, K, 1)
        assert W1.dim == 2 and not W1.is_trivial()

    def test_quotient_module_degree_zero_is_invariants(self):
        L = alg("sl2_semidirect_natural")
        I = Subspace.span(L, [(0, 0, 0, 1, 0), (0, 0, 0, 0, 1)])
        V = adjoint(L)
        W0 = cohomology_as_quotient_module(L, I, V, 0)
        assert W0.dim == len(invariants(V, I))

    def test_weights_of_aff1_modules(self):
        # H^1(span{y}, K_c) has x-weight c - 1
        L = self.L
        for c in (0, 1, 2):
            V = character(L, (c, 0))
            M = element_action_on_cohomology(L, self.I, V, 1, (1, 0))
            assert M.to_rows() == [(c - 1,)]
        V = tensor(character(L, (1, 0)), dual(character(L, (1, 0))))
        assert V.is_trivial()
