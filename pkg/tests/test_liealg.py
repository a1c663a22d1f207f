"""Lie algebra layer: validation, Killing form (vs a sympy trace oracle),
standard constructions, and quotient coordinates."""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from liecx.exact import (
    GQ, ZERO, ONE, I, Matrix, Subspace, vec, vunit, vadd, vscale,
)
from liecx.liealg import (
    LieAlgebra, Subalgebra, NotClosed,
    centralizer, normalizer, derived, center, radical,
    is_solvable, is_nilpotent, extend_to_maximal_abelian,
    zero_subalgebra, full_subalgebra, quotient,
)
from liecx.catalog import build, build_subalgebra, su, u, torus, direct_sum


@pytest.fixture(scope="module")
def su2():
    return build(su(2))


@pytest.fixture(scope="module")
def su3():
    return build(su(3))


# ---------------------------------------------------------------------------
# validation

def test_su2_table_is_epsilon(su2):
    e1, e2, e3 = (vunit(3, k) for k in range(3))
    assert su2.bracket(e1, e2) == e3
    assert su2.bracket(e2, e3) == e1
    assert su2.bracket(e3, e1) == e2
    assert su2.validate().ok


def test_validate_catches_broken_jacobi(su2):
    bad = [[list(v) for v in row] for row in su2.table]
    bad[0][1] = list(vec([0, 0, 2]))  # breaks antisymmetry and Jacobi
    res = LieAlgebra(bad, inner_product=su2.inner_product).validate()
    assert not res.ok
    assert res.first_failure()


def test_validate_catches_noninvariant_inner(su2):
    ip = Matrix([[ONE, ZERO, ZERO], [ZERO, GQ(2), ZERO], [ZERO, ZERO, ONE]])
    res = LieAlgebra(su2.table, inner_product=ip).validate()
    assert not res.ok


# ---------------------------------------------------------------------------
# Killing form vs sympy trace oracle

def sympy_killing(g, i, j):
    adi = sympy.Matrix([[sympy.Rational(x.re) for x in r]
                        for r in g.ad(vunit(g.dim, i)).rows])
    adj = sympy.Matrix([[sympy.Rational(x.re) for x in r]
                        for r in g.ad(vunit(g.dim, j)).rows])
    return (adi * adj).trace()


@pytest.mark.parametrize("spec", [su(2), su(3), direct_sum(su(2), torus(1))])
def test_killing_gram_matches_sympy(spec):
    g = build(spec)
    gram = g.killing_gram()
    for i in range(g.dim):
        for j in range(g.dim):
            assert sympy.Rational(gram[i, j].re) == sympy_killing(g, i, j)
            assert gram[i, j].im == 0


def test_su2_killing_is_minus_two_identity(su2):
    assert su2.killing_gram() == Matrix.identity(3).scale(GQ(-2))
    assert su2.inner_product == Matrix.identity(3).scale(GQ(2))


# ---------------------------------------------------------------------------
# bracket properties

coeffs = st.lists(
    st.fractions(min_value=-5, max_value=5, max_denominator=4),
    min_size=3, max_size=3).map(lambda c: vec(c))


@settings(max_examples=25, deadline=None)
@given(coeffs, coeffs, coeffs)
def test_su2_jacobi_and_invariance(x, y, z):
    g = build(su(2))
    lhs = g.bracket(x, g.bracket(y, z))
    rhs = vadd(g.bracket(g.bracket(x, y), z), g.bracket(y, g.bracket(x, z)))
    assert lhs == rhs
    assert g.inner(g.bracket(x, y), z) + g.inner(y, g.bracket(x, z)) == 0
    assert g.killing(g.bracket(x, y), z) + g.killing(y, g.bracket(x, z)) == 0


# ---------------------------------------------------------------------------
# constructions

def test_centralizer_and_normalizer(su2, su3):
    t3 = build_subalgebra(su3, su(3), "maximal_torus")
    assert centralizer(su3, t3.space).space == t3.space
    h = Subalgebra.span(su2, [vunit(3, 2)])
    assert normalizer(su2, h).space == h.space
    assert centralizer(su2, Subspace.zero(3)).dim == 3


def test_derived_and_center(su2, su3):
    assert derived(su2, full_subalgebra(su2)).dim == 3
    assert center(su2, full_subalgebra(su2)).dim == 0
    gu2 = build(u(2))
    assert center(gu2, full_subalgebra(gu2)).dim == 1
    assert derived(gu2, full_subalgebra(gu2)).dim == 3
    t3 = build_subalgebra(su3, su(3), "maximal_torus")
    assert derived(su3, t3).dim == 0


def test_subalgebra_closure_check(su2):
    with pytest.raises(NotClosed):
        Subalgebra.span(su2, [vunit(3, 0), vunit(3, 1)], check=True)
    s = Subalgebra.span(su2, [vunit(3, 0)], check=True)
    assert s.is_abelian()


def test_solvable_and_nilpotent(su2):
    gc = su2.complexify()
    borel = Subalgebra.span(
        gc, [vunit(3, 2), vadd(vunit(3, 0), vscale(-I, vunit(3, 1)))],
        check=True)
    assert is_solvable(borel)
    assert not is_nilpotent(borel)
    assert radical(borel).space == borel.space
    nil = Subalgebra.span(
        gc, [vadd(vunit(3, 0), vscale(-I, vunit(3, 1)))], check=True)
    assert is_nilpotent(nil)
    assert not is_solvable(Subalgebra(gc, Subspace.full(3), check=False))


def test_complexify_and_tau(su2):
    gc = su2.complexify()
    assert gc.complexified and gc.dim == su2.dim
    v = vadd(vunit(3, 0), vscale(I, vunit(3, 1)))
    assert gc.conjugate(v) == vadd(vunit(3, 0), vscale(-I, vunit(3, 1)))
    # tau is an automorphism of the real structure tensor
    w = vunit(3, 2)
    assert gc.conjugate(gc.bracket(v, w)) \
        == gc.bracket(gc.conjugate(v), gc.conjugate(w))


def test_extend_to_maximal_abelian(su2, su3):
    t = extend_to_maximal_abelian(su2, zero_subalgebra(su2))
    assert t.dim == 1
    assert centralizer(su2, t.space).space == t.space
    t3 = extend_to_maximal_abelian(su3, zero_subalgebra(su3))
    assert t3.dim == 2
    assert centralizer(su3, t3.space).space == t3.space
    # extension within a constrained ambient space
    h = Subalgebra.span(su3, [vunit(8, 6)])
    cw = centralizer(su3, h.space)
    tw = extend_to_maximal_abelian(su3, h, within=cw.space)
    assert tw.space.contains_subspace(h.space)
    assert tw.is_abelian()


# ---------------------------------------------------------------------------
# quotients

def test_quotient_coordinates(su2):
    h = Subalgebra.span(su2, [vunit(3, 2)])
    q = quotient(su2, h)
    assert q.dim == 2
    for k in range(2):
        assert q.project(q.lift(vunit(2, k))) == vunit(2, k)
    assert q.project(vunit(3, 2)) == (ZERO, ZERO)
    # ad-bar(e3) is the rotation [[0,-1],[1,0]] on the (e1,e2) quotient
    assert q.induced_map(vunit(3, 2)) == Matrix([[ZERO, -ONE], [ONE, ZERO]])


def test_quotient_zero_h(su2):
    q = quotient(su2, zero_subalgebra(su2))
    assert q.dim == 3
    assert q.project(vunit(3, 1)) == vunit(3, 1)
    assert q.induced_map(vunit(3, 2)) == su2.ad(vunit(3, 2))
