"""Shared builders for the test corpus and the acceptance summary hook."""

import random
from fractions import Fraction

import pytest

from liecx.exact import (
    GQ, ZERO, ONE, Matrix, kernel, inverse, vunit, vzero,
)
from liecx.catalog import build, build_subalgebra, su, u, torus, direct_sum
from liecx.liealg import quotient as make_quotient
from liecx import cx


ACCEPTANCE_LINES = []


def record_acceptance(line):
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


# ---------------------------------------------------------------------------
# standard instances

def s2_instance():
    """su(2) / u(1): the sphere S^2 with J e1 = e2."""
    g = build(su(2))
    h = build_subalgebra(g, su(2), "span", span=[[0, 0, 1]])
    quot = make_quotient(g, h)
    j = Matrix([[ZERO, -ONE], [ONE, ZERO]])
    return g, h, quot, cx.ComplexStructure(quot, j)


def calabi_eckmann_instance():
    """su(2)+su(2) / 0 with J(e1,0)=(e2,0), J(0,e1)=(0,e2), J(e3,0)=(0,e3)."""
    g = build(direct_sum(su(2), su(2)))
    h = build_subalgebra(g, None, "zero")
    quot = make_quotient(g, h)
    m = [[ZERO] * 6 for _ in range(6)]
    for src, dst in ((0, 1), (3, 4), (2, 5)):
        m[dst][src] = ONE
        m[src][dst] = -ONE
    return g, h, quot, cx.ComplexStructure(quot, Matrix(m))


def swap_structure():
    """The non-integrable control on su(2)+su(2): J(x, y) = (-y, x)."""
    g = build(direct_sum(su(2), su(2)))
    h = build_subalgebra(g, None, "zero")
    quot = make_quotient(g, h)
    m = [[ZERO] * 6 for _ in range(6)]
    for k in range(3):
        m[3 + k][k] = ONE
        m[k][3 + k] = -ONE
    return g, h, quot, cx.ComplexStructure(quot, Matrix(m))


def acceptance_pairs():
    """The catalog quotients used by the construction-soundness criteria."""
    g3 = build(su(3))
    g22 = build(direct_sum(su(2), su(2)))
    gs = build(su(2))
    gu2 = build(u(2))
    gst = build(direct_sum(su(2), torus(1)))
    return [
        ("su(2)/u(1)", gs, build_subalgebra(gs, su(2), "span", span=[[0, 0, 1]])),
        ("su(3)/t", g3, build_subalgebra(g3, su(3), "maximal_torus")),
        ("su(3)/u(2)", g3, build_subalgebra(g3, su(3), "block_u", k=2)),
        ("su(2)+su(2)/0", g22, build_subalgebra(g22, None, "zero")),
        ("u(2)/0", gu2, build_subalgebra(gu2, None, "zero")),
        ("su(2)+torus(1)/0", gst, build_subalgebra(gst, None, "zero")),
    ]


# ---------------------------------------------------------------------------
# randomized invariant structures

def isotropy_commutant_basis(quot):
    """Basis of {S : [S, ad-bar(x)] = 0 for all x in h} on the quotient."""
    q = quot.dim
    gens = [quot.induced_map(x) for x in quot.h.basis_vectors()]
    basis_mats = []
    for a in range(q):
        for b in range(q):
            basis_mats.append(Matrix.from_columns(
                [vunit(q, a) if j == b else vzero(q) for j in range(q)]))
    rows = []
    for m in gens:
        cols = [(m * e - e * m).flatten() for e in basis_mats]
        rows.extend(Matrix.from_columns(cols).rows)
    if not rows:
        return basis_mats
    out = []
    for v in kernel(Matrix(rows)).basis_vectors():
        out.append(Matrix([list(v[i * q:(i + 1) * q]) for i in range(q)]))
    return out


def random_torus_structure(u, rng):
    """A random rational complex structure on an even-dim fiber, built from
    2x2 blocks [[a, b], [c, -a]] with a^2 + bc = -1."""
    f = u.dim
    m = [[ZERO] * f for _ in range(f)]
    for k in range(0, f, 2):
        a = Fraction(rng.randint(-4, 4), rng.randint(1, 3))
        c = Fraction(rng.randint(1, 5))
        b = -(1 + a * a) / c
        m[k][k] = GQ(a)
        m[k][k + 1] = GQ(b)
        m[k + 1][k] = GQ(c)
        m[k + 1][k + 1] = GQ(-a)
    return cx.TorusComplexStructure(u, Matrix(m))


def random_invariant_structures(quot, j0, rng, count):
    """Invariant J candidates: conjugates S j0 S^-1 of a known invariant j0
    by random invertible elements of the isotropy commutant."""
    basis = isotropy_commutant_basis(quot)
    q = quot.dim
    out = []
    while len(out) < count:
        s = Matrix.zeros(q, q)
        for b in basis:
            c = GQ(Fraction(rng.randint(-3, 3)))
            s = s + b.scale(c)
        try:
            sinv = inverse(s)
        except Exception:
            continue
        j = s * j0 * sinv
        if not j.is_real():
            continue
        out.append(cx.ComplexStructure(quot, j))
    return out
