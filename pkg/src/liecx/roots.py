"""Exact root-space decompositions of complexified compact Lie algebras and
the parabolic subalgebras built from them.

Roots are recorded by their values on the canonical basis of a chosen
Cartan subalgebra; on real Cartan vectors these values are purely imaginary
with rational imaginary part, so the whole decomposition stays inside the
Gaussian rationals.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .exact import (
    GQ, ONE, ZERO, I, Matrix, Subspace, ExactError, IrrationalSpectrum,
    kernel, vunit, vzero, vadd, vscale, is_zero_vec, rational_eigenvalues,
    real_points, span_sum,
)
from .liealg import (
    LieAlgebra, Subalgebra, centralizer, center, extend_to_maximal_abelian,
    is_nilpotent, reduction_matrix,
)


class RootError(ExactError):
    pass


class NotCartan(RootError):
    pass


class NonSemisimpleAction(RootError):
    pass


class LeviMismatch(RootError):
    pass


class ClosureFailure(RootError):
    pass


@dataclass(frozen=True)
class Root:
    """A root alpha, by its values alpha(a_j) on the Cartan basis, plus the
    root space g_alpha inside g_C."""
    values: tuple          # GQ, purely imaginary on the real Cartan basis
    space: Subspace

    def negate_values(self):
        return tuple(-v for v in self.values)

    def value_at(self, cartan: Subalgebra, x):
        """alpha(x) for x in the complexified Cartan (complex-linear)."""
        coords = cartan.space.coords(x)
        s = ZERO
        for c, v in zip(coords, self.values, strict=True):
            s = s + c * v
        return s


@dataclass
class RootDatum:
    algebra: LieAlgebra            # the real compact algebra g
    cartan: Subalgebra             # a, abelian and self-centralizing in g
    roots: list                    # Root, sorted deterministically
    zero_space: Subspace           # a_C (includes all central directions)

    def root_index(self, values):
        for i, r in enumerate(self.roots):
            if r.values == values:
                return i
        return None

    def negative_of(self, i):
        return self.root_index(self.roots[i].negate_values())


def find_regular(g: LieAlgebra, a: Subalgebra):
    """First element of a with coefficient pattern (1, k, k^2, ...) whose
    centralizer is exactly a."""
    if centralizer(g, a.space).space != a.space:
        raise NotCartan("subalgebra is not self-centralizing")
    basis = a.basis_vectors()
    r = len(basis)
    k = 1
    while True:
        h0 = vzero(g.dim)
        c = 1
        for b in basis:
            h0 = vadd(h0, vscale(GQ(c), b))
            c *= k
        if centralizer(g, Subspace.from_vectors(g.dim, [h0])).space == a.space:
            return h0
        k += 1


def _restrict(g: LieAlgebra, op_vec, space: Subspace, scale=ONE) -> Matrix:
    """Matrix of scale * ad(op_vec) restricted to an invariant subspace, in
    that subspace's canonical coordinates."""
    cols = []
    for b in space.basis_vectors():
        img = vscale(scale, g.bracket(op_vec, b))
        if not space.contains(img):
            raise NonSemisimpleAction("subspace is not ad-invariant")
        cols.append(space.coords(img))
    return Matrix.from_columns(cols) if cols else Matrix.zeros(0, 0)


def _eigenspaces(g, op_vec, space, scale):
    """Split an invariant subspace into eigenspaces of scale*ad(op_vec);
    raises if the restricted spectrum is not rational or defective."""
    b = _restrict(g, op_vec, space, scale)
    eigs = rational_eigenvalues(b)
    pieces = []
    total = 0
    for lam in sorted(set(eigs)):
        shifted = b - Matrix.identity(b.nrows).scale(GQ(lam))
        ker = kernel(shifted)
        vecs = []
        for c in ker.basis_vectors():
            v = vzero(space.ambient_dim)
            for ci, bas in zip(c, space.basis_vectors()):
                v = vadd(v, vscale(ci, bas))
            vecs.append(v)
        sub = Subspace.from_vectors(space.ambient_dim, vecs)
        pieces.append((lam, sub))
        total += sub.dim
    if total != space.dim:
        raise NonSemisimpleAction("ad action is not diagonalizable on a piece")
    return pieces


def root_decomposition(g: LieAlgebra, a: Subalgebra) -> RootDatum:
    """Simultaneous eigen-decomposition of g_C under ad of the Cartan basis.

    Works one Cartan generator at a time (refining), so no single regular
    element needs to separate all roots.  Validates the dimension
    bookkeeping, the +/- pairing and tau(g_alpha) = g_{-alpha}."""
    if centralizer(g, a.space).space != a.space:
        raise NotCartan("subalgebra is not self-centralizing")
    pieces = [((), Subspace.full(g.dim))]
    for aj in a.basis_vectors():
        refined = []
        for values, sp in pieces:
            # eigenvalues of i*ad(a_j) are rational; alpha(a_j) = -i*lambda
            for lam, sub in _eigenspaces(g, aj, sp, I):
                refined.append((values + (-I * GQ(lam),), sub))
        pieces = refined
    zero_values = (ZERO,) * a.dim
    zero_parts = [sp for v, sp in pieces if v == zero_values]
    zero_space = span_sum(g.dim, zero_parts) if zero_parts else Subspace.zero(g.dim)
    roots = [Root(v, sp) for v, sp in pieces if v != zero_values]
    roots.sort(key=lambda r: tuple(x.sort_key() for x in r.values))
    rd = RootDatum(g, a, roots, zero_space)
    _validate_root_datum(rd)
    return rd


def _validate_root_datum(rd: RootDatum):
    g = rd.algebra
    n = g.dim
    total = rd.zero_space.dim + sum(r.space.dim for r in rd.roots)
    if total != n:
        raise RootError("root spaces do not fill g_C")  # pragma: no cover
    if rd.zero_space != rd.cartan.space.add(Subspace.zero(n)) and \
            not rd.zero_space.contains_subspace(rd.cartan.space):
        raise RootError("zero space does not contain the Cartan")  # pragma: no cover
    for i, r in enumerate(rd.roots):
        if all(v.is_zero() for v in r.values):
            raise RootError("zero root recorded as a root")  # pragma: no cover
        if any(v.re != 0 for v in r.values):
            raise RootError("root value not purely imaginary on the real Cartan")
        j = rd.negative_of(i)
        if j is None:
            raise RootError("roots do not come in +/- pairs")
        if r.space.conjugate() != rd.roots[j].space:
            raise RootError("tau(g_alpha) != g_{-alpha}")
        # scalar action check: ad(a_j) acts on g_alpha by alpha(a_j)
        for aj, val in zip(rd.cartan.basis_vectors(), r.values, strict=True):
            for b in r.space.basis_vectors():
                if g.bracket(aj, b) != vscale(val, b):
                    raise NonSemisimpleAction(
                        "ad does not act by the recorded scalar")


@dataclass
class Parabolic:
    """p = m_C (+) n inside g_C, with real Levi m and nilradical n."""
    levi_real: Subalgebra          # m, subalgebra of the real g
    positive_set: tuple            # indices into the ambient RootDatum
    nilradical: Subalgebra         # n, subalgebra of g_C
    space: Subalgebra              # p, subalgebra of g_C
    datum: RootDatum

    def __eq__(self, o):
        if not isinstance(o, Parabolic):
            return NotImplemented
        return (self.space.space == o.space.space
                and self.levi_real.space == o.levi_real.space
                and self.nilradical.space == o.nilradical.space)

    def __repr__(self):
        return (f"Parabolic(dim {self.space.dim}, levi {self.levi_real.dim}, "
                f"nilradical {self.nilradical.dim})")


def _root_values_on(rd: RootDatum, root: Root, space: Subspace):
    """alpha evaluated on each basis vector of a subspace of the Cartan."""
    return tuple(root.value_at(rd.cartan, b) for b in space.basis_vectors())


def _levi_root_split(rd: RootDatum, m: Subalgebra):
    """Indices of roots vanishing on center(m) (the m-roots) and the rest."""
    g = rd.algebra
    cm = center(g, m).space
    if not rd.cartan.space.contains_subspace(cm):
        raise LeviMismatch("center(m) is not inside the chosen Cartan")
    m_roots, q = [], []
    for i, r in enumerate(rd.roots):
        if all(v.is_zero() for v in _root_values_on(rd, r, cm)):
            m_roots.append(i)
        else:
            q.append(i)
    # m must be zero_space plus exactly the vanishing root spaces
    expect = span_sum(g.dim, [rd.zero_space] + [rd.roots[i].space for i in m_roots])
    if expect != m.space.add(Subspace.zero(g.dim)) and expect != m.space:
        raise LeviMismatch(
            "m is not the span of the zero space and full root spaces")
    return m_roots, q


def enumerate_positive_systems(rd: RootDatum, m: Subalgebra):
    """All antisymmetric sign choices Q = Q+ u -Q+ on the roots outside the
    Levi that are closed under root addition and under adding Levi roots.

    Returned as sorted index tuples, in a deterministic order."""
    m_roots, q = _levi_root_split(rd, m)
    value_index = {rd.roots[i].values: i for i in range(len(rd.roots))}
    pairs = []
    seen = set()
    for i in q:
        if i in seen:
            continue
        j = rd.negative_of(i)
        if j is None or j not in q:  # pragma: no cover
            raise LeviMismatch("roots outside the Levi do not pair up")
        pairs.append((i, j))
        seen.update((i, j))

    def vsum(a, b):
        return tuple(x + y for x, y in zip(a, b, strict=True))

    q_set = set(q)
    systems = []
    for signs in itertools.product((0, 1), repeat=len(pairs)):
        qp = {p[s] for p, s in zip(pairs, signs)}
        ok = True
        for a in qp:
            for b in qp:
                s = value_index.get(vsum(rd.roots[a].values, rd.roots[b].values))
                if s is not None and s in q_set and s not in qp:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            for a in qp:
                for b in m_roots:
                    s = value_index.get(vsum(rd.roots[a].values, rd.roots[b].values))
                    if s is not None and s in q_set and s not in qp:
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            systems.append(tuple(sorted(qp)))
    return systems


def derived_complex_span(g: LieAlgebra) -> Subspace:
    bs = [vunit(g.dim, i) for i in range(g.dim)]
    return Subspace.from_vectors(
        g.dim, [g.bracket(a, b) for i, a in enumerate(bs) for b in bs[i + 1:]])


def killing_perp_nilradical(g: LieAlgebra, p_space: Subspace) -> Subspace:
    """{x in p : kappa(x, p) = 0} intersected with [g_C, g_C]; the
    independent characterization of the nilradical of a parabolic."""
    gram = g.killing_gram()
    rows = [gram.matvec(b) for b in p_space.basis_vectors()]
    perp = kernel(Matrix(rows)) if rows else Subspace.full(g.dim)
    return perp.intersect(p_space).intersect(derived_complex_span(g))


def build_parabolic(rd: RootDatum, m: Subalgebra, q_plus) -> Parabolic:
    """p = m_C (+) (direct sum of the Q+ root spaces), fully validated."""
    g = rd.algebra
    gc = g.complexify()
    n_space = span_sum(g.dim, [rd.roots[i].space for i in q_plus]) \
        if q_plus else Subspace.zero(g.dim)
    p_space = m.space.add(n_space)
    try:
        p = Subalgebra(gc, p_space, check=True)
        n = Subalgebra(gc, n_space, check=True)
    except Exception as e:
        raise ClosureFailure(f"p or n is not bracket-closed: {e}") from None
    # contains a Borel: the zero space plus one root space from each pair
    if not p_space.contains_subspace(rd.zero_space):
        raise ClosureFailure("p does not contain the Cartan's zero space")
    for i in range(len(rd.roots)):
        j = rd.negative_of(i)
        if not (p_space.contains_subspace(rd.roots[i].space)
                or p_space.contains_subspace(rd.roots[j].space)):
            raise ClosureFailure("p misses both root spaces of a +/- pair")
    # p n g = m and p n tau(p) = m_C
    if real_points(p_space) != m.space:
        raise ClosureFailure("p n g != m")
    if p_space.intersect(p_space.conjugate()) != m.space:
        raise ClosureFailure("p n tau(p) != m_C")
    # [p, n] in n, n nilpotent
    for a in p.basis_vectors():
        for b in n.basis_vectors():
            if not n_space.contains(g.bracket(a, b)):
                raise ClosureFailure("n is not an ideal of p")
    if n.dim and not is_nilpotent(n):
        raise ClosureFailure("n is not nilpotent")
    # independent oracle for the nilradical
    if killing_perp_nilradical(gc, p_space) != n_space:
        raise ClosureFailure("Killing-perpendicular nilradical disagrees")
    return Parabolic(m, tuple(sorted(q_plus)), n, p, rd)


def parabolic_from_abelian(g: LieAlgebra, t: Subalgebra) -> Parabolic:
    """The parabolic of Levi m = C_g(t) cut out by a regular element of i*t."""
    if not t.is_abelian():
        raise RootError("t must be abelian")
    m = centralizer(g, t.space)
    a = extend_to_maximal_abelian(g, t)
    rd = root_decomposition(g, a)
    q = [i for i, r in enumerate(rd.roots)
         if any(not v.is_zero() for v in _root_values_on(rd, r, t.space))]
    if not q:
        return build_parabolic(rd, m, ())
    # deterministic search for h0 in i*t with alpha(h0) real nonzero on Q
    basis = [vscale(I, b) for b in t.basis_vectors()]
    k = 1
    while True:
        h0 = vzero(g.dim)
        c = 1
        for b in basis:
            h0 = vadd(h0, vscale(GQ(c), b))
            c *= k
        vals = {}
        ok = True
        for i in q:
            v = rd.roots[i].value_at(rd.cartan, h0)
            if v.im != 0 or v.re == 0:
                ok = False
                break
            vals[i] = v.re
        if ok:
            q_plus = tuple(sorted(i for i in q if vals[i] > 0))
            return build_parabolic(rd, m, q_plus)
        k += 1
