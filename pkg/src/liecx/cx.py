"""Invariant complex structures on quotients g/h of compact Lie algebras:
the Nijenhuis obstruction, integrability tests, the canonical subalgebra m,
the parabolic construction and decomposition of structures, classification,
and the Hermitian-symmetric detector.

Conventions.  A structure is a real matrix J on the canonical quotient
coordinates with J^2 = -id.  Its +i eigenspace on the complexified quotient
pulls back to the subalgebra l inside g_C; integrability of J and closure of
l are equivalent, and both are always computed and compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import (
    GQ, ONE, ZERO, I, Matrix, Subspace, ExactError,
    kernel, inverse, solve, vunit, vzero, vadd, vsub, vneg, vscale, vconj,
    is_zero_vec, relative_complement, span_sum, real_points,
)
from .liealg import (
    LieAlgebra, Subalgebra, Quotient,
    centralizer, derived, center, radical, is_solvable,
    extend_to_maximal_abelian, reduction_matrix, zero_subalgebra,
    full_subalgebra,
)
from .roots import (
    Parabolic, root_decomposition, enumerate_positive_systems,
    build_parabolic, killing_perp_nilradical, LeviMismatch,
)


class NotInvariant(ExactError):
    pass


class OddFiber(ExactError):
    pass


class TheoremViolation(ExactError):
    """A property the underlying theory guarantees unconditionally failed:
    an artifact bug or invalid input that slipped past validation."""


@dataclass
class LedgerEntry:
    name: str
    ok: bool
    detail: str = ""


class ComplexStructure:
    """An h-invariant candidate structure: J on g/h with J^2 = -id."""

    def __init__(self, quot: Quotient, j: Matrix):
        q = quot.dim
        if j.nrows != q or j.ncols != q:
            raise ExactError(f"J must be {q}x{q}")
        if not j.is_real():
            raise ExactError("J must be a real matrix")
        if j * j != Matrix.identity(q).scale(GQ(-1)):
            raise ExactError("J^2 != -id")
        self.quotient = quot
        self.j = j
        self._invariant = None
        self._plus = None

    def __eq__(self, o):
        if not isinstance(o, ComplexStructure):
            return NotImplemented
        return self.quotient.h.space == o.quotient.h.space and self.j == o.j

    def __repr__(self):
        return f"ComplexStructure(on quotient of dim {self.quotient.dim})"


@dataclass
class TorusComplexStructure:
    """A structure on the fiber m/h, held on the canonical complement u of h
    in m; automatically integrable since m/h is abelian."""
    u: Subspace            # complement of h inside m, ambient g coordinates
    j1: Matrix             # on u-coordinates, j1^2 = -id

    def __post_init__(self):
        f = self.u.dim
        if self.j1.nrows != f or self.j1.ncols != f:
            raise ExactError(f"J1 must be {f}x{f}")
        if f and self.j1 * self.j1 != Matrix.identity(f).scale(GQ(-1)):
            raise ExactError("J1^2 != -id")

    def __eq__(self, o):
        if not isinstance(o, TorusComplexStructure):
            return NotImplemented
        return self.u == o.u and self.j1 == o.j1


def default_torus_structure(u: Subspace) -> TorusComplexStructure:
    """Pair consecutive fiber coordinates: J1 e_{2k} = e_{2k+1}."""
    f = u.dim
    if f % 2:
        raise OddFiber(f"fiber dimension {f} is odd")
    cols = []
    for k in range(0, f, 2):
        cols.append(vunit(f, k + 1))
        cols.append(vscale(GQ(-1), vunit(f, k)))
    return TorusComplexStructure(u, Matrix.from_columns(cols) if cols
                                 else Matrix.zeros(0, 0))


@dataclass
class MData:
    m: Subalgebra
    u: Subspace
    center_m: Subalgebra


@dataclass
class ClassificationReport:
    exists: bool
    reason: str
    m: MData | None
    parabolics: list
    fiber_dim: int
    structure_count_note: str
    ledger: list = field(default_factory=list)


# ---------------------------------------------------------------------------
# invariance and the Nijenhuis map

def induced_actions(J: ComplexStructure):
    q = J.quotient
    return [q.induced_map(x) for x in q.h.basis_vectors()]


def is_invariant(J: ComplexStructure) -> bool:
    """[J, ad-bar(x)] = 0 for every x in h."""
    if J._invariant is None:
        J._invariant = all((a * J.j - J.j * a).is_zero()
                           for a in induced_actions(J))
    return J._invariant


def _require_invariant(J):
    if not is_invariant(J):
        raise NotInvariant("J does not commute with the isotropy action")


def nijenhuis(J: ComplexStructure, u, v, lifts=None):
    """N(u, v) = p[x,y] + J(p[x',y] + p[x,y']) - p[x',y'] for any lifts
    x, y, x', y' of u, v, Ju, Jv; well defined exactly when J is invariant."""
    _require_invariant(J)
    q = J.quotient
    if lifts is None:
        x, y = q.lift(u), q.lift(v)
        xp, yp = q.lift(J.j.matvec(u)), q.lift(J.j.matvec(v))
    else:
        x, y, xp, yp = lifts
        for w, target in ((x, u), (y, v), (xp, J.j.matvec(u)), (yp, J.j.matvec(v))):
            if q.project(w) != tuple(target):
                raise ExactError("provided lift does not project correctly")
    g = q.algebra
    t1 = q.project(g.bracket(x, y))
    t2 = J.j.matvec(vadd(q.project(g.bracket(xp, y)), q.project(g.bracket(x, yp))))
    t3 = q.project(g.bracket(xp, yp))
    return vsub(vadd(t1, t2), t3)


def nijenhuis_vanishes(J: ComplexStructure):
    """First basis pair with N != 0, or None."""
    q = J.quotient.dim
    for a in range(q):
        for b in range(a + 1, q):
            n = nijenhuis(J, vunit(q, a), vunit(q, b))
            if not is_zero_vec(n):
                return (a, b, n)
    return None


def plus_space(J: ComplexStructure) -> Subspace:
    """l = p^{-1} of the +i eigenspace of J, inside g_C (closure not asserted)."""
    _require_invariant(J)
    if J._plus is not None:
        return J._plus
    q = J.quotient
    shifted = J.j - Matrix.identity(q.dim).scale(I)
    vplus = kernel(shifted)
    lifted = [q.lift(v) for v in vplus.basis_vectors()]
    l = Subspace.from_vectors(
        q.algebra.dim, list(q.h.basis_vectors()) + lifted)
    J._plus = l
    return l


def _closed(g: LieAlgebra, s: Subspace) -> bool:
    bs = s.basis_vectors()
    return all(s.contains(g.bracket(a, b))
               for i, a in enumerate(bs) for b in bs[i + 1:])


def is_integrable(J: ComplexStructure) -> bool:
    """Dual method: N = 0 on all basis pairs, and l bracket-closed.  The two
    are computed independently and must agree."""
    _require_invariant(J)
    by_nijenhuis = nijenhuis_vanishes(J) is None
    by_closure = _closed(J.quotient.algebra, plus_space(J))
    if by_nijenhuis != by_closure:
        raise TheoremViolation(
            f"integrability methods disagree: N==0 is {by_nijenhuis}, "
            f"closure is {by_closure}")
    return by_nijenhuis


# ---------------------------------------------------------------------------
# the canonical subalgebra m

def compute_m(J: ComplexStructure) -> MData:
    """m = {x in g : [x, h] in h, [ad-bar(x), J] = 0}, with its certified
    properties: h in m, [m,m] = [h,h], m = C_g(center(m))."""
    _require_invariant(J)
    if not is_integrable(J):
        raise ExactError("m is canonical only for integrable J")
    q = J.quotient
    g = q.algebra
    n, qd = g.dim, q.dim
    rows = []
    rh = reduction_matrix(q.h.space)
    for v in q.h.basis_vectors():
        rows.extend((rh * g.ad(v)).rows)
    # columns of x -> vec(J ad-bar(x) - ad-bar(x) J)
    comm_cols = []
    for i in range(n):
        a = q.induced_map(vunit(n, i))
        comm_cols.append((J.j * a - a * J.j).flatten())
    rows.extend(Matrix.from_columns(comm_cols).rows)
    m_space = kernel(Matrix(rows))
    m = Subalgebra(g, m_space, check=True)
    if not m_space.contains_subspace(q.h.space):
        raise TheoremViolation("h is not contained in m")
    if derived(g, m).space != derived(g, q.h).space:
        raise TheoremViolation("[m,m] != [h,h]")
    cm = center(g, m)
    if centralizer(g, cm.space).space != m_space:
        raise TheoremViolation("m is not the centralizer of its center")
    u = relative_complement(m_space, q.h.space)
    return MData(m, u, cm)


# ---------------------------------------------------------------------------
# J(p, J1): construction and decomposition

def construct_J(quot: Quotient, p: Parabolic,
                j1: TorusComplexStructure | None = None) -> ComplexStructure:
    """The structure whose +i eigenspace is p(p^{-1}((m/h)_+) (+) n)."""
    g = quot.algebra
    h = quot.h
    m = p.levi_real
    if not m.space.contains_subspace(h.space):
        raise LeviMismatch("h is not contained in the Levi of p")
    if derived(g, m).space != derived(g, h).space:
        raise LeviMismatch("[m,m] != [h,h]")
    u = relative_complement(m.space, h.space)
    if u.dim % 2:
        raise OddFiber(f"dim m/h = {u.dim} is odd")
    if j1 is None:
        j1 = default_torus_structure(u)
    if j1.u != u:
        raise LeviMismatch("J1 lives on a different fiber complement")
    # lift the +i eigenspace of J1 from u-coordinates into g_C, add h_C and n
    f = u.dim
    lifted = []
    if f:
        vplus1 = kernel(j1.j1 - Matrix.identity(f).scale(I))
        for c in vplus1.basis_vectors():
            w = vzero(g.dim)
            for ci, ub in zip(c, u.basis_vectors()):
                w = vadd(w, vscale(ci, ub))
            lifted.append(w)
    e_space = span_sum(g.dim, [
        Subspace.from_vectors(g.dim, list(h.basis_vectors()) + lifted),
        p.nilradical.space])
    vplus = Subspace.from_vectors(
        quot.dim, [quot.project(b) for b in e_space.basis_vectors()])
    if 2 * vplus.dim != quot.dim:
        raise TheoremViolation("the +i candidate has the wrong dimension")
    if real_points(vplus).dim != 0:
        raise TheoremViolation("the +i candidate meets the real quotient")
    # recover the real J: e_k = w + tau(w), J e_k = i (w - tau(w))
    vb = vplus.basis_vectors()
    cols = [vadd(v, vconj(v)) for v in vb] \
        + [vadd(vscale(I, v), vconj(vscale(I, v))) for v in vb]
    mix = Matrix.from_columns(cols)
    mix_inv = inverse(mix)
    jcols = []
    fdim = len(vb)
    for k in range(quot.dim):
        c = mix_inv.matvec(vunit(quot.dim, k))
        w = vzero(quot.dim)
        for a in range(fdim):
            w = vadd(w, vscale(c[a] + I * c[fdim + a], vb[a]))
        jcols.append(vscale(I, vsub(w, vconj(w))))
    J = ComplexStructure(quot, Matrix.from_columns(jcols))
    if not is_invariant(J):
        raise TheoremViolation("constructed J is not h-invariant")
    if not is_integrable(J):
        raise TheoremViolation("constructed J is not integrable")
    return J


def decompose_J(J: ComplexStructure):
    """Recover (p, J1) with J = J(p, J1): p is the normalizer of l in g_C,
    the nilradical is cross-checked by two independent methods, J1 is the
    restriction of J to the fiber m/h."""
    _require_invariant(J)
    if not is_integrable(J):
        raise ExactError("decomposition requires an integrable J")
    quot = J.quotient
    g = quot.algebra
    gc = g.complexify()
    l = plus_space(J)
    rl = reduction_matrix(l)
    rows = []
    for b in l.basis_vectors():
        rows.extend((rl * g.ad(b)).rows)
    p_space = kernel(Matrix(rows)) if rows else Subspace.full(g.dim)
    m_space = real_points(p_space)
    md = compute_m(J)
    if m_space != md.m.space:
        raise TheoremViolation("p n g disagrees with the canonical m")
    n_space = killing_perp_nilradical(gc, p_space)
    # independent root-space construction of the nilradical
    a = extend_to_maximal_abelian(g, md.center_m)
    rd = root_decomposition(g, a)
    q_plus = tuple(sorted(
        i for i, r in enumerate(rd.roots)
        if p_space.contains_subspace(r.space)
        and not p_space.contains_subspace(rd.roots[rd.negative_of(i)].space)))
    parabolic = build_parabolic(rd, md.m, q_plus)
    if parabolic.nilradical.space != n_space:
        raise TheoremViolation("nilradical methods disagree")
    if parabolic.space.space != p_space:
        raise TheoremViolation("rebuilt parabolic differs from the normalizer")
    # J1: restriction of J to m/h, in the canonical fiber coordinates
    u = md.u
    if u.dim:
        ucols = [quot.project(ub) for ub in u.basis_vectors()]
        umat = Matrix.from_columns(ucols)
        j1cols = []
        for ub in u.basis_vectors():
            img = J.j.matvec(quot.project(ub))
            c = solve(umat, img)
            if c is None:
                raise TheoremViolation("J does not preserve m/h")
            j1cols.append(c)
        j1 = Matrix.from_columns(j1cols)
    else:
        j1 = Matrix.zeros(0, 0)
    return parabolic, TorusComplexStructure(u, j1)


# ---------------------------------------------------------------------------
# classification

def classify(g: LieAlgebra, h: Subalgebra) -> ClassificationReport:
    """Existence and parametrization of invariant integrable structures on
    g/h: canonical m = t + h for a maximal abelian t in C_g(h), then all
    parabolics with Levi m relative to one fixed Cartan."""
    ledger = []
    n, hd = g.dim, h.dim
    if (n - hd) % 2:
        ledger.append(LedgerEntry("even_codimension", False,
                                  f"dim g/h = {n - hd} is odd"))
        return ClassificationReport(False, "odd_dimension", None, [], 0,
                                    "", ledger)
    ledger.append(LedgerEntry("even_codimension", True, f"dim g/h = {n - hd}"))
    ch = centralizer(g, h.space)
    t = extend_to_maximal_abelian(g, zero_subalgebra(g), within=ch.space)
    m_space = t.space.add(h.space)
    m = Subalgebra(g, m_space, check=True)
    ok_derived = derived(g, m).space == derived(g, h).space
    ledger.append(LedgerEntry("derived_match", ok_derived, "[m,m] = [h,h]"))
    cm = center(g, m)
    ok_centralizer = centralizer(g, cm.space).space == m_space
    ledger.append(LedgerEntry("m_is_centralizer_of_its_center", ok_centralizer,
                              f"dim m = {m.dim}, dim center(m) = {cm.dim}"))
    fiber = m.dim - hd
    ok_fiber = fiber % 2 == 0
    ledger.append(LedgerEntry("even_fiber", ok_fiber, f"dim m/h = {fiber}"))
    if not (ok_derived and ok_centralizer and ok_fiber):
        reason = "m_not_centralizer_of_its_center" if not ok_centralizer \
            else ("derived_mismatch" if not ok_derived else "odd_fiber")
        return ClassificationReport(False, reason, None, [], 0, "", ledger)
    a = extend_to_maximal_abelian(g, cm)
    rd = root_decomposition(g, a)
    systems = enumerate_positive_systems(rd, m)
    parabolics = [build_parabolic(rd, m, qp) for qp in systems]
    ledger.append(LedgerEntry("parabolic_enumeration", True,
                              f"{len(parabolics)} parabolics with Levi m, "
                              "relative to the chosen Cartan"))
    u = relative_complement(m_space, h.space)
    note = (f"{len(parabolics)} parabolics (relative to one fixed Cartan) x "
            f"continuous moduli of torus structures on a fiber of dim {fiber}")
    return ClassificationReport(True, "", MData(m, u, cm), parabolics,
                                fiber, note, ledger)


# ---------------------------------------------------------------------------
# the verification ledger

def verify_structure(J: ComplexStructure):
    """Machine checks of the structural identities attached to an integrable
    invariant J; returns a list of named pass/fail entries."""
    _require_invariant(J)
    if not is_integrable(J):
        raise ExactError("verification ledger requires an integrable J")
    quot = J.quotient
    g = quot.algebra
    gc = g.complexify()
    n, hd = g.dim, quot.h.dim
    l = plus_space(J)
    tau_l = l.conjugate()
    out = []

    def entry(name, ok, detail=""):
        out.append(LedgerEntry(name, ok, detail))

    real_axes = Subspace.from_vectors(
        2 * n, [_realify(vunit(n, j)) for j in range(n)])
    lr = _realify_space(l)
    entry("gc_equals_g_plus_l", real_axes.add(lr).dim == 2 * n,
          "g + l spans g_C over R")
    entry("gc_equals_l_plus_tau_l", l.add(tau_l).dim == n,
          "l + tau(l) = g_C")
    entry("hc_equals_l_cap_tau_l", l.intersect(tau_l) == quot.h.space,
          "l n tau(l) = h_C")
    entry("l_cap_g_equals_h", real_points(l) == quot.h.space,
          "l n g = h")
    entry("dim_l", 2 * l.dim == n + hd, f"dim_C l = {l.dim}")
    lsub = Subalgebra(gc, l, check=False)
    r = radical(lsub)
    ch = center(g, quot.h)
    entry("dim_r_prime", 2 * (r.dim - ch.dim) == n - hd,
          f"dim_C radical(l) = {r.dim}, dim center(h) = {ch.dim}")
    kc = derived(g, quot.h).space
    levi_ok = (r.space.add(kc) == l and r.space.intersect(kc).dim == 0)
    entry("levi_split", levi_ok, "l = radical(l) (+) [h,h]_C")
    entry("radical_solvable", is_solvable(r), "")
    p, _ = decompose_J(J)
    entry("p_cap_tau_p_is_mc",
          p.space.space.intersect(p.space.space.conjugate())
          == p.levi_real.space,
          "p n tau(p) = m_C")
    if hd == 0:
        entry("l_solvable", is_solvable(lsub),
              "h = 0: l is the solvable Samelson-type subalgebra")
    return out


def _realify(v):
    from .exact import realify_vector
    return realify_vector(v)


def _realify_space(s):
    from .exact import realify_subspace
    return realify_subspace(s)


def nijenhuis_perturbation_trials(J: ComplexStructure, seed=0, trials=20):
    """Perturb every lift by random h elements and require bit-identical
    Nijenhuis values; also checks the antisymmetry and J-twist symmetries."""
    import random
    from fractions import Fraction
    rng = random.Random(seed)
    quot = J.quotient
    g = quot.algebra
    q = quot.dim
    hb = quot.h.basis_vectors()

    def rand_h():
        v = vzero(g.dim)
        for b in hb:
            c = Fraction(rng.randint(-9, 9), rng.randint(1, 9))
            v = vadd(v, vscale(GQ(c), b))
        return v

    failures = []
    evaluations = 0
    for a in range(q):
        for b in range(a + 1, q):
            ua, ub = vunit(q, a), vunit(q, b)
            base = nijenhuis(J, ua, ub)
            evaluations += 1
            if nijenhuis(J, ub, ua) != vneg(base):
                failures.append(f"antisymmetry fails at ({a},{b})")
            tw = nijenhuis(J, J.j.matvec(ua), ub)
            if tw != vneg(J.j.matvec(base)):
                failures.append(f"J-twist symmetry fails at ({a},{b})")
            evaluations += 2
            if hb:
                for _ in range(trials):
                    lifts = (vadd(quot.lift(ua), rand_h()),
                             vadd(quot.lift(ub), rand_h()),
                             vadd(quot.lift(J.j.matvec(ua)), rand_h()),
                             vadd(quot.lift(J.j.matvec(ub)), rand_h()))
                    evaluations += 1
                    if nijenhuis(J, ua, ub, lifts=lifts) != base:
                        failures.append(
                            f"lift perturbation changes N at ({a},{b})")
                        break
    return LedgerEntry("nijenhuis_well_defined", not failures,
                       f"{evaluations} evaluations"
                       + ("" if not failures else "; " + failures[0])), evaluations


# ---------------------------------------------------------------------------
# Hermitian symmetric detection

@dataclass
class SymmetricVerdict:
    status: str            # symmetric | not_symmetric | not_applicable
    reason: str
    checks: list = field(default_factory=list)


def largest_ideal_inside(g: LieAlgebra, h: Subalgebra) -> Subspace:
    """The maximal ad(g)-stable subspace of h."""
    cur = h.space
    while True:
        rows = list(reduction_matrix(cur).rows)
        for j in range(g.dim):
            rows.extend((reduction_matrix(cur) * g.ad(vunit(g.dim, j))).rows)
        nxt = kernel(Matrix(rows))
        if nxt == cur:
            return cur
        cur = nxt


def commutant_dimension(J: ComplexStructure):
    """Dimension over C of the algebra of endomorphisms of g/h commuting
    with both the isotropy action and J."""
    q = J.quotient.dim
    gens = induced_actions(J) + [J.j]
    rows = []
    # unknown X as q*q entries; constraints vec(M X - X M) = 0
    basis_mats = []
    for a in range(q):
        for b in range(q):
            e = Matrix.from_columns(
                [vunit(q, a) if j == b else vzero(q) for j in range(q)])
            basis_mats.append(e)
    for m in gens:
        cols = [(m * e - e * m).flatten() for e in basis_mats]
        rows.extend(Matrix.from_columns(cols).rows)
    dim_real = kernel(Matrix(rows)).dim
    if dim_real % 2:
        raise TheoremViolation("commutant is not J-stable")  # pragma: no cover
    return dim_real // 2


def is_symmetric_pair(g: LieAlgebra, h: Subalgebra,
                      J: ComplexStructure) -> SymmetricVerdict:
    """Detect whether (g, h, J) is an irreducible Hermitian symmetric pair:
    effective irreducible isotropy forces m = h, an abelian nilradical with
    [tau(n), n] in h_C, and the +/-1 involution is an automorphism."""
    _require_invariant(J)
    if not is_integrable(J):
        return SymmetricVerdict("not_applicable", "not_integrable")
    checks = []
    ideal = largest_ideal_inside(g, h)
    cg = center(g, full_subalgebra(g))
    effective = ideal.dim == 0
    checks.append(LedgerEntry("effective", effective,
                              f"largest ideal of g in h has dim {ideal.dim}; "
                              f"h n c_g dim {h.space.intersect(cg.space).dim}"))
    if not effective:
        return SymmetricVerdict("not_applicable", "non_effective", checks)
    cdim = commutant_dimension(J)
    irreducible = cdim == 1
    checks.append(LedgerEntry(
        "irreducible_isotropy", irreducible,
        f"commutant dimension {cdim} over C (Schur criterion; isotropy "
        "action of the compact h is semisimple)"))
    if not irreducible:
        return SymmetricVerdict("not_applicable", "reducible_isotropy", checks)
    p, _ = decompose_J(J)
    m_eq = p.levi_real.space == h.space
    checks.append(LedgerEntry("m_equals_h", m_eq, ""))
    nsp = p.nilradical.space
    n_ab = _abelian_space(g, nsp)
    checks.append(LedgerEntry("nilradical_abelian", n_ab, ""))
    tau_n = nsp.conjugate()
    bracket_ok = all(h.space.contains(g.bracket(a, b))
                     for a in tau_n.basis_vectors()
                     for b in nsp.basis_vectors())
    checks.append(LedgerEntry("bracket_tau_n_n_in_hc", bracket_ok,
                              "[tau(n), n] in h_C"))
    v = real_points(nsp.add(tau_n))
    split_ok = (v.intersect(h.space).dim == 0
                and v.add(h.space).dim == g.dim)
    checks.append(LedgerEntry("cartan_split", split_ok, "g = h (+) V"))
    theta_ok = False
    if split_ok:
        b = Matrix.from_columns(
            list(h.space.basis_vectors()) + list(v.basis_vectors()))
        binv = inverse(b)
        d = [[ZERO] * g.dim for _ in range(g.dim)]
        for i in range(g.dim):
            d[i][i] = ONE if i < h.dim else -ONE
        theta = b * Matrix(d) * binv
        theta_ok = all(
            theta.matvec(g.bracket(vunit(g.dim, i), vunit(g.dim, j)))
            == g.bracket(theta.matvec(vunit(g.dim, i)),
                         theta.matvec(vunit(g.dim, j)))
            for i in range(g.dim) for j in range(i + 1, g.dim))
    checks.append(LedgerEntry("theta_automorphism", theta_ok,
                              "id on h, -id on V"))
    ok = m_eq and n_ab and bracket_ok and split_ok and theta_ok
    return SymmetricVerdict("symmetric" if ok else "not_symmetric",
                            "" if ok else "certificate_failed", checks)


def _abelian_space(g, s: Subspace):
    bs = s.basis_vectors()
    return all(is_zero_vec(g.bracket(a, b))
               for i, a in enumerate(bs) for b in bs[i + 1:])
