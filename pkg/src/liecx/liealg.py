"""Lie algebras given by rational structure constants, with the standard
constructions: centralizer, normalizer, derived algebra, center, quotients,
complexification, Killing form, radical and Cartan extension.

A compact Lie algebra here means one carrying a validated ad-invariant
positive definite inner product; that hypothesis is what every downstream
theorem check relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .exact import (
    GQ, ONE, ZERO, I, Matrix, Subspace, ExactError, DimensionMismatch,
    kernel, inverse, vec, vunit, vzero, vadd, vsub, vscale, vconj,
    is_zero_vec, relative_complement, span_sum,
)


class LieAlgebraError(ExactError):
    pass


class NotClosed(LieAlgebraError):
    pass


class NotAbelian(LieAlgebraError):
    pass


class AlreadyComplex(LieAlgebraError):
    pass


@dataclass
class ValidationResult:
    ok: bool
    failures: list = field(default_factory=list)

    def first_failure(self):
        return self.failures[0] if self.failures else None


class LieAlgebra:
    """A Lie algebra by its bracket table [e_i, e_j] = table[i][j].

    The same structure tensor serves the real algebra and its
    complexification; `complexified` only switches which scalars a vector may
    carry and enables the conjugation tau.
    """

    def __init__(self, table, inner_product=None, name="", complexified=False):
        self.table = tuple(tuple(vec(v) for v in row) for row in table)
        self.dim = len(self.table)
        for row in self.table:
            if len(row) != self.dim or any(len(v) != self.dim for v in row):
                raise DimensionMismatch("structure table must be dim x dim x dim")
        self.inner_product = inner_product if inner_product is not None \
            else Matrix.identity(self.dim)
        self.name = name
        self.complexified = complexified
        self._killing_gram = None
        self._complexification = None

    @classmethod
    def from_structure_constants(cls, c, **kw):
        """c[i][j][k] with [e_i, e_j] = sum_k c[i][j][k] e_k."""
        return cls([[vec(ck) for ck in row] for row in c], **kw)

    def structure_constants(self):
        return self.table

    # -- basic algebra ------------------------------------------------------

    def bracket(self, x, y):
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatch("bracket operands must have ambient length")
        out = vzero(self.dim)
        for i, xi in enumerate(x):
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                if yj.is_zero():
                    continue
                tv = self.table[i][j]
                if any(tv):
                    out = vadd(out, vscale(xi * yj, tv))
        return out

    def ad(self, x) -> Matrix:
        """Matrix of ad(x): columns are [x, e_j]."""
        cols = [self.bracket(x, vunit(self.dim, j)) for j in range(self.dim)]
        return Matrix.from_columns(cols)

    def inner(self, x, y):
        return sum_entries(x, self.inner_product.matvec(y))

    def killing_gram(self) -> Matrix:
        """Gram matrix of the Killing form kappa(e_i, e_j) = tr(ad e_i ad e_j)."""
        if self._killing_gram is None:
            n = self.dim
            g = [[ZERO] * n for _ in range(n)]
            for i in range(n):
                for j in range(i, n):
                    s = ZERO
                    for k in range(n):
                        for l in range(n):
                            s = s + self.table[i][k][l] * self.table[j][l][k]
                    g[i][j] = s
                    g[j][i] = s
            self._killing_gram = Matrix(g)
        return self._killing_gram

    def killing(self, x, y):
        return sum_entries(x, self.killing_gram().matvec(y))

    # -- complexification ---------------------------------------------------

    def complexify(self) -> "LieAlgebra":
        if self.complexified:
            raise AlreadyComplex(self.name)
        if self._complexification is None:
            gc = LieAlgebra(self.table, inner_product=self.inner_product,
                            name=self.name + "_C", complexified=True)
            gc._killing_gram = self._killing_gram
            self._complexification = gc
        return self._complexification

    def conjugate(self, x):
        """tau: coordinate-wise conjugation, fixing exactly the real points."""
        if not self.complexified:
            raise LieAlgebraError("conjugation lives on the complexification")
        return vconj(x)

    # -- validation ---------------------------------------------------------

    def validate(self) -> ValidationResult:
        failures = []
        n = self.dim
        for i in range(n):
            for j in range(i, n):
                lhs = self.table[i][j]
                rhs = vscale(GQ(-1), self.table[j][i])
                if lhs != rhs:
                    failures.append(f"antisymmetry fails on (e{i}, e{j})")
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    ei, ej, ek = vunit(n, i), vunit(n, j), vunit(n, k)
                    s = vadd(vadd(
                        self.bracket(self.bracket(ei, ej), ek),
                        self.bracket(self.bracket(ej, ek), ei)),
                        self.bracket(self.bracket(ek, ei), ej))
                    if not is_zero_vec(s):
                        failures.append(f"Jacobi fails on (e{i}, e{j}, e{k})")
        ip = self.inner_product
        if ip != ip.transpose():
            failures.append("inner product not symmetric")
        if not self.complexified and not _positive_definite(ip):
            failures.append("inner product not positive definite")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    # <[e_i,e_j], e_k> + <e_j, [e_i,e_k]> = 0
                    a = sum_entries(self.table[i][j], ip.matvec(vunit(n, k)))
                    b = sum_entries(vunit(n, j), ip.matvec(self.table[i][k]))
                    if not (a + b).is_zero():
                        failures.append(
                            f"inner product not ad-invariant on (e{i}, e{j}, e{k})")
                        break
                else:
                    continue
                break
        return ValidationResult(not failures, failures)

    def __repr__(self):
        return f"LieAlgebra({self.name or 'anon'}, dim {self.dim})"


def sum_entries(x, y):
    s = ZERO
    for a, b in zip(x, y, strict=True):
        s = s + a * b
    return s


def _positive_definite(m: Matrix) -> bool:
    # Sylvester: all leading principal minors positive (entries must be real).
    if not m.is_real():
        return False
    n = m.nrows
    for k in range(1, n + 1):
        sub = Matrix([r[:k] for r in m.rows[:k]])
        d = _det(sub)
        if d.im != 0 or d.re <= 0:
            return False
    return True


def _det(m: Matrix):
    rows = [list(r) for r in m.rows]
    n = m.nrows
    d = ONE
    for c in range(n):
        piv = next((r for r in range(c, n) if not rows[r][c].is_zero()), None)
        if piv is None:
            return ZERO
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d = d * rows[c][c]
        inv = ONE / rows[c][c]
        for r in range(c + 1, n):
            f = rows[r][c] * inv
            if not f.is_zero():
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[c])]
    return d


class Subalgebra:
    """A subspace of a LieAlgebra carrying a bracket-closure certificate."""

    def __init__(self, algebra: LieAlgebra, space: Subspace, check=True):
        if space.ambient_dim != algebra.dim:
            raise DimensionMismatch("subalgebra ambient mismatch")
        self.algebra = algebra
        self.space = space
        if check and not _closed_under_bracket(algebra, space):
            raise NotClosed("subspace is not closed under the bracket")
        self.closed = True

    @classmethod
    def span(cls, algebra, vectors, check=True):
        return cls(algebra, Subspace.from_vectors(algebra.dim, vectors), check=check)

    @property
    def dim(self):
        return self.space.dim

    def basis_vectors(self):
        return self.space.basis_vectors()

    def is_abelian(self):
        bs = self.basis_vectors()
        return all(is_zero_vec(self.algebra.bracket(a, b))
                   for i, a in enumerate(bs) for b in bs[i + 1:])

    def __eq__(self, o):
        if not isinstance(o, Subalgebra):
            return NotImplemented
        return self.algebra is o.algebra and self.space == o.space

    def __hash__(self):
        return hash((id(self.algebra), self.space))

    def __repr__(self):
        return f"Subalgebra(dim {self.dim} of {self.algebra.name or 'anon'})"


def _closed_under_bracket(g, space):
    bs = space.basis_vectors()
    for i, a in enumerate(bs):
        for b in bs[i + 1:]:
            if not space.contains(g.bracket(a, b)):
                return False
    return True


def zero_subalgebra(g):
    return Subalgebra(g, Subspace.zero(g.dim), check=False)


def full_subalgebra(g):
    return Subalgebra(g, Subspace.full(g.dim), check=False)


def reduction_matrix(space: Subspace) -> Matrix:
    """Matrix of v -> residual of v mod space (linear, kernel = space)."""
    n = space.ambient_dim
    cols = [space.reduce(vunit(n, j)) for j in range(n)]
    return Matrix.from_columns(cols)


def centralizer(g: LieAlgebra, s: Subspace) -> Subalgebra:
    """{x : [x, v] = 0 for all v in s}; always bracket-closed."""
    if s.dim == 0:
        return full_subalgebra(g)
    rows = []
    for v in s.basis_vectors():
        rows.extend(g.ad(v).rows)  # [x, v] = -ad(v) x; sign irrelevant for kernel
    return Subalgebra(g, kernel(Matrix(rows)), check=False)


def normalizer(g: LieAlgebra, h: Subalgebra) -> Subalgebra:
    """{x : [x, h] subset of h}; contains h."""
    if h.dim == 0:
        return full_subalgebra(g)
    rh = reduction_matrix(h.space)
    rows = []
    for v in h.basis_vectors():
        rows.extend((rh * g.ad(v)).rows)
    return Subalgebra(g, kernel(Matrix(rows)), check=False)


def derived(g: LieAlgebra, s: Subalgebra) -> Subalgebra:
    """[s, s], canonicalized."""
    bs = s.basis_vectors()
    brackets = [g.bracket(a, b) for i, a in enumerate(bs) for b in bs[i + 1:]]
    return Subalgebra(g, Subspace.from_vectors(g.dim, brackets), check=False)


def center(g: LieAlgebra, s: Subalgebra) -> Subalgebra:
    """{x in s : [x, s] = 0}."""
    return Subalgebra(g, s.space.intersect(centralizer(g, s.space).space),
                      check=False)


def derived_series_reaches_zero(g, space: Subspace):
    cur = space
    while cur.dim > 0:
        bs = cur.basis_vectors()
        nxt = Subspace.from_vectors(
            g.dim, [g.bracket(a, b) for i, a in enumerate(bs) for b in bs[i + 1:]])
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return True


def is_solvable(s: Subalgebra) -> bool:
    return derived_series_reaches_zero(s.algebra, s.space)


def is_nilpotent(s: Subalgebra) -> bool:
    g = s.algebra
    cur = s.space
    while cur.dim > 0:
        nxt = Subspace.from_vectors(
            g.dim, [g.bracket(a, b) for a in s.basis_vectors()
                    for b in cur.basis_vectors()])
        if nxt.dim == cur.dim:
            return False
        cur = nxt
    return True


def radical(l: Subalgebra) -> Subalgebra:
    """Radical of l by the Killing-perpendicularity criterion: the set of
    x in l with kappa_l(x, [l, l]) = 0, kappa_l computed inside l."""
    g = l.algebra
    bs = l.basis_vectors()
    d = len(bs)
    if d == 0:
        return l
    # ad of l on itself, in l-coordinates
    ad_l = []
    for u in bs:
        cols = [l.space.coords(g.bracket(u, v)) for v in bs]
        ad_l.append(Matrix.from_columns(cols))
    gram = Matrix([[(ad_l[i] * ad_l[j]).trace() for j in range(d)] for i in range(d)])
    der = Subspace.from_vectors(
        d, [l.space.coords(g.bracket(a, b))
            for i, a in enumerate(bs) for b in bs[i + 1:]])
    if der.dim == 0:
        return l
    rows = [gram.matvec(dv) for dv in der.basis_vectors()]  # symmetric gram
    ker = kernel(Matrix(rows))
    vecs = []
    for c in ker.basis_vectors():
        v = vzero(g.dim)
        for ci, b in zip(c, bs):
            v = vadd(v, vscale(ci, b))
        vecs.append(v)
    return Subalgebra(g, Subspace.from_vectors(g.dim, vecs), check=False)


def extend_to_maximal_abelian(g: LieAlgebra, t: Subalgebra,
                              within: Subspace | None = None) -> Subalgebra:
    """Greedy extension of the abelian t to a maximal abelian subalgebra
    (restricted to `within` if given).  With no restriction the result is
    self-centralizing, i.e. a Cartan subalgebra of compact g."""
    if not t.is_abelian():
        raise NotAbelian("starting subalgebra is not abelian")
    a = t.space
    while True:
        c = centralizer(g, a).space
        if within is not None:
            c = c.intersect(within)
        if c == a:
            break
        grew = False
        for v in c.basis_vectors():
            if not a.contains(v):
                a = a.add(Subspace.from_vectors(g.dim, [v]))
                grew = True
                break
        if not grew:  # pragma: no cover
            raise LieAlgebraError("centralizer strictly contains a but adds no vector")
    return Subalgebra(g, a, check=False)


@dataclass
class Quotient:
    """g / h with a deterministic section: the complement is the pivot
    complement of h, projection o section = id, kernel(projection) = h."""

    algebra: LieAlgebra
    h: Subalgebra
    complement: Subspace
    projection: Matrix
    section: Matrix

    @property
    def dim(self):
        return self.algebra.dim - self.h.dim

    def project(self, x):
        return self.projection.matvec(x)

    def lift(self, u):
        return self.section.matvec(u)

    def induced_map(self, x) -> Matrix:
        """The action of ad(x) on g/h (x must normalize h for this to be
        well defined; callers check)."""
        cols = [self.project(self.algebra.bracket(x, self.lift(u)))
                for u in (Matrix.identity(self.dim).rows if self.dim else [])]
        return Matrix.from_columns(cols) if cols else Matrix.zeros(0, 0)


def quotient(g: LieAlgebra, h: Subalgebra) -> Quotient:
    comp = h.space.complement()
    n, q = g.dim, comp.dim
    cols = list(h.space.basis_vectors()) + list(comp.basis_vectors())
    b = Matrix.from_columns(cols)
    binv = inverse(b)
    projection = Matrix(binv.rows[h.dim:]) if q else Matrix.zeros(0, n)
    section = Matrix.from_columns(list(comp.basis_vectors())) if q \
        else Matrix.zeros(n, 0)
    return Quotient(g, h, comp, projection, section)
