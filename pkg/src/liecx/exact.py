"""Exact linear algebra over the rationals and Gaussian rationals.

Scalars are Gaussian rationals a + b*i with a, b exact rationals kept in
lowest terms by fractions.Fraction.  Everything here is pure and
deterministic: re-running any operation yields bit-identical output.
"""

from __future__ import annotations

from fractions import Fraction


class ExactError(Exception):
    pass


class DimensionMismatch(ExactError):
    pass


class AmbientMismatch(ExactError):
    pass


class IrrationalSpectrum(ExactError):
    pass


def parse_rational(s):
    """Parse "p/q" or "p" into a Fraction; the denominator must be nonzero."""
    try:
        return Fraction(str(s))
    except (ValueError, ZeroDivisionError) as e:
        raise ExactError(f"bad rational literal {s!r}: {e}") from None


def format_rational(x: Fraction) -> str:
    return str(x)


class GQ:
    """Gaussian rational a + b*i."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def coerce(x):
        if isinstance(x, GQ):
            return x
        if isinstance(x, (int, Fraction)):
            return GQ(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to GQ")

    def __add__(self, o):
        o = GQ.coerce(o)
        return GQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GQ(-self.re, -self.im)

    def __sub__(self, o):
        o = GQ.coerce(o)
        return GQ(self.re - o.re, self.im - o.im)

    def __rsub__(self, o):
        return GQ.coerce(o) - self

    def __mul__(self, o):
        o = GQ.coerce(o)
        return GQ(self.re * o.re - self.im * o.im,
                  self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = GQ.coerce(o)
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GQ((self.re * o.re + self.im * o.im) / d,
                  (self.im * o.re - self.re * o.im) / d)

    def __rtruediv__(self, o):
        return GQ.coerce(o) / self

    def conjugate(self):
        return GQ(self.re, -self.im)

    def is_zero(self):
        return self.re == 0 and self.im == 0

    def is_rational(self):
        return self.im == 0

    def __eq__(self, o):
        if isinstance(o, (int, Fraction)):
            return self.re == o and self.im == 0
        if not isinstance(o, GQ):
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        if self.im == 0:
            return f"{self.re}"
        if self.re == 0:
            return f"{self.im}*i"
        return f"{self.re}{'+' if self.im > 0 else '-'}{abs(self.im)}*i"

    def sort_key(self):
        return (self.re, self.im)


ZERO = GQ(0)
ONE = GQ(1)
I = GQ(0, 1)


# ---------------------------------------------------------------------------
# vectors: plain tuples of GQ

def vec(entries):
    return tuple(GQ.coerce(x) for x in entries)


def vzero(n):
    return (ZERO,) * n


def vunit(n, i):
    return tuple(ONE if j == i else ZERO for j in range(n))


def vadd(a, b):
    return tuple(x + y for x, y in zip(a, b, strict=True))


def vsub(a, b):
    return tuple(x - y for x, y in zip(a, b, strict=True))


def vneg(a):
    return tuple(-x for x in a)


def vscale(c, a):
    c = GQ.coerce(c)
    return tuple(c * x for x in a)


def vconj(a):
    return tuple(x.conjugate() for x in a)


def vdot(a, b):
    s = ZERO
    for x, y in zip(a, b, strict=True):
        s = s + x * y
    return s


def is_zero_vec(a):
    return all(x.is_zero() for x in a)


def is_real_vec(a):
    return all(x.im == 0 for x in a)


class Matrix:
    """Dense matrix of Gaussian rationals; dimensions fixed at construction."""

    __slots__ = ("rows", "nrows", "ncols")

    def __init__(self, rows):
        self.rows = tuple(vec(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        for r in self.rows:
            if len(r) != self.ncols:
                raise DimensionMismatch("ragged rows")

    @classmethod
    def identity(cls, n):
        return cls([vunit(n, i) for i in range(n)])

    @classmethod
    def zeros(cls, r, c):
        if r == 0:
            m = cls([])
            m.ncols = c
            return m
        return cls([vzero(c) for _ in range(r)])

    @classmethod
    def from_columns(cls, cols):
        return cls(cols).transpose()

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return tuple(r[j] for r in self.rows)

    def transpose(self):
        return Matrix([self.column(j) for j in range(self.ncols)])

    def __add__(self, o):
        return Matrix([vadd(a, b) for a, b in zip(self.rows, o.rows, strict=True)])

    def __sub__(self, o):
        return Matrix([vsub(a, b) for a, b in zip(self.rows, o.rows, strict=True)])

    def __neg__(self):
        return Matrix([vneg(r) for r in self.rows])

    def scale(self, c):
        return Matrix([vscale(c, r) for r in self.rows])

    def __mul__(self, o):
        if isinstance(o, Matrix):
            if self.ncols != o.nrows:
                raise DimensionMismatch(f"{self.ncols} != {o.nrows}")
            ot = o.transpose()
            return Matrix([[vdot(r, c) for c in ot.rows] for r in self.rows])
        return NotImplemented

    def matvec(self, v):
        if len(v) != self.ncols:
            raise DimensionMismatch(f"matvec: {len(v)} != {self.ncols}")
        return tuple(vdot(r, v) for r in self.rows)

    def trace(self):
        if self.nrows != self.ncols:
            raise DimensionMismatch("trace of non-square matrix")
        s = ZERO
        for i in range(self.nrows):
            s = s + self.rows[i][i]
        return s

    def conjugate(self):
        return Matrix([vconj(r) for r in self.rows])

    def is_zero(self):
        return all(is_zero_vec(r) for r in self.rows)

    def is_real(self):
        return all(is_real_vec(r) for r in self.rows)

    def flatten(self):
        return tuple(x for r in self.rows for x in r)

    def __eq__(self, o):
        if not isinstance(o, Matrix):
            return NotImplemented
        return self.rows == o.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Matrix([" + ",\n        ".join(str(list(r)) for r in self.rows) + "])"


def rref(m: Matrix):
    """Reduced row-echelon form.  Returns (rref matrix with zero rows dropped,
    pivot column tuple, rank)."""
    rows = [list(r) for r in m.rows]
    nr, nc = m.nrows, m.ncols
    pivots = []
    pr = 0
    for pc in range(nc):
        pr_row = None
        for r in range(pr, nr):
            if not rows[r][pc].is_zero():
                pr_row = r
                break
        if pr_row is None:
            continue
        rows[pr], rows[pr_row] = rows[pr_row], rows[pr]
        inv = ONE / rows[pr][pc]
        rows[pr] = [inv * x for x in rows[pr]]
        for r in range(nr):
            if r != pr and not rows[r][pc].is_zero():
                f = rows[r][pc]
                rows[r] = [x - f * y for x, y in zip(rows[r], rows[pr])]
        pivots.append(pc)
        pr += 1
        if pr == nr:
            break
    return Matrix(rows[:pr]) if pr else Matrix.zeros(0, nc), tuple(pivots), pr


def kernel(m: Matrix) -> "Subspace":
    """Full solution space of m x = 0 as a canonical subspace of dim ncols."""
    red, pivots, rank = rref(m)
    nc = m.ncols
    free = [c for c in range(nc) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * nc
        v[f] = ONE
        for r, p in enumerate(pivots):
            v[p] = -red[r, f]
        basis.append(v)
    return Subspace.from_vectors(nc, basis)


def solve(m: Matrix, b):
    """One exact solution of m x = b (free variables set to 0), or None."""
    aug = Matrix([list(r) + [bv] for r, bv in zip(m.rows, b, strict=True)])
    red, pivots, rank = rref(aug)
    if m.ncols in pivots:
        return None
    x = [ZERO] * m.ncols
    for r, p in enumerate(pivots):
        x[p] = red[r, m.ncols]
    return tuple(x)


def inverse(m: Matrix) -> Matrix:
    if m.nrows != m.ncols:
        raise DimensionMismatch("inverse of non-square matrix")
    n = m.nrows
    aug = Matrix([list(m.rows[i]) + list(vunit(n, i)) for i in range(n)])
    red, pivots, rank = rref(aug)
    if rank < n or pivots[:n] != tuple(range(n)):
        raise ExactError("matrix is singular")
    return Matrix([r[n:] for r in red.rows])


class Subspace:
    """A subspace held as a reduced row-echelon basis; equality is syntactic.

    The RREF basis is the canonical representative, so two subspaces are
    equal iff their basis matrices are identical.
    """

    __slots__ = ("ambient_dim", "basis", "pivots")

    def __init__(self, ambient_dim, basis: Matrix, pivots):
        self.ambient_dim = ambient_dim
        self.basis = basis
        self.pivots = tuple(pivots)

    @classmethod
    def from_vectors(cls, ambient_dim, vectors):
        vectors = list(vectors)
        if not vectors:
            return cls(ambient_dim, Matrix.zeros(0, ambient_dim), ())
        for v in vectors:
            if len(v) != ambient_dim:
                raise AmbientMismatch(f"vector of length {len(v)} in ambient {ambient_dim}")
        red, pivots, rank = rref(Matrix(vectors))
        return cls(ambient_dim, red, pivots)

    @classmethod
    def zero(cls, ambient_dim):
        return cls.from_vectors(ambient_dim, [])

    @classmethod
    def full(cls, ambient_dim):
        return cls.from_vectors(ambient_dim, Matrix.identity(ambient_dim).rows)

    @property
    def dim(self):
        return self.basis.nrows

    def basis_vectors(self):
        return self.basis.rows

    def reduce(self, v):
        """Residual of v after eliminating the pivot coordinates; zero iff v is a member."""
        if len(v) != self.ambient_dim:
            raise AmbientMismatch(f"{len(v)} != {self.ambient_dim}")
        v = tuple(v)
        for row, p in zip(self.basis.rows, self.pivots):
            c = v[p]
            if not c.is_zero():
                v = vsub(v, vscale(c, row))
        return v

    def contains(self, v):
        return is_zero_vec(self.reduce(v))

    def contains_subspace(self, other):
        return all(self.contains(b) for b in other.basis_vectors())

    def coords(self, v):
        """Coordinates of a member vector in the RREF basis (its pivot entries)."""
        if not self.contains(v):
            raise ExactError("vector not in subspace")
        return tuple(v[p] for p in self.pivots)

    def add(self, other):
        self._check(other)
        return Subspace.from_vectors(
            self.ambient_dim, list(self.basis.rows) + list(other.basis.rows))

    __or__ = add

    def intersect(self, other):
        self._check(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # x = A^T a = B^T b  <=>  (A^T | -B^T)(a;b) = 0
        at = self.basis.transpose()
        bt = other.basis.transpose()
        stacked = Matrix([list(ar) + list(vneg(br))
                          for ar, br in zip(at.rows, bt.rows)])
        ker = kernel(stacked)
        vecs = []
        for k in ker.basis_vectors():
            a = k[:self.dim]
            v = vzero(self.ambient_dim)
            for c, row in zip(a, self.basis.rows):
                v = vadd(v, vscale(c, row))
            vecs.append(v)
        return Subspace.from_vectors(self.ambient_dim, vecs)

    __and__ = intersect

    def complement(self):
        """The coordinate subspace spanned by the non-pivot axes."""
        axes = [vunit(self.ambient_dim, c)
                for c in range(self.ambient_dim) if c not in self.pivots]
        return Subspace.from_vectors(self.ambient_dim, axes)

    def conjugate(self):
        return Subspace.from_vectors(
            self.ambient_dim, [vconj(b) for b in self.basis_vectors()])

    def is_real(self):
        return self.basis.is_real()

    def _check(self, other):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(f"{self.ambient_dim} != {other.ambient_dim}")

    def __eq__(self, o):
        if not isinstance(o, Subspace):
            return NotImplemented
        return self.ambient_dim == o.ambient_dim and self.basis == o.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of {self.ambient_dim})"


def span_sum(ambient_dim, subspaces):
    vecs = []
    for s in subspaces:
        vecs.extend(s.basis_vectors())
    return Subspace.from_vectors(ambient_dim, vecs)


def relative_complement(outer: Subspace, inner: Subspace) -> Subspace:
    """Deterministic complement of inner within outer, spanned by the first
    outer basis rows that extend inner's span."""
    if not outer.contains_subspace(inner):
        raise ExactError("inner is not contained in outer")
    chosen = []
    cur = [list(b) for b in inner.basis_vectors()]
    cur_space = inner
    for row in outer.basis_vectors():
        if not cur_space.contains(row):
            chosen.append(row)
            cur_space = cur_space.add(Subspace.from_vectors(outer.ambient_dim, [row]))
    return Subspace.from_vectors(outer.ambient_dim, chosen)


# ---------------------------------------------------------------------------
# realification: a complex ambient of dim n viewed as a rational space of
# dim 2n with coordinates (re0, im0, re1, im1, ...)

def realify_vector(v):
    out = []
    for x in v:
        out.append(GQ(x.re))
        out.append(GQ(x.im))
    return tuple(out)


def realify_subspace(s: Subspace) -> Subspace:
    vecs = []
    for b in s.basis_vectors():
        vecs.append(realify_vector(b))
        vecs.append(realify_vector(vscale(I, b)))
    return Subspace.from_vectors(2 * s.ambient_dim, vecs)


def real_points(s: Subspace) -> Subspace:
    """The rational subspace of real vectors contained in the complex span s."""
    w = s.intersect(s.conjugate())
    vecs = []
    for b in w.basis_vectors():
        vecs.append(vadd(b, vconj(b)))
        ib = vscale(I, b)
        vecs.append(vadd(ib, vconj(ib)))
    out = Subspace.from_vectors(s.ambient_dim, vecs)
    if not out.is_real():
        raise ExactError("real_points produced a non-real basis")  # pragma: no cover
    return out


# ---------------------------------------------------------------------------
# characteristic polynomial and rational eigenvalues

def charpoly(m: Matrix):
    """Monic characteristic polynomial coefficients [1, c1, ..., cn] of
    det(x I - m), by the Faddeev-LeVerrier recursion (exact)."""
    if m.nrows != m.ncols:
        raise DimensionMismatch("charpoly of non-square matrix")
    n = m.nrows
    coeffs = [ONE]
    nmat = Matrix.identity(n)
    for k in range(1, n + 1):
        mk = m * nmat
        ck = -(mk.trace() / GQ(k))
        coeffs.append(ck)
        nmat = mk + Matrix.identity(n).scale(ck)
    return coeffs


def _divisors(n):
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _poly_eval(coeffs, x):
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def _synthetic_div(coeffs, root):
    out = [coeffs[0]]
    for c in coeffs[1:]:
        out.append(c + out[-1] * root)
    assert out[-1] == 0
    return out[:-1]


def rational_eigenvalues(m: Matrix):
    """All eigenvalues of m, with multiplicity, as exact rationals.

    The characteristic polynomial must have rational coefficients and split
    over Q; otherwise IrrationalSpectrum is raised.  Entries may be Gaussian
    rationals (the use case is i * ad(h) acting on a complexified algebra).
    """
    n = m.nrows
    cg = charpoly(m)
    if any(c.im != 0 for c in cg):
        raise IrrationalSpectrum("characteristic polynomial is not rational")
    coeffs = [c.re for c in cg]
    roots = []
    # zero eigenvalues: strip trailing zero coefficients
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs = coeffs[:-1]
        roots.append(Fraction(0))
    if len(coeffs) > 1:
        from math import lcm
        den = lcm(*[c.denominator for c in coeffs])
        ints = [int(c * den) for c in coeffs]
        cands = set()
        for p in _divisors(ints[-1]):
            for q in _divisors(ints[0]):
                cands.add(Fraction(p, q))
                cands.add(Fraction(-p, q))
        fr = [Fraction(c) for c in coeffs]
        for cand in sorted(cands):
            while len(fr) > 1 and _poly_eval(fr, cand) == 0:
                roots.append(cand)
                fr = _synthetic_div(fr, cand)
        if len(fr) > 1:
            raise IrrationalSpectrum(
                f"only {len(roots)} of {n} eigenvalues are rational")
    return sorted(roots)
