"""
Exact integer linear algebra: Smith normal form, kernels, cokernels and
sublattices of Z^m.

Matrices are immutable ``IntegerMatrix`` values holding Python ints, so
coefficient growth is never silently truncated.
"""

from dataclasses import dataclass
from functools import reduce
from math import gcd


class IntegerMatrix:
    """A rows x cols matrix of arbitrary-precision integers."""

    __slots__ = ("rows", "cols", "_entries")

    def __init__(self, entries, rows=None, cols=None):
        entries = [tuple(int(x) for x in row) for row in entries]
        if rows is None:
            rows = len(entries)
        if cols is None:
            cols = len(entries[0]) if entries else 0
        if len(entries) != rows or any(len(row) != cols for row in entries):
            raise ValueError("ragged matrix or shape mismatch")
        self.rows = rows
        self.cols = cols
        self._entries = tuple(entries)

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def from_columns(cls, columns, rows):
        columns = [tuple(c) for c in columns]
        return cls([[c[i] for c in columns] for i in range(rows)], rows, len(columns))

    @property
    def shape(self):
        return (self.rows, self.cols)

    def __getitem__(self, index):
        i, j = index
        return self._entries[i][j]

    def row(self, i):
        return self._entries[i]

    def column(self, j):
        return tuple(row[j] for row in self._entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def tolist(self):
        return [list(row) for row in self._entries]

    def transpose(self):
        return IntegerMatrix([self.column(j) for j in range(self.cols)], self.cols, self.rows)

    @property
    def T(self):
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, IntegerMatrix):
            if self.cols != other.rows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            ocols = other.columns()
            return IntegerMatrix(
                [[sum(a * b for a, b in zip(row, c)) for c in ocols] for row in self._entries],
                self.rows,
                other.cols,
            )
        vec = tuple(other)
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        return tuple(sum(a * b for a, b in zip(row, vec)) for row in self._entries)

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self):
        return hash((self.shape, self._entries))

    def __repr__(self):
        return f"IntegerMatrix({self.tolist()!r}, rows={self.rows}, cols={self.cols})"

    def is_zero(self):
        return all(x == 0 for row in self._entries for x in row)

    def is_diagonal(self):
        return all(
            self._entries[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def diagonal(self):
        return [self._entries[i][i] for i in range(min(self.rows, self.cols))]

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row count mismatch")
        return IntegerMatrix(
            [a + b for a, b in zip(self._entries, other._entries)],
            self.rows,
            self.cols + other.cols,
        )

    def __neg__(self):
        return IntegerMatrix([[-x for x in row] for row in self._entries], self.rows, self.cols)


def as_matrix(m):
    return m if isinstance(m, IntegerMatrix) else IntegerMatrix(m)


def determinant(m):
    """Exact determinant by fraction-free Bareiss elimination."""
    m = as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.tolist()
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1


@dataclass(frozen=True)
class SmithForm:
    """Result of :func:`smith_normal_form`: ``U @ M @ V == D``."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix
    U_inv: IntegerMatrix
    V_inv: IntegerMatrix

    @property
    def invariants(self):
        return [d for d in self.D.diagonal() if d != 0]

    @property
    def rank(self):
        return len(self.invariants)

    def __iter__(self):
        return iter((self.U, self.D, self.V))


def _smallest_pivot(a, t, rows, cols):
    best = None
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            x = row[j]
            if x and (best is None or abs(x) < best[0]):
                best = (abs(x), i, j)
                if best[0] == 1:
                    return best
    return best


def smith_normal_form(m):
    """
    Smith normal form of an integer matrix.

    Returns a :class:`SmithForm` with unimodular ``U`` and ``V`` such that
    ``U @ M @ V`` is diagonal with nonnegative entries ``d1 | d2 | ...``.
    The inverses of ``U`` and ``V`` are tracked alongside, since the
    lattice routines need them.

    Pivots are chosen as the nonzero entry of least absolute value in the
    remaining block, ties broken in row-major order, so the transformation
    matrices are reproducible.
    """
    m = as_matrix(m)
    rows, cols = m.rows, m.cols
    a = m.tolist()
    U = [[int(i == j) for j in range(rows)] for i in range(rows)]
    Ui = [[int(i == j) for j in range(rows)] for i in range(rows)]
    V = [[int(i == j) for j in range(cols)] for i in range(cols)]
    Vi = [[int(i == j) for j in range(cols)] for i in range(cols)]

    # Row op "row_i += q * row_k" on A and U; inverse is col op "col_k -= q * col_i" on Ui.
    def row_add(i, k, q):
        if q == 0:
            return
        ai, ak = a[i], a[k]
        for j in range(cols):
            if ak[j]:
                ai[j] += q * ak[j]
        ui, uk = U[i], U[k]
        for j in range(rows):
            if uk[j]:
                ui[j] += q * uk[j]
        for r in Ui:
            if r[i]:
                r[k] -= q * r[i]

    def row_swap(i, k):
        if i == k:
            return
        a[i], a[k] = a[k], a[i]
        U[i], U[k] = U[k], U[i]
        for r in Ui:
            r[i], r[k] = r[k], r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        U[i] = [-x for x in U[i]]
        for r in Ui:
            r[i] = -r[i]

    # Col op "col_j += q * col_k" on A and V; inverse is row op "row_k -= q * row_j" on Vi.
    def col_add(j, k, q):
        if q == 0:
            return
        for r in a:
            if r[k]:
                r[j] += q * r[k]
        for r in V:
            if r[k]:
                r[j] += q * r[k]
        vj, vk = Vi[j], Vi[k]
        for c in range(cols):
            if vj[c]:
                vk[c] -= q * vj[c]

    def col_swap(j, k):
        if j == k:
            return
        for r in a:
            r[j], r[k] = r[k], r[j]
        for r in V:
            r[j], r[k] = r[k], r[j]
        Vi[j], Vi[k] = Vi[k], Vi[j]

    t = 0
    while t < min(rows, cols):
        piv = _smallest_pivot(a, t, rows, cols)
        if piv is None:
            break
        _, pi, pj = piv
        row_swap(t, pi)
        col_swap(t, pj)
        p = a[t][t]
        dirty = False
        for i in range(t + 1, rows):
            if a[i][t]:
                row_add(i, t, -(a[i][t] // p))
                dirty = dirty or a[i][t] != 0
        for j in range(t + 1, cols):
            if a[t][j]:
                col_add(j, t, -(a[t][j] // p))
                dirty = dirty or a[t][j] != 0
        if dirty:
            continue
        bad = next(
            (i for i in range(t + 1, rows) if any(a[i][j] % p for j in range(t + 1, cols))),
            None,
        )
        if bad is not None:
            row_add(t, bad, 1)
            continue
        if p < 0:
            row_negate(t)
        t += 1

    return SmithForm(
        IntegerMatrix(U, rows, rows),
        IntegerMatrix(a, rows, cols),
        IntegerMatrix(V, cols, cols),
        IntegerMatrix(Ui, rows, rows),
        IntegerMatrix(Vi, cols, cols),
    )


def rank(m):
    return smith_normal_form(m).rank


@dataclass(frozen=True)
class AbelianGroup:
    """
    Finitely generated abelian group Z^free_rank + Z/d1 + ... + Z/dk in
    invariant-factor form (d1 | d2 | ... , every di >= 2).
    """

    free_rank: int = 0
    torsion: tuple = ()

    def __post_init__(self):
        tors = tuple(int(d) for d in self.torsion)
        if self.free_rank < 0:
            raise ValueError("negative free rank")
        if any(d < 2 for d in tors):
            raise ValueError("torsion coefficients must be >= 2")
        if any(tors[k + 1] % tors[k] for k in range(len(tors) - 1)):
            raise ValueError(f"torsion {tors} is not a divisibility chain")
        object.__setattr__(self, "torsion", tors)

    @classmethod
    def from_invariants(cls, free_rank, factors):
        """Canonical form from any list of cyclic orders (0 means Z)."""
        free = free_rank + sum(1 for d in factors if d == 0)
        primes = {}
        for d in (abs(int(x)) for x in factors if x not in (0, 1, -1)):
            for p, e in _factorize(d).items():
                primes.setdefault(p, []).append(p**e)
        width = max((len(v) for v in primes.values()), default=0)
        tors = [1] * width
        for powers in primes.values():
            powers.sort()
            for k, q in enumerate(powers):
                tors[width - len(powers) + k] *= q
        return cls(free, tuple(d for d in tors if d > 1))

    def is_trivial(self):
        return self.free_rank == 0 and not self.torsion

    def __add__(self, other):
        return AbelianGroup.from_invariants(
            self.free_rank + other.free_rank, list(self.torsion) + list(other.torsion)
        )

    def to_json(self):
        return [self.free_rank, list(self.torsion)]

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


def _factorize(n):
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def cokernel_invariants(m):
    """The abelian group Z^rows / (column span of m)."""
    m = as_matrix(m)
    if m.cols == 0:
        return AbelianGroup(m.rows)
    snf = smith_normal_form(m)
    inv = snf.invariants
    return AbelianGroup(m.rows - len(inv), tuple(d for d in inv if d > 1))


class Lattice:
    """
    A subgroup of Z^m, stored by a basis of linearly independent columns.

    Two lattices compare equal when they are the same subgroup, regardless
    of the basis used to describe them.
    """

    __slots__ = ("ambient_rank", "basis")

    def __init__(self, ambient_rank, basis=()):
        basis = tuple(tuple(int(x) for x in v) for v in basis)
        if any(len(v) != ambient_rank for v in basis):
            raise ValueError("basis vector of wrong length")
        if basis and rank(IntegerMatrix.from_columns(basis, ambient_rank)) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        self.ambient_rank = ambient_rank
        self.basis = basis

    @classmethod
    def span(cls, ambient_rank, vectors):
        """Lattice spanned by arbitrary (possibly dependent) integer vectors."""
        vectors = [tuple(v) for v in vectors if any(v)]
        if not vectors:
            return cls(ambient_rank)
        A = IntegerMatrix.from_columns(vectors, ambient_rank)
        snf = smith_normal_form(A)
        # A = U^-1 D V^-1, so span(A) is spanned by d_i * (column i of U^-1).
        cols = [
            tuple(d * x for x in snf.U_inv.column(i))
            for i, d in enumerate(snf.invariants)
        ]
        return cls(ambient_rank, cols)

    @classmethod
    def full(cls, m):
        return cls(m, IntegerMatrix.identity(m).columns())

    @property
    def rank(self):
        return len(self.basis)

    @property
    def matrix(self):
        return IntegerMatrix.from_columns(self.basis, self.ambient_rank)

    def coordinates(self, v):
        """Integer coordinates of ``v`` in this basis, or None if v is not in the lattice."""
        v = tuple(v)
        if len(v) != self.ambient_rank:
            raise ValueError("vector of wrong length")
        if not self.basis:
            return () if not any(v) else None
        snf = smith_normal_form(self.matrix)
        w = snf.U @ v
        inv = snf.invariants
        if any(w[i] for i in range(len(inv), len(w))):
            return None
        if any(w[i] % d for i, d in enumerate(inv)):
            return None
        y = [w[i] // d for i, d in enumerate(inv)] + [0] * (self.rank - len(inv))
        return snf.V @ y

    def solve_many(self, vectors):
        """Coordinates of several vectors, sharing one factorization."""
        if not self.basis:
            out = []
            for v in vectors:
                if any(v):
                    raise ValueError(f"{tuple(v)} is not in the lattice")
                out.append(())
            return out
        snf = smith_normal_form(self.matrix)
        inv = snf.invariants
        out = []
        for v in vectors:
            w = snf.U @ tuple(v)
            if any(w[i] for i in range(len(inv), len(w))) or any(
                w[i] % d for i, d in enumerate(inv)
            ):
                raise ValueError(f"{tuple(v)} is not in the lattice")
            out.append(snf.V @ [w[i] // d for i, d in enumerate(inv)])
        return out

    def __contains__(self, v):
        return self.coordinates(v) is not None

    def contains_lattice(self, other):
        return all(v in self for v in other.basis)

    def __eq__(self, other):
        if not isinstance(other, Lattice):
            return NotImplemented
        return (
            self.ambient_rank == other.ambient_rank
            and self.rank == other.rank
            and self.contains_lattice(other)
            and other.contains_lattice(self)
        )

    def __hash__(self):
        return hash((self.ambient_rank, self.rank))

    def __repr__(self):
        return f"Lattice({self.ambient_rank}, {list(self.basis)!r})"

    def is_saturated(self):
        """True when Z^m / L is torsion-free."""
        if not self.basis:
            return True
        return not cokernel_invariants(self.matrix).torsion

    def intersect(self, other):
        return lattice_intersect(self, other)


def kernel_lattice(m):
    """The lattice {v in Z^cols : M v = 0}; always saturated."""
    m = as_matrix(m)
    if m.rows == 0:
        return Lattice.full(m.cols)
    snf = smith_normal_form(m)
    r = snf.rank
    return Lattice(m.cols, [snf.V.column(j) for j in range(r, m.cols)])


def lattice_intersect(A, B):
    """Intersection of two sublattices of the same Z^m."""
    if A.ambient_rank != B.ambient_rank:
        raise ValueError(
            f"ambient rank mismatch: {A.ambient_rank} vs {B.ambient_rank}"
        )
    m = A.ambient_rank
    if not A.basis or not B.basis:
        return Lattice(m)
    # Solutions of A x = B y; A has independent columns so x determines the point.
    stacked = A.matrix.hstack(-B.matrix)
    ker = kernel_lattice(stacked)
    k = A.rank
    return Lattice(m, [A.matrix @ v[:k] for v in ker.basis])


def vector_gcd(v):
    return reduce(gcd, (abs(x) for x in v), 0)
