"""
Independent reference computations used by the tests.  Nothing here calls
the Smith-form, lattice or homology code of the package.
"""

import itertools
from fractions import Fraction
from math import gcd

import sympy
from sympy.matrices.normalforms import invariant_factors

from quadrisect.presentations import link_group
from quadrisect.tangles import TrivialTangle


def sympy_invariants(rows):
    """Nonzero invariant factors of an integer matrix, via sympy."""
    if not rows or not rows[0]:
        return []
    M = sympy.Matrix(rows)
    return [abs(int(d)) for d in invariant_factors(M, domain=sympy.ZZ) if d != 0]


def bareiss_det(rows):
    """Exact determinant by fraction-free elimination."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
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
    return sign * a[n - 1][n - 1]


def determinantal_invariants(rows):
    """Invariant factors from gcds of k x k minors (small matrices only)."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    divisors = [1]
    for k in range(1, min(m, n) + 1):
        g = 0
        for I in itertools.combinations(range(m), k):
            for J in itertools.combinations(range(n), k):
                g = gcd(g, bareiss_det([[rows[i][j] for j in J] for i in I]))
        if g == 0:
            break
        divisors.append(g)
    return [divisors[k] // divisors[k - 1] for k in range(1, len(divisors))]


def rational_solve(basis, v):
    """Rational coefficients c with sum c_k basis_k = v, or None."""
    if not basis:
        return [] if not any(v) else None
    M = sympy.Matrix([list(b) for b in basis]).T
    try:
        sol, params = M.gauss_jordan_solve(sympy.Matrix(list(v)))
    except ValueError:
        return None
    if params.shape[0]:
        sol = sol.subs({p: 0 for p in params})
    return [Fraction(int(x.p), int(x.q)) for x in sol]


def brute_member(basis, v):
    """v in the Z-span of linearly independent ``basis``."""
    c = rational_solve(basis, v)
    return c is not None and all(x.denominator == 1 for x in c)


def box(dim, radius):
    return itertools.product(range(-radius, radius + 1), repeat=dim)


def fox_double_cover_h1(beta):
    """
    H1 of the 2-fold branched cover of S^3 over the plat closure of
    ``beta``: Fox derivatives of the link group at t = -1, with one
    meridian column deleted.
    """
    b = beta.strands // 2
    G = link_group(TrivialTangle(b), TrivialTangle(b, beta))
    n = G.ngens
    rows = []
    for r in G.relators:
        row = [0] * n
        sign = 1
        for g, e in r:
            if e == 1:
                row[g] += sign
                sign = -sign
            else:
                sign = -sign
                row[g] -= sign
        rows.append(row[1:])
    inv = sympy_invariants(rows)
    free = (n - 1) - len(inv)
    return free, sorted(d for d in inv if d > 1)


def matching_by_tracing(b, letters):
    """
    Endpoint pairing of a plat: follow each cap strand through the braid,
    tracking positions only.
    """
    pos = list(range(2 * b))  # pos[k] = current position of the strand from cap endpoint k
    for i, _ in letters:
        for k in range(2 * b):
            if pos[k] == i - 1:
                pos[k] = i
            elif pos[k] == i:
                pos[k] = i - 1
    m = [None] * (2 * b)
    for k in range(0, 2 * b, 2):
        p, q = pos[k], pos[k + 1]
        m[p], m[q] = q, p
    return tuple(m)


def orbit_count(n, matchings):
    seen, count = set(), 0
    for s in range(n):
        if s in seen:
            continue
        count += 1
        stack = [s]
        while stack:
            p = stack.pop()
            if p in seen:
                continue
            seen.add(p)
            stack.extend(m[p] for m in matchings)
    return count


def perm_product(perms, n):
    """Compose permutations of 1..n given as image tuples, left to right."""
    out = list(range(1, n + 1))
    for p in perms:
        out = [p[x - 1] for x in out]
    return tuple(out)


class MembershipOracle:
    """
    Z-span membership for linearly independent integer vectors, by exact
    rational elimination: pick rows where the basis is invertible, solve,
    then check the solution is integral and reproduces v.
    """

    def __init__(self, basis, dim):
        self.basis = [tuple(b) for b in basis]
        self.dim = dim
        k = len(self.basis)
        M = sympy.Matrix(dim, k, lambda i, j: self.basis[j][i]) if k else None
        self.rows = list(M.T.rref()[1]) if k else []
        if k:
            P = sympy.Matrix([[self.basis[j][i] for j in range(k)] for i in self.rows])
            self.inv = [[Fraction(int(x.p), int(x.q)) for x in P.inv().row(r)] for r in range(k)]

    def __contains__(self, v):
        if not self.basis:
            return not any(v)
        c = [sum(a * v[i] for a, i in zip(row, self.rows)) for row in self.inv]
        if any(x.denominator != 1 for x in c):
            return False
        return all(sum(int(cj) * b[i] for cj, b in zip(c, self.basis)) == v[i] for i in range(self.dim))


def cycle_space_preimage(coordinates, lattice_basis, rho):
    """
    Pull a saturated sublattice of H1 of the cover surface back to the
    cycle space of the lifted-edge graph (vertices: sheets; edge x_i^j runs
    from sheet j to sheet rho(x_i)(j)).  Returned as a reduced row echelon
    basis of the rational span, which decides equality because kernels of
    integer matrices are saturated.

    ``coordinates`` maps edge-chains to H1 coordinates (rows: coordinates,
    columns: edges).
    """
    n, p2b = rho.sheets, rho.punctures
    edges = n * p2b
    rows = [[0] * edges for _ in range(n)]
    for j in range(1, n + 1):
        for i in range(p2b):
            e = (j - 1) * p2b + i
            rows[rho.images[i](j) - 1][e] += 1
            rows[j - 1][e] -= 1
    C = sympy.Matrix(coordinates)
    L = sympy.Matrix([list(v) for v in lattice_basis]) if lattice_basis else sympy.zeros(0, C.rows)
    annihilator = L.nullspace() if L.rows else [sympy.eye(C.rows)[:, k] for k in range(C.rows)]
    for q in annihilator:
        rows.append(list(q.T * C))
    kernel = sympy.Matrix(rows).nullspace()
    if not kernel:
        return ()
    R = sympy.Matrix.hstack(*kernel).T.rref()[0]
    return tuple(tuple(R.row(r)) for r in range(R.rows) if any(R.row(r)))
