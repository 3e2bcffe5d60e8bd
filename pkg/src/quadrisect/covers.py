"""
Homology of branched covers of S^5 along a bridge-quadrisected 3-manifold.

Pipeline, for a 4-plane diagram and a permutation representation rho of
the punctured bridge sphere into S_n:

1. lift the sphere presentation to the n-sheeted cover (claw relators for a
   spanning tree of sheets, lifted sphere relators, one branch relator per
   cycle of each rho(x_i)); its abelianization is H_1 of the central
   surface of the cover, free of rank 2g;
2. lift the relators of each tangle group from every sheet; their image in
   H_1 is the Lagrangian L_mu of that sector;
3. assemble the complex  Z -> (+)(triple intersections) -> (+)(pair
   intersections) -> (+)L_i -> H_1 -> Z  and take its homology.
"""

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .groups import FPGroup, Word, abelianization
from .homology import ChainComplex, chain_homology
from .linalg import AbelianGroup, IntegerMatrix, Lattice, determinant
from .perms import Permutation, cycle_count, is_transitive
from .presentations import tangle_relators


class CoverError(ValueError):
    """Raised when a representation cannot define the requested cover."""


@dataclass(frozen=True)
class PermutationRep:
    """Images rho(x_0), ..., rho(x_{2b-1}) in S_n of the puncture meridians."""

    sheets: int
    images: tuple

    def __post_init__(self):
        images = tuple(self.images)
        if any(p.degree != self.sheets for p in images):
            raise CoverError(f"every image must be a permutation of 1..{self.sheets}")
        if len(images) % 2:
            raise CoverError("need an even number of punctures")
        object.__setattr__(self, "images", images)

    @classmethod
    def from_cycles(cls, sheets, cycle_lists):
        return cls(sheets, tuple(Permutation.from_cycles(c, sheets) for c in cycle_lists))

    @classmethod
    def trivial(cls, punctures, sheets=1):
        return cls(sheets, (Permutation.identity(sheets),) * punctures)

    @property
    def punctures(self):
        return len(self.images)

    @property
    def bridges(self):
        return len(self.images) // 2

    @property
    def transitive(self):
        return is_transitive(self.images, self.sheets)

    def kills_sphere(self):
        """True when rho(x0) rho(x1) ... rho(x_{2b-1}) is the identity."""
        return self.of_word(Word((i, 1) for i in range(self.punctures))).is_identity()

    def of_word(self, word):
        out = Permutation.identity(self.sheets)
        for g, e in word:
            out = out * (self.images[g] if e == 1 else self.images[g].inverse())
        return out

    def __str__(self):
        return ", ".join(f"x{i} -> {p}" for i, p in enumerate(self.images))


def riemann_hurwitz_genus(b, rho):
    """Genus of the n-fold cover of S^2 branched over the 2b punctures."""
    if rho.punctures != 2 * b:
        raise CoverError(f"rho has {rho.punctures} images, expected {2 * b}")
    if not rho.transitive:
        raise CoverError("rho is not transitive, so the cover is disconnected")
    n = rho.sheets
    g = 1 - n + Fraction(sum(n - cycle_count(p) for p in rho.images), 2)
    if g.denominator != 1 or g < 0:
        raise CoverError(f"Riemann-Hurwitz gives non-integral genus {g}")
    return int(g)


def cyclic_genus_bound(b, n):
    """1 - n + b(n - 1): the genus when every meridian maps to an n-cycle."""
    return 1 - n + b * (n - 1)


def check_extends(rho, D):
    """True when rho kills the sphere relator and every relator of every tangle."""
    if rho.punctures != D.punctures:
        raise CoverError(f"rho has {rho.punctures} images, diagram has {D.punctures} punctures")
    if not rho.kills_sphere():
        return False
    return all(
        rho.of_word(r).is_identity() for T in D.tangles for r in tangle_relators(T)
    )


def lifted_name(i, j):
    """Name of the lift of x_i starting on sheet j."""
    return f"x{i}_{j}"


def lifted_index(i, j, punctures):
    return (j - 1) * punctures + i


def lift_relator(word, rho, start_sheet):
    """
    Lift of ``word`` to the cover, starting on ``start_sheet`` (1-based).

    A letter x_i read on sheet s lifts to x_i^s and moves to rho(x_i)(s);
    an inverse letter x_i^-1 on sheet s lifts to (x_i^t)^-1 with t the
    preimage of s under rho(x_i).
    """
    n2b = rho.punctures
    s = start_sheet
    out = []
    for g, e in word:
        p = rho.images[g]
        if e == 1:
            out.append((lifted_index(g, s, n2b), 1))
            s = p(s)
        else:
            s = p.inverse()(s)
            out.append((lifted_index(g, s, n2b), -1))
    if s != start_sheet:
        raise CoverError(
            f"lift from sheet {start_sheet} ends on sheet {s}: rho does not kill the relator"
        )
    return Word(out)


def spanning_tree(rho, policy="bfs"):
    """
    Tree edges (i, j): the lift of x_i leaving sheet j, forming a spanning
    tree of the sheets.  ``"bfs"`` scans punctures in increasing order from
    sheet 1; ``"bfs-reverse"`` scans them in decreasing order; ``"dfs"``
    goes depth first.
    """
    n = rho.sheets
    order = list(range(rho.punctures))
    if policy == "bfs-reverse":
        order.reverse()
    elif policy not in ("bfs", "dfs"):
        raise ValueError(f"unknown spanning-tree policy {policy!r}")
    seen = {1}
    edges = []
    frontier = deque([1])
    while frontier:
        j = frontier.pop() if policy == "dfs" else frontier.popleft()
        for i in order:
            k = rho.images[i](j)
            if k not in seen:
                seen.add(k)
                edges.append((i, j))
                frontier.append(k)
    if len(seen) != n:
        raise CoverError("rho is not transitive, so the cover is disconnected")
    return edges


@dataclass(frozen=True)
class LiftedPresentation:
    """Presentation of pi_1 of the central surface of the branched cover."""

    group: FPGroup
    tree_edges: tuple
    claw_relators: tuple
    sphere_relators: tuple
    branch_relators: tuple
    sheets: int
    punctures: int


def lift_surface_group(b, rho, tree="bfs"):
    n = rho.sheets
    p2b = 2 * b
    if rho.punctures != p2b:
        raise CoverError(f"rho has {rho.punctures} images, expected {p2b}")
    if not rho.transitive:
        raise CoverError("rho is not transitive, so the cover is disconnected")
    if not rho.kills_sphere():
        raise CoverError("rho(x0) rho(x1) ... rho(x_{2b-1}) is not the identity")
    names = tuple(lifted_name(i, j) for j in range(1, n + 1) for i in range(p2b))
    edges = spanning_tree(rho, tree)
    claws = tuple(Word([(lifted_index(i, j, p2b), 1)]) for i, j in edges)
    sphere = Word((i, 1) for i in range(p2b))
    lifted = tuple(lift_relator(sphere, rho, j) for j in range(1, n + 1))
    branch = []
    for i, p in enumerate(rho.images):
        for cyc in p.cycles():
            branch.append(Word((lifted_index(i, j, p2b), 1) for j in cyc))
    group = FPGroup(names, claws + lifted + tuple(branch))
    return LiftedPresentation(group, tuple(edges), claws, lifted, tuple(branch), n, p2b)


def lift_tangle_relators(T, rho):
    """All lifts of the relators of T, one per starting sheet, without repeats."""
    seen, out = set(), []
    for r in tangle_relators(T):
        for j in range(1, rho.sheets + 1):
            w = lift_relator(r, rho, j)
            if w not in seen:
                seen.add(w)
                out.append(w)
    return out


@dataclass(frozen=True)
class LagrangianData:
    """The four Lagrangians together with the coordinates they are written in."""

    genus: int
    lagrangians: tuple
    surface: LiftedPresentation
    basis_names: tuple
    coordinates: IntegerMatrix

    def coordinate_vector(self, word):
        return self.coordinates @ tuple(word.exponent_sums(self.coordinates.cols))


def _basis_change(free_map, names, basis):
    """
    Coordinates in which the classes of the named generators form the
    standard basis, or raise if they do not form a basis of H_1.
    """
    idx = [names.index(nm) for nm in basis]
    cols = [free_map.free.column(g) for g in idx]
    B = IntegerMatrix.from_columns(cols, free_map.free.rows)
    if B.rows != B.cols or abs(determinant(B)) != 1:
        raise CoverError(f"classes of {list(basis)} are not a basis of H_1 of the surface")
    lat = Lattice(B.rows, cols)
    # Express every generator's image in the new basis.
    new_cols = lat.solve_many([free_map.free.column(g) for g in range(len(names))])
    return IntegerMatrix.from_columns(new_cols, B.rows)


def lagrangians(D, rho, tree="bfs", basis=None):
    """
    Lagrangians L_1..L_4 in H_1 of the central surface of the cover.

    ``basis`` optionally names lifted generators (e.g. ``["x3_1", ...]``)
    whose classes are used as the coordinate basis of H_1; by default the
    Smith-form coordinates of the abelianization are used.
    """
    if not check_extends(rho, D):
        raise CoverError("rho does not extend over the four tangle complements")
    b = D.bridges
    genus = riemann_hurwitz_genus(b, rho)
    surface = lift_surface_group(b, rho, tree)
    group, amap = abelianization(surface.group)
    if group.torsion or group.free_rank != 2 * genus:
        raise CoverError(
            f"surface group abelianizes to {group}, expected Z^{2 * genus}"
        )
    names = surface.group.generators
    if basis is None:
        coords = amap.free
        basis_names = ()
    else:
        coords = _basis_change(amap, names, basis)
        basis_names = tuple(basis)
    m = coords.rows
    lats = []
    for k, T in enumerate(D.tangles, start=1):
        vectors = [
            coords @ tuple(w.exponent_sums(len(names))) for w in lift_tangle_relators(T, rho)
        ]
        L = Lattice.span(m, vectors)
        if not L.is_saturated():
            raise CoverError(f"sector {k}: handlebody H_1 has torsion")
        if L.rank != genus:
            raise CoverError(f"sector {k}: Lagrangian has rank {L.rank}, expected {genus}")
        lats.append(L)
    return LagrangianData(genus, tuple(lats), surface, basis_names, coords)


def _inclusion_matrix(small, big):
    """Matrix of the inclusion small -> big in the stored bases."""
    if not small.basis:
        return IntegerMatrix.zeros(big.rank, 0)
    cols = big.solve_many(small.basis)
    return IntegerMatrix.from_columns(cols, big.rank)


def quadrisection_complex(lats, genus):
    """
    The chain complex whose homology is that of the 4-sected 5-manifold:

        C5 = Z, C4 = (+)_{|I|=3}, C3 = (+)_{|I|=2}, C2 = (+)_{|I|=1} L_I,
        C1 = H_1(Sigma) = Z^{2g}, C0 = Z,

    where L_I is the intersection of the L_i for i in I.  The map from the
    I-summand to the I\\{j}-summand is inclusion with sign (-1)^(number of
    s in I below j); both end maps are zero.
    """
    m = 2 * genus
    lats = list(lats)
    if len(lats) != 4:
        raise ValueError("need four Lagrangians")
    for k, L in enumerate(lats, start=1):
        if L.ambient_rank != m:
            raise ValueError(f"L_{k} lives in Z^{L.ambient_rank}, expected Z^{m}")
        if L.rank != genus:
            raise ValueError(f"L_{k} has rank {L.rank}, not the genus {genus}")

    full = Lattice.full(m)
    summands = {(): full}
    for size in (1, 2, 3):
        for I in combinations(range(4), size):
            L = summands[I[:-1]].intersect(lats[I[-1]]) if size > 1 else lats[I[0]]
            summands[I] = L

    def level(size):
        return [I for I in combinations(range(4), size)]

    def offsets(index_sets):
        out, pos = {}, 0
        for I in index_sets:
            out[I] = pos
            pos += summands[I].rank
        return out, pos

    def delta(size):
        src, tgt = level(size), level(size - 1)
        so, srank = offsets(src)
        to, trank = offsets(tgt)
        M = [[0] * srank for _ in range(trank)]
        for I in src:
            for pos_j, j in enumerate(I):
                J = tuple(x for x in I if x != j)
                sign = -1 if pos_j % 2 else 1
                inc = _inclusion_matrix(summands[I], summands[J])
                for r in range(inc.rows):
                    for c in range(inc.cols):
                        if inc[r, c]:
                            M[to[J] + r][so[I] + c] += sign * inc[r, c]
        return IntegerMatrix(M, trank, srank)

    d2, d3, d4 = delta(1), delta(2), delta(3)
    ranks = [1, m, d2.cols, d3.cols, d4.cols, 1]
    zero1 = IntegerMatrix.zeros(1, m)
    zero5 = IntegerMatrix.zeros(d4.cols, 1)
    return ChainComplex(ranks, [zero1, d2, d3, d4, zero5])


@dataclass(frozen=True)
class CoverHomology:
    groups: tuple
    genus: int
    lagrangian_data: LagrangianData
    complex: ChainComplex

    def to_json(self):
        return [g.to_json() for g in self.groups]


def branched_cover_homology(D, rho, tree="bfs", basis=None, details=False):
    """H_0..H_5 of the cover of S^5 branched along the diagram's 3-manifold."""
    data = lagrangians(D, rho, tree=tree, basis=basis)
    if data.genus == 0:
        C = ChainComplex([1, 0, 0, 0, 0, 1], [None] * 5)
    else:
        C = quadrisection_complex(data.lagrangians, data.genus)
    groups = tuple(chain_homology(C))
    if groups[0] != AbelianGroup(1) or groups[5] != AbelianGroup(1):
        raise CoverError(f"H_0 or H_5 is not Z: {[str(g) for g in groups]}")
    result = CoverHomology(groups, data.genus, data, C)
    return result if details else groups
