"""
Trivial tangles in plat form, 4-plane diagrams, and the central surface.

A tangle with ``b`` bridges has endpoints at the punctures x0..x_{2b-1}
of the bridge sphere.  In plat form it is a braid on 2b strands whose far
end is closed off by the standard caps (0,1), (2,3), ...; the braid word
is read from the caps towards the sphere, so appending letters acts at the
sphere end.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .perms import UnionFind


@dataclass(frozen=True)
class BraidWord:
    """Artin word on ``strands`` strands; letters are ``(i, +-1)`` with 1 <= i < strands."""

    strands: int
    letters: tuple = ()

    def __post_init__(self):
        letters = tuple((int(i), int(e)) for i, e in self.letters)
        for i, e in letters:
            if not 1 <= i < self.strands:
                raise ValueError(
                    f"braid generator s{i} out of range for {self.strands} strands"
                )
            if e not in (1, -1):
                raise ValueError("braid exponents must be +-1")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def parse(cls, text, strands):
        """Parse ``"s1 s2' s1"`` (a trailing ``'`` or ``^-1`` inverts a letter)."""
        letters = []
        for tok in text.split():
            e = 1
            if tok.endswith("'"):
                tok, e = tok[:-1], -1
            elif tok.endswith("^-1"):
                tok, e = tok[:-3], -1
            if not tok.startswith("s") or not tok[1:].isdigit():
                raise ValueError(f"bad braid letter {tok!r}")
            letters.append((int(tok[1:]), e))
        return cls(strands, tuple(letters))

    def __str__(self):
        return " ".join(f"s{i}" + ("'" if e < 0 else "") for i, e in self.letters)

    def __mul__(self, other):
        if self.strands != other.strands:
            raise ValueError("strand-count mismatch")
        return BraidWord(self.strands, self.letters + other.letters)

    def __len__(self):
        return len(self.letters)

    def inverse(self):
        return BraidWord(self.strands, tuple((i, -e) for i, e in reversed(self.letters)))

    def free_reduced(self):
        out = []
        for i, e in self.letters:
            if out and out[-1] == (i, -e):
                out.pop()
            else:
                out.append((i, e))
        return BraidWord(self.strands, tuple(out))

    def permutation(self):
        """
        Underlying permutation of puncture positions as a tuple ``pi`` with
        ``pi[p]`` the position reached by a strand starting at ``p``.
        """
        pi = list(range(self.strands))
        for i, _ in self.letters:
            a, b = i - 1, i
            pi = [b if x == a else a if x == b else x for x in pi]
        return tuple(pi)


def cap_matching(b):
    return tuple(p ^ 1 for p in range(2 * b))


@dataclass(frozen=True)
class TrivialTangle:
    """A b-bridge trivial tangle given as the plat of a braid word."""

    bridges: int
    braid: BraidWord = None

    def __post_init__(self):
        braid = self.braid if self.braid is not None else BraidWord(2 * self.bridges)
        if braid.strands != 2 * self.bridges:
            raise ValueError(
                f"braid has {braid.strands} strands, expected {2 * self.bridges}"
            )
        object.__setattr__(self, "braid", braid)

    @classmethod
    def parse(cls, text, bridges):
        return cls(bridges, BraidWord.parse(text, 2 * bridges))

    def matching(self):
        return tangle_matching(self)

    def mirror(self):
        """The mirror image, as the plat of the inverse braid read from the other side."""
        return TrivialTangle(self.bridges, self.braid.inverse())

    def append(self, word):
        return TrivialTangle(self.bridges, self.braid * word)


def tangle_matching(T):
    """
    Endpoint pairing of a tangle: a fixed-point-free involution on the
    punctures, as a tuple ``m`` with ``m[p]`` the far end of the strand at p.

    For a plat this is the cap involution conjugated by the braid's
    permutation; for a relator tangle it is read off the exponent sums.
    """
    if hasattr(T, "matching_from_relators"):
        return T.matching_from_relators()
    pi = T.braid.permutation()
    inv = [0] * len(pi)
    for p, q in enumerate(pi):
        inv[q] = p
    return tuple(pi[inv[p] ^ 1] for p in range(len(pi)))


def _count_orbits(n, maps):
    uf = UnionFind(n)
    for m in maps:
        for a, b in enumerate(m):
            uf.union(a, b)
    return uf.count


def _check_same_bridges(*tangles):
    bs = {T.bridges for T in tangles}
    if len(bs) != 1:
        raise ValueError(f"bridge number mismatch: {sorted(bs)}")
    return bs.pop()


def pair_components(Ti, Tj):
    """Number of components of the link T_i u mirror(T_j)."""
    b = _check_same_bridges(Ti, Tj)
    return _count_orbits(2 * b, [tangle_matching(Ti), tangle_matching(Tj)])


def matching_cycles(m1, m2):
    """
    Components of the union of two matchings, each as the cyclic list of
    punctures visited, starting at the least puncture and leaving it along
    the first matching.
    """
    n = len(m1)
    seen, out = set(), []
    for start in range(n):
        if start in seen:
            continue
        cyc, p, use_first = [], start, True
        while True:
            cyc.append(p)
            seen.add(p)
            p = m1[p] if use_first else m2[p]
            use_first = not use_first
            if p == start and use_first:
                break
        out.append(cyc)
    return out


@dataclass(frozen=True)
class FourPlaneDiagram:
    """The spine (T1, T2, T3, T4) of a bridge quadrisection."""

    bridges: int
    tangles: tuple
    metadata: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        tangles = tuple(self.tangles)
        if len(tangles) != 4:
            raise ValueError(f"a 4-plane diagram needs 4 tangles, got {len(tangles)}")
        for k, T in enumerate(tangles, start=1):
            if T.bridges != self.bridges:
                raise ValueError(
                    f"tangle {k} has {T.bridges} bridges, diagram has {self.bridges}"
                )
        object.__setattr__(self, "tangles", tangles)

    @property
    def punctures(self):
        return 2 * self.bridges

    def matchings(self):
        return [tangle_matching(T) for T in self.tangles]

    def permuted(self, order):
        """Diagram whose k-th tangle is the ``order[k]``-th (0-based) tangle of this one."""
        return FourPlaneDiagram(
            self.bridges, tuple(self.tangles[i] for i in order), dict(self.metadata)
        )

    def is_plat(self):
        return all(isinstance(T, TrivialTangle) for T in self.tangles)

    def pair_counts(self):
        """c_ij for all six unordered pairs, keyed by 1-based index pairs."""
        ms = self.matchings()
        n = self.punctures
        return {
            (i + 1, j + 1): _count_orbits(n, [ms[i], ms[j]])
            for i, j in combinations(range(4), 2)
        }

    def triple_counts(self):
        """s_i: components of the triplane surface built from the tangles other than T_i."""
        ms = self.matchings()
        n = self.punctures
        return {
            i + 1: _count_orbits(n, [ms[k] for k in range(4) if k != i])
            for i in range(4)
        }


@dataclass(frozen=True)
class SurfaceComplex:
    """
    Cell structure on the central surface: vertices are the punctures,
    edges the 4b strands, faces the components of consecutive pairs
    T_i u T_{i+1}.

    ``edges`` lists ``(tangle, p, q)`` with p < q; ``faces`` lists the
    boundary of each face as signed edge indices (+k traverses edge k from
    p to q, -k the other way, edges numbered from 1).
    """

    vertex_count: int
    edges: tuple
    faces: tuple
    face_pairs: tuple
    orientable: bool
    components: int
    euler_characteristic: int
    genus: int
    pair_counts: dict
    triple_counts: dict
    face_orientation: tuple = None

    @property
    def cross_caps(self):
        return None if self.orientable else self.genus

    def boundary_matrices(self):
        """Cellular boundary maps (d1: edges -> vertices, d2: faces -> edges) as row lists."""
        V, E = self.vertex_count, len(self.edges)
        d1 = [[0] * E for _ in range(V)]
        for k, (_, p, q) in enumerate(self.edges):
            d1[p][k] -= 1
            d1[q][k] += 1
        d2 = [[0] * len(self.faces) for _ in range(E)]
        for f, bd in enumerate(self.faces):
            for s in bd:
                d2[abs(s) - 1][f] += 1 if s > 0 else -1
        return d1, d2


def edge_table(D):
    """Edge list and a lookup (tangle, p) -> signed edge index for traversal p -> m(p)."""
    edges, lookup = [], {}
    for t, m in enumerate(D.matchings()):
        for p in range(D.punctures):
            q = m[p]
            if p < q:
                edges.append((t + 1, p, q))
                k = len(edges)
                lookup[(t + 1, p)] = k
                lookup[(t + 1, q)] = -k
    return edges, lookup


def cycle_chain(cycle, ta, tb, lookup):
    """Signed edge list of a closed curve alternating tangle ta then tb through ``cycle``."""
    chain = []
    for k, p in enumerate(cycle):
        chain.append(lookup[(ta if k % 2 == 0 else tb, p)])
    return chain


def build_surface_complex(D):
    """
    Glue a disk to every component of T_i u T_{i+1} (indices mod 4) along
    the 4-colored graph T1 u T2 u T3 u T4, and describe the closed surface.
    """
    ms = D.matchings()
    n = D.punctures
    edges, lookup = edge_table(D)
    faces, face_pairs = [], []
    for i in range(4):
        j = (i + 1) % 4
        for cyc in matching_cycles(ms[i], ms[j]):
            faces.append(tuple(cycle_chain(cyc, i + 1, j + 1, lookup)))
            face_pairs.append((i + 1, j + 1))
    V, E, F = n, len(edges), len(faces)
    chi = V - E + F

    # Components of the surface are components of the graph.
    uf = UnionFind(n)
    for _, p, q in edges:
        uf.union(p, q)
    comps = uf.count

    orientation = _orient_faces(faces, len(edges))
    orientable = orientation is not None
    if orientable:
        # Connected orientable components each contribute 2 - 2g.
        genus = (2 * comps - chi) // 2
    else:
        genus = 2 * comps - chi
    return SurfaceComplex(
        vertex_count=V,
        edges=tuple(edges),
        faces=tuple(faces),
        face_pairs=tuple(face_pairs),
        orientable=orientable,
        components=comps,
        euler_characteristic=chi,
        genus=genus,
        pair_counts=D.pair_counts(),
        triple_counts=D.triple_counts(),
        face_orientation=orientation,
    )


def _orient_faces(faces, nedges, order=None):
    """
    Try to choose signs for the faces so that every edge is traversed once
    in each direction.  Returns the sign tuple, or None when the surface is
    non-orientable.  ``order`` permutes the face visiting order.
    """
    incident = [[] for _ in range(nedges + 1)]
    for f, bd in enumerate(faces):
        for s in bd:
            incident[abs(s)].append((f, 1 if s > 0 else -1))
    sign = [0] * len(faces)
    order = list(range(len(faces))) if order is None else list(order)
    for root in order:
        if sign[root]:
            continue
        sign[root] = 1
        stack = [root]
        while stack:
            f = stack.pop()
            for s in faces[f]:
                e, d = abs(s), (1 if s > 0 else -1)
                for g, dg in incident[e]:
                    if g == f and dg == d:
                        continue
                    want = -sign[f] * d * dg
                    if sign[g] == 0:
                        sign[g] = want
                        stack.append(g)
                    elif sign[g] != want:
                        return None
    return tuple(sign)


def surface_orientable(D, order=None):
    sc = build_surface_complex(D)
    return _orient_faces(sc.faces, len(sc.edges), order) is not None
