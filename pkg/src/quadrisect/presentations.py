"""
Presentations of the bridge-sphere group, tangle groups and pairwise link
groups, computed from plat data through the Artin action.

Punctures are x0..x_{2b-1}.  The braid generator s_i acts on x_{i-1}, x_i:

    s_i :   x_{i-1} -> x_{i-1} x_i x_{i-1}^-1,   x_i -> x_{i-1}
    s_i^-1: x_{i-1} -> x_i,                      x_i -> x_i^-1 x_{i-1} x_i

and a braid word acts by applying its letters in order.  The cap relators
are x_{2k} x_{2k+1}; both conventions reproduce the tangle presentations
of the worked spun-trefoil example verbatim.
"""

from dataclasses import dataclass

from .groups import FPGroup, Word, abelianization, tietze_simplify
from .linalg import rank
from .tangles import BraidWord, TrivialTangle, _check_same_bridges


def puncture_names(b):
    return tuple(f"x{i}" for i in range(2 * b))


def sphere_group(b):
    """<x0, ..., x_{2b-1} | x0 x1 ... x_{2b-1}>."""
    if b < 1:
        raise ValueError("bridge number must be at least 1")
    return FPGroup(puncture_names(b), (Word((i, 1) for i in range(2 * b)),))


def _letter_images(n, i, e):
    a, c = i - 1, i
    x = lambda g, s=1: (g, s)  # noqa: E731
    images = {g: Word([x(g)]) for g in range(n)}
    if e == 1:
        images[a] = Word([x(a), x(c), x(a, -1)])
        images[c] = Word([x(a)])
    else:
        images[a] = Word([x(c)])
        images[c] = Word([x(c, -1), x(a), x(c)])
    return [images[g] for g in range(n)]


def artin_automorphism(w):
    """Images of x0..x_{2b-1} under the automorphism of the braid word ``w``."""
    n = w.strands
    images = [Word([(g, 1)]) for g in range(n)]
    for i, e in w.letters:
        step = _letter_images(n, i, e)
        images = [img.substitute(step) for img in images]
    return images


def artin_image(w, word):
    """Image of ``word`` under the braid automorphism, letters applied in order."""
    return Word(word).substitute(artin_automorphism(w))


def cap_relators(b):
    return [Word([(2 * k, 1), (2 * k + 1, 1)]) for k in range(b)]


@dataclass(frozen=True)
class RelatorTangle:
    """
    A trivial tangle given directly by ``b`` relators in x0..x_{2b-1}, as
    read off a tangle diagram.  The relators must abelianize to a free group
    of rank b with each relator pairing two punctures.
    """

    bridges: int
    relators: tuple

    def __post_init__(self):
        rels = tuple(Word(r) for r in self.relators)
        object.__setattr__(self, "relators", rels)
        n = 2 * self.bridges
        if len(rels) != self.bridges:
            raise ValueError(f"expected {self.bridges} relators, got {len(rels)}")
        for r in rels:
            if any(not 0 <= g < n for g, _ in r):
                raise ValueError(f"relator {r!r} uses a generator outside x0..x{n - 1}")
        self.matching_from_relators()
        group, _ = abelianization(FPGroup(puncture_names(self.bridges), rels))
        if group.free_rank != self.bridges or group.torsion:
            raise ValueError(
                f"relator tangle abelianizes to {group}, expected Z^{self.bridges}"
            )

    def matching_from_relators(self):
        """
        Endpoint pairing read from exponent sums: each relator of a trivial
        tangle abelianizes to +-(x_p + x_q) for the strand joining p and q.
        """
        n = 2 * self.bridges
        m = [None] * n
        for r in self.relators:
            v = r.exponent_sums(n)
            support = [g for g, c in enumerate(v) if c]
            if len(support) != 2 or abs(v[support[0]]) != 1 or v[support[0]] != v[support[1]]:
                raise ValueError(
                    f"relator {r.format(puncture_names(self.bridges))} does not pair two punctures"
                )
            p, q = support
            if m[p] is not None or m[q] is not None:
                raise ValueError(f"puncture x{p} or x{q} paired twice")
            m[p], m[q] = q, p
        return tuple(m)

    def matching(self):
        return self.matching_from_relators()


def tangle_relators(T):
    if isinstance(T, RelatorTangle):
        return list(T.relators)
    auto = artin_automorphism(T.braid)
    return [r.substitute(auto) for r in cap_relators(T.bridges)]


def tangle_group(T):
    """Group of the tangle complement, on the puncture meridians x0..x_{2b-1}."""
    return FPGroup(puncture_names(T.bridges), tuple(tangle_relators(T)))


def link_group(Ti, Tj):
    """
    Group of the link T_i u mirror(T_j): the two tangle groups amalgamated
    over the shared puncture meridians.
    """
    b = _check_same_bridges(Ti, Tj)
    return FPGroup(puncture_names(b), tuple(tangle_relators(Ti) + tangle_relators(Tj)))


def surface_group(*tangles):
    """
    Group of the complement of the surface built from several tangles: all
    their relators over the shared meridians.  For a triplane diagram of an
    unlink of spheres it is free of rank the number of components.
    """
    b = _check_same_bridges(*tangles)
    return FPGroup(puncture_names(b), tuple(r for T in tangles for r in tangle_relators(T)))


def plat_link_braid(Ti, Tj):
    """Braid whose plat closure is T_i u mirror(T_j) (plat tangles only)."""
    return Ti.braid * Tj.braid.inverse()


def relator_rank(T):
    b = T.bridges
    return rank(FPGroup(puncture_names(b), tuple(tangle_relators(T))).relation_matrix())


def free_rank_certificate(G, budget=10_000):
    """
    Rank of a free group that Tietze moves reduce ``G`` to, or None when
    the heuristic stalls with relators left.
    """
    H, _ = tietze_simplify(G, budget)
    return None if H.relators else H.ngens


def as_tangle(T):
    if isinstance(T, (TrivialTangle, RelatorTangle)):
        return T
    if isinstance(T, BraidWord):
        return TrivialTangle(T.strands // 2, T)
    raise TypeError(f"not a tangle: {T!r}")
