"""
Extended Heegaard data of the embedded 3-manifold and its first homology.

For a spine (T1, T2, T3, T4) the central surface carries two multicurves:
alpha, the components of T1 u T3, and beta, the components of T2 u T4.
Each bounds disks in the corresponding pair of sectors, so H1(Y) is
H1(surface) modulo the classes of all curves.
"""

from dataclasses import dataclass
from math import gcd

from .homology import ChainComplex, chain_homology
from .linalg import IntegerMatrix
from .tangles import build_surface_complex, cycle_chain, edge_table, matching_cycles


@dataclass(frozen=True)
class ExtendedHeegaardDiagram:
    """
    Curves are given as cyclic puncture lists; ``alpha_chains`` and
    ``beta_chains`` are the same curves as signed edge lists in the
    surface complex.  ``Q[r][s]`` counts common punctures of alpha_r and
    beta_s with sign when the surface is orientable, and mod 2 otherwise.
    """

    surface: object
    order: tuple
    alpha: tuple
    beta: tuple
    alpha_chains: tuple
    beta_chains: tuple
    Q: tuple
    orientable: bool

    @property
    def euler_characteristic(self):
        return self.surface.euler_characteristic

    def alpha_of(self, p):
        return next(r for r, c in enumerate(self.alpha) if p in c)

    def beta_of(self, p):
        return next(s for s, c in enumerate(self.beta) if p in c)

    def q_gcd(self):
        g = 0
        for row in self.Q:
            for v in row:
                g = gcd(g, v)
        return g

    def to_dict(self):
        return {
            "order": [i + 1 for i in self.order],
            "orientable": self.orientable,
            "euler_characteristic": self.euler_characteristic,
            "alpha": [list(c) for c in self.alpha],
            "beta": [list(c) for c in self.beta],
            "Q": [list(r) for r in self.Q],
        }


def _passage_signs(cycle):
    """
    A curve visiting ``cycle`` leaves cycle[0] along its first tangle; at
    each puncture record whether it leaves along the first tangle (+1) or
    along the second (-1).
    """
    return {p: (1 if k % 2 == 0 else -1) for k, p in enumerate(cycle)}


def _local_orientation(surface, ms, lookup):
    """
    +1 at puncture p when the oriented face of T1 u T2 through p enters p
    along its T1 strand and leaves along its T2 strand.
    """
    eps = {}
    f = 0
    for cyc in matching_cycles(ms[0], ms[1]):
        sign = surface.face_orientation[f]
        for k, p in enumerate(cyc):
            # Leaving cyc[k] along T1 when k is even, so arriving along T2.
            eps[p] = -sign if k % 2 == 0 else sign
        f += 1
    return eps


def extract_heegaard(D, order=(0, 1, 2, 3)):
    """
    Heegaard data of ``D`` with its tangles taken in ``order`` (0-based):
    alpha = T_i u T_k and beta = T_j u T_l for order (i, j, k, l).
    """
    P = D.permuted(order)
    surface = build_surface_complex(P)
    ms = P.matchings()
    _, lookup = edge_table(P)
    alpha = [tuple(c) for c in matching_cycles(ms[0], ms[2])]
    beta = [tuple(c) for c in matching_cycles(ms[1], ms[3])]
    alpha_chains = tuple(tuple(cycle_chain(c, 1, 3, lookup)) for c in alpha)
    beta_chains = tuple(tuple(cycle_chain(c, 2, 4, lookup)) for c in beta)

    Q = [[0] * len(beta) for _ in alpha]
    if surface.orientable:
        eps = _local_orientation(surface, ms, lookup)
        for r, a in enumerate(alpha):
            sa = _passage_signs(a)
            for s, bcyc in enumerate(beta):
                sb = _passage_signs(bcyc)
                Q[r][s] = sum(eps[p] * sa[p] * sb[p] for p in set(a) & set(bcyc))
    else:
        for r, a in enumerate(alpha):
            for s, bcyc in enumerate(beta):
                Q[r][s] = len(set(a) & set(bcyc)) % 2
    return ExtendedHeegaardDiagram(
        surface=surface,
        order=tuple(order),
        alpha=tuple(alpha),
        beta=tuple(beta),
        alpha_chains=alpha_chains,
        beta_chains=beta_chains,
        Q=tuple(tuple(r) for r in Q),
        orientable=surface.orientable,
    )


def heegaard_complex(H):
    """Cellular chains of the surface with one extra 2-cell per alpha and beta curve."""
    surface = H.surface
    d1, d2 = surface.boundary_matrices()
    V, E = surface.vertex_count, len(surface.edges)
    cols = [[d2[e][f] for e in range(E)] for f in range(len(surface.faces))]
    for chain in H.alpha_chains + H.beta_chains:
        col = [0] * E
        for s in chain:
            col[abs(s) - 1] += 1 if s > 0 else -1
        cols.append(col)
    return ChainComplex(
        (V, E, len(cols)),
        [IntegerMatrix(d1, V, E), IntegerMatrix.from_columns(cols, E)],
    )


def h1_3manifold(D, order=(0, 1, 2, 3)):
    """H1(Y) as H1(surface) modulo all alpha and beta curve classes."""
    H = extract_heegaard(D, order)
    return chain_homology(heegaard_complex(H))[1]
