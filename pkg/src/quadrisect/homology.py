"""Chain complexes of free abelian groups and their integral homology."""

from .linalg import AbelianGroup, IntegerMatrix, smith_normal_form


class ChainComplex:
    """
    A finite chain complex of free abelian groups.

    ``ranks[i]`` is the rank of C_i, and ``boundaries[i]`` (for
    i = 1..len(ranks)-1) is the matrix of d_i: C_i -> C_{i-1}, of shape
    ranks[i-1] x ranks[i].  The condition d_{i-1} d_i = 0 is checked when
    the complex is built.
    """

    def __init__(self, ranks, boundaries):
        self.ranks = tuple(int(r) for r in ranks)
        if len(boundaries) != len(self.ranks) - 1:
            raise ValueError("need one boundary map per positive degree")
        self.boundaries = {}
        for i, d in enumerate(boundaries, start=1):
            if d is None:
                d = IntegerMatrix.zeros(self.ranks[i - 1], self.ranks[i])
            elif not isinstance(d, IntegerMatrix):
                d = IntegerMatrix(d, self.ranks[i - 1], self.ranks[i])
            if d.shape != (self.ranks[i - 1], self.ranks[i]):
                raise ValueError(
                    f"d_{i} has shape {d.shape}, expected {(self.ranks[i - 1], self.ranks[i])}"
                )
            self.boundaries[i] = d
        for i in range(2, len(self.ranks)):
            prod = self.boundaries[i - 1] @ self.boundaries[i]
            if not prod.is_zero():
                raise ValueError(f"d_{i - 1} d_{i} != 0")

    @property
    def top_degree(self):
        return len(self.ranks) - 1

    def boundary(self, i):
        if i < 1 or i > self.top_degree:
            rows = self.ranks[i - 1] if 0 <= i - 1 <= self.top_degree else 0
            cols = self.ranks[i] if 0 <= i <= self.top_degree else 0
            return IntegerMatrix.zeros(rows, cols)
        return self.boundaries[i]

    def euler_characteristic(self):
        return sum((-1) ** i * r for i, r in enumerate(self.ranks))


def _rank_and_torsion(m):
    if m.rows == 0 or m.cols == 0:
        return 0, ()
    inv = smith_normal_form(m).invariants
    return len(inv), tuple(d for d in inv if d > 1)


def chain_homology(C):
    """[H_0, ..., H_top] as AbelianGroups: H_i = ker d_i / im d_{i+1}."""
    ranks = [_rank_and_torsion(C.boundary(i))[0] for i in range(C.top_degree + 2)]
    out = []
    for i in range(C.top_degree + 1):
        kernel_rank = C.ranks[i] - ranks[i]
        image_rank, torsion = _rank_and_torsion(C.boundary(i + 1))
        out.append(AbelianGroup(kernel_rank - image_rank, torsion))
    return out


def betti_numbers(groups):
    return [g.free_rank for g in groups]
