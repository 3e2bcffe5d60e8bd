import random

import pytest
from hypothesis import given, strategies as st

from oracles import cycle_space_preimage, fox_double_cover_h1, perm_product
from quadrisect import data_path, read_diagram, read_rho
from quadrisect.constructions import one_bridge_diagram, spun_diagram
from quadrisect.covers import (
    CoverError,
    PermutationRep,
    branched_cover_homology,
    check_extends,
    cyclic_genus_bound,
    lagrangians,
    lift_relator,
    lift_surface_group,
    quadrisection_complex,
    riemann_hurwitz_genus,
)
from quadrisect.groups import Word, abelianization, parse_word
from quadrisect.homology import betti_numbers
from quadrisect.linalg import AbelianGroup, Lattice
from quadrisect.perms import Permutation
from quadrisect.presentations import puncture_names
from quadrisect.tangles import BraidWord

S5 = [AbelianGroup(1), AbelianGroup(0), AbelianGroup(0), AbelianGroup(0), AbelianGroup(0), AbelianGroup(1)]


@pytest.fixture(scope="module")
def appendix():
    return read_diagram(data_path("appendix.q4d")), read_rho(data_path("appendix.rho"))


def check_duality(groups):
    beta = betti_numbers(groups)
    assert groups[0] == groups[5] == AbelianGroup(1)
    assert beta[1] == beta[4] and beta[2] == beta[3]
    # Torsion linking: T_k and T_{4-k} agree on a closed orientable 5-manifold.
    assert groups[1].torsion == groups[3].torsion
    assert groups[2].torsion == groups[2].torsion and groups[4].torsion == ()


def test_extension_examples(appendix):
    D, rho = appendix
    assert check_extends(PermutationRep.trivial(12), D)
    assert check_extends(rho, D)
    images = list(rho.images)
    images[5] = Permutation.parse("(2 3)", 3)
    bad = PermutationRep(3, tuple(images))
    # x5 x6 goes to (1 3)(2 3), which is not the identity.
    assert perm_product([images[5].images, images[6].images], 3) != (1, 2, 3)
    assert not check_extends(bad, D)


def test_lifted_relators_match_appendix(appendix):
    _, rho = appendix
    names = lift_surface_group(6, rho).group.generators
    w = parse_word("x1x2x1x2^-1x1^-1x3", puncture_names(6))
    assert lift_relator(w, rho, 1).format(names) == "x1_1 x2_2 x1_2 x2_3^-1 x1_3^-1 x3_3"
    sphere = Word((i, 1) for i in range(12))
    w1 = "x0_1 x1_2 x2_1 x3_3 x4_1 x5_3 x6_1 x7_3 x8_1 x9_3 x10_1 x11_3"
    assert lift_relator(sphere, rho, 1).format(names) == w1
    assert lift_relator(w, PermutationRep.trivial(12), 1) == w


def test_lifted_surface_group(appendix):
    _, rho = appendix
    S = lift_surface_group(6, rho)
    names = S.group.generators
    assert S.group.ngens == 36
    assert [r.format(names) for r in S.claw_relators] == ["x0_1", "x2_1"]
    branch = {r.format(names) for r in S.branch_relators}
    assert {"x0_1 x0_2", "x0_3", "x1_1 x1_2", "x1_3"} <= branch
    assert abelianization(S.group)[0] == AbelianGroup(8)
    assert lift_surface_group(6, PermutationRep.trivial(12)).group.ngens == 12


def test_riemann_hurwitz_examples(appendix):
    _, rho = appendix
    assert riemann_hurwitz_genus(6, rho) == 4
    assert riemann_hurwitz_genus(3, PermutationRep.trivial(6)) == 0
    for n in (2, 3, 5):
        for b in (1, 2, 3):
            cyc = Permutation.from_cycles([list(range(1, n + 1))], n)
            inv = cyc.inverse()
            rho = PermutationRep(n, tuple(cyc if k % 2 == 0 else inv for k in range(2 * b)))
            assert riemann_hurwitz_genus(b, rho) == cyclic_genus_bound(b, n) == 1 - n + b * (n - 1)


def test_nontransitive_rejected():
    rho = PermutationRep(2, tuple(Permutation.identity(2) for _ in range(2)))
    with pytest.raises(CoverError):
        riemann_hurwitz_genus(1, rho)
    with pytest.raises(CoverError):
        branched_cover_homology(one_bridge_diagram(), rho)


def test_trivial_cover_is_s5():
    groups = branched_cover_homology(one_bridge_diagram(), PermutationRep.trivial(2))
    assert list(groups) == S5
    assert lagrangians(one_bridge_diagram(), PermutationRep.trivial(2)).genus == 0


def test_appendix_lagrangian_ranks(appendix):
    D, rho = appendix
    data = lagrangians(D, rho)
    assert data.genus == 4
    assert all(L.rank == 4 and L.is_saturated() for L in data.lagrangians)


def test_appendix_double_cover_fixture(appendix):
    # Every relator in appendix.q4d has even length, so all-(1 2) extends.  The
    # value is pinned to the Fox-calculus H1 of the double branched cover
    # of the trefoil, which the spin reproduces in degrees 1 and 3.
    D, _ = appendix
    rho2 = PermutationRep(2, tuple(Permutation.parse("(1 2)", 2) for _ in range(12)))
    assert check_extends(rho2, D)
    groups = branched_cover_homology(D, rho2)
    free, tors = fox_double_cover_h1(BraidWord.parse("s2 s2 s2", 4))
    H = AbelianGroup(free, tuple(tors))
    assert list(groups) == [AbelianGroup(1), H, AbelianGroup(0), H, AbelianGroup(0), AbelianGroup(1)]
    check_duality(groups)


def test_relabeling_lagrangians_is_harmless(appendix):
    D, rho = appendix
    data = lagrangians(D, rho)
    L = list(data.lagrangians)
    from quadrisect.homology import chain_homology

    base = chain_homology(quadrisection_complex(L, 4))
    swapped = chain_homology(quadrisection_complex([L[1], L[0], L[2], L[3]], 4))
    assert base == swapped


@given(st.integers(0, 10**6))
def test_quadrisection_complex_d_squared(seed):
    rnd = random.Random(seed)
    g = rnd.randint(1, 3)
    lats = []
    for _ in range(4):
        while True:
            vs = [tuple(rnd.randint(-2, 2) for _ in range(2 * g)) for _ in range(g)]
            L = Lattice.span(2 * g, vs)
            if L.rank == g:
                lats.append(L)
                break
    # ChainComplex verifies d o d = 0 on construction.
    C = quadrisection_complex(lats, g)
    assert C.top_degree == 5


SPUN_CASES = [("s2 s2 s2", 4), ("s2 s2 s1' s2", 4), ("s2 s2 s2 s2 s2", 4), ("s2 s2 s2 s4 s4 s4", 6)]


@pytest.mark.parametrize("word,strands", SPUN_CASES)
def test_double_cover_of_spun_knot_matches_fox(word, strands):
    beta = BraidWord.parse(word, strands)
    D = spun_diagram(beta)
    rho = PermutationRep(2, tuple(Permutation.parse("(1 2)", 2) for _ in range(D.punctures)))
    groups = branched_cover_homology(D, rho)
    free, tors = fox_double_cover_h1(beta)
    H = AbelianGroup(free, tuple(tors))
    assert list(groups) == [AbelianGroup(1), H, AbelianGroup(0), H, AbelianGroup(0), AbelianGroup(1)]


def cycle_preimages(data, rho):
    # A lifted generator names a different loop for each spanning tree, so
    # H1 coordinates are tree dependent; the pulled-back cycle spaces are not.
    C = data.coordinates.tolist()
    return [cycle_space_preimage(C, L.basis, rho) for L in data.lagrangians]


@pytest.mark.parametrize("tree", ["dfs", "bfs-reverse"])
def test_tree_independence(appendix, tree):
    D, rho = appendix
    a = branched_cover_homology(D, rho, details=True)
    b = branched_cover_homology(D, rho, tree=tree, details=True)
    assert a.groups == b.groups
    pa = cycle_preimages(a.lagrangian_data, rho)
    assert pa == cycle_preimages(b.lagrangian_data, rho)
    assert all(pa[i] != pa[j] for i in range(4) for j in range(i + 1, 4))
