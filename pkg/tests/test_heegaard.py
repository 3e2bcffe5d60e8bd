from itertools import permutations

import pytest
from hypothesis import given, strategies as st

from generators import generator_diagrams
from quadrisect import data_path, read_diagram
from quadrisect.constructions import lens_diagram, mutual_braid_move, one_bridge_diagram, rp3_diagram
from quadrisect.heegaard import extract_heegaard, h1_3manifold
from quadrisect.linalg import AbelianGroup
from quadrisect.tangles import BraidWord, build_surface_complex

NAMES = sorted(generator_diagrams())


def test_one_bridge():
    H = extract_heegaard(one_bridge_diagram())
    assert H.euler_characteristic == 2
    assert len(H.alpha) == len(H.beta) == 1
    assert set(H.alpha[0]) == set(H.beta[0]) == {0, 1}
    assert h1_3manifold(one_bridge_diagram()) == AbelianGroup(0)


def test_rp3():
    H = extract_heegaard(rp3_diagram())
    assert H.orientable and H.euler_characteristic == 0
    assert h1_3manifold(rp3_diagram()) == AbelianGroup(0, (2,))


@pytest.mark.parametrize("p", range(1, 7))
def test_lens(p):
    D = lens_diagram(p)
    H = extract_heegaard(D)
    assert D.bridges == 2 * p
    assert H.orientable and H.euler_characteristic == 0
    # Doubled meridian and doubled slope-p curve.
    assert len(H.alpha) == len(H.beta) == 2
    assert H.q_gcd() == p
    expected = AbelianGroup(0, (p,)) if p > 1 else AbelianGroup(0)
    assert h1_3manifold(D) == expected


def test_appendix_is_homology_sphere():
    assert h1_3manifold(read_diagram(data_path("appendix.q4d"))) == AbelianGroup(0)


@pytest.mark.parametrize("name", NAMES)
def test_permutation_invariance(name):
    D = generator_diagrams()[name]
    base = h1_3manifold(D)
    assert all(h1_3manifold(D, order) == base for order in permutations(range(4)))


@pytest.mark.parametrize("name", NAMES)
def test_euler_characteristic_agrees(name):
    D = generator_diagrams()[name]
    assert extract_heegaard(D).euler_characteristic == build_surface_complex(D).euler_characteristic


@pytest.mark.parametrize("name", NAMES)
def test_q_gcd_divides_torsion(name):
    D = generator_diagrams()[name]
    H = extract_heegaard(D)
    if H.orientable:
        g = H.q_gcd()
        assert all(d % g == 0 for d in h1_3manifold(D).torsion) or g == 0


@given(
    st.sampled_from(["lens 3", "RP3", "spun trefoil", "L2 # L3"]),
    st.lists(st.tuples(st.integers(1, 40), st.sampled_from([1, -1])), max_size=8),
)
def test_braid_move_invariance(name, letters):
    D = generator_diagrams()[name]
    n = D.punctures
    w = BraidWord(n, tuple((1 + (i - 1) % (n - 1), e) for i, e in letters))
    moved, _ = mutual_braid_move(D, w)
    assert h1_3manifold(moved) == h1_3manifold(D)


def test_to_dict_shape():
    d = extract_heegaard(lens_diagram(2)).to_dict()
    assert set(d) == {"order", "orientable", "euler_characteristic", "alpha", "beta", "Q"}
    assert d["order"] == [1, 2, 3, 4]
