"""
Lens spaces L(p, 1) in S^5.

For each p the generator builds a 2p-bridge diagram on a torus.  We print
the Heegaard curves with their intersection matrix Q and H1, then confirm
that a random mutual braid move leaves H1 unchanged.
"""

import random

from quadrisect import h1_3manifold, lens_diagram, mutual_braid_move, validate_diagram
from quadrisect.heegaard import extract_heegaard
from quadrisect.tangles import BraidWord

rnd = random.Random(3)

for p in range(1, 7):
    D = lens_diagram(p)
    H = extract_heegaard(D)
    h1 = h1_3manifold(D)
    print(f"L({p},1): {D.bridges} bridges, surface genus {H.surface.genus}, H1 = {h1}")
    print(f"  alpha curves {len(H.alpha)}, beta curves {len(H.beta)}, gcd of Q = {H.q_gcd()}")
    for row in H.Q:
        print("   ", " ".join(f"{x:3d}" for x in row))

    n = D.punctures
    w = BraidWord(n, tuple((rnd.randint(1, n - 1), rnd.choice((1, -1))) for _ in range(5)))
    moved, _ = mutual_braid_move(D, w)
    print(f"  after the move {w}: H1 = {h1_3manifold(moved)}")

D = lens_diagram(3)
rep = validate_diagram(D)
print("\nValidator on L(3,1):")
for check in rep.checks:
    print(f"  {check.status:12} {check.name}: {check.detail}")
