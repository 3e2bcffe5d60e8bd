"""
Spun knots with their double branched covers, then sums of diagrams.

The S^2-spin of a b-bridge knot is an S^3 in S^5 with a (5b - 4)-bridge
diagram.  The double cover of S^5 branched along it has H1 equal to H1 of
the double cover of S^3 branched along the knot, which we compute
separately with Fox calculus at t = -1.
"""

from quadrisect import (
    Permutation,
    PermutationRep,
    branched_cover_homology,
    h1_3manifold,
    lens_diagram,
    spun_diagram,
    sum_diagrams,
    validate_diagram,
)
from quadrisect.constructions import can_connect_sum
from quadrisect.linalg import IntegerMatrix, cokernel_invariants
from quadrisect.presentations import link_group
from quadrisect.tangles import BraidWord, TrivialTangle

KNOTS = {
    "trefoil": ("s2 s2 s2", 4),
    "figure eight": ("s2 s2 s1' s2", 4),
    "cinquefoil": ("s2 s2 s2 s2 s2", 4),
}


def fox_h1(beta):
    """H1 of the double branched cover of the plat closure of beta."""
    b = beta.strands // 2
    G = link_group(TrivialTangle(b), TrivialTangle(b, beta))
    rows = []
    for r in G.relators:
        row, sign = [0] * G.ngens, 1
        for g, e in r:
            if e == 1:
                row[g] += sign
                sign = -sign
            else:
                sign = -sign
                row[g] -= sign
        rows.append(row[1:])
    # Relations are rows; the group is generated by the columns.
    return cokernel_invariants(IntegerMatrix(rows, len(rows), G.ngens - 1).T)


swap = Permutation.parse("(1 2)", 2)
spun = {}
for name, (word, strands) in KNOTS.items():
    beta = BraidWord.parse(word, strands)
    D = spun_diagram(beta)
    spun[name] = D
    rho = PermutationRep(2, (swap,) * D.punctures)
    groups = branched_cover_homology(D, rho)
    print(f"spun {name}: {D.bridges} bridges, valid = {validate_diagram(D).passed}, H1(Y) = {h1_3manifold(D)}")
    print("  double cover of S^5:", ", ".join(str(g) for g in groups))
    print("  Fox calculus H1 of the knot's double cover:", fox_h1(beta))

print()
L2, L3 = lens_diagram(2), lens_diagram(3)
for label, A, B, mode in [
    ("L(2,1) + L(3,1)", L2, L3, "distant"),
    ("L(2,1) # L(3,1)", L2, L3, "connected"),
    ("spun trefoil # L(3,1)", spun["trefoil"], L3, "connected"),
]:
    D = sum_diagrams(A, B, mode)
    print(f"{label}: {D.bridges} bridges, H1 = {h1_3manifold(D)}, valid = {validate_diagram(D).passed}")

LL = sum_diagrams(L2, L3, "connected")
print("\nL(2,1) # L(3,1) can be summed again:", can_connect_sum(LL, L2))
