"""
Walk through the three-fold branched cover of S^5 along the spun trefoil.

The diagram is read from its relator-mode transcription, the
representation sends x0, x1 to (1 2) and the other punctures to (1 3).
Each stage prints what it computed so the numbers can be checked by hand.
"""

from quadrisect import (
    branched_cover_homology,
    check_extends,
    cyclic_genus_bound,
    data_path,
    read_diagram,
    read_rho,
    riemann_hurwitz_genus,
    validate_diagram,
)
from quadrisect.covers import lift_surface_group
from quadrisect.heegaard import h1_3manifold
from quadrisect.presentations import puncture_names
from quadrisect.tangles import build_surface_complex

D = read_diagram(data_path("appendix.q4d"))
rho = read_rho(data_path("appendix.rho"), D.punctures)
names = puncture_names(D.bridges)

print("Tangle relators")
for k, T in enumerate(D.tangles, start=1):
    print(f"  T{k}:", " ; ".join(r.format(names) for r in T.relators))

S = build_surface_complex(D)
print("\nCentral surface")
print("  pair counts  ", dict(sorted(D.pair_counts().items())))
print("  triple counts", dict(sorted(D.triple_counts().items())))
print(f"  chi = {S.euler_characteristic}, genus = {S.genus}, orientable = {S.orientable}")

report = validate_diagram(D)
print("\nValidator:", "passed" if report.passed else "FAILED", f"({len(report.checks)} checks)")
print("H1 of the embedded 3-manifold:", h1_3manifold(D))

print("\nRepresentation")
for i, p in enumerate(rho.images):
    print(f"  x{i} -> {p}")
print("  extends over every tangle:", check_extends(rho, D))
print("  cover surface genus:", riemann_hurwitz_genus(D.bridges, rho),
      "(cyclic bound", cyclic_genus_bound(D.bridges, rho.sheets), ")")

lifted = lift_surface_group(D.bridges, rho)
gens = lifted.group.generators
print(f"\nLifted surface group: {lifted.group.ngens} generators, {len(lifted.group.relators)} relators")
print("  claw relators:", ", ".join(r.format(gens) for r in lifted.claw_relators))
print("  a lifted sphere relator:", lifted.sphere_relators[0].format(gens))

basis = [f"x{i}_1" for i in range(3, 11)]
result = branched_cover_homology(D, rho, basis=basis, details=True)
print("\nLagrangians in the basis", " ".join(basis))
for colour, L in zip(("red", "blue", "green", "purple"), result.lagrangian_data.lagrangians):
    print(f"  {colour:6}", " ".join("(" + ",".join(map(str, v)) + ")" for v in L.basis))

print("\nHomology of the cover")
for k, g in enumerate(result.groups):
    print(f"  H{k} = {g}")
