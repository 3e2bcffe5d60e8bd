"""
Necessary conditions for a 4-plane diagram to be the spine of a bridge
quadrisection.  Passing every check does not certify the diagram: unlink
recognition is out of reach of these invariants.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .presentations import free_rank_certificate, link_group, surface_group
from .tangles import _count_orbits

NECESSARY_NOT_SUFFICIENT = (
    "all checks are necessary conditions only; passing them does not prove "
    "the tuples are unlinks"
)


@dataclass
class CheckResult:
    name: str
    status: str  # "pass", "fail" or "inconclusive"
    detail: str = ""

    @property
    def failed(self):
        return self.status == "fail"

    def to_dict(self):
        return {"name": self.name, "status": self.status, "detail": self.detail}


@dataclass
class ValidationReport:
    bridges: int
    checks: list = field(default_factory=list)
    note: str = NECESSARY_NOT_SUFFICIENT

    @property
    def passed(self):
        return not any(c.failed for c in self.checks)

    def failures(self):
        return [c for c in self.checks if c.failed]

    def by_name(self, prefix):
        return [c for c in self.checks if c.name.startswith(prefix)]

    def to_dict(self):
        return {
            "bridges": self.bridges,
            "passed": self.passed,
            "note": self.note,
            "checks": [c.to_dict() for c in self.checks],
        }


def euler_identity_defect(D):
    """2b - 4b + sum of the six c_ij - sum of the four s_i; zero for a valid spine."""
    b = D.bridges
    return 2 * b - 4 * b + sum(D.pair_counts().values()) - sum(D.triple_counts().values())


def validate_diagram(D, tietze=True, budget=20_000):
    """
    Run the checks:

    (a) each consecutive pair T_i u T_{i+1} has link-group abelianization
        Z^c, c the number of components;
    (b) each triple forms a closed surface of Euler characteristic twice
        its number of components;
    (c) the Euler identity 2b - 4b + sum c_ij - sum s_i = 0;
    (d) optionally, Tietze moves reduce each consecutive link group to a
        free group of rank c, and each triple's surface group (all three
        tangle relator sets together) to a free group of rank s; a stall
        is reported as inconclusive.
    """
    b = D.bridges
    n = D.punctures
    ms = D.matchings()
    counts = D.pair_counts()
    report = ValidationReport(b)

    for i in range(4):
        j = (i + 1) % 4
        key = (min(i, j) + 1, max(i, j) + 1)
        c = counts[key]
        group, _ = link_group(D.tangles[i], D.tangles[j]).abelianization()
        ok = group.free_rank == c and not group.torsion
        report.checks.append(
            CheckResult(
                f"a:abelianization T{i + 1}T{j + 1}",
                "pass" if ok else "fail",
                f"H1 = {group}, components = {c}",
            )
        )

    for trio in combinations(range(4), 3):
        pairs = [(trio[0], trio[1]), (trio[1], trio[2]), (trio[0], trio[2])]
        chi = 2 * b - 3 * b + sum(counts[(x + 1, y + 1)] for x, y in pairs)
        comps = _count_orbits(n, [ms[k] for k in trio])
        name = "".join(f"T{k + 1}" for k in trio)
        report.checks.append(
            CheckResult(
                f"b:sphere count {name}",
                "pass" if chi == 2 * comps else "fail",
                f"chi = {chi}, components = {comps}",
            )
        )

    defect = euler_identity_defect(D)
    report.checks.append(
        CheckResult("c:euler identity", "pass" if defect == 0 else "fail", f"defect = {defect}")
    )

    if tietze:
        for i in range(4):
            j = (i + 1) % 4
            c = counts[(min(i, j) + 1, max(i, j) + 1)]
            rank = free_rank_certificate(link_group(D.tangles[i], D.tangles[j]), budget)
            report.checks.append(
                CheckResult(f"d:free link group T{i + 1}T{j + 1}", *_verdict(rank, c))
            )
        for trio in combinations(range(4), 3):
            s = _count_orbits(n, [ms[k] for k in trio])
            rank = free_rank_certificate(surface_group(*(D.tangles[k] for k in trio)), budget)
            name = "".join(f"T{k + 1}" for k in trio)
            report.checks.append(CheckResult(f"d:free surface group {name}", *_verdict(rank, s)))
    return report


def _verdict(rank, expected):
    if rank is None:
        return "inconclusive", "Tietze moves stalled"
    if rank == expected:
        return "pass", f"free of rank {rank}"
    return "fail", f"free of rank {rank}, expected {expected}"
