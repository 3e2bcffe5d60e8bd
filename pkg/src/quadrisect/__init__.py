"""
Bridge quadrisections of 3-manifolds in S^5.  From a 4-plane diagram the
package derives validity checks and extended Heegaard data, along with
the integral homology of branched covers of S^5 along the 3-manifold.
"""

from importlib import resources

from .constructions import (
    lens_diagram,
    mutual_braid_move,
    one_bridge_diagram,
    rotate_diagram,
    rp3_diagram,
    spun_diagram,
    sum_diagrams,
)
from .covers import (
    CoverError,
    PermutationRep,
    branched_cover_homology,
    check_extends,
    cyclic_genus_bound,
    lagrangians,
    riemann_hurwitz_genus,
)
from .groups import FPGroup, Word, abelianization, parse_word, tietze_simplify
from .heegaard import extract_heegaard, h1_3manifold
from .homology import ChainComplex, chain_homology
from .io import FormatError, parse_diagram, parse_rho, read_diagram, read_rho, serialize_diagram, serialize_rho
from .linalg import AbelianGroup, IntegerMatrix, Lattice, smith_normal_form
from .perms import Permutation
from .presentations import RelatorTangle, link_group, sphere_group, surface_group, tangle_group
from .tangles import BraidWord, FourPlaneDiagram, TrivialTangle, build_surface_complex
from .validate import euler_identity_defect, validate_diagram

__version__ = "0.1.0"


def data_path(name):
    """Path of a bundled fixture such as ``"appendix.q4d"``."""
    return str(resources.files(__package__) / "data" / name)


__all__ = [
    "AbelianGroup",
    "BraidWord",
    "ChainComplex",
    "CoverError",
    "FPGroup",
    "FormatError",
    "FourPlaneDiagram",
    "IntegerMatrix",
    "Lattice",
    "Permutation",
    "PermutationRep",
    "RelatorTangle",
    "TrivialTangle",
    "Word",
    "abelianization",
    "branched_cover_homology",
    "build_surface_complex",
    "chain_homology",
    "check_extends",
    "cyclic_genus_bound",
    "data_path",
    "euler_identity_defect",
    "extract_heegaard",
    "h1_3manifold",
    "lagrangians",
    "lens_diagram",
    "link_group",
    "mutual_braid_move",
    "one_bridge_diagram",
    "parse_diagram",
    "parse_rho",
    "parse_word",
    "read_diagram",
    "read_rho",
    "riemann_hurwitz_genus",
    "rotate_diagram",
    "rp3_diagram",
    "serialize_diagram",
    "serialize_rho",
    "smith_normal_form",
    "sphere_group",
    "spun_diagram",
    "sum_diagrams",
    "surface_group",
    "tangle_group",
    "tietze_simplify",
    "validate_diagram",
]
