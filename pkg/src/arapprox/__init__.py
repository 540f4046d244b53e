"""Exact Auslander-Reiten theory for small bound quiver algebras, and the
Nakayama functor of an abelian subcategory of the mesh category of ZA_n
built from covers of Serre images."""

from .errors import ArApproxError
from .linalg import ExactMatrix
from .quiver import (
    BoundQuiverAlgebra, Quiver, alternating_quiver, build_algebra, linear_quiver,
    path_algebra,
)
from .modules import (
    ModuleCategory, Representation, RepMorphism, decompose, hom_basis, injective,
    is_isomorphic, label, projective, simple,
)
from .artranslate import ar_quiver, ar_sequence, tau, tau_inverse
from .mesh import MeshCategory, build_mesh
from .slice import label_slice
from .approx import Subcategory, minimize, nu_via_approx, precover

__version__ = "0.1.0"

__all__ = [
    "ArApproxError", "ExactMatrix", "BoundQuiverAlgebra", "Quiver", "alternating_quiver",
    "build_algebra", "linear_quiver", "path_algebra", "ModuleCategory", "Representation",
    "RepMorphism", "decompose", "hom_basis", "injective", "is_isomorphic", "label",
    "projective", "simple", "ar_quiver", "ar_sequence", "tau", "tau_inverse",
    "MeshCategory", "build_mesh", "label_slice", "Subcategory", "minimize",
    "nu_via_approx", "precover",
]
