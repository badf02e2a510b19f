"""Symmetry of quasiplatonic surfaces from regular dessins d'enfants."""
from .constructions import (biggs_map, cyclic_dessin, exceptional_dessin, join, klein21, torus_map, trivial_dessin,
                            v4_map)
from .dessin import (DessinType, OrientedMap, RegularDessin, dual, from_perms, genus, is_isomorphic, is_reflexible,
                     map_automorphism_count, mirror, rotate, type_of, walsh, walsh_inverse)
from .errors import DessinError
from .gf2 import GF2e, gf2e_field
from .inclusions import TABLE1, InclusionRow, table1_candidates
from .permgroup import (GeneratorAssignment, GroupClosure, Perm, automorphism_exists, closure, compose,
                        hom_extends, holomorph_extension, is_regular_pair, order_of)
from .symmetry import (SymmetryReport, check_condition1, check_condition2, check_condition3, check_condition4,
                       decide_symmetric, decide_symmetric_maximal, grow_normal)

__version__ = "0.1.0"

__all__ = [
    "DessinError", "DessinType", "GF2e", "GeneratorAssignment", "GroupClosure", "InclusionRow", "OrientedMap",
    "Perm", "RegularDessin", "SymmetryReport", "TABLE1", "automorphism_exists", "biggs_map", "check_condition1",
    "check_condition2", "check_condition3", "check_condition4", "closure", "compose", "cyclic_dessin",
    "decide_symmetric", "decide_symmetric_maximal", "dual", "exceptional_dessin", "from_perms", "genus",
    "gf2e_field", "grow_normal", "hom_extends", "holomorph_extension", "is_isomorphic", "is_reflexible",
    "is_regular_pair", "join", "klein21", "map_automorphism_count", "mirror", "order_of", "rotate",
    "table1_candidates", "torus_map", "trivial_dessin", "type_of", "v4_map", "walsh", "walsh_inverse",
]
