"""Exact computation of induction formulae for finite groups.

The coefficients are series Lefschetz invariants of the subgroup and
centralizer decomposition categories, computed in the rational Burnside ring.
"""

from .burnside import (
    BurnsideElement,
    TableOfMarks,
    collection_idempotent,
    from_idempotent_coords,
    induce,
    marks_of,
    primitive_idempotent,
    restrict,
    table_of_marks,
)
from .decomposition import (
    SubgroupCollection,
    fixed_point_poset,
    fusion_category,
    fusion_coweighting,
    grothendieck_lefschetz,
    idempotent_expansion_reduced,
    lefschetz_centralizer,
    lefschetz_subgroup,
    marks_by_fixed_points,
    orbit_category,
    orbit_weighting,
)
from .exactnum import Polynomial, RationalFunction, fmt_rational, mat_solve
from .fincat import FinCat, series_euler, series_generating, skeletal_coweighting, skeletal_weighting
from .induction import (
    InductionFormula,
    RingSpec,
    canonicity_check,
    centralizer_collection,
    cyclic_subgroups,
    formula_centralizer,
    formula_subgroup,
    mackey_restrict_formula,
    primordial_subgroups,
    subgroup_closure,
    verify_character,
    verify_idempotent_support,
    wedge_report,
)
from .permgroup import PermGroup, Permutation, Subgroup, SubgroupClass, named_group
from .poset import Poset, mobius

__version__ = "0.1.0"
