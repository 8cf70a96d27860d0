"""Exact invariants of bound-quiver algebra modules and their orbit closures."""

__version__ = "0.1.0"

from .linalg import QMat
from .quiver import (
    AdmissibilityReport,
    Arrow,
    BoundQuiver,
    ConvexityError,
    NotAdmissibleError,
    Path,
    QuiverError,
    QuiverInvariantError,
    QuiverSyntaxError,
    Relation,
    algebra_dim,
    basis_paths,
    convex_subquiver,
    opposite_quiver,
    parse_bound_quiver,
    parse_quiver_file,
    serialize_quiver,
    validate_admissible,
)
from .rep import (
    Morphism,
    RepError,
    Representation,
    ShortExactSeq,
    SplitnessError,
    decompose,
    decompose_multiset,
    direct_sum,
    end_dim,
    hom_basis,
    hom_dim,
    is_isomorphic,
    parse_module_file,
    parse_module_text,
    rep_from_dict,
    serialize_module,
    zero_rep,
)
from .homology import (
    HomologyError,
    Resolution,
    chi,
    euler_matrix,
    euler_pair,
    ext1_classes,
    ext_dim,
    global_dim,
    inj_dim,
    injective_rep,
    min_proj_resolution,
    proj_dim,
    projective_rep,
    realize_extension,
    simple_rep,
)
from .shod import (
    ModuleCatalog,
    NotStrictShodError,
    ShodError,
    TiltingError,
    TiltingModule,
    build_catalog,
    canonical_tilting,
    classify_LRP,
    export_catalog,
    ext_injectives_in_L,
    ext_projectives_in_R,
    lambda_left,
    lambda_right,
    shod_report,
    structure_checks,
    sum_rep,
)
from .geometry import (
    BUDGETS,
    BudgetExhausted,
    Codim1Report,
    DegenerationEdge,
    GeometryError,
    RegularityCertificate,
    SearchBudget,
    a_lambda,
    codim1_regularity_report,
    degeneration_witness,
    hom_order_leq,
    lemma_tangent_check,
    minimal_degenerations,
    module_names,
    orbit_info,
    regularity_certificate,
    split_LP,
    tangent_dim,
)
from .cli import main

__all__ = [
    "QMat",
    "AdmissibilityReport",
    "Arrow",
    "BoundQuiver",
    "Path",
    "Relation",
    "QuiverError",
    "QuiverSyntaxError",
    "QuiverInvariantError",
    "NotAdmissibleError",
    "ConvexityError",
    "algebra_dim",
    "basis_paths",
    "convex_subquiver",
    "opposite_quiver",
    "parse_bound_quiver",
    "parse_quiver_file",
    "serialize_quiver",
    "validate_admissible",
    "Morphism",
    "RepError",
    "Representation",
    "ShortExactSeq",
    "SplitnessError",
    "decompose",
    "decompose_multiset",
    "direct_sum",
    "end_dim",
    "hom_basis",
    "hom_dim",
    "is_isomorphic",
    "parse_module_file",
    "parse_module_text",
    "rep_from_dict",
    "serialize_module",
    "zero_rep",
    "HomologyError",
    "Resolution",
    "chi",
    "euler_matrix",
    "euler_pair",
    "ext1_classes",
    "ext_dim",
    "global_dim",
    "inj_dim",
    "injective_rep",
    "min_proj_resolution",
    "proj_dim",
    "projective_rep",
    "realize_extension",
    "simple_rep",
    "ModuleCatalog",
    "NotStrictShodError",
    "ShodError",
    "TiltingError",
    "TiltingModule",
    "build_catalog",
    "canonical_tilting",
    "classify_LRP",
    "export_catalog",
    "ext_injectives_in_L",
    "ext_projectives_in_R",
    "lambda_left",
    "lambda_right",
    "shod_report",
    "structure_checks",
    "sum_rep",
    "BUDGETS",
    "BudgetExhausted",
    "Codim1Report",
    "DegenerationEdge",
    "GeometryError",
    "RegularityCertificate",
    "SearchBudget",
    "a_lambda",
    "codim1_regularity_report",
    "degeneration_witness",
    "hom_order_leq",
    "lemma_tangent_check",
    "minimal_degenerations",
    "module_names",
    "orbit_info",
    "regularity_certificate",
    "split_LP",
    "tangent_dim",
    "main",
]
