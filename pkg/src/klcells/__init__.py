"""Kazhdan-Lusztig polynomials and cells for affine Weyl groups with
unequal parameters, exactly.

The package computes r-, P- and M-polynomials over the group algebra ring
$\\mathbb{Z}[\\Gamma]$ for a free abelian weight group $\\Gamma = \\langle Q, q\\rangle$,
tracks which total orders on $\\Gamma$ (equivalently, which weight ratios
$a/b$) a computation is valid for, and uses translation arguments to promote
finite checks to infinite families of Bruhat intervals.  The reference group
is affine $G_2$ with weights $L(s_1)=a$, $L(s_2)=L(s_3)=b$.
"""

from .cells import (
    CellDecomposition,
    CellEdge,
    CellGraph,
    FamilyTag,
    Fixtures,
    Section6Report,
    SweepCritical,
    SweepRegion,
    SweepResult,
    chamber_index,
    decompose,
    left_edges,
    lowest_cell_member,
    ratio_sweep,
    verify_section6,
)
from .coxeter import (
    GroupData,
    GroupElement,
    WeightFunction,
    ball,
    bruhat_leq,
    descents,
    element_from_word,
    g2_affine,
    interval,
    is_reduced_product,
    length,
    load_group,
    lower_cone,
    parse_word,
    weighted_length,
)
from .geometry import (
    HalfspaceSet,
    OrbitData,
    StabilityReport,
    TranslationDatum,
    alcove_point,
    h_region,
    interval_shift,
    is_special,
    omega_orbit,
    orbit_factor_index,
    regions_disjoint,
    translation_factor,
    translation_vector,
    verify_stability,
)
from .hecke import (
    IntervalReport,
    KLContext,
    KLTables,
    c_product,
    check_star,
    critical_ratios,
    gamma_plus_set,
    interval_report,
    kl_tables,
    m_poly,
    mu_defect,
    p_poly,
    r_poly,
)
from .laurent import GammaPoly, OrderSpec, SingleLaurent, specialize, split

__version__ = "0.1.0"

__all__ = [
    "CellDecomposition",
    "CellEdge",
    "CellGraph",
    "FamilyTag",
    "Fixtures",
    "GroupData",
    "GroupElement",
    "WeightFunction",
    "GammaPoly",
    "SingleLaurent",
    "OrderSpec",
    "HalfspaceSet",
    "IntervalReport",
    "KLContext",
    "KLTables",
    "OrbitData",
    "Section6Report",
    "StabilityReport",
    "SweepCritical",
    "SweepRegion",
    "SweepResult",
    "TranslationDatum",
    "alcove_point",
    "ball",
    "bruhat_leq",
    "c_product",
    "chamber_index",
    "check_star",
    "critical_ratios",
    "decompose",
    "descents",
    "element_from_word",
    "g2_affine",
    "gamma_plus_set",
    "h_region",
    "interval",
    "interval_report",
    "interval_shift",
    "is_reduced_product",
    "is_special",
    "kl_tables",
    "left_edges",
    "length",
    "load_group",
    "lower_cone",
    "lowest_cell_member",
    "m_poly",
    "mu_defect",
    "omega_orbit",
    "orbit_factor_index",
    "p_poly",
    "parse_word",
    "r_poly",
    "ratio_sweep",
    "regions_disjoint",
    "specialize",
    "split",
    "translation_factor",
    "translation_vector",
    "verify_section6",
    "verify_stability",
    "weighted_length",
    "__version__",
]
