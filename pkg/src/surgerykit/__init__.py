"""surgerykit: topological surgery on diagrams, surfaces and framed links."""

from .diagrams import (
    LinkDiagram,
    component_count,
    crossing_signs,
    disjoint_union,
    is_planar,
    kauffman_bracket,
    linking_number,
    mirror,
    normalized_bracket,
    parse_pd,
    reverse,
    self_writhe,
    serialize_pd,
    writhe,
)
from .laurent import LaurentPoly
from .reconnect import SurgerySite1D, one_dim_zero_surgery, reverse_component
from .surfaces import (
    CutCurve,
    JoinPoints,
    SurfaceDescriptor,
    euler_characteristic,
    two_dim_one_surgery,
    two_dim_zero_surgery,
)
from .levelsets import LevelSetMesh, MorseForm, emit_mesh, handle_slices, sample_level_set
from .presentations import GroupPresentation, abelianization, tietze_simplify
from .coset import EnumerationResult, todd_coxeter
from .homology import AbelianGroupDecomp, cokernel_decomposition, smith_normal_form
from .dehn import FramedLink, h1_of_surgery, linking_matrix, longitude_word, surgery_group, wirtinger
from .manifolds import ManifoldExpr, h1_expr, two_surgery_expr, zero_surgery_expr
from .program import Report, parse_program, run_program
from .errors import (
    MeshError,
    PDError,
    PresentationError,
    ScriptError,
    SiteError,
    SurgeryKitError,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianGroupDecomp",
    "CutCurve",
    "EnumerationResult",
    "FramedLink",
    "GroupPresentation",
    "JoinPoints",
    "LaurentPoly",
    "LevelSetMesh",
    "LinkDiagram",
    "ManifoldExpr",
    "MeshError",
    "MorseForm",
    "PDError",
    "PresentationError",
    "Report",
    "ScriptError",
    "SiteError",
    "SurfaceDescriptor",
    "SurgeryKitError",
    "SurgerySite1D",
    "abelianization",
    "cokernel_decomposition",
    "component_count",
    "crossing_signs",
    "disjoint_union",
    "emit_mesh",
    "euler_characteristic",
    "h1_expr",
    "h1_of_surgery",
    "handle_slices",
    "is_planar",
    "kauffman_bracket",
    "linking_matrix",
    "linking_number",
    "longitude_word",
    "mirror",
    "normalized_bracket",
    "one_dim_zero_surgery",
    "parse_pd",
    "parse_program",
    "reverse",
    "reverse_component",
    "run_program",
    "sample_level_set",
    "self_writhe",
    "serialize_pd",
    "smith_normal_form",
    "surgery_group",
    "tietze_simplify",
    "todd_coxeter",
    "two_dim_one_surgery",
    "two_dim_zero_surgery",
    "two_surgery_expr",
    "wirtinger",
    "writhe",
    "zero_surgery_expr",
]
