"""Local antimagic edge labelings: constructions, bounds, exact search, CLI."""

from .bounds import (
    corona_lower_bound,
    lower_bound,
    pendant_lower_bound,
    two_color_necessary,
)
from .constructions import (
    UnsupportedConstruction,
    construct,
    label_book_pendants,
    label_book_triangles,
    label_caterpillar3,
    label_complete_pendants,
    label_cycle_3col,
    label_cycle_union,
    label_cycle_union_2col,
    label_hibiscus,
    label_path,
    label_star,
    label_tadpole,
)
from .corona import label_corona
from .graphs import (
    FamilyDomainError,
    FamilySpec,
    FamilySyntaxError,
    Graph,
    bipartition,
    build_graph,
    chromatic_number_exact,
    parse_family_spec,
    pendant_count,
    read_edge_list,
    to_dot,
)
from .labeling import (
    Certificate,
    ColorProfile,
    EdgeLabeling,
    color_count,
    induced_colors,
    make_certificate,
    verify_local_antimagic,
)
from .oracle import (
    Prediction,
    classify_cycle_union,
    condition_C1,
    condition_C2,
    predicted,
)
from .rectangles import (
    LabelMatrix,
    NonexistentRectangle,
    b_matrix,
    c_matrix,
    magic_rectangle,
    validate_row_rectangle,
)
from .solver import (
    ChiLaResult,
    SearchBudget,
    SearchOutcome,
    chi_la_by_enumeration,
    exact_chi_la,
    find_labeling_with_color_budget,
)

__all__ = [name for name in dir() if not name.startswith("_")]
