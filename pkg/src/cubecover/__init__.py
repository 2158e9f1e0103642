"""Subcube coverings and polychromatic colorings of the hypercube Q_n."""

from .bounds import (
    BoundReport,
    bound_report,
    bounds_c,
    bounds_pc,
    c_codim_upper,
    lower_bound_f,
    turan_relation,
    verify_binomial_identity,
)
from .constructions import (
    CoveringDesign,
    CoveringSet,
    LabelledSet,
    construct_facet_cover,
    construct_pipeline_cover,
    expand_cuts_to_labellings,
    greedy_covering_design,
    random_cut_cover,
    verify_covering,
)
from .cube import Params, Subcube, covers, enumerate_subcubes, format_subcube, parse_subcube, signature
from .polychromatic import (
    ColorScheme,
    color_class,
    color_of,
    find_colored_subcube,
    palette_size,
    scheme,
    verify_polychromatic,
)
from .solver import IncidenceInstance, SolveResult, brute_force_min_cover, build_incidence, solve_min_cover

__version__ = "0.1.0"
