"""Achievable rates for Gaussian one-way and two-way relay channels.

Core pieces: a linear-Gaussian mutual-information engine (`gaussian`),
channel models (`channels`), one-way and two-way relaying schemes
(`oneway`, `twrc`), 2-D rate-region geometry (`regions`), a deterministic
derivative-free maximizer (`search`), and a CSV-emitting CLI (`cli`).
"""

from .channels import (
    LineGeometry,
    OneWayChannel,
    TwoWayChannel,
    oneway_from_geometry,
    twrc_from_geometry,
)
from .gaussian import EntropyResult, GaussianSystem
from .kernels import COMPILED as COMPILED_KERNEL
from .kernels import kernel_name
from .oneway import (
    OneWayCombinedParams,
    best_combined,
    best_combined_via_engine,
    best_df,
    best_nnc,
    capacity,
    combined_rate_closed_form,
    combined_rate_via_engine,
    compress_forward_optimum,
    cutset_bound,
    df_rate,
    nnc_rate,
)
from .regions import (
    RatePolytope,
    RateRegion,
    contains,
    convex_hull,
    polytope_vertices,
    region_area,
    sum_rate,
    weighted_sum_max,
)
from .search import (
    DEFAULT_BUDGET,
    TWRC_COMBINED_BUDGET,
    Interval,
    LogInterval,
    SearchBudget,
    SphereGroup,
    golden_max,
    maximize,
)
from .twrc import (
    ConstraintSet,
    LayerAssignment,
    TwrcEvaluator,
    TwrcParams,
    build_signaling,
    combined_region,
    constraint_set,
    lnnc_region,
    rankov_df_region,
    region_for_params,
    scheme_region,
    theorem_bounds,
    twrc_all_regions,
    twrc_cutset_bound,
    twrc_sum_rates,
    xie_df_region,
)

__version__ = "0.1.0"
