"""Bootstrap percolation on grid graphs: simulation, bounds, and exact optima."""

from .constructions import (
    Construction,
    construct,
    construct_p3,
    construct_p4,
    construct_p5,
    predicted_optimum,
)
from .forbidden import (
    ForbiddenSubgraph,
    PackingCertificate,
    disjoint_packing_bound,
    enumerate_catalog,
    formula_lower_bound,
    is_forbidden,
)
from .grid import Grid, Vertex, VertexSet, make_grid
from .instance import (
    CoordinateRangeError,
    DuplicateSeedError,
    Instance,
    InstanceError,
    InstanceFormatError,
    parse_instance,
    render_ascii,
    serialize_instance,
)
from .percolation import ClosureResult, async_closure, closure, percolates, step
from .solver import (
    BudgetExhausted,
    SolveOptions,
    SolveReport,
    branch_witness,
    brute_force_min,
    forced_seeds,
    phi,
    solve_min,
)

__all__ = [
    "BudgetExhausted",
    "ClosureResult",
    "Construction",
    "CoordinateRangeError",
    "DuplicateSeedError",
    "ForbiddenSubgraph",
    "Grid",
    "Instance",
    "InstanceError",
    "InstanceFormatError",
    "PackingCertificate",
    "SolveOptions",
    "SolveReport",
    "Vertex",
    "VertexSet",
    "async_closure",
    "branch_witness",
    "brute_force_min",
    "closure",
    "construct",
    "construct_p3",
    "construct_p4",
    "construct_p5",
    "disjoint_packing_bound",
    "enumerate_catalog",
    "forced_seeds",
    "formula_lower_bound",
    "is_forbidden",
    "make_grid",
    "parse_instance",
    "percolates",
    "phi",
    "predicted_optimum",
    "render_ascii",
    "serialize_instance",
    "solve_min",
    "step",
]
