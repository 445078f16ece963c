"""de Bruijn colorings of polyominoes: construct, verify, enumerate."""

from .cock import CockParams, all_params, cock_construct, cock_count, cock_locate
from .debruijn import (
    DeBruijnSequence,
    acyclic_from_cyclic,
    count_acyclic,
    count_cyclic,
    enumerate_all_cyclic,
    generate_cyclic,
    is_acyclic_debruijn,
    is_cyclic_debruijn,
)
from .formats import ascii_render, colored_from_json, parse_json, to_json
from .lattice import (
    Cell,
    ColoredPattern,
    ColoredPolyomino,
    DisconnectedError,
    EmptySetError,
    PickQuantities,
    Polyomino,
    apply_lattice_map,
    coloring_of_instance,
    dimensions,
    has_pinch,
    instances_of,
    is_connected,
    normalize,
    pick_quantities,
    random_polyomino,
    row_shift,
)
from .search import (
    BudgetExceededError,
    InstanceGraph,
    SearchConfig,
    VerifyResult,
    bijection_check,
    enumerate_prismatic_colorings,
    find_minimal_shapes,
    has_prismatic_coloring,
    instance_graph,
    is_debruijn_coloring,
    min_size_with_instances,
    shape_census,
    transport_coloring,
)
from .shapes import (
    ELL,
    LTROMINO,
    SQUARE,
    TEE,
    ZEE,
    RolePartition,
    RowProfile,
    pattern_from_name,
    pyramid,
    pyramid_trimmed,
    rectangle,
    role_partition,
    row_profile,
    straight,
    ziggurat,
)

__all__ = [name for name in dir() if not name.startswith("_")]
