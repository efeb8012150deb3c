"""Multiset topology kernel: multiset algebra, M-topologies, exterior and
boundary operators, and exhaustive theorem checking over finite spaces."""

from .errors import *  # noqa: F401,F403
from .mset import (
    MPoint,
    MSet,
    MSpace,
    add,
    complement_in,
    equals,
    family_intersection,
    family_union,
    intersect,
    is_full_submset,
    is_partial_whole_submset,
    is_submset,
    is_whole_submset,
    make_mset,
    parse_mset,
    subtract,
    support,
    union,
)
from .topology import (
    MTopology,
    build_topology,
    closed_family,
    closure,
    generated_topology,
    interior,
    is_basis,
    is_clopen,
    is_closed,
    is_open,
    subspace,
)
from .operators import (
    boundary,
    contains_all_boundary_points,
    contains_all_limit_points,
    exterior,
    is_limit_point,
    limit_points,
    neighborhoods,
)
from .enumeration import (
    EnumConfig,
    enumerate_full_submsets,
    enumerate_submsets,
    enumerate_topologies,
    enumerate_whole_submsets,
    random_topology,
)
from .theorems import THEOREM_IDS, Verdict, check_instance, check_space, verify_all
from .search import SearchConfig, search_counterexample
from .spacefile import dump_space, load_space, parse_space

__version__ = "0.1.0"
