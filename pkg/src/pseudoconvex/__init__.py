"""Pseudo-convex partitions of planar point sets.

Every 13 points in general position split into at most three pairwise
disjoint holes or empty pseudo-triangles; sweeping such blocks gives at
most ceil(3n/13) parts for n points.
"""

from .algo13 import HeartCertificate, partition_13
from .estimator import ConvexLayerDepth, PseudoConvexPartition
from .exceptions import (
    BadInput,
    BadSpec,
    BranchMisfire,
    BudgetExhausted,
    InvalidCertificate,
    MalformedPart,
    NotEnoughPoints,
    OutsideHull,
    PseudoConvexError,
    SearchLimitExceeded,
)
from .geometry import PointSet, convex_hull, convex_layers, general_position_check, kth_angular_neighbor, orient
from .oracle import SearchBudget, admissible_3_partition, min_partition
from .partition import (
    Part,
    PartKind,
    Partition,
    classify_part,
    find_pseudo_polygonization,
    parts_disjoint,
    verify_partition,
)
from .partitioner import SweepPlan, choose_sweep_direction, partition_any, quad_sweep, sweep_plan
from .pointgen import GenSpec, generate, read_points, write_points

__all__ = [
    "BadInput", "BadSpec", "BranchMisfire", "BudgetExhausted", "ConvexLayerDepth", "GenSpec",
    "HeartCertificate", "InvalidCertificate", "MalformedPart", "NotEnoughPoints", "OutsideHull", "Part",
    "PartKind", "Partition", "PointSet", "PseudoConvexError", "PseudoConvexPartition", "SearchBudget",
    "SearchLimitExceeded", "SweepPlan", "admissible_3_partition", "choose_sweep_direction", "classify_part",
    "convex_hull", "convex_layers", "find_pseudo_polygonization", "general_position_check", "generate",
    "kth_angular_neighbor", "min_partition", "orient", "partition_13", "partition_any", "parts_disjoint",
    "quad_sweep", "read_points", "sweep_plan", "verify_partition", "write_points",
]
