"""Hook-Compress connected components with Atomic-Hook, Multi-Jump and adaptive edge segmentation."""
from adaptcc import backend
from adaptcc.engines import (
    RunMetrics,
    SegmentPlan,
    adaptive_cc,
    baseline_cc,
    choose_segment_count,
    partition_edges,
    run_algorithm,
    single_hook_cc,
)
from adaptcc.forest import (
    KernelCounters,
    ParentForest,
    atomic_hook,
    bound_holds,
    hook,
    init_forest,
    is_star,
    jump,
    multi_jump,
)
from adaptcc.graph import (
    Graph,
    GraphFormatError,
    GraphStats,
    compute_stats,
    erdos_renyi,
    generate,
    grid,
    normalize,
    parse_dimacs,
    parse_edge_list,
    parse_matrix_market,
    rmat,
)
from adaptcc.labels import ComponentLabeling, NotStarError, count_components, extract_labels
from adaptcc.oracle import bfs_cc, component_histogram, oracle_cc, partitions_equal

__version__ = "0.1.0"
