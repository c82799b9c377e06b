"""Scale-free degree sequences, Havel–Hakimi graphs and clustering scaling."""

from .builder import PairingOutcome, RealizationError, configuration_pairing, havel_hakimi
from .degree_model import (
    DegreeDistribution,
    DegreeSequence,
    make_rng,
    mean_degree,
    replica_rng,
    sample_degree,
    sample_sequence,
)
from .experiments import (
    ScalingConfig,
    ScalingReport,
    edge_bound_fraction,
    fit_loglog_slope,
    graphic_fraction,
    run_scaling,
    simplicity_fraction,
)
from .graph import SimpleGraph
from .graphical import GraphicVerdict, erdos_gallai_check
from .metrics import (
    GraphMetrics,
    average_local_clustering,
    compute_metrics,
    count_triangles,
    count_triangles_brute,
    count_wedges,
    degree_h_index,
    global_clustering,
)

__version__ = "0.1.0"
