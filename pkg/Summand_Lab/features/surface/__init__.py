"""Surface singularity analysis feature package"""
from .ade import ADEType, classify_local
from .singular import (
    SingularLocus,
    local_milnor,
    local_milnor_truncated,
    point_milnor,
    projective_singular_points,
)
from .verdict import (
    CUBIC_CONFIGURATIONS,
    Configuration,
    SingularPointReport,
    SurfaceVerdict,
    ade_classify,
    cubic_verdict,
    del_pezzo_milnor_rule,
    singularity_configuration,
)

__all__ = [
    "ADEType",
    "CUBIC_CONFIGURATIONS",
    "Configuration",
    "SingularLocus",
    "SingularPointReport",
    "SurfaceVerdict",
    "ade_classify",
    "classify_local",
    "cubic_verdict",
    "del_pezzo_milnor_rule",
    "local_milnor",
    "local_milnor_truncated",
    "point_milnor",
    "projective_singular_points",
    "singularity_configuration",
]
