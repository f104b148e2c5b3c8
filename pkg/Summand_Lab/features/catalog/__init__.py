"""Named examples feature package"""
from .examples import (
    COX_VARIABLES,
    PIC_ROW_NAMES,
    EXAMPLE_BUILDERS,
    NamedExample,
    build_named_example,
    cox_pic_grading,
    example_keys,
    xnd_map,
)
from .weyl import (
    WeylChain,
    WeylRelation,
    quadric_rank,
    quadric_ring,
    verify_weyl_relation,
    weyl_chain,
    weyl_map,
    weyl_target,
)

__all__ = [
    "COX_VARIABLES",
    "PIC_ROW_NAMES",
    "EXAMPLE_BUILDERS",
    "NamedExample",
    "WeylChain",
    "WeylRelation",
    "build_named_example",
    "cox_pic_grading",
    "example_keys",
    "quadric_rank",
    "quadric_ring",
    "verify_weyl_relation",
    "weyl_chain",
    "weyl_map",
    "weyl_target",
    "xnd_map",
]
