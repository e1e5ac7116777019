"""Identity checks and the suite builders that assemble them into a pipeline."""

from .operation import OperationCheck
from .pipeline_builders import (
    STAGE_BUILDERS,
    add_bi_relations_stage,
    add_casimirs_stage,
    add_ladder_stage,
    add_monogenics_stage,
    add_osp_stage,
    add_scalar_stage,
    build_verification_pipeline,
    make_check,
)

__all__ = [
    "STAGE_BUILDERS",
    "OperationCheck",
    "add_bi_relations_stage",
    "add_casimirs_stage",
    "add_ladder_stage",
    "add_monogenics_stage",
    "add_osp_stage",
    "add_scalar_stage",
    "build_verification_pipeline",
    "make_check",
]
