"""Pipeline builder for verification runs."""

from .base import VerificationCheck
from .pipeline import VerificationPipeline
from .stage import SuiteStage


class VerificationPipelineBuilder:
    """Builder for constructing verification pipelines stage by stage."""

    def __init__(self, jobs: int = 1):
        """Initialize the builder.

        Args:
            jobs: Default worker count for stages created by ``add_stage``
        """
        self.jobs = jobs
        self.stages: list[SuiteStage] = []
        self._stages_by_name: dict[str, SuiteStage] = {}

    def add_stage(self, name: str, description: str, jobs: int | None = None, fail_fast: bool = False) -> SuiteStage:
        """Add a new stage and return it for chaining.

        Raises:
            ValueError: If a stage with this name already exists
        """
        if name in self._stages_by_name:
            raise ValueError(f"Stage '{name}' already exists")
        stage = SuiteStage(name, description, jobs=jobs or self.jobs, fail_fast=fail_fast)
        self.stages.append(stage)
        self._stages_by_name[name] = stage
        return stage

    def get_stage(self, name: str) -> SuiteStage | None:
        return self._stages_by_name.get(name)

    def add_check_to_stage(self, stage_name: str, check: VerificationCheck) -> VerificationPipelineBuilder:
        """Add a check to an existing stage.

        Raises:
            ValueError: If the stage does not exist
        """
        stage = self.get_stage(stage_name)
        if not stage:
            raise ValueError(f"Stage '{stage_name}' not found")
        stage.add_check(check)
        return self

    def build(self) -> VerificationPipeline:
        return VerificationPipeline(self.stages)

    def __str__(self) -> str:
        return f"VerificationPipelineBuilder(stages={len(self.stages)})"
