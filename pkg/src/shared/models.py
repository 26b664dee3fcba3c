from pydantic import BaseModel, ConfigDict


class FrozenModel(BaseModel):
    """Immutable value object; hashable and safe to share across workers."""

    model_config = ConfigDict(frozen=True)


class ReportModel(BaseModel):
    """Serializable report; unknown keys are rejected so JSON round-trips exactly."""

    model_config = ConfigDict(extra="forbid")
