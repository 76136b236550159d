"""Output schemas of the command surface.

Every JSON document printed by ``run.py`` is a dump of one of these models, so
``Model.model_json_schema()`` is the published schema.
"""
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator


class Failure(BaseModel):
    """One counterexample found by a verification suite."""
    input: str
    expected: str
    actual: str


class VerificationReport(BaseModel):
    suite: str
    n: int
    checked: int = 0
    failures: List[Failure] = Field(default_factory=list)
    failed: int = 0
    millis: float = 0.0

    @computed_field
    @property
    def passed(self) -> bool:
        return self.failed == 0 and not self.failures


class TraceEvent(BaseModel):
    iteration: int
    step: str
    swap: Tuple[int, int]
    state: str


class MapResult(BaseModel):
    kind: str
    inverse: bool = False
    input: str
    one_line: str
    cycles: str
    marked_position: Optional[int] = None
    trace: Optional[List[TraceEvent]] = None


class TableRow(BaseModel):
    cycle: str
    one_line: str
    image: str
    descent_set: List[int]


class TableReport(BaseModel):
    n: int
    rows: List[TableRow]


class CountResult(BaseModel):
    n: int
    subset: List[int]
    mode: str
    value: int


class DistributionRow(BaseModel):
    descent_set: List[int]
    count: int


class DistributionReport(BaseModel):
    n: int
    source: str
    total: int
    rows: List[DistributionRow]


class TransferResult(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    input: str
    source: List[int] = Field(alias='from')
    target: List[int] = Field(alias='to')
    image: str
    cycles: str
    necklaces: Optional[str] = None


class CliConfig(BaseModel):
    """Validated parameters of one CLI invocation."""
    command: str
    output_format: str = 'text'
    trace: bool = False
    jobs: int = 1
    profile: str = 'standard'
    n: Optional[int] = None
    subset: Optional[str] = None
    kind: Optional[str] = None
    suite: Optional[str] = None

    @field_validator('output_format')
    @classmethod
    def _known_format(cls, value):
        if value not in ('text', 'json', 'csv'):
            raise ValueError(f"unknown output format {value!r}")
        return value

    @field_validator('jobs')
    @classmethod
    def _positive_jobs(cls, value):
        if value < 1:
            raise ValueError("jobs must be at least 1")
        return value

    @field_validator('n')
    @classmethod
    def _positive_n(cls, value):
        if value is not None and value < 1:
            raise ValueError("n must be positive")
        return value
