from pathlib import Path
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..config import settings
from ..core.function_library import FunctionSpec, parse_spec


class ScanConfig(BaseModel):
    """Validated settings for a grid scan."""
    model_config = ConfigDict(frozen=True)

    n: int = Field(..., ge=1, le=settings.MAX_CLI_N, description="Operator degree")
    function: str = Field(..., description="Function spec text, e.g. e2 or abs:1/2")
    grid: int = Field(default=settings.DEFAULT_GRID, ge=1, description="Grid points x, y in {0, 1/G, ..., 1}")
    mode: Literal["exact", "float"] = "exact"
    seed: int = Field(default=settings.DEFAULT_SEED, ge=0)
    output_format: Literal["json", "csv", "text"] = "text"
    out: Optional[Path] = None
    workers: int = Field(default=settings.SCAN_WORKERS, ge=1)
    record_timing: bool = False

    @field_validator("function")
    @classmethod
    def _parse_function(cls, value: str) -> str:
        # Store the canonical form; SpecParseError is a ValueError, so pydantic reports it
        return parse_spec(value).text

    @model_validator(mode="after")
    def _exact_needs_rational_function(self) -> "ScanConfig":
        if self.mode == "exact" and self.spec.float_only:
            raise ValueError(f"function '{self.function}' is float-only; use --mode float")
        if self.out is not None and self.output_format == "text":
            raise ValueError("--out needs --format json or csv")
        return self

    @property
    def spec(self) -> FunctionSpec:
        return parse_spec(self.function)

    @property
    def exact(self) -> bool:
        return self.mode == "exact"
