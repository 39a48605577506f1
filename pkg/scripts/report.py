"""
Report writers. Every document carries the tool version, the basis convention and
the run configuration; field order is fixed so equal configs give identical bytes.
"""
from pydantic import BaseModel, Field, model_validator
from typing   import Literal

import io
import json
import os
import sys

import pandas as pd

from config.setup import BASIS_CONVENTION, LOGGER, TOOL_VERSION

TABLE_COLUMNS = ["family", "rank", "degree", "kernel_dim", "span_rank", "generator_count"]
THEOREM_COLUMNS = TABLE_COLUMNS + ["agreement"]
IDENTITY_COLUMNS = ["name", "algebra", "passed", "max_abs_defect", "normalization_scalar"]


class RunConfig(BaseModel):
    algebras: list[str] = Field(description="Algebra labels in run order, e.g. ['A1', 'B2']")
    degree_min: int = Field(default=1, description="Lowest tensor degree")
    degree_max: int = Field(default=3, description="Highest tensor degree")
    primes: list[int] = Field(description="Primes for modular ranks")
    budgets: dict[str, int] = Field(description="Size caps in force")
    include_epsilon_chains: bool = Field(default=True, description="Enumerate D_r epsilon chains")
    representation: str = Field(default="defining", description="Representation for trace generators")
    output_format: Literal["json", "csv", "text"] = Field(default="json", description="Report format")
    out: str | None = Field(default=None, description="Output path; stdout when absent")
    seed: int | None = Field(default=None, description="Seed for sampled self-tests")

    @model_validator(mode="after")
    def _check_ranges(self):
        if not self.algebras:
            raise ValueError("at least one algebra is required")
        if self.degree_min < 1 or self.degree_min > self.degree_max:
            raise ValueError(f"degree range {self.degree_min}..{self.degree_max} is empty")
        if any(value <= 0 for value in self.budgets.values()):
            raise ValueError("budgets must be positive")
        return self

    @property
    def degrees(self) -> range:
        return range(self.degree_min, self.degree_max + 1)

    def embedded(self) -> dict:
        """The part of the config recorded in reports; the output path is left out."""
        return self.model_dump(exclude={"out", "output_format"})


def report_document(config: RunConfig, results: list[dict]) -> dict:
    return {
        "tool_version": TOOL_VERSION,
        "basis_convention": BASIS_CONVENTION,
        "config": config.embedded(),
        "results": results,
    }


def render_json(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def render_csv(rows: list[dict], columns: list[str]) -> str:
    frame = pd.DataFrame(rows, columns=columns)
    buffer = io.StringIO()
    frame.to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def render_text(rows: list[dict], columns: list[str]) -> str:
    if not rows:
        return "(no rows)\n"
    frame = pd.DataFrame(rows, columns=columns)
    return frame.to_string(index=False) + "\n"


def render(config: RunConfig, results: list[dict], columns: list[str]) -> str:
    if config.output_format == "csv":
        return render_csv(results, columns)
    if config.output_format == "text":
        return render_text(results, columns)
    return render_json(report_document(config, results))


def emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    os.makedirs(directory, exist_ok=True)
    with open(out, "w", newline="") as f:
        f.write(text)
    LOGGER.info(f"[SUCCESS] report written to {out}")
