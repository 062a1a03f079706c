"""Run configurations for batch sweeps and synthetic corpora."""

from __future__ import annotations

import os
from dataclasses import dataclass

REPORT_FORMATS = ("csv", "json")


@dataclass(frozen=True)
class BatchConfig:
    jobs: int | None = None  # None means one worker per core
    report_format: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if self.report_format not in REPORT_FORMATS:
            raise ValueError(f"report_format must be one of {REPORT_FORMATS}")
        if self.jobs is not None and self.jobs < 1:
            raise ValueError("jobs must be positive")

    @property
    def workers(self) -> int:
        return self.jobs or os.cpu_count() or 1


@dataclass(frozen=True)
class CorpusConfig:
    limit: int = 1000
    # consecutive non-reflexive steps allowed while descending
    bridge: int = 2
    seed: int = 0
    shuffle_coords: bool = False

    def __post_init__(self):
        if self.limit < 1 or self.bridge < 0:
            raise ValueError("limit must be positive and bridge non-negative")
