"""Run configuration: defaults, an optional JSON config file, then flag overrides."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

from .garside import DEFAULT_SSS_CAP
from .loop_tracer import Tolerances, TraceOptions


@dataclass(frozen=True)
class RunConfig:
    eps_sep: float = 1e-9
    eps_rank: float = 1e-9
    eps_close: float = 1e-9
    direction: float = 0.0
    max_depth: int = 32
    sss_cap: int = DEFAULT_SSS_CAP
    output_format: str = "text"

    def __post_init__(self):
        for name in ("eps_sep", "eps_rank", "eps_close"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
        if self.max_depth < 1:
            raise ValueError("max_depth must be at least 1")
        if self.sss_cap < 1:
            raise ValueError("sss_cap must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ValueError(f"output_format must be 'text' or 'json', got {self.output_format!r}")

    @classmethod
    def load(cls, path: str | Path | None = None, **overrides) -> "RunConfig":
        values = {}
        if path is not None:
            doc = json.loads(Path(path).read_text())
            known = {f.name for f in fields(cls)}
            unknown = set(doc) - known
            if unknown:
                raise ValueError(f"unknown config keys: {sorted(unknown)}")
            values.update(doc)
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)

    def with_tolerances(self, **tolerances) -> "RunConfig":
        return replace(self, **tolerances)

    def tolerances(self) -> Tolerances:
        return Tolerances(self.eps_sep, self.eps_rank, self.eps_close)

    def trace_options(self) -> TraceOptions:
        return TraceOptions(self.tolerances(), reference=self.direction, max_depth=self.max_depth)

    def as_dict(self) -> dict:
        return asdict(self)
