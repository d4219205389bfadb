"""Pipeline configuration.

A config file is JSON with the same field names as PipelineConfig; CLI
flags override file values.  toy_mode disables feature filters and
frequency damping and uses uniform word weights, so small worked examples
come out exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, fields

from .text import Mode, Pos

DEFAULT_POS_WEIGHTS = {"N": 1.0, "V": 0.6, "A": 0.8, "O": 0.0}


@dataclass
class PipelineConfig:
    epsilon: float = 0.01
    max_iterations: int = 10  # convergence is typically reached in ~3
    window: int = 0
    min_feature_count: int = 2
    weight_threshold: float = 0.01  # fraction of the max factor product
    high_freq_cutoff: float = 0.5  # fraction of max5
    freq_damping_constant: float = 100.0
    pos_weights: dict[str, float] = field(default_factory=lambda: dict(DEFAULT_POS_WEIGHTS))
    toy_mode: bool = False
    mode: str = "tagged"  # corpus tokenization: "tagged" | "plain"

    def __post_init__(self):
        if self.window not in (0, 1):
            raise ValueError("window must be 0 or 1")
        for name in ("epsilon", "weight_threshold", "high_freq_cutoff", "freq_damping_constant"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.mode not in ("tagged", "plain"):
            raise ValueError("mode must be 'tagged' or 'plain'")

    def tokenize_mode(self) -> Mode:
        return Mode.TAGGED if self.mode == "tagged" else Mode.PLAIN

    def pos_factor_weights(self) -> dict[Pos, float]:
        return {Pos(tag): value for tag, value in self.pos_weights.items()}

    def to_dict(self) -> dict:
        return {
            "epsilon": self.epsilon,
            "max_iterations": self.max_iterations,
            "window": self.window,
            "min_feature_count": self.min_feature_count,
            "weight_threshold": self.weight_threshold,
            "high_freq_cutoff": self.high_freq_cutoff,
            "freq_damping_constant": self.freq_damping_constant,
            "pos_weights": dict(self.pos_weights),
            "toy_mode": self.toy_mode,
            "mode": self.mode,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "PipelineConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown config fields: {sorted(unknown)}")
        return cls(**data)

    @classmethod
    def load(cls, path: str, overrides: dict | None = None) -> "PipelineConfig":
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
        if overrides:
            data.update(overrides)
        return cls.from_dict(data)
