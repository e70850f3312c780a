"""
Models for the cli app

Includes:
- RunConfig: one validated command invocation (flags fall back to settings)
- Criterion / CriterionResult: reproduce-suite entries and their outcomes
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from gyrochromatic import settings
from gyrochromatic.exceptions import ValidationError

COMMANDS = ("gen", "invariants", "bounds", "search", "verify", "reproduce")
FORMATS = ("table", "json")


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph: Optional[str] = None
    groups: tuple = ()
    nmax: int = field(default_factory=lambda: settings.NMAX)
    budget: int = field(default_factory=lambda: settings.BUDGET)
    threads: int = field(default_factory=lambda: settings.THREADS)
    format: str = "table"
    out: Optional[str] = None
    seed: int = field(default_factory=lambda: settings.SEED)
    skip_slow: bool = False
    certificate: Optional[str] = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ValidationError(f"unknown command {self.command!r}, expected one of {', '.join(COMMANDS)}")
        if self.format not in FORMATS:
            raise ValidationError(f"unknown format {self.format!r}, expected table or json", location="--format")
        if self.budget < 1:
            raise ValidationError(f"budget must be at least 1, got {self.budget}", location="--budget")
        if self.threads < 1:
            raise ValidationError(f"threads must be at least 1, got {self.threads}", location="--threads")
        if self.nmax < 2:
            raise ValidationError(f"nmax must be at least 2, got {self.nmax}", location="--nmax")
        if self.command in ("gen", "invariants", "bounds", "search", "verify") and not self.graph:
            raise ValidationError(f"{self.command} needs --graph", location="--graph")
        if self.command == "search" and not self.groups:
            raise ValidationError("search needs --group", location="--group")
        if self.command == "verify" and not self.certificate:
            raise ValidationError("verify needs a certificate file")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        values = {"command": args.command}
        for name in ("graph", "nmax", "budget", "threads", "format", "out", "seed", "certificate"):
            value = getattr(args, name, None)
            if value is not None:
                values[name] = value
        values["groups"] = tuple(getattr(args, "group", None) or ())
        values["skip_slow"] = bool(getattr(args, "skip_slow", False))
        return cls(**values)


@dataclass(frozen=True)
class Criterion:
    """ One reproduce check: compute() must return exactly `expected` """
    name: str
    description: str
    expected: object
    compute: Callable
    slow: bool = False


@dataclass(frozen=True)
class CriterionResult:
    name: str
    expected: object
    computed: object
    status: str  # PASS / FAIL / ERROR / SKIP
    duration_ms: float = 0.0

    @property
    def failed(self) -> bool:
        return self.status in ("FAIL", "ERROR")
