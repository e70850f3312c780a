"""
Models for the gyro app

Includes:
- BaseCertificate: coloring Z-base (A, f) over a finite abelian group
- VerificationReport: outcome of verify_base, with the first collision if any
- BoundsReport: chi_f <= [gyro_lower, gyro_upper] <= chi_c together with chi
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Optional

from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.models import AbelianGroup, list_to_bits


@dataclass(frozen=True)
class BaseCertificate:
    """ A subset A of Z and a vertex map f; validity is checked by verify_base, never assumed """
    group: AbelianGroup
    A: tuple
    f: tuple
    graph_label: str = field(default="", compare=False)

    def __post_init__(self):
        elements = [self.group.validate(x) for x in self.A]
        if not elements:
            raise ValidationError("base set A must be nonempty", location="A")
        if len(set(elements)) != len(elements):
            raise ValidationError("base set A contains repeated elements", location="A")
        object.__setattr__(self, "A", tuple(sorted(elements)))
        object.__setattr__(self, "f", tuple(self.group.validate(x) for x in self.f))

    def __str__(self):
        return f"base |A|={len(self.A)} over Z_{self.group} (density {self.density})"

    @property
    def density(self) -> Fraction:
        return Fraction(len(self.A), self.group.order)

    @cached_property
    def a_mask(self) -> int:
        return list_to_bits(self.group.index(x) for x in self.A)

    @cached_property
    def f_indices(self) -> tuple:
        return tuple(self.group.index(x) for x in self.f)

    def relabel(self, label: str) -> "BaseCertificate":
        return BaseCertificate(self.group, self.A, self.f, graph_label=label)


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    density: Fraction
    edge: Optional[tuple] = None
    element: Optional[tuple] = None

    def __bool__(self):
        return self.valid

    @property
    def message(self) -> str:
        if self.valid:
            return f"valid base, density {self.density}"
        u, v = self.edge
        return f"translates of A by f({u}) and f({v}) share {self.element}"


@dataclass(frozen=True)
class BoundsReport:
    """
    Everything `bounds` prints. exact maps field name to whether the value is
    the true invariant (False when a search budget ran out before finishing).
    """
    graph_label: str
    n: int
    chi_f: Fraction
    chi_c: Fraction
    chi: int
    gyro_lower: Fraction
    lower_provenance: str
    gyro_upper: Fraction
    upper_certificate: BaseCertificate
    exact: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.gyro_lower > self.gyro_upper:
            raise ValidationError(f"lower bound {self.gyro_lower} exceeds upper bound {self.gyro_upper}")

    @property
    def is_exact(self) -> bool:
        return all(self.exact.values())
