"""
Models for the certs app

Includes:
- ContinuousGyrocoloring: rational z-gyrocoloring (one base of half-open arcs plus one shift per vertex)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from gyrochromatic.exceptions import ValidationError


def rational(value, location: str = None) -> Fraction:
    """ Exact rational from int / Fraction / "p/q"; floats are rejected """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValidationError(f"expected an exact rational, got {value!r}", location=location)
    try:
        return Fraction(value)
    except (TypeError, ValueError):
        raise ValidationError(f"expected an exact rational, got {value!r}", location=location)


@dataclass(frozen=True)
class ContinuousGyrocoloring:
    """
    g(v) = base + shifts[v] on the circle [0, z).

    Intervals are sorted and touching ones merged; overlapping intervals are
    rejected. A total base length of 1 is required where the coloring is used
    (discretize), not on construction.
    """
    z: Fraction
    base: tuple
    shifts: tuple

    def __post_init__(self):
        z = rational(self.z, "z")
        if z <= 0:
            raise ValidationError(f"circumference must be positive, got {z}", location="z")
        intervals = []
        for i, pair in enumerate(self.base):
            a, b = (rational(x, f"base[{i}]") for x in pair)
            if not 0 <= a < b <= z:
                raise ValidationError(f"interval [{a}, {b}) is empty or outside [0, {z})", location=f"base[{i}]")
            intervals.append((a, b))
        intervals.sort()
        merged = []
        for a, b in intervals:
            if merged and a < merged[-1][1]:
                raise ValidationError(f"interval [{a}, {b}) overlaps [{merged[-1][0]}, {merged[-1][1]})", location="base")
            if merged and a == merged[-1][1]:
                merged[-1] = (merged[-1][0], b)
            else:
                merged.append((a, b))
        shifts = tuple(rational(s, f"shifts[{v}]") for v, s in enumerate(self.shifts))
        for v, s in enumerate(shifts):
            if not 0 <= s < z:
                raise ValidationError(f"shift {s} outside [0, {z})", location=f"shifts[{v}]")
        object.__setattr__(self, "z", z)
        object.__setattr__(self, "base", tuple(merged))
        object.__setattr__(self, "shifts", shifts)

    @property
    def length(self) -> Fraction:
        return sum((b - a for a, b in self.base), Fraction(0))

    def arcs(self, v: int) -> list:
        """ g(v) as half-open arcs [start, end) inside [0, z), split at the origin """
        shift = self.shifts[v]
        out = []
        for a, b in self.base:
            start, end = a + shift, b + shift
            if end <= self.z:
                out.append((start, end))
            elif start >= self.z:
                out.append((start - self.z, end - self.z))
            else:
                out.append((start, self.z))
                out.append((Fraction(0), end - self.z))
        return sorted(out)
