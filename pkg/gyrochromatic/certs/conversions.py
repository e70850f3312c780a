"""
Continuous <-> discrete gyrocolorings

Includes:
- discretize: rational gyrocoloring -> BaseCertificate over Z_L (L = z*D, D the common denominator)
- continuous_from_base: BaseCertificate over Z_N -> gyrocoloring with z = N/|A|
- verify_gyrocoloring: validity through the discretized certificate
- gyrocoloring_plot_data: arcs of every g(v), ready for plotting
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional

from mylogger import Logger

from gyrochromatic.certs.models import ContinuousGyrocoloring
from gyrochromatic.exceptions import InvariantViolation, ValidationError
from gyrochromatic.graphs.models import AbelianGroup, Graph
from gyrochromatic.gyro import BaseCertificate, VerificationReport, verify_base

logger = Logger()


def common_denominator(c: ContinuousGyrocoloring) -> int:
    values = [c.z, *c.shifts, *(x for pair in c.base for x in pair)]
    return math.lcm(*(x.denominator for x in values))


def discretize(c: ContinuousGyrocoloring, scale: Optional[int] = None, label: str = "") -> BaseCertificate:
    """
    Exact discretization on the 1/D grid; `scale` refines D to lcm(D, scale).
    Density of the result is D/L = 1/z.
    """
    if c.length != 1:
        raise ValidationError(f"base must have total length 1, got {c.length}", location="base")
    grid = common_denominator(c)
    if scale is not None:
        grid = math.lcm(grid, scale)
    size = c.z * grid
    if size.denominator != 1:
        raise InvariantViolation(f"z * D = {size} is not an integer")
    group = AbelianGroup((int(size),))
    A = [(x,) for a, b in c.base for x in range(int(a * grid), int(b * grid))]
    f = [(int(s * grid),) for s in c.shifts]
    cert = BaseCertificate(group, A, f, graph_label=label)
    if cert.density != 1 / c.z:
        raise InvariantViolation(f"discretized density {cert.density} differs from 1/z = {1 / c.z}")
    return cert


def continuous_from_base(cert: BaseCertificate) -> ContinuousGyrocoloring:
    """ z = N/|A|; each x in A becomes the cell [x/|A|, (x+1)/|A|), shifts f(v)/|A| """
    if cert.group.rank != 1:
        raise ValidationError(f"expected a cyclic group, got Z_{cert.group}")
    modulus = cert.group.moduli[0]
    size = len(cert.A)
    z = Fraction(modulus, size)
    base = [(Fraction(x, size), Fraction(x + 1, size)) for (x,) in cert.A]
    shifts = [Fraction(s, size) for (s,) in cert.f]
    return ContinuousGyrocoloring(z, tuple(base), tuple(shifts))


def verify_gyrocoloring(g: Graph, c: ContinuousGyrocoloring) -> VerificationReport:
    """ Valid iff g(u) and g(v) are disjoint for every edge uv """
    report = verify_base(g, discretize(c, label=g.label))
    if not report.valid:
        logger.debug(f"{g}: {report.message}")
    return report


def gyrocoloring_plot_data(c: ContinuousGyrocoloring) -> dict:
    """ Plot-ready description: circumference and the arcs of every g(v) as "p/q" strings """
    return {
        "z": str(c.z),
        "vertices": [
            {"vertex": v, "shift": str(c.shifts[v]), "arcs": [[str(a), str(b)] for a, b in c.arcs(v)]}
            for v in range(len(c.shifts))
        ],
    }
