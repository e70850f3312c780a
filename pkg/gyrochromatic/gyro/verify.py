"""
Certificate verification

verify_base is the only place where validity of a coloring Z-base is
decided: every construction and search result goes through it.
"""

from __future__ import annotations

from mylogger import Logger

from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.models import Graph, iter_bits
from gyrochromatic.gyro.models import BaseCertificate, VerificationReport

logger = Logger()


def translate_mask(cert: BaseCertificate, shift: int) -> int:
    """ Bitmask of A + element(shift) """
    row = cert.group.add_table[shift]
    mask = 0
    for a in iter_bits(cert.a_mask):
        mask |= 1 << row[a]
    return mask


def verify_base(g: Graph, cert: BaseCertificate) -> VerificationReport:
    """ Valid iff (A + f(u)) and (A + f(v)) are disjoint for every edge uv """
    if len(cert.f) != g.n:
        raise ValidationError(f"certificate maps {len(cert.f)} vertices but {g} has {g.n}", location="f")
    translates = {}
    for shift in set(cert.f_indices):
        translates[shift] = translate_mask(cert, shift)
    for u, v in g.edges:
        common = translates[cert.f_indices[u]] & translates[cert.f_indices[v]]
        if common:
            element = cert.group.element((common & -common).bit_length() - 1)
            logger.debug(f"edge ({u},{v}) collides at {element}")
            return VerificationReport(False, cert.density, edge=(u, v), element=element)
    return VerificationReport(True, cert.density)
