"""
gyrochromatic: exact coloring-base densities sigma_Z(G), fractional, circular
and ordinary chromatic numbers, with machine-checkable certificates
"""

__version__ = "0.1.0"

from gyrochromatic import settings  # noqa: F401  must load before any module creates its logger
