from gyrochromatic.gyro.bounds import compute_bounds, gyro_lower_bound, gyro_upper_bound
from gyrochromatic.gyro.constructions import (
    base_from_circular_coloring,
    base_from_independent_set,
    compose_with_homomorphism,
    crt_inflate,
    expand_modulus,
    extend_group,
    kneser_characteristic_hom,
    lift_base_to_product,
    pullback_to_cyclic_power,
)
from gyrochromatic.gyro.models import BaseCertificate, BoundsReport, VerificationReport
from gyrochromatic.gyro.search import clique_lemma_ceiling, density_ceiling, sigma_group_exact
from gyrochromatic.gyro.verify import verify_base

__all__ = [
    "BaseCertificate",
    "BoundsReport",
    "VerificationReport",
    "base_from_circular_coloring",
    "base_from_independent_set",
    "clique_lemma_ceiling",
    "compose_with_homomorphism",
    "compute_bounds",
    "crt_inflate",
    "density_ceiling",
    "expand_modulus",
    "extend_group",
    "gyro_lower_bound",
    "gyro_upper_bound",
    "kneser_characteristic_hom",
    "lift_base_to_product",
    "pullback_to_cyclic_power",
    "sigma_group_exact",
    "verify_base",
]
