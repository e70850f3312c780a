from gyrochromatic.certs.builtins import (
    builtin_seeds,
    figure1_certificate,
    figure1_graph,
    prop62_certificate,
)
from gyrochromatic.certs.conversions import (
    continuous_from_base,
    discretize,
    gyrocoloring_plot_data,
    verify_gyrocoloring,
)
from gyrochromatic.certs.linalg import bareiss_determinant, lemma63_matrix, lemma63_matrix_check
from gyrochromatic.certs.models import ContinuousGyrocoloring
from gyrochromatic.certs.serializers import (
    BoundsSerializer,
    CertificateSerializer,
    GraphSerializer,
    GyrocoloringSerializer,
    RationalSerializer,
    WitnessSerializer,
    parse_certificate_or_coloring,
)

__all__ = [
    "BoundsSerializer",
    "CertificateSerializer",
    "ContinuousGyrocoloring",
    "GraphSerializer",
    "GyrocoloringSerializer",
    "RationalSerializer",
    "WitnessSerializer",
    "bareiss_determinant",
    "builtin_seeds",
    "continuous_from_base",
    "discretize",
    "figure1_certificate",
    "figure1_graph",
    "gyrocoloring_plot_data",
    "lemma63_matrix",
    "lemma63_matrix_check",
    "parse_certificate_or_coloring",
    "prop62_certificate",
    "verify_gyrocoloring",
]
