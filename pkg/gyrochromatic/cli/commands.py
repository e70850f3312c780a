"""
Command implementations

Every command takes a RunConfig and returns (exit code, data); data is the
JSON document of the run and the table output is rendered from it.

Includes:
- cmd_gen: graph as edge list / JSON
- cmd_invariants: alpha, omega, chi, chi_f, chi_c with witnesses
- cmd_bounds: chi_f <= [gyro_lower, gyro_upper] <= chi_c, certificate written to disk, full report in the JSON
- cmd_search: best base for a single group
- cmd_verify: check a BaseCertificate or ContinuousGyrocoloring file (arcs for plotting included)
"""

from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from mylogger import Logger

from gyrochromatic import settings
from gyrochromatic.certs import (
    BoundsSerializer,
    CertificateSerializer,
    ContinuousGyrocoloring,
    GraphSerializer,
    WitnessSerializer,
    builtin_seeds,
    gyrocoloring_plot_data,
    parse_certificate_or_coloring,
    verify_gyrocoloring,
)
from gyrochromatic.cli.models import RunConfig
from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs import AbelianGroup, resolve_graph, write_edge_list
from gyrochromatic.gyro import compute_bounds, sigma_group_exact, verify_base
from gyrochromatic.invariants import (
    chromatic_number,
    circular_chromatic,
    fractional_chromatic,
    independence_number,
    maximum_clique,
)

logger = Logger()

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def rational_text(value) -> str:
    value = Fraction(value)
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _slug(label: str) -> str:
    return re.sub(r"[^A-Za-z0-9]+", "_", label).strip("_") or "graph"


def cmd_gen(config: RunConfig):
    g = resolve_graph(config.graph)
    if config.format == "table":
        return EXIT_OK, {"edge_list": write_edge_list(g)}
    return EXIT_OK, GraphSerializer().to_representation(g)


@logger.log_execution(level="DEBUG")
def cmd_invariants(config: RunConfig):
    g = resolve_graph(config.graph)
    alpha, independent = independence_number(g)
    clique = maximum_clique(g)
    chi, coloring = chromatic_number(g)
    witness = fractional_chromatic(g)
    chi_c, hom = circular_chromatic(g)
    data = {
        "graph": g.label,
        "n": g.n,
        "m": g.edge_count,
        "alpha": alpha,
        "omega": len(clique),
        "chi": chi,
        "chi_f": rational_text(witness.value),
        "chi_c": rational_text(chi_c),
        "witnesses": {
            "independent_set": independent,
            "clique": clique,
            "coloring": coloring,
            "fractional": WitnessSerializer().to_representation(witness),
            "circular": {"p": chi_c.numerator, "q": chi_c.denominator, "homomorphism": hom},
        },
    }
    return EXIT_OK, data


@logger.log_execution(level="DEBUG")
def cmd_bounds(config: RunConfig):
    g = resolve_graph(config.graph)
    report = compute_bounds(
        g,
        nmax=config.nmax,
        extra_groups=config.groups,
        budget=config.budget,
        threads=config.threads,
        seeds=builtin_seeds(g),
    )
    settings.CERT_DIR.mkdir(parents=True, exist_ok=True)
    path = settings.CERT_DIR / f"{_slug(g.label)}.json"
    path.write_text(CertificateSerializer().serialize(report.upper_certificate) + "\n")
    logger.info(f"certificate written to {path}")
    if not report.is_exact:
        logger.warning("a group search ran out of budget; the upper bound may not be the best over these groups")
    data = {
        "graph": g.label,
        "n": g.n,
        "chi_f": rational_text(report.chi_f),
        "gyro_lower": rational_text(report.gyro_lower),
        "lower_provenance": report.lower_provenance,
        "gyro_upper": rational_text(report.gyro_upper),
        "chi_c": rational_text(report.chi_c),
        "chi": report.chi,
        "exact": dict(report.exact),
        "certificate_path": str(path),
        "report": BoundsSerializer().to_representation(report),
    }
    return (EXIT_OK if report.is_exact else EXIT_BUDGET), data


@logger.log_execution(level="DEBUG")
def cmd_search(config: RunConfig):
    g = resolve_graph(config.graph)
    group = AbelianGroup.parse(config.groups[0])
    density, cert, exact = sigma_group_exact(g, group, budget=config.budget, threads=config.threads)
    data = {
        "graph": g.label,
        "group": str(group),
        "sigma": rational_text(density),
        "exact": exact,
        "certificate": CertificateSerializer().to_representation(cert) if cert is not None else None,
    }
    if cert is not None and config.out:
        Path(config.out).write_text(CertificateSerializer().serialize(cert) + "\n")
        logger.info(f"certificate written to {config.out}")
    return (EXIT_OK if exact else EXIT_BUDGET), data


def cmd_verify(config: RunConfig):
    g = resolve_graph(config.graph)
    try:
        text = Path(config.certificate).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read certificate: {exc.strerror}", location=config.certificate)
    cert = parse_certificate_or_coloring(text)
    if isinstance(cert, ContinuousGyrocoloring):
        report = verify_gyrocoloring(g, cert)
    else:
        report = verify_base(g, cert)
    data = {
        "graph": g.label,
        "valid": report.valid,
        "density": rational_text(report.density),
        "edge": list(report.edge) if report.edge else None,
        "element": list(report.element) if report.element else None,
    }
    if isinstance(cert, ContinuousGyrocoloring):
        data["plot"] = gyrocoloring_plot_data(cert)
    if not report.valid:
        logger.error(f"invalid certificate for {g}: {report.message}")
        return EXIT_INVALID, data
    logger.info(report.message)
    return EXIT_OK, data
