"""
Gyrochromatic bounds

Includes:
- gyro_upper_bound: best certificate over seeds and Z_2 .. Z_Nmax (plus extra groups)
- gyro_lower_bound: max of chi_f, the clique lemma and the product trick
- compute_bounds: everything assembled into a BoundsReport
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from mylogger import Logger

from gyrochromatic import settings
from gyrochromatic.exceptions import ValidationError
from gyrochromatic.graphs.models import AbelianGroup, Graph
from gyrochromatic.graphs.operations import cartesian, components, induced_subgraph
from gyrochromatic.gyro.constructions import base_from_circular_coloring, base_from_independent_set
from gyrochromatic.gyro.models import BaseCertificate, BoundsReport
from gyrochromatic.gyro.search import clique_lemma_ceiling, sigma_group_exact
from gyrochromatic.gyro.verify import verify_base
from gyrochromatic.invariants import (
    chromatic_number,
    circular_chromatic,
    fractional_chromatic,
    independence_number,
)

logger = Logger()


def _as_group(spec) -> AbelianGroup:
    return spec if isinstance(spec, AbelianGroup) else AbelianGroup.parse(spec)


# ----------------------- UPPER BOUND -----------------------

@logger.log_execution(level="DEBUG")
def gyro_upper_bound(g: Graph, nmax: Optional[int] = None, extra_groups: Iterable = (),
                     budget: Optional[int] = None, threads: Optional[int] = None,
                     seeds: Iterable[BaseCertificate] = ()) -> tuple[Fraction, BaseCertificate, bool]:
    """
    (1/density, certificate, exact) for the densest base found.

    The circular-coloring seed keeps the result at most chi_c(G); a Cayley
    graph also gets the independent-set seed. exact is False when any
    group search stopped on its budget.
    """
    nmax = settings.NMAX if nmax is None else nmax
    if nmax < 2:
        raise ValidationError(f"Nmax must be at least 2, got {nmax}")
    if not g.edge_count:
        group = AbelianGroup((2,))
        cert = BaseCertificate(group, group.elements, (group.zero,) * g.n, graph_label=g.label)
        return Fraction(1), cert, True

    candidates = []
    value, hom = circular_chromatic(g)
    candidates.append(("circular", base_from_circular_coloring(g, value.numerator, value.denominator, hom)))
    if g.cayley is not None:
        candidates.append(("independent-set", base_from_independent_set(g, independence_number(g)[1])))
    for seed in seeds:
        report = verify_base(g, seed)
        if report.valid:
            candidates.append(("seed", seed))
        else:
            logger.warning(f"ignoring invalid seed certificate: {report.message}")

    source, best = candidates[0]
    for name, cert in candidates[1:]:
        if cert.density > best.density:
            source, best = name, cert

    exact = True
    groups = [AbelianGroup((modulus,)) for modulus in range(2, nmax + 1)]
    groups.extend(_as_group(spec) for spec in extra_groups)
    for group in groups:
        density, cert, complete = sigma_group_exact(g, group, budget=budget, threads=threads)
        exact = exact and complete
        if cert is not None and density > best.density:
            source, best = f"Z_{group}", cert

    logger.info(f"gyro upper bound for {g}: {1 / best.density} from {source}")
    return 1 / best.density, best.relabel(g.label), exact


# ----------------------- LOWER BOUND -----------------------

def _product_operands(g: Graph) -> Optional[tuple]:
    if g.parts is not None:
        return g.parts
    pieces = components(g)
    if len(pieces) < 2:
        return None
    rest = [v for piece in pieces[1:] for v in piece]
    return induced_subgraph(g, pieces[0]), induced_subgraph(g, rest)


def gyro_lower_bound(g: Graph, use_product_trick: bool = True,
                     column_cap: Optional[int] = None) -> tuple[Fraction, str]:
    """ (lower bound on chi_g(G), provenance); earlier provenances win ties """
    best = fractional_chromatic(g, column_cap=column_cap).value
    provenance = "fractional"

    ceiling = clique_lemma_ceiling(g)
    if ceiling is not None and 1 / ceiling > best:
        best, provenance = 1 / ceiling, "clique-lemma"

    if use_product_trick:
        operands = _product_operands(g)
        if operands is not None:
            product = cartesian(*operands)
            with logger.timer(f"chi_f of {product}"):
                value = fractional_chromatic(product, column_cap=column_cap).value
            if value > best:
                best, provenance = value, "product-trick"

    logger.info(f"gyro lower bound for {g}: {best} ({provenance})")
    return best, provenance


# ----------------------- REPORT -----------------------

def compute_bounds(g: Graph, nmax: Optional[int] = None, extra_groups: Iterable = (),
                   budget: Optional[int] = None, threads: Optional[int] = None,
                   seeds: Iterable[BaseCertificate] = (), use_product_trick: bool = True,
                   column_cap: Optional[int] = None) -> BoundsReport:
    chi_f = fractional_chromatic(g, column_cap=column_cap).value
    chi_c, _ = circular_chromatic(g)
    chi, _ = chromatic_number(g)
    lower, provenance = gyro_lower_bound(g, use_product_trick=use_product_trick, column_cap=column_cap)
    upper, cert, exact = gyro_upper_bound(g, nmax=nmax, extra_groups=extra_groups, budget=budget,
                                          threads=threads, seeds=seeds)
    return BoundsReport(
        graph_label=g.label,
        n=g.n,
        chi_f=chi_f,
        chi_c=chi_c,
        chi=chi,
        gyro_lower=lower,
        lower_provenance=provenance,
        gyro_upper=upper,
        upper_certificate=cert,
        exact={"chi_f": True, "chi_c": True, "chi": True, "gyro_lower": True, "gyro_upper": exact},
    )
