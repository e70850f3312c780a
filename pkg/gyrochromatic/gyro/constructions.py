"""
Certificate constructions

Includes:
- base_from_independent_set: independent set of a Cayley graph C(Z,S), f = identity
- base_from_circular_coloring: K_{p/q}-coloring as an arc base {0..q-1} of Z_p
- compose_with_homomorphism: pull a base of H back along G -> H
- lift_base_to_product: G -> G □ G with f'(v,v') = f(v) + f(v')
- expand_modulus, crt_inflate: move a base to a larger cyclic group
- pullback_to_cyclic_power, extend_group: change the ambient abelian group
- kneser_characteristic_hom: K(n,k) -> C(Z_2^n, weight-2k vectors)

Every construction checks its input and its output with verify_base.
"""

from __future__ import annotations

import itertools
import math

from mylogger import Logger

from gyrochromatic.exceptions import InvariantViolation, ValidationError
from gyrochromatic.graphs.generators import circular_clique, hamming_cayley, kneser
from gyrochromatic.graphs.homomorphism import is_homomorphism
from gyrochromatic.graphs.models import AbelianGroup, Graph
from gyrochromatic.graphs.operations import cartesian
from gyrochromatic.gyro.models import BaseCertificate
from gyrochromatic.gyro.verify import verify_base
from gyrochromatic.invariants import is_independent

logger = Logger()


def _require_valid(g: Graph, cert: BaseCertificate):
    report = verify_base(g, cert)
    if not report.valid:
        raise ValidationError(f"certificate is not a valid base for {g}: {report.message}")


def _checked(g: Graph, cert: BaseCertificate, construction: str) -> BaseCertificate:
    report = verify_base(g, cert)
    if not report.valid:
        raise InvariantViolation(f"{construction} produced an invalid base for {g}: {report.message}")
    return cert


def _single_modulus(cert: BaseCertificate) -> int:
    if cert.group.rank != 1:
        raise ValidationError(f"expected a cyclic group, got Z_{cert.group}")
    return cert.group.moduli[0]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, math.isqrt(p) + 1))


# ----------------------- FROM GRAPH STRUCTURE -----------------------

def base_from_independent_set(g: Graph, independent) -> BaseCertificate:
    """ A = I, f = identity, for G constructed as cayley(Z, S) """
    if g.cayley is None:
        raise ValidationError(f"{g} was not constructed as a Cayley graph")
    if not is_independent(g, independent):
        raise ValidationError(f"{sorted(independent)} is not independent in {g}")
    group = g.cayley.group
    return BaseCertificate(group, [group.element(v) for v in independent], group.elements, graph_label=g.label)


def base_from_circular_coloring(g: Graph, p: int, q: int, hom) -> BaseCertificate:
    """ Z_p with A = {0, ..., q-1} and f = hom; density q/p """
    if not is_homomorphism(g, circular_clique(p, q), hom):
        raise ValidationError(f"mapping is not a homomorphism {g} -> K_{p}/{q}")
    group = AbelianGroup((p,))
    return BaseCertificate(group, [(a,) for a in range(q)], [(t,) for t in hom], graph_label=g.label)


def compose_with_homomorphism(g: Graph, h: Graph, hom, cert: BaseCertificate) -> BaseCertificate:
    """ Base of H plus a homomorphism G -> H gives a base of G with the same A """
    if not is_homomorphism(g, h, hom):
        raise ValidationError(f"mapping is not a homomorphism {g} -> {h}")
    _require_valid(h, cert)
    composed = BaseCertificate(cert.group, cert.A, [cert.f[t] for t in hom], graph_label=g.label)
    return _checked(g, composed, "compose_with_homomorphism")


def kneser_characteristic_hom(n: int, k: int) -> list[int]:
    """ Each k-subset goes to the index of its indicator vector in Z_2^n """
    source = kneser(n, k)
    target = hamming_cayley(n, 2 * k)
    group = target.cayley.group
    hom = [group.index(tuple(1 if i in subset else 0 for i in range(n))) for subset in source.names]
    if not is_homomorphism(source, target, hom):
        raise InvariantViolation(f"indicator map K({n},{k}) -> hamming({n},{2 * k}) is not a homomorphism")
    return hom


# ----------------------- PRODUCTS / GROUP CHANGES -----------------------

def lift_base_to_product(g: Graph, cert: BaseCertificate) -> BaseCertificate:
    """ Base for G □ G (vertex (v,v') at index v*n + v') with f'(v,v') = f(v) + f(v') """
    _require_valid(g, cert)
    group = cert.group
    f = [group.add(cert.f[v], cert.f[w]) for v in range(g.n) for w in range(g.n)]
    product = cartesian(g, g)
    return _checked(product, BaseCertificate(group, cert.A, f, graph_label=str(product)), "lift_base_to_product")


def expand_modulus(g: Graph, cert: BaseCertificate, m: int) -> BaseCertificate:
    """ Z_N -> Z_{mN}: A' = A + {0, N, ..., (m-1)N}, f unchanged """
    modulus = _single_modulus(cert)
    _require_valid(g, cert)
    if m < 1:
        raise ValidationError(f"expansion factor must be positive, got {m}")
    if m == 1:
        return cert
    group = AbelianGroup((m * modulus,))
    A = [(a + j * modulus,) for (a,) in cert.A for j in range(m)]
    return _checked(g, BaseCertificate(group, A, cert.f, graph_label=cert.graph_label), "expand_modulus")


def crt_inflate(g: Graph, cert: BaseCertificate, k: int, primes) -> BaseCertificate:
    """
    Z_N^d -> Z_M with M the product of d distinct primes in ((k+1)N, (k+2)N).

    A' = {x + yN : x in A, y in {1..k}^d} has no wrap-around modulo the
    primes, and the Chinese remainder map carries A' and f to Z_M.
    """
    moduli = set(cert.group.moduli)
    if len(moduli) != 1:
        raise ValidationError(f"expected a group Z_N^d, got Z_{cert.group}")
    modulus = moduli.pop()
    d = cert.group.rank
    primes = [int(p) for p in primes]
    if k < 1:
        raise ValidationError(f"k must be positive, got {k}")
    if len(primes) != d:
        raise ValidationError(f"need {d} primes for Z_{cert.group}, got {len(primes)}")
    if len(set(primes)) != d:
        raise ValidationError(f"primes must be distinct, got {primes}")
    low, high = (k + 1) * modulus, (k + 2) * modulus
    for p in primes:
        if not is_prime(p):
            raise ValidationError(f"{p} is not prime")
        if not low < p < high:
            raise ValidationError(f"prime {p} outside the window ({low}, {high})")
    _require_valid(g, cert)

    total = math.prod(primes)
    cofactors = [total // p for p in primes]
    weights = [c * pow(c, -1, p) for c, p in zip(cofactors, primes)]

    def from_residues(residues) -> tuple:
        return (sum(r * w for r, w in zip(residues, weights)) % total,)

    A = [
        from_residues([x + y * modulus for x, y in zip(a, shift)])
        for a in cert.A
        for shift in itertools.product(range(1, k + 1), repeat=d)
    ]
    f = [from_residues(x) for x in cert.f]
    logger.debug(f"inflated Z_{cert.group} to Z_{total} with primes {primes}")
    return _checked(g, BaseCertificate(AbelianGroup((total,)), A, f, graph_label=cert.graph_label), "crt_inflate")


def pullback_to_cyclic_power(g: Graph, cert: BaseCertificate) -> BaseCertificate:
    """ Z_{M1} x ... x Z_{Md} -> Z_N^d with N = lcm(M_i), A' = preimage of A under reduction """
    _require_valid(g, cert)
    moduli = cert.group.moduli
    modulus = math.lcm(*moduli)
    group = AbelianGroup((modulus,) * len(moduli))
    lifts = [range(0, modulus, m) for m in moduli]
    A = [
        tuple(a_i + t_i for a_i, t_i in zip(a, offsets))
        for a in cert.A
        for offsets in itertools.product(*lifts)
    ]
    return _checked(g, BaseCertificate(group, A, cert.f, graph_label=cert.graph_label), "pullback_to_cyclic_power")


def extend_group(g: Graph, cert: BaseCertificate, extra_moduli) -> BaseCertificate:
    """ Z -> Z x Z' with A x Z' and f padded by zeros """
    _require_valid(g, cert)
    extra = AbelianGroup(tuple(extra_moduli))
    group = AbelianGroup(cert.group.moduli + extra.moduli)
    A = [a + z for a in cert.A for z in extra.elements]
    f = [x + extra.zero for x in cert.f]
    return _checked(g, BaseCertificate(group, A, f, graph_label=cert.graph_label), "extend_group")
