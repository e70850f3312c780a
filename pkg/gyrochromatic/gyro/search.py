"""
Exact base search over a finite abelian group

sigma_Z(G) is the largest alpha(C(Z, S_f)) / |Z| over proper maps
f: V(G) -> Z, where S_f = {+-(f(u) - f(v)) : uv in E(G)}; a maximum
independent set A of C(Z, S_f) together with f is then a coloring Z-base.

Includes:
- density_ceiling / clique_lemma_ceiling: upper bounds on any base density
- sigma_group_exact: exhaustive search over f with dominance, orbit and ceiling pruning
"""

from __future__ import annotations

import math
import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from mylogger import Logger

from gyrochromatic import settings
from gyrochromatic.exceptions import InvariantViolation
from gyrochromatic.graphs.homomorphism import search_order
from gyrochromatic.graphs.models import AbelianGroup, Graph, iter_bits, list_to_bits
from gyrochromatic.gyro.models import BaseCertificate
from gyrochromatic.gyro.verify import verify_base
from gyrochromatic.invariants import chromatic_number, clique_number, independence_number

logger = Logger()


# ----------------------- CEILINGS -----------------------

@lru_cache(maxsize=256)
def density_ceiling(g: Graph) -> Fraction:
    """ min(alpha(G)/n, 1/omega(G)): no base in any group is denser """
    if not g.edge_count:
        return Fraction(1)
    alpha, _ = independence_number(g)
    return min(Fraction(alpha, g.n), Fraction(1, clique_number(g)))


def clique_lemma_ceiling(g: Graph) -> Optional[Fraction]:
    """ (n-1)/(omega*n) when omega < chi, else None """
    if not g.edge_count or g.n < 2:
        return None
    omega = clique_number(g)
    chi, _ = chromatic_number(g)
    if omega >= chi:
        return None
    return Fraction(g.n - 1, omega * g.n)


# ----------------------- SEARCH -----------------------

class _OutOfBudget(Exception):
    pass


class _AlphaMemo:
    """ alpha(C(Z, S)) keyed by the canonical form of S under the group automorphisms """

    def __init__(self, group: AbelianGroup):
        self.group = group
        self.table = {}
        self.lock = threading.Lock()
        self.hits = 0

    def canonical(self, mask: int) -> int:
        members = list(iter_bits(mask))
        return min(list_to_bits(perm[i] for i in members) for perm in self.group.automorphisms)

    def alpha(self, mask: int) -> int:
        key = self.canonical(mask)
        with self.lock:
            if key in self.table:
                self.hits += 1
                return self.table[key]
        value, _ = independence_number(cayley_graph_from_mask(self.group, mask))
        with self.lock:
            self.table[key] = value
        return value


def cayley_graph_from_mask(group: AbelianGroup, mask: int) -> Graph:
    """ C(Z, S) for S given as a symmetric bitmask over group indices """
    table = group.add_table
    members = list(iter_bits(mask))
    rows = []
    for i in range(group.order):
        row = 0
        for s in members:
            row |= 1 << table[i][s]
        rows.append(row)
    return Graph(group.order, tuple(rows), label=f"cayley:{group}:{len(members)}")


@dataclass
class _Subtree:
    """ Outcome of one depth-1 branch """
    best: int = 0
    mapping: Optional[list] = None
    mask: int = 0
    nodes: int = 0
    complete: bool = False


class _BaseSearch:
    """ Depth-first enumeration of proper maps f with f(order[0]) = 0 """

    def __init__(self, g: Graph, group: AbelianGroup, target: int, memo: _AlphaMemo):
        self.g = g
        self.group = group
        self.target = target
        self.memo = memo
        self.size = group.order
        self.add = group.add_table
        self.neg = group.neg_table
        self.order = search_order(g)
        position = {v: i for i, v in enumerate(self.order)}
        self.earlier = [[u for u in g.neighbors(v) if position[u] < position[v]] for v in self.order]
        # branches after this index are abandoned once an earlier one reached the target
        self.stop_after = None
        self.lock = threading.Lock()

    def differences(self, mapping: list, depth: int, t: int) -> Optional[int]:
        """ Bitmask of +-(t - f(u)) over earlier neighbours u, or None if t clashes with one """
        mask = 0
        for u in self.earlier[depth]:
            d = self.add[t][self.neg[mapping[u]]]
            if d == 0:
                return None
            mask |= 1 << d | 1 << self.neg[d]
        return mask

    def choices(self, mapping: list, depth: int, used: int, stabiliser: list):
        """ (value, new differences) pairs, fewest new differences first """
        options = []
        for t in range(self.size):
            if any(perm[t] < t for perm in stabiliser):
                continue  # not the smallest value of its orbit
            diff = self.differences(mapping, depth, t)
            if diff is None:
                continue
            new = diff & ~used
            options.append((new.bit_count(), t, new))
        options.sort()
        return [(t, new) for _, t, new in options]

    def first_level(self):
        mapping = [-1] * self.g.n
        mapping[self.order[0]] = 0
        if self.g.n == 1:
            return []
        return self.choices(mapping, 1, 0, list(self.group.automorphisms))

    def superseded(self, index: int) -> bool:
        return self.stop_after is not None and self.stop_after < index

    def run(self, index: int, value: int, new: int, budget: int) -> _Subtree:
        result = _Subtree()
        mapping = [-1] * self.g.n
        mapping[self.order[0]] = 0
        mapping[self.order[1]] = value
        stabiliser = [p for p in self.group.automorphisms if p[value] == value]
        alpha = self.memo.alpha(new) if new else self.size

        def descend(depth: int, used: int, alpha_used: int, stab: list):
            result.nodes += 1
            if result.nodes > budget or self.superseded(index):
                raise _OutOfBudget
            if depth == self.g.n:
                if alpha_used > result.best:
                    result.best, result.mapping, result.mask = alpha_used, list(mapping), used
                return
            v = self.order[depth]
            for t, new_diff in self.choices(mapping, depth, used, stab):
                widened = used | new_diff
                alpha_next = self.memo.alpha(widened) if new_diff else alpha_used
                if alpha_next <= result.best:
                    continue
                mapping[v] = t
                descend(depth + 1, widened, alpha_next, [p for p in stab if p[t] == t])
                mapping[v] = -1
                if result.best >= self.target:
                    return

        try:
            if alpha > result.best:
                descend(2, new, alpha, stabiliser)
            result.complete = True
        except _OutOfBudget:
            result.complete = result.best >= self.target
        if result.best >= self.target:
            with self.lock:
                if self.stop_after is None or index < self.stop_after:
                    self.stop_after = index
        return result


def _edgeless_certificate(g: Graph, group: AbelianGroup) -> BaseCertificate:
    return BaseCertificate(group, group.elements, (group.zero,) * g.n, graph_label=g.label)


def _cayley_seed(g: Graph, group: AbelianGroup) -> Optional[BaseCertificate]:
    """ Identity map plus a maximum independent set, when G is itself C(Z, S) """
    if g.cayley is None or g.cayley.group != group:
        return None
    _, independent = independence_number(g)
    return BaseCertificate(group, [group.element(v) for v in independent], group.elements, graph_label=g.label)


def _certificate(g: Graph, group: AbelianGroup, mapping: list, mask: int, count: int) -> BaseCertificate:
    alpha, independent = independence_number(cayley_graph_from_mask(group, mask))
    if alpha != count:
        raise InvariantViolation(f"memoised alpha {count} disagrees with direct alpha {alpha}")
    cert = BaseCertificate(group, [group.element(x) for x in independent],
                           [group.element(x) for x in mapping], graph_label=g.label)
    report = verify_base(g, cert)
    if not report.valid:
        raise InvariantViolation(f"search produced an invalid base: {report.message}")
    return cert


@logger.log_execution(level="DEBUG")
def sigma_group_exact(g: Graph, group: AbelianGroup, budget: Optional[int] = None,
                      threads: Optional[int] = None) -> tuple[Fraction, Optional[BaseCertificate], bool]:
    """
    (sigma_Z(G), best certificate, exact flag).

    The certificate is None when no proper map into Z exists (sigma = 0).
    When the node budget runs out the value is the best density found,
    a lower bound on sigma_Z(G), and the flag is False.
    """
    budget = settings.BUDGET if budget is None else budget
    threads = settings.THREADS if threads is None else threads
    if not g.edge_count:
        return Fraction(1), _edgeless_certificate(g, group), True

    target = math.floor(density_ceiling(g) * group.order)
    if target == 0:
        logger.info(f"sigma_{group}({g}) = 0: the density ceiling allows no base element")
        return Fraction(0), None, True
    chi, _ = chromatic_number(g)
    if group.order < chi:
        logger.info(f"sigma_{group}({g}) = 0: |Z| = {group.order} < chi = {chi}")
        return Fraction(0), None, True
    seed = _cayley_seed(g, group)
    if seed is not None and len(seed.A) >= target:
        logger.info(f"sigma_{group}({g}) = {seed.density} from the identity map")
        return seed.density, seed, True

    memo = _AlphaMemo(group)
    search = _BaseSearch(g, group, target, memo)
    branches = search.first_level()
    share = max(1, budget // max(1, len(branches)))

    if threads > 1 and len(branches) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda i: search.run(i, *branches[i], share), range(len(branches))))
    else:
        results = []
        for index, (value, new) in enumerate(branches):
            outcome = search.run(index, value, new, share)
            results.append(outcome)
            if outcome.best >= target:
                break

    # first branch attaining the maximum wins, whatever the scheduling
    best = _Subtree()
    for outcome in results:
        if outcome.best > best.best:
            best = outcome
    exact = best.best >= target or all(r.complete for r in results)
    nodes = sum(r.nodes for r in results)
    logger.debug(f"Z_{group}: {nodes} nodes, {len(memo.table)} distinct S, {memo.hits} memo hits")

    if best.mapping is None:
        if not exact:
            logger.warning(f"budget exhausted on Z_{group} before any proper map of {g} was found")
        return Fraction(0), None, exact
    cert = _certificate(g, group, best.mapping, best.mask, best.best)
    if not exact:
        logger.warning(f"budget {budget} exhausted on Z_{group}: {cert.density} is a lower bound on sigma")
    else:
        logger.info(f"sigma_{group}({g}) = {cert.density}")
    return cert.density, cert, exact
