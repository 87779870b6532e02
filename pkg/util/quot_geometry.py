#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Irreducibility and connectedness of the locally free Quot locus of O(e):
most balanced quotients and kernels, iterative balancing and connectivity
certificates built on networkx graphs.
"""
import logging
from typing import Optional
import networkx as nx
from util.config import resolve_guard_limit
from util.errors import ConnectivityError, CrossCheckError, GuardExceededError, PreconditionError
from util.realizability import Triple, is_realizable
from util.splitting import (SplittingType, alpha_balance, as_splitting_type,
                            more_balanced_geq, reverse_negate)
from util.stable_pairs import (StablePackage, component_census, enumerate_stable_pairs,
                               generic_cokernel, generic_kernel, is_stable,
                               is_strongly_stable, package_pair, validate_package)

log = logging.getLogger(__name__)

ORDERS = ('quotient_first', 'kernel_first')


def _quotient_head(e: SplittingType, n: int, d: int) -> tuple:
    """
    (n', f(n')) with f(j) = d - (e_1 + ... + e_j + e_{j+2} + ... + e_{n+1}) and
    n' the least j with f(j) >= 0, strictly when e_{j+1} = e_{j+2}. For j = n
    the quotient is e_1..e_n and f(n) must vanish.
    """
    prefix = e.prefix_sums()
    for j in range(0, n + 1):
        value = d - (prefix[j] + prefix[n + 1] - prefix[j + 1]) if j < n else d - prefix[n]
        if j == n:
            if value == 0:
                return j, value
            continue
        if value > 0 or (value == 0 and e.entry(j + 1) != e.entry(j + 2)):
            return j, value
    raise PreconditionError(f'{e} has no locally free quotient of rank {n} and degree {d}')


def most_balanced_quotient(e, n: int, d: int) -> SplittingType:
    """(e_1, ..., e_n', alpha((e_{n'+2}, ..., e_{n+1}), f(n')))"""
    e = as_splitting_type(e)
    if not 1 <= n < e.rank:
        raise PreconditionError(f'need 1 <= n < rank(e) = {e.rank}, got n = {n}')
    head, value = _quotient_head(e, n, d)
    return SplittingType(list(e.entries[:head]) +
                         list(alpha_balance(e.entries[head + 1:n + 1], value)))


def most_balanced_kernel(e, m: int, d_prime: int) -> SplittingType:
    """The dual of most_balanced_quotient for kernels of rank m and degree d'."""
    return reverse_negate(most_balanced_quotient(reverse_negate(e), m, -d_prime))


def corollary_irreducible(e, n: int, d: int) -> bool:
    """
    Sufficient condition for irreducibility: d = e_1 + ... + e_n, or both
    d >= n(e_max - 1) + 1 and d' <= m(e_min + 1) - 1.
    """
    e = as_splitting_type(e)
    m = e.rank - n
    d_prime = e.degree - d
    if d == sum(e.entries[:n]):
        return True
    return d >= n * (e.entries[-1] - 1) + 1 and d_prime <= m * (e.entries[0] + 1) - 1


def _single_block(e: SplittingType, n: int, d: int, n_prime: int,
                  m_prime: int) -> Optional[StablePackage]:
    """
    The package with one block pair P_1 = n'+1..n'+m-m', Q_1 the rest up to
    m+n-m' and delta fixed by the degree d. None when exactly one of P_1, Q_1
    would be empty.
    """
    p_size, q_size = e.rank - n - m_prime, n - n_prime
    if (p_size == 0) != (q_size == 0):
        return None
    if not p_size:
        return StablePackage(m_prime, n_prime)
    p_block = tuple(range(n_prime + 1, n_prime + p_size + 1))
    q_block = tuple(range(n_prime + p_size + 1, n_prime + p_size + q_size + 1))
    delta = d - sum(e.entries[:n_prime]) - sum(e.entry(i) for i in q_block)
    return StablePackage(m_prime, n_prime, (p_block, q_block), (delta,))


def _balanced_condition(e: SplittingType, n: int, d: int, b: SplittingType,
                        a: SplittingType) -> tuple:
    """
    The alpha/beta criterion: some package with a single block pair and
    delta = (Delta) expands to (b, a) and passes the strongly stable test.
    Heads and tails no longer than n', m' of the most balanced pair are
    tried: when e_{n'} or e_{m+n-m'+1} ties with the block, the same pair also
    comes from a shorter head or tail.
    Returns (holds, n', m', Delta) for the most balanced head and tail.
    """
    m = e.rank - n
    head, _ = _quotient_head(e, n, d)
    tail, _ = _quotient_head(reverse_negate(e), m, d - e.degree)
    delta = d - (sum(e.entries[:head]) + sum(e.entries[head + m - tail:m + n - tail]))
    candidates = [(n_prime, m_prime) for n_prime in range(head, -1, -1)
                  for m_prime in range(tail, -1, -1)]
    for n_prime, m_prime in candidates:
        pkg = _single_block(e, n, d, n_prime, m_prime)
        if pkg is None:
            continue
        try:
            if package_pair(e, pkg) == (b, a) and is_strongly_stable(e, pkg):
                log.debug('Single block witness %s', pkg)
                return True, head, tail, delta
        except PreconditionError:
            continue
    return False, head, tail, delta


class IrreducibilityReport:
    """Outcome of irreducible() with the data it was decided on."""

    def __init__(self, verdict: bool, a: SplittingType, b: SplittingType, n_prime: int,
                 m_prime: int, delta: int, corollary: bool, census_size: Optional[int] = None,
                 balanced_condition: Optional[bool] = None):
        """Constructor.
        """
        self.verdict = verdict
        self.a = a
        self.b = b
        self.n_prime = n_prime
        self.m_prime = m_prime
        self.delta = delta
        self.corollary = corollary
        self.census_size = census_size
        self.balanced_condition = balanced_condition

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'irreducible': self.verdict, 'a': self.a.to_json(), 'b': self.b.to_json(),
                'n_prime': self.n_prime, 'm_prime': self.m_prime, 'Delta': self.delta,
                'corollary': self.corollary, 'census_size': self.census_size,
                'balanced_condition': self.balanced_condition}


def irreducible(e, n: int, d: int, cross_check: bool = False,
                guard_limit: Optional[int] = None) -> IrreducibilityReport:
    """
    The locus is irreducible iff the most balanced quotient and the most
    balanced kernel fit in one short exact sequence. With cross_check the
    alpha/beta criterion and the component census are evaluated as well and
    all three must agree.
    """
    e = as_splitting_type(e)
    m = e.rank - n
    a = most_balanced_quotient(e, n, d)
    b = most_balanced_kernel(e, m, e.degree - d)
    verdict = is_realizable(Triple(b, e, a))
    holds, head, tail, delta = _balanced_condition(e, n, d, b, a)
    corollary = corollary_irreducible(e, n, d)
    report = IrreducibilityReport(verdict, a, b, head, tail, delta, corollary)
    if corollary and not verdict:
        raise CrossCheckError(f'irreducibility bound holds for e={e}, n={n}, d={d} '
                              'but the most balanced pair is not realizable')
    if cross_check:
        report.balanced_condition = holds
        report.census_size = len(component_census(e, n, d, guard_limit))
        if not verdict == holds == (report.census_size == 1):
            raise CrossCheckError(f'irreducibility criteria disagree for e={e}, n={n}, d={d}: '
                                  f'realizable={verdict}, balanced={holds}, '
                                  f'components={report.census_size}')
    return report


def iterative_balancing(e, b, a, order: str = 'quotient_first',
                        guard_limit: Optional[int] = None) -> tuple:
    """
    Alternately replace a by the generic cokernel of b and b by the generic
    kernel of a until neither changes. Returns (b, a, chain) where chain lists
    every visited pair starting with the input; consecutive pairs differ in
    exactly one side.
    """
    e, b, a = as_splitting_type(e), as_splitting_type(b), as_splitting_type(a)
    if order not in ORDERS:
        raise PreconditionError(f'order must be one of {ORDERS}, got {order!r}')
    if not is_realizable(Triple(b, e, a)):
        raise PreconditionError(f'iterative balancing needs a realizable pair, got b={b}, a={a}')

    def update_quotient(kernel, _quotient):
        return kernel, generic_cokernel(kernel, e, guard_limit)

    def update_kernel(_kernel, quotient):
        return generic_kernel(e, quotient, guard_limit), quotient

    steps = (update_quotient, update_kernel) if order == 'quotient_first' \
        else (update_kernel, update_quotient)
    chain = [(b, a)]
    while True:
        changed = False
        for step in steps:
            state = step(*chain[-1])
            if state != chain[-1]:
                chain.append(state)
                changed = True
        if not changed:
            break
    log.debug('%s steps from b=%s a=%s', len(chain) - 1, b, a)
    return chain[-1][0], chain[-1][1], chain


class Witness:
    """An edge of a connectivity certificate and the fact justifying it.

    kind is connecting_pairs, killing_higher_delta, to_one_block or
    iterative_balancing. detail carries the intermediate pair or package used.
    """

    def __init__(self, kind: str, source: tuple, target: tuple, detail: Optional[dict] = None):
        """Constructor.
        """
        self.kind = kind
        self.source = source
        self.target = target
        self.detail = dict(detail or {})

    def to_json(self) -> dict:
        """JSON encoding."""
        detail = {}
        for key, value in self.detail.items():
            if isinstance(value, StablePackage):
                detail[key] = value.to_json()
            elif isinstance(value, tuple):
                detail[key] = [list(v) for v in value]
            else:
                detail[key] = value
        return {'kind': self.kind, 'source': _pair_json(self.source),
                'target': _pair_json(self.target), 'detail': detail}


def _pair_json(pair: tuple) -> dict:
    return {'b': list(pair[0]), 'a': list(pair[1])}


class ConnectivityCertificate:
    """Witness graph over the strongly stable pairs of (e, n, d)."""

    def __init__(self, e: SplittingType, n: int, d: int, root: tuple, nodes: list):
        """Constructor.
        """
        self.e = e
        self.n = n
        self.d = d
        self.root = root
        self.nodes = list(nodes)
        self.edges = []
        self.graph = nx.Graph()
        self.graph.add_nodes_from(self.nodes)

    def add(self, witness: Witness):
        """Record a witness edge."""
        self.edges.append(witness)
        self.graph.add_edge(witness.source, witness.target)

    @property
    def auxiliary(self) -> list:
        """Vertices that are not strongly stable pairs."""
        nodes = set(self.nodes)
        return sorted((v for v in self.graph.nodes if v not in nodes),
                      key=lambda pair: (pair[0].entries, pair[1].entries))

    def reached(self) -> set:
        """Vertices joined to the root."""
        return nx.node_connected_component(self.graph, self.root)

    @property
    def connected(self) -> bool:
        """All strongly stable pairs lie in the component of the root."""
        reached = self.reached()
        return all(node in reached for node in self.nodes)

    def states(self) -> set:
        """Every pair appearing in the certificate."""
        return set(self.graph.nodes)

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'e': self.e.to_json(), 'n': self.n, 'd': self.d, 'root': _pair_json(self.root),
                'nodes': [_pair_json(node) for node in self.nodes],
                'auxiliary': [_pair_json(node) for node in self.auxiliary],
                'edges': [witness.to_json() for witness in self.edges],
                'connected': self.connected}


def _connecting_pairs(e: SplittingType, records: list, certificate: ConnectivityCertificate):
    """(b, a) -- (b', a') whenever a >= a' and b' >= b, through (b, a')."""
    for first in records:
        for second in records:
            if first is second:
                continue
            if not (more_balanced_geq(first.a, second.a) and more_balanced_geq(second.b, first.b)):
                continue
            if not is_realizable(Triple(first.b, e, second.a)):
                raise CrossCheckError(f'connecting pair (b={first.b}, a={second.a}) of two stable '
                                      'pairs is not realizable')
            certificate.add(Witness('connecting_pairs', (first.b, first.a),
                                    (second.b, second.a),
                                    {'intermediate': (first.b, second.a)}))


def _killing_move(pkg: StablePackage) -> Optional[StablePackage]:
    """Move one unit from the last positive delta_i, i > 1, to delta_1."""
    for i in range(pkg.r - 1, 0, -1):
        if pkg.delta[i] > 0:
            delta = list(pkg.delta)
            delta[i] -= 1
            delta[0] += 1
            return pkg.with_delta(delta)
    return None


def _to_one_block(e: SplittingType, pkg: StablePackage) -> tuple:
    """
    For r >= 2 and delta_i = 0 for i > 1: with D = e_{Q_r,1} - e_{Q_r,1 - 1},
    raise delta_1 by one and lower the entry e_{Q_r,1} of a by one; in b raise the
    entry e_{Q_r,1 - 1} to e_{Q_r,1} and lower b_1 by D.
    """
    first = pkg.Q[-1][0]
    jump = e.entry(first) - e.entry(first - 1)
    moved = pkg.with_delta((pkg.delta[0] + 1,) + pkg.delta[1:])
    b, _ = package_pair(e, pkg)
    _, a = package_pair(e, moved)
    a_values = list(a)
    a_values[pkg.n_prime + sum(len(q) for q in pkg.Q[:-1])] -= 1
    b_values = list(b)
    b_values[sum(len(p) for p in pkg.P) - 1] = e.entry(first)
    b_values[0] -= jump
    return SplittingType(b_values), SplittingType(a_values)


def _ascend(e: SplittingType, pair: tuple, pkg: StablePackage, by_pair: dict,
            certificate: ConnectivityCertificate, order: str, guard_limit: Optional[int]):
    """Follow killing, to-one-block and balancing moves from a stable pair
    until its package has a single block pair.
    """
    limit = resolve_guard_limit(guard_limit)
    steps = 0
    while pkg.r >= 2:
        steps += 1
        if steps > limit:
            raise GuardExceededError('connectivity ascent', steps, limit)
        moved = _killing_move(pkg)
        if moved is not None:
            kind = 'killing_higher_delta'
            target = package_pair(e, moved)
            detail = {'package': pkg, 'moved': moved}
        else:
            kind = 'to_one_block'
            target = _to_one_block(e, pkg)
            detail = {'package': pkg}
        if not is_realizable(Triple(target[0], e, target[1])):
            raise CrossCheckError(f'{kind} move from {pkg} gives a non-realizable pair {target}')
        certificate.add(Witness(kind, pair, target, detail))

        b, a, chain = iterative_balancing(e, target[0], target[1], order, guard_limit)
        for before, after in zip(chain, chain[1:]):
            certificate.add(Witness('iterative_balancing', before, after,
                                    {'side': 'quotient' if before[0] == after[0] else 'kernel'}))
        pair = (b, a)
        if pair not in by_pair:
            raise CrossCheckError(f'iterative balancing ended at b={b}, a={a}, '
                                  'which is not a stable pair')
        if moved is not None and pair == target:
            try:
                validate_package(e, moved)
                pkg = moved
                continue
            except PreconditionError:
                pass
        pkg = by_pair[pair].packages[0]


def connectedness_certificate(e, n: int, d: int, exhaustive: bool = False,
                              order: str = 'quotient_first',
                              guard_limit: Optional[int] = None) -> ConnectivityCertificate:
    """
    Certificate that the strongly stable pairs of (e, n, d) lie in one connected
    component. Edges between stable pairs come first; the ascent through
    killing, to-one-block and balancing moves is run from every stable pair when
    exhaustive, otherwise only from pairs not yet joined to the root. Raises
    ConnectivityError with the partial certificate if the graph stays split.
    """
    e = as_splitting_type(e)
    if order not in ORDERS:
        raise PreconditionError(f'order must be one of {ORDERS}, got {order!r}')
    records = enumerate_stable_pairs(e, n, d, guard_limit)
    strong = [record for record in records if record.strongly_stable]
    if not strong:
        raise PreconditionError(f'no strongly stable pairs for e={e}, n={n}, d={d}')
    top = most_balanced_quotient(e, n, d)
    roots = [record for record in strong if record.a == top]
    if len(roots) != 1:
        raise CrossCheckError(f'expected one strongly stable pair with quotient {top}, '
                              f'found {len(roots)}')
    root = (roots[0].b, roots[0].a)
    certificate = ConnectivityCertificate(e, n, d, root, [(r.b, r.a) for r in strong])
    certificate.graph.add_nodes_from((r.b, r.a) for r in records)
    by_pair = {(r.b, r.a): r for r in records}

    _connecting_pairs(e, records, certificate)
    for record in records:
        pair = (record.b, record.a)
        if exhaustive:
            for pkg in record.packages:
                _ascend(e, pair, pkg, by_pair, certificate, order, guard_limit)
        elif pair not in certificate.reached():
            _ascend(e, pair, record.packages[0], by_pair, certificate, order, guard_limit)

    if not certificate.connected:
        missing = [node for node in certificate.nodes if node not in certificate.reached()]
        raise ConnectivityError(f'witness graph for e={e}, n={n}, d={d} is disconnected; '
                                f'unreached strongly stable pairs: {missing}', certificate)
    log.debug('Certificate with %d nodes and %d edges', len(certificate.nodes),
              len(certificate.edges))
    return certificate


def _verify_witness(e: SplittingType, witness: Witness, guard_limit: Optional[int]) -> bool:
    (b, a), (b2, a2) = witness.source, witness.target
    if witness.kind == 'connecting_pairs':
        middle_b, middle_a = witness.detail['intermediate']
        return (middle_b == b and middle_a == a2
                and more_balanced_geq(a, a2) and more_balanced_geq(b2, b)
                and is_stable(e, b, a, guard_limit) and is_stable(e, b2, a2, guard_limit)
                and is_realizable(Triple(b, e, a2)))
    if witness.kind == 'killing_higher_delta':
        pkg, moved = witness.detail['package'], witness.detail['moved']
        return (package_pair(e, pkg) == (b, a) and _killing_move(pkg) == moved
                and package_pair(e, moved) == (b2, a2) and is_realizable(Triple(b2, e, a2)))
    if witness.kind == 'to_one_block':
        pkg = witness.detail['package']
        return (package_pair(e, pkg) == (b, a) and _to_one_block(e, pkg) == (b2, a2)
                and is_realizable(Triple(b2, e, a2)))
    if witness.kind == 'iterative_balancing':
        if b == b2:
            return generic_cokernel(b, e, guard_limit) == a2
        if a == a2:
            return generic_kernel(e, a, guard_limit) == b2
        return False
    return False


def verify_certificate(e, certificate: ConnectivityCertificate,
                       guard_limit: Optional[int] = None) -> bool:
    """Re-check every witness and the connectivity of a rebuilt graph."""
    e = as_splitting_type(e)
    graph = nx.Graph()
    graph.add_nodes_from(certificate.nodes)
    graph.add_node(certificate.root)
    for witness in certificate.edges:
        if not _verify_witness(e, witness, guard_limit):
            log.warning('Witness %s from %s to %s does not verify', witness.kind,
                        witness.source, witness.target)
            return False
        graph.add_edge(witness.source, witness.target)
    reached = nx.node_connected_component(graph, certificate.root)
    return all(node in reached for node in certificate.nodes)
