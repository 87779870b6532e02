#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Balancing data (sigma, tau, Gamma) of a triple: verification, the explicit
construction for realizable triples, an exhaustive search and the minimality
test. All indices are 1-based.
"""
import logging
import itertools
from math import comb, prod
from typing import Optional
import networkx as nx
from util.config import resolve_guard_limit
from util.errors import GuardExceededError, NotRealizableError, PreconditionError
from util.realizability import (Triple, as_triple, h_profile, is_realizable, kernel_tail,
                                realizable)

log = logging.getLogger(__name__)


class BalancingDatum:
    """
    sigma maps the quotient indices 1..n and tau the kernel indices 1..m into
    1..m+n. gamma holds the nonzero transfers as {(i, j): value}.
    """

    def __init__(self, sigma, tau, gamma: Optional[dict] = None, triple: Optional[Triple] = None):
        """Constructor.
        """
        self.sigma = tuple(int(v) for v in sigma)
        self.tau = tuple(int(v) for v in tau)
        self.gamma = {(int(i), int(j)): int(v) for (i, j), v in (gamma or {}).items() if v}
        self.triple = triple

    def value(self, i: int, j: int) -> int:
        """Gamma(i, j), zero when not stored."""
        return self.gamma.get((i, j), 0)

    def to_json(self) -> dict:
        """JSON encoding, gamma as sorted [i, j, value] entries."""
        data = {'sigma': list(self.sigma), 'tau': list(self.tau),
                'gamma': [[i, j, v] for (i, j), v in sorted(self.gamma.items())]}
        if self.triple is not None:
            data['triple'] = self.triple.to_json()
        return data

    @classmethod
    def from_json(cls, data: dict) -> 'BalancingDatum':
        """Inverse of to_json."""
        try:
            triple = data.get('triple')
            if triple is not None:
                triple = Triple(triple['b'], triple['e'], triple['a'])
            gamma = {(i, j): v for i, j, v in data.get('gamma', [])}
            return cls(data['sigma'], data['tau'], gamma, triple)
        except (KeyError, TypeError, ValueError) as error:
            raise PreconditionError(f'malformed balancing datum: {error}') from error

    def __eq__(self, other) -> bool:
        if not isinstance(other, BalancingDatum):
            return NotImplemented
        return (self.sigma, self.tau, self.gamma) == (other.sigma, other.tau, other.gamma)

    def __hash__(self) -> int:
        return hash((self.sigma, self.tau, tuple(sorted(self.gamma.items()))))

    def __repr__(self) -> str:
        return f'BalancingDatum(sigma={self.sigma}, tau={self.tau}, gamma={self.gamma})'


def _arc_allowed(t: Triple, i: int, j: int, tau: tuple, sigma: tuple) -> bool:
    """b_i < e_tau(i) <= e_sigma(j) < a_j"""
    return (t.b.entry(i) < t.e.entry(tau[i - 1]) <= t.e.entry(sigma[j - 1]) < t.a.entry(j))


def _row_demands(t: Triple, tau: tuple) -> list:
    return [t.e.entry(tau[i - 1]) - t.b.entry(i) for i in range(1, t.m + 1)]


def _column_demands(t: Triple, sigma: tuple) -> list:
    return [t.a.entry(j) - t.e.entry(sigma[j - 1]) for j in range(1, t.n + 1)]


def verify_datum(t, d: BalancingDatum) -> bool:
    """Check the bijection, the support condition on gamma and the row and
    column sums. Raises PreconditionError for indices out of range.
    """
    t = as_triple(t)
    m, n = t.m, t.n
    if not t.ranks_match():
        raise PreconditionError(f'rank(b) + rank(a) != rank(e) for {t}')
    if len(d.sigma) != n or len(d.tau) != m:
        raise PreconditionError(f'datum has {len(d.sigma)} sigma and {len(d.tau)} tau values, '
                                f'expected {n} and {m}')
    for value in d.sigma + d.tau:
        if not 1 <= value <= m + n:
            raise PreconditionError(f'datum index {value} outside 1..{m + n}')
    for (i, j) in d.gamma:
        if not (1 <= i <= m and 1 <= j <= n):
            raise PreconditionError(f'gamma index ({i},{j}) outside 1..{m} x 1..{n}')

    if sorted(d.sigma + d.tau) != list(range(1, m + n + 1)):
        return False
    rows = _row_demands(t, d.tau)
    columns = _column_demands(t, d.sigma)
    row_sums = [0] * m
    column_sums = [0] * n
    for (i, j), value in d.gamma.items():
        if value < 0:
            return False
        if not _arc_allowed(t, i, j, d.tau, d.sigma):
            return False
        if value > min(rows[i - 1], columns[j - 1]):
            return False
        row_sums[i - 1] += value
        column_sums[j - 1] += value
    return row_sums == rows and column_sums == columns


def gamma_feasible(t, tau, sigma) -> Optional[dict]:
    """
    Solve the transportation problem for the assignment (tau, sigma) as a
    maximum flow: source -> row i with capacity e_tau(i) - b_i, row i -> column j
    for every allowed arc, column j -> sink with capacity a_j - e_sigma(j).
    Returns an integral gamma saturating every row and column, or None.
    """
    t = as_triple(t)
    tau, sigma = tuple(tau), tuple(sigma)
    rows = _row_demands(t, tau)
    columns = _column_demands(t, sigma)
    if any(v < 0 for v in rows) or any(v < 0 for v in columns):
        return None
    total = sum(rows)
    if total != sum(columns):
        return None
    if total == 0:
        return {}

    graph = nx.DiGraph()
    graph.add_node('source')
    graph.add_node('sink')
    for i, demand in enumerate(rows, start=1):
        if demand:
            graph.add_edge('source', ('row', i), capacity=demand)
    for j, demand in enumerate(columns, start=1):
        if demand:
            graph.add_edge(('column', j), 'sink', capacity=demand)
    for i in range(1, t.m + 1):
        if not rows[i - 1]:
            continue
        for j in range(1, t.n + 1):
            if columns[j - 1] and _arc_allowed(t, i, j, tau, sigma):
                # No capacity attribute means unbounded.
                graph.add_edge(('row', i), ('column', j))

    flow_value, flow = nx.maximum_flow(graph, 'source', 'sink')
    if flow_value != total:
        return None
    gamma = {}
    for i in range(1, t.m + 1):
        for target, value in flow.get(('row', i), {}).items():
            if value:
                gamma[(i, target[1])] = int(value)
    return gamma


def _greedy_gamma(t: Triple, tau: tuple, sigma: tuple) -> Optional[dict]:
    """Columns j in increasing order, each filled from rows i in increasing
    order as far as the remaining row and column demands allow.
    """
    rows = _row_demands(t, tau)
    columns = _column_demands(t, sigma)
    if any(v < 0 for v in rows) or any(v < 0 for v in columns):
        return None
    gamma = {}
    for j in range(1, t.n + 1):
        for i in range(1, t.m + 1):
            if not columns[j - 1]:
                break
            if not rows[i - 1] or not _arc_allowed(t, i, j, tau, sigma):
                continue
            amount = min(rows[i - 1], columns[j - 1])
            gamma[(i, j)] = amount
            rows[i - 1] -= amount
            columns[j - 1] -= amount
    if any(rows) or any(columns):
        return None
    return gamma


def construct_datum(t) -> BalancingDatum:
    """
    The datum of a realizable triple: tau(i) = h_i + i - 1 for i <= m - m' and
    n + i otherwise, sigma(j) = j + max{mu : h_mu <= j} and gamma filled
    greedily column by column.
    """
    t = as_triple(t)
    if not is_realizable(t):
        verdict = realizable(t)
        raise NotRealizableError(f'{t} is not realizable: {verdict.witness.detail}',
                                 verdict.witness)
    log.debug('Enter: %s', t)
    m, n = t.m, t.n
    profile = h_profile(t)
    tail = kernel_tail(t)
    tau = tuple(profile[i - 1] + i - 1 if i <= m - tail else n + i for i in range(1, m + 1))
    sigma = tuple(j + max([mu for mu in range(1, m + 1) if profile[mu - 1] <= j], default=0)
                  for j in range(1, n + 1))

    gamma = _greedy_gamma(t, tau, sigma)
    if gamma is None:
        log.debug('Greedy fill stalled for %s, solving as a flow', t)
        gamma = gamma_feasible(t, tau, sigma)
    datum = BalancingDatum(sigma, tau, gamma or {}, t)
    if gamma is None or not verify_datum(t, datum):
        raise NotRealizableError(f'balancing datum construction failed for {t}: '
                                 f'sigma={sigma}, tau={tau}')
    log.debug('Exit: %s', datum)
    return datum


def search_datum(t, guard_limit: Optional[int] = None) -> Optional[BalancingDatum]:
    """
    Exhaustive search over order-preserving assignments: tau runs through the
    m-subsets of 1..m+n in increasing order and sigma is the complement, each
    checked with gamma_feasible. Returns the first datum found or None.
    """
    t = as_triple(t)
    if not t.ranks_match():
        raise PreconditionError(f'rank(b) + rank(a) != rank(e) for {t}')
    limit = resolve_guard_limit(guard_limit)
    size = t.m + t.n
    count = comb(size, t.m)
    if count > limit:
        raise GuardExceededError('balancing datum search', count, limit)
    everything = set(range(1, size + 1))
    for tau in itertools.combinations(range(1, size + 1), t.m):
        sigma = tuple(sorted(everything.difference(tau)))
        gamma = gamma_feasible(t, tau, sigma)
        if gamma is not None:
            return BalancingDatum(sigma, tau, gamma, t)
    return None


def is_minimal(t, d: BalancingDatum, guard_limit: Optional[int] = None) -> bool:
    """True unless some valid datum has tau' <= tau entrywise with tau' != tau.
    Every injective tau' below tau is tried with sigma' its sorted complement.
    """
    t = as_triple(t)
    if not verify_datum(t, d):
        raise PreconditionError(f'{d} is not a balancing datum of {t}')
    limit = resolve_guard_limit(guard_limit)
    count = prod(d.tau)
    if count > limit:
        raise GuardExceededError('minimality search', count, limit)
    everything = set(range(1, t.m + t.n + 1))
    for candidate in itertools.product(*(range(1, v + 1) for v in d.tau)):
        if candidate == d.tau or len(set(candidate)) != len(candidate):
            continue
        sigma = tuple(sorted(everything.difference(candidate)))
        if gamma_feasible(t, candidate, sigma) is not None:
            log.debug('%s is undercut by tau=%s', d, candidate)
            return False
    return True
