#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Stable pairs (b, a) of an ambient splitting type e: packages of blocks and
rebalancing amounts, their expansion, the strongly stable test and the census
of components of the locally free Quot locus.
"""
import math
import logging
import itertools
from typing import Iterator, Optional
from util.config import resolve_guard_limit
from util.errors import (CrossCheckError, GuardExceededError, NotRealizableError,
                         PreconditionError)
from util.realizability import Triple, injection_lf_exists, is_realizable
from util.splitting import (SplittingType, alpha_balance, as_splitting_type, beta_balance,
                            dominance_maximum, end_dim, hom_dim, reverse_negate,
                            weak_compositions)

log = logging.getLogger(__name__)


class StablePackage:
    """
    Data (m', n', blocks, delta) of a combinatorially stable pair. blocks lists
    the index intervals P_1, Q_1, ..., P_r, Q_r of e, each a tuple of 1-based
    indices; delta holds one rebalancing amount per (P_i, Q_i).
    """

    def __init__(self, m_prime: int, n_prime: int, blocks=(), delta=()):
        """Constructor.
        """
        self.m_prime = int(m_prime)
        self.n_prime = int(n_prime)
        self.blocks = tuple(tuple(int(i) for i in block) for block in blocks)
        self.delta = tuple(int(v) for v in delta)

    @property
    def r(self) -> int:  # pylint: disable=invalid-name
        """Number of (P, Q) block pairs."""
        return len(self.blocks) // 2

    @property
    def P(self) -> tuple:  # pylint: disable=invalid-name
        """Kernel blocks P_1..P_r."""
        return self.blocks[0::2]

    @property
    def Q(self) -> tuple:  # pylint: disable=invalid-name
        """Quotient blocks Q_1..Q_r."""
        return self.blocks[1::2]

    def with_delta(self, delta) -> 'StablePackage':
        """Same blocks, other rebalancing amounts."""
        return StablePackage(self.m_prime, self.n_prime, self.blocks, delta)

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'m_prime': self.m_prime, 'n_prime': self.n_prime,
                'blocks': [list(block) for block in self.blocks], 'delta': list(self.delta)}

    @classmethod
    def from_json(cls, data: dict) -> 'StablePackage':
        """Inverse of to_json."""
        return cls(data['m_prime'], data['n_prime'], data.get('blocks', ()), data.get('delta', ()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, StablePackage):
            return NotImplemented
        return (self.m_prime, self.n_prime, self.blocks, self.delta) == \
            (other.m_prime, other.n_prime, other.blocks, other.delta)

    def __hash__(self) -> int:
        return hash((self.m_prime, self.n_prime, self.blocks, self.delta))

    def __repr__(self) -> str:
        return (f'StablePackage(m\'={self.m_prime}, n\'={self.n_prime}, '
                f'blocks={self.blocks}, delta={self.delta})')


class ComponentRecord:
    """A stable pair with its dimensions and the packages producing it."""

    def __init__(self, b, a, D: int, T: int, strongly_stable: bool,  # pylint: disable=invalid-name
                 packages=()):
        """Constructor.
        """
        self.b = as_splitting_type(b)
        self.a = as_splitting_type(a)
        self.D = D  # pylint: disable=invalid-name
        self.T = T  # pylint: disable=invalid-name
        self.strongly_stable = strongly_stable
        self.packages = list(packages)

    def sort_key(self) -> tuple:
        """Records are listed by (D, T, b, a)."""
        return self.D, self.T, self.b.entries, self.a.entries

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'b': self.b.to_json(), 'a': self.a.to_json(), 'D': self.D, 'T': self.T,
                'strongly_stable': self.strongly_stable,
                'packages': [pkg.to_json() for pkg in self.packages]}

    def __repr__(self) -> str:
        return (f'ComponentRecord(b={self.b}, a={self.a}, D={self.D}, T={self.T}, '
                f'strongly_stable={self.strongly_stable})')


def _e_at(e: SplittingType, index: int) -> float:
    """e_index with -inf left of 1 and +inf right of rank(e)."""
    if index < 1:
        return -math.inf
    if index > e.rank:
        return math.inf
    return e.entry(index)


def _values(e: SplittingType, block: tuple) -> list:
    return [e.entry(i) for i in block]


def validate_package(e, pkg: StablePackage) -> tuple:
    """
    Check a package against e: the blocks are nonempty consecutive intervals
    covering n'+1..rank(e)-m', the block condition e_{P_i,last} < e_{Q_{i+1},1}
    holds and 0 <= delta_i <= min(dP_i, dQ_i). Returns (m, n).
    """
    e = as_splitting_type(e)
    if pkg.m_prime < 0 or pkg.n_prime < 0:
        raise PreconditionError(f'negative m\' or n\' in {pkg}')
    if len(pkg.blocks) % 2:
        raise PreconditionError(f'{pkg} has an odd number of blocks')
    if len(pkg.delta) != pkg.r:
        raise PreconditionError(f'{pkg} needs {pkg.r} delta values, got {len(pkg.delta)}')

    expected = pkg.n_prime + 1
    for block in pkg.blocks:
        if not block:
            raise PreconditionError(f'{pkg} has an empty block')
        if list(block) != list(range(expected, expected + len(block))):
            raise PreconditionError(f'{pkg}: block {block} is not the interval starting at '
                                    f'{expected}')
        expected += len(block)
    if expected - 1 != e.rank - pkg.m_prime:
        raise PreconditionError(f'{pkg}: blocks end at {expected - 1}, expected '
                                f'{e.rank - pkg.m_prime} for rank(e) = {e.rank}')

    for i in range(pkg.r - 1):
        if not e.entry(pkg.P[i][-1]) < e.entry(pkg.Q[i + 1][0]):
            raise PreconditionError(f'{pkg}: block condition e_{pkg.P[i][-1]} < '
                                    f'e_{pkg.Q[i + 1][0]} fails for {e}')
    for i, (bound_p, bound_q) in enumerate(package_bounds(e, pkg)):
        if not 0 <= pkg.delta[i] <= min(bound_p, bound_q):
            raise PreconditionError(f'{pkg}: delta_{i + 1} = {pkg.delta[i]} outside '
                                    f'[0, min({bound_p}, {bound_q})]')

    m = pkg.m_prime + sum(len(block) for block in pkg.P)
    n = pkg.n_prime + sum(len(block) for block in pkg.Q)
    return m, n


def package_bounds(e, pkg: StablePackage) -> list:
    """(dP_i, dQ_i) for each i, math.inf where the neighbouring index leaves e."""
    e = as_splitting_type(e)
    bounds = []
    for p_block, q_block in zip(pkg.P, pkg.Q):
        left = _e_at(e, p_block[0] - 1)
        right = _e_at(e, q_block[-1] + 1)
        bound_p = sum(value - left - 1 for value in _values(e, p_block))
        bound_q = sum(right - value - 1 for value in _values(e, q_block))
        bounds.append((bound_p, bound_q))
    return bounds


def package_pair(e, pkg: StablePackage) -> tuple:
    """Pair(m', n', blocks, delta) without checking the package."""
    e = as_splitting_type(e)
    a = list(e.entries[:pkg.n_prime])
    b = []
    for p_block, q_block, delta in zip(pkg.P, pkg.Q, pkg.delta):
        a.extend(alpha_balance(_values(e, q_block), delta))
        b.extend(beta_balance(_values(e, p_block), delta))
    b.extend(e.entries[e.rank - pkg.m_prime:])
    return SplittingType(b), SplittingType(a)


def package_expand(e, pkg: StablePackage) -> tuple:
    """The stable pair (b, a) of a valid package."""
    validate_package(e, pkg)
    return package_pair(e, pkg)


def is_strongly_stable(e, pkg: StablePackage) -> bool:
    """
    e_{n'} < beta(P_1)_1, alpha(Q_i)_last < beta(P_{i+1})_1 and
    alpha(Q_r)_last < e_{m+n-m'+1}, with infinite sentinels outside e. A package
    without blocks is strongly stable.
    """
    e = as_splitting_type(e)
    validate_package(e, pkg)
    if pkg.r == 0:
        return True
    alphas = [alpha_balance(_values(e, q), d) for q, d in zip(pkg.Q, pkg.delta)]
    betas = [beta_balance(_values(e, p), d) for p, d in zip(pkg.P, pkg.delta)]
    if not _e_at(e, pkg.n_prime) < betas[0][0]:
        return False
    for i in range(pkg.r - 1):
        if not alphas[i][-1] < betas[i + 1][0]:
            return False
    return alphas[-1][-1] < _e_at(e, e.rank - pkg.m_prime + 1)


def stratum_dimensions(e, b, a) -> tuple:
    """(dim Sigma_a(Q), dim Sigma_b(S), hom(b, a))."""
    return (hom_dim(e, a) - end_dim(a), hom_dim(b, e) - end_dim(b), hom_dim(b, a))


def strongly_stable_via_dimension(e, b, a) -> bool:
    """The tangent space test D = T."""
    quotient_side, _, tangent = stratum_dimensions(e, b, a)
    return quotient_side == tangent


def _compositions(total: int, parts: int) -> Iterator[tuple]:
    """Ordered tuples of `parts` positive integers summing to total."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        edges = (0,) + cuts + (total,)
        yield tuple(edges[i + 1] - edges[i] for i in range(parts))


def _bounded_vectors(total, bounds: list) -> Iterator[tuple]:
    """Nonnegative vectors v with v_i <= bounds[i] summing to total."""
    if not bounds:
        if total == 0:
            yield ()
        return
    head, rest = bounds[0], bounds[1:]
    room = sum(rest)
    for value in range(0, int(min(head, total)) + 1):
        if total - value <= room:
            for tail in _bounded_vectors(total - value, rest):
                yield (value,) + tail


def enumerate_packages(e, n: int, d: int, guard_limit: Optional[int] = None) \
        -> Iterator[StablePackage]:
    """Every valid package for quotients of rank n and degree d."""
    e = as_splitting_type(e)
    m = e.rank - n
    limit = resolve_guard_limit(guard_limit)
    visited = 0
    for n_prime in range(0, n + 1):
        head = sum(e.entries[:n_prime])
        for m_prime in range(0, m + 1):
            p_total, q_total = m - m_prime, n - n_prime
            if p_total == 0 and q_total == 0:
                if d == head:
                    yield StablePackage(m_prime, n_prime)
                continue
            if p_total == 0 or q_total == 0:
                continue
            for r in range(1, min(p_total, q_total) + 1):
                for p_sizes in _compositions(p_total, r):
                    for q_sizes in _compositions(q_total, r):
                        blocks = []
                        start = n_prime + 1
                        for p_size, q_size in zip(p_sizes, q_sizes):
                            blocks.append(tuple(range(start, start + p_size)))
                            start += p_size
                            blocks.append(tuple(range(start, start + q_size)))
                            start += q_size
                        shape = StablePackage(m_prime, n_prime, blocks, (0,) * r)
                        if any(e.entry(shape.P[i][-1]) >= e.entry(shape.Q[i + 1][0])
                               for i in range(r - 1)):
                            continue
                        total = d - head - sum(sum(_values(e, q)) for q in shape.Q)
                        if total < 0:
                            continue
                        bounds = package_bounds(e, shape)
                        for delta in _bounded_vectors(total, [min(p, q) for p, q in bounds]):
                            visited += 1
                            if visited > limit:
                                raise GuardExceededError('stable package enumeration',
                                                         visited, limit)
                            yield shape.with_delta(delta)


def enumerate_stable_pairs(e, n: int, d: int, guard_limit: Optional[int] = None,
                           cross_check: bool = False) -> list:
    """
    All stable pairs (b, a) with rank(a) = n and deg(a) = d, one record per
    pair carrying every package producing it, sorted by (D, T, b, a).
    """
    e = as_splitting_type(e)
    if not 1 <= n < e.rank:
        raise PreconditionError(f'need 1 <= n < rank(e) = {e.rank}, got n = {n}')
    log.debug('Enter: e=%s n=%d d=%d', e, n, d)
    found = {}
    for pkg in enumerate_packages(e, n, d, guard_limit):
        b, a = package_pair(e, pkg)
        found.setdefault((b, a), []).append(pkg)

    records = []
    for (b, a), packages in found.items():
        quotient_side, kernel_side, tangent = stratum_dimensions(e, b, a)
        if quotient_side != kernel_side:
            raise CrossCheckError(f'stratum dimensions differ for b={b}, a={a}: '
                                  f'{quotient_side} != {kernel_side}')
        strong = any(is_strongly_stable(e, pkg) for pkg in packages)
        if cross_check and strong != (quotient_side == tangent):
            raise CrossCheckError(f'strongly stable test disagrees with D = T for b={b}, a={a}')
        records.append(ComponentRecord(b, a, quotient_side, tangent, strong, packages))
    records.sort(key=ComponentRecord.sort_key)
    log.debug('Exit: %d stable pairs', len(records))
    return records


def component_census(e, n: int, d: int, guard_limit: Optional[int] = None,
                     cross_check: bool = False) -> list:
    """The strongly stable pairs, one per irreducible component."""
    return [record for record in enumerate_stable_pairs(e, n, d, guard_limit, cross_check)
            if record.strongly_stable]


def generic_cokernel(b, e, guard_limit: Optional[int] = None) -> SplittingType:
    """The most balanced a' with (b, e, a') realizable."""
    b, e = as_splitting_type(b), as_splitting_type(e)
    if b.rank >= e.rank:
        raise PreconditionError(f'generic cokernel needs rank(b) < rank(e), got {b} and {e}')
    if not injection_lf_exists(b, e):
        raise PreconditionError(f'no injection {b} -> {e} with locally free cokernel')
    n = e.rank - b.rank
    candidates = [a for a in weak_compositions(e.degree - b.degree, e.entries[:n],
                                               guard_limit=guard_limit)
                  if is_realizable(Triple(b, e, a))]
    if not candidates:
        raise NotRealizableError(f'no realizable quotient of {e} by {b}')
    return dominance_maximum(candidates, f'cokernels of {b} -> {e}')


def generic_kernel(e, a, guard_limit: Optional[int] = None) -> SplittingType:
    """The most balanced b' with (b', e, a) realizable, by duality."""
    return reverse_negate(generic_cokernel(reverse_negate(a), reverse_negate(e), guard_limit))


def is_stable(e, b, a, guard_limit: Optional[int] = None) -> bool:
    """a is the generic cokernel of b and b the generic kernel of a."""
    try:
        return (generic_cokernel(b, e, guard_limit) == as_splitting_type(a)
                and generic_kernel(e, a, guard_limit) == as_splitting_type(b))
    except (PreconditionError, NotRealizableError):
        return False
