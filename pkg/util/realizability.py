#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Decide whether a triple (b, e, a) of splitting types fits in a short exact
sequence 0 -> O(b) -> O(e) -> O(a) -> 0.

Indices follow the formulas: mu runs over the kernel summands 1..m, nu over the
quotient summands 1..n and e is indexed 1..m+n.
"""
import logging
from typing import Optional
from util.errors import CrossCheckError, PreconditionError
from util.splitting import SplittingType, as_splitting_type, reverse_negate

log = logging.getLogger(__name__)


class Triple:
    """
    Candidate (kernel, ambient, quotient) splitting types. Ranks are not required
    to add up; the eligibility checks report that.
    """

    def __init__(self, b, e, a):
        """Constructor.
        """
        self._b = as_splitting_type(b)
        self._e = as_splitting_type(e)
        self._a = as_splitting_type(a)

    @property
    def b(self) -> SplittingType:
        """Kernel splitting type, rank m."""
        return self._b

    @property
    def e(self) -> SplittingType:
        """Ambient splitting type, rank m + n."""
        return self._e

    @property
    def a(self) -> SplittingType:
        """Quotient splitting type, rank n."""
        return self._a

    @property
    def m(self) -> int:
        """Rank of the kernel."""
        return self._b.rank

    @property
    def n(self) -> int:
        """Rank of the quotient."""
        return self._a.rank

    def ranks_match(self) -> bool:
        """rank(b) + rank(a) = rank(e)"""
        return self.m + self.n == self._e.rank

    def dual(self) -> 'Triple':
        """The dual sequence 0 -> O(a)^* -> O(e)^* -> O(b)^* -> 0."""
        return Triple(reverse_negate(self._a), reverse_negate(self._e), reverse_negate(self._b))

    def repeated(self, k: int) -> 'Triple':
        """Direct sum of k copies of the sequence."""
        return Triple([x for x in self._b for _ in range(k)],
                      [x for x in self._e for _ in range(k)],
                      [x for x in self._a for _ in range(k)])

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'b': self._b.to_json(), 'e': self._e.to_json(), 'a': self._a.to_json()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, Triple):
            return NotImplemented
        return (self._b, self._e, self._a) == (other._b, other._e, other._a)

    def __hash__(self) -> int:
        return hash((self._b, self._e, self._a))

    def __repr__(self) -> str:
        return f'Triple(b={self._b}, e={self._e}, a={self._a})'


def as_triple(value) -> Triple:
    """Accept a Triple or a (b, e, a) sequence."""
    if isinstance(value, Triple):
        return value
    b, e, a = value
    return Triple(b, e, a)


class Failure:
    """The condition a non-realizable triple violates.

    kind is one of rank, degree, hong_larson_surjection, hong_larson_injection,
    weak_eligibility or S_condition. For S_condition (mu, nu, value) is the
    lexicographically first failing S(mu, nu) and violations lists all of them.
    """

    def __init__(self, kind: str, detail: str, mu: Optional[int] = None,
                 nu: Optional[int] = None, value: Optional[int] = None,
                 violations: Optional[list] = None):
        """Constructor.
        """
        self.kind = kind
        self.detail = detail
        self.mu = mu
        self.nu = nu
        self.value = value
        self.violations = list(violations or [])

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'kind': self.kind, 'mu': self.mu, 'nu': self.nu, 'value': self.value,
                'detail': self.detail, 'violations': [list(v) for v in self.violations]}

    def __repr__(self) -> str:
        return f'Failure({self.kind}: {self.detail})'


class Verdict:
    """Answer of realizable() together with its witness: a BalancingDatum when
    true, a Failure when false.
    """

    def __init__(self, value: bool, witness):
        """Constructor.
        """
        self.value = value
        self.witness = witness

    def __bool__(self) -> bool:
        return self.value

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'realizable': self.value,
                'witness': None if self.witness is None else self.witness.to_json()}

    def __repr__(self) -> str:
        return f'Verdict({self.value}, {self.witness!r})'


class QuantityTables:
    """
    The integer tables A, B, S, T of a triple, stored as dicts keyed by (mu, nu):

        A(mu, nu) = a_nu - e_{mu+nu}                     1 <= mu <= m, 1 <= nu <= n
        B(mu, nu) = e_{mu+nu-1} - b_mu                   1 <= mu <= m, 1 <= nu <= n
        S(mu, nu) = sum_{i>=nu} a_i + sum_{i>=mu} b_i - sum_{i>=mu+nu-1} e_i
                                                         1 <= mu <= m+1, 1 <= nu <= n+1
        T(mu, nu) = sum_{i<=nu} a_i + sum_{i<=mu} b_i - sum_{i<=mu+nu} e_i
                                                         0 <= mu <= m, 0 <= nu <= n

    S(mu+1, nu+1) + T(mu, nu) equals deg a + deg b - deg e, kept as degree_defect,
    so the two tables are complementary exactly when the degrees balance.
    """

    def __init__(self, triple: Triple):
        """Constructor.
        """
        if not triple.ranks_match():
            raise PreconditionError(f'rank(b) + rank(a) != rank(e) for {triple}')
        b, e, a = triple.b, triple.e, triple.a
        m, n = triple.m, triple.n
        pa, pb, pe = a.prefix_sums(), b.prefix_sums(), e.prefix_sums()
        self.m = m
        self.n = n
        self.degree_defect = a.degree + b.degree - e.degree
        self.A = {(mu, nu): a[nu - 1] - e[mu + nu - 1]
                  for mu in range(1, m + 1) for nu in range(1, n + 1)}
        self.B = {(mu, nu): e[mu + nu - 2] - b[mu - 1]
                  for mu in range(1, m + 1) for nu in range(1, n + 1)}
        self.S = {(mu, nu): (pa[n] - pa[nu - 1]) + (pb[m] - pb[mu - 1])
                  - (pe[m + n] - pe[mu + nu - 2])
                  for mu in range(1, m + 2) for nu in range(1, n + 2)}
        self.T = {(mu, nu): pa[nu] + pb[mu] - pe[mu + nu]
                  for mu in range(0, m + 1) for nu in range(0, n + 1)}

    def to_json(self) -> dict:
        """JSON encoding with "mu,nu" keys."""
        def encode(table):
            return {f'{mu},{nu}': value for (mu, nu), value in sorted(table.items())}
        return {'A': encode(self.A), 'B': encode(self.B), 'S': encode(self.S),
                'T': encode(self.T), 'degree_defect': self.degree_defect}


def quantities(t) -> QuantityTables:
    """The A, B, S, T tables of a triple."""
    return QuantityTables(as_triple(t))


def _h_from_tables(tables: QuantityTables) -> list:
    profile = []
    for mu in range(1, tables.m + 1):
        h = 1
        for nu in range(tables.n + 1, 1, -1):
            if tables.S[(mu, nu)] >= 0:
                h = nu
                break
        profile.append(h)
    return profile


def h_profile(t) -> list:
    """h_mu = min{nu : S(mu, nu') < 0 for all nu' > nu}, for mu = 1..m."""
    return _h_from_tables(quantities(t))


def surjection_exists(e, a) -> bool:
    """Whether some map O(e) -> O(a) is surjective: for every i either
    a_i >= e_{i+1} or a_j = e_j for all j <= i.
    """
    e, a = as_splitting_type(e), as_splitting_type(a)
    if a.rank >= e.rank:
        raise PreconditionError(f'surjection test needs rank(a) < rank(e), got {a} and {e}')
    for i in range(1, a.rank + 1):
        if a.entry(i) >= e.entry(i + 1):
            continue
        if all(a.entry(j) == e.entry(j) for j in range(1, i + 1)):
            continue
        return False
    return True


def injection_lf_exists(b, e) -> bool:
    """Whether some map O(b) -> O(e) is injective with locally free cokernel.
    This is the dual of the surjection test.
    """
    b, e = as_splitting_type(b), as_splitting_type(e)
    if b.rank >= e.rank:
        raise PreconditionError(f'injection test needs rank(b) < rank(e), got {b} and {e}')
    return surjection_exists(reverse_negate(e), reverse_negate(b))


def _basic_failure(t: Triple) -> Optional[Failure]:
    """rank, degree and entrywise bounds, in that order."""
    if not t.ranks_match():
        return Failure('rank', f'rank(b) + rank(a) = {t.m + t.n} != rank(e) = {t.e.rank}')
    if t.b.degree + t.a.degree != t.e.degree:
        return Failure('degree', f'deg(b) + deg(a) = {t.b.degree + t.a.degree} '
                                 f'!= deg(e) = {t.e.degree}')
    for i in range(1, t.n + 1):
        if t.a.entry(i) < t.e.entry(i):
            return Failure('weak_eligibility', f'a_{i} = {t.a.entry(i)} < e_{i} = {t.e.entry(i)}',
                           nu=i, value=t.a.entry(i) - t.e.entry(i))
    for i in range(1, t.m + 1):
        if t.b.entry(i) > t.e.entry(t.n + i):
            return Failure('weak_eligibility',
                           f'b_{i} = {t.b.entry(i)} > e_{t.n + i} = {t.e.entry(t.n + i)}',
                           mu=i, value=t.e.entry(t.n + i) - t.b.entry(i))
    return None


def weakly_eligible(t) -> bool:
    """Rank sum, degree sum, a_i >= e_i and b_i <= e_{n+i}."""
    return _basic_failure(as_triple(t)) is None


def eligibility_failure(t) -> Optional[Failure]:
    """The Hong-Larson eligibility test: rank, degree, existence of a surjection
    O(e) -> O(a) and of an injection O(b) -> O(e) with locally free cokernel.
    Returns None when the triple is eligible.
    """
    t = as_triple(t)
    if not t.ranks_match():
        return Failure('rank', f'rank(b) + rank(a) = {t.m + t.n} != rank(e) = {t.e.rank}')
    if t.b.degree + t.a.degree != t.e.degree:
        return Failure('degree', f'deg(b) + deg(a) = {t.b.degree + t.a.degree} '
                                 f'!= deg(e) = {t.e.degree}')
    if t.m == 0:
        if t.a != t.e:
            return Failure('hong_larson_surjection', f'{t.e} -> {t.a} is not an isomorphism')
        return None
    if t.n == 0:
        if t.b != t.e:
            return Failure('hong_larson_injection', f'{t.b} -> {t.e} is not an isomorphism')
        return None
    if not surjection_exists(t.e, t.a):
        return Failure('hong_larson_surjection', f'no surjection {t.e} -> {t.a}')
    if not injection_lf_exists(t.b, t.e):
        return Failure('hong_larson_injection',
                       f'no injection {t.b} -> {t.e} with locally free cokernel')
    return None


def necessary_condition_violations(t, tables: Optional[QuantityTables] = None) -> list:
    """
    Failures of the S-condition: for each mu having some A(mu, nu') < 0, with nu
    the largest such, S(mu, nu + 1) must be >= 0; for each nu having some
    B(mu', nu) < 0, with mu the smallest such, S(mu, nu + 1) must be >= 0.
    Returns the sorted (mu, nu, S) triples that fail.
    """
    t = as_triple(t)
    tables = tables or quantities(t)
    found = set()
    for mu in range(1, t.m + 1):
        negative = [nu for nu in range(1, t.n + 1) if tables.A[(mu, nu)] < 0]
        if negative:
            nu = max(negative)
            if tables.S[(mu, nu + 1)] < 0:
                found.add((mu, nu + 1, tables.S[(mu, nu + 1)]))
    for nu in range(1, t.n + 1):
        negative = [mu for mu in range(1, t.m + 1) if tables.B[(mu, nu)] < 0]
        if negative:
            mu = min(negative)
            if tables.S[(mu, nu + 1)] < 0:
                found.add((mu, nu + 1, tables.S[(mu, nu + 1)]))
    return sorted(found)


def _threshold_condition(tables: QuantityTables, profile: list) -> bool:
    """A(mu, nu) >= 0 and B(mu, nu) >= 0 whenever nu >= h_mu."""
    for mu, h in enumerate(profile, start=1):
        for nu in range(h, tables.n + 1):
            if tables.A[(mu, nu)] < 0 or tables.B[(mu, nu)] < 0:
                return False
    return True


def is_realizable(t) -> bool:
    """Boolean form of realizable(), without building a witness."""
    t = as_triple(t)
    if _basic_failure(t) is not None:
        return False
    tables = quantities(t)
    return _threshold_condition(tables, _h_from_tables(tables))


def realizable(t, cross_check: bool = False) -> Verdict:
    """
    Decide realizability by the threshold criterion on the A and B tables. With
    cross_check the S-condition is evaluated too and the two must agree.
    A positive verdict carries a balancing datum, a negative one the Failure.
    """
    # pylint: disable=import-outside-toplevel
    from util.balancing import construct_datum
    t = as_triple(t)
    failure = _basic_failure(t)
    if failure is not None:
        log.debug('%s: %s', t, failure)
        return Verdict(False, failure)

    tables = quantities(t)
    holds = _threshold_condition(tables, _h_from_tables(tables))
    violations = necessary_condition_violations(t, tables) if (cross_check or not holds) else []
    if cross_check and holds == bool(violations):
        raise CrossCheckError(f'{t}: threshold criterion says {holds} but the S-condition '
                              f'violations are {violations}')
    if holds:
        return Verdict(True, construct_datum(t))
    if not violations:
        raise CrossCheckError(f'{t}: threshold criterion fails without any S-condition violation')
    mu, nu, value = violations[0]
    return Verdict(False, Failure('S_condition', f'S({mu},{nu}) = {value} < 0',
                                  mu=mu, nu=nu, value=value, violations=violations))


def quotient_head(t) -> int:
    """n' = max{nu : a_i = e_i for all i <= nu}."""
    t = as_triple(t)
    head = 0
    while head < t.n and t.a.entry(head + 1) == t.e.entry(head + 1):
        head += 1
    return head


def kernel_tail(t) -> int:
    """m' = number of trailing i with b_i = e_{n+i}."""
    t = as_triple(t)
    tail = 0
    while tail < t.m and t.b.entry(t.m - tail) == t.e.entry(t.n + t.m - tail):
        tail += 1
    return tail
