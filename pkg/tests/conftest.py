"""
Shared fixtures: the worked examples and generators for the exhaustive sweeps.
The sweep generators are handed out as fixtures so that every test module can
run them over a reduced domain by default and over the full domain under the
slow marker.
"""
import itertools
import logging
import pytest
from util.betti import BettiDiagram
from util.realizability import Triple
from util.splitting import SplittingType

WORKED_E = SplittingType((0, 4, 5, 6, 8, 12))
CONNECTED_E = SplittingType((0, 4, 10, 13, 15, 20))

# (b, a, D, T) in report order.
WORKED_PAIRS = [
    ((4, 4, 7), (0, 7, 13), 35, 36),
    ((4, 5, 6), (0, 8, 12), 36, 36),
    ((5, 5, 5), (0, 4, 16), 36, 36),
    ((0, 3, 12), (6, 6, 8), 37, 37),
    ((-5, 8, 12), (6, 7, 7), 38, 38),
    ((1, 2, 12), (0, 10, 10), 38, 38),
]


def _ambient_types(max_rank: int, low: int, high: int, min_rank: int = 2):
    for rank in range(min_rank, max_rank + 1):
        for entries in itertools.combinations_with_replacement(range(low, high + 1), rank):
            yield SplittingType(entries)


def _completions(e: SplittingType, n: int, spread: int):
    """Weakly eligible (b, a) with rank(a) = n and entries within spread of e."""
    m = e.rank - n
    low, high = e.entries[0] - spread, e.entries[-1] + spread
    for a in itertools.combinations_with_replacement(range(low, high + 1), n):
        if any(a[i] < e.entries[i] for i in range(n)):
            continue
        rest = e.degree - sum(a)
        for b in itertools.combinations_with_replacement(range(low, high + 1), m):
            if sum(b) != rest or any(b[i] > e.entries[n + i] for i in range(m)):
                continue
            yield SplittingType(b), SplittingType(a)


def _triple_sweep(max_side: int, low: int, high: int, spread: int = 1):
    """Weakly eligible triples with 1 <= m, n <= max_side and e entries in [low, high]."""
    for e in _ambient_types(2 * max_side, low, high):
        for n in range(1, e.rank):
            if n > max_side or e.rank - n > max_side:
                continue
            for b, a in _completions(e, n, spread):
                yield Triple(b, e, a)


def _locus_sweep(max_rank: int, low: int, high: int, extra: int):
    """(e, n, d) with d from the least quotient degree e_1 + ... + e_n upwards."""
    for e in _ambient_types(max_rank, low, high):
        for n in range(1, e.rank):
            least = sum(e.entries[:n])
            for d in range(least, least + extra + 1):
                yield e, n, d


def _diagram_sweep(max_degree: int, max_syzygies: int):
    """Integral diagrams with degrees in [0, max_degree], nonempty columns and
    sum(beta_1) <= max_syzygies that satisfy the rank and degree identities.
    """
    degrees = range(0, max_degree + 1)
    for r1 in range(2, max_syzygies + 1):
        for col1 in itertools.combinations_with_replacement(degrees, r1):
            for r0 in range(1, r1):
                r2 = r1 - r0
                for col0 in itertools.combinations_with_replacement(degrees, r0):
                    target = sum(col1) - sum(col0)
                    for col2 in itertools.combinations_with_replacement(degrees, r2):
                        if sum(col2) != target:
                            continue
                        columns = []
                        for values in (col0, col1, col2):
                            column = {}
                            for degree in values:
                                column[degree] = column.get(degree, 0) + 1
                            columns.append(column)
                        yield BettiDiagram(columns)


@pytest.fixture
def worked_e() -> SplittingType:
    return WORKED_E


@pytest.fixture
def worked_pairs() -> list:
    return WORKED_PAIRS


@pytest.fixture
def connected_e() -> SplittingType:
    return CONNECTED_E


@pytest.fixture
def example_triple() -> Triple:
    """The triple of the worked balancing datum."""
    return Triple((0, 3, 9), (2, 7, 8, 11, 20), (13, 23))


@pytest.fixture
def triple_sweep():
    return _triple_sweep


@pytest.fixture
def locus_sweep():
    return _locus_sweep


@pytest.fixture
def diagram_sweep():
    return _diagram_sweep


@pytest.fixture(autouse=True)
def _quiet_logging():
    logging.getLogger().setLevel(logging.WARNING)
    yield
