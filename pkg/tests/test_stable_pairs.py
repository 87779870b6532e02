import itertools
import pytest
from util.errors import GuardExceededError, NotRealizableError, PreconditionError
from util.quot_geometry import ORDERS, iterative_balancing
from util.realizability import Triple, is_realizable
from util.splitting import (SplittingType, end_dim, hom_dim, more_balanced_geq,
                            weak_compositions)
from util.stable_pairs import (ComponentRecord, StablePackage, component_census,
                               enumerate_packages, enumerate_stable_pairs, generic_cokernel,
                               generic_kernel, is_stable, is_strongly_stable, package_bounds,
                               package_expand, strongly_stable_via_dimension, validate_package)

SINGLES = ((1,), (2,), (3,), (4,), (5,), (6,))


def test_golden_stable_pairs(worked_e, worked_pairs):
    records = enumerate_stable_pairs(worked_e, 3, 20, cross_check=True)
    assert [(r.b.entries, r.a.entries, r.D, r.T) for r in records] == worked_pairs
    assert [r.strongly_stable for r in records] == [False, True, True, True, True, True]


def test_golden_census(worked_e, worked_pairs):
    census = component_census(worked_e, 3, 20)
    assert [(r.b.entries, r.a.entries) for r in census] == [(b, a) for b, a, _, _ in worked_pairs[1:]]
    assert [r.D for r in census] == [36, 36, 37, 38, 38]


def test_stratum_dimension_of_balanced_pair(worked_e):
    assert hom_dim(worked_e, (0, 8, 12)) - end_dim((0, 8, 12)) == 36
    assert strongly_stable_via_dimension(worked_e, (4, 5, 6), (0, 8, 12))
    assert not strongly_stable_via_dimension(worked_e, (4, 4, 7), (0, 7, 13))


def test_package_of_the_weak_pair(worked_e):
    pkg = StablePackage(0, 1, ((2, 3), (4,), (5,), (6,)), (1, 1))
    assert package_bounds(worked_e, pkg) == [(7, 1), (1, float('inf'))]
    assert package_expand(worked_e, pkg) == (SplittingType((4, 4, 7)), SplittingType((0, 7, 13)))
    assert not is_strongly_stable(worked_e, pkg)


def test_single_block_packages(connected_e):
    for delta, expected in (((1, 1, 1), ((-1, 9, 14), (5, 14, 21))),
                            ((2, 1, 0), ((-2, 9, 15), (6, 14, 20))),
                            ((3, 0, 0), ((-3, 10, 15), (7, 13, 20)))):
        pkg = StablePackage(0, 0, SINGLES, delta)
        assert validate_package(connected_e, pkg) == (3, 3)
        b, a = package_expand(connected_e, pkg)
        assert (b.entries, a.entries) == expected


def test_invalid_packages(connected_e):
    with pytest.raises(PreconditionError):
        validate_package(connected_e, StablePackage(0, 0, SINGLES, (1, 2, 1)))
    with pytest.raises(PreconditionError):
        validate_package(connected_e, StablePackage(0, 0, SINGLES[:5], (1, 1, 1)))
    with pytest.raises(PreconditionError):
        validate_package(connected_e, StablePackage(0, 0, ((1,), (3,), (2,), (4,), (5,), (6,)),
                                                    (0, 0, 0)))
    with pytest.raises(PreconditionError):
        validate_package(connected_e, StablePackage(0, 0, SINGLES, (1, 1)))


def test_package_without_blocks_is_strongly_stable():
    e = SplittingType((0, 1, 2))
    pkg = StablePackage(2, 1)
    assert validate_package(e, pkg) == (2, 1)
    assert is_strongly_stable(e, pkg)


def test_package_json():
    pkg = StablePackage(0, 1, ((2, 3), (4,), (5,), (6,)), (1, 1))
    data = pkg.to_json()
    assert data == {'m_prime': 0, 'n_prime': 1, 'blocks': [[2, 3], [4], [5], [6]],
                    'delta': [1, 1]}
    assert StablePackage.from_json(data) == pkg


def test_record_json(worked_e):
    record = enumerate_stable_pairs(worked_e, 3, 20)[1]
    assert isinstance(record, ComponentRecord)
    data = record.to_json()
    assert data['b'] == [4, 5, 6] and data['a'] == [0, 8, 12]
    assert data['D'] == 36 and data['strongly_stable'] is True
    assert data['packages']


def test_generic_kernel_and_cokernel(worked_e, worked_pairs):
    for b, a, _, _ in worked_pairs:
        assert generic_cokernel(b, worked_e) == SplittingType(a)
        assert generic_kernel(worked_e, a) == SplittingType(b)
        assert is_stable(worked_e, b, a)


def test_is_stable_rejects_other_pairs(worked_e):
    assert not is_stable(worked_e, (4, 4, 7), (0, 8, 12))
    assert not is_stable(worked_e, (4, 5, 6), (0, 7, 13))


def test_generic_cokernel_preconditions():
    with pytest.raises(PreconditionError):
        generic_cokernel((1, 1), (0, 0, 2, 2))
    with pytest.raises(PreconditionError):
        generic_cokernel((0, 0), (0, 0))
    assert generic_cokernel((-1,), (0, 0)) == SplittingType((1,))


def test_bad_rank():
    with pytest.raises(PreconditionError):
        enumerate_stable_pairs((0, 1), 2, 1)


def test_guard(worked_e):
    with pytest.raises(GuardExceededError):
        enumerate_stable_pairs(worked_e, 3, 20, guard_limit=1)


def test_component_pairs_trade_balance_between_sides():
    pairs = {(r.b, r.a) for r in component_census((0, 0, 0, 2), 2, 2)}
    balanced_quotient = (SplittingType((-2, 2)), SplittingType((1, 1)))
    split = (SplittingType((0, 0)), SplittingType((0, 2)))
    assert {balanced_quotient, split} <= pairs
    assert more_balanced_geq((1, 1), (0, 2))
    assert more_balanced_geq((0, 0), (-2, 2))


def test_packages_match_brute_force_stability(worked_e):
    expected = set()
    for a in weak_compositions(20, worked_e.entries[:3]):
        try:
            b = generic_kernel(worked_e, a)
        except (PreconditionError, NotRealizableError):
            continue
        if generic_cokernel(b, worked_e) == a:
            expected.add((b, a))
    found = {(r.b, r.a) for r in enumerate_stable_pairs(worked_e, 3, 20)}
    assert found == expected


def _census_consistent(cases):
    checked = 0
    for e, n, d in cases:
        records = enumerate_stable_pairs(e, n, d, cross_check=True)
        for record in records:
            assert is_realizable(Triple(record.b, e, record.a))
            for pkg in record.packages:
                assert package_expand(e, pkg) == (record.b, record.a)
            for order in ORDERS:
                b, a, chain = iterative_balancing(e, record.b, record.a, order=order)
                assert (b, a) == (record.b, record.a) and len(chain) == 1
            checked += 1
        census = [record for record in records if record.strongly_stable]
        for first, second in itertools.permutations(census, 2):
            assert not (more_balanced_geq(first.a, second.a)
                        and more_balanced_geq(first.b, second.b))
        for pkg in enumerate_packages(e, n, d):
            assert validate_package(e, pkg) == (e.rank - n, n)
    assert checked


def test_census_consistent_on_small_loci(locus_sweep):
    _census_consistent(locus_sweep(4, 0, 2, 4))


@pytest.mark.slow
def test_census_consistent_on_desk_scale_loci(locus_sweep):
    _census_consistent(locus_sweep(5, 0, 3, 6))
