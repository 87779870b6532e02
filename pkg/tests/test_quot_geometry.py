import pytest
from util.errors import PreconditionError
from util.quot_geometry import (connectedness_certificate, corollary_irreducible, irreducible,
                                iterative_balancing, most_balanced_kernel,
                                most_balanced_quotient, verify_certificate)
from util.splitting import SplittingType


def _pair(b, a):
    return SplittingType(b), SplittingType(a)


def test_irreducible_example():
    report = irreducible((1, 7, 8, 9, 20), 3, 20, cross_check=True)
    assert report.verdict
    assert report.a == SplittingType((1, 9, 10))
    assert report.b == SplittingType((5, 20))
    assert report.census_size == 1
    assert report.balanced_condition
    assert not report.corollary


@pytest.mark.parametrize('e, n, d, b, a, n_prime, m_prime', [
    ((0, 0, 1), 2, 1, (0,), (0, 1), 1, 0),
    ((0, 1, 1), 1, 1, (0, 1), (1,), 0, 1),
    ((0, 0, 0, 1), 3, 1, (0,), (0, 0, 1), 2, 0),
])
def test_balanced_condition_with_equal_neighbours(e, n, d, b, a, n_prime, m_prime):
    report = irreducible(e, n, d, cross_check=True)
    assert report.verdict and report.balanced_condition
    assert (report.b, report.a) == _pair(b, a)
    assert (report.n_prime, report.m_prime) == (n_prime, m_prime)
    assert report.census_size == 1


def test_reducible_example(worked_e):
    report = irreducible(worked_e, 3, 20, cross_check=True)
    assert not report.verdict
    assert report.balanced_condition is False
    assert report.census_size == 5
    assert report.to_json()['irreducible'] is False


def test_most_balanced_quotient(connected_e):
    assert most_balanced_quotient(connected_e, 3, 40) == SplittingType((13, 13, 14))
    assert most_balanced_quotient((1, 7, 8, 9, 20), 3, 20) == SplittingType((1, 9, 10))
    assert most_balanced_kernel((1, 7, 8, 9, 20), 2, 25) == SplittingType((5, 20))


def test_no_locally_free_quotient():
    with pytest.raises(PreconditionError):
        most_balanced_quotient((0, 5, 5), 1, 1)
    with pytest.raises(PreconditionError):
        most_balanced_quotient((0, 5, 5), 3, 1)


def test_corollary_bound():
    assert corollary_irreducible((0, 0, 1), 1, 0)
    assert corollary_irreducible((0, 1, 1), 1, 5)
    assert not corollary_irreducible((0, 4, 5, 6, 8, 12), 3, 20)


def test_iterative_balancing_chain(connected_e):
    b, a, chain = iterative_balancing(connected_e, (-8, 10, 20), (8, 13, 19), order='kernel_first')
    assert chain == [_pair((-8, 10, 20), (8, 13, 19)),
                     _pair((-4, 6, 20), (8, 13, 19)),
                     _pair((-4, 6, 20), (8, 16, 16))]
    assert (b, a) == _pair((-4, 6, 20), (8, 16, 16))


def test_iterative_balancing_steps_change_one_side(connected_e):
    _, _, chain = iterative_balancing(connected_e, (-8, 10, 20), (8, 13, 19))
    for before, after in zip(chain, chain[1:]):
        assert (before[0] == after[0]) != (before[1] == after[1])


def test_iterative_balancing_preconditions(connected_e):
    with pytest.raises(PreconditionError):
        iterative_balancing(connected_e, (-8, 10, 20), (8, 13, 19), order='sideways')
    with pytest.raises(PreconditionError):
        iterative_balancing((0, 0, 2, 2), (1, 1), (1, 1))


def test_connectedness_example(connected_e):
    certificate = connectedness_certificate(connected_e, 3, 40, exhaustive=True,
                                            order='kernel_first')
    assert certificate.root == _pair((-13, 15, 20), (13, 13, 14))
    assert certificate.connected
    states = certificate.states()
    for pair in (((-8, 10, 20), (8, 13, 19)), ((-4, 6, 20), (8, 13, 19)),
                 ((-4, 6, 20), (8, 16, 16)), ((-5, 7, 20), (9, 15, 16))):
        assert _pair(*pair) in states
    kinds = {witness.kind for witness in certificate.edges}
    assert 'to_one_block' in kinds
    assert 'killing_higher_delta' in kinds
    assert verify_certificate(connected_e, certificate)
    data = certificate.to_json()
    assert data['connected'] is True
    assert data['root'] == {'b': [-13, 15, 20], 'a': [13, 13, 14]}


def test_connectedness_default_order(connected_e):
    certificate = connectedness_certificate(connected_e, 3, 40)
    assert certificate.connected
    assert verify_certificate(connected_e, certificate)


def test_tampered_certificate_fails(connected_e):
    certificate = connectedness_certificate(connected_e, 3, 40, exhaustive=True)
    witness = next(w for w in certificate.edges if w.kind == 'iterative_balancing')
    witness.target = (witness.source[0], SplittingType((-1, 0, 41)))
    assert not verify_certificate(connected_e, certificate)


def test_irreducible_locus_has_single_node():
    certificate = connectedness_certificate((1, 7, 8, 9, 20), 3, 20)
    assert len(certificate.nodes) == 1
    assert verify_certificate((1, 7, 8, 9, 20), certificate)


def _feasible(cases):
    for e, n, d in cases:
        try:
            most_balanced_quotient(e, n, d)
        except PreconditionError:
            continue
        yield e, n, d


def _three_way_agreement(cases):
    checked = 0
    for e, n, d in _feasible(cases):
        report = irreducible(e, n, d, cross_check=True)
        assert not report.corollary or report.verdict
        checked += 1
    assert checked


def _certificates_verify(cases):
    checked = 0
    for e, n, d in _feasible(cases):
        certificate = connectedness_certificate(e, n, d)
        assert certificate.connected
        assert verify_certificate(e, certificate)
        checked += 1
    assert checked


def test_irreducibility_criteria_agree(locus_sweep):
    _three_way_agreement(locus_sweep(4, 0, 2, 4))


def test_connectivity_on_small_loci(locus_sweep):
    _certificates_verify(locus_sweep(4, 0, 2, 4))


@pytest.mark.slow
def test_irreducibility_criteria_agree_desk_scale(locus_sweep):
    _three_way_agreement(locus_sweep(5, 0, 3, 6))


@pytest.mark.slow
def test_connectivity_desk_scale(locus_sweep):
    _certificates_verify(locus_sweep(5, 0, 3, 6))
