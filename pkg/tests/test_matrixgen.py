import pytest
from util.errors import NotRealizableError, PreconditionError
from util.matrixgen import (RING, X, Y, HomogMatrix, build_kernel_matrix, build_quotient_matrix,
                            certify_ses, compose_is_zero, entry_degrees_ok,
                            homog_matrix_from_lists, is_injective_lf, is_surjective_bundle_map,
                            monomial, polynomial_text, render)
from util.realizability import Triple, is_realizable

EULER = Triple((-1,), (0, 0), (1,))


def test_euler_matrices():
    G = build_quotient_matrix(EULER)
    C = build_kernel_matrix(EULER)
    assert G == homog_matrix_from_lists((1,), (0, 0), [[X, Y]])
    assert C == homog_matrix_from_lists((0, 0), (-1,), [[Y], [-X]])
    assert compose_is_zero(G, C)


def test_euler_certificate():
    certificate = certify_ses(EULER)
    assert certificate.valid
    assert certificate.to_json()['G']['entries'] == [[1, 1, [[1, 0, 1]]], [1, 2, [[0, 1, 1]]]]


def test_example_certificate(example_triple):
    for fast_path in (True, False):
        certificate = certify_ses(example_triple, fast_path=fast_path)
        assert certificate.valid, certificate.checks


def test_split_triple_certificate():
    certificate = certify_ses(Triple((5,), (1, 5, 7), (1, 7)))
    assert certificate.valid


def test_non_realizable_triple_has_no_matrices():
    with pytest.raises(NotRealizableError):
        certify_ses(Triple((1, 1), (0, 0, 2, 2), (1, 1)))


def test_minor_tests():
    G = homog_matrix_from_lists((2,), (0, 0), [[X ** 2, X * Y]])
    assert not is_surjective_bundle_map(G)
    assert is_surjective_bundle_map(homog_matrix_from_lists((2,), (0, 0), [[X ** 2, Y ** 2]]))
    assert is_injective_lf(homog_matrix_from_lists((0, 0), (-1,), [[Y], [-X]]), fast_path=False)
    with pytest.raises(PreconditionError):
        is_surjective_bundle_map(homog_matrix_from_lists((1, 1), (0,), [[X], [Y]]))
    with pytest.raises(PreconditionError):
        is_injective_lf(homog_matrix_from_lists((0,), (-1, -1), [[X, Y]]))


def test_entry_degrees():
    assert entry_degrees_ok(homog_matrix_from_lists((1,), (0, 0), [[X, Y]]))
    assert not entry_degrees_ok(homog_matrix_from_lists((2,), (0, 0), [[X, Y]]))


def test_compose_needs_matching_shapes():
    G = homog_matrix_from_lists((1,), (0, 0), [[X, Y]])
    with pytest.raises(PreconditionError):
        compose_is_zero(G, HomogMatrix((0, 1), (-1,)))


def test_monomial_and_text():
    assert monomial(2, 1, 3) == 3 * X ** 2 * Y
    with pytest.raises(PreconditionError):
        monomial(-1, 0)
    assert polynomial_text(X ** 2 * Y - 3 * Y ** 3) == 'x^2*y - 3*y^3'
    assert polynomial_text(RING.zero) == '0'
    assert polynomial_text(-X) == '-x'


def test_render():
    C = homog_matrix_from_lists((0, 0), (-1,), [[Y], [-X]])
    assert render(C) == '[  y ]\n[ -x ]'
    assert render(C, 'json') == [[1, 1, [[0, 1, 1]]], [2, 1, [[1, 0, -1]]]]
    with pytest.raises(PreconditionError):
        render(C, 'latex')


def test_entries_outside_the_matrix():
    G = HomogMatrix((1,), (0, 0))
    with pytest.raises(PreconditionError):
        G[2, 1] = X


def _certificates_valid(triples):
    checked = 0
    for t in triples:
        if is_realizable(t):
            certificate = certify_ses(t)
            assert certificate.valid, (t, certificate.checks)
            checked += 1
    assert checked


def test_certificates_on_small_triples(triple_sweep):
    _certificates_valid(triple_sweep(2, 0, 2))


@pytest.mark.slow
def test_certificates_on_desk_scale_triples(triple_sweep):
    _certificates_valid(triple_sweep(3, 0, 4, spread=2))
