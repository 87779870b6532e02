from fractions import Fraction
import pytest
from hypothesis import given, strategies as st
from util.betti import (BettiDiagram, add, check_identities, decompose, diagram_to_triple,
                        fraction_json, in_cone, is_integral, lattice_point_realizable,
                        pure_diagram, scale, triple_to_diagram)
from util.errors import PreconditionError
from util.realizability import Triple, is_realizable

KOSZUL = BettiDiagram([{0: 1}, {1: 2}, {2: 1}])


def _values(beta):
    return tuple(beta.get(i, beta.degrees(i)[0]) for i in range(3))


@pytest.mark.parametrize('degrees, expected', [
    ((0, 1, 2), (1, 2, 1)),
    ((0, 1, 3), (2, 3, 1)),
    ((0, 2, 3), (1, 3, 2)),
    ((0, 1, 4), (3, 4, 1)),
    ((1, 2, 4), (2, 3, 1)),
])
def test_pure_diagrams(degrees, expected):
    beta = pure_diagram(*degrees)
    assert _values(beta) == expected
    assert check_identities(beta)


def test_pure_diagram_needs_increasing_degrees():
    with pytest.raises(PreconditionError):
        pure_diagram(0, 2, 1)


def test_koszul():
    parts = decompose(KOSZUL)
    assert len(parts) == 1
    assert parts[0][0] == 1 and parts[0][1] == (0, 1, 2)
    assert diagram_to_triple(KOSZUL) == Triple((-2,), (-1, -1), (0,))
    assert lattice_point_realizable(KOSZUL)


def test_sum_of_two_pure_diagrams():
    beta = add(pure_diagram(0, 1, 2), pure_diagram(0, 1, 3))
    assert beta == BettiDiagram([{0: 3}, {1: 5}, {2: 1, 3: 1}])
    assert [(c, d) for c, d, _ in decompose(beta)] == [(1, (0, 1, 2)), (1, (0, 1, 3))]


def test_not_in_cone():
    beta = BettiDiagram([{2: 1}, {1: 1, 4: 1}, {3: 1}])
    assert check_identities(beta)
    assert not in_cone(beta)
    assert not is_realizable(diagram_to_triple(beta))
    assert not lattice_point_realizable(beta)


def test_example_triple_diagram_is_in_cone(example_triple):
    beta = triple_to_diagram(example_triple)
    parts = decompose(beta)
    assert parts is not None
    assert [c for c, _, _ in parts] == [Fraction(1, 14), Fraction(11, 84), Fraction(1, 60),
                                        Fraction(1, 20), Fraction(2, 5), Fraction(2, 15),
                                        Fraction(1, 39), Fraction(1, 13)]
    assert diagram_to_triple(beta) == example_triple
    assert lattice_point_realizable(beta)


def test_identities_are_required():
    with pytest.raises(PreconditionError):
        decompose(BettiDiagram([{0: 1}, {1: 1}, {}]))


def test_rational_diagrams():
    half = scale(KOSZUL, Fraction(1, 2))
    assert not is_integral(half)
    assert in_cone(half)
    with pytest.raises(PreconditionError):
        diagram_to_triple(half)
    with pytest.raises(PreconditionError):
        lattice_point_realizable(half)
    with pytest.raises(PreconditionError):
        scale(KOSZUL, -1)


def test_json():
    half = scale(KOSZUL, Fraction(1, 2))
    assert half.to_json() == {'0': {'0': '1/2'}, '1': {'1': 1}, '2': {'2': '1/2'}}
    assert BettiDiagram.from_json(half.to_json()) == half
    assert fraction_json(Fraction(4, 2)) == 2
    with pytest.raises(PreconditionError):
        BettiDiagram.from_json({'0': {'0': 'one'}})
    with pytest.raises(PreconditionError):
        BettiDiagram([{0: -1}, {}, {}])


@given(st.lists(st.tuples(st.integers(0, 6), st.integers(1, 4), st.integers(1, 4),
                          st.integers(1, 3)), min_size=1, max_size=4))
def test_positive_combinations_of_pure_diagrams_are_in_cone(summands):
    beta = BettiDiagram()
    for start, gap1, gap2, weight in summands:
        beta = add(beta, scale(pure_diagram(start, start + gap1, start + gap1 + gap2), weight))
    assert check_identities(beta)
    assert in_cone(beta)


def _lattice_points_realizable(diagrams):
    checked = 0
    for beta in diagrams:
        if not in_cone(beta):
            continue
        assert lattice_point_realizable(beta), beta
        for k in (2, 3):
            assert lattice_point_realizable(scale(beta, k))
        checked += 1
    assert checked


def test_small_lattice_points_are_realizable(diagram_sweep):
    _lattice_points_realizable(diagram_sweep(3, 4))


@pytest.mark.slow
def test_lattice_points_are_realizable_desk_scale(diagram_sweep):
    _lattice_points_realizable(diagram_sweep(4, 6))
