import numpy as np
import pytest
from util.errors import GuardExceededError, PreconditionError
from util.oracle import (OracleConfig, exhaustive_kernels, exhaustive_quotients,
                         generic_cokernel_split_numeric, generic_kernel_split_numeric,
                         kernel_profile, random_map)
from util.splitting import SplittingType, dominance_maximum
from util.stable_pairs import generic_cokernel, generic_kernel

FEW = OracleConfig(trials=3)


def test_config_validation():
    with pytest.raises(PreconditionError):
        OracleConfig(prime=2)
    with pytest.raises(PreconditionError):
        OracleConfig(trials=0)
    assert OracleConfig().to_json() == {'prime': 32003, 'trials': 20, 'seed': 20240817,
                                        'twist_window': None}


def test_random_map_shape():
    rng = np.random.default_rng([1, 0])
    matrix = random_map(SplittingType((0, 4)), SplittingType((2,)), 101, rng)
    assert set(matrix) == {(1, 1)}
    assert len(matrix[(1, 1)]) == 3
    assert all(0 <= c < 101 for c in matrix[(1, 1)])


def test_euler_kernel_profile():
    matrix = {(1, 1): [1, 0], (1, 2): [0, 1]}
    e, a = SplittingType((0, 0)), SplittingType((1,))
    assert [kernel_profile(e, a, matrix, t, 101) for t in range(-2, 4)] == [0, 0, 0, 1, 2, 3]


def test_euler_kernel():
    assert generic_kernel_split_numeric((0, 0), (1,), FEW) == SplittingType((-1,))
    assert generic_cokernel_split_numeric((-1,), (0, 0), FEW) == SplittingType((1,))


def test_no_surjection():
    with pytest.raises(PreconditionError):
        generic_kernel_split_numeric((0, 5, 5), (1,), FEW)


def test_worked_pair_numeric(worked_e):
    assert generic_kernel_split_numeric(worked_e, (0, 8, 12), FEW) == SplittingType((4, 5, 6))


def test_exhaustive_quotients():
    assert exhaustive_quotients((1, 1), (0, 0, 2, 2)) == set()
    assert exhaustive_quotients((-1,), (0, 0)) == {SplittingType((1,))}
    assert exhaustive_kernels((0, 0), (1,)) == {SplittingType((-1,))}
    with pytest.raises(PreconditionError):
        exhaustive_quotients((0, 0), (0, 0))
    with pytest.raises(GuardExceededError):
        exhaustive_quotients((0,), (0, 10, 20, 30), guard_limit=2)


def test_exhaustive_quotients_have_the_generic_cokernel_on_top(worked_e):
    quotients = exhaustive_quotients((4, 5, 6), worked_e)
    assert SplittingType((0, 8, 12)) in quotients
    assert dominance_maximum(quotients) == SplittingType((0, 8, 12))


@pytest.mark.slow
def test_oracle_reproduces_worked_pairs(worked_e, worked_pairs):
    config = OracleConfig()
    for b, a, _, _ in worked_pairs:
        assert generic_kernel_split_numeric(worked_e, a, config) == generic_kernel(worked_e, a)
        assert generic_cokernel_split_numeric(b, worked_e, config) == generic_cokernel(b, worked_e)
