#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Independent oracles for generic kernels and cokernels: random homogeneous
matrices over a prime field, whose kernel splitting type is read off from the
dimensions of its graded pieces, and exhaustive enumerations of completions.
"""
import logging
from typing import Optional
import numpy as np
from sympy import GF
from sympy.polys.matrices import DomainMatrix
from util.errors import OracleError, PreconditionError
from util.realizability import Triple, is_realizable, surjection_exists
from util.splitting import (SplittingType, as_splitting_type, dominance_maximum,
                            reverse_negate, weak_compositions)

log = logging.getLogger(__name__)


class OracleConfig:
    """Prime field, number of trials, seed and an optional twist window."""

    def __init__(self, prime: int = 32003, trials: int = 20, seed: int = 20240817,
                 twist_window: Optional[tuple] = None):
        """Constructor.
        """
        if prime < 3:
            raise PreconditionError(f'oracle prime must be an odd prime, got {prime}')
        if trials < 1:
            raise PreconditionError(f'oracle needs at least one trial, got {trials}')
        self.prime = prime
        self.trials = trials
        self.seed = seed
        self.twist_window = twist_window

    @classmethod
    def from_config(cls, conf) -> 'OracleConfig':
        """Take prime, trials and seed from a loaded Config."""
        return cls(conf.oracle_prime, conf.oracle_trials, conf.oracle_seed)

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'prime': self.prime, 'trials': self.trials, 'seed': self.seed,
                'twist_window': None if self.twist_window is None else list(self.twist_window)}


def random_map(e: SplittingType, a: SplittingType, prime: int, rng: np.random.Generator) -> dict:
    """
    Random homogeneous matrix O(e) -> O(a): {(i, j): [c_0, ..., c_k]} where
    entry (i, j) is sum_p c_p x^p y^(k-p) of degree k = a_i - e_j.
    """
    matrix = {}
    for i in range(1, a.rank + 1):
        for j in range(1, e.rank + 1):
            degree = a.entry(i) - e.entry(j)
            if degree >= 0:
                matrix[(i, j)] = [int(c) for c in rng.integers(0, prime, size=degree + 1)]
    return matrix


def kernel_profile(e, a, matrix: dict, t: int, prime: int) -> int:
    """Dimension of the kernel of H^0(O(e)(t)) -> H^0(O(a)(t))."""
    e, a = as_splitting_type(e), as_splitting_type(a)
    row_offsets, rows = [], 0
    for value in a:
        row_offsets.append(rows)
        rows += max(0, value + t + 1)
    col_offsets, cols = [], 0
    for value in e:
        col_offsets.append(cols)
        cols += max(0, value + t + 1)
    if cols == 0:
        return 0
    if rows == 0:
        return cols

    dense = [[0] * cols for _ in range(rows)]
    for (i, j), coeffs in matrix.items():
        source_dim = e.entry(j) + t + 1
        target_dim = a.entry(i) + t + 1
        if source_dim <= 0 or target_dim <= 0:
            continue
        for k in range(source_dim):
            for power, coeff in enumerate(coeffs):
                if coeff and k + power < target_dim:
                    row = row_offsets[i - 1] + k + power
                    column = col_offsets[j - 1] + k
                    dense[row][column] = (dense[row][column] + coeff) % prime
    rank = DomainMatrix.from_list(dense, GF(prime)).rank()
    return cols - rank


def _window(e: SplittingType, a: SplittingType, config: OracleConfig) -> tuple:
    if config.twist_window is not None:
        return tuple(config.twist_window)
    m = e.rank - a.rank
    top = e.entries[-1]
    degree = e.degree - a.degree
    return -(top + 2), -(degree - (m - 1) * top) + 2


def _split_from_profile(profile: dict, low: int, high: int) -> list:
    """Twists b with h(t) = sum max(0, b_i + t + 1), from second differences."""
    twists = []
    for t in range(low + 2, high + 1):
        count = profile[t] - 2 * profile[t - 1] + profile[t - 2]
        if count < 0:
            raise OracleError(f'kernel dimensions {profile} are not a splitting function')
        twists.extend([-t] * count)
    return twists


def generic_kernel_split_numeric(e, a, config: Optional[OracleConfig] = None) -> SplittingType:
    """
    The most balanced kernel splitting type seen over random maps O(e) -> O(a).
    Trials whose map fails to be surjective (wrong kernel degree) are dropped.
    """
    e, a = as_splitting_type(e), as_splitting_type(a)
    config = config or OracleConfig()
    if a.rank >= e.rank or not surjection_exists(e, a):
        raise PreconditionError(f'no surjection {e} -> {a}')
    m = e.rank - a.rank
    low, high = _window(e, a, config)
    kernels = []
    for trial in range(config.trials):
        rng = np.random.default_rng([config.seed, trial])
        matrix = random_map(e, a, config.prime, rng)
        profile = {t: kernel_profile(e, a, matrix, t, config.prime) for t in range(low, high + 1)}
        if profile[low] != 0 or profile[low + 1] != 0:
            raise OracleError(f'twist window [{low}, {high}] starts inside the kernel support')
        twists = _split_from_profile(profile, low, high)
        if len(twists) != m:
            raise OracleError(f'kernel profile of rank {len(twists)} for rank {m}: {profile}')
        kernel = SplittingType(twists)
        if kernel.degree != e.degree - a.degree:
            log.warning('Trial %d degenerate: kernel %s', trial, kernel)
            continue
        kernels.append(kernel)
    if not kernels:
        raise OracleError(f'every one of {config.trials} random maps {e} -> {a} degenerated')
    return dominance_maximum(kernels, f'numeric kernels of {e} -> {a}')


def generic_cokernel_split_numeric(b, e, config: Optional[OracleConfig] = None) -> SplittingType:
    """Dual of generic_kernel_split_numeric."""
    return reverse_negate(generic_kernel_split_numeric(reverse_negate(e), reverse_negate(b),
                                                       config))


def exhaustive_quotients(b, e, guard_limit: Optional[int] = None) -> set:
    """Every a' with (b, e, a') realizable. No injectivity precondition."""
    b, e = as_splitting_type(b), as_splitting_type(e)
    if b.rank >= e.rank:
        raise PreconditionError(f'need rank(b) < rank(e), got {b} and {e}')
    n = e.rank - b.rank
    return {a for a in weak_compositions(e.degree - b.degree, e.entries[:n],
                                         guard_limit=guard_limit)
            if is_realizable(Triple(b, e, a))}


def exhaustive_kernels(e, a, guard_limit: Optional[int] = None) -> set:
    """Every b' with (b', e, a) realizable."""
    return {reverse_negate(q) for q in
            exhaustive_quotients(reverse_negate(a), reverse_negate(e), guard_limit)}
