#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Betti diagrams of length two resolutions over k[x, y]: translation to triples
of splitting types, pure diagrams and the greedy decomposition into them.

A generator in degree d corresponds to the twist -d: column 0 gives a, column 1
gives e and column 2 gives b.
"""
import math
import logging
from fractions import Fraction
from functools import reduce
from typing import Optional
from util.errors import PreconditionError
from util.realizability import Triple, as_triple, is_realizable

log = logging.getLogger(__name__)

COLUMNS = (0, 1, 2)


def fraction_json(value: Fraction):
    """Integral values as ints, others as "p/q"."""
    return value.numerator if value.denominator == 1 else str(value)


class BettiDiagram:
    """Three columns mapping degree -> multiplicity, stored as Fractions with
    zero entries dropped.
    """

    def __init__(self, columns=None):
        """Constructor.
        """
        self._columns = ({}, {}, {})
        for index, column in enumerate(columns or ({}, {}, {})):
            if index > 2:
                raise PreconditionError('a length two resolution has three columns')
            for degree, value in column.items():
                self.set(index, int(degree), value)

    def set(self, column: int, degree: int, value):
        """Set beta_{column, degree}."""
        value = Fraction(value)
        if value < 0:
            raise PreconditionError(f'negative Betti number {value} at ({column}, {degree})')
        if value:
            self._columns[column][degree] = value
        else:
            self._columns[column].pop(degree, None)

    def get(self, column: int, degree: int) -> Fraction:
        """beta_{column, degree}, zero when absent."""
        return self._columns[column].get(degree, Fraction(0))

    def column(self, index: int) -> dict:
        """Copy of one column."""
        return dict(self._columns[index])

    def degrees(self, index: int) -> list:
        """Sorted degrees with a nonzero entry in a column."""
        return sorted(self._columns[index])

    def total(self, index: int) -> Fraction:
        """Sum of a column."""
        return sum(self._columns[index].values(), Fraction(0))

    def is_zero(self) -> bool:
        """No nonzero entry."""
        return not any(self._columns)

    def to_json(self) -> dict:
        """{"0": {"<deg>": mult}, ...}, integral values as ints, others as "p/q"."""
        return {str(i): {str(degree): fraction_json(value)
                         for degree, value in sorted(column.items())}
                for i, column in enumerate(self._columns)}

    @classmethod
    def from_json(cls, data: dict) -> 'BettiDiagram':
        """Inverse of to_json; multiplicities may be ints or rational strings."""
        try:
            columns = [{int(degree): Fraction(value)
                        for degree, value in (data.get(str(i)) or {}).items()} for i in COLUMNS]
        except (TypeError, ValueError, ZeroDivisionError, AttributeError) as error:
            raise PreconditionError(f'malformed Betti diagram: {error}') from error
        return cls(columns)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiDiagram):
            return NotImplemented
        return self._columns == other._columns

    def __repr__(self) -> str:
        return f'BettiDiagram({self.to_json()})'


def scale(beta: BettiDiagram, k) -> BettiDiagram:
    """k * beta"""
    k = Fraction(k)
    if k < 0:
        raise PreconditionError(f'cannot scale a Betti diagram by {k}')
    return BettiDiagram([{d: v * k for d, v in beta.column(i).items()} for i in COLUMNS])


def add(beta: BettiDiagram, gamma: BettiDiagram) -> BettiDiagram:
    """Entrywise sum."""
    columns = []
    for i in COLUMNS:
        column = beta.column(i)
        for degree, value in gamma.column(i).items():
            column[degree] = column.get(degree, Fraction(0)) + value
        columns.append(column)
    return BettiDiagram(columns)


def is_integral(beta: BettiDiagram) -> bool:
    """Every entry is an integer."""
    return all(value.denominator == 1 for i in COLUMNS for value in beta.column(i).values())


def check_identities(beta: BettiDiagram) -> bool:
    """sum(beta_0) - sum(beta_1) + sum(beta_2) = 0 and the same sum weighted
    by degree vanishes.
    """
    rank_sum = beta.total(0) - beta.total(1) + beta.total(2)
    degree_sum = sum((sign * degree * value
                      for sign, i in ((1, 0), (-1, 1), (1, 2))
                      for degree, value in beta.column(i).items()), Fraction(0))
    return rank_sum == 0 and degree_sum == 0


def _require_shape(beta: BettiDiagram):
    if not check_identities(beta):
        raise PreconditionError(f'not a finite-length diagram shape: {beta.to_json()}')


def pure_diagram(d0: int, d1: int, d2: int) -> BettiDiagram:
    """
    The smallest integral diagram supported on degrees d0 < d1 < d2, with
    beta_i proportional to the product over j != i of 1 / |d_j - d_i|.
    """
    degrees = (d0, d1, d2)
    if not d0 < d1 < d2:
        raise PreconditionError(f'pure diagram degrees must increase, got {degrees}')
    values = []
    for i in COLUMNS:
        product = 1
        for j in COLUMNS:
            if j != i:
                product *= abs(degrees[j] - degrees[i])
        values.append(Fraction(1, product))
    common = reduce(math.lcm, (v.denominator for v in values))
    values = [v * common for v in values]
    divisor = reduce(math.gcd, (v.numerator for v in values))
    return BettiDiagram([{degrees[i]: values[i] / divisor} for i in COLUMNS])


def decompose(beta: BettiDiagram) -> Optional[list]:
    """
    Greedy decomposition into pure diagrams: take the least degree of each
    column, subtract the largest multiple of that pure diagram that keeps every
    entry nonnegative and repeat. Returns [(coefficient, degrees, pure), ...]
    or None when beta is not in the cone.
    """
    _require_shape(beta)
    remaining = beta
    parts = []
    while not remaining.is_zero():
        if any(not remaining.degrees(i) for i in COLUMNS):
            log.debug('Column emptied before the diagram: %s', remaining)
            return None
        top = tuple(remaining.degrees(i)[0] for i in COLUMNS)
        if not top[0] < top[1] < top[2]:
            log.debug('Degree sequence %s does not increase', top)
            return None
        pure = pure_diagram(*top)
        coefficient = min(remaining.get(i, top[i]) / pure.get(i, top[i]) for i in COLUMNS)
        columns = []
        for i in COLUMNS:
            column = remaining.column(i)
            column[top[i]] = column[top[i]] - coefficient * pure.get(i, top[i])
            if column[top[i]] < 0:
                return None
            columns.append(column)
        remaining = BettiDiagram(columns)
        parts.append((coefficient, top, pure))
    return parts


def in_cone(beta: BettiDiagram) -> bool:
    """Whether beta is a nonnegative rational combination of pure diagrams."""
    return decompose(beta) is not None


def diagram_to_triple(beta: BettiDiagram) -> Triple:
    """b, e and a from columns 2, 1 and 0 with degrees negated."""
    if not is_integral(beta):
        raise PreconditionError(f'diagram is not integral: {beta.to_json()}')
    _require_shape(beta)

    def twists(index):
        return [-degree for degree, value in beta.column(index).items()
                for _ in range(value.numerator)]
    return Triple(twists(2), twists(1), twists(0))


def triple_to_diagram(t) -> BettiDiagram:
    """Inverse of diagram_to_triple."""
    t = as_triple(t)
    columns = []
    for entries in (t.a, t.e, t.b):
        column = {}
        for twist in entries:
            column[-twist] = column.get(-twist, 0) + 1
        columns.append(column)
    return BettiDiagram(columns)


def lattice_point_realizable(beta: BettiDiagram) -> bool:
    """An integral diagram in the cone whose triple is realizable."""
    if not is_integral(beta):
        raise PreconditionError(f'diagram is not integral: {beta.to_json()}')
    return in_cone(beta) and is_realizable(diagram_to_triple(beta))
