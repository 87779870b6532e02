#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Explicit matrices of a short exact sequence 0 -> O(b) -C-> O(e) -G-> O(a) -> 0
with entries in ZZ[x, y], and the checks that certify it.
"""
import logging
import itertools
from typing import Optional
from sympy import ZZ
from sympy.polys.rings import ring
from sympy.polys.matrices import DomainMatrix
from util.errors import NotRealizableError, PreconditionError
from util.realizability import (Triple, as_triple, h_profile, is_realizable, kernel_tail,
                                quantities, quotient_head, realizable)
from util.splitting import as_splitting_type

log = logging.getLogger(__name__)

RING, X, Y = ring('x,y', ZZ)
DOMAIN = RING.to_domain()


def monomial(px: int, py: int, coeff: int = 1):
    """coeff * x^px * y^py, exponents must be nonnegative."""
    if px < 0 or py < 0:
        raise PreconditionError(f'negative exponent in x^{px}*y^{py}')
    return RING.from_dict({(px, py): coeff})


class HomogMatrix:
    """
    Matrix of homogeneous polynomials representing a map O(source) -> O(target).
    Entry (i, j), counted from 1, has degree target_i - source_j. Only nonzero
    entries are stored.
    """

    def __init__(self, target, source, entries: Optional[dict] = None):
        """Constructor.
        """
        self.target = as_splitting_type(target)
        self.source = as_splitting_type(source)
        self.entries = {}
        for (i, j), value in (entries or {}).items():
            self[i, j] = value

    @property
    def rows(self) -> int:
        """Number of rows, the rank of the target."""
        return self.target.rank

    @property
    def cols(self) -> int:
        """Number of columns, the rank of the source."""
        return self.source.rank

    def __getitem__(self, key):
        return self.entries.get(key, RING.zero)

    def __setitem__(self, key, value):
        i, j = key
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise PreconditionError(f'entry ({i},{j}) outside {self.rows}x{self.cols}')
        value = RING(value)
        if value:
            self.entries[(i, j)] = value
        else:
            self.entries.pop((i, j), None)

    def to_domain_matrix(self) -> DomainMatrix:
        """The matrix over the polynomial ring ZZ[x,y]."""
        rows = [[self[i, j] for j in range(1, self.cols + 1)] for i in range(1, self.rows + 1)]
        return DomainMatrix.from_list(rows, DOMAIN)

    def maximal_minors(self) -> list:
        """All minors of size min(rows, cols), as ring elements."""
        size = min(self.rows, self.cols)
        if size == 0:
            return []
        dense = self.to_domain_matrix()
        all_rows = list(range(self.rows))
        all_cols = list(range(self.cols))
        minors = []
        if self.rows <= self.cols:
            for cols in itertools.combinations(all_cols, size):
                minors.append(RING(dense.extract(all_rows, list(cols)).det()))
        else:
            for rows in itertools.combinations(all_rows, size):
                minors.append(RING(dense.extract(list(rows), all_cols).det()))
        return minors

    def sparse(self) -> list:
        """[[row, col, [[px, py, coeff], ...]], ...] in row-major order."""
        listed = []
        for (i, j), value in sorted(self.entries.items()):
            terms = sorted(([px, py, int(c)] for (px, py), c in value.terms()), reverse=True)
            listed.append([i, j, terms])
        return listed

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'target': self.target.to_json(), 'source': self.source.to_json(),
                'entries': self.sparse()}

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomogMatrix):
            return NotImplemented
        return (self.target, self.source, self.entries) == \
            (other.target, other.source, other.entries)

    def __repr__(self) -> str:
        return f'HomogMatrix({self.rows}x{self.cols}, {self.sparse()})'


def homog_matrix_from_lists(target, source, rows: list) -> HomogMatrix:
    """Build a HomogMatrix from dense rows of ring elements or integers."""
    matrix = HomogMatrix(target, source)
    for i, row in enumerate(rows, start=1):
        for j, value in enumerate(row, start=1):
            matrix[i, j] = value
    return matrix


class SESCertificate:
    """Kernel and quotient matrices of a triple with the results of the checks."""

    CHECKS = ('composition_zero', 'G_surjective', 'C_injective_lf', 'degrees_ok')

    def __init__(self, triple: Triple, quotient_matrix: HomogMatrix, kernel_matrix: HomogMatrix,
                 checks: dict):
        """Constructor.
        """
        self.triple = triple
        self.G = quotient_matrix    # pylint: disable=invalid-name
        self.C = kernel_matrix      # pylint: disable=invalid-name
        self.checks = dict(checks)

    @property
    def valid(self) -> bool:
        """True when every check passed."""
        return all(self.checks.get(name) for name in self.CHECKS)

    def to_json(self) -> dict:
        """JSON encoding."""
        return {'triple': self.triple.to_json(), 'G': self.G.to_json(), 'C': self.C.to_json(),
                'checks': self.checks, 'valid': self.valid}


def _require_realizable(t: Triple):
    if not is_realizable(t):
        failure = realizable(t).witness
        raise NotRealizableError(f'{t} is not realizable: {failure.detail}', failure)


def _block_ends(profile: list, blocks: int, n: int) -> list:
    """H_k = h_{k+1}, and n for the last block."""
    return [profile[k] if k < blocks else n for k in range(1, blocks + 1)]


def build_quotient_matrix(t) -> HomogMatrix:
    """
    G: the identity on the first n' rows, then for k = 1..m-m' the block G_k on
    rows h_k..H_k carrying x^(a_nu - e_{nu+k-1}) at (nu, nu+k-1) and
    y^(a_nu - e_{nu+k}) at (nu, nu+k). The corner (h_k, h_k+k-1) shared by two
    consecutive blocks holds *_k = x^T(k-1,h_k) y^S(k,h_k).
    """
    t = as_triple(t)
    _require_realizable(t)
    tables = quantities(t)
    profile = h_profile(t)
    blocks = t.m - kernel_tail(t)
    ends = _block_ends(profile, blocks, t.n)
    a, e = t.a, t.e
    G = HomogMatrix(a, e)  # pylint: disable=invalid-name

    for i in range(1, quotient_head(t) + 1):
        G[i, i] = 1

    def star(k: int):
        h = profile[k - 1]
        return monomial(tables.T[(k - 1, h)], tables.S[(k, h)])

    for k in range(1, blocks + 1):
        h, last = profile[k - 1], ends[k - 1]
        for nu in range(h, last + 1):
            if nu == h:
                G[nu, nu + k - 1] = star(k)
            else:
                G[nu, nu + k - 1] = monomial(a.entry(nu) - e.entry(nu + k - 1), 0)
            if k < blocks and nu == last:
                G[nu, nu + k] = star(k + 1)
            else:
                G[nu, nu + k] = monomial(0, a.entry(nu) - e.entry(nu + k))
    return G


def build_kernel_matrix(t) -> HomogMatrix:
    """
    C: for k = 1..m-m' column k runs over rows h_k+k-1..H_k+k with signs
    alternating from +, starting at y^B(k,h_k), then x^-S(k,nu) y^-T(k,nu-1) for
    h_k < nu <= H_k, ending at x^(e_{H_k+k} - b_k). The last m' columns are the
    inclusion of the trailing summands of e.
    """
    t = as_triple(t)
    _require_realizable(t)
    tables = quantities(t)
    profile = h_profile(t)
    blocks = t.m - kernel_tail(t)
    ends = _block_ends(profile, blocks, t.n)
    b, e = t.b, t.e
    C = HomogMatrix(e, b)  # pylint: disable=invalid-name

    for k in range(1, blocks + 1):
        h, last = profile[k - 1], ends[k - 1]
        sign = 1
        C[h + k - 1, k] = monomial(0, e.entry(h + k - 1) - b.entry(k))
        for nu in range(h + 1, last + 1):
            sign = -sign
            C[nu + k - 1, k] = monomial(-tables.S[(k, nu)], -tables.T[(k, nu - 1)], sign)
        sign = -sign
        C[last + k, k] = monomial(e.entry(last + k) - b.entry(k), 0, sign)

    for k in range(blocks + 1, t.m + 1):
        C[t.n + k, k] = 1
    return C


def compose_is_zero(G: HomogMatrix, C: HomogMatrix) -> bool:  # pylint: disable=invalid-name
    """Whether the exact product G*C vanishes."""
    if G.cols != C.rows or G.source != C.target:
        raise PreconditionError(f'cannot compose {G.rows}x{G.cols} with {C.rows}x{C.cols}: '
                                f'source {G.source} differs from target {C.target}')
    if G.rows == 0 or C.cols == 0 or G.cols == 0:
        return True
    return (G.to_domain_matrix() * C.to_domain_matrix()).is_zero_matrix


def _pure_powers(minors: list) -> bool:
    """Some minor is c*x^p and some minor is c*y^q."""
    has_x = has_y = False
    for minor in minors:
        terms = minor.terms()
        if len(terms) != 1:
            continue
        (px, py), _ = terms[0]
        has_x = has_x or py == 0
        has_y = has_y or px == 0
        if has_x and has_y:
            return True
    return False


def _minors_coprime(matrix: HomogMatrix, fast_path: bool) -> bool:
    if min(matrix.rows, matrix.cols) == 0:
        return True
    minors = matrix.maximal_minors()
    if fast_path and _pure_powers(minors):
        return True
    divisor = RING.zero
    for minor in minors:
        divisor = divisor.gcd(minor) if divisor else minor
        if divisor and divisor.is_ground:
            return True
    return bool(divisor) and divisor.is_ground


def is_surjective_bundle_map(G: HomogMatrix, fast_path: bool = True) -> bool:  # pylint: disable=invalid-name
    """
    G is surjective at every point when its maximal minors have no common
    zero, i.e. their gcd is a nonzero constant. The fast path accepts as soon as
    the minors contain a pure x-power and a pure y-power.
    """
    if G.rows > G.cols:
        raise PreconditionError(f'a {G.rows}x{G.cols} matrix cannot be surjective')
    return _minors_coprime(G, fast_path)


def is_injective_lf(C: HomogMatrix, fast_path: bool = True) -> bool:  # pylint: disable=invalid-name
    """C is injective with locally free cokernel: same minor test as
    is_surjective_bundle_map in the transposed orientation.
    """
    if C.rows < C.cols:
        raise PreconditionError(f'a {C.rows}x{C.cols} matrix cannot be injective')
    return _minors_coprime(C, fast_path)


def entry_degrees_ok(M: HomogMatrix) -> bool:  # pylint: disable=invalid-name
    """Every term of entry (i, j) has total degree target_i - source_j."""
    for (i, j), value in M.entries.items():
        degree = M.target.entry(i) - M.source.entry(j)
        for (px, py), _ in value.terms():
            if px + py != degree:
                return False
    return True


def certify_ses(t, fast_path: bool = True) -> SESCertificate:
    """Build G and C for a realizable triple and run every check on them."""
    t = as_triple(t)
    _require_realizable(t)
    G = build_quotient_matrix(t)  # pylint: disable=invalid-name
    C = build_kernel_matrix(t)    # pylint: disable=invalid-name
    checks = {
        'composition_zero': compose_is_zero(G, C),
        'G_surjective': is_surjective_bundle_map(G, fast_path),
        'C_injective_lf': is_injective_lf(C, fast_path),
        'degrees_ok': entry_degrees_ok(G) and entry_degrees_ok(C),
    }
    certificate = SESCertificate(t, G, C, checks)
    if not certificate.valid:
        log.error('Certificate checks failed for %s: %s', t, checks)
    return certificate


def _term_text(px: int, py: int, coeff: int) -> str:
    factors = []
    if px:
        factors.append('x' if px == 1 else f'x^{px}')
    if py:
        factors.append('y' if py == 1 else f'y^{py}')
    magnitude = abs(coeff)
    if not factors:
        return str(magnitude)
    if magnitude != 1:
        factors.insert(0, str(magnitude))
    return '*'.join(factors)


def polynomial_text(value) -> str:
    """Signed terms, highest x-power first: "x^2*y - 3*y^3"."""
    value = RING(value)
    if not value:
        return '0'
    text = ''
    for (px, py), coeff in sorted(value.terms(), reverse=True):
        coeff = int(coeff)
        term = _term_text(px, py, coeff)
        if not text:
            text = term if coeff > 0 else f'-{term}'
        else:
            text += f' + {term}' if coeff > 0 else f' - {term}'
    return text


def render(M: HomogMatrix, mode: str = 'text'):  # pylint: disable=invalid-name
    """Text grid of entries, or the sparse JSON list when mode is json."""
    if mode == 'json':
        return M.sparse()
    if mode != 'text':
        raise PreconditionError(f'unknown render mode {mode!r}')
    cells = [[polynomial_text(M[i, j]) for j in range(1, M.cols + 1)]
             for i in range(1, M.rows + 1)]
    if not cells or not cells[0]:
        return '[]'
    widths = [max(len(row[j]) for row in cells) for j in range(M.cols)]
    lines = ['[ ' + '  '.join(cell.rjust(widths[j]) for j, cell in enumerate(row)) + ' ]'
             for row in cells]
    return '\n'.join(lines)
