#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Human readable tables for the command line, built as pandas DataFrames.
"""
import logging
import pandas
import xlsxwriter
from util.balancing import BalancingDatum
from util.betti import COLUMNS, BettiDiagram
from util.cell_format import CellFormat
from util.config import Config
from util.static_layout import set_static_layout, write_census_rows

log = logging.getLogger(__name__)


def census_frame(records: list) -> pandas.DataFrame:
    """One row per stable pair in the order given."""
    return pandas.DataFrame(
        [{'b': str(r.b), 'a': str(r.a), 'D': r.D, 'T': r.T,
          'strongly stable': 'yes' if r.strongly_stable else 'no'} for r in records],
        columns=['b', 'a', 'D', 'T', 'strongly stable'])


def census_text(records: list, e, n: int, d: int) -> str:
    """Census heading and table."""
    heading = f'e = {e}, n = {n}, d = {d}: {len(records)} pairs'
    if not records:
        return heading
    return heading + '\n' + census_frame(records).to_string(index=False)


def gamma_frame(datum: BalancingDatum, m: int, n: int) -> pandas.DataFrame:
    """Gamma as an m x n grid with 1-based labels."""
    return pandas.DataFrame([[datum.value(i, j) for j in range(1, n + 1)]
                             for i in range(1, m + 1)],
                            index=[f'i={i}' for i in range(1, m + 1)],
                            columns=[f'j={j}' for j in range(1, n + 1)])


def datum_text(datum: BalancingDatum, m: int, n: int) -> str:
    """sigma, tau and the Gamma grid."""
    lines = [f'sigma = {datum.sigma}', f'tau = {datum.tau}']
    if m and n:
        lines.append(gamma_frame(datum, m, n).to_string())
    return '\n'.join(lines)


def diagram_frame(beta: BettiDiagram) -> pandas.DataFrame:
    """Rows are degrees, columns the homological positions 0, 1, 2."""
    degrees = sorted({degree for i in COLUMNS for degree in beta.degrees(i)})
    return pandas.DataFrame([[str(beta.get(i, degree)) if beta.get(i, degree) else '-'
                              for i in COLUMNS] for degree in degrees],
                            index=degrees, columns=list(COLUMNS))


def decomposition_frame(parts: list) -> pandas.DataFrame:
    """Coefficient and degree sequence of every pure summand."""
    return pandas.DataFrame([{'coefficient': str(coefficient), 'degrees': str(degrees)}
                             for coefficient, degrees, _ in parts],
                            columns=['coefficient', 'degrees'])


def edges_frame(certificate) -> pandas.DataFrame:
    """Witness edges of a connectivity certificate."""
    return pandas.DataFrame([{'kind': w.kind, 'source': f'{w.source[0]} | {w.source[1]}',
                              'target': f'{w.target[0]} | {w.target[1]}'}
                             for w in certificate.edges],
                            columns=['kind', 'source', 'target'])


def update_forms(cform: CellFormat, conf: Config):
    """The workbook exists only after the configuration is loaded, so the cell
    formats are created with defaults and overridden here.
    """
    if conf.cell_formats_heading:
        cform.heading = conf.cell_formats_heading
    if conf.cell_formats_strongly_stable:
        cform.strongly_stable = conf.cell_formats_strongly_stable
    if conf.cell_formats_stable:
        cform.stable = conf.cell_formats_stable
    if conf.cell_formats_number:
        cform.number = conf.cell_formats_number


def write_census_workbook(conf: Config, records: list, e, n: int, d: int) -> bool:
    """
    Store the census in conf.output_file.

    :return: True if the workbook was written, else False.
    """
    log.debug('Enter')
    workbook = xlsxwriter.Workbook(conf.output_file)
    cform = CellFormat(workbook)
    update_forms(cform, conf)
    workbook.add_worksheet(conf.worksheet_name)
    set_static_layout(workbook, conf, cform, e, n, d)
    rows = write_census_rows(workbook, conf, cform, records)
    try:
        workbook.close()
    except xlsxwriter.exceptions.FileCreateError as error:
        log.error('Cannot write %s: %s', conf.output_file, error)
        return False
    log.info('%d census rows stored in %s', rows, conf.output_file)
    log.debug('Exit: True')
    return True
