#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Layout of the census worksheet: a title block naming (e, n, d), a heading row
and one row per stable pair.
"""
import xlsxwriter
from util.config import Config
from util.cell_format import CellFormat
from util.splitting import SplittingType

HEADING_ROW = 3
HEADINGS = ('b', 'a', 'D', 'T', 'strongly stable', 'packages')


def set_static_layout(workbook: xlsxwriter.Workbook, conf: Config, cform: CellFormat,
                      e: SplittingType, n: int, d: int):
    """
    Create all static worksheet layout settings.
    """
    worksheet = workbook.get_worksheet_by_name(conf.worksheet_name)
    worksheet.set_tab_color(conf.worksheet_tab_color)
    worksheet.freeze_panes(HEADING_ROW + 1, 0)  # Keep the heading row in view.

    worksheet.write(0, 0, f'e = {e}', cform.bold_italic)
    worksheet.write(1, 0, f'n = {n}, d = {d}', cform.bold_italic)

    worksheet.set_column(0, 1, 24)
    worksheet.set_column(2, 3, 6)
    worksheet.set_column(4, 4, 16)
    worksheet.set_column(5, 5, 48)
    for col, heading in enumerate(HEADINGS):
        worksheet.write(HEADING_ROW, col, heading, cform.heading)


def write_census_rows(workbook: xlsxwriter.Workbook, conf: Config, cform: CellFormat,
                      records: list) -> int:
    """
    One row per ComponentRecord below the heading. Strongly stable pairs and
    the remaining stable pairs get different formats.

    :return: The number of rows written.
    """
    worksheet = workbook.get_worksheet_by_name(conf.worksheet_name)
    for offset, record in enumerate(records):
        row = HEADING_ROW + 1 + offset
        form = cform.strongly_stable if record.strongly_stable else cform.stable
        worksheet.write(row, 0, str(record.b), form)
        worksheet.write(row, 1, str(record.a), form)
        worksheet.write_number(row, 2, record.D, cform.number)
        worksheet.write_number(row, 3, record.T, cform.number)
        worksheet.write(row, 4, 'yes' if record.strongly_stable else 'no', form)
        worksheet.write(row, 5, '; '.join(_package_text(pkg) for pkg in record.packages),
                        cform.border)
    return len(records)


def _package_text(pkg) -> str:
    blocks = ' '.join('[' + ','.join(str(i) for i in block) + ']' for block in pkg.blocks)
    delta = ','.join(str(x) for x in pkg.delta)
    return f"m'={pkg.m_prime} n'={pkg.n_prime} {blocks} delta=({delta})"
