#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.
"""
import logging
import xlsxwriter

log = logging.getLogger(__name__)


class CellFormat:
    """
    A collection of formats to be used in Xlsxwriter to populate cells in
    an Excel workbook holding a component census.
    """

    def __init__(self, workbook: xlsxwriter.Workbook):
        """
        Constructor.
        """
        self._workbook = workbook
        # Static attributes, have no setter methods
        self._bold_italic = self._workbook.add_format({'bold': True, 'italic': True})
        self._border = self._workbook.add_format({'border': 1})

        # Default attributes, can be changed via setter methods
        self._heading = self._workbook.\
            add_format({'bold': True, 'border': 2, 'align': 'center', 'fg_color': '#ffa700'})
        self._strongly_stable = self._workbook.\
            add_format({'border': 1, 'align': 'center', 'fg_color': '#C5D9F1'})
        self._stable = self._workbook.\
            add_format({'border': 1, 'align': 'center', 'fg_color': '#D9D9D9'})
        self._number = self._workbook.\
            add_format({'border': 1, 'align': 'right', 'num_format': '0'})

    @property
    def bold_italic(self) -> xlsxwriter.format.Format:
        """Format cell with bold and italic"""
        return self._bold_italic

    @property
    def border(self) -> xlsxwriter.format.Format:
        """Format cell with a single line border"""
        return self._border

    @property
    def heading(self) -> xlsxwriter.format.Format:
        """Used to format the column headings of the census table"""
        return self._heading

    @property
    def strongly_stable(self) -> xlsxwriter.format.Format:
        """Used to format the rows of strongly stable pairs, one per component"""
        return self._strongly_stable

    @property
    def stable(self) -> xlsxwriter.format.Format:
        """Used to format rows of stable pairs that do not index a component"""
        return self._stable

    @property
    def number(self) -> xlsxwriter.format.Format:
        """Used for the dimension columns"""
        return self._number

    # pylint: disable=missing-function-docstring
    # All setter methods
    @heading.setter
    def heading(self, value: dict):
        log.debug(value)
        self._heading = self._workbook.add_format(value)

    @strongly_stable.setter
    def strongly_stable(self, value: dict):
        log.debug(value)
        self._strongly_stable = self._workbook.add_format(value)

    @stable.setter
    def stable(self, value: dict):
        log.debug(value)
        self._stable = self._workbook.add_format(value)

    @number.setter
    def number(self, value: dict):
        log.debug(value)
        self._number = self._workbook.add_format(value)
