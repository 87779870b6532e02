#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Importer for diagrams kept in a spreadsheet. The first sheet holds a heading
row "degree;0;1;2" and one row per degree; empty cells are zero:

  degree | 0 | 1 | 2
  0      | 1 |   |
  1      |   | 2 |
  2      |   |   | 1
"""
import logging
from typing import Optional
import pandas
from plugins.abstract_importer import AbstractImporter
from util.betti import COLUMNS, BettiDiagram
from util.errors import PreconditionError

log = logging.getLogger(__name__)


class Importer(AbstractImporter):
    """
    Realization class to handle Betti diagrams stored in xlsx workbooks.
    """
    __instance = None

    @classmethod
    def get_instance(cls):
        """
        If instance is None create an instance of this class
        and return it, else return the existing instance.

        :return: An Importer instance.
        """
        if cls.__instance is None:
            log.debug("Create singleton instance")
            cls.__instance = cls()
        return cls.__instance

    def load(self, filename: str) -> Optional[BettiDiagram]:
        log.debug('Enter')
        try:
            frame = pandas.read_excel(filename, sheet_name=0, index_col=0, engine='openpyxl')
        except IOError as error:
            log.error(error)
            log.debug('Exit: None')
            return None
        frame.columns = [str(column).strip() for column in frame.columns]
        missing = [str(i) for i in COLUMNS if str(i) not in frame.columns]
        if missing:
            raise PreconditionError(f'{filename} lacks diagram columns {missing}')

        columns = []
        for i in COLUMNS:
            column = {}
            for degree, value in frame[str(i)].items():
                if pandas.isna(value) or pandas.isna(degree):
                    continue
                if hasattr(value, 'item'):
                    value = value.item()
                if isinstance(value, float) and value.is_integer():
                    value = int(value)
                column[int(degree)] = value.strip() if isinstance(value, str) else value
            columns.append(column)
        beta = BettiDiagram(columns)
        log.debug('Exit: %s', beta)
        return beta
