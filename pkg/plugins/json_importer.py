#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Importer for diagrams stored as {"0": {"<deg>": mult}, "1": {...}, "2": {...}}.
"""
import json
import logging
from typing import Optional
from plugins.abstract_importer import AbstractImporter
from util.betti import BettiDiagram
from util.errors import PreconditionError

log = logging.getLogger(__name__)


class Importer(AbstractImporter):
    """
    Realization class to handle JSON encoded Betti diagrams.
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
            with open(filename, 'r', encoding='utf-8') as file:
                data = json.load(file)
        except IOError as error:
            log.error(error)
            log.debug('Exit: None')
            return None
        except json.JSONDecodeError as error:
            raise PreconditionError(f'{filename} is not valid JSON: {error}') from error
        beta = BettiDiagram.from_json(self.normalize(data))
        log.debug('Exit: %s', beta)
        return beta
