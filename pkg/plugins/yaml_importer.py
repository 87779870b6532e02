#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Importer for diagrams written as YAML, either at the top level or under a
``diagram:`` key, e.g.

  diagram:
    0: {0: 1}
    1: {1: 2}
    2: {2: 1}
"""
import logging
from typing import Optional
import yaml
from plugins.abstract_importer import AbstractImporter
from util.betti import BettiDiagram
from util.errors import PreconditionError

log = logging.getLogger(__name__)


class Importer(AbstractImporter):
    """
    Realization class to handle YAML encoded Betti diagrams.
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
                data = yaml.load(file, Loader=yaml.FullLoader)
        except IOError as error:
            log.error(error)
            log.debug('Exit: None')
            return None
        except yaml.YAMLError as error:
            raise PreconditionError(f'{filename} is not valid YAML: {error}') from error
        if isinstance(data, dict) and 'diagram' in data:
            data = data.get('diagram')
        beta = BettiDiagram.from_json(self.normalize(data))
        log.debug('Exit: %s', beta)
        return beta
