#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Abstract class defining the mandated method(s) and associated signatures to import a
Betti diagram from a file of some custom format.
"""
from abc import ABC, abstractmethod
from typing import Optional
from util.betti import BettiDiagram


class AbstractImporter(ABC):
    """
    Abstract Importer Interface
    """

    @abstractmethod
    def load(self, filename: str) -> Optional[BettiDiagram]:
        """
        A load method to read the diagram stored in filename.

        :return: The BettiDiagram, or None if the file cannot be read.
        Malformed content raises PreconditionError.
        """

    @staticmethod
    def normalize(data) -> dict:
        """
        Column and degree keys as strings so that YAML integer keys and JSON
        string keys decode the same way.
        """
        if not isinstance(data, dict):
            return {}
        return {str(column): ({str(degree): value for degree, value in entries.items()}
                              if isinstance(entries, dict) else entries)
                for column, entries in data.items()}
