#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.
"""
import os
import logging
import importlib
from typing import Optional
import yaml

log = logging.getLogger(__name__)

GUARD_ENV = 'QUOTKIT_GUARD_LIMIT'
DEFAULT_GUARD_LIMIT = 200_000

# Importer plugin used for a diagram file when neither the command line nor the
# configuration names one.
IMPORTERS_BY_SUFFIX = {
    '.json': 'plugins.json_importer',
    '.yaml': 'plugins.yaml_importer',
    '.yml': 'plugins.yaml_importer',
    '.xlsx': 'plugins.xlsx_importer',
}


def resolve_guard_limit(value: Optional[int] = None) -> int:
    """Search-space guard in effect: an explicit value wins, then the
    QUOTKIT_GUARD_LIMIT environment variable, then the built in default.
    """
    if value is not None:
        return int(value)
    env = os.environ.get(GUARD_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            log.warning('Ignoring non-integer %s=%r', GUARD_ENV, env)
    return DEFAULT_GUARD_LIMIT


class Config:
    """A class that holds all configuration loaded from the YAML configuration file
    or set default values for optional configuration parameters.
    """
    # pylint: disable=too-many-instance-attributes
    # Reasonable amount in this kind of utility class.

    def __init__(self):
        """Constructor.
        """

        # Defaults
        self._filename = './quotkit.yaml'
        self._guard_limit = None
        self._cross_check = False
        self._ib_order = 'quotient_first'
        self._oracle_prime = 32003
        self._oracle_trials = 20
        self._oracle_seed = 20240817
        self._output_file = './census.xlsx'
        self._worksheet_name = '- Census -'
        self._worksheet_tab_color = '#ff9966'
        self._theme_imports = None
        self._importer_module = None

        # cell_format defaults live in cell_format.py, these only hold overrides
        # from a configuration or theme file.
        self._cell_formats_heading = None
        self._cell_formats_strongly_stable = None
        self._cell_formats_stable = None
        self._cell_formats_number = None

    def load_config(self, args: dict) -> bool:
        """Try to load a config file if it exists and apply the command line
        overrides found in args. A missing file leaves the defaults in place.
        Returns False only if the file exists but cannot be used.
        """
        if args.get('config_file') is not None:
            self._filename = args.get('config_file')
        try:
            with open(self._filename, 'r', encoding='utf-8') as file:
                loaded_config = yaml.load(file, Loader=yaml.FullLoader) or {}
        except IOError as error:
            if args.get('config_file') is not None:
                print(error)
                print('Fix the configuration file path or drop option -c. Use option -h for help')
                return False
            log.debug('No configuration file at %s, using defaults', self._filename)
            loaded_config = {}
        except yaml.YAMLError as error:
            log.error('Malformed configuration file %s: %s', self._filename, error)
            return False

        if not isinstance(loaded_config, dict):
            log.error('Configuration file %s must hold a mapping', self._filename)
            return False

        try:
            self._apply_file_values(loaded_config)
        except (TypeError, ValueError) as error:
            log.error('Invalid value in configuration file %s: %s', self._filename, error)
            return False

        # Command line overrides
        if args.get('guard_limit') is not None:
            self._guard_limit = int(args.get('guard_limit'))
        if args.get('cross_check'):
            self._cross_check = True
        if args.get('order') is not None:
            self._ib_order = args.get('order')
        if args.get('prime') is not None:
            self._oracle_prime = int(args.get('prime'))
        if args.get('trials') is not None:
            self._oracle_trials = int(args.get('trials'))
        if args.get('seed') is not None:
            self._oracle_seed = int(args.get('seed'))
        if args.get('importer') is not None:
            self._importer_module = args.get('importer')

        if self._ib_order not in ('quotient_first', 'kernel_first'):
            log.error('ib_order must be quotient_first or kernel_first, got %r', self._ib_order)
            return False
        return True

    def _apply_file_values(self, loaded_config: dict):
        """Copy the values of a loaded configuration file. Raises TypeError or
        ValueError for values of the wrong kind.
        """
        if loaded_config.get('guard_limit') is not None:
            self._guard_limit = int(loaded_config.get('guard_limit'))
        if loaded_config.get('cross_check') is not None:
            self._cross_check = bool(loaded_config.get('cross_check'))
        if loaded_config.get('ib_order') is not None:
            self._ib_order = loaded_config.get('ib_order')

        oracle = loaded_config.get('oracle')
        if oracle is not None:
            if not isinstance(oracle, dict):
                raise TypeError(f'oracle must be a mapping, got {oracle!r}')
            if oracle.get('prime') is not None:
                self._oracle_prime = int(oracle.get('prime'))
            if oracle.get('trials') is not None:
                self._oracle_trials = int(oracle.get('trials'))
            if oracle.get('seed') is not None:
                self._oracle_seed = int(oracle.get('seed'))

        if loaded_config.get('output_file') is not None:
            self._output_file = loaded_config.get('output_file')
        if loaded_config.get('worksheet_name') is not None:
            self._worksheet_name = loaded_config.get('worksheet_name')
        if loaded_config.get('worksheet_tab_color') is not None:
            self._worksheet_tab_color = loaded_config.get('worksheet_tab_color')

        # Theme files come first so that formats in the central configuration
        # override them.
        self._theme_imports = loaded_config.get('theme_imports')
        if self._theme_imports is not None:
            try:
                with open(self._theme_imports, 'r', encoding='utf-8') as file:
                    config = yaml.load(file, Loader=yaml.FullLoader) or {}
                if not isinstance(config, dict):
                    raise TypeError(f'theme file {self._theme_imports} must hold a mapping')
                self.update_cell_formats(config.get('cell_formats'))
            except (IOError, yaml.YAMLError) as error:
                print(error, 'Abandon theme imports, please fix the error.')
        self.update_cell_formats(loaded_config.get('cell_formats'))

        self._importer_module = loaded_config.get('importer_module')

    def update_cell_formats(self, config_formats: dict):
        """Update the cell_formats values if input is provided for each key.
        """
        if config_formats is not None:
            if not isinstance(config_formats, dict):
                raise TypeError(f'cell_formats must be a mapping, got {config_formats!r}')
            if config_formats.get('heading') is not None:
                self._cell_formats_heading = config_formats.get('heading')
            if config_formats.get('strongly_stable') is not None:
                self._cell_formats_strongly_stable = config_formats.get('strongly_stable')
            if config_formats.get('stable') is not None:
                self._cell_formats_stable = config_formats.get('stable')
            if config_formats.get('number') is not None:
                self._cell_formats_number = config_formats.get('number')

    def importer_for(self, filename: str):
        """Load the importer plugin for filename, either the configured module or
        the one registered for the file suffix, and return its singleton.
        """
        module_name = self._importer_module
        if module_name is None:
            suffix = os.path.splitext(filename)[1].lower()
            module_name = IMPORTERS_BY_SUFFIX.get(suffix)
        if module_name is None:
            return None
        plugin_module = importlib.import_module(module_name)
        return plugin_module.Importer.get_instance()

    @property
    def filename(self) -> str:
        """Configuration file in use.
        """
        return self._filename

    @property
    def guard_limit(self) -> int:
        """Maximum number of candidates an exhaustive search may visit.
        """
        return resolve_guard_limit(self._guard_limit)

    @property
    def cross_check(self) -> bool:
        """Evaluate the redundant criteria as well and fail loudly on disagreement.
        """
        return self._cross_check

    @property
    def ib_order(self) -> str:
        """Which side iterative balancing updates first.
        """
        return self._ib_order

    @property
    def oracle_prime(self) -> int:
        """Prime modulus of the numeric oracle.
        """
        return self._oracle_prime

    @property
    def oracle_trials(self) -> int:
        """Number of random trials of the numeric oracle.
        """
        return self._oracle_trials

    @property
    def oracle_seed(self) -> int:
        """Seed of the numeric oracle.
        """
        return self._oracle_seed

    @property
    def output_file(self) -> str:
        """Name of the excel file to store the census in.
        """
        return self._output_file

    @property
    def worksheet_name(self) -> str:
        """Name of worksheet in the workbook.
        """
        return self._worksheet_name

    @property
    def worksheet_tab_color(self) -> str:
        """Color of worksheet tab in the workbook.
        """
        return self._worksheet_tab_color

    @property
    def importer_module(self) -> str:
        """
        :return: An importer module name or None
        """
        return self._importer_module

    @property
    def cell_formats_heading(self) -> dict:
        """Overridden value of the heading format from config.
        """
        return self._cell_formats_heading

    @property
    def cell_formats_strongly_stable(self) -> dict:
        """Overridden value of the strongly stable row format from config.
        """
        return self._cell_formats_strongly_stable

    @property
    def cell_formats_stable(self) -> dict:
        """Overridden value of the stable row format from config.
        """
        return self._cell_formats_stable

    @property
    def cell_formats_number(self) -> dict:
        """Overridden value of the numeric cell format from config.
        """
        return self._cell_formats_number

    # All setter methods
    @output_file.setter
    def output_file(self, value: str):
        """Set the workbook the census is written to.
        """
        self._output_file = value

    @guard_limit.setter
    def guard_limit(self, value: int):
        """Set the search-space guard.
        """
        self._guard_limit = value
