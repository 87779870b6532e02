#!/usr/bin/env python3
"""
Copyright (C) 2025 The quotkit authors
All Rights Reserved You may use, distribute and modify this code under the
terms of the MIT license. See LICENSE file in the project root for full
license information.

Exceptions raised by the engine. The CLI maps them to exit codes.
"""


class QuotkitError(Exception):
    """Base class of every error raised on purpose by quotkit."""


class PreconditionError(QuotkitError, ValueError):
    """An operation was called outside of its documented domain, or input
    could not be parsed.
    """


class NotRealizableError(QuotkitError):
    """A triple was required to be realizable but is not. The failing
    condition is kept in `failure`.
    """

    def __init__(self, message: str, failure=None):
        super().__init__(message)
        self.failure = failure


class GuardExceededError(QuotkitError):
    """An exhaustive search would visit more candidates than allowed."""

    def __init__(self, what: str, count: int, limit: int):
        super().__init__(f'{what}: search space too large ({count} candidates > guard {limit}). '
                         'Raise guard_limit or QUOTKIT_GUARD_LIMIT to proceed.')
        self.count = count
        self.limit = limit


class CrossCheckError(QuotkitError):
    """Two criteria that must agree did not. Always a bug worth reporting."""


class ConnectivityError(QuotkitError):
    """The witness graph of a connectivity certificate came out disconnected.
    The partial certificate is attached as `certificate`.
    """

    def __init__(self, message: str, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class OracleError(QuotkitError):
    """The numeric oracle produced a profile that is not a splitting function,
    or every trial degenerated.
    """
