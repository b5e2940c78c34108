#!/usr/bin/env python
# encoding: utf-8
"""
*The qmcode exception hierarchy, each error carrying a stable error code*

:Author:
    David Young

:Date Created:
    October 18, 2026
"""


class QmcodeError(Exception):
    """*base class of all qmcode errors*"""
    code = "E000"
    exitCode = 1

    def __init__(self, message):
        self.message = message
        super(QmcodeError, self).__init__(message)

    def __str__(self):
        return f"{self.code}: {self.message}"


class DomainError(QmcodeError, ValueError):
    """*an input is well-formed but violates a mathematical precondition*"""
    code = "E100"


class ElementError(DomainError):
    code = "E101"


class TableError(DomainError):
    """*a Cayley table failed validation*

    **Key Arguments:**
        - ``errors`` -- the list of violated axioms, each naming a witness
    """
    code = "E102"

    def __init__(self, errors):
        self.errors = list(errors)
        super(TableError, self).__init__("; ".join(self.errors))


class ConfigError(DomainError):
    code = "E103"


class WordSyntaxError(DomainError):
    code = "E201"


class SpecSyntaxError(DomainError):
    code = "E202"


class QmSpecError(DomainError):
    code = "E203"


class AutomorphismError(DomainError):
    code = "E301"


class WitnessError(DomainError):
    code = "E401"


class BoundError(DomainError):
    code = "E402"


class UsageError(QmcodeError):
    code = "E900"
    exitCode = 2
