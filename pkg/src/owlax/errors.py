"""Exception hierarchy shared across the toolkit."""

from __future__ import annotations


class OwlaxError(Exception):
    """Base class for all errors raised by this package."""


class DiagramFormatError(OwlaxError, ValueError):
    """Raised when diagram JSON is malformed (bad shape, unknown field, bad kind)."""


class UnknownClassError(OwlaxError, ValueError):
    """Raised when a reachability query names a label that is not a class in the diagram."""


class InvalidDiagramError(OwlaxError):
    """Raised when an operation requires a valid diagram but validation found errors."""

    def __init__(self, report):
        self.report = report
        findings = ", ".join(f.code for f in report.errors)
        super().__init__(f"diagram is invalid: {findings}")


class FunctionalParseError(OwlaxError, ValueError):
    """Syntax error in a functional-style ontology document."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class UnsupportedConstructError(OwlaxError, ValueError):
    """Valid OWL outside the supported fragment, on parse or render."""

    def __init__(self, construct: str, line: int | None = None):
        self.construct = construct
        self.line = line
        where = f" at line {line}" if line is not None else ""
        super().__init__(f"unsupported construct {construct}{where}")


class ReviewFormatError(OwlaxError, ValueError):
    """Raised when a review file does not match the documented JSON schema."""


class UnknownCandidateIdError(OwlaxError, ValueError):
    """Raised when a decision references candidate ids absent from the review list."""

    def __init__(self, ids):
        self.ids = tuple(ids)
        super().__init__(f"unknown candidate id(s): {', '.join(self.ids)}")
